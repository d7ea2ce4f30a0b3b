#include <doctest.h>

#include <random>

#include "jagpath/jagged.hpp"
#include "jagpath/series.hpp"
#include "oracles.hpp"

using namespace jagpath;

namespace {

Series poly(int q_max, std::vector<Count> c) {
    Series s(q_max);
    for (std::size_t n = 0; n < c.size(); ++n) s.at(static_cast<int>(n)) = c[n];
    return s;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    const Series one = Series::one(6);
    const Series s = poly(6, {1, 2, 0, -3});
    CHECK(one * s == s);
    CHECK(poly(4, {1, 1}) * poly(4, {1, -1}) == poly(4, {1, 0, -1}));
    CHECK(s + poly(6, {0, 1}) == poly(6, {1, 3, 0, -3}));
    CHECK(reciprocal(poly(5, {1, -1})) == poly(5, {1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(poly(3, {1}) * poly(4, {1}), std::invalid_argument);
    CHECK_THROWS_AS(BivariateSeries(3, 2) + BivariateSeries(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(reciprocal(poly(3, {2})), std::invalid_argument);

    const BivariateSeries b = BivariateSeries::from_series(s, 2, 1);
    CHECK(BivariateSeries::one(6, 2) * b == b);
}

TEST_CASE("bivariate associativity on random series") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto random_series = [&] {
        BivariateSeries s(8, 4);
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; n <= 8; ++n) s.at(m, n) = coef(rng);
        return s;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(), b = random_series(), c = random_series();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("overflow is reported") {
    Series big(2);
    big.at(0) = 1;
    big.at(1) = Count{1} << 62;
    CHECK_THROWS_AS(big * big, OverflowError);
}

TEST_CASE("Pochhammer symbols") {
    CHECK(q_poch(1, 5) == poly(5, {1, -1}));
    CHECK(q_poch(2, 5) == poly(5, {1, -1, -1, 1}));
    CHECK(q2_poch(1, 5) == poly(5, {1, 0, -1}));
    CHECK(q_poch(0, 3) == Series::one(3));
    const Series p = inverse_q_poch(40, 40);
    for (int n = 0; n <= 40; ++n) CHECK(p[n] == oracle::partition_count(n, n));
    CHECK(reciprocal(q_poch(7, 20)) == inverse_q_poch(7, 20));

    // (-z q)_2 = 1 + z(q + q^2) + z^2 q^3
    const BivariateSeries f = neg_z_poch(1, 2, 6, 3);
    CHECK(f.coeff(0, 0) == 1);
    CHECK(f.coeff(1, 1) == 1);
    CHECK(f.coeff(1, 2) == 1);
    CHECK(f.coeff(2, 3) == 1);
    CHECK(f.at_z_one() == poly(6, {1, 1, 1, 1}));
}

TEST_CASE("Gaussian polynomials") {
    CHECK(q_binomial(5, 0) == Series::one(0));
    CHECK(q_binomial(2, 1) == poly(1, {1, 1}));
    CHECK(q_binomial(4, 2) == poly(4, {1, 1, 2, 1, 1}));
    CHECK(q_binomial(3, 5) == Series(0));
    CHECK(q_binomial(3, 5)[0] == 0);
    CHECK(q_binomial(3, -1)[0] == 0);
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            Count total = 0;
            const Series g = q_binomial(n, k);
            for (Count c : g.coefficients()) {
                REQUIRE(c >= 0);
                total += c;
            }
            Count binom = 1;
            for (int j = 1; j <= k; ++j) binom = binom * (n - k + j) / j;
            REQUIRE(total == binom);
        }
}

TEST_CASE("classical identities") {
    const IdentityCheck e = euler_check(30, 10);
    CHECK(e.ok);
    CHECK(e.first_mismatch.empty());
    CHECK(qbinomial_theorem_check(8, 40).ok);
}

TEST_CASE("jagged series counts jagged partitions") {
    for (int K = 3; K <= 5; ++K)
        for (int i = 1; i <= (K + 1) / 2; ++i) {
            const RestrictionParams params(K, i);
            const BivariateSeries s = jagged_series(params, 10, 20);
            CHECK(s.coeff(0, 0) == 1);
            for (int n = 0; n <= 10; ++n) {
                const auto c = jagged_counts_by_length(params, n);
                for (int m = 0; m <= 20; ++m) {
                    CAPTURE(K);
                    CAPTURE(i);
                    CAPTURE(n);
                    CAPTURE(m);
                    REQUIRE(s.coeff(m, n) == (m < static_cast<int>(c.size()) ? c[m] : 0));
                }
            }
        }
    const BivariateSeries j42 = jagged_series(RestrictionParams(4, 2), 10, 12);
    CHECK(j42.coeff(4, 10) == 21);
    CHECK(j42.coeff(7, 10) == 2);
    CHECK(jagged_series(RestrictionParams(3, 1), 4, 4).coeff(1, 1) == 1);
}

TEST_CASE("path series") {
    for (int K = 2; K <= 6; ++K)
        for (int i = 1; i <= (K + 1) / 2; ++i) {
            const RestrictionParams params(K, i);
            CHECK(path_series(params, 10, 6).coeff(0, 0) == 1);
            CHECK(path_series(params, 16, 40).at_z_one() == path_series_at_one(params, 16));
            if (K > 2) CHECK(compare(jagged_series(params, 16, 10), path_series(params, 16, 10), "J vs G").ok);
        }
    const BivariateSeries k2 = substitute_q_squared(path_series(RestrictionParams(2, 1), 15, 6), 30);
    CHECK(compare(k2, k2_closed_form(30, 6), "K=2").ok);
}

TEST_CASE("product forms") {
    for (int K = 2; K <= 6; ++K)
        for (int i = 1; i <= (K + 1) / 2; ++i) {
            const Series p = product_series(RestrictionParams(K, i), 24);
            CHECK(p[0] == 1);
            for (Count c : p.coefficients()) CHECK(c >= 0);
            CHECK(compare(path_series_at_one(RestrictionParams(K, i), 24), p, "product").ok);
        }
}

TEST_CASE("comparison reports the first mismatch") {
    Series a = Series::one(3), b = Series::one(3);
    b.at(2) = 5;
    const IdentityCheck r = compare(a, b, "demo");
    CHECK_FALSE(r.ok);
    CHECK(r.first_mismatch == "demo: coefficient of z^0 q^2 is 0 vs 5");
}
