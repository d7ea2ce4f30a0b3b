#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jagpath/checked.hpp"
#include "jagpath/params.hpp"

namespace jagpath {

// Power series in q truncated after q^q_max. Coefficients are exact; any
// overflow throws OverflowError.
class Series {
public:
    explicit Series(int q_max = 0);
    static Series one(int q_max);
    static Series monomial(int q_max, int degree, Count c = 1);

    int q_max() const { return static_cast<int>(c_.size()) - 1; }
    Count operator[](int n) const { return n >= 0 && n <= q_max() ? c_[n] : 0; }
    Count& at(int n) { return c_.at(n); }
    const std::vector<Count>& coefficients() const { return c_; }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Count> c_;
};

// Multiplicative inverse; the constant term must be 1 or -1.
Series reciprocal(const Series& s);

// Power series in z and q, truncated after z^z_max and q^q_max.
class BivariateSeries {
public:
    BivariateSeries(int q_max = 0, int z_max = 0);
    static BivariateSeries one(int q_max, int z_max);
    // Embeds a series in q as the z^degree row.
    static BivariateSeries from_series(const Series& s, int z_max, int z_degree = 0);

    int q_max() const { return q_max_; }
    int z_max() const { return z_max_; }
    Count coeff(int m, int n) const;
    Count& at(int m, int n) { return c_.at(m).at(n); }
    const std::vector<std::vector<Count>>& rows() const { return c_; }
    // Substitutes z = 1.
    Series at_z_one() const;

    BivariateSeries& operator+=(const BivariateSeries& o);
    friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

private:
    int q_max_;
    int z_max_;
    std::vector<std::vector<Count>> c_;  // c_[m][n]: coefficient of z^m q^n
};

BivariateSeries series_add(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b);

// (q;q)_n
Series q_poch(int n, int q_max);
// (q^2;q^2)_n
Series q2_poch(int n, int q_max);
// 1/(q;q)_n, computed directly as a product of geometric series.
Series inverse_q_poch(int n, int q_max);
// (-z q^shift; q)_n, or the infinite product when n is empty. With shift = 0
// and n empty this is (-z)_inf.
BivariateSeries neg_z_poch(int shift, std::optional<int> n, int q_max, int z_max);

// Gaussian polynomial [n choose k]_q; the zero polynomial when k is out of range.
Series q_binomial(int n, int k);

// The multiple sum for jagged partitions: the coefficient of z^m q^n counts
// K-restricted jagged partitions of weight n and length m.
BivariateSeries jagged_series(const RestrictionParams& params, int q_max, int z_max);
// The multiple sum over peak multiplicities m_1..m_{K-1}.
BivariateSeries path_series(const RestrictionParams& params, int q_max, int z_max);
// path_series at z = 1 without a z truncation.
Series path_series_at_one(const RestrictionParams& params, int q_max);
// Sum over m of q^{m(m+1)} z^m / (q^2;q^2)_m.
BivariateSeries k2_closed_form(int q_max, int z_max);
// Replaces q by q^2.
BivariateSeries substitute_q_squared(const BivariateSeries& s, int q_max);

// Product form of path_series_at_one. Throws std::invalid_argument when
// neither 2i < K+1 nor (epsilon = 1 and i = kappa).
Series product_series(const RestrictionParams& params, int q_max);

struct IdentityCheck {
    bool ok = true;
    long long checked = 0;  // coefficients compared
    std::string first_mismatch;  // empty when ok
};

// Sum_n q^{n(n-1)/2} x^n/(q)_n against (-x)_inf.
IdentityCheck euler_check(int q_max, int x_max);
// Sum_k q^{k(k+1)/2} x^k [m choose k]_q against (-xq)_m for every m <= m_max.
IdentityCheck qbinomial_theorem_check(int m_max, int q_max);
// Coefficientwise comparison below both truncation orders.
IdentityCheck compare(const BivariateSeries& a, const BivariateSeries& b, const std::string& label);
IdentityCheck compare(const Series& a, const Series& b, const std::string& label);

}  // namespace jagpath
