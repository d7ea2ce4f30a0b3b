#include "jagpath/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace jagpath {

Series::Series(int q_max) : c_(std::max(q_max, 0) + 1, 0) {
    if (q_max < 0) throw std::invalid_argument("negative truncation order");
}

Series Series::one(int q_max) { return monomial(q_max, 0); }

Series Series::monomial(int q_max, int degree, Count c) {
    Series s(q_max);
    if (degree >= 0 && degree <= q_max) s.c_[degree] = c;
    return s;
}

Series& Series::operator+=(const Series& o) {
    if (o.q_max() != q_max()) throw std::invalid_argument("series truncation orders differ");
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] = checked_add(c_[n], o.c_[n]);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (o.q_max() != q_max()) throw std::invalid_argument("series truncation orders differ");
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] = checked_sub(c_[n], o.c_[n]);
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    if (a.q_max() != b.q_max()) throw std::invalid_argument("series truncation orders differ");
    const int Q = a.q_max();
    Series r(Q);
    for (int i = 0; i <= Q; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j <= Q; ++j)
            if (b.c_[j] != 0) r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
    return r;
}

Series reciprocal(const Series& s) {
    const Count c0 = s[0];
    if (c0 != 1 && c0 != -1) throw std::invalid_argument("reciprocal needs constant term 1 or -1");
    const int Q = s.q_max();
    Series r(Q);
    r.at(0) = c0;
    for (int n = 1; n <= Q; ++n) {
        Count acc = 0;
        for (int k = 1; k <= n; ++k) acc = checked_add(acc, checked_mul(s[k], r[n - k]));
        r.at(n) = checked_mul(-c0, acc);
    }
    return r;
}

BivariateSeries::BivariateSeries(int q_max, int z_max)
    : q_max_(q_max), z_max_(z_max), c_(std::max(z_max, 0) + 1, std::vector<Count>(std::max(q_max, 0) + 1, 0)) {
    if (q_max < 0 || z_max < 0) throw std::invalid_argument("negative truncation order");
}

BivariateSeries BivariateSeries::one(int q_max, int z_max) {
    BivariateSeries s(q_max, z_max);
    s.c_[0][0] = 1;
    return s;
}

BivariateSeries BivariateSeries::from_series(const Series& s, int z_max, int z_degree) {
    BivariateSeries b(s.q_max(), z_max);
    if (z_degree >= 0 && z_degree <= z_max) b.c_[z_degree] = s.coefficients();
    return b;
}

Count BivariateSeries::coeff(int m, int n) const {
    if (m < 0 || m > z_max_ || n < 0 || n > q_max_) return 0;
    return c_[m][n];
}

Series BivariateSeries::at_z_one() const {
    Series s(q_max_);
    for (const auto& row : c_)
        for (int n = 0; n <= q_max_; ++n) s.at(n) = checked_add(s[n], row[n]);
    return s;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
    if (o.q_max_ != q_max_ || o.z_max_ != z_max_) throw std::invalid_argument("series truncation orders differ");
    for (int m = 0; m <= z_max_; ++m)
        for (int n = 0; n <= q_max_; ++n) c_[m][n] = checked_add(c_[m][n], o.c_[m][n]);
    return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    if (a.q_max_ != b.q_max_ || a.z_max_ != b.z_max_)
        throw std::invalid_argument("series truncation orders differ");
    BivariateSeries r(a.q_max_, a.z_max_);
    for (int m1 = 0; m1 <= a.z_max_; ++m1)
        for (int n1 = 0; n1 <= a.q_max_; ++n1) {
            const Count x = a.c_[m1][n1];
            if (x == 0) continue;
            for (int m2 = 0; m1 + m2 <= a.z_max_; ++m2)
                for (int n2 = 0; n1 + n2 <= a.q_max_; ++n2) {
                    const Count y = b.c_[m2][n2];
                    if (y != 0) r.c_[m1 + m2][n1 + n2] = checked_add(r.c_[m1 + m2][n1 + n2], checked_mul(x, y));
                }
        }
    return r;
}

BivariateSeries series_add(const BivariateSeries& a, const BivariateSeries& b) { return a + b; }
BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b) { return a * b; }

namespace {

// s *= (1 + c q^d)
void mul_binomial(Series& s, int d, Count c) {
    for (int n = s.q_max(); n >= d; --n) s.at(n) = checked_add(s[n], checked_mul(c, s[n - d]));
}

// s /= (1 - q^d)
void div_one_minus(Series& s, int d) {
    for (int n = d; n <= s.q_max(); ++n) s.at(n) = checked_add(s[n], s[n - d]);
}

// Table of 1/(q)_m for m = 0..q_max; larger m agree with m = q_max below q^{q_max+1}.
std::vector<Series> inverse_poch_table(int q_max) {
    std::vector<Series> t{Series::one(q_max)};
    for (int m = 1; m <= q_max; ++m) {
        Series s = t.back();
        div_one_minus(s, m);
        t.push_back(std::move(s));
    }
    return t;
}

const Series& inv_at(const std::vector<Series>& table, int m) {
    return table[std::min<std::size_t>(m, table.size() - 1)];
}

// Depth-first walk over mode vectors. A coordinate is increased until the
// bound fails with all later coordinates zero; the bound must be monotone.
template <class Bound, class Leaf>
void walk_modes(std::vector<int>& m, std::size_t level, const Bound& within, const Leaf& leaf) {
    if (level == m.size()) {
        leaf(m);
        return;
    }
    for (m[level] = 0; within(m); ++m[level]) walk_modes(m, level + 1, within, leaf);
    m[level] = 0;
}

// q^e * prod 1/(q)_{m_j}, truncated.
Series mode_term(const std::vector<int>& m, int e, const std::vector<Series>& inv, int q_max) {
    Series t = Series::monomial(q_max, e);
    for (int mj : m)
        if (mj > 0) t = t * inv_at(inv, mj);
    return t;
}

struct PathModes {
    int exponent;
    int z_degree;
};

PathModes path_modes(const RestrictionParams& p, const std::vector<int>& m) {
    const int K = p.K;
    long long sq = 0, mt = 0, lt = 0, nt = 0, tail = 0;
    for (int j = K - 1; j >= 1; --j) {
        const int mj = m[j - 1];
        tail += mj;
        sq += tail * tail;
        if (j % 2 == 1 && j <= K - 1 - p.epsilon()) mt += mj;
        if (j >= 2 * p.i) lt += static_cast<long long>((j - 2 * p.i) / 2 + 1) * mj;
        nt += static_cast<long long>(j) * mj;
    }
    if ((sq + mt) % 2 != 0) throw std::logic_error("odd quadratic form in path series exponent");
    return {static_cast<int>((sq + mt) / 2 + lt), static_cast<int>(nt)};
}

struct JaggedModes {
    int exponent;
    int N;
};

JaggedModes jagged_modes(const RestrictionParams& p, const std::vector<int>& m) {
    const int kappa = p.kappa();
    // N_j = m_j + ... + m_{kappa-1}; L_j = N_j + ... + N_{kappa-1}.
    std::vector<long long> N(kappa + 1, 0), L(kappa + 1, 0);
    for (int j = kappa - 1; j >= 1; --j) N[j] = N[j + 1] + m[j - 1];
    for (int j = kappa - 1; j >= 1; --j) L[j] = L[j + 1] + N[j];
    long long sq = 0;
    for (int j = 1; j < kappa; ++j) sq += N[j] * N[j];
    return {static_cast<int>(sq + L[p.i]), static_cast<int>(L[1])};
}

}  // namespace

Series q_poch(int n, int q_max) {
    Series s = Series::one(q_max);
    for (int k = 1; k <= n && k <= q_max; ++k) mul_binomial(s, k, -1);
    return s;
}

Series q2_poch(int n, int q_max) {
    Series s = Series::one(q_max);
    for (int k = 1; k <= n && 2 * k <= q_max; ++k) mul_binomial(s, 2 * k, -1);
    return s;
}

Series inverse_q_poch(int n, int q_max) {
    Series s = Series::one(q_max);
    for (int k = 1; k <= n && k <= q_max; ++k) div_one_minus(s, k);
    return s;
}

BivariateSeries neg_z_poch(int shift, std::optional<int> n, int q_max, int z_max) {
    if (shift < 0) throw std::invalid_argument("negative shift");
    BivariateSeries s = BivariateSeries::one(q_max, z_max);
    const int factors = n ? *n : std::max(0, q_max - shift + 1);
    for (int k = 0; k < factors; ++k) {
        const int d = shift + k;
        if (d > q_max) break;
        for (int m = z_max; m >= 1; --m)
            for (int e = q_max; e >= d; --e) s.at(m, e) = checked_add(s.coeff(m, e), s.coeff(m - 1, e - d));
    }
    return s;
}

Series q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return Series(0);
    // row[j] holds [r choose j] as an exact polynomial.
    std::vector<std::vector<Count>> row{{1}};
    for (int r = 1; r <= n; ++r) {
        std::vector<std::vector<Count>> next(r + 1);
        for (int j = 0; j <= r; ++j) {
            std::vector<Count> poly(j * (r - j) + 1, 0);
            if (j >= 1)
                for (std::size_t e = 0; e < row[j - 1].size(); ++e) poly[e] = checked_add(poly[e], row[j - 1][e]);
            if (j <= r - 1)
                for (std::size_t e = 0; e < row[j].size(); ++e) poly[e + j] = checked_add(poly[e + j], row[j][e]);
            next[j] = std::move(poly);
        }
        row = std::move(next);
    }
    Series s(k * (n - k));
    for (std::size_t e = 0; e < row[k].size(); ++e) s.at(static_cast<int>(e)) = row[k][e];
    return s;
}

BivariateSeries jagged_series(const RestrictionParams& p, int q_max, int z_max) {
    if (p.K <= 2) throw std::invalid_argument("jagged series requires K > 2");
    const auto inv = inverse_poch_table(q_max);
    std::map<int, BivariateSeries> tails;
    BivariateSeries total(q_max, z_max);
    std::vector<int> m(p.kappa() - 1, 0);
    auto within = [&](const std::vector<int>& v) {
        const JaggedModes jm = jagged_modes(p, v);
        return jm.exponent <= q_max && 2 * jm.N <= z_max;
    };
    walk_modes(m, 0, within, [&](const std::vector<int>& v) {
        const JaggedModes jm = jagged_modes(p, v);
        const Series head = mode_term(v, jm.exponent, inv, q_max);
        const int shift = 1 + p.epsilon() * (v.empty() ? 0 : v.back());
        auto it = tails.find(shift);
        if (it == tails.end()) it = tails.emplace(shift, neg_z_poch(shift, std::nullopt, q_max, z_max)).first;
        const BivariateSeries& tail = it->second;
        // head sits on the single row z^{2N}.
        const int base = 2 * jm.N;
        for (int r = 0; base + r <= z_max; ++r)
            for (int a = 0; a <= q_max; ++a) {
                if (head[a] == 0) continue;
                for (int b = 0; a + b <= q_max; ++b) {
                    const Count t = tail.coeff(r, b);
                    if (t != 0) total.at(base + r, a + b) = checked_add(total.coeff(base + r, a + b), checked_mul(head[a], t));
                }
            }
    });
    return total;
}

BivariateSeries path_series(const RestrictionParams& p, int q_max, int z_max) {
    const auto inv = inverse_poch_table(q_max);
    BivariateSeries total(q_max, z_max);
    std::vector<int> m(p.K - 1, 0);
    auto within = [&](const std::vector<int>& v) {
        const PathModes pm = path_modes(p, v);
        return pm.exponent <= q_max && pm.z_degree <= z_max;
    };
    walk_modes(m, 0, within, [&](const std::vector<int>& v) {
        const PathModes pm = path_modes(p, v);
        const Series t = mode_term(v, pm.exponent, inv, q_max);
        for (int n = 0; n <= q_max; ++n) total.at(pm.z_degree, n) = checked_add(total.coeff(pm.z_degree, n), t[n]);
    });
    return total;
}

Series path_series_at_one(const RestrictionParams& p, int q_max) {
    const auto inv = inverse_poch_table(q_max);
    Series total(q_max);
    std::vector<int> m(p.K - 1, 0);
    auto within = [&](const std::vector<int>& v) { return path_modes(p, v).exponent <= q_max; };
    walk_modes(m, 0, within, [&](const std::vector<int>& v) {
        total += mode_term(v, path_modes(p, v).exponent, inv, q_max);
    });
    return total;
}

BivariateSeries k2_closed_form(int q_max, int z_max) {
    BivariateSeries s(q_max, z_max);
    for (int m = 0; m <= z_max && m * (m + 1) <= q_max; ++m) {
        const Series t = Series::monomial(q_max, m * (m + 1)) * reciprocal(q2_poch(m, q_max));
        for (int n = 0; n <= q_max; ++n) s.at(m, n) = t[n];
    }
    return s;
}

BivariateSeries substitute_q_squared(const BivariateSeries& s, int q_max) {
    BivariateSeries r(q_max, s.z_max());
    for (int m = 0; m <= s.z_max(); ++m)
        for (int n = 0; 2 * n <= q_max && n <= s.q_max(); ++n) r.at(m, 2 * n) = s.coeff(m, n);
    return r;
}

Series product_series(const RestrictionParams& p, int q_max) {
    Series s = Series::one(q_max);
    const int K = p.K, i = p.i, kappa = p.kappa();
    if (2 * i < K + 1) {
        for (int n = 1; n <= q_max; ++n) {
            mul_binomial(s, n, 1);
            const int r = n % (K + 1);
            if (r != 0 && r != i && r != K + 1 - i) div_one_minus(s, n);
        }
    } else if (p.epsilon() == 1 && i == kappa) {
        for (int n = 1; n <= q_max; ++n) {
            if (n % kappa == 0) continue;
            mul_binomial(s, n, 1);
            div_one_minus(s, n);
        }
    } else {
        throw std::invalid_argument("no product form for these parameters");
    }
    return s;
}

IdentityCheck compare(const BivariateSeries& a, const BivariateSeries& b, const std::string& label) {
    IdentityCheck r;
    const int Z = std::min(a.z_max(), b.z_max()), Q = std::min(a.q_max(), b.q_max());
    for (int m = 0; m <= Z; ++m)
        for (int n = 0; n <= Q; ++n) {
            ++r.checked;
            if (r.ok && a.coeff(m, n) != b.coeff(m, n)) {
                r.ok = false;
                std::ostringstream msg;
                msg << label << ": coefficient of z^" << m << " q^" << n << " is " << a.coeff(m, n) << " vs "
                    << b.coeff(m, n);
                r.first_mismatch = msg.str();
            }
        }
    return r;
}

IdentityCheck compare(const Series& a, const Series& b, const std::string& label) {
    return compare(BivariateSeries::from_series(a, 0), BivariateSeries::from_series(b, 0), label);
}

IdentityCheck euler_check(int q_max, int x_max) {
    BivariateSeries lhs(q_max, x_max);
    Series inv = Series::one(q_max);
    for (int n = 0; n <= x_max; ++n) {
        if (n > 0) div_one_minus(inv, n);
        const int e = n * (n - 1) / 2;
        for (int k = 0; k + e <= q_max; ++k) lhs.at(n, k + e) = inv[k];
    }
    return compare(lhs, neg_z_poch(0, std::nullopt, q_max, x_max), "Euler relation");
}

IdentityCheck qbinomial_theorem_check(int m_max, int q_max) {
    IdentityCheck total;
    for (int m = 0; m <= m_max; ++m) {
        BivariateSeries lhs(q_max, m);
        for (int k = 0; k <= m; ++k) {
            const Series g = q_binomial(m, k);
            const int e = k * (k + 1) / 2;
            for (int d = 0; d <= g.q_max() && d + e <= q_max; ++d) lhs.at(k, d + e) = g[d];
        }
        IdentityCheck r = compare(lhs, neg_z_poch(1, m, q_max, m), "q-binomial theorem, m=" + std::to_string(m));
        total.checked += r.checked;
        if (total.ok && !r.ok) {
            total.ok = false;
            total.first_mismatch = r.first_mismatch;
        }
    }
    return total;
}

}  // namespace jagpath
