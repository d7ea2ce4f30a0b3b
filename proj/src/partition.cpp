#include "jagpath/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jagpath {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

FrequencyTable::FrequencyTable(std::vector<int> f) : f_(std::move(f)) {
    if (f_.empty()) f_.push_back(0);
    if (f_[0] != 0) throw std::invalid_argument("frequency sentinel f_0 must be 0");
    for (int v : f_)
        if (v < 0) throw std::invalid_argument("negative frequency");
    trim();
}

int FrequencyTable::operator[](int j) const {
    if (j < 0 || j >= static_cast<int>(f_.size())) return 0;
    return f_[j];
}

void FrequencyTable::set(int j, int value) {
    if (j < 1) throw std::invalid_argument("frequency index must be >= 1");
    if (value < 0) throw std::invalid_argument("negative frequency");
    if (j >= static_cast<int>(f_.size())) f_.resize(j + 1, 0);
    f_[j] = value;
    trim();
}

void FrequencyTable::add(int j, int delta) { set(j, (*this)[j] + delta); }

int FrequencyTable::max_part() const { return static_cast<int>(f_.size()) - 1; }

int FrequencyTable::weight() const {
    int w = 0;
    for (int j = 1; j < static_cast<int>(f_.size()); ++j) w += j * f_[j];
    return w;
}

int FrequencyTable::length() const { return std::accumulate(f_.begin(), f_.end(), 0); }

Partition FrequencyTable::to_partition() const {
    std::vector<int> parts;
    for (int j = max_part(); j >= 1; --j) parts.insert(parts.end(), f_[j], j);
    return Partition(std::move(parts));
}

bool operator==(const FrequencyTable& a, const FrequencyTable& b) { return a.f_ == b.f_; }

void FrequencyTable::trim() {
    while (f_.size() > 1 && f_.back() == 0) f_.pop_back();
}

bool FrobeniusSymbol::valid() const {
    if (s.size() != t.size()) return false;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 0 || t[k] < 0) return false;
        if (k > 0 && (s[k] >= s[k - 1] || t[k] >= t[k - 1])) return false;
    }
    return true;
}

int FrobeniusSymbol::weight() const {
    int w = static_cast<int>(d());
    for (std::size_t k = 0; k < s.size(); ++k) w += s[k] + t[k];
    return w;
}

FrequencyTable frequencies(const Partition& p) {
    std::vector<int> f(p.empty() ? 1 : p[0] + 1, 0);
    for (int v : p.parts()) ++f[v];
    return FrequencyTable(std::move(f));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(p[0], 0);
    for (int v : p.parts())
        for (int c = 0; c < v; ++c) ++cols[c];
    return Partition(std::move(cols));
}

FrobeniusSymbol frobenius(const Partition& p) {
    Partition c = conjugate(p);
    FrobeniusSymbol f;
    for (std::size_t k = 0; k < p.length() && p[k] >= static_cast<int>(k) + 1; ++k) {
        f.s.push_back(p[k] - static_cast<int>(k) - 1);
        f.t.push_back(c[k] - static_cast<int>(k) - 1);
    }
    return f;
}

Partition from_frobenius(const FrobeniusSymbol& f) {
    if (!f.valid()) throw std::invalid_argument("invalid Frobenius symbol");
    const int d = static_cast<int>(f.d());
    if (d == 0) return {};
    // Rows 1..d come from s; rows below the diagonal square are read off the
    // column lengths t_k + k.
    std::vector<int> rows;
    for (int k = 0; k < d; ++k) rows.push_back(f.s[k] + k + 1);
    const int depth = f.t[0] + 1;
    for (int r = d + 1; r <= depth; ++r) {
        int len = 0;
        for (int k = 0; k < d; ++k)
            if (f.t[k] + k + 1 >= r) ++len;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

std::vector<int> successive_ranks(const Partition& p) {
    FrobeniusSymbol f = frobenius(p);
    std::vector<int> sr;
    for (std::size_t k = 0; k < f.d(); ++k) sr.push_back(f.s[k] - f.t[k]);
    return sr;
}

namespace {

void visit(int remaining, int cap, std::vector<int>& cur,
           const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(cur));
        return;
    }
    for (int v = std::min(remaining, cap); v >= 1; --v) {
        cur.push_back(v);
        visit(remaining - v, v, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) return;
    std::vector<int> cur;
    visit(n, n, cur, fn);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace jagpath
