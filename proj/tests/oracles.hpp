#pragma once

// Brute-force reference implementations. They share no code with the library
// and favour obviousness over speed.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// All weak compositions of n with at most max_len entries.
inline void compositions(int n, int max_len, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    int sum = 0;
    for (int v : cur) sum += v;
    if (sum == n) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = 0; v <= n - sum; ++v) {
        cur.push_back(v);
        compositions(n, max_len, cur, out);
        cur.pop_back();
    }
}

inline bool jagged(const std::vector<int>& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (b == a + 1 && s[b] > s[a] + 1) return false;
            if (b == a + 2 && s[b] > s[a]) return false;
        }
    return s.empty() || s.back() > 0;
}

inline bool restricted(const std::vector<int>& s, int K) {
    const int m = static_cast<int>(s.size());
    for (int j = 0; j + K - 1 < m; ++j) {
        const bool drop = s[j] - s[j + K - 1] >= 1;
        const bool plateau = s[j + 1] == s[j] + 1 && s[j + K - 2] == s[j] - 1 && s[j + K - 1] == s[j];
        if (!drop && !plateau) return false;
    }
    return true;
}

inline int zero_one_pairs(const std::vector<int>& s) {
    int c = 0;
    for (std::size_t k = 1; k < s.size(); ++k)
        if (s[k - 1] == 0 && s[k] == 1) ++c;
    return c;
}

// Every jagged partition of weight n; a jagged partition of weight n has at
// most 2n parts.
inline std::vector<std::vector<int>> jagged_of_weight(int n) {
    std::vector<std::vector<int>> all, out;
    std::vector<int> cur;
    compositions(n, 2 * n, cur, all);
    for (auto& s : all)
        if (jagged(s)) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::vector<int>> jagged_class(int K, int i, int n) {
    std::vector<std::vector<int>> out;
    for (auto& s : jagged_of_weight(n))
        if (restricted(s, K) && zero_one_pairs(s) <= i - 1) out.push_back(s);
    return out;
}

// Number of partitions of n into parts no larger than k.
inline long long partition_count(int n, int k) {
    static std::map<std::pair<int, int>, long long> memo;
    if (n == 0) return 1;
    if (n < 0 || k == 0) return 0;
    auto key = std::make_pair(n, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const long long v = partition_count(n - k, k) + partition_count(n, k - 1);
    memo[key] = v;
    return v;
}

// Young diagram transpose via cell coordinates.
inline std::vector<int> transpose(const std::vector<int>& rows) {
    std::set<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < rows[r]; ++c) cells.insert({c, r});
    std::vector<int> out;
    for (auto [r, c] : cells) {
        if (r >= static_cast<int>(out.size())) out.resize(r + 1, 0);
        ++out[r];
    }
    return out;
}

struct PathFacts {
    int weight = 0;
    int charge = 0;
};

// Relative height straight from its definition: the largest h for which
// vertices at height y-h exist on both sides, with no taller peak in between,
// and no peak of equal height between the left vertex and the peak.
inline int relative_height_by_definition(const std::vector<int>& v, const std::vector<int>& peak_x, int x) {
    auto peak_height_at = [&](int k) {
        return std::find(peak_x.begin(), peak_x.end(), k) != peak_x.end() ? v[k] : -1;
    };
    const int y = v[x];
    for (int h = y; h >= 1; --h) {
        bool left = false, right = false;
        for (int a = x - 1; a >= 0 && !left; --a) {
            bool blocked = false;
            for (int k = a + 1; k < x; ++k)
                if (peak_height_at(k) >= y) blocked = true;
            if (blocked) break;
            left = v[a] == y - h;
        }
        for (int b = x + 1; b < static_cast<int>(v.size()) && !right; ++b) {
            bool blocked = false;
            for (int k = x + 1; k < b; ++k)
                if (peak_height_at(k) > y) blocked = true;
            if (blocked) break;
            right = v[b] == y - h;
        }
        if (left && right) return h;
    }
    return 0;
}

// Weight and charge of every admissible path from (0, a): words over N, S, H
// of bounded length that stay above the axis, keep H on the axis, end with a
// descent onto the axis, and have peaks at even x no higher than K-1.
inline std::map<std::pair<int, int>, long long> path_counts(int K, int a, int max_weight) {
    std::map<std::pair<int, int>, long long> out;
    const int max_len = max_weight + K + a;
    std::string w;
    auto consider = [&](const std::string& s) {
        std::vector<int> v{a};
        for (char c : s) {
            const int y = v.back() + (c == 'N' ? 1 : c == 'S' ? -1 : 0);
            if (y < 0 || (c == 'H' && v.back() != 0)) return;
            v.push_back(y);
        }
        if (v.back() != 0) return;
        if (!s.empty() && s.back() != 'S') return;
        if (s.empty() && a != 0) return;
        std::vector<int> px;
        for (std::size_t k = 1; k < s.size(); ++k)
            if (s[k - 1] == 'N' && s[k] == 'S') px.push_back(static_cast<int>(k));
        int weight = 0, charge = 0;
        for (int x : px) {
            if (x % 2 != 0 || v[x] > K - 1) return;
            weight += x;
            charge += relative_height_by_definition(v, px, x);
        }
        if (weight <= max_weight) ++out[{weight, charge}];
    };
    std::vector<std::string> frontier{""};
    for (int len = 0; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const auto& s : frontier) {
            consider(s);
            if (len == max_len) continue;
            for (char c : {'N', 'S', 'H'}) {
                // Prune prefixes that already left the grammar.
                int y = a;
                bool ok = true;
                for (char d : s + c) {
                    if (d == 'H' && y != 0) ok = false;
                    y += d == 'N' ? 1 : d == 'S' ? -1 : 0;
                    if (y < 0 || y > std::max(K - 1, a)) ok = false;
                }
                if (ok) next.push_back(s + c);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace oracle
