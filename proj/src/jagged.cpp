#include "jagpath/jagged.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jagpath {

namespace {

void require_restricted_K(int K) {
    if (K <= 2) throw std::invalid_argument("K-restriction requires K > 2");
}

// Checks the window starting at s, which must be complete.
bool window_ok(const std::vector<int>& n, std::size_t s, int K) {
    const std::size_t e = s + K - 1;
    if (n[s] >= n[e] + 1) return true;
    return n[s] == n[s + 1] - 1 && n[s] == n[e - 1] + 1 && n[s] == n[e];
}

struct JaggedSearch {
    int K;
    int max_zeros;
    const std::function<void(const JaggedPartition&)>& fn;
    std::vector<int> cur;
    int zeros = 0;

    void run(int remaining) {
        if (remaining == 0) {
            if (cur.empty() || cur.back() >= 1) fn(JaggedPartition(cur));
            return;
        }
        const std::size_t t = cur.size();
        int hi = remaining;
        if (t >= 1) hi = std::min(hi, cur[t - 1] + 1);
        if (t >= 2) hi = std::min(hi, cur[t - 2]);
        int lo = 0;
        // A zero must be followed by a 1.
        if (t >= 1 && cur[t - 1] == 0) {
            if (hi < 1) return;
            lo = hi = 1;
        }
        for (int v = lo; v <= hi; ++v) {
            if (v == 0 && zeros >= max_zeros) continue;
            cur.push_back(v);
            if (t + 1 >= static_cast<std::size_t>(K) && !window_ok(cur, t + 1 - K, K)) {
                cur.pop_back();
                continue;
            }
            zeros += v == 0;
            run(remaining - v);
            zeros -= v == 0;
            cur.pop_back();
        }
    }
};

}  // namespace

JaggedPartition::JaggedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!is_jagged(parts_)) throw std::invalid_argument("sequence is not a jagged partition");
}

int JaggedPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool is_jagged(const std::vector<int>& n) {
    const std::size_t m = n.size();
    for (std::size_t j = 0; j < m; ++j) {
        if (n[j] < 0) return false;
        if (j + 1 < m && n[j] < n[j + 1] - 1) return false;
        if (j + 2 < m && n[j] < n[j + 2]) return false;
    }
    return m == 0 || n.back() >= 1;
}

bool is_K_restricted(const JaggedPartition& j, int K) {
    require_restricted_K(K);
    const auto& n = j.parts();
    if (n.size() < static_cast<std::size_t>(K)) return true;
    for (std::size_t s = 0; s + K - 1 < n.size(); ++s)
        if (!window_ok(n, s, K)) return false;
    return true;
}

int zero_pair_count(const JaggedPartition& j) {
    const auto& n = j.parts();
    int c = 0;
    for (std::size_t k = 0; k + 1 < n.size(); ++k) c += n[k] == 0 && n[k + 1] == 1;
    return c;
}

void for_each_jagged(const RestrictionParams& params, int n,
                     const std::function<void(const JaggedPartition&)>& fn) {
    require_restricted_K(params.K);
    if (n < 0) return;
    JaggedSearch search{params.K, params.i - 1, fn, {}, 0};
    search.run(n);
}

std::vector<JaggedPartition> enumerate_jagged(const RestrictionParams& params, int n,
                                              std::optional<int> m) {
    std::vector<JaggedPartition> out;
    for_each_jagged(params, n, [&](const JaggedPartition& j) {
        if (!m || static_cast<int>(j.length()) == *m) out.push_back(j);
    });
    return out;
}

std::vector<long long> jagged_counts_by_length(const RestrictionParams& params, int n) {
    std::vector<long long> counts(2 * std::max(n, 0) + 1, 0);
    for_each_jagged(params, n, [&](const JaggedPartition& j) { ++counts[j.length()]; });
    return counts;
}

Partition jagged_to_epartition(const JaggedPartition& j) {
    const auto& n = j.parts();
    std::vector<int> out;
    for (std::size_t k = 0; k < n.size(); ++k) {
        if (k + 1 < n.size() && n[k + 1] == n[k] + 1) {
            out.push_back(2 * n[k] + 1);
            out.push_back(2 * n[k] + 1);
            ++k;
        } else {
            out.push_back(2 * n[k]);
        }
    }
    return Partition(std::move(out));
}

bool is_epartition(const Partition& p) {
    FrequencyTable f = frequencies(p);
    for (int v = 1; v <= f.max_part(); v += 2)
        if (f[v] % 2 != 0) return false;
    return true;
}

JaggedPartition epartition_to_jagged(const Partition& p) {
    if (!is_epartition(p)) throw std::invalid_argument("an odd part has odd multiplicity");
    const auto& q = p.parts();
    std::vector<int> out;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k] % 2 == 1) {
            // Equal odd parts are adjacent and come in pairs.
            out.push_back((q[k] - 1) / 2);
            out.push_back((q[k] + 1) / 2);
            ++k;
        } else {
            out.push_back(q[k] / 2);
        }
    }
    return JaggedPartition(std::move(out));
}

Overpartition jagged_to_overpartition(const JaggedPartition& j) {
    const auto& n = j.parts();
    std::vector<OverpartPart> out;
    for (std::size_t k = 0; k < n.size(); ++k) {
        if (k + 1 < n.size() && n[k + 1] == n[k] + 1) {
            out.push_back({2 * n[k] + 1, false});
            ++k;
        } else if (k + 1 < n.size() && n[k + 1] == n[k]) {
            out.push_back({2 * n[k], false});
            ++k;
        } else {
            out.push_back({n[k], true});
        }
    }
    return Overpartition(std::move(out));
}

namespace experimental {

bool is_zero2_one_sequence(const std::vector<int>& n) {
    const std::size_t m = n.size();
    for (std::size_t j = 0; j < m; ++j) {
        if (n[j] < 0) return false;
        if (j + 1 < m && n[j] < n[j + 1] - 1) return false;
        if (j + 2 < m && n[j] < n[j + 2] - 1) return false;
        if (j + 3 < m && n[j] < n[j + 3]) return false;
    }
    return m == 0 || n.back() >= 1;
}

Partition p2_transform(const std::vector<int>& n) {
    if (!is_zero2_one_sequence(n)) throw std::invalid_argument("input is not a 0^2 1 sequence");
    std::vector<int> out;
    std::size_t k = 0;
    while (k < n.size()) {
        if (k + 2 < n.size()) {
            const int a = n[k], b = n[k + 1], c = n[k + 2];
            if (a == b && c == a + 1) {
                out.insert(out.end(), 3, 3 * a + 1);
                k += 3;
                continue;
            }
            if (b == a + 1 && c == a + 1) {
                out.insert(out.end(), 3, 3 * a + 2);
                k += 3;
                continue;
            }
            if (b == a - 1 && c == a) {
                out.insert(out.end(), {3 * a, 3 * a - 1, 3 * a - 2});
                k += 3;
                continue;
            }
        }
        out.push_back(3 * n[k]);
        ++k;
    }
    std::erase(out, 0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return Partition(std::move(out));
}

bool satisfies_p2_frequency_conditions(const Partition& p) {
    FrequencyTable f = frequencies(p);
    for (int j = 0; 3 * j + 1 <= f.max_part(); ++j) {
        const int a = f[3 * j + 1] % 3, b = f[3 * j + 2] % 3;
        if (!((a == 0 && b == 0) || (a == 1 && b == 1))) return false;
    }
    return true;
}

}  // namespace experimental

}  // namespace jagpath
