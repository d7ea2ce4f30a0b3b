#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "jagpath/overpartition.hpp"
#include "jagpath/params.hpp"
#include "jagpath/partition.hpp"

namespace jagpath {

// Non-negative parts n_1..n_m with n_j >= n_{j+1} - 1, n_j >= n_{j+2} and a
// last part >= 1.
class JaggedPartition {
public:
    JaggedPartition() = default;
    // Throws std::invalid_argument unless is_jagged(parts).
    explicit JaggedPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    std::size_t length() const { return parts_.size(); }

    friend bool operator==(const JaggedPartition&, const JaggedPartition&) = default;
    friend auto operator<=>(const JaggedPartition& a, const JaggedPartition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

bool is_jagged(const std::vector<int>& seq);
// Throws std::invalid_argument for K <= 2.
bool is_K_restricted(const JaggedPartition& j, int K);
int zero_pair_count(const JaggedPartition& j);

// Depth-first, lexicographic. Throws std::invalid_argument for K <= 2.
void for_each_jagged(const RestrictionParams& params, int n,
                     const std::function<void(const JaggedPartition&)>& fn);
std::vector<JaggedPartition> enumerate_jagged(const RestrictionParams& params, int n,
                                              std::optional<int> m = std::nullopt);
// counts[m] = J_{K,i}(n, m).
std::vector<long long> jagged_counts_by_length(const RestrictionParams& params, int n);

Partition jagged_to_epartition(const JaggedPartition& j);
// Throws std::invalid_argument if an odd part has odd multiplicity.
JaggedPartition epartition_to_jagged(const Partition& p);
bool is_epartition(const Partition& p);

Overpartition jagged_to_overpartition(const JaggedPartition& j);

namespace experimental {

// n_j >= n_{j+1} - 1, n_j >= n_{j+2} - 1, n_j >= n_{j+3}, last part >= 1.
bool is_zero2_one_sequence(const std::vector<int>& seq);
// Triples every part and regroups triples greedily left to right. Throws
// std::invalid_argument on inputs failing is_zero2_one_sequence.
Partition p2_transform(const std::vector<int>& seq);
// For every j: f_{3j+1} and f_{3j+2} both vanish mod 3, or both are 1 mod 3.
bool satisfies_p2_frequency_conditions(const Partition& p);

}  // namespace experimental

}  // namespace jagpath
