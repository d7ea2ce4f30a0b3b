#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jagpath/checked.hpp"
#include "jagpath/overpartition.hpp"
#include "jagpath/params.hpp"
#include "jagpath/partition.hpp"

namespace jagpath {

// Odd parts of even multiplicity, p_j >= p_{j+K-1} + 2, at most 2i-2 ones.
bool in_E_class_by_difference(const Partition& p, const RestrictionParams& params);
// f_{2j-1} even, f_j + f_{j+1} <= K-1, f_1 <= 2i-2.
bool in_E_class_by_frequency(const Partition& p, const RestrictionParams& params);
// All successive ranks odd and within [3-2i, 2K-1-2i].
bool in_R_class(const Partition& p, const RestrictionParams& params);

enum class OverpartitionReading {
    AllParts,         // the congruence exclusion for epsilon = 1, i = kappa covers every part
    NonOverlinedOnly  // alternative: only non-overlined parts are restricted
};

bool has_product_form(const RestrictionParams& params);
bool in_O_class(const Overpartition& o, const RestrictionParams& params,
                OverpartitionReading reading = OverpartitionReading::AllParts);

// Throws std::logic_error if the two characterizations ever disagree.
Count count_E(const RestrictionParams& params, int n2, std::optional<int> m = std::nullopt);
// counts[m] for m = 0..n2.
std::vector<Count> count_E_by_length(const RestrictionParams& params, int n2);
Count count_R(const RestrictionParams& params, int n2);
// Throws std::invalid_argument when has_product_form(params) is false.
Count count_O(const RestrictionParams& params, int n,
              OverpartitionReading reading = OverpartitionReading::AllParts);
std::vector<Overpartition> enumerate_O(const RestrictionParams& params, int n,
                                       OverpartitionReading reading = OverpartitionReading::AllParts);

enum class Theorems { First = 1, Second = 2, Both = 3 };

struct CountRow {
    int n = 0;
    std::vector<Count> J;  // by length m
    std::vector<Count> P;  // by charge m, weight 2n
    std::vector<Count> E;  // by length m, weight 2n
    Count J_total = 0;
    Count R = 0;
    Count O = 0;
    Count O_alternative = 0;
};

struct TheoremReport {
    RestrictionParams params;
    int n_max = 0;
    Theorems which = Theorems::Both;
    std::vector<CountRow> rows;
    long long checked = 0;
    std::vector<std::string> failures;
    // Only set for epsilon = 1, i = kappa under the second theorem.
    std::optional<bool> alternative_reading_matches;

    bool ok() const { return failures.empty(); }
};

// Fans out over n with `threads` workers; the report is independent of it.
TheoremReport verify_theorems(const RestrictionParams& params, int n_max,
                              Theorems which = Theorems::Both, int threads = 1);

}  // namespace jagpath
