#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jagpath/lattice_path.hpp"
#include "jagpath/partition.hpp"

namespace jagpath {

enum class Symbol : char { Alpha = 'a', Beta = 'b' };

using BurgeWord = std::vector<Symbol>;

// Text form over 'a' (alpha) and 'b' (beta).
std::string to_string(const BurgeWord& w);
BurgeWord parse_word(std::string_view text);

struct PairingState {
    FrequencyTable freq;
    // Lower index j of each pair (f_j, f_{j+1}), largest first.
    std::vector<int> pairs;
};

// Greedy disjoint pairing from the largest part downwards.
PairingState pairing(const FrequencyTable& freq);

BurgeWord burge_word(const Partition& p);
LatticePath word_to_path(const BurgeWord& w, int start);
BurgeWord path_to_word(const LatticePath& path);
// Throws std::invalid_argument when the word is not produced by burge_word
// (trailing alphas are accepted).
Partition burge_inverse(const BurgeWord& w);

struct PeakBlock {
    int x = 0;
    int h = 0;

    friend bool operator==(const PeakBlock&, const PeakBlock&) = default;
};

// Exchanges blocks j-1 and j (j >= 1). Throws std::invalid_argument when j is
// out of range or the new positions are not strictly increasing.
std::vector<PeakBlock> shuffle(const std::vector<PeakBlock>& peaks, std::size_t j);

// Partition built from the peaks (x_j; h_j) of a K-restricted path after
// shuffling blocks whose frequency intervals collide. Throws
// std::domain_error when the blocks do not settle into valid frequencies.
Partition peak_pair_map(const LatticePath& path, int K);

// Throws std::domain_error when the rows come out non-decreasing or negative.
FrobeniusSymbol path_to_frobenius(const LatticePath& path);

}  // namespace jagpath
