#pragma once

#include <json.hpp>

#include "jagpath/burge.hpp"
#include "jagpath/families.hpp"
#include "jagpath/jagged.hpp"
#include "jagpath/lattice_path.hpp"
#include "jagpath/partition.hpp"
#include "jagpath/series.hpp"

namespace jagpath {

using json = nlohmann::json;

// Decoders throw std::invalid_argument on malformed input.

void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);

void to_json(json& j, const FrobeniusSymbol& f);
void from_json(const json& j, FrobeniusSymbol& f);

void to_json(json& j, const JaggedPartition& p);
void from_json(const json& j, JaggedPartition& p);

void to_json(json& j, const Overpartition& o);
void from_json(const json& j, Overpartition& o);

void to_json(json& j, const LatticePath& p);
void from_json(const json& j, LatticePath& p);

void to_json(json& j, const Peak& p);

void to_json(json& j, const BivariateSeries& s);
void to_json(json& j, const Series& s);

void to_json(json& j, const TheoremReport& r);

json word_to_json(const BurgeWord& w);
BurgeWord word_from_json(const json& j);

// Integer array; throws on anything else.
std::vector<int> int_array(const json& j);

}  // namespace jagpath
