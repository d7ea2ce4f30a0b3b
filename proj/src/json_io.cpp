#include "jagpath/json_io.hpp"

#include <stdexcept>

namespace jagpath {

namespace {

std::vector<Count> trimmed(std::vector<Count> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

std::vector<int> int_array(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of integers");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw std::invalid_argument("expected a JSON array of integers");
        out.push_back(e.get<int>());
    }
    return out;
}

void to_json(json& j, const Partition& p) { j = p.parts(); }
void from_json(const json& j, Partition& p) { p = Partition(int_array(j)); }

void to_json(json& j, const FrobeniusSymbol& f) { j = json{{"s", f.s}, {"t", f.t}}; }
void from_json(const json& j, FrobeniusSymbol& f) {
    if (!j.is_object() || !j.contains("s") || !j.contains("t"))
        throw std::invalid_argument("a Frobenius symbol is {\"s\":[...],\"t\":[...]}");
    f = FrobeniusSymbol{int_array(j.at("s")), int_array(j.at("t"))};
    if (!f.valid()) throw std::invalid_argument("invalid Frobenius symbol");
}

void to_json(json& j, const JaggedPartition& p) { j = p.parts(); }
void from_json(const json& j, JaggedPartition& p) { p = JaggedPartition(int_array(j)); }

void to_json(json& j, const Overpartition& o) {
    json parts = json::array();
    for (const auto& part : o.parts()) parts.push_back({{"value", part.value}, {"overlined", part.overlined}});
    j = json{{"parts", parts}};
}

void from_json(const json& j, Overpartition& o) {
    if (!j.is_object() || !j.contains("parts") || !j.at("parts").is_array())
        throw std::invalid_argument("an overpartition is {\"parts\":[{\"value\":k,\"overlined\":b},...]}");
    std::vector<OverpartPart> parts;
    for (const auto& e : j.at("parts")) {
        if (!e.is_object() || !e.contains("value") || !e.at("value").is_number_integer())
            throw std::invalid_argument("overpartition part needs an integer value");
        parts.push_back({e.at("value").get<int>(), e.value("overlined", false)});
    }
    o = Overpartition(std::move(parts));
}

void to_json(json& j, const LatticePath& p) { j = json{{"start", p.start()}, {"steps", p.step_string()}}; }
void from_json(const json& j, LatticePath& p) {
    if (!j.is_object() || !j.contains("start") || !j.contains("steps") || !j.at("start").is_number_integer() ||
        !j.at("steps").is_string())
        throw std::invalid_argument("a path is {\"start\":a,\"steps\":\"NSH...\"}");
    p = LatticePath::parse(j.at("start").get<int>(), j.at("steps").get<std::string>());
}

void to_json(json& j, const Peak& p) { j = json{{"x", p.x}, {"y", p.y}, {"h", p.h}, {"o", p.o}}; }

void to_json(json& j, const BivariateSeries& s) { j = json{{"qmax", s.q_max()}, {"zmax", s.z_max()}, {"coeff", s.rows()}}; }
void to_json(json& j, const Series& s) {
    j = json{{"qmax", s.q_max()}, {"zmax", 0}, {"coeff", json::array({s.coefficients()})}};
}

void to_json(json& j, const TheoremReport& r) {
    json rows = json::array();
    for (const CountRow& row : r.rows) {
        json o{{"n", row.n}, {"J", trimmed(row.J)}, {"J_total", row.J_total}};
        if (static_cast<int>(r.which) & 1) o["P"] = trimmed(row.P);
        if (static_cast<int>(r.which) & 2) {
            o["E"] = trimmed(row.E);
            o["R"] = row.R;
            o["O"] = row.O;
        }
        rows.push_back(std::move(o));
    }
    j = json{{"K", r.params.K},
             {"i", r.params.i},
             {"nmax", r.n_max},
             {"theorems", r.which == Theorems::First ? "1" : r.which == Theorems::Second ? "2" : "1,2"},
             {"ok", r.ok()},
             {"checked", r.checked},
             {"failures", r.failures},
             {"first_failure", r.failures.empty() ? json(nullptr) : json(r.failures.front())},
             {"counts", rows}};
    if (r.alternative_reading_matches) j["alternative_overpartition_reading_matches"] = *r.alternative_reading_matches;
}

json word_to_json(const BurgeWord& w) { return to_string(w); }
BurgeWord word_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("a Burge word is a JSON string over \"a\" and \"b\"");
    return parse_word(j.get<std::string>());
}

}  // namespace jagpath
