#include "jagpath/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>

#include "jagpath/json_io.hpp"

namespace jagpath {

namespace {

// Signals bad user input after parsing succeeded.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family, kind, theorem, op, input, out_path, format = "ascii";
    int K = 3, i = 1, n = 0, qmax = 20, zmax = 12, nmax = 12, start = 0;
    std::optional<int> m, i_opt;
    bool table = false, pretty = false, experimental = false;
};

int env_threads() {
    const char* v = std::getenv("JAGPATH_THREADS");
    if (!v) return 1;
    try {
        return std::max(1, std::stoi(v));
    } catch (const std::exception&) {
        return 1;
    }
}

std::vector<int> i_values(const Options& o) {
    if (o.i_opt) return {*o.i_opt};
    std::vector<int> all;
    for (int i = 1; i <= (o.K + 1) / 2; ++i) all.push_back(i);
    return all;
}

class Printer {
public:
    Printer(std::ostream& out, bool pretty) : out_(out), pretty_(pretty) {}
    void operator()(const json& j) const { out_ << (pretty_ ? j.dump(2) : j.dump()) << '\n'; }

private:
    std::ostream& out_;
    bool pretty_;
};

json parse_input(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("--in is not valid JSON: ") + e.what());
    }
}

std::vector<Count> by_length(const Options& o) {
    const RestrictionParams p(o.K, o.i);
    if (o.family == "J") {
        auto v = jagged_counts_by_length(p, o.n);
        return {v.begin(), v.end()};
    }
    if (o.family == "P") return enumerate_paths(p, 2 * o.n).at(2 * o.n);
    return count_E_by_length(p, 2 * o.n);
}

int cmd_count(const Options& o, const Printer& print, std::ostream& out) {
    const RestrictionParams p(o.K, o.i);
    if (o.family == "R" || o.family == "O") {
        if (o.m || o.table) throw UsageError("families R and O are not graded by length");
        out << (o.family == "R" ? count_R(p, 2 * o.n) : count_O(p, o.n)) << '\n';
        return kExitOk;
    }
    const std::vector<Count> counts = by_length(o);
    if (o.table) {
        for (std::size_t m = 0; m < counts.size(); ++m)
            if (counts[m] != 0) print(json{{"m", m}, {"count", counts[m]}});
        return kExitOk;
    }
    Count total = 0;
    if (o.m) {
        total = *o.m >= 0 && *o.m < static_cast<int>(counts.size()) ? counts[*o.m] : 0;
    } else {
        for (Count c : counts) total = checked_add(total, c);
    }
    out << total << '\n';
    return kExitOk;
}

int cmd_series(const Options& o, const Printer& print) {
    if (o.kind == "euler" || o.kind == "qbinomial") throw UsageError("use verify for identity checks");
    if (o.kind == "K2") {
        print(json(k2_closed_form(o.qmax, o.zmax)));
        return kExitOk;
    }
    const RestrictionParams p(o.K, o.i);
    if (o.kind == "J") print(json(jagged_series(p, o.qmax, o.zmax)));
    else if (o.kind == "G") print(json(path_series(p, o.qmax, o.zmax)));
    else if (o.kind == "G1") print(json(path_series_at_one(p, o.qmax)));
    else print(json(product_series(p, o.qmax)));
    return kExitOk;
}

json check_json(const std::string& name, const Options& o, bool with_params, const IdentityCheck& c) {
    json j{{"check", name}};
    if (with_params) {
        j["K"] = o.K;
        j["i"] = o.i;
    }
    j["ok"] = c.ok;
    j["checked"] = c.checked;
    j["first_mismatch"] = c.ok ? json(nullptr) : json(c.first_mismatch);
    return j;
}

int cmd_verify(const Options& o, const Printer& print) {
    bool ok = true;
    if (o.theorem == "euler" || o.theorem == "qbinomial") {
        const IdentityCheck c =
            o.theorem == "euler" ? euler_check(o.qmax, o.zmax) : qbinomial_theorem_check(o.zmax, o.qmax);
        print(check_json(o.theorem, o, false, c));
        return c.ok ? kExitOk : kExitMismatch;
    }
    for (int i : i_values(o)) {
        Options oi = o;
        oi.i = i;
        const RestrictionParams p(o.K, i);
        if (o.theorem == "1" || o.theorem == "2" || o.theorem == "all") {
            const Theorems which = o.theorem == "1" ? Theorems::First : o.theorem == "2" ? Theorems::Second : Theorems::Both;
            const TheoremReport r = verify_theorems(p, o.nmax, which, env_threads());
            print(json(r));
            ok = ok && r.ok();
            continue;
        }
        IdentityCheck c;
        if (o.theorem == "sums") {
            c = compare(jagged_series(p, o.qmax, o.zmax), path_series(p, o.qmax, o.zmax), "J vs G");
        } else if (o.theorem == "paths") {
            const int w = o.qmax - o.qmax % 2;
            const CountTable t = enumerate_paths(p, w);
            BivariateSeries counts(w, o.zmax);
            for (int n = 0; n <= w; ++n)
                for (int m = 0; m <= o.zmax && m < static_cast<int>(t[n].size()); ++m) counts.at(m, n) = t[n][m];
            c = compare(substitute_q_squared(path_series(p, w / 2, o.zmax), w), counts, "G(z;q^2) vs paths");
        } else {
            c = compare(path_series_at_one(p, o.qmax), product_series(p, o.qmax), "G(1;q) vs product");
        }
        print(check_json(o.theorem, oi, true, c));
        ok = ok && c.ok;
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_map(const Options& o, const Printer& print) {
    const json in = parse_input(o.input);
    const std::string& op = o.op;
    if (op == "jagged-to-e") print(json(jagged_to_epartition(in.get<JaggedPartition>())));
    else if (op == "e-to-jagged") print(json(epartition_to_jagged(in.get<Partition>())));
    else if (op == "jagged-to-over") print(json(jagged_to_overpartition(in.get<JaggedPartition>())));
    else if (op == "burge-word") print(word_to_json(burge_word(in.get<Partition>())));
    else if (op == "word-to-path") print(json(word_to_path(word_from_json(in), o.start)));
    else if (op == "path-to-word") print(word_to_json(path_to_word(in.get<LatticePath>())));
    else if (op == "burge-inverse") print(json(burge_inverse(word_from_json(in))));
    else if (op == "peak-pair") print(json(peak_pair_map(in.get<LatticePath>(), o.K)));
    else if (op == "frobenius") {
        // A path maps through its peaks; a partition through its diagram.
        if (in.is_object()) print(json(path_to_frobenius(in.get<LatticePath>())));
        else print(json(frobenius(in.get<Partition>())));
    } else if (op == "conjugate") print(json(conjugate(in.get<Partition>())));
    else if (op == "peaks") {
        const LatticePath path = in.get<LatticePath>();
        print(json{{"peaks", peaks(path)}, {"weight", weight(path)}, {"charge", charge(path)}, {"valid", validate(path, o.K)}});
    } else if (op == "p2") {
        if (!o.experimental) throw UsageError("the p2 transform requires --experimental");
        const Partition p = experimental::p2_transform(int_array(in));
        print(json{{"partition", p}, {"frequency_conditions", experimental::satisfies_p2_frequency_conditions(p)}});
    }
    return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out) {
    const LatticePath path = parse_input(o.input).get<LatticePath>();
    if (o.out_path.empty()) {
        out << render_ascii(path);
        return kExitOk;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + o.out_path + " for writing");
    file << render_svg(path);
    return kExitOk;
}

int cmd_enumerate(const Options& o, const Printer& print) {
    const RestrictionParams p(o.K, o.i);
    auto keep = [&](std::size_t len) { return !o.m || static_cast<int>(len) == *o.m; };
    if (o.family == "jagged") {
        for_each_jagged(p, o.n, [&](const JaggedPartition& j) {
            if (keep(j.length())) print(json(j));
        });
    } else if (o.family == "E") {
        for_each_partition(2 * o.n, [&](const Partition& q) {
            if (keep(q.length()) && in_E_class_by_frequency(q, p)) print(json(q));
        });
    } else if (o.family == "paths") {
        for_each_path(p.K, p.start_height(), 2 * o.n, [&](const LatticePath& path) {
            if (weight(path) == 2 * o.n && keep(charge(path))) print(json(path));
        });
    } else {
        if (o.m) throw UsageError("family O is not graded by length");
        for (const Overpartition& op : enumerate_O(p, o.n)) print(json(op));
    }
    return kExitOk;
}

void add_params(CLI::App* cmd, Options& o, bool i_optional = false) {
    cmd->add_option("--K", o.K, "restriction parameter K")->required();
    if (i_optional) cmd->add_option("--i", o.i_opt, "class index i (all when omitted)");
    else cmd->add_option("--i", o.i, "class index i, 1 <= i <= ceil(K/2)")->required();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Jagged partitions, restricted lattice paths and their generating functions", "jagpath"};
    app.require_subcommand(1);
    app.add_flag("--pretty", o.pretty, "indent JSON output");

    auto* count = app.add_subcommand("count", "count members of a family");
    count->add_option("--family", o.family)->required()->check(CLI::IsMember({"J", "P", "E", "R", "O"}));
    add_params(count, o);
    count->add_option("--n", o.n, "weight n (P, E and R count weight 2n)")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--m", o.m, "length or charge");
    count->add_flag("--table", o.table, "JSON lines by length");

    auto* series = app.add_subcommand("series", "expand a generating function");
    series->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"J", "G", "G1", "product", "K2"}));
    series->add_option("--K", o.K);
    series->add_option("--i", o.i);
    series->add_option("--qmax", o.qmax)->check(CLI::Range(0, 400));
    series->add_option("--zmax", o.zmax)->check(CLI::Range(0, 200));

    auto* verify = app.add_subcommand("verify", "check identities; exit 1 on a mismatch");
    verify->add_option("--theorem", o.theorem)
        ->required()
        ->check(CLI::IsMember({"1", "2", "all", "sums", "paths", "product", "euler", "qbinomial"}));
    verify->add_option("--K", o.K);
    verify->add_option("--i", o.i_opt);
    verify->add_option("--nmax", o.nmax)->check(CLI::Range(0, 40));
    verify->add_option("--qmax", o.qmax)->check(CLI::Range(0, 400));
    verify->add_option("--zmax", o.zmax)->check(CLI::Range(0, 200));

    auto* map = app.add_subcommand("map", "apply a bijection to a JSON value");
    map->add_option("--op", o.op)
        ->required()
        ->check(CLI::IsMember({"jagged-to-e", "e-to-jagged", "jagged-to-over", "burge-word", "word-to-path",
                               "path-to-word", "burge-inverse", "peak-pair", "frobenius", "conjugate", "peaks", "p2"}));
    map->add_option("--in", o.input, "JSON input")->required();
    map->add_option("--K", o.K);
    map->add_option("--start", o.start, "start height for word-to-path");
    map->add_flag("--experimental", o.experimental, "enable experimental operations");

    auto* render = app.add_subcommand("render", "draw a path");
    render->add_option("--in", o.input, "path JSON")->required();
    render->add_option("--out", o.out_path, "write SVG to this file");

    auto* enumerate = app.add_subcommand("enumerate", "list family members as JSON lines");
    enumerate->add_option("--family", o.family)->required()->check(CLI::IsMember({"jagged", "paths", "E", "O"}));
    add_params(enumerate, o);
    enumerate->add_option("--n", o.n, "weight n (paths and E use weight 2n)")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--m", o.m, "length or charge");

    std::vector<std::string> argv_store{"jagpath"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    const Printer print(out, o.pretty);
    try {
        if (count->parsed()) return cmd_count(o, print, out);
        if (series->parsed()) return cmd_series(o, print);
        if (verify->parsed()) return cmd_verify(o, print);
        if (map->parsed()) return cmd_map(o, print);
        if (render->parsed()) return cmd_render(o, out);
        if (enumerate->parsed()) return cmd_enumerate(o, print);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "invariant violated: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}

}  // namespace jagpath
