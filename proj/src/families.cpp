#include "jagpath/families.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "jagpath/jagged.hpp"
#include "jagpath/lattice_path.hpp"

namespace jagpath {

namespace {

void require_restricted(const RestrictionParams& params) {
    if (params.K <= 2) throw std::invalid_argument("partition families require K > 2");
}

bool allowed_part(int v, bool overlined, const RestrictionParams& params, OverpartitionReading reading) {
    const int K = params.K, i = params.i;
    if (2 * i < K + 1) {
        if (overlined) return true;
        const int r = v % (K + 1);
        return r != 0 && r != i && r != K + 1 - i;
    }
    if (overlined && reading == OverpartitionReading::NonOverlinedOnly) return true;
    return v % params.kappa() != 0;
}

std::string row_mismatch(const char* what, int n, const std::vector<Count>& a, const std::vector<Count>& b) {
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t m = 0; m < len; ++m) {
        const Count x = m < a.size() ? a[m] : 0, y = m < b.size() ? b[m] : 0;
        if (x != y) {
            std::ostringstream msg;
            msg << what << " at n=" << n << ", m=" << m << ": " << x << " vs " << y;
            return msg.str();
        }
    }
    return {};
}

std::string scalar_mismatch(const char* what, int n, Count a, Count b) {
    if (a == b) return {};
    std::ostringstream msg;
    msg << what << " at n=" << n << ": " << a << " vs " << b;
    return msg.str();
}

}  // namespace

bool in_E_class_by_difference(const Partition& p, const RestrictionParams& params) {
    if (!is_epartition(p)) return false;
    const auto& q = p.parts();
    if (std::count(q.begin(), q.end(), 1) > 2 * params.i - 2) return false;
    const std::size_t span = params.K - 1;
    for (std::size_t j = 0; j + span < q.size(); ++j)
        if (q[j] < q[j + span] + 2) return false;
    return true;
}

bool in_E_class_by_frequency(const Partition& p, const RestrictionParams& params) {
    const FrequencyTable f = frequencies(p);
    if (f[1] > 2 * params.i - 2) return false;
    for (int j = 1; j <= f.max_part(); ++j) {
        if (j % 2 == 1 && f[j] % 2 != 0) return false;
        if (f[j] + f[j + 1] > params.K - 1) return false;
    }
    return true;
}

bool in_R_class(const Partition& p, const RestrictionParams& params) {
    const int lo = 3 - 2 * params.i, hi = 2 * params.K - 1 - 2 * params.i;
    for (int r : successive_ranks(p))
        if (r % 2 == 0 || r < lo || r > hi) return false;
    return true;
}

bool has_product_form(const RestrictionParams& params) {
    return 2 * params.i < params.K + 1 || (params.epsilon() == 1 && params.i == params.kappa());
}

bool in_O_class(const Overpartition& o, const RestrictionParams& params, OverpartitionReading reading) {
    if (!has_product_form(params)) throw std::invalid_argument("no overpartition class for these parameters");
    for (const auto& part : o.parts())
        if (!allowed_part(part.value, part.overlined, params, reading)) return false;
    return true;
}

std::vector<Count> count_E_by_length(const RestrictionParams& params, int n2) {
    require_restricted(params);
    std::vector<Count> counts(std::max(n2, 0) + 1, 0);
    for_each_partition(n2, [&](const Partition& p) {
        const bool a = in_E_class_by_difference(p, params);
        if (a != in_E_class_by_frequency(p, params))
            throw std::logic_error("E-class characterizations disagree");
        if (a) ++counts[p.length()];
    });
    return counts;
}

Count count_E(const RestrictionParams& params, int n2, std::optional<int> m) {
    const std::vector<Count> counts = count_E_by_length(params, n2);
    if (m) return *m >= 0 && *m < static_cast<int>(counts.size()) ? counts[*m] : 0;
    Count total = 0;
    for (Count c : counts) total = checked_add(total, c);
    return total;
}

Count count_R(const RestrictionParams& params, int n2) {
    require_restricted(params);
    Count total = 0;
    for_each_partition(n2, [&](const Partition& p) { total += in_R_class(p, params); });
    return total;
}

namespace {

// Non-overlined multisets and overlined supports, grouped by weight.
struct OverpartitionPieces {
    std::vector<std::vector<Partition>> plain;
    std::vector<std::vector<Partition>> overlined;
};

OverpartitionPieces pieces(const RestrictionParams& params, int n, OverpartitionReading reading) {
    OverpartitionPieces out{std::vector<std::vector<Partition>>(n + 1), std::vector<std::vector<Partition>>(n + 1)};
    for (int t = 0; t <= n; ++t) {
        for_each_partition(t, [&](const Partition& p) {
            bool plain_ok = true, over_ok = true;
            for (std::size_t k = 0; k < p.length(); ++k) {
                plain_ok = plain_ok && allowed_part(p[k], false, params, reading);
                over_ok = over_ok && allowed_part(p[k], true, params, reading) && (k == 0 || p[k] < p[k - 1]);
            }
            if (plain_ok) out.plain[t].push_back(p);
            if (over_ok) out.overlined[t].push_back(p);
        });
    }
    return out;
}

}  // namespace

Count count_O(const RestrictionParams& params, int n, OverpartitionReading reading) {
    require_restricted(params);
    if (!has_product_form(params)) throw std::invalid_argument("no overpartition class for these parameters");
    if (n < 0) return 0;
    const OverpartitionPieces pc = pieces(params, n, reading);
    Count total = 0;
    for (int t = 0; t <= n; ++t)
        total = checked_add(total, checked_mul(static_cast<Count>(pc.plain[t].size()),
                                               static_cast<Count>(pc.overlined[n - t].size())));
    return total;
}

std::vector<Overpartition> enumerate_O(const RestrictionParams& params, int n, OverpartitionReading reading) {
    require_restricted(params);
    if (!has_product_form(params)) throw std::invalid_argument("no overpartition class for these parameters");
    std::vector<Overpartition> out;
    if (n < 0) return out;
    const OverpartitionPieces pc = pieces(params, n, reading);
    for (int t = 0; t <= n; ++t)
        for (const Partition& a : pc.plain[t])
            for (const Partition& b : pc.overlined[n - t]) {
                std::vector<OverpartPart> parts;
                for (int v : a.parts()) parts.push_back({v, false});
                for (int v : b.parts()) parts.push_back({v, true});
                out.emplace_back(std::move(parts));
            }
    std::sort(out.begin(), out.end());
    return out;
}

TheoremReport verify_theorems(const RestrictionParams& params, int n_max, Theorems which, int threads) {
    require_restricted(params);
    TheoremReport report;
    report.params = params;
    report.n_max = n_max;
    report.which = which;
    if (n_max < 0) return report;
    const bool first = static_cast<int>(which) & 1;
    const bool second = static_cast<int>(which) & 2;
    const bool alternative = second && params.epsilon() == 1 && params.i == params.kappa();

    const CountTable paths = first ? enumerate_paths(params, 2 * n_max) : CountTable{};
    report.rows.resize(n_max + 1);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int n; (n = next.fetch_add(1)) <= n_max;) {
            CountRow& row = report.rows[n];
            row.n = n;
            const auto j = jagged_counts_by_length(params, n);
            row.J.assign(j.begin(), j.end());
            for (Count c : row.J) row.J_total += c;
            if (first) row.P = paths[2 * n];
            if (second) {
                row.E = count_E_by_length(params, 2 * n);
                row.R = count_R(params, 2 * n);
                row.O = count_O(params, n);
                if (alternative) row.O_alternative = count_O(params, n, OverpartitionReading::NonOverlinedOnly);
            }
        }
    };
    const int workers = std::clamp(threads, 1, n_max + 1);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    if (alternative) report.alternative_reading_matches = true;
    for (const CountRow& row : report.rows) {
        auto check = [&](const std::string& msg) {
            ++report.checked;
            if (!msg.empty()) report.failures.push_back(msg);
        };
        if (first) check(row_mismatch("J vs P", row.n, row.J, row.P));
        if (second) {
            check(row_mismatch("J vs E", row.n, row.J, row.E));
            check(scalar_mismatch("J total vs R", row.n, row.J_total, row.R));
            check(scalar_mismatch("J total vs O", row.n, row.J_total, row.O));
            if (alternative && row.O_alternative != row.J_total) *report.alternative_reading_matches = false;
        }
    }
    return report;
}

}  // namespace jagpath
