#include "jagpath/lattice_path.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jagpath {

namespace {

int delta(Step s) {
    switch (s) {
        case Step::NE: return 1;
        case Step::SE: return -1;
        case Step::H: return 0;
    }
    return 0;
}

bool is_peak_at(const std::vector<Step>& steps, std::size_t k) {
    return k > 0 && k < steps.size() && steps[k - 1] == Step::NE && steps[k] == Step::SE;
}

}  // namespace

LatticePath::LatticePath(int start, std::vector<Step> steps) : start_(start), steps_(std::move(steps)) {
    if (start_ < 0) throw std::invalid_argument("start height must be non-negative");
    int y = start_;
    for (Step s : steps_) {
        if (s == Step::SE && y < 1) throw std::invalid_argument("SE step below the axis");
        if (s == Step::H && y != 0) throw std::invalid_argument("horizontal step off the axis");
        if (s != Step::NE && s != Step::SE && s != Step::H) throw std::invalid_argument("unknown step");
        y += delta(s);
    }
    if (y != 0) throw std::invalid_argument("path does not end on the axis");
}

LatticePath LatticePath::parse(int start, std::string_view text) {
    std::vector<Step> steps;
    for (char c : text) {
        if (c != 'N' && c != 'S' && c != 'H')
            throw std::invalid_argument(std::string("unknown step character '") + c + "'");
        steps.push_back(static_cast<Step>(c));
    }
    return LatticePath(start, std::move(steps));
}

std::string LatticePath::step_string() const {
    std::string out;
    for (Step s : steps_) out.push_back(static_cast<char>(s));
    return out;
}

std::vector<int> LatticePath::heights() const {
    std::vector<int> v{start_};
    for (Step s : steps_) v.push_back(v.back() + delta(s));
    return v;
}

PeakData peaks(const LatticePath& path) {
    const auto& steps = path.steps();
    const std::vector<int> v = path.heights();
    PeakData out;
    int o = 0;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        if (is_peak_at(steps, k)) out.push_back({static_cast<int>(k), v[k], 0, o});
        if (steps[k] == Step::H) ++o;
    }
    // The deepest level reachable on each side before meeting a blocking peak:
    // on the left, any peak at least as high; on the right, any strictly higher.
    std::vector<int> peak_height(v.size(), -1);
    for (const Peak& p : out) peak_height[p.x] = p.y;
    for (Peak& p : out) {
        int left = p.y;
        for (int x = p.x - 1; x >= 0; --x) {
            if (peak_height[x] >= p.y) break;
            left = std::min(left, v[x]);
        }
        int right = p.y;
        for (std::size_t x = p.x + 1; x < v.size(); ++x) {
            if (peak_height[x] > p.y) break;
            right = std::min(right, v[x]);
        }
        p.h = p.y - std::max(left, right);
    }
    return out;
}

std::vector<int> relative_heights(const LatticePath& path) {
    std::vector<int> out;
    for (const Peak& p : peaks(path)) out.push_back(p.h);
    return out;
}

int weight(const LatticePath& path) {
    int w = 0;
    for (const Peak& p : peaks(path)) w += p.x;
    return w;
}

int charge(const LatticePath& path) {
    int c = 0;
    for (const Peak& p : peaks(path)) c += p.h;
    return c;
}

bool validate(const LatticePath& path, int K) {
    if (path.start() % 2 != 0) return false;
    if (!path.steps().empty() && path.steps().back() == Step::H) return false;
    for (const Peak& p : peaks(path))
        if (p.x % 2 != 0 || p.y > K - 1) return false;
    return true;
}

namespace {

struct PathSearch {
    int K;
    int start;
    int max_weight;
    const std::function<void(const LatticePath&)>& fn;
    std::vector<Step> steps;

    void run(int x, int y, int w) {
        const bool after_ne = !steps.empty() && steps.back() == Step::NE;
        if (y == 0 && (steps.empty() ? start == 0 : steps.back() == Step::SE))
            fn(LatticePath(start, steps));
        if (y + 1 <= K - 1 && w + x + 1 <= max_weight) {
            steps.push_back(Step::NE);
            run(x + 1, y + 1, w);
            steps.pop_back();
        }
        if (y >= 1) {
            int nw = w;
            bool ok = true;
            if (after_ne) {
                nw = w + x;
                ok = x % 2 == 0 && nw <= max_weight;
            }
            if (ok) {
                steps.push_back(Step::SE);
                run(x + 1, y - 1, nw);
                steps.pop_back();
            }
        }
        if (y == 0 && w + x + 2 <= max_weight) {
            steps.push_back(Step::H);
            run(x + 1, 0, w);
            steps.pop_back();
        }
    }
};

}  // namespace

void for_each_path(int K, int start, int max_weight,
                   const std::function<void(const LatticePath&)>& fn) {
    if (K < 2) throw std::invalid_argument("K must be at least 2");
    if (start < 0 || start % 2 != 0) throw std::invalid_argument("start height must be even and non-negative");
    if (max_weight < 0) return;
    PathSearch search{K, start, max_weight, fn, {}};
    search.run(0, start, 0);
}

CountTable enumerate_paths(const RestrictionParams& params, int max_weight) {
    if (max_weight < 0 || max_weight % 2 != 0)
        throw std::invalid_argument("max_weight must be even and non-negative");
    const int max_charge = max_weight / 2 * (params.K - 1) + params.K;
    CountTable table(max_weight + 1, std::vector<Count>(max_charge + 1, 0));
    for_each_path(params.K, params.start_height(), max_weight, [&](const LatticePath& p) {
        PeakData pk = peaks(p);
        int w = 0, c = 0;
        for (const Peak& q : pk) {
            w += q.x;
            c += q.h;
        }
        table.at(w).at(c) += 1;
    });
    return table;
}

std::map<std::vector<int>, int> minimal_weight_by_content(int K, int start, int max_weight) {
    std::map<std::vector<int>, int> best;
    for_each_path(K, start, max_weight, [&](const LatticePath& p) {
        std::vector<int> content(K - 1, 0);
        int w = 0;
        for (const Peak& q : peaks(p)) {
            ++content.at(q.h - 1);
            w += q.x;
        }
        while (!content.empty() && content.back() == 0) content.pop_back();
        auto [it, inserted] = best.emplace(content, w);
        if (!inserted) it->second = std::min(it->second, w);
    });
    return best;
}

std::string render_ascii(const LatticePath& path) {
    const auto& steps = path.steps();
    const std::vector<int> v = path.heights();
    const int top = *std::max_element(v.begin(), v.end());
    std::vector<std::string> rows(top + 1, std::string(steps.size(), ' '));
    for (std::size_t k = 0; k < steps.size(); ++k) {
        switch (steps[k]) {
            case Step::NE: rows[v[k]][k] = '/'; break;
            case Step::SE: rows[v[k] - 1][k] = '\\'; break;
            case Step::H: rows[0][k] = '_'; break;
        }
    }
    std::ostringstream out;
    out << "a=" << path.start() << '\n';
    for (int r = top; r >= 0; --r) {
        std::string line = rows[r];
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << '|' << line << '\n';
    }
    out << '+' << std::string(steps.size(), '-') << '\n';
    out << "peaks:";
    for (const Peak& p : peaks(path)) out << ' ' << p.x;
    out << '\n';
    return out.str();
}

LatticePath parse_ascii(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line.rfind("a=", 0) != 0)
        throw std::invalid_argument("ASCII path must begin with a start line 'a=<height>'");
    int start = 0;
    try {
        start = std::stoi(line.substr(2));
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed start line");
    }
    std::vector<std::string> rows;
    std::size_t width = 0;
    bool axis = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '|') {
            rows.push_back(line.substr(1));
        } else if (!line.empty() && line[0] == '+') {
            width = line.size() - 1;
            axis = true;
            break;
        } else {
            throw std::invalid_argument("unexpected line in ASCII path");
        }
    }
    if (!axis || rows.empty()) throw std::invalid_argument("ASCII path is missing its axis");
    std::vector<Step> steps;
    for (std::size_t k = 0; k < width; ++k) {
        char found = 0;
        for (const std::string& r : rows) {
            if (k < r.size() && r[k] != ' ') {
                if (found) throw std::invalid_argument("two marks in one column");
                found = r[k];
            }
        }
        switch (found) {
            case '/': steps.push_back(Step::NE); break;
            case '\\': steps.push_back(Step::SE); break;
            case '_': steps.push_back(Step::H); break;
            default: throw std::invalid_argument("unrecognised mark in column " + std::to_string(k));
        }
    }
    LatticePath path(start, std::move(steps));
    // Rejects drawings whose marks sit on the wrong rows.
    const std::string again = render_ascii(path);
    const std::size_t drawing = again.rfind("peaks:");
    if (std::string(text).compare(0, drawing, again, 0, drawing) != 0)
        throw std::invalid_argument("ASCII path is inconsistent with its steps");
    return path;
}

std::string render_svg(const LatticePath& path) {
    constexpr int unit = 20;
    constexpr int margin = 30;
    const std::vector<int> v = path.heights();
    const int n = static_cast<int>(path.steps().size());
    const int top = *std::max_element(v.begin(), v.end());
    const int width = 2 * margin + std::max(n, 1) * unit;
    const int height = 2 * margin + (top + 1) * unit;
    const int base = height - margin;
    auto px = [&](int x) { return margin + x * unit; };
    auto py = [&](int y) { return base - y * unit; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <line class=\"axis\" x1=\"" << px(0) << "\" y1=\"" << base << "\" x2=\"" << width - margin / 2
        << "\" y2=\"" << base << "\" stroke=\"black\"/>\n";
    out << "  <line class=\"axis\" x1=\"" << px(0) << "\" y1=\"" << base << "\" x2=\"" << px(0) << "\" y2=\""
        << margin / 2 << "\" stroke=\"black\"/>\n";
    for (int x = 0; x <= n; x += 2)
        out << "  <line class=\"tick\" x1=\"" << px(x) << "\" y1=\"" << base << "\" x2=\"" << px(x)
            << "\" y2=\"" << base + 4 << "\" stroke=\"black\"/>\n";
    if (n > 0) {
        out << "  <polyline class=\"path\" fill=\"none\" stroke=\"blue\" stroke-width=\"2\" points=\"";
        for (int k = 0; k <= n; ++k) out << (k ? " " : "") << px(k) << ',' << py(v[k]);
        out << "\"/>\n";
    }
    for (const Peak& p : peaks(path)) {
        out << "  <circle class=\"peak\" cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"3\" fill=\"red\"/>\n";
        out << "  <text x=\"" << px(p.x) << "\" y=\"" << base + 16 << "\" font-size=\"10\" text-anchor=\"middle\">"
            << p.x << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace jagpath
