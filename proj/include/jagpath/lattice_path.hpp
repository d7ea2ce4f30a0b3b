#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jagpath/checked.hpp"
#include "jagpath/params.hpp"

namespace jagpath {

enum class Step : char { NE = 'N', SE = 'S', H = 'H' };

// A path from (0, start). Construction enforces the step grammar (y >= 0,
// SE only above the axis, H only on it) and that the path ends on the axis.
class LatticePath {
public:
    LatticePath() = default;
    LatticePath(int start, std::vector<Step> steps);
    // Steps given as a string over N, S, H.
    static LatticePath parse(int start, std::string_view steps);

    int start() const { return start_; }
    const std::vector<Step>& steps() const { return steps_; }
    std::string step_string() const;
    // Heights of the vertices 0..steps().size().
    std::vector<int> heights() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    int start_ = 0;
    std::vector<Step> steps_;
};

struct Peak {
    int x = 0;
    int y = 0;
    int h = 0;  // relative height
    int o = 0;  // horizontal steps strictly left of x

    friend bool operator==(const Peak&, const Peak&) = default;
};

using PeakData = std::vector<Peak>;

bool validate(const LatticePath& path, int K);
PeakData peaks(const LatticePath& path);
std::vector<int> relative_heights(const LatticePath& path);
int weight(const LatticePath& path);
int charge(const LatticePath& path);

// All K-restricted paths from (0, start) of weight <= max_weight, in
// depth-first order with steps tried as NE, SE, H.
void for_each_path(int K, int start, int max_weight,
                   const std::function<void(const LatticePath&)>& fn);

// table[w][m] = number of paths of weight w and charge m. Throws
// std::invalid_argument when max_weight is odd or negative.
using CountTable = std::vector<std::vector<Count>>;
CountTable enumerate_paths(const RestrictionParams& params, int max_weight);

// Minimal weight per content, where content[h-1] counts peaks of relative
// height h (trailing zeros dropped). Considers paths of weight <= max_weight.
std::map<std::vector<int>, int> minimal_weight_by_content(int K, int start, int max_weight);

std::string render_ascii(const LatticePath& path);
// Inverse of render_ascii. Throws std::invalid_argument on malformed text.
LatticePath parse_ascii(std::string_view text);
std::string render_svg(const LatticePath& path);

}  // namespace jagpath
