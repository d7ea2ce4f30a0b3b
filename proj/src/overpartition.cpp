#include "jagpath/overpartition.hpp"

#include <algorithm>
#include <stdexcept>

namespace jagpath {

Overpartition::Overpartition(std::vector<OverpartPart> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), [](const OverpartPart& a, const OverpartPart& b) {
        if (a.value != b.value) return a.value > b.value;
        return !a.overlined && b.overlined;
    });
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k].value < 1) throw std::invalid_argument("overpartition parts must be positive");
        if (k > 0 && parts_[k].overlined && parts_[k - 1].overlined &&
            parts_[k].value == parts_[k - 1].value)
            throw std::invalid_argument("a part value may be overlined at most once");
    }
}

int Overpartition::weight() const {
    int w = 0;
    for (const auto& p : parts_) w += p.value;
    return w;
}

std::vector<int> Overpartition::overlined() const {
    std::vector<int> out;
    for (const auto& p : parts_)
        if (p.overlined) out.push_back(p.value);
    return out;
}

std::vector<int> Overpartition::plain() const {
    std::vector<int> out;
    for (const auto& p : parts_)
        if (!p.overlined) out.push_back(p.value);
    return out;
}

}  // namespace jagpath
