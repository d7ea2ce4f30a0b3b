#pragma once

#include <compare>
#include <vector>

namespace jagpath {

struct OverpartPart {
    int value = 0;
    bool overlined = false;

    friend bool operator==(const OverpartPart&, const OverpartPart&) = default;
    friend auto operator<=>(const OverpartPart&, const OverpartPart&) = default;
};

// Parts sorted by value descending, the overlined copy last among equal values.
class Overpartition {
public:
    Overpartition() = default;
    // Sorts the input. Throws std::invalid_argument on a non-positive value or
    // a value overlined twice.
    explicit Overpartition(std::vector<OverpartPart> parts);

    const std::vector<OverpartPart>& parts() const { return parts_; }
    int weight() const;
    std::vector<int> overlined() const;
    std::vector<int> plain() const;

    friend bool operator==(const Overpartition&, const Overpartition&) = default;
    friend auto operator<=>(const Overpartition& a, const Overpartition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<OverpartPart> parts_;
};

}  // namespace jagpath
