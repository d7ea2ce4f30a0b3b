#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

namespace jagpath {

// Weakly decreasing sequence of positive parts. The empty partition is valid.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t k) const { return parts_[k]; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// f[j] = multiplicity of part j. Index 0 is a sentinel that always reads 0.
class FrequencyTable {
public:
    FrequencyTable() = default;
    explicit FrequencyTable(std::vector<int> f);

    int operator[](int j) const;
    void set(int j, int value);
    void add(int j, int delta);
    int max_part() const;
    bool all_zero() const { return max_part() == 0; }
    int weight() const;
    int length() const;
    Partition to_partition() const;

    friend bool operator==(const FrequencyTable& a, const FrequencyTable& b);

private:
    void trim();
    std::vector<int> f_{0};
};

struct FrobeniusSymbol {
    std::vector<int> s;
    std::vector<int> t;

    std::size_t d() const { return s.size(); }
    bool valid() const;
    int weight() const;

    friend bool operator==(const FrobeniusSymbol&, const FrobeniusSymbol&) = default;
};

FrequencyTable frequencies(const Partition& p);
Partition conjugate(const Partition& p);
FrobeniusSymbol frobenius(const Partition& p);
// Throws std::invalid_argument when the rows are not strictly decreasing,
// non-negative, of equal length.
Partition from_frobenius(const FrobeniusSymbol& f);
std::vector<int> successive_ranks(const Partition& p);

// Visits every partition of n in reverse lexicographic order.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> partitions_of(int n);

}  // namespace jagpath
