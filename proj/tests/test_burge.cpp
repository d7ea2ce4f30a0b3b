#include <doctest.h>

#include <set>

#include "jagpath/burge.hpp"
#include "jagpath/families.hpp"
#include "jagpath/jagged.hpp"

using namespace jagpath;

namespace {

const Partition kExample({9, 9, 8, 7, 7, 7, 7, 4, 2, 1, 1});
const char* kExampleWord = "ababbbaaaaaabbaaaaaaaaaaaaaaaaaaaaabbbbb";
const LatticePath kWorkedPath = LatticePath::parse(2, "SNSSNNSNNNSSNNSSSSHNNNNNSSSSS");

std::vector<std::pair<int, int>> blocks(const LatticePath& p) {
    std::vector<std::pair<int, int>> out;
    for (const Peak& q : peaks(p)) out.emplace_back(q.x, q.h);
    return out;
}

}  // namespace

TEST_CASE("pairing") {
    CHECK(pairing(frequencies(kExample)).pairs == std::vector<int>{8, 6, 3, 1});
    CHECK(pairing(FrequencyTable{}).pairs.empty());
    CHECK(pairing(frequencies(Partition({2, 2}))).pairs == std::vector<int>{1});
}

TEST_CASE("Burge word of the worked partition") {
    CHECK(to_string(burge_word(kExample)) == kExampleWord);
    CHECK(burge_word(Partition{}).empty());
    CHECK(to_string(burge_word(Partition({2, 2}))) == "aabb");
    CHECK(parse_word(kExampleWord) == burge_word(kExample));
    CHECK_THROWS_AS(parse_word("abc"), std::invalid_argument);
}

TEST_CASE("word to path and back") {
    const LatticePath p = word_to_path(parse_word(kExampleWord), 0);
    CHECK(blocks(p) == std::vector<std::pair<int, int>>{{2, 1}, {6, 3}, {14, 2}, {40, 5}});
    CHECK(validate(p, 6));
    const BurgeWord back = path_to_word(p);
    CHECK(to_string(back) == std::string(kExampleWord) + "aaaaa");
    CHECK(burge_inverse(back) == kExample);

    CHECK(word_to_path({}, 0) == LatticePath(0, {}));
    CHECK(burge_inverse(path_to_word(LatticePath(0, {}))) == Partition{});
    const LatticePath beta = word_to_path(parse_word("b"), 0);
    REQUIRE(peaks(beta).size() == 1);
    CHECK(peaks(beta)[0].x == 1);
    CHECK_FALSE(validate(beta, 3));
    CHECK_THROWS_AS(word_to_path({}, 1), std::invalid_argument);
}

TEST_CASE("every word is realised: the inverse reproduces it up to trailing alphas") {
    for (int len = 0; len <= 14; ++len)
        for (int bits = 0; bits < (1 << len); ++bits) {
            BurgeWord w;
            for (int k = 0; k < len; ++k) w.push_back(bits >> k & 1 ? Symbol::Beta : Symbol::Alpha);
            BurgeWord core = w;
            while (!core.empty() && core.back() == Symbol::Alpha) core.pop_back();
            REQUIRE(burge_word(burge_inverse(w)) == core);
        }
}

TEST_CASE("round trip through paths on all partitions of weight <= 16") {
    for (int n = 0; n <= 16; ++n)
        for_each_partition(n, [&](const Partition& p) {
            for (int a : {0, 2, 4}) REQUIRE(burge_inverse(path_to_word(word_to_path(burge_word(p), a))) == p);
        });
}

TEST_CASE("shuffle") {
    const std::vector<PeakBlock> s = shuffle({{4, 1}, {6, 3}}, 1);
    CHECK(s == std::vector<PeakBlock>{{4, 3}, {6, 1}});
    CHECK(shuffle({{2, 2}, {4, 2}}, 1) == std::vector<PeakBlock>{{0, 2}, {6, 2}});
    CHECK_THROWS_AS(shuffle({{2, 2}, {10, 2}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(shuffle({{2, 2}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(shuffle({{2, 2}, {12, 2}}, 0), std::invalid_argument);

    // Weight, height multiset and parities survive every legal shuffle.
    for (int x1 = 0; x1 <= 20; ++x1)
        for (int x2 = x1 + 1; x2 <= 20; ++x2)
            for (int h1 = 1; h1 <= 5; ++h1)
                for (int h2 = 1; h2 <= 5; ++h2) {
                    std::vector<PeakBlock> in{{x1, h1}, {x2, h2}};
                    std::vector<PeakBlock> out;
                    try {
                        out = shuffle(in, 1);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    REQUIRE(out[0].x + out[1].x == x1 + x2);
                    REQUIRE(std::multiset<int>{out[0].h, out[1].h} == std::multiset<int>{h1, h2});
                    // The blocks trade places, each keeping the parity of the slot it takes.
                    REQUIRE((out[0].x - x2) % 2 == 0);
                    REQUIRE((out[1].x - x1) % 2 == 0);
                    REQUIRE(out[0].x < out[1].x);
                }
}

TEST_CASE("peak-pair map") {
    CHECK(peak_pair_map(LatticePath::parse(0, "HNS"), 3) == Partition({2}));
    CHECK(peak_pair_map(LatticePath::parse(0, "HHHHHHHHHHHHNNSS"), 3) == Partition({7, 7}));
    CHECK(peak_pair_map(LatticePath::parse(0, "HHHNNNSSS"), 4) == Partition({2, 2, 2}));

    for (int K = 3; K <= 5; ++K)
        for (int i = 1; i <= (K + 1) / 2; ++i) {
            const RestrictionParams params(K, i);
            std::set<Partition> images;
            for_each_path(K, params.start_height(), 16, [&](const LatticePath& path) {
                const Partition p = peak_pair_map(path, K);
                REQUIRE(p.weight() == weight(path));
                REQUIRE(in_E_class_by_frequency(p, params));
                REQUIRE(images.insert(p).second);
            });
        }
}

TEST_CASE("path to Frobenius symbol") {
    const FrobeniusSymbol f = path_to_frobenius(kWorkedPath);
    CHECK(f == FrobeniusSymbol{{15, 6, 4, 3, 1}, {8, 7, 5, 2, 0}});
    CHECK(f.weight() == 56);
    CHECK(successive_ranks(from_frobenius(f)) == std::vector<int>{7, -1, -1, 1, 1});
    CHECK(path_to_frobenius(LatticePath(0, {})).d() == 0);
    CHECK(path_to_frobenius(LatticePath::parse(0, "HNS")) == FrobeniusSymbol{{1}, {0}});

    for (int K = 3; K <= 5; ++K)
        for (int i = 1; i <= (K + 1) / 2; ++i) {
            const RestrictionParams params(K, i);
            std::set<Partition> images;
            for_each_path(K, params.start_height(), 16, [&](const LatticePath& path) {
                const Partition p = from_frobenius(path_to_frobenius(path));
                REQUIRE(p.weight() == weight(path));
                REQUIRE(in_R_class(p, params));
                REQUIRE(images.insert(p).second);
            });
        }
}
