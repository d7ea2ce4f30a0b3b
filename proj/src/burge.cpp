#include "jagpath/burge.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jagpath {

std::string to_string(const BurgeWord& w) {
    std::string s;
    for (Symbol c : w) s.push_back(static_cast<char>(c));
    return s;
}

BurgeWord parse_word(std::string_view text) {
    BurgeWord w;
    for (char c : text) {
        if (c != 'a' && c != 'b') throw std::invalid_argument(std::string("unknown word symbol '") + c + "'");
        w.push_back(static_cast<Symbol>(c));
    }
    return w;
}

PairingState pairing(const FrequencyTable& freq) {
    PairingState st{freq, {}};
    for (int k = freq.max_part(); k >= 1;) {
        if (freq[k] > 0) {
            st.pairs.push_back(k - 1);
            k -= 2;
        } else {
            k -= 1;
        }
    }
    return st;
}

namespace {

// One forward alpha/beta step; returns the symbol applied.
Symbol forward_step(FrequencyTable& f) {
    const PairingState st = pairing(f);
    const bool beta = !st.pairs.empty() && st.pairs.back() == 0;
    for (int j : st.pairs) {
        if (j == 0) {
            f.add(1, -1);
        } else {
            f.add(j, 1);
            f.add(j + 1, -1);
        }
    }
    return beta ? Symbol::Beta : Symbol::Alpha;
}

// Reverse step: pairs are re-formed from the bottom, starting at index 1 for
// alpha and at 2 for beta, then each pair moves one unit upwards.
void reverse_step(FrequencyTable& f, Symbol s) {
    std::vector<int> pairs;
    const int top = f.max_part();
    for (int j = s == Symbol::Beta ? 2 : 1; j <= top;) {
        if (f[j] > 0) {
            pairs.push_back(j);
            j += 2;
        } else {
            j += 1;
        }
    }
    for (int j : pairs) {
        f.add(j, -1);
        f.add(j + 1, 1);
    }
    if (s == Symbol::Beta) f.add(1, 1);
}

}  // namespace

BurgeWord burge_word(const Partition& p) {
    FrequencyTable f = frequencies(p);
    BurgeWord w;
    int last = f.weight();
    while (!f.all_zero()) {
        w.push_back(forward_step(f));
        const int now = f.weight();
        if (now >= last) throw std::logic_error("Burge step failed to reduce the weight");
        last = now;
    }
    return w;
}

LatticePath word_to_path(const BurgeWord& w, int start) {
    if (start < 0 || start % 2 != 0) throw std::invalid_argument("start height must be even and non-negative");
    std::vector<Step> steps;
    int y = start;
    for (Symbol c : w) {
        if (c == Symbol::Beta) {
            steps.push_back(Step::NE);
            ++y;
        } else if (y > 0) {
            steps.push_back(Step::SE);
            --y;
        } else {
            steps.push_back(Step::H);
        }
    }
    for (; y > 0; --y) steps.push_back(Step::SE);
    return LatticePath(start, std::move(steps));
}

BurgeWord path_to_word(const LatticePath& path) {
    BurgeWord w;
    for (Step s : path.steps()) w.push_back(s == Step::NE ? Symbol::Beta : Symbol::Alpha);
    return w;
}

Partition burge_inverse(const BurgeWord& w) {
    FrequencyTable f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const FrequencyTable before = f;
        reverse_step(f, *it);
        if (f.all_zero()) continue;  // alphas on the empty table
        FrequencyTable check = f;
        if (forward_step(check) != *it || !(check == before))
            throw std::invalid_argument("malformed Burge word");
    }
    return f.to_partition();
}

std::vector<PeakBlock> shuffle(const std::vector<PeakBlock>& peaks, std::size_t j) {
    if (j == 0 || j >= peaks.size()) throw std::invalid_argument("shuffle index out of range");
    std::vector<PeakBlock> out = peaks;
    const PeakBlock a = peaks[j - 1], b = peaks[j];
    const int h = std::min(a.h, b.h);
    out[j - 1] = {b.x - 2 * h, b.h};
    out[j] = {a.x + 2 * h, a.h};
    for (std::size_t k = 1; k < out.size(); ++k)
        if (out[k].x <= out[k - 1].x) throw std::invalid_argument("shuffle produced non-increasing positions");
    return out;
}

namespace {

// Frequencies f_s += h - r, f_{s+1} += r for x = s h + r.
void add_block(std::map<int, int>& f, const PeakBlock& b) {
    const int s = b.x / b.h, r = b.x % b.h;
    f[s] += b.h - r;
    f[s + 1] += r;
}

bool union_exceeds(const PeakBlock& a, const PeakBlock& b, int K) {
    std::map<int, int> f;
    add_block(f, a);
    add_block(f, b);
    for (const auto& [k, v] : f) {
        auto next = f.find(k + 1);
        if (v + (next == f.end() ? 0 : next->second) > K - 1) return true;
    }
    return false;
}

// The left block is lower and either sits within 3/2 of the right block's
// quotient x/h, or the two blocks overload some adjacent frequency pair.
bool collides(const PeakBlock& a, const PeakBlock& b, int K) {
    if (a.h <= 0 || b.h <= 0) return false;
    if (a.h >= b.h) return false;
    const long long lhs = 2LL * a.x * b.h - 2LL * b.x * a.h + 3LL * a.h * b.h;
    return lhs > 0 || union_exceeds(a, b, K);
}

}  // namespace

Partition peak_pair_map(const LatticePath& path, int K) {
    std::vector<PeakBlock> blocks;
    for (const Peak& p : peaks(path)) blocks.push_back({p.x, p.h});
    constexpr int max_passes = 1000;
    bool settled = false;
    for (int pass = 0; pass < max_passes && !settled; ++pass) {
        settled = true;
        for (std::size_t j = 1; j < blocks.size(); ++j) {
            if (!collides(blocks[j - 1], blocks[j], K)) continue;
            const PeakBlock a = blocks[j - 1], b = blocks[j];
            const int h = std::min(a.h, b.h);
            blocks[j - 1] = {b.x - 2 * h, b.h};
            blocks[j] = {a.x + 2 * h, a.h};
            settled = false;
        }
    }
    if (!settled) throw std::domain_error("peak shuffling did not settle");
    std::map<int, int> f;
    for (const PeakBlock& b : blocks) {
        if (b.h <= 0 || b.x < 0) throw std::domain_error("shuffled block left the admissible range");
        add_block(f, b);
    }
    if (f[0] > 0) throw std::domain_error("shuffled blocks produced a zero part");
    std::vector<int> parts;
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        if (it->first > 0) parts.insert(parts.end(), it->second, it->first);
    return Partition(std::move(parts));
}

FrobeniusSymbol path_to_frobenius(const LatticePath& path) {
    const int a = path.start();
    FrobeniusSymbol f;
    const PeakData pk = peaks(path);
    for (auto it = pk.rbegin(); it != pk.rend(); ++it) {
        const Peak& p = *it;
        if (p.o % 2 == 0) {
            f.s.push_back((p.x - p.y + a) / 2);
            f.t.push_back((p.x + p.y - a - 2) / 2);
        } else {
            f.s.push_back((p.x + p.y + a - 1) / 2);
            f.t.push_back((p.x - p.y - a - 1) / 2);
        }
    }
    if (!f.valid()) throw std::domain_error("Frobenius rows are not strictly decreasing and non-negative");
    return f;
}

}  // namespace jagpath
