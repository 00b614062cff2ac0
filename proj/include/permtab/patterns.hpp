#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bijection.hpp"

namespace permtab {

// Dashed pattern: blocks of values separated by dashes. An occurrence in a
// permutation picks strictly increasing positions, consecutive within each
// block (gaps allowed only at dashes), whose values are order-isomorphic to
// the pattern. "32-1" and "32--1" denote the same pattern.
class DashedPattern {
public:
    static DashedPattern parse(std::string_view text) {
        DashedPattern p;
        std::vector<int> block;
        int dashes = 0;
        auto end_block = [&] {
            if (block.empty()) throw std::invalid_argument("pattern: empty block");
            p.blocks_.push_back(block);
            block.clear();
        };
        for (char ch : text) {
            if (ch >= '1' && ch <= '9') {
                if (dashes > 0) {
                    end_block();
                    dashes = 0;
                }
                block.push_back(ch - '0');
            } else if (ch == '-') {
                if (++dashes > 2) throw std::invalid_argument("pattern: separator is one or two dashes");
            } else {
                throw std::invalid_argument(std::string("pattern: illegal character '") + ch + "'");
            }
        }
        if (dashes > 0) throw std::invalid_argument("pattern: empty block");
        end_block();

        int k = 0;
        for (const auto& b : p.blocks_) k += static_cast<int>(b.size());
        std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
        for (const auto& b : p.blocks_)
            for (int v : b) {
                if (v > k) throw std::invalid_argument("pattern: gap in value set");
                if (seen[static_cast<std::size_t>(v)])
                    throw std::invalid_argument("pattern: repeated value " + std::to_string(v));
                seen[static_cast<std::size_t>(v)] = true;
            }
        p.k_ = k;
        return p;
    }

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int size() const { return k_; }

    std::vector<int> flat() const {
        std::vector<int> out;
        for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
        return out;
    }

    // Canonical form: single dashes.
    std::string to_string() const {
        std::string out;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (b) out += '-';
            for (int v : blocks_[b]) out += static_cast<char>('0' + v);
        }
        return out;
    }

    bool operator==(const DashedPattern&) const = default;

private:
    std::vector<std::vector<int>> blocks_;
    int k_ = 0;
};

inline DashedPattern parse_pattern(const std::string& text) { return DashedPattern::parse(text); }

// Counts occurrences by placing blocks left to right, pruning as soon as the
// chosen values stop being order-isomorphic to the pattern prefix.
inline std::uint64_t count_occurrences(const DashedPattern& p, const Permutation& perm) {
    const int n = static_cast<int>(perm.size());
    const int k = p.size();
    if (k > n) return 0;
    const std::vector<int> sigma = p.flat();
    const auto& blocks = p.blocks();

    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(k));
    std::uint64_t count = 0;

    auto consistent = [&](int v) {
        const std::size_t t = chosen.size();
        for (std::size_t i = 0; i < t; ++i)
            if ((chosen[i] < v) != (sigma[i] < sigma[t])) return false;
        return true;
    };

    auto rec = [&](auto&& self, std::size_t bi, int min_start) -> void {
        if (bi == blocks.size()) {
            ++count;
            return;
        }
        const int len = static_cast<int>(blocks[bi].size());
        for (int s = min_start; s + len - 1 <= n; ++s) {
            int pushed = 0;
            bool ok = true;
            for (int off = 0; off < len; ++off) {
                const int v = perm[static_cast<std::size_t>(s - 1 + off)];
                if (!consistent(v)) {
                    ok = false;
                    break;
                }
                chosen.push_back(v);
                ++pushed;
            }
            if (ok) self(self, bi + 1, s + len);
            chosen.resize(chosen.size() - static_cast<std::size_t>(pushed));
        }
    };
    rec(rec, 0, 1);
    return count;
}

// Entry i of the result is n+1 - pi_{n+1-i}. An involution; it carries
// occurrences of 3-21 onto occurrences of 32-1 and back.
inline Permutation reverse_complement(const Permutation& pi) {
    const int n = static_cast<int>(pi.size());
    Permutation out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i) - 1] = n + 1 - pi[static_cast<std::size_t>(n - i)];
    return out;
}

// Reference counter: enumerates every k-subset of positions, keeps those
// whose blocks are consecutive, and checks order-isomorphism pairwise.
// Deliberately shares no machinery with count_occurrences.
inline std::uint64_t oracle_count(const DashedPattern& p, const Permutation& perm) {
    const int n = static_cast<int>(perm.size());
    const int k = p.size();
    if (k > n) return 0;
    const std::vector<int> sigma = p.flat();

    std::vector<int> block_id(static_cast<std::size_t>(k));
    {
        int t = 0, b = 0;
        for (const auto& blk : p.blocks()) {
            for (std::size_t i = 0; i < blk.size(); ++i) block_id[static_cast<std::size_t>(t++)] = b;
            ++b;
        }
    }

    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;

    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (int t = 1; t < k && ok; ++t)
            if (block_id[static_cast<std::size_t>(t)] == block_id[static_cast<std::size_t>(t - 1)] &&
                idx[static_cast<std::size_t>(t)] != idx[static_cast<std::size_t>(t - 1)] + 1)
                ok = false;
        for (int s = 0; s < k && ok; ++s)
            for (int t = s + 1; t < k && ok; ++t)
                if ((perm[static_cast<std::size_t>(idx[static_cast<std::size_t>(s)]) - 1] <
                     perm[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)]) - 1]) !=
                    (sigma[static_cast<std::size_t>(s)] < sigma[static_cast<std::size_t>(t)]))
                    ok = false;
        if (ok) ++count;

        // next k-combination of 1..n
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < k; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
    return count;
}

}  // namespace permtab
