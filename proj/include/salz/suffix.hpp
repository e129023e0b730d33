#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "salz/core.hpp"

namespace salz {

// 16-bit indices keep the arrays at two bytes per entry; texts are therefore
// limited to max_window_len bytes, which covers every legal window.
using SaIndex = std::uint16_t;

// p[j] = start position of the j-th smallest suffix of t.
struct SuffixArray {
    std::vector<SaIndex> p;
};

// r[i] = rank of the suffix starting at i (inverse permutation of p).
struct RankArray {
    std::vector<SaIndex> r;
};

// l[0] = 0; l[j] = length of the longest common prefix of the suffixes at
// ranks j-1 and j.
struct LcpArray {
    std::vector<SaIndex> l;
};

// Prefix doubling with counting sort, O(m log m). Empty input gives an empty
// array; texts longer than max_window_len are rejected.
SuffixArray build_suffix_array(std::span<const std::uint8_t> t);

RankArray build_rank(const SuffixArray& sa);

// Kasai's algorithm, O(m).
LcpArray build_lcp(std::span<const std::uint8_t> t, const SuffixArray& sa, const RankArray& r);

// Inclusive rank interval of the suffixes starting with sym.
struct SymbolRange {
    std::uint32_t left = 0;
    std::uint32_t right = 0;
};

// Binary search over the suffix array; empty optional iff no suffix of t
// starts with sym.
std::optional<SymbolRange> sa_range(std::span<const std::uint8_t> t, const SuffixArray& sa,
                                    std::uint8_t sym);

struct MatchCandidate {
    std::uint32_t pos = 0;
    std::uint32_t len = 0;
};

// Longest common prefix between pattern and the suffixes in the rank interval
// [left, right] (which must come from sa_range on pattern[0], so len >= 1).
// GreedyLongest scans the whole interval; equal lengths prefer the smallest
// text position, matching a brute-force scan over positions in ascending
// order. FirstMatch only evaluates the suffix at rank left.
MatchCandidate longest_match(std::span<const std::uint8_t> t, const SuffixArray& sa,
                             std::uint32_t left, std::uint32_t right,
                             std::span<const std::uint8_t> pattern, ParseMode parse);

// Incremental rebuild for a dictionary that slid forward by |lab| bytes
// (new_dict = old_dict[|lab|..] ++ lab): shift every entry by -|lab|, drop the
// ones that fall off, then sorted-insert the suffix array of lab offset by
// |new_dict| - |lab|. Retained entries keep their relative order, so the
// result can differ from a freshly built array; callers re-verify matches
// byte-for-byte.
SuffixArray update_sliding_sa(const SuffixArray& old_sa, std::span<const std::uint8_t> lab,
                              std::span<const std::uint8_t> new_dict);

}  // namespace salz
