#include "salz/suffix.hpp"

#include <algorithm>

namespace salz {

SuffixArray build_suffix_array(std::span<const std::uint8_t> t) {
    const std::size_t m = t.size();
    SuffixArray sa;
    if (m == 0) return sa;
    if (m > max_window_len)
        throw ContractViolation("text too long for 16-bit suffix indices");

    std::vector<std::uint32_t> order(m), rank(m), tmp(m), bucket;

    // round 0: counting sort by the first byte
    bucket.assign(257, 0);
    for (std::size_t i = 0; i < m; ++i) bucket[t[i] + 1]++;
    for (std::size_t b = 1; b < bucket.size(); ++b) bucket[b] += bucket[b - 1];
    for (std::size_t i = 0; i < m; ++i) order[bucket[t[i]]++] = static_cast<std::uint32_t>(i);
    rank[order[0]] = 0;
    for (std::size_t j = 1; j < m; ++j)
        rank[order[j]] = rank[order[j - 1]] + (t[order[j]] != t[order[j - 1]] ? 1 : 0);

    // double the compared prefix until all ranks are distinct; the second key
    // of suffix i is the rank at i+k (suffixes running past the end sort
    // first), kept stable by arranging tmp before the counting sort
    for (std::size_t k = 1; k < m && rank[order[m - 1]] + 1 < m; k <<= 1) {
        std::size_t idx = 0;
        for (std::size_t i = m - k; i < m; ++i) tmp[idx++] = static_cast<std::uint32_t>(i);
        for (std::size_t j = 0; j < m; ++j)
            if (order[j] >= k) tmp[idx++] = order[j] - static_cast<std::uint32_t>(k);

        bucket.assign(m + 1, 0);
        for (std::size_t i = 0; i < m; ++i) bucket[rank[i] + 1]++;
        for (std::size_t b = 1; b <= m; ++b) bucket[b] += bucket[b - 1];
        for (std::size_t j = 0; j < m; ++j) order[bucket[rank[tmp[j]]]++] = tmp[j];

        auto key2 = [&](std::uint32_t i) -> std::uint64_t {
            const std::uint64_t second = (i + k < m) ? rank[i + k] + 1 : 0;
            return (static_cast<std::uint64_t>(rank[i]) << 32) | second;
        };
        std::vector<std::uint32_t>& next = tmp;  // reuse as the next rank array
        next[order[0]] = 0;
        for (std::size_t j = 1; j < m; ++j)
            next[order[j]] = next[order[j - 1]] + (key2(order[j]) != key2(order[j - 1]) ? 1 : 0);
        rank.swap(next);
    }

    sa.p.assign(order.begin(), order.end());
    return sa;
}

RankArray build_rank(const SuffixArray& sa) {
    RankArray r;
    r.r.assign(sa.p.size(), 0);
    for (std::size_t j = 0; j < sa.p.size(); ++j) r.r[sa.p[j]] = static_cast<SaIndex>(j);
    return r;
}

LcpArray build_lcp(std::span<const std::uint8_t> t, const SuffixArray& sa, const RankArray& r) {
    const std::size_t m = t.size();
    if (sa.p.size() != m || r.r.size() != m)
        throw ContractViolation("suffix/rank arrays do not match the text");
    LcpArray lcp;
    lcp.l.assign(m, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t rank = r.r[i];
        if (rank == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa.p[rank - 1];
        while (i + h < m && j + h < m && t[i + h] == t[j + h]) ++h;
        lcp.l[rank] = static_cast<SaIndex>(h);
        if (h > 0) --h;
    }
    return lcp;
}

std::optional<SymbolRange> sa_range(std::span<const std::uint8_t> t, const SuffixArray& sa,
                                    std::uint8_t sym) {
    if (sa.p.size() != t.size())
        throw ContractViolation("suffix array does not match the text");
    const auto first = std::lower_bound(sa.p.begin(), sa.p.end(), sym,
                                        [&](SaIndex pos, std::uint8_t s) { return t[pos] < s; });
    const auto last = std::upper_bound(first, sa.p.end(), sym,
                                       [&](std::uint8_t s, SaIndex pos) { return s < t[pos]; });
    if (first == last) return std::nullopt;
    return SymbolRange{static_cast<std::uint32_t>(first - sa.p.begin()),
                       static_cast<std::uint32_t>(last - sa.p.begin() - 1)};
}

MatchCandidate longest_match(std::span<const std::uint8_t> t, const SuffixArray& sa,
                             std::uint32_t left, std::uint32_t right,
                             std::span<const std::uint8_t> pattern, ParseMode parse) {
    if (pattern.empty())
        throw ContractViolation("longest_match needs a non-empty pattern");
    if (left > right || right >= sa.p.size())
        throw ContractViolation("rank interval out of bounds");

    auto extend = [&](std::uint32_t pos) {
        const std::size_t limit = std::min(pattern.size(), t.size() - pos);
        std::size_t len = 0;
        while (len < limit && t[pos + len] == pattern[len]) ++len;
        return static_cast<std::uint32_t>(len);
    };

    if (parse == ParseMode::FirstMatch) {
        const std::uint32_t pos = sa.p[left];
        return {pos, extend(pos)};
    }

    MatchCandidate best{sa.p[left], 0};
    for (std::uint32_t j = left; j <= right; ++j) {
        const std::uint32_t pos = sa.p[j];
        const std::uint32_t len = extend(pos);
        if (len > best.len || (len == best.len && pos < best.pos)) best = {pos, len};
    }
    return best;
}

SuffixArray update_sliding_sa(const SuffixArray& old_sa, std::span<const std::uint8_t> lab,
                              std::span<const std::uint8_t> new_dict) {
    const std::size_t m = old_sa.p.size();
    if (lab.size() > m)
        throw ContractViolation("look-ahead longer than the dictionary");
    if (new_dict.size() != m)
        throw ContractViolation("new dictionary length does not match the old array");
    const std::uint32_t k = static_cast<std::uint32_t>(lab.size());

    SuffixArray out;
    out.p.reserve(m);
    for (const SaIndex e : old_sa.p)  // shift survivors, drop the rest
        if (e >= k) out.p.push_back(static_cast<SaIndex>(e - k));
    if (k == 0) return out;

    auto suffix_less = [&](SaIndex a, SaIndex b) {
        return std::lexicographical_compare(new_dict.begin() + a, new_dict.end(),
                                            new_dict.begin() + b, new_dict.end());
    };
    const SuffixArray lab_sa = build_suffix_array(lab);
    const std::uint32_t shift = static_cast<std::uint32_t>(new_dict.size()) - k;
    for (const SaIndex e : lab_sa.p) {
        const SaIndex pos = static_cast<SaIndex>(e + shift);
        out.p.insert(std::lower_bound(out.p.begin(), out.p.end(), pos, suffix_less), pos);
    }
    return out;
}

}  // namespace salz
