#include "salz/encoders.hpp"

#include <algorithm>
#include <chrono>

#include "salz/bt_dictionary.hpp"
#include "salz/codec.hpp"
#include "salz/suffix.hpp"

namespace salz {

namespace {

using Clock = std::chrono::steady_clock;

struct Emission {
    Token token;
    std::uint32_t coverage = 0;
};

// Shared token-shaping rules: LZSS demotes matches shorter than min_match to
// literals; LZ77 shortens a match that would swallow the whole remaining
// look-ahead so the break symbol always exists.
Emission plan_emission(std::uint32_t cand_pos, std::uint32_t cand_len,
                       std::span<const std::uint8_t> lab, std::uint32_t i,
                       const EncoderConfig& cfg) {
    const std::uint32_t avail = static_cast<std::uint32_t>(lab.size()) - i;
    std::uint32_t len = std::min(cand_len, avail);
    if (cfg.token_format == TokenFormat::LZSS) {
        if (len >= cfg.min_match)
            return {Token::match(static_cast<std::uint16_t>(cand_pos),
                                 static_cast<std::uint16_t>(len)),
                    len};
        return {Token::literal(lab[i]), 1};
    }
    if (len == avail) --len;
    if (len < cfg.min_match) return {Token::triple(0, 0, lab[i]), 1};
    return {Token::triple(static_cast<std::uint16_t>(cand_pos), static_cast<std::uint16_t>(len),
                          lab[i + len]),
            len + 1};
}

// One look-ahead batch for A1/A2: first-symbol interval search over the
// dictionary suffix array, then extension per the configured parse mode.
void encode_batch_over_sa(const SlidingWindow& w, const SuffixArray& sa, const EncoderConfig& cfg,
                          std::vector<Token>& out) {
    const auto dict = w.dictionary();
    const auto lab = w.lab();
    const auto fill = w.lab_fill();
    std::uint32_t i = 0;
    while (i < fill) {
        std::uint32_t cand_pos = 0, cand_len = 0;
        if (const auto range = sa_range(dict, sa, lab[i])) {
            const MatchCandidate m =
                longest_match(dict, sa, range->left, range->right, lab.subspan(i), cfg.parse);
            cand_pos = m.pos;
            cand_len = m.len;
        }
        const Emission e = plan_emission(cand_pos, cand_len, lab, i, cfg);
        out.push_back(e.token);
        i += e.coverage;
    }
}

std::uint64_t total_bit_cost(const std::vector<Token>& tokens, const EncoderConfig& cfg) {
    std::uint64_t bits = 0;
    for (const Token& t : tokens) bits += token_bit_cost(t, cfg);
    return bits;
}

void require_algorithm(const EncoderConfig& cfg, Algorithm a) {
    cfg.validate();
    if (cfg.algorithm != a)
        throw ContractViolation("configuration selects a different algorithm");
}

}  // namespace

MemoryReport memory_report(const EncoderConfig& cfg) {
    cfg.validate();
    const std::uint64_t m = cfg.dict_len;
    const std::uint64_t n = cfg.lab_len;
    switch (cfg.algorithm) {
    case Algorithm::A1:
    case Algorithm::A2: {
        // window bytes + one 2-byte suffix array over the dictionary
        const std::uint64_t bytes = m + n + 2 * m;
        return {bytes, bytes};
    }
    case Algorithm::A3:
        // the published arithmetic sizes the suffix and LCP arrays by the
        // dictionary alone; the structures really span the whole window
        return {m + n + 2 * m + 2 * m, (m + n) + 2 * (m + n) + 2 * (m + n)};
    case Algorithm::BT:
        // the published arithmetic counts dict_len + 1 nodes; the pool really
        // holds dict_len + lab_len + 1 nodes of three 4-byte integers
        return {12 * (m + 1), 12 * (m + n + 1)};
    }
    throw ContractViolation("unknown algorithm");
}

EncodeResult encode_a1(std::span<const std::uint8_t> input, const EncoderConfig& cfg) {
    require_algorithm(cfg, Algorithm::A1);
    EncodeResult res;
    res.stats.input_bytes = input.size();
    res.stats.structure_bytes = memory_report(cfg).allocated_bytes;
    const auto t0 = Clock::now();
    if (input.size() > cfg.dict_len) {
        SlidingWindow w(input.first(cfg.dict_len), cfg.lab_len);
        std::uint64_t off = cfg.dict_len;
        auto refill = [&](std::uint32_t encoded) {
            const std::uint64_t chunk = std::min<std::uint64_t>(cfg.lab_len, input.size() - off);
            w.slide(encoded, input.subspan(off, chunk));
            off += chunk;
        };
        refill(0);
        while (w.lab_fill() > 0) {
            const SuffixArray sa = build_suffix_array(w.dictionary());
            encode_batch_over_sa(w, sa, cfg, res.tokens);
            refill(w.lab_fill());
        }
    }
    res.stats.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    res.stats.output_bits = total_bit_cost(res.tokens, cfg);
    return res;
}

EncodeResult encode_a2(std::span<const std::uint8_t> input, const EncoderConfig& cfg) {
    require_algorithm(cfg, Algorithm::A2);
    EncodeResult res;
    res.stats.input_bytes = input.size();
    res.stats.structure_bytes = memory_report(cfg).allocated_bytes;
    const auto t0 = Clock::now();
    if (input.size() > cfg.dict_len) {
        SlidingWindow w(input.first(cfg.dict_len), cfg.lab_len);
        std::uint64_t off = cfg.dict_len;
        auto refill = [&](std::uint32_t encoded) {
            const std::uint64_t chunk = std::min<std::uint64_t>(cfg.lab_len, input.size() - off);
            w.slide(encoded, input.subspan(off, chunk));
            off += chunk;
        };
        SuffixArray sa = build_suffix_array(w.dictionary());
        refill(0);
        while (w.lab_fill() > 0) {
            encode_batch_over_sa(w, sa, cfg, res.tokens);
            const std::vector<std::uint8_t> lab_copy(w.lab().begin(), w.lab().end());
            refill(w.lab_fill());
            if (w.lab_fill() > 0)  // no point maintaining the array past the end
                sa = update_sliding_sa(sa, lab_copy, w.dictionary());
        }
    }
    res.stats.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    res.stats.output_bits = total_bit_cost(res.tokens, cfg);
    return res;
}

EncodeResult encode_a3(std::span<const std::uint8_t> input, const EncoderConfig& cfg) {
    require_algorithm(cfg, Algorithm::A3);
    EncodeResult res;
    res.stats.input_bytes = input.size();
    res.stats.structure_bytes = memory_report(cfg).allocated_bytes;
    const auto t0 = Clock::now();
    if (input.size() > cfg.dict_len) {
        const std::uint32_t m = cfg.dict_len;
        SlidingWindow w(input.first(m), cfg.lab_len);
        std::uint64_t off = m;
        auto refill = [&](std::uint32_t encoded) {
            const std::uint64_t chunk = std::min<std::uint64_t>(cfg.lab_len, input.size() - off);
            w.slide(encoded, input.subspan(off, chunk));
            off += chunk;
        };
        refill(0);
        while (w.lab_fill() > 0) {
            const auto win = w.window();
            const SuffixArray sa = build_suffix_array(win);
            const RankArray rk = build_rank(sa);
            const LcpArray lcp = build_lcp(win, sa, rk);
            const auto lab = w.lab();
            const std::uint32_t fill = w.lab_fill();
            std::uint32_t i = 0;
            while (i < fill) {
                const std::uint32_t r = rk.r[m + i];
                std::uint32_t best_pos = 0, best_len = 0;
                // a neighbor is usable only if it points into the dictionary
                // area; its length comes from the adjacent LCP bound and is
                // re-verified by direct comparison, never crossing into the
                // look-ahead
                auto consider = [&](std::uint32_t pos, std::uint32_t bound) {
                    if (pos >= m) return;
                    const std::uint32_t cap = std::min({bound, fill - i, m - pos});
                    std::uint32_t len = 0;
                    while (len < cap && win[pos + len] == win[m + i + len]) ++len;
                    if (len > best_len) {
                        best_pos = pos;
                        best_len = len;
                    }
                };
                if (r > 0) consider(sa.p[r - 1], lcp.l[r]);  // predecessor wins length ties
                if (r + 1 < sa.p.size()) consider(sa.p[r + 1], lcp.l[r + 1]);
                if (cfg.a3_extended_scan) {
                    // walk outward past look-ahead-area entries, tightening the
                    // usable length with a running LCP minimum
                    if (r > 0) {
                        std::uint32_t bound = lcp.l[r];
                        for (std::uint32_t j = r - 1; bound > best_len; --j) {
                            consider(sa.p[j], bound);
                            if (j == 0) break;
                            bound = std::min<std::uint32_t>(bound, lcp.l[j]);
                        }
                    }
                    if (r + 1 < sa.p.size()) {
                        std::uint32_t bound = lcp.l[r + 1];
                        for (std::uint32_t j = r + 1; bound > best_len;) {
                            consider(sa.p[j], bound);
                            if (++j >= sa.p.size()) break;
                            bound = std::min<std::uint32_t>(bound, lcp.l[j]);
                        }
                    }
                }
                const Emission e = plan_emission(best_pos, best_len, lab, i, cfg);
                res.tokens.push_back(e.token);
                i += e.coverage;
            }
            refill(fill);
        }
    }
    res.stats.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    res.stats.output_bits = total_bit_cost(res.tokens, cfg);
    return res;
}

EncodeResult encode_bt(std::span<const std::uint8_t> input, const EncoderConfig& cfg) {
    require_algorithm(cfg, Algorithm::BT);
    EncodeResult res;
    res.stats.input_bytes = input.size();
    res.stats.structure_bytes = memory_report(cfg).allocated_bytes;
    const auto t0 = Clock::now();
    if (input.size() > cfg.dict_len) {
        const std::uint32_t m = cfg.dict_len;
        const std::uint32_t n = cfg.lab_len;
        BtDictionary tree(input, m, n);
        std::uint64_t q = m;
        while (q < input.size()) {
            const auto fill = static_cast<std::uint32_t>(
                std::min<std::uint64_t>(n, input.size() - q));
            const auto lab = input.subspan(q, fill);
            const BtDictionary::Best best = tree.find(q, fill);
            std::uint32_t cand_pos = 0, cand_len = 0;
            if (best.len > 0) {
                cand_pos = static_cast<std::uint32_t>(best.pos - (q - m));
                cand_len = best.len;
            }
            const Emission e = plan_emission(cand_pos, cand_len, lab, 0, cfg);
            res.tokens.push_back(e.token);
            // the tree dictionary advances token by token, not batch by batch
            for (std::uint32_t j = 0; j < e.coverage; ++j) tree.insert(q + j);
            for (std::uint32_t j = 0; j < e.coverage; ++j) tree.erase(q - m + j);
            q += e.coverage;
            tree.advance(q);
        }
    }
    res.stats.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    res.stats.output_bits = total_bit_cost(res.tokens, cfg);
    return res;
}

EncodeResult encode(std::span<const std::uint8_t> input, const EncoderConfig& cfg) {
    cfg.validate();
    switch (cfg.algorithm) {
    case Algorithm::A1: return encode_a1(input, cfg);
    case Algorithm::A2: return encode_a2(input, cfg);
    case Algorithm::A3: return encode_a3(input, cfg);
    case Algorithm::BT: return encode_bt(input, cfg);
    }
    throw ContractViolation("unknown algorithm");
}

CompressOutput compress(std::span<const std::uint8_t> input, const EncoderConfig& cfg) {
    EncodeResult res = encode(input, cfg);
    BitWriter writer;
    write_tokens(res.tokens, cfg, writer);
    const std::vector<std::uint8_t> payload = writer.finish();
    const ContainerHeader header = ContainerHeader::for_input(cfg, input.size());
    CompressOutput out;
    out.container = write_container(header, input.first(header.dict_stored_len), payload);
    out.stats = res.stats;
    return out;
}

}  // namespace salz
