#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "salz/core.hpp"

namespace salz {

struct EncodeStats {
    std::uint64_t input_bytes = 0;
    std::uint64_t output_bits = 0;  // sum of token_bit_cost over all tokens
    double elapsed_s = 0.0;         // encode loop only, excludes I/O
    std::uint64_t structure_bytes = 0;
};

struct EncodeResult {
    std::vector<Token> tokens;
    EncodeStats stats;
};

// Search-structure footprint for a configuration. nominal_bytes follows the
// published bookkeeping arithmetic; allocated_bytes is what the structures
// actually occupy. The two agree for A1/A2 (window + one dictionary-sized
// suffix array); they differ for A3 (suffix and LCP arrays really span the
// whole window) and BT (the node pool really covers dictionary, look-ahead
// and one spare slot).
struct MemoryReport {
    std::uint64_t nominal_bytes = 0;
    std::uint64_t allocated_bytes = 0;
};

MemoryReport memory_report(const EncoderConfig& cfg);

// The four encoders. All consume the first min(dict_len, |input|) bytes as
// the starting dictionary (stored raw in the container, never tokenized) and
// emit tokens for the rest. A1 rebuilds the dictionary suffix array for every
// look-ahead batch; A2 builds it once and maintains it incrementally; A3
// builds a suffix + LCP array over the whole window per batch and only
// inspects the two rank neighbors of each look-ahead position; BT keeps the
// dictionary in a binary search tree and slides after every token instead of
// after every batch.
EncodeResult encode_a1(std::span<const std::uint8_t> input, const EncoderConfig& cfg);
EncodeResult encode_a2(std::span<const std::uint8_t> input, const EncoderConfig& cfg);
EncodeResult encode_a3(std::span<const std::uint8_t> input, const EncoderConfig& cfg);
EncodeResult encode_bt(std::span<const std::uint8_t> input, const EncoderConfig& cfg);

// Dispatch on cfg.algorithm.
EncodeResult encode(std::span<const std::uint8_t> input, const EncoderConfig& cfg);

struct CompressOutput {
    std::vector<std::uint8_t> container;
    EncodeStats stats;
};

// encode + serialize into a SALZ container.
CompressOutput compress(std::span<const std::uint8_t> input, const EncoderConfig& cfg);

}  // namespace salz
