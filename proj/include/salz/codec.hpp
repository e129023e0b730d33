#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "salz/core.hpp"

namespace salz {

// MSB-first bit packer; the final partial byte is zero-padded by finish().
class BitWriter {
public:
    // width <= 32; value must fit in width bits
    void put(std::uint32_t value, std::uint32_t width);
    std::uint64_t bit_count() const { return total_bits_; }
    std::vector<std::uint8_t> finish();

private:
    std::vector<std::uint8_t> out_;
    std::uint64_t acc_ = 0;
    std::uint32_t pending_ = 0;  // bits buffered in acc_
    std::uint64_t total_bits_ = 0;
};

// MSB-first bit reader over a fixed buffer; throws CorruptStream (with the bit
// offset) when asked for more bits than remain.
class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint32_t get(std::uint32_t width);
    std::uint64_t bit_offset() const { return pos_; }
    std::uint64_t bits_left() const { return data_.size() * 8 - pos_; }

private:
    std::span<const std::uint8_t> data_;
    std::uint64_t pos_ = 0;
};

// Serialize tokens under the configured format, returning the bit count:
// LZSS literal = 0 + symbol, LZSS match = 1 + pos + (len-1), LZ77 triple =
// pos + len + symbol (len stored raw, pos = len = 0 for "no match"). Field
// overflow throws ContractViolation.
std::uint64_t write_tokens(std::span<const Token> tokens, const EncoderConfig& cfg, BitWriter& out);

// Exact inverse of write_tokens; stops once the decoded tokens cover
// expected_bytes of output and rejects streams whose final token overshoots.
std::vector<Token> read_tokens(BitReader& in, const EncoderConfig& cfg,
                               std::uint64_t expected_bytes);

inline constexpr std::uint8_t container_version = 1;
inline constexpr std::size_t container_header_size = 4 + 1 + 1 + 1 + 1 + 1 + 1 + 8 + 4;

// Fixed-layout container header: magic "SALZ", version, algorithm byte,
// token-format byte, log2(dict_len), log2(lab_len), min_match, original
// length (8-byte LE), stored dictionary length (4-byte LE), then the raw
// dictionary bytes and the token payload.
struct ContainerHeader {
    Algorithm algorithm = Algorithm::A1;
    TokenFormat token_format = TokenFormat::LZSS;
    std::uint8_t log2_dict = 8;
    std::uint8_t log2_lab = 5;
    std::uint8_t min_match = 2;
    std::uint64_t original_len = 0;
    std::uint32_t dict_stored_len = 0;

    static ContainerHeader for_input(const EncoderConfig& cfg, std::uint64_t original_len);

    // Rebuild the encoder configuration (the parse mode is not part of the
    // format; it only affects how the encoder chose matches).
    EncoderConfig config() const;
};

struct ParsedContainer {
    ContainerHeader header;
    std::span<const std::uint8_t> dictionary;
    std::span<const std::uint8_t> payload;
};

std::vector<std::uint8_t> write_container(const ContainerHeader& header,
                                          std::span<const std::uint8_t> dictionary,
                                          std::span<const std::uint8_t> payload);

// Validates magic, version, field ranges and the stored-dictionary length;
// any inconsistency throws CorruptStream.
ParsedContainer parse_container(std::span<const std::uint8_t> container);

// Compression ratio in bits per byte; zero input bytes is a contract error.
double bpb(std::uint64_t input_bytes, std::uint64_t output_bits);

}  // namespace salz
