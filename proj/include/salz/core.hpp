#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace salz {

// Error taxonomy: ContractViolation = caller bug (bad config, bad arguments),
// CorruptStream = malformed compressed data, IoError = filesystem trouble.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContractViolation : public Error {
public:
    using Error::Error;
};

class CorruptStream : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

enum class Algorithm : std::uint8_t { A1 = 0, A2 = 1, A3 = 2, BT = 3 };
enum class TokenFormat : std::uint8_t { LZ77 = 0, LZSS = 1 };
enum class ParseMode : std::uint8_t { GreedyLongest = 0, FirstMatch = 1 };

const char* to_string(Algorithm a);
const char* to_string(TokenFormat f);
const char* to_string(ParseMode p);

// Suffix indices are stored as 16-bit values, so the whole window (dictionary
// plus look-ahead buffer) must fit into 65536 bytes.
inline constexpr std::uint32_t max_window_len = 65536;
// min_match travels in a single container-header byte.
inline constexpr std::uint32_t max_min_match = 255;

// Window geometry and token layout shared by the encoders, the decoder and the
// codec. dict_len and lab_len must be powers of two so that pos/len fields
// have exact bit widths.
struct EncoderConfig {
    std::uint32_t dict_len = 256;
    std::uint32_t lab_len = 32;
    Algorithm algorithm = Algorithm::A1;
    TokenFormat token_format = TokenFormat::LZSS;
    ParseMode parse = ParseMode::GreedyLongest;
    std::uint32_t min_match = 2;
    // When set, A3 walks outward past neighbors that fall into the look-ahead
    // area, tightening the match bound with a running LCP minimum.
    bool a3_extended_scan = false;

    void validate() const;

    std::uint32_t pos_bits() const;  // log2(dict_len)
    std::uint32_t len_bits() const;  // log2(lab_len)
    std::uint32_t window_len() const { return dict_len + lab_len; }

    bool operator==(const EncoderConfig&) const = default;
};

// Literal and Match are the LZSS token shapes; Triple is the LZ77 shape
// (pos = len = 0 signals "no match", the symbol alone carries the byte).
struct Token {
    enum class Kind : std::uint8_t { Literal, Match, Triple };

    Kind kind = Kind::Literal;
    std::uint16_t pos = 0;
    std::uint16_t len = 0;
    std::uint8_t sym = 0;

    static Token literal(std::uint8_t sym) { return {Kind::Literal, 0, 0, sym}; }
    static Token match(std::uint16_t pos, std::uint16_t len) { return {Kind::Match, pos, len, 0}; }
    static Token triple(std::uint16_t pos, std::uint16_t len, std::uint8_t sym) {
        return {Kind::Triple, pos, len, sym};
    }

    bool operator==(const Token&) const = default;
};

// Serialized size of a token in bits: LZSS literal = flag + byte, LZSS match =
// flag + pos + len, LZ77 triple = pos + len + byte. Throws ContractViolation
// when the token kind does not belong to the configured format.
std::uint32_t token_bit_cost(const Token& t, const EncoderConfig& cfg);

// Number of input bytes the token advances the cursor by.
std::uint64_t token_coverage(const Token& t);

// Fixed-length dictionary followed by a look-ahead buffer that may be only
// partially filled near the end of the input.
class SlidingWindow {
public:
    SlidingWindow(std::span<const std::uint8_t> dict_init, std::uint32_t lab_cap);

    std::uint32_t dict_len() const { return dict_len_; }
    std::uint32_t lab_cap() const { return lab_cap_; }
    std::uint32_t lab_fill() const { return lab_fill_; }

    std::span<const std::uint8_t> dictionary() const { return {buf_.data(), dict_len_}; }
    std::span<const std::uint8_t> lab() const { return {buf_.data() + dict_len_, lab_fill_}; }
    std::span<const std::uint8_t> window() const { return {buf_.data(), dict_len_ + lab_fill_}; }

    // Shift the window left by encoded_len: the oldest dictionary bytes slide
    // out, the first encoded_len look-ahead bytes slide into the dictionary,
    // and next_bytes are appended to the look-ahead buffer.
    void slide(std::uint32_t encoded_len, std::span<const std::uint8_t> next_bytes);

private:
    std::vector<std::uint8_t> buf_;
    std::uint32_t dict_len_ = 0;
    std::uint32_t lab_cap_ = 0;
    std::uint32_t lab_fill_ = 0;
};

}  // namespace salz
