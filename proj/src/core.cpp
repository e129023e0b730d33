#include "salz/core.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace salz {

const char* to_string(Algorithm a) {
    switch (a) {
    case Algorithm::A1: return "a1";
    case Algorithm::A2: return "a2";
    case Algorithm::A3: return "a3";
    case Algorithm::BT: return "bt";
    }
    return "?";
}

const char* to_string(TokenFormat f) {
    return f == TokenFormat::LZ77 ? "lz77" : "lzss";
}

const char* to_string(ParseMode p) {
    return p == ParseMode::GreedyLongest ? "greedy" : "first";
}

namespace {

bool is_pow2(std::uint32_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

void EncoderConfig::validate() const {
    if (!is_pow2(dict_len) || !is_pow2(lab_len))
        throw ContractViolation("dict_len and lab_len must be powers of two");
    if (lab_len > dict_len)
        throw ContractViolation("lab_len must not exceed dict_len");
    if (static_cast<std::uint64_t>(dict_len) + lab_len > max_window_len)
        throw ContractViolation("window (dict_len + lab_len) must not exceed 65536 bytes");
    if (min_match < 1 || min_match > lab_len || min_match > max_min_match)
        throw ContractViolation("min_match must lie in [1, min(lab_len, 255)]");
}

std::uint32_t EncoderConfig::pos_bits() const {
    return static_cast<std::uint32_t>(std::countr_zero(dict_len));
}

std::uint32_t EncoderConfig::len_bits() const {
    return static_cast<std::uint32_t>(std::countr_zero(lab_len));
}

std::uint32_t token_bit_cost(const Token& t, const EncoderConfig& cfg) {
    switch (t.kind) {
    case Token::Kind::Literal:
        if (cfg.token_format != TokenFormat::LZSS)
            throw ContractViolation("literal token is not representable under lz77");
        return 1 + 8;
    case Token::Kind::Match:
        if (cfg.token_format != TokenFormat::LZSS)
            throw ContractViolation("match token is not representable under lz77");
        return 1 + cfg.pos_bits() + cfg.len_bits();
    case Token::Kind::Triple:
        if (cfg.token_format != TokenFormat::LZ77)
            throw ContractViolation("triple token is not representable under lzss");
        return cfg.pos_bits() + cfg.len_bits() + 8;
    }
    throw ContractViolation("unknown token kind");
}

std::uint64_t token_coverage(const Token& t) {
    switch (t.kind) {
    case Token::Kind::Literal: return 1;
    case Token::Kind::Match: return t.len;
    case Token::Kind::Triple: return static_cast<std::uint64_t>(t.len) + 1;
    }
    throw ContractViolation("unknown token kind");
}

SlidingWindow::SlidingWindow(std::span<const std::uint8_t> dict_init, std::uint32_t lab_cap)
    : buf_(dict_init.size() + lab_cap),
      dict_len_(static_cast<std::uint32_t>(dict_init.size())),
      lab_cap_(lab_cap) {
    if (dict_init.empty())
        throw ContractViolation("sliding window needs a non-empty dictionary");
    if (dict_init.size() + lab_cap > max_window_len)
        throw ContractViolation("sliding window larger than 65536 bytes");
    std::copy(dict_init.begin(), dict_init.end(), buf_.begin());
}

void SlidingWindow::slide(std::uint32_t encoded_len, std::span<const std::uint8_t> next_bytes) {
    if (encoded_len > lab_fill_)
        throw ContractViolation("cannot slide past the filled look-ahead");
    const std::size_t keep = dict_len_ + lab_fill_ - encoded_len;
    std::memmove(buf_.data(), buf_.data() + encoded_len, keep);
    lab_fill_ -= encoded_len;
    if (next_bytes.size() > lab_cap_ - lab_fill_)
        throw ContractViolation("look-ahead refill overflows the buffer");
    std::copy(next_bytes.begin(), next_bytes.end(), buf_.begin() + dict_len_ + lab_fill_);
    lab_fill_ += static_cast<std::uint32_t>(next_bytes.size());
}

}  // namespace salz
