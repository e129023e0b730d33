#include "salz/codec.hpp"

#include <algorithm>
#include <cstring>
#include <string>

namespace salz {

namespace {

constexpr char container_magic[4] = {'S', 'A', 'L', 'Z'};

}  // namespace

void BitWriter::put(std::uint32_t value, std::uint32_t width) {
    if (width > 32)
        throw ContractViolation("bit field wider than 32");
    if (width < 32 && (value >> width) != 0)
        throw ContractViolation("value does not fit the bit field");
    acc_ = (acc_ << width) | value;
    pending_ += width;
    total_bits_ += width;
    while (pending_ >= 8) {
        pending_ -= 8;
        out_.push_back(static_cast<std::uint8_t>(acc_ >> pending_));
    }
    acc_ &= pending_ ? (std::uint64_t{1} << pending_) - 1 : 0;
}

std::vector<std::uint8_t> BitWriter::finish() {
    if (pending_ > 0) {
        out_.push_back(static_cast<std::uint8_t>(acc_ << (8 - pending_)));
        acc_ = 0;
        pending_ = 0;
    }
    return std::move(out_);
}

std::uint32_t BitReader::get(std::uint32_t width) {
    if (width > 32)
        throw ContractViolation("bit field wider than 32");
    if (width > bits_left())
        throw CorruptStream("bit stream truncated at bit " + std::to_string(pos_));
    std::uint32_t value = 0;
    for (std::uint32_t got = 0; got < width;) {
        const std::size_t byte = pos_ >> 3;
        const std::uint32_t used = pos_ & 7;
        const std::uint32_t take = std::min(8 - used, width - got);
        const std::uint32_t chunk =
            (static_cast<std::uint32_t>(data_[byte]) >> (8 - used - take)) & ((1u << take) - 1);
        value = (value << take) | chunk;
        pos_ += take;
        got += take;
    }
    return value;
}

std::uint64_t write_tokens(std::span<const Token> tokens, const EncoderConfig& cfg,
                           BitWriter& out) {
    cfg.validate();
    const std::uint64_t before = out.bit_count();
    for (const Token& t : tokens) {
        token_bit_cost(t, cfg);  // rejects kinds foreign to the format
        switch (t.kind) {
        case Token::Kind::Literal:
            out.put(0, 1);
            out.put(t.sym, 8);
            break;
        case Token::Kind::Match:
            if (t.pos >= cfg.dict_len || t.len < cfg.min_match || t.len > cfg.lab_len)
                throw ContractViolation("match token fields out of range");
            out.put(1, 1);
            out.put(t.pos, cfg.pos_bits());
            out.put(t.len - 1, cfg.len_bits());
            break;
        case Token::Kind::Triple:
            if (t.len == 0 && t.pos != 0)
                throw ContractViolation("no-match triple must carry pos = 0");
            if (t.len != 0 && (t.pos >= cfg.dict_len || t.len < cfg.min_match ||
                               t.len >= cfg.lab_len))
                throw ContractViolation("triple token fields out of range");
            out.put(t.pos, cfg.pos_bits());
            out.put(t.len, cfg.len_bits());
            out.put(t.sym, 8);
            break;
        }
    }
    return out.bit_count() - before;
}

std::vector<Token> read_tokens(BitReader& in, const EncoderConfig& cfg,
                               std::uint64_t expected_bytes) {
    cfg.validate();
    std::vector<Token> out;
    std::uint64_t covered = 0;
    while (covered < expected_bytes) {
        Token t;
        if (cfg.token_format == TokenFormat::LZSS) {
            if (in.get(1)) {
                const auto pos = static_cast<std::uint16_t>(in.get(cfg.pos_bits()));
                const auto len = static_cast<std::uint16_t>(in.get(cfg.len_bits()) + 1);
                t = Token::match(pos, len);
            } else {
                t = Token::literal(static_cast<std::uint8_t>(in.get(8)));
            }
        } else {
            const auto pos = static_cast<std::uint16_t>(in.get(cfg.pos_bits()));
            const auto len = static_cast<std::uint16_t>(in.get(cfg.len_bits()));
            const auto sym = static_cast<std::uint8_t>(in.get(8));
            if (len == 0 && pos != 0)
                throw CorruptStream("no-match triple carries a position");
            t = Token::triple(pos, len, sym);
        }
        covered += token_coverage(t);
        out.push_back(t);
    }
    if (covered != expected_bytes)
        throw CorruptStream("token stream overshoots the declared output length");
    return out;
}

ContainerHeader ContainerHeader::for_input(const EncoderConfig& cfg, std::uint64_t original_len) {
    cfg.validate();
    ContainerHeader h;
    h.algorithm = cfg.algorithm;
    h.token_format = cfg.token_format;
    h.log2_dict = static_cast<std::uint8_t>(cfg.pos_bits());
    h.log2_lab = static_cast<std::uint8_t>(cfg.len_bits());
    h.min_match = static_cast<std::uint8_t>(cfg.min_match);
    h.original_len = original_len;
    h.dict_stored_len = static_cast<std::uint32_t>(
        std::min<std::uint64_t>(cfg.dict_len, original_len));
    return h;
}

EncoderConfig ContainerHeader::config() const {
    EncoderConfig cfg;
    cfg.dict_len = 1u << log2_dict;
    cfg.lab_len = 1u << log2_lab;
    cfg.algorithm = algorithm;
    cfg.token_format = token_format;
    cfg.min_match = min_match;
    return cfg;
}

namespace {

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, unsigned bytes) {
    for (unsigned i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t off, unsigned bytes) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(in[off + i]) << (8 * i);
    return v;
}

}  // namespace

std::vector<std::uint8_t> write_container(const ContainerHeader& header,
                                          std::span<const std::uint8_t> dictionary,
                                          std::span<const std::uint8_t> payload) {
    if (dictionary.size() != header.dict_stored_len)
        throw ContractViolation("stored dictionary length mismatch");
    std::vector<std::uint8_t> out;
    out.reserve(container_header_size + dictionary.size() + payload.size());
    out.insert(out.end(), container_magic, container_magic + 4);
    out.push_back(container_version);
    out.push_back(static_cast<std::uint8_t>(header.algorithm));
    out.push_back(static_cast<std::uint8_t>(header.token_format));
    out.push_back(header.log2_dict);
    out.push_back(header.log2_lab);
    out.push_back(header.min_match);
    put_le(out, header.original_len, 8);
    put_le(out, header.dict_stored_len, 4);
    out.insert(out.end(), dictionary.begin(), dictionary.end());
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

ParsedContainer parse_container(std::span<const std::uint8_t> container) {
    if (container.size() < container_header_size)
        throw CorruptStream("container shorter than its header");
    if (std::memcmp(container.data(), container_magic, 4) != 0)
        throw CorruptStream("bad magic");
    if (container[4] != container_version)
        throw CorruptStream("unsupported container version");

    ContainerHeader h;
    if (container[5] > static_cast<std::uint8_t>(Algorithm::BT))
        throw CorruptStream("unknown algorithm byte");
    h.algorithm = static_cast<Algorithm>(container[5]);
    if (container[6] > 1)
        throw CorruptStream("unknown token format byte");
    h.token_format = static_cast<TokenFormat>(container[6]);
    h.log2_dict = container[7];
    h.log2_lab = container[8];
    h.min_match = container[9];
    h.original_len = get_le(container, 10, 8);
    h.dict_stored_len = static_cast<std::uint32_t>(get_le(container, 18, 4));

    if (h.log2_dict > 15 || h.log2_lab > h.log2_dict)
        throw CorruptStream("window description out of range");
    try {
        h.config().validate();
    } catch (const ContractViolation& e) {
        throw CorruptStream(std::string("invalid header fields: ") + e.what());
    }
    const std::uint64_t want_dict =
        std::min<std::uint64_t>(std::uint64_t{1} << h.log2_dict, h.original_len);
    if (h.dict_stored_len != want_dict)
        throw CorruptStream("stored dictionary length disagrees with the header");
    if (container.size() < container_header_size + h.dict_stored_len)
        throw CorruptStream("container truncated inside the stored dictionary");

    ParsedContainer parsed;
    parsed.header = h;
    parsed.dictionary = container.subspan(container_header_size, h.dict_stored_len);
    parsed.payload = container.subspan(container_header_size + h.dict_stored_len);
    return parsed;
}

double bpb(std::uint64_t input_bytes, std::uint64_t output_bits) {
    if (input_bytes == 0)
        throw ContractViolation("bpb of zero input bytes");
    return static_cast<double>(output_bits) / static_cast<double>(input_bytes);
}

}  // namespace salz
