#include "salz/decoder.hpp"

namespace salz {

std::vector<std::uint8_t> decode_tokens(std::span<const std::uint8_t> dictionary,
                                        std::span<const Token> tokens, const EncoderConfig& cfg,
                                        bool per_token_slide, std::uint64_t expected_bytes) {
    cfg.validate();
    if (expected_bytes == 0) {
        if (!tokens.empty())
            throw CorruptStream("tokens present but no output expected");
        return {};
    }
    if (dictionary.size() != cfg.dict_len)
        throw CorruptStream("starting dictionary does not fill the window");

    std::vector<std::uint8_t> out;
    out.reserve(expected_bytes);
    std::vector<std::uint8_t> w(dictionary.begin(), dictionary.end());
    std::vector<std::uint8_t> batch;

    auto append_token = [&](const Token& t) {
        if (t.kind == Token::Kind::Literal) {
            batch.push_back(t.sym);
            return;
        }
        if (t.len > 0) {
            if (t.pos + t.len > cfg.dict_len)
                throw CorruptStream("match reaches outside the dictionary");
            batch.insert(batch.end(), w.begin() + t.pos, w.begin() + t.pos + t.len);
        }
        if (t.kind == Token::Kind::Triple) batch.push_back(t.sym);
    };

    std::size_t ti = 0;
    std::uint64_t remaining = expected_bytes;
    while (remaining > 0) {
        batch.clear();
        if (per_token_slide) {
            if (ti >= tokens.size())
                throw CorruptStream("token stream ends before the declared output length");
            append_token(tokens[ti++]);
            if (batch.size() > remaining)
                throw CorruptStream("token stream overshoots the declared output length");
        } else {
            // the encoder slid once per full look-ahead batch, so token runs
            // must tile the output in lab_len-sized chunks (short final chunk)
            const std::uint64_t target = std::min<std::uint64_t>(cfg.lab_len, remaining);
            while (batch.size() < target) {
                if (ti >= tokens.size())
                    throw CorruptStream("token stream ends before the declared output length");
                append_token(tokens[ti++]);
            }
            if (batch.size() != target)
                throw CorruptStream("token run crosses a window boundary");
        }
        out.insert(out.end(), batch.begin(), batch.end());
        remaining -= batch.size();
        w.erase(w.begin(), w.begin() + batch.size());
        w.insert(w.end(), batch.begin(), batch.end());
    }
    if (ti != tokens.size())
        throw CorruptStream("trailing tokens after the declared output length");
    return out;
}

std::vector<std::uint8_t> decode(std::span<const std::uint8_t> container) {
    const ParsedContainer parsed = parse_container(container);
    const EncoderConfig cfg = parsed.header.config();

    std::vector<std::uint8_t> out(parsed.dictionary.begin(), parsed.dictionary.end());
    const std::uint64_t expected = parsed.header.original_len - parsed.header.dict_stored_len;
    if (expected == 0) {
        if (out.size() != parsed.header.original_len)
            throw CorruptStream("output length mismatch");
        return out;
    }

    BitReader reader(parsed.payload);
    const std::vector<Token> tokens = read_tokens(reader, cfg, expected);
    const bool per_token = parsed.header.algorithm == Algorithm::BT;
    const std::vector<std::uint8_t> tail =
        decode_tokens(parsed.dictionary, tokens, cfg, per_token, expected);
    out.insert(out.end(), tail.begin(), tail.end());
    if (out.size() != parsed.header.original_len)
        throw CorruptStream("output length mismatch");
    return out;
}

}  // namespace salz
