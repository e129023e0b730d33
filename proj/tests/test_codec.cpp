#include "salz/codec.hpp"

#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace salz;

TEST_CASE("bit writer packs MSB first and zero-pads the tail") {
    BitWriter bw;
    bw.put(0b101, 3);
    bw.put(0b1, 1);
    bw.put(0xAB, 8);
    CHECK(bw.bit_count() == 12);
    const auto bytes = bw.finish();
    REQUIRE(bytes.size() == 2);
    CHECK(bytes[0] == 0b10111010);  // 101 1 1010(1011 -> high nibble of 0xAB)
    CHECK(bytes[1] == 0b10110000);  // low nibble 1011, then zero padding
}

TEST_CASE("bit writer rejects oversized fields") {
    BitWriter bw;
    CHECK_THROWS_AS(bw.put(4, 2), ContractViolation);
    CHECK_THROWS_AS(bw.put(0, 33), ContractViolation);
    CHECK_NOTHROW(bw.put(0xFFFFFFFFu, 32));
}

TEST_CASE("bit reader round-trips the writer and reports truncation") {
    BitWriter bw;
    bw.put(0x3, 2);
    bw.put(0x1234, 16);
    bw.put(0x1F, 5);
    const auto bytes = bw.finish();

    BitReader br(bytes);
    CHECK(br.get(2) == 0x3);
    CHECK(br.get(16) == 0x1234);
    CHECK(br.get(5) == 0x1F);
    CHECK(br.bit_offset() == 23);
    CHECK(br.get(1) == 0);  // padding bit
    CHECK_THROWS_AS(br.get(8), CorruptStream);
}

TEST_CASE("lzss token bit patterns") {
    EncoderConfig cfg;  // (256, 32), lzss

    SUBCASE("literal 'A' is a flag bit plus the byte") {
        BitWriter bw;
        const std::vector<Token> tokens = {Token::literal('A')};
        CHECK(write_tokens(tokens, cfg, bw) == 9);
        const auto bytes = bw.finish();
        REQUIRE(bytes.size() == 2);
        CHECK(bytes[0] == 0x20);  // 0 0100000
        CHECK(bytes[1] == 0x80);  // 1 + 7 pad bits
    }
    SUBCASE("match (17,4) packs pos and len-1") {
        BitWriter bw;
        const std::vector<Token> tokens = {Token::match(17, 4)};
        CHECK(write_tokens(tokens, cfg, bw) == 14);
        const auto bytes = bw.finish();
        REQUIRE(bytes.size() == 2);
        CHECK(bytes[0] == 0x88);  // 1 0001000
        CHECK(bytes[1] == 0x8C);  // 1 00011 + 2 pad bits
    }
    SUBCASE("the match pattern reads back") {
        const std::vector<std::uint8_t> bytes = {0x88, 0x8C};
        BitReader br(bytes);
        const auto tokens = read_tokens(br, cfg, 4);
        REQUIRE(tokens.size() == 1);
        CHECK(tokens[0] == Token::match(17, 4));
    }
}

TEST_CASE("token field validation on write") {
    EncoderConfig cfg;  // (256, 32), min_match 2

    BitWriter bw;
    SUBCASE("match pos past the dictionary") {
        const std::vector<Token> t = {Token::match(256, 4)};
        CHECK_THROWS_AS(write_tokens(t, cfg, bw), ContractViolation);
    }
    SUBCASE("match longer than the look-ahead") {
        const std::vector<Token> t = {Token::match(0, 33)};
        CHECK_THROWS_AS(write_tokens(t, cfg, bw), ContractViolation);
    }
    SUBCASE("match below min_match") {
        const std::vector<Token> t = {Token::match(0, 1)};
        CHECK_THROWS_AS(write_tokens(t, cfg, bw), ContractViolation);
    }
    SUBCASE("no-match triple with a position") {
        cfg.token_format = TokenFormat::LZ77;
        const std::vector<Token> t = {Token::triple(3, 0, 'x')};
        CHECK_THROWS_AS(write_tokens(t, cfg, bw), ContractViolation);
    }
    SUBCASE("triple length must leave room for the break symbol") {
        cfg.token_format = TokenFormat::LZ77;
        const std::vector<Token> t = {Token::triple(0, 32, 'x')};
        CHECK_THROWS_AS(write_tokens(t, cfg, bw), ContractViolation);
    }
}

TEST_CASE("read_tokens rejects malformed streams") {
    EncoderConfig cfg;

    SUBCASE("empty payload with zero expected bytes") {
        BitReader br({});
        CHECK(read_tokens(br, cfg, 0).empty());
    }
    SUBCASE("no-match triple carrying a position") {
        cfg.token_format = TokenFormat::LZ77;
        BitWriter bw;
        bw.put(3, cfg.pos_bits());
        bw.put(0, cfg.len_bits());
        bw.put('x', 8);
        const auto bytes = bw.finish();
        BitReader br(bytes);
        CHECK_THROWS_AS(read_tokens(br, cfg, 1), CorruptStream);
    }
    SUBCASE("truncated stream") {
        const std::vector<std::uint8_t> bytes = {0x88};  // match flag, half a pos field
        BitReader br(bytes);
        CHECK_THROWS_AS(read_tokens(br, cfg, 4), CorruptStream);
    }
    SUBCASE("final token overshooting the expected length") {
        BitWriter bw;
        const std::vector<Token> t = {Token::match(0, 4)};
        write_tokens(t, cfg, bw);
        const auto bytes = bw.finish();
        BitReader br(bytes);
        CHECK_THROWS_AS(read_tokens(br, cfg, 3), CorruptStream);
    }
}

TEST_CASE("write/read tokens are inverse on random sequences") {
    std::mt19937 rng(7);
    for (int it = 0; it < 2000; ++it) {
        EncoderConfig cfg;
        cfg.dict_len = 1u << (4 + rng() % 7);
        cfg.lab_len = std::min(cfg.dict_len, 1u << (2 + rng() % 6));
        cfg.token_format = it % 2 ? TokenFormat::LZSS : TokenFormat::LZ77;

        std::vector<Token> tokens;
        const int count = 1 + rng() % 20;
        for (int i = 0; i < count; ++i) {
            const auto pos = static_cast<std::uint16_t>(rng() % cfg.dict_len);
            if (cfg.token_format == TokenFormat::LZSS) {
                if (rng() % 2) {
                    tokens.push_back(Token::literal(static_cast<std::uint8_t>(rng())));
                } else {
                    const auto len = static_cast<std::uint16_t>(
                        cfg.min_match + rng() % (cfg.lab_len - cfg.min_match + 1));
                    tokens.push_back(Token::match(pos, len));
                }
            } else {
                if (rng() % 2 || cfg.lab_len <= cfg.min_match) {
                    tokens.push_back(Token::triple(0, 0, static_cast<std::uint8_t>(rng())));
                } else {
                    const auto len = static_cast<std::uint16_t>(
                        cfg.min_match + rng() % (cfg.lab_len - cfg.min_match));
                    tokens.push_back(Token::triple(pos, len, static_cast<std::uint8_t>(rng())));
                }
            }
        }

        std::uint64_t covered = 0;
        for (const auto& t : tokens) covered += token_coverage(t);

        BitWriter bw;
        const auto bits = write_tokens(tokens, cfg, bw);
        const auto bytes = bw.finish();
        CHECK(bytes.size() == (bits + 7) / 8);

        BitReader br(bytes);
        const auto back = read_tokens(br, cfg, covered);
        REQUIRE(back.size() == tokens.size());
        for (std::size_t i = 0; i < tokens.size(); ++i) REQUIRE(back[i] == tokens[i]);
    }
}

TEST_CASE("container header round-trips") {
    EncoderConfig cfg;
    cfg.dict_len = 1024;
    cfg.lab_len = 128;
    cfg.algorithm = Algorithm::A3;
    cfg.token_format = TokenFormat::LZ77;
    cfg.min_match = 3;

    const auto header = ContainerHeader::for_input(cfg, 50000);
    CHECK(header.dict_stored_len == 1024);

    const std::vector<std::uint8_t> dict(1024, 'd');
    const std::vector<std::uint8_t> payload = {1, 2, 3};
    const auto container = write_container(header, dict, payload);
    CHECK(container.size() == container_header_size + 1024 + 3);

    const auto parsed = parse_container(container);
    CHECK(parsed.header.algorithm == Algorithm::A3);
    CHECK(parsed.header.token_format == TokenFormat::LZ77);
    CHECK(parsed.header.log2_dict == 10);
    CHECK(parsed.header.log2_lab == 7);
    CHECK(parsed.header.min_match == 3);
    CHECK(parsed.header.original_len == 50000);
    CHECK(parsed.dictionary.size() == 1024);
    CHECK(parsed.payload.size() == 3);
    CHECK(parsed.payload[2] == 3);

    const auto cfg2 = parsed.header.config();
    CHECK(cfg2.dict_len == cfg.dict_len);
    CHECK(cfg2.lab_len == cfg.lab_len);
    CHECK(cfg2.token_format == cfg.token_format);
    CHECK(cfg2.min_match == cfg.min_match);
}

TEST_CASE("short inputs store a truncated dictionary") {
    EncoderConfig cfg;  // dict 256
    const auto header = ContainerHeader::for_input(cfg, 100);
    CHECK(header.dict_stored_len == 100);
    CHECK(header.original_len == 100);
}

TEST_CASE("container parsing rejects damage deterministically") {
    EncoderConfig cfg;
    const std::vector<std::uint8_t> dict(256, 'd');
    const auto container = write_container(ContainerHeader::for_input(cfg, 256), dict, {});

    SUBCASE("bad magic") {
        auto c = container;
        c[0] = 'X';
        CHECK_THROWS_AS(parse_container(c), CorruptStream);
    }
    SUBCASE("bad version") {
        auto c = container;
        c[4] = 9;
        CHECK_THROWS_AS(parse_container(c), CorruptStream);
    }
    SUBCASE("unknown algorithm byte") {
        auto c = container;
        c[5] = 17;
        CHECK_THROWS_AS(parse_container(c), CorruptStream);
    }
    SUBCASE("unknown format byte") {
        auto c = container;
        c[6] = 2;
        CHECK_THROWS_AS(parse_container(c), CorruptStream);
    }
    SUBCASE("window description out of range") {
        auto c = container;
        c[7] = 31;
        CHECK_THROWS_AS(parse_container(c), CorruptStream);
    }
    SUBCASE("look-ahead wider than the dictionary") {
        auto c = container;
        c[8] = c[7] + 1;
        CHECK_THROWS_AS(parse_container(c), CorruptStream);
    }
    SUBCASE("stored dictionary length mismatch") {
        auto c = container;
        c[18] = 0x10;
        CHECK_THROWS_AS(parse_container(c), CorruptStream);
    }
    SUBCASE("truncated inside the dictionary") {
        std::vector<std::uint8_t> c(container.begin(), container.begin() + 40);
        CHECK_THROWS_AS(parse_container(c), CorruptStream);
    }
    SUBCASE("shorter than the header") {
        std::vector<std::uint8_t> c(container.begin(), container.begin() + 10);
        CHECK_THROWS_AS(parse_container(c), CorruptStream);
    }
}

TEST_CASE("bpb is bits over bytes") {
    CHECK(bpb(11954, 11954 * 8) == doctest::Approx(8.0));
    CHECK(bpb(1000, 4000) == doctest::Approx(4.0));
    CHECK_THROWS_AS(bpb(0, 100), ContractViolation);
}
