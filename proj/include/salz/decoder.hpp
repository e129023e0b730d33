#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "salz/codec.hpp"
#include "salz/core.hpp"

namespace salz {

// Replay a token stream against the given starting dictionary. The window
// update cadence must mirror the encoder's: per_token_slide = true replays a
// stream whose encoder slid after every token (BT), false one that slid after
// each full look-ahead batch (A1/A2/A3). Throws CorruptStream on out-of-range
// matches or when the tokens do not line up with the expected output length.
std::vector<std::uint8_t> decode_tokens(std::span<const std::uint8_t> dictionary,
                                        std::span<const Token> tokens, const EncoderConfig& cfg,
                                        bool per_token_slide, std::uint64_t expected_bytes);

// Decode a whole SALZ container back to the original bytes.
std::vector<std::uint8_t> decode(std::span<const std::uint8_t> container);

}  // namespace salz
