#ifndef ECRSE_CODEC_HPP
#define ECRSE_CODEC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ecrse/bigmath.hpp"

namespace ecrse {

// One chunk of message text as an integer: value = big-endian bytes + 2.
// byte_length remembers the exact width so leading zero bytes survive.
struct MessageBlock {
    Natural value;
    std::size_t byte_length;
};

// Splits text bytes into chunks of the widest byte count L satisfying
// 256^L + 2 <= bound, so every block value lands in [2, bound) and clears
// the degenerate messages 0 and 1. Throws BoundTooSmall below 259.
std::vector<MessageBlock> text_to_blocks(const std::string& text, const Natural& bound);

// Exact inverse of text_to_blocks. Throws MalformedBlock when a value does
// not fit its declared byte_length, InvalidUtf8 when the reassembled bytes
// are not UTF-8 (returned as an error, never as mangled text).
std::string blocks_to_text(const std::vector<MessageBlock>& blocks);

// Structural UTF-8 check: rejects overlong forms, surrogates, code points
// past U+10FFFF, and truncated sequences.
bool is_valid_utf8(const std::string& bytes);

}  // namespace ecrse

#endif
