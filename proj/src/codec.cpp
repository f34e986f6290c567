#include "ecrse/codec.hpp"

#include <algorithm>

namespace ecrse {

std::vector<MessageBlock> text_to_blocks(const std::string& text, const Natural& bound) {
    if (bound < 259) throw BoundTooSmall();
    std::size_t width = 0;
    Natural cap = 256;  // 256^(width+1)
    while (cap + 2 <= bound) {
        ++width;
        cap *= 256;
    }

    std::vector<MessageBlock> blocks;
    blocks.reserve((text.size() + width - 1) / width);
    for (std::size_t pos = 0; pos < text.size(); pos += width) {
        std::size_t length = std::min(width, text.size() - pos);
        Natural value = 0;
        for (std::size_t i = 0; i < length; ++i)
            value = value * 256 + static_cast<unsigned char>(text[pos + i]);
        blocks.push_back({value + 2, length});
    }
    return blocks;
}

std::string blocks_to_text(const std::vector<MessageBlock>& blocks) {
    std::string bytes;
    for (const MessageBlock& block : blocks) {
        if (block.byte_length == 0 || block.value < 2) throw MalformedBlock();
        Natural raw = block.value - 2;
        if (raw >> (8 * block.byte_length) != 0) throw MalformedBlock();
        for (std::size_t i = block.byte_length; i-- > 0;) {
            Natural byte = (raw >> (8 * i)) % 256;
            bytes.push_back(static_cast<char>(mpz_get_ui(byte.get_mpz_t())));
        }
    }
    if (!is_valid_utf8(bytes)) throw InvalidUtf8();
    return bytes;
}

bool is_valid_utf8(const std::string& bytes) {
    const auto* s = reinterpret_cast<const unsigned char*>(bytes.data());
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        unsigned char lead = s[i];
        if (lead < 0x80) {
            ++i;
            continue;
        }
        std::size_t length;
        unsigned long code_point;
        if ((lead & 0xE0) == 0xC0) {
            length = 2;
            code_point = lead & 0x1FUL;
        } else if ((lead & 0xF0) == 0xE0) {
            length = 3;
            code_point = lead & 0x0FUL;
        } else if ((lead & 0xF8) == 0xF0) {
            length = 4;
            code_point = lead & 0x07UL;
        } else {
            return false;  // continuation byte or 5+/invalid lead
        }
        if (i + length > n) return false;
        for (std::size_t k = 1; k < length; ++k) {
            if ((s[i + k] & 0xC0) != 0x80) return false;
            code_point = (code_point << 6) | (s[i + k] & 0x3FUL);
        }
        if (length == 2 && code_point < 0x80) return false;  // overlong
        if (length == 3 && code_point < 0x800) return false;
        if (length == 4 && code_point < 0x10000) return false;
        if (code_point > 0x10FFFF) return false;
        if (code_point >= 0xD800 && code_point <= 0xDFFF) return false;  // surrogates
        i += length;
    }
    return true;
}

}  // namespace ecrse
