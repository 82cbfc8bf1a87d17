#include "radtext/unicode.hpp"

#include "radtext/errors.hpp"

namespace radtext::uni {

namespace {

// Decodes one code point starting at utf8[i]; advances i past it.
char32_t decode_one(const std::string& utf8, std::size_t& i) {
    const auto byte = [&](std::size_t k) -> unsigned char {
        return static_cast<unsigned char>(utf8[k]);
    };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int extra;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        extra = 1;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        extra = 2;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        extra = 3;
        cp = b0 & 0x07;
    } else {
        throw ParseError("invalid UTF-8 lead byte at byte offset " + std::to_string(i));
    }
    if (i + extra >= utf8.size())
        throw ParseError("truncated UTF-8 sequence at byte offset " + std::to_string(i));
    for (int k = 1; k <= extra; ++k) {
        unsigned char b = byte(i + k);
        if ((b & 0xC0) != 0x80)
            throw ParseError("invalid UTF-8 continuation byte at byte offset " +
                             std::to_string(i + k));
        cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    static const char32_t min_for_extra[4] = {0, 0x80, 0x800, 0x10000};
    if (cp < min_for_extra[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
        throw ParseError("invalid UTF-8 scalar value at byte offset " + std::to_string(i));
    i += extra + 1;
    return cp;
}

} // namespace

std::u32string to_u32(const std::string& utf8) {
    std::u32string out;
    out.reserve(utf8.size());
    std::size_t i = 0;
    while (i < utf8.size()) out.push_back(decode_one(utf8, i));
    return out;
}

std::string to_utf8(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
}

std::string to_utf8(const std::u32string& text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : text) out += to_utf8(cp);
    return out;
}

std::size_t length(const std::string& utf8) {
    std::size_t n = 0, i = 0;
    while (i < utf8.size()) {
        decode_one(utf8, i);
        ++n;
    }
    return n;
}

std::string substr(const std::string& utf8, std::size_t pos, std::size_t len) {
    std::size_t i = 0, cp = 0;
    while (cp < pos && i < utf8.size()) {
        decode_one(utf8, i);
        ++cp;
    }
    std::size_t start = i;
    std::size_t taken = 0;
    while (taken < len && i < utf8.size()) {
        decode_one(utf8, i);
        ++taken;
    }
    return utf8.substr(start, i - start);
}

std::vector<std::size_t> byte_to_cp_map(const std::string& utf8) {
    std::vector<std::size_t> map(utf8.size() + 1, 0);
    std::size_t i = 0, cp = 0;
    while (i < utf8.size()) {
        std::size_t start = i;
        decode_one(utf8, i);
        for (std::size_t b = start; b < i; ++b) map[b] = cp;
        ++cp;
    }
    map[utf8.size()] = cp;
    return map;
}

std::vector<std::size_t> cp_to_byte_map(const std::string& utf8) {
    std::vector<std::size_t> map;
    std::size_t i = 0;
    while (i < utf8.size()) {
        map.push_back(i);
        decode_one(utf8, i);
    }
    map.push_back(utf8.size());
    return map;
}

} // namespace radtext::uni
