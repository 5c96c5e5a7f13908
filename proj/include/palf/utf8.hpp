#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace palf::utf8 {

struct Decoded {
    char32_t cp;
    unsigned len;  // bytes consumed, >= 1
    bool ok;       // false on malformed sequence (len is then 1)
};

// Decodes the code point starting at s[i]. Rejects overlong forms,
// surrogates, and values beyond U+10FFFF.
inline Decoded decode(std::string_view s, std::size_t i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) return {b0, 1, true};

    unsigned len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return {0xFFFD, 1, false};
    }
    if (i + len > s.size()) return {0xFFFD, 1, false};
    for (unsigned k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) return {0xFFFD, 1, false};
        cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMinForLen[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLen[len]) return {0xFFFD, 1, false};          // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) return {0xFFFD, 1, false};  // surrogate
    if (cp > 0x10FFFF) return {0xFFFD, 1, false};
    return {cp, len, true};
}

inline void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline bool is_valid(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const Decoded d = decode(s, i);
        if (!d.ok) return false;
        i += d.len;
    }
    return true;
}

// Malformed bytes count as one code point each.
inline std::size_t count_codepoints(std::string_view s) {
    std::size_t i = 0, n = 0;
    while (i < s.size()) {
        i += decode(s, i).len;
        ++n;
    }
    return n;
}

}  // namespace palf::utf8
