#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace palf {

// 64-bit line key: first 8 bytes of SHA1(normalize_line(raw)), big-endian.
using LineKey = std::uint64_t;

// Line normalization used for hashing only (output never reaches the
// filtered corpus): lowercase all cased letters, replace every decimal
// digit (Unicode Nd) with '0', map the shipped punctuation table to ASCII,
// and replace every whitespace code point with a plain space. Bytes that
// do not decode as UTF-8 pass through unchanged. Idempotent.
std::string normalize_line(std::string_view raw);

LineKey hash_line(std::string_view raw);

// First 8 bytes of SHA1(data), big-endian.
std::uint64_t sha1_prefix64(std::string_view data);

// Version tag of the normalization tables. Count maps record it; maps
// built with different versions cannot be mixed.
std::string_view norm_version();

bool is_whitespace_cp(char32_t cp);
bool is_decimal_digit_cp(char32_t cp);

struct PunctEntry {
    char32_t cp;
    std::string_view repl;
};

// The shipped punctuation-to-ASCII table, sorted by code point. Mirrors
// data/punct_map.<version>.tsv.
std::span<const PunctEntry> punct_table();

// Whitespace-delimited token count; whitespace = the same Unicode set the
// normalizer maps to ' '.
std::size_t count_ws_tokens(std::string_view s);

}  // namespace palf
