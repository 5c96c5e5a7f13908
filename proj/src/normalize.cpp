#include "palf/normalize.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <vector>

#include "palf/utf8.hpp"

namespace palf {

namespace {

#include "normalize_tables.inc"

const char* table_lookup(const MappedCp* table, std::size_t n, char32_t cp) {
    const MappedCp* end = table + n;
    const MappedCp* it = std::lower_bound(
        table, end, cp,
        [](const MappedCp& e, char32_t c) { return e.cp < c; });
    if (it != end && it->cp == cp) return it->repl;
    return nullptr;
}

}  // namespace

bool is_whitespace_cp(char32_t cp) {
    for (char32_t w : kWhitespaceTable) {
        if (w == cp) return true;
        if (w > cp) return false;
    }
    return false;
}

bool is_decimal_digit_cp(char32_t cp) {
    const CpRange* end = std::end(kDigitRanges);
    const CpRange* it = std::upper_bound(
        std::begin(kDigitRanges), end, cp,
        [](char32_t c, const CpRange& r) { return c < r.lo; });
    return it != std::begin(kDigitRanges) && cp <= (it - 1)->hi;
}

std::string normalize_line(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        const utf8::Decoded d = utf8::decode(raw, i);
        if (!d.ok) {
            out.push_back(raw[i]);
            ++i;
            continue;
        }
        if (is_whitespace_cp(d.cp)) {
            out.push_back(' ');
        } else if (is_decimal_digit_cp(d.cp)) {
            out.push_back('0');
        } else if (const char* p =
                       table_lookup(kPunctTable, std::size(kPunctTable), d.cp)) {
            out.append(p);
        } else if (const char* l =
                       table_lookup(kLowerTable, std::size(kLowerTable), d.cp)) {
            out.append(l);
        } else {
            out.append(raw.substr(i, d.len));
        }
        i += d.len;
    }
    return out;
}

std::uint64_t sha1_prefix64(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int md_len = 0;
    EVP_Digest(data.data(), data.size(), md, &md_len, EVP_sha1(), nullptr);
    std::uint64_t key = 0;
    for (int k = 0; k < 8; ++k) key = (key << 8) | md[k];
    return key;
}

LineKey hash_line(std::string_view raw) {
    return sha1_prefix64(normalize_line(raw));
}

std::string_view norm_version() { return kNormVersion; }

std::span<const PunctEntry> punct_table() {
    static const std::vector<PunctEntry> entries = [] {
        std::vector<PunctEntry> v;
        v.reserve(std::size(kPunctTable));
        for (const MappedCp& e : kPunctTable) v.push_back({e.cp, e.repl});
        return v;
    }();
    return entries;
}

std::size_t count_ws_tokens(std::string_view s) {
    std::size_t tokens = 0;
    bool in_token = false;
    std::size_t i = 0;
    while (i < s.size()) {
        const utf8::Decoded d = utf8::decode(s, i);
        const bool ws = d.ok && is_whitespace_cp(d.cp);
        if (!ws && !in_token) {
            ++tokens;
            in_token = true;
        } else if (ws) {
            in_token = false;
        }
        i += d.len;
    }
    return tokens;
}

}  // namespace palf
