#!/usr/bin/env python3
"""Regenerate src/normalize_tables.inc and data/punct_map.v1.tsv.

The output is committed; rerun only when changing the mapping and bump
NORM_VERSION, since count maps built with different tables are incompatible.
"""
import unicodedata
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
NORM_VERSION = "v1"

# Whitespace → ASCII space. Unicode White_Space property, stable list.
WHITESPACE = [
    0x0009, 0x000A, 0x000B, 0x000C, 0x000D, 0x0020, 0x0085, 0x00A0,
    0x1680, 0x2000, 0x2001, 0x2002, 0x2003, 0x2004, 0x2005, 0x2006,
    0x2007, 0x2008, 0x2009, 0x200A, 0x2028, 0x2029, 0x202F, 0x205F,
    0x3000,
]


def punct_map():
    m = {}
    # quotation marks
    for cp in (0x00AB, 0x00BB, 0x201C, 0x201D, 0x201E, 0x201F,
               0x301D, 0x301E, 0x301F, 0x300C, 0x300D, 0x300E, 0x300F,
               0xFF62, 0xFF63):
        m[cp] = '"'
    for cp in (0x2018, 0x2019, 0x201A, 0x201B, 0x2039, 0x203A, 0x02BC):
        m[cp] = "'"
    # dashes
    for cp in range(0x2010, 0x2016):
        m[cp] = '-'
    for cp in (0x2212, 0x2E3A, 0x2E3B):
        m[cp] = '-'
    # ellipsis
    m[0x2026] = '...'
    # fullwidth ASCII punctuation (digits and letters excluded; those are
    # handled by the digit and lowercase rules)
    for lo, hi in ((0xFF01, 0xFF0F), (0xFF1A, 0xFF20), (0xFF3B, 0xFF40),
                   (0xFF5B, 0xFF5E)):
        for cp in range(lo, hi + 1):
            m[cp] = chr(cp - 0xFEE0)
    # CJK sentence-final marks and separators
    m[0x3001] = ','
    m[0x3002] = '.'
    m[0xFF61] = '.'
    m[0xFF64] = ','
    return dict(sorted(m.items()))


def lower_map():
    m = {}
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        s = chr(cp)
        low = s.lower()
        if low != s:
            m[cp] = low
    return m


def digit_ranges():
    nd = [cp for cp in range(0x110000)
          if not (0xD800 <= cp <= 0xDFFF)
          and unicodedata.category(chr(cp)) == 'Nd']
    ranges = []
    start = prev = nd[0]
    for cp in nd[1:]:
        if cp == prev + 1:
            prev = cp
        else:
            ranges.append((start, prev))
            start = prev = cp
    ranges.append((start, prev))
    return ranges


def c_str(s):
    return '"' + ''.join(f'\\x{b:02x}' for b in s.encode('utf-8')) + '"'


def main():
    punct = punct_map()
    lower = lower_map()
    digits = digit_ranges()

    inc = ROOT / 'src' / 'normalize_tables.inc'
    inc.parent.mkdir(parents=True, exist_ok=True)
    with inc.open('w') as f:
        f.write('// Generated by scripts/gen_normalize_tables.py '
                f'(Unicode {unicodedata.unidata_version}). Do not edit.\n\n')
        f.write(f'constexpr const char* kNormVersion = "{NORM_VERSION}";\n\n')
        f.write('struct MappedCp { char32_t cp; const char* repl; };\n')
        f.write('struct CpRange { char32_t lo; char32_t hi; };\n\n')
        f.write(f'constexpr MappedCp kLowerTable[{len(lower)}] = {{\n')
        for cp, repl in sorted(lower.items()):
            f.write(f'    {{0x{cp:04X}, {c_str(repl)}}},\n')
        f.write('};\n\n')
        f.write(f'constexpr MappedCp kPunctTable[{len(punct)}] = {{\n')
        for cp, repl in sorted(punct.items()):
            f.write(f'    {{0x{cp:04X}, {c_str(repl)}}},\n')
        f.write('};\n\n')
        f.write(f'constexpr CpRange kDigitRanges[{len(digits)}] = {{\n')
        for lo, hi in digits:
            f.write(f'    {{0x{lo:04X}, 0x{hi:04X}}},\n')
        f.write('};\n\n')
        f.write(f'constexpr char32_t kWhitespaceTable[{len(WHITESPACE)}] '
                '= {\n')
        for cp in WHITESPACE:
            f.write(f'    0x{cp:04X},\n')
        f.write('};\n')

    tsv = ROOT / 'data' / f'punct_map.{NORM_VERSION}.tsv'
    tsv.parent.mkdir(parents=True, exist_ok=True)
    with tsv.open('w') as f:
        f.write(f'# punctuation-to-ASCII map, version {NORM_VERSION}\n')
        for cp, repl in punct.items():
            f.write(f'U+{cp:04X}\t{repl}\n')

    print(f'wrote {inc} ({len(lower)} lower, {len(punct)} punct, '
          f'{len(digits)} digit ranges)')
    print(f'wrote {tsv}')


if __name__ == '__main__':
    main()
