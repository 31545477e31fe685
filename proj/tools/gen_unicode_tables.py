#!/usr/bin/env python3
"""Regenerates include/revdetect/detail/unicode_tables.hpp from Python's unicodedata."""
import sys
import unicodedata

OUT = "include/revdetect/detail/unicode_tables.hpp"

# Class codes shared with the C++ side (see CharClass in unicode.hpp).
OTHER, PUNCT_SYMBOL, NUMBER, SPACE, CONTROL = 0, 1, 2, 3, 4

WHITESPACE = {0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x20, 0x85, 0xA0, 0x1680,
              *range(0x2000, 0x200B), 0x2028, 0x2029, 0x202F, 0x205F, 0x3000}


def classify(cp):
    if cp in WHITESPACE:
        return SPACE
    cat = unicodedata.category(chr(cp))
    if cat[0] in "PS":
        return PUNCT_SYMBOL
    if cat[0] == "N":
        return NUMBER
    if cat == "Cc":
        return CONTROL
    return OTHER


def ranges():
    out = []
    start, cur = 0, classify(0)
    for cp in range(1, 0x110000):
        c = classify(cp)
        if c != cur:
            if cur != OTHER:
                out.append((start, cp - 1, cur))
            start, cur = cp, c
    if cur != OTHER:
        out.append((start, 0x10FFFF, cur))
    return out


def latin_lower():
    pairs = []
    for cp in range(0x110000):
        ch = chr(cp)
        name = unicodedata.name(ch, "")
        if not name.startswith("LATIN CAPITAL LETTER"):
            continue
        low = ch.lower()
        if len(low) == 1 and low != ch:
            pairs.append((cp, ord(low)))
    return pairs


def main():
    rs = ranges()
    lows = latin_lower()
    with open(OUT, "w", encoding="utf-8") as f:
        f.write("// Generated by tools/gen_unicode_tables.py (Unicode %s). Do not edit.\n"
                % unicodedata.unidata_version)
        f.write("#pragma once\n\n#include <array>\n#include <cstdint>\n\n")
        f.write("namespace revdetect::detail {\n\n")
        f.write("struct CodepointRange {\n  char32_t lo;\n  char32_t hi;\n  std::uint8_t cls;\n};\n\n")
        f.write("inline constexpr std::array<CodepointRange, %d> kCharClassRanges{{\n" % len(rs))
        for lo, hi, c in rs:
            f.write("    {0x%05X, 0x%05X, %d},\n" % (lo, hi, c))
        f.write("}};\n\n")
        f.write("struct CaseMapping {\n  char32_t upper;\n  char32_t lower;\n};\n\n")
        f.write("inline constexpr std::array<CaseMapping, %d> kLatinLower{{\n" % len(lows))
        for u, l in lows:
            f.write("    {0x%05X, 0x%05X},\n" % (u, l))
        f.write("}};\n\n}  // namespace revdetect::detail\n")
    print("wrote %s: %d ranges, %d case pairs" % (OUT, len(rs), len(lows)), file=sys.stderr)


if __name__ == "__main__":
    main()
