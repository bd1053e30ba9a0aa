#!/usr/bin/env python3
"""Regenerates include/nomen/detail/unicode_data.hpp from Python's unicodedata.

Covers compatibility decompositions for U+0080..U+2FFF plus the Latin
ligature block U+FB00..U+FB4F, and nonspacing-mark ranges for all planes.
That is enough to strip diacritics from Latin-script names; scripts with
no Latin decomposition are filtered out later in the pipeline anyway.
"""

import sys
import unicodedata

RANGES = [(0x0080, 0x3000), (0xFB00, 0xFB50)]


def decompositions():
    out = []
    for lo, hi in RANGES:
        for cp in range(lo, hi):
            ch = chr(cp)
            d = unicodedata.normalize("NFKD", ch)
            if d != ch:
                out.append((cp, [ord(c) for c in d]))
    return out


def mark_ranges():
    ranges = []
    start = prev = None
    for cp in range(0x110000):
        if unicodedata.category(chr(cp)) == "Mn":
            if start is None:
                start = cp
            prev = cp
        elif start is not None:
            ranges.append((start, prev))
            start = None
    if start is not None:
        ranges.append((start, prev))
    return ranges


def main():
    decomp = decompositions()
    marks = mark_ranges()
    pool = []
    entries = []
    for cp, expansion in decomp:
        entries.append((cp, len(pool), len(expansion)))
        pool.extend(expansion)

    w = sys.stdout.write
    w("// Generated by scripts/gen_unicode_tables.py (Unicode %s). Do not edit.\n"
      % unicodedata.unidata_version)
    w("#pragma once\n\n")
    w("#include <cstdint>\n\n")
    w("namespace nomen::detail {\n\n")
    w("struct DecompEntry {\n")
    w("  char32_t cp;\n")
    w("  std::uint16_t offset;\n")
    w("  std::uint8_t length;\n")
    w("};\n\n")
    w("// NFKD expansions, sorted by codepoint.\n")
    w("inline constexpr DecompEntry kDecompEntries[] = {\n")
    for cp, off, ln in entries:
        w("  {0x%04X, %d, %d},\n" % (cp, off, ln))
    w("};\n\n")
    w("inline constexpr char32_t kDecompPool[] = {\n")
    for i in range(0, len(pool), 12):
        w("  " + ", ".join("0x%04X" % c for c in pool[i:i + 12]) + ",\n")
    w("};\n\n")
    w("// Inclusive [first, last] ranges of nonspacing marks (category Mn).\n")
    w("inline constexpr char32_t kMarkRanges[][2] = {\n")
    for lo, hi in marks:
        w("  {0x%04X, 0x%04X},\n" % (lo, hi))
    w("};\n\n")
    w("}  // namespace nomen::detail\n")


if __name__ == "__main__":
    main()
