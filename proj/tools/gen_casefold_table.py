#!/usr/bin/env python3
"""Regenerates src/casefold_table.inc from CPython's Unicode database.

The table holds single-code-point case-fold mappings: the full casefold
where it is a single code point, otherwise the single-code-point
lowercase where one exists (e.g. U+1E9E -> U+00DF). Multi-code-point
expansions (ß -> ss and friends) are intentionally not applied, so
folding never changes string length.

Usage: python3 tools/gen_casefold_table.py > src/casefold_table.inc
"""

import sys
import unicodedata


def fold_one(cp: int) -> int:
    c = chr(cp)
    f = c.casefold()
    if len(f) == 1:
        return ord(f)
    l = c.lower()
    if len(l) == 1:
        return ord(l)
    return cp


def main() -> None:
    table = {}
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        folded = fold_one(cp)
        if folded != cp:
            table[cp] = folded

    # Folded text must be a fixed point of folding.
    for src, dst in table.items():
        assert dst not in table, f"fold not idempotent: {src:04X} -> {dst:04X} -> {table[dst]:04X}"

    out = sys.stdout
    out.write("// Generated by tools/gen_casefold_table.py -- do not edit.\n")
    out.write(f"// Unicode {unicodedata.unidata_version}, "
              f"{len(table)} single-code-point fold mappings.\n")
    out.write("static constexpr CaseFoldEntry kCaseFoldTable[] = {\n")
    row = []
    for cp in sorted(table):
        row.append(f"{{0x{cp:04X},0x{table[cp]:04X}}}")
        if len(row) == 6:
            out.write("    " + ",".join(row) + ",\n")
            row = []
    if row:
        out.write("    " + ",".join(row) + ",\n")
    out.write("};\n")


if __name__ == "__main__":
    main()
