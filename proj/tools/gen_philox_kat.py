#!/usr/bin/env python3
"""Freeze Philox known-answer vectors from numpy into tests/data/philox_kat.h.

RandomStream consumes counter blocks 0,1,2,... (block = position/4). numpy's
Philox increments its counter before producing each block, so seeding numpy
with counter = 2**256 - 1 makes its first raw word line up with position 0.
"""

import pathlib

import numpy as np
from numpy.random import Philox

CASES = [
    (0, 0),
    (1, 0),
    (0, 1),
    (0x12345678, 0x9ABCDEF0),
    (0xDEADBEEFCAFEF00D, 7),
    (2**64 - 1, 2**64 - 1),
]
WORDS = 12

SKIP_CASES = [
    (42, 3, 1000),
    (42, 3, 1001),
    (0xFEEDFACE, 0, 2**32 + 5),
]
SKIP_WORDS = 4


def words_at(seed, stream, pos, count):
    # start numpy one block before pos's block so its first output block is
    # block pos//4, then drop the in-block offset
    key = np.array([seed, stream], dtype=np.uint64)
    block = pos >> 2
    idx = pos & 3
    bg = Philox(counter=(block - 1) % 2**256, key=key)
    return [int(w) for w in bg.random_raw(idx + count)][idx:]


def fmt_words(ws):
    return ", ".join(f"0x{w:016x}ull" for w in ws)


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "philox_kat.h"
    out.parent.mkdir(parents=True, exist_ok=True)
    lines = []
    lines.append("// generated by tools/gen_philox_kat.py; do not edit")
    lines.append("#pragma once")
    lines.append("")
    lines.append("#include <cstdint>")
    lines.append("")
    lines.append("namespace polya::testdata {")
    lines.append("")
    lines.append("struct PhiloxKat {")
    lines.append("    std::uint64_t seed;")
    lines.append("    std::uint64_t stream;")
    lines.append(f"    std::uint64_t words[{WORDS}]; // positions 0..{WORDS - 1}")
    lines.append("};")
    lines.append("")
    lines.append("inline constexpr PhiloxKat kPhiloxKat[] = {")
    for seed, stream in CASES:
        ws = words_at(seed, stream, 0, WORDS)
        lines.append(f"    {{0x{seed:016x}ull, 0x{stream:016x}ull,")
        lines.append(f"     {{{fmt_words(ws[:4])},")
        lines.append(f"      {fmt_words(ws[4:8])},")
        lines.append(f"      {fmt_words(ws[8:])}}}}},")
    lines.append("};")
    lines.append("")
    lines.append("struct PhiloxSkipKat {")
    lines.append("    std::uint64_t seed;")
    lines.append("    std::uint64_t stream;")
    lines.append("    std::uint64_t position;")
    lines.append(f"    std::uint64_t words[{SKIP_WORDS}];")
    lines.append("};")
    lines.append("")
    lines.append("inline constexpr PhiloxSkipKat kPhiloxSkipKat[] = {")
    for seed, stream, pos in SKIP_CASES:
        ws = words_at(seed, stream, pos, SKIP_WORDS)
        lines.append(f"    {{0x{seed:016x}ull, 0x{stream:016x}ull, {pos}ull,")
        lines.append(f"     {{{fmt_words(ws)}}}}},")
    lines.append("};")
    lines.append("")
    lines.append("} // namespace polya::testdata")
    lines.append("")
    out.write_text("\n".join(lines))
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
