"""Dev-only: validate the transcribed tables against computed constants
and emit the package data files. Not part of the deliverable."""

import json
import sys

sys.path.insert(0, "src")
import numpy as np
from su4kat.fano import structure_constants

COLS = [1, 4, 7, 9, 11, 13, 2, 8, 14, 5, 10, 12, 3, 6, 15]

Z = 0
# cell(row r, col c) transcribed verbatim from the printed grid; entries
# are (sign, k) or 0.
ROWS = {
    1:  [Z, Z, Z, Z, (-1, 14), (1, 10), (-1, 3), Z, (1, 11), Z, (-1, 13), (1, 15), (1, 2), Z, (1, 12)],
    4:  [Z, Z, Z, (1, 8), (-1, 12), Z, Z, (-1, 9), (-1, 15), (-1, 6), Z, (1, 11), Z, (1, 5), (1, 14)],
    7:  [Z, Z, Z, (1, 5), Z, (1, 2), (-1, 13), (-1, 6), Z, (-1, 9), (-1, 3), Z, (1, 8), Z, Z],
    9:  [Z, (-1, 8), (-1, 5), Z, Z, Z, (-1, 15), (1, 4), Z, (1, 7), Z, (-1, 3), (1, 12), Z, (1, 2)],
    11: [(1, 14), (1, 12), Z, Z, Z, Z, Z, (1, 3), (1, 1), Z, (1, 6), (-1, 4), (-1, 8), Z, Z],
    13: [(-1, 10), Z, (-1, 2), Z, Z, Z, (1, 7), Z, (-1, 6), (-1, 15), (1, 1), Z, Z, (1, 14), (1, 5)],
    2:  [(1, 3), Z, (-1, 13), (1, 15), Z, (-1, 7), Z, (1, 14), (-1, 8), Z, Z, Z, (-1, 1), Z, (-1, 9)],
    8:  [Z, (1, 9), (1, 6), (-1, 4), (-1, 3), Z, (-1, 14), Z, (1, 2), Z, Z, Z, (1, 11), (-1, 7), Z],
    14: [(-1, 11), (1, 15), Z, Z, (1, 1), (-1, 6), (1, 8), (-1, 2), Z, Z, Z, Z, Z, (-1, 13), (-1, 4)],
    5:  [Z, (1, 6), (1, 9), (-1, 7), Z, (1, 15), Z, Z, Z, Z, (1, 12), (-1, 10), Z, (-1, 4), (-1, 13)],
    10: [(1, 13), Z, (1, 3), Z, (-1, 6), (-1, 1), Z, Z, Z, (-1, 12), Z, (1, 5), (-1, 7), (1, 11), Z],
    12: [(1, 15), (-1, 11), Z, (1, 3), (1, 4), Z, Z, Z, Z, (1, 10), (-1, 5), Z, (-1, 9), Z, (-1, 1)],
    3:  [(-1, 2), Z, (-1, 10), (-1, 12), (1, 8), Z, (1, 1), (-1, 11), Z, Z, (1, 7), (1, 9), Z, Z, Z],
    6:  [Z, (-1, 5), (-1, 8), Z, (1, 10), (-1, 14), Z, (1, 7), (1, 13), (1, 4), (-1, 11), Z, Z, Z, Z],
    15: [(-1, 12), (-1, 14), Z, (-1, 2), Z, (-1, 5), (1, 9), Z, (1, 4), (1, 13), Z, (1, 1), Z, Z, Z],
}

# (row, col) cells whose typesetting in the source is ambiguous.
FLAGGED = {(15, 9): "double minus sign in source; encoded with the antisymmetry-consistent sign"}

sc = structure_constants()

def compare(orientation):
    """orientation 'row': cell(r,c) = [l_r, l_c]; 'col': cell(r,c) = [l_c, l_r]."""
    bad = []
    for r in ROWS:
        for c, cell in zip(COLS, ROWS[r]):
            i, j = (r, c) if orientation == "row" else (c, r)
            row = sc.f[i - 1, j - 1]
            expected = np.zeros(15)
            if cell != 0:
                expected[cell[1] - 1] = cell[0]
            if not np.array_equal(row, expected):
                bad.append((r, c, cell, {k + 1: int(v) for k, v in enumerate(row) if v}))
    return bad

for orientation in ("row", "col"):
    bad = compare(orientation)
    print(f"orientation={orientation}: {len(bad)} mismatching cells")
    for b in bad[:40]:
        print("   ", b)

# Internal antisymmetry of the transcription itself
anti_bad = []
for r in ROWS:
    for c, cell in zip(COLS, ROWS[r]):
        if r == c:
            continue
        mirror = ROWS[c][COLS.index(r)]
        want = 0 if cell == 0 else (-cell[0], cell[1])
        if mirror != want:
            anti_bad.append((r, c, cell, mirror))
print(f"transcription antisymmetry violations: {len(anti_bad)}")
for b in anti_bad:
    print("   ", b)
