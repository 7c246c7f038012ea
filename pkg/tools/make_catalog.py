#!/usr/bin/env python3
"""Regenerate src/mjtheta/data/catalog.csv from the transcription below.

The file carries two kinds of records after the comment header:

  meta,<symbol>,<eta quotient>,<root system>
                                          one per lambency; a nonempty root
                                          system marks the 23 members of the
                                          distinguished (positive) class
  <symbol>,1A,<r>,<D>,<coeff>             reference Fourier coefficients
                                          C(D, r) of the distinguished form,
                                          same shape as the ingestion format

Blank cells of the printed tables are *absent* records (they are pinned by
the optimality support condition, not by the tables).
"""

import csv
import os

# symbol -> (eta quotient, root system or "")
CATALOG = [
    ("2", "1^24 / 2^24", "A1^24"),
    ("3", "1^12 / 3^12", "A2^12"),
    ("4", "1^8 / 4^8", "A3^8"),
    ("5", "1^6 / 5^6", "A4^6"),
    ("6", "1^5 3^1 / 2^1 6^5", "A5^4 D4"),
    ("6+2", "1^4 2^4 / 3^4 6^4", ""),
    ("6+3", "1^6 3^6 / 2^6 6^6", "D4^6"),
    ("7", "1^4 / 7^4", "A6^4"),
    ("8", "1^4 4^2 / 2^2 8^4", "A7^2 D5^2"),
    ("9", "1^3 / 9^3", "A8^3"),
    ("10", "1^3 5^1 / 2^1 10^3", "A9^2 D6"),
    ("10+2", "1^2 2^2 / 5^2 10^2", ""),
    ("10+5", "1^4 5^4 / 2^4 10^4", "D6^4"),
    ("12", "1^3 4^1 6^2 / 2^2 3^1 12^3", "A11 D7 E6"),
    ("12+3", "1^2 3^2 / 4^2 12^2", ""),
    ("12+4", "1^4 4^4 6^4 / 2^4 3^4 12^4", "E6^4"),
    ("13", "1^2 / 13^2", "A12^2"),
    ("14+7", "1^3 7^3 / 2^3 14^3", "D8^3"),
    ("15+5", "1^2 5^2 / 3^2 15^2", ""),
    ("16", "1^2 8^1 / 2^1 16^2", "A15 D9"),
    ("18", "1^2 6^1 9^1 / 2^1 3^1 18^2", "A17 E7"),
    ("18+2", "1^1 2^1 / 9^1 18^1", ""),
    ("18+9", "1^3 6^2 9^3 / 2^3 3^2 18^3", "D10 E7^2"),
    ("20+4", "1^2 4^2 10^2 / 2^2 5^2 20^2", ""),
    ("21+3", "1^1 3^1 / 7^1 21^1", ""),
    ("22+11", "1^2 11^2 / 2^2 22^2", "D12^2"),
    ("24+8", "1^2 6^1 8^2 12^1 / 2^1 3^2 4^1 24^2", ""),
    ("25", "1^1 / 25^1", "A24"),
    ("28+7", "1^1 7^1 / 4^1 28^1", ""),
    ("30+15", "1^2 6^1 10^1 15^2 / 2^2 3^1 5^1 30^2", "D16 E8"),
    ("30+3,5,15", "1^1 3^1 5^1 15^1 / 2^1 6^1 10^1 30^1", ""),
    ("30+6,10,15", "1^3 6^3 10^3 15^3 / 2^3 3^3 5^3 30^3", "E8^3"),
    ("33+11", "1^1 11^1 / 3^1 33^1", ""),
    ("36+4", "1^1 4^1 18^1 / 2^1 9^1 36^1", ""),
    ("42+6,14,21", "1^2 6^2 14^2 21^2 / 2^2 3^2 7^2 42^2", ""),
    ("46+23", "1^1 23^1 / 2^1 46^1", "D24"),
    ("60+12,15,20", "1^1 12^1 15^1 20^1 / 3^1 4^1 5^1 60^1", ""),
    ("70+10,14,35", "1^1 10^1 14^1 35^1 / 2^1 5^1 7^1 70^1", ""),
    ("78+6,26,39", "1^1 6^1 26^1 39^1 / 2^1 3^1 13^1 78^1", ""),
]

# fixture tables: symbol -> {r: [c(n=0), ..., c(n=15)]}, None for blanks
_ = None
FIXTURES = {
    "6+2": {
        1: [-2, -2, 4, -6, 6, -6, 10, -14, 12, -12, 20, -24, 22, -26, 34, -40],
        2: [_, 16, 32, 64, 112, 176, 288, 448, 656, 976, 1408, 1984, 2800, 3872, 5280, 7168],
        4: [_, 8, 24, 48, 80, 144, 232, 352, 544, 808, 1168, 1680, 2368, 3280, 4528, 6176],
    },
    "10+2": {
        1: [-2, 2, -2, 0, -2, 4, -2, 2, -2, 4, -6, 2, -4, 8, -6, 4],
        2: [_, 4, 8, 16, 16, 28, 40, 48, 72, 96, 120, 160, 208, 256, 328, 416],
        3: [_, -2, 2, -2, 4, -4, 2, -4, 6, -6, 6, -6, 8, -8, 8, -10],
        4: [_, 8, 12, 16, 28, 40, 56, 80, 104, 136, 184, 240, 304, 392, 496, 624],
        6: [_, 4, 8, 16, 24, 32, 48, 64, 88, 124, 160, 208, 272, 348, 440, 560],
        8: [_, _, 4, 8, 8, 16, 24, 32, 44, 64, 80, 104, 144, 176, 232, 296],
    },
    "12+3": {
        1: [-2, -4, -2, -6, -8, -12, -10, -22, -22, -34, -38, -52, -58, -84, -92, -120],
        2: [_, 4, 4, 8, 12, 12, 20, 28, 32, 44, 56, 68, 88, 112, 132, 164],
        3: [_, 4, 8, 8, 16, 20, 28, 32, 48, 60, 80, 92, 124, 148, 188, 224],
        5: [_, 2, 2, 6, 6, 8, 12, 18, 20, 30, 32, 44, 58, 72, 84, 110],
        6: [_, 4, 8, 12, 16, 24, 32, 44, 56, 72, 96, 120, 152, 188, 232, 288],
        9: [_, _, 4, 4, 12, 8, 20, 20, 36, 36, 56, 64, 92, 100, 144, 160],
    },
    "18+2": {
        1: [-2, 0, -2, 0, -2, 2, 0, 0, -2, 0, -2, 2, -2, 2, -2, 2],
        2: [_, 4, 0, 4, 4, 4, 4, 8, 8, 8, 12, 12, 16, 20, 20, 28],
        3: [_, -2, 2, 0, 0, -2, 2, -2, 2, -2, 2, 0, 2, -4, 2, -2],
        4: [_, 0, 4, 4, 4, 8, 8, 8, 16, 16, 20, 24, 28, 32, 40, 48],
        5: [_, 2, 0, 0, 0, 2, 0, 0, 0, 2, -2, 0, 0, 2, 0, 0],
        6: [_, 4, 4, 4, 8, 8, 12, 16, 16, 20, 24, 32, 36, 44, 52, 60],
        7: [_, -2, 0, -2, 2, -2, 0, -2, 2, -2, 2, -2, 2, -4, 2, -2],
        8: [_, 4, 4, 8, 8, 8, 12, 16, 16, 24, 28, 32, 40, 48, 52, 64],
        10: [_, _, 4, 4, 4, 8, 12, 12, 16, 20, 24, 28, 36, 40, 52, 60],
        12: [_, _, 2, 4, 4, 8, 8, 8, 12, 16, 20, 24, 28, 32, 40, 48],
        14: [_, _, _, 4, 4, 4, 4, 8, 8, 12, 12, 12, 20, 24, 24, 32],
        16: [_, _, _, _, 0, 0, 4, 0, 4, 4, 4, 8, 8, 8, 12, 16],
    },
    "30+3,5,15": {
        1: [-2, -2, -2, -4, -2, -2, -4, -6, -6, -6, -6, -8, -10, -10, -10, -14],
        3: [_, 0, 4, 0, 4, 0, 4, 4, 4, 4, 8, 4, 8, 4, 12, 8],
        5: [_, 4, 0, 4, 4, 4, 4, 8, 4, 8, 8, 8, 12, 16, 12, 16],
        7: [_, -2, 0, 0, -2, -2, 0, -4, 0, -2, -2, -4, -2, -6, -4, -4],
        9: [_, 4, 4, 4, 4, 8, 8, 8, 8, 12, 12, 16, 16, 20, 20, 24],
        15: [_, 0, 4, 4, 8, 4, 8, 8, 12, 8, 16, 16, 20, 16, 24, 24],
    },
    "15+5": {
        1: [-2, -2, -2, -2, -4, -4, -6, -10, -8, -10, -16, -18, -22, -28, -32, -36],
        2: [_, 4, 4, 8, 8, 12, 16, 20, 24, 32, 36, 48, 56, 72, 80, 100],
        4: [_, 0, 4, 0, 4, 4, 8, 4, 12, 8, 16, 16, 24, 20, 36, 32],
        5: [_, 4, 4, 8, 12, 12, 16, 24, 28, 36, 44, 52, 68, 80, 92, 116],
        7: [_, 2, 4, 6, 6, 10, 14, 16, 20, 26, 34, 40, 48, 60, 72, 88],
        10: [_, _, 4, 4, 8, 8, 16, 12, 24, 24, 36, 40, 56, 56, 80, 88],
    },
    "20+4": {
        1: [-2, -2, -2, -2, -2, -6, -4, -6, -6, -8, -10, -14, -12, -18, -18, -22],
        3: [_, 2, 4, 2, 6, 6, 8, 8, 12, 12, 18, 16, 24, 26, 32, 32],
        4: [_, 2, 2, 4, 4, 4, 8, 8, 8, 12, 14, 16, 20, 22, 24, 32],
        7: [_, 2, 2, 4, 4, 6, 6, 8, 10, 14, 14, 16, 20, 26, 26, 34],
        8: [_, 2, 4, 4, 6, 8, 8, 12, 14, 16, 20, 24, 28, 32, 40, 44],
        11: [_, _, 2, 0, 4, 2, 4, 2, 8, 4, 10, 8, 12, 10, 18, 14],
    },
    "21+3": {
        1: [-2, -2, 0, -2, -4, -2, -4, -6, -6, -8, -8, -8, -12, -14, -14, -18],
        2: [_, 2, 2, 4, 2, 4, 4, 8, 6, 10, 8, 12, 14, 18, 18, 24],
        3: [_, 2, 0, 2, 4, 4, 4, 4, 8, 8, 8, 12, 12, 14, 16, 20],
        4: [_, -2, 0, -2, -2, -2, 0, -4, -2, -4, -4, -6, -4, -10, -8, -10],
        5: [_, 2, 2, 2, 4, 4, 4, 6, 6, 8, 10, 12, 14, 16, 18, 20],
        6: [_, 2, 4, 4, 6, 4, 8, 8, 12, 12, 16, 16, 22, 24, 32, 32],
        8: [_, 2, 0, 2, 2, 2, 4, 6, 4, 6, 8, 8, 10, 14, 12, 16],
        9: [_, 2, 4, 4, 4, 8, 8, 10, 12, 14, 20, 20, 24, 28, 32, 40],
        11: [_, _, 0, 2, 2, 0, 2, 2, 2, 4, 2, 4, 6, 6, 6, 8],
        12: [_, _, 4, 2, 6, 4, 8, 8, 12, 12, 16, 16, 24, 24, 32, 32],
        15: [_, _, _, 2, 4, 4, 4, 6, 8, 8, 8, 12, 16, 18, 20, 24],
        18: [_, _, _, _, 2, 0, 4, 0, 4, 2, 8, 4, 8, 6, 12, 8],
    },
    "24+8": {
        1: [-2, -2, 0, -2, -2, -2, -2, -4, -2, -6, -4, -6, -6, -10, -6, -10],
        2: [_, 2, 2, 2, 4, 4, 4, 6, 6, 8, 10, 10, 12, 14, 16, 18],
        5: [_, 2, 2, 4, 4, 4, 6, 8, 8, 10, 10, 14, 16, 18, 20, 24],
        7: [_, 0, 2, 0, 2, 2, 4, 0, 4, 4, 6, 4, 8, 4, 10, 8],
        8: [_, 2, 2, 4, 4, 4, 6, 8, 8, 10, 12, 12, 16, 20, 20, 24],
        13: [_, _, 2, 2, 4, 2, 6, 4, 8, 6, 10, 10, 14, 12, 18, 18],
    },
    "28+7": {
        1: [-2, 0, -2, -2, -2, -2, -2, -2, -4, -4, -6, -4, -6, -6, -8, -8],
        2: [_, 0, 0, 2, 0, 2, 2, 0, 2, 2, 2, 2, 4, 2, 4, 6],
        3: [_, 2, 2, 2, 2, 4, 2, 4, 6, 6, 6, 8, 8, 10, 10, 12],
        5: [_, -2, 0, 0, 0, -2, 0, -2, 0, -2, -2, -2, 0, -4, -2, -4],
        6: [_, 2, 2, 2, 2, 2, 4, 4, 4, 6, 6, 8, 8, 8, 10, 12],
        7: [_, 2, 2, 0, 4, 4, 4, 4, 6, 4, 8, 6, 8, 12, 12, 12],
        9: [_, 0, 0, 2, 0, 0, 0, 2, 0, 2, 2, 2, 2, 2, 2, 4],
        10: [_, 2, 2, 2, 4, 4, 4, 6, 6, 6, 8, 10, 10, 12, 14, 16],
        13: [_, _, 2, 0, 2, 0, 4, 2, 4, 2, 4, 2, 6, 4, 8, 6],
        14: [_, _, 2, 4, 2, 4, 4, 4, 6, 8, 8, 8, 12, 12, 14, 16],
        17: [_, _, _, 2, 2, 2, 2, 2, 4, 4, 4, 6, 6, 6, 8, 10],
        21: [_, _, _, _, 2, 0, 4, 2, 4, 2, 4, 4, 8, 4, 8, 8],
    },
    "33+11": {
        1: [-2, 0, 0, -2, -2, -2, 0, -2, -2, -2, -2, -2, -4, -4, -4, -4],
        2: [_, 2, 0, 2, 2, 2, 2, 4, 2, 4, 4, 4, 4, 6, 6, 8],
        4: [_, -2, 0, 0, 0, 0, 0, -2, 0, -2, 0, -2, 0, -2, 0, -2],
        5: [_, 2, 2, 2, 2, 2, 2, 4, 4, 4, 6, 6, 6, 8, 8, 8],
        7: [_, 0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 2, 0, 0, 2, 2],
        8: [_, 2, 2, 2, 2, 2, 4, 4, 4, 6, 4, 6, 8, 8, 8, 10],
        10: [_, 0, 2, 0, 2, 0, 2, 0, 2, 2, 4, 2, 4, 2, 4, 4],
        11: [_, 2, 0, 2, 4, 2, 4, 4, 4, 4, 4, 6, 8, 8, 8, 10],
        13: [_, _, 2, 2, 0, 2, 2, 2, 2, 4, 4, 4, 4, 4, 6, 6],
        16: [_, _, 2, 0, 2, 2, 4, 2, 4, 2, 4, 4, 6, 4, 8, 6],
        19: [_, _, _, 2, 2, 2, 2, 2, 4, 4, 4, 4, 6, 6, 6, 8],
        22: [_, _, _, _, 2, 2, 4, 0, 4, 2, 4, 4, 6, 4, 8, 8],
    },
    "36+4": {
        1: [-2, -2, -2, 0, -2, -2, -2, -2, -2, -2, -4, -2, -4, -4, -4, -4],
        3: [_, 2, 0, 2, 2, 2, 2, 2, 2, 4, 4, 4, 4, 6, 4, 6],
        4: [_, 0, 2, 0, 0, 2, 2, 0, 2, 2, 2, 2, 2, 2, 4, 4],
        5: [_, 0, 0, 0, 0, -2, 0, 0, 0, -2, -2, -2, 0, -2, -2, -2],
        7: [_, 0, 2, 0, 2, 2, 2, 2, 4, 2, 4, 4, 6, 4, 6, 6],
        8: [_, 2, 0, 2, 2, 2, 2, 2, 2, 4, 4, 4, 4, 6, 4, 6],
        11: [_, 2, 2, 2, 2, 2, 2, 4, 2, 4, 4, 4, 4, 6, 6, 6],
        12: [_, 1, 2, 2, 2, 2, 2, 4, 4, 4, 4, 4, 6, 6, 8, 8],
        15: [_, _, 2, 0, 2, 2, 2, 0, 4, 2, 4, 2, 4, 4, 6, 4],
        16: [_, _, 2, 2, 2, 2, 4, 2, 4, 4, 4, 6, 6, 6, 8, 8],
        19: [_, _, _, 0, 0, 2, 0, 0, 2, 2, 2, 2, 2, 2, 2, 4],
        23: [_, _, _, _, 2, 0, 2, 0, 2, 0, 2, 0, 2, 2, 2, 0],
    },
    "60+12,15,20": {
        1: [-2, -2, -2, 0, -2, -2, -2, -2, -2, -2, -2, -2, -4, -4, -4, -2],
        2: [_, 2, 0, 2, 2, 0, 2, 2, 2, 2, 2, 2, 2, 4, 2, 4],
        7: [_, 0, 2, 0, 0, 2, 2, 0, 2, 0, 2, 2, 2, 2, 2, 2],
        11: [_, 2, 0, 2, 2, 2, 0, 2, 2, 4, 2, 2, 2, 4, 2, 4],
        13: [_, -2, 0, -2, 0, -2, 0, -2, 0, -2, -2, -2, 0, -4, 0, -2],
        14: [_, 2, 2, 2, 2, 2, 2, 4, 2, 2, 4, 4, 4, 4, 4, 4],
    },
    "42+6,14,21": {
        1: [-2, -2, 0, -2, -2, -2, 0, -4, -2, -4, -2, -4, -2, -6, -4, -6],
        5: [_, 2, 2, 2, 4, 2, 4, 4, 4, 6, 6, 4, 8, 8, 8, 8],
        11: [_, 2, 2, 4, 2, 4, 4, 6, 4, 6, 6, 8, 8, 10, 8, 12],
    },
    "70+10,14,35": {
        1: [-2, 0, -2, -2, 0, 0, -2, 0, -2, -2, -2, -2, -2, 0, -2, -2],
        3: [_, 0, 2, 0, 2, 0, 0, 2, 2, 0, 2, 2, 2, 0, 2, 2],
        9: [_, 2, 0, 2, 0, 2, 2, 2, 0, 2, 2, 2, 2, 2, 2, 4],
        11: [_, -2, 0, 0, 0, -2, 0, -2, 0, 0, 0, -2, 0, -2, 0, -2],
        13: [_, 2, 2, 0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 4, 4, 2],
        23: [_, _, 2, 2, 2, 2, 2, 2, 2, 2, 4, 2, 4, 2, 4, 4],
    },
    "78+6,26,39": {
        1: [-2, 0, 0, -2, -2, 0, 0, -2, 0, 0, -2, 0, -2, -2, -2, -2],
        5: [_, 2, 0, 2, 0, 2, 0, 2, 2, 2, 0, 2, 2, 2, 2, 2],
        7: [_, -2, 0, 0, 0, 0, 0, -2, 0, -2, 0, 0, 0, -2, 0, 0],
        11: [_, 2, 2, 0, 2, 0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
        17: [_, 2, 0, 2, 2, 2, 2, 2, 0, 2, 2, 2, 2, 4, 2, 4],
        23: [_, 0, 2, 2, 2, 0, 2, 2, 2, 2, 2, 2, 4, 2, 2, 2],
    },
}


def level_of(symbol):
    return int(symbol.split("+")[0])


def main():
    out = os.path.join(os.path.dirname(__file__), os.pardir,
                       "src", "mjtheta", "data", "catalog.csv")
    out = os.path.normpath(out)
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w", newline="") as fh:
        fh.write("# catalog of genus-zero lambencies and reference "
                 "Fourier coefficients\n")
        fh.write("# meta,<symbol>,<eta quotient>,<root system>\n")
        fh.write("# <symbol>,1A,<r>,<D>,<coeff>\n")
        w = csv.writer(fh)
        for symbol, eta, roots in CATALOG:
            w.writerow(["meta", symbol, eta, roots])
            m = level_of(symbol)
            for r, row in sorted(FIXTURES.get(symbol, {}).items()):
                for n, c in enumerate(row):
                    if c is None:
                        continue
                    D = r * r - 4 * m * n
                    w.writerow([symbol, "1A", r, D, c])
    print("wrote", out)


if __name__ == "__main__":
    main()
