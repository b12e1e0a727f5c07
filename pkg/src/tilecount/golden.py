"""Published table values, transcribed once, used only for verification.

Nothing in :mod:`tilecount.tables` that builds a table may import this
module; only ``verify_table`` reads it.
"""
from __future__ import annotations

# m x n boards tiled by 1 x m tiles; rows m = 2..10, columns n = 1..15.
GENERAL_KX1 = {
    2: [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987],
    3: [1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88, 129, 189],
    4: [1, 1, 1, 2, 3, 4, 5, 7, 10, 14, 19, 26, 36, 50, 69],
    5: [1, 1, 1, 1, 2, 3, 4, 5, 6, 8, 11, 15, 20, 26, 34],
    6: [1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7, 9, 12, 16, 21],
    7: [1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7, 8, 10, 13],
    8: [1, 1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7, 8, 9],
    9: [1, 1, 1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7, 8],
    10: [1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7],
}

# (k+1) x pk boards tiled by 1 x k tiles; rows k = 2..6, columns p = 1..9.
KPLUS1 = {
    2: [3, 11, 41, 153, 571, 2131, 7953, 29681, 110771],
    3: [3, 13, 57, 249, 1087, 4745, 20713, 90417, 394691],
    4: [3, 15, 75, 371, 1833, 9057, 44753, 221137, 1092699],
    5: [3, 17, 95, 521, 2853, 15629, 85625, 469105, 2570031],
    6: [3, 19, 117, 701, 4193, 25101, 150289, 899825, 5387479],
}

# 4 x m boards tiled by dominoes; m = 1..14.
DOMINO_4XM = {
    4: [1, 5, 11, 36, 95, 281, 781, 2245, 6336, 18061, 51205, 145601, 413351, 1174500],
}

# Tatami domino tilings of m x n boards; rows m = 2..4, columns n = 1..15.
TATAMI = {
    2: [1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88, 129, 189, 277],
    3: [0, 3, 0, 4, 0, 6, 0, 10, 0, 16, 0, 26, 0, 42, 0],
    4: [1, 4, 4, 2, 3, 3, 3, 5, 5, 6, 8, 8, 11, 13, 14],
}

EXPECTED = {
    "GENERAL_KX1": GENERAL_KX1,
    "KPLUS1": KPLUS1,
    "DOMINO_4XM": DOMINO_4XM,
    "TATAMI": TATAMI,
}
