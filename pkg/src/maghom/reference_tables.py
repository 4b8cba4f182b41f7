"""Published rank tables, transcribed as ``{(k, l): rank}``; unlisted cells are zero."""
from __future__ import annotations


def _diag(values):
    return {(k, k): v for k, v in enumerate(values)}


def _rows(rows):
    # rows[l] = {k: rank}
    return {(k, l): v for l, row in enumerate(rows) for k, v in row.items()}


# cycle graph C8, 0 <= l <= 10
C8 = _rows([
    {0: 8},
    {1: 16},
    {2: 16},
    {3: 16},
    {2: 8, 4: 16},
    {3: 16, 5: 16},
    {4: 16, 6: 16},
    {5: 16, 7: 16},
    {4: 8, 6: 16, 8: 16},
    {5: 16, 7: 16, 9: 16},
    {6: 16, 8: 16, 10: 16},
])
C8_LMAX = 10

# square plus two triangles on adjacent / opposite sides, l <= 7
SQ1 = _diag([6, 16, 32, 60, 112, 212, 408, 796])
SQ2 = _rows([
    {0: 6},
    {1: 16},
    {2: 32},
    {2: 2, 3: 60},
    {3: 12, 4: 112},
    {4: 44, 5: 212},
    {4: 2, 5: 132, 6: 408},
    {5: 16, 6: 356, 7: 796},
])
SQ_LMAX = 7

# main diagonals, k <= 6
PENTOMINO_P1 = [11, 30, 50, 70, 90, 110, 130]
PENTOMINO_P2 = [12, 32, 52, 72, 92, 112, 132]
WHEEL_LEFT = [6, 20, 60, 180, 540, 1620, 4860]
WHEEL_RIGHT = [9, 32, 96, 288, 864, 2592, 7776]

# P-pentomino: three cells in a row with two on top of the left pair
P_PENTOMINO_CELLS = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1)]
