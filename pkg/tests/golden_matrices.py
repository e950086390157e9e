"""Printed n = 8 operators and inverses used as golden references.

Branched path: n = 8, branch vertex 4, main path 1..6.
"""

from __future__ import annotations

import numpy as np

PATH_D1 = np.array([
    [-1,  1,  0,  0,  0,  0,  0,  0],
    [ 0, -1,  1,  0,  0,  0,  0,  0],
    [ 0,  0, -1,  1,  0,  0,  0,  0],
    [ 0,  0,  0, -1,  1,  0,  0,  0],
    [ 0,  0,  0,  0, -1,  1,  0,  0],
    [ 0,  0,  0,  0,  0, -1,  1,  0],
    [ 0,  0,  0,  0,  0,  0, -1,  1],
], dtype=float)

PATH_V1 = np.array([
    [ 1,  0,  0,  0,  0,  0,  0,  0],
    [ 1,  1,  0,  0,  0,  0,  0,  0],
    [ 1,  1,  1,  0,  0,  0,  0,  0],
    [ 1,  1,  1,  1,  0,  0,  0,  0],
    [ 1,  1,  1,  1,  1,  0,  0,  0],
    [ 1,  1,  1,  1,  1,  1,  0,  0],
    [ 1,  1,  1,  1,  1,  1,  1,  0],
    [ 1,  1,  1,  1,  1,  1,  1,  1],
], dtype=float)

PATH_D2 = np.array([
    [ 1, -2,  1,  0,  0,  0,  0,  0],
    [ 0,  1, -2,  1,  0,  0,  0,  0],
    [ 0,  0,  1, -2,  1,  0,  0,  0],
    [ 0,  0,  0,  1, -2,  1,  0,  0],
    [ 0,  0,  0,  0,  1, -2,  1,  0],
    [ 0,  0,  0,  0,  0,  1, -2,  1],
], dtype=float)

PATH_V2 = np.array([
    [ 1,  0,  0,  0,  0,  0,  0,  0],
    [ 1,  1,  0,  0,  0,  0,  0,  0],
    [ 1,  2,  1,  0,  0,  0,  0,  0],
    [ 1,  3,  2,  1,  0,  0,  0,  0],
    [ 1,  4,  3,  2,  1,  0,  0,  0],
    [ 1,  5,  4,  3,  2,  1,  0,  0],
    [ 1,  6,  5,  4,  3,  2,  1,  0],
    [ 1,  7,  6,  5,  4,  3,  2,  1],
], dtype=float)

PATH_D3 = np.array([
    [-1,  3, -3,  1,  0,  0,  0,  0],
    [ 0, -1,  3, -3,  1,  0,  0,  0],
    [ 0,  0, -1,  3, -3,  1,  0,  0],
    [ 0,  0,  0, -1,  3, -3,  1,  0],
    [ 0,  0,  0,  0, -1,  3, -3,  1],
], dtype=float)

PATH_V3 = np.array([
    [ 1,  0,  0,  0,  0,  0,  0,  0],
    [ 1,  1,  0,  0,  0,  0,  0,  0],
    [ 1,  2,  1,  0,  0,  0,  0,  0],
    [ 1,  3,  3,  1,  0,  0,  0,  0],
    [ 1,  4,  6,  3,  1,  0,  0,  0],
    [ 1,  5, 10,  6,  3,  1,  0,  0],
    [ 1,  6, 15, 10,  6,  3,  1,  0],
    [ 1,  7, 21, 15, 10,  6,  3,  1],
], dtype=float)

BRANCHED_D1 = np.array([
    [-1,  1,  0,  0,  0,  0,  0,  0],
    [ 0, -1,  1,  0,  0,  0,  0,  0],
    [ 0,  0, -1,  1,  0,  0,  0,  0],
    [ 0,  0,  0, -1,  1,  0,  0,  0],
    [ 0,  0,  0,  0, -1,  1,  0,  0],
    [ 0,  0,  0, -1,  0,  0,  1,  0],
    [ 0,  0,  0,  0,  0,  0, -1,  1],
], dtype=float)

BRANCHED_V1 = np.array([
    [ 1,  0,  0,  0,  0,  0,  0,  0],
    [ 1,  1,  0,  0,  0,  0,  0,  0],
    [ 1,  1,  1,  0,  0,  0,  0,  0],
    [ 1,  1,  1,  1,  0,  0,  0,  0],
    [ 1,  1,  1,  1,  1,  0,  0,  0],
    [ 1,  1,  1,  1,  1,  1,  0,  0],
    [ 1,  1,  1,  1,  0,  0,  1,  0],
    [ 1,  1,  1,  1,  0,  0,  1,  1],
], dtype=float)

BRANCHED_D2 = np.array([
    [ 1, -2,  1,  0,  0,  0,  0,  0],
    [ 0,  1, -2,  1,  0,  0,  0,  0],
    [ 0,  0,  1, -2,  1,  0,  0,  0],
    [ 0,  0,  0,  1, -2,  1,  0,  0],
    [ 0,  0,  1, -2,  0,  0,  1,  0],
    [ 0,  0,  0,  1,  0,  0, -2,  1],
], dtype=float)

BRANCHED_V2 = np.array([
    [ 1,  0,  0,  0,  0,  0,  0,  0],
    [ 1,  1,  0,  0,  0,  0,  0,  0],
    [ 1,  2,  1,  0,  0,  0,  0,  0],
    [ 1,  3,  2,  1,  0,  0,  0,  0],
    [ 1,  4,  3,  2,  1,  0,  0,  0],
    [ 1,  5,  4,  3,  2,  1,  0,  0],
    [ 1,  4,  3,  2,  0,  0,  1,  0],
    [ 1,  5,  4,  3,  0,  0,  2,  1],
], dtype=float)

BRANCHED_D3 = np.array([
    [-1,  3, -3,  1,  0,  0,  0,  0],
    [ 0, -1,  3, -3,  1,  0,  0,  0],
    [ 0,  0, -1,  3, -3,  1,  0,  0],
    [ 0, -1,  3, -3,  0,  0,  1,  0],
    [ 0,  0, -1,  3,  0,  0, -3,  1],
], dtype=float)

BRANCHED_V3 = np.array([
    [ 1,  0,  0,  0,  0,  0,  0,  0],
    [ 1,  1,  0,  0,  0,  0,  0,  0],
    [ 1,  2,  1,  0,  0,  0,  0,  0],
    [ 1,  3,  3,  1,  0,  0,  0,  0],
    [ 1,  4,  6,  3,  1,  0,  0,  0],
    [ 1,  5, 10,  6,  3,  1,  0,  0],
    [ 1,  4,  6,  3,  0,  0,  1,  0],
    [ 1,  5, 10,  6,  0,  0,  3,  1],
], dtype=float)

CYCLE_D1 = np.array([
    [-1,  1,  0,  0,  0,  0,  0,  0],
    [ 0, -1,  1,  0,  0,  0,  0,  0],
    [ 0,  0, -1,  1,  0,  0,  0,  0],
    [ 0,  0,  0, -1,  1,  0,  0,  0],
    [ 0,  0,  0,  0, -1,  1,  0,  0],
    [ 0,  0,  0,  0,  0, -1,  1,  0],
    [ 0,  0,  0,  0,  0,  0, -1,  1],
    [ 1,  0,  0,  0,  0,  0,  0, -1],
], dtype=float)

CYCLE_D2 = np.array([
    [ 1, -2,  1,  0,  0,  0,  0,  0],
    [ 0,  1, -2,  1,  0,  0,  0,  0],
    [ 0,  0,  1, -2,  1,  0,  0,  0],
    [ 0,  0,  0,  1, -2,  1,  0,  0],
    [ 0,  0,  0,  0,  1, -2,  1,  0],
    [ 0,  0,  0,  0,  0,  1, -2,  1],
    [ 1,  0,  0,  0,  0,  0,  1, -2],
    [-2,  1,  0,  0,  0,  0,  0,  1],
], dtype=float)

CYCLE_D3 = np.array([
    [-1,  3, -3,  1,  0,  0,  0,  0],
    [ 0, -1,  3, -3,  1,  0,  0,  0],
    [ 0,  0, -1,  3, -3,  1,  0,  0],
    [ 0,  0,  0, -1,  3, -3,  1,  0],
    [ 0,  0,  0,  0, -1,  3, -3,  1],
    [ 1,  0,  0,  0,  0, -1,  3, -3],
    [-3,  1,  0,  0,  0,  0, -1,  3],
    [ 3, -3,  1,  0,  0,  0,  0, -1],
], dtype=float)
