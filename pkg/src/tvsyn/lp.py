"""Dense phase-one simplex for feasibility of ``A x = b, x >= 0``.

The problems arising from dictionary pruning have at most a few hundred
columns, so a full tableau with Bland's anti-cycling rule is adequate.
"""

from __future__ import annotations

import numpy as np

from .exceptions import LPFailure

PIVOT_EPS = 1e-11


def feasible_point(A, b, tol: float = 1e-8, max_iter: int | None = None):
    """Return ``(is_feasible, x)`` for the system ``A x = b, x >= 0``.

    ``x`` is the phase-one basic solution (meaningful only when feasible).
    Feasibility is declared when ``max |A x - b| <= tol``.
    """
    A = np.array(A, dtype=float, copy=True)
    b = np.array(b, dtype=float, copy=True).reshape(-1)
    m, N = A.shape
    if b.shape[0] != m:
        raise ValueError("A and b have incompatible shapes")
    flip = b < 0
    A[flip] *= -1
    b[flip] *= -1

    # columns: N structural, m artificial, then right-hand side
    T = np.zeros((m + 1, N + m + 1))
    T[:m, :N] = A
    T[:m, N:N + m] = np.eye(m)
    T[:m, -1] = b
    T[m, :N] = -A.sum(axis=0)
    T[m, -1] = -b.sum()
    basis = list(range(N, N + m))

    if max_iter is None:
        max_iter = 50 * (N + m) + 100
    for _ in range(max_iter):
        reduced = T[m, :N + m]
        candidates = np.flatnonzero(reduced < -PIVOT_EPS)
        if candidates.size == 0:
            break
        col = int(candidates[0])
        column = T[:m, col]
        rows = np.flatnonzero(column > PIVOT_EPS)
        if rows.size == 0:
            # unbounded direction cannot occur in phase one (objective >= 0)
            raise LPFailure("phase-one problem reported unbounded")
        ratios = T[rows, -1] / column[rows]
        best = ratios.min()
        ties = rows[ratios <= best + 1e-14 * max(1.0, abs(best))]
        row = int(min(ties, key=lambda r: basis[r]))
        T[row] /= T[row, col]
        for r in range(m + 1):
            if r != row and T[r, col] != 0.0:
                T[r] -= T[r, col] * T[row]
        basis[row] = col
    else:
        raise LPFailure(f"simplex hit the iteration cap ({max_iter})")

    x = np.zeros(N + m)
    for r, j in enumerate(basis):
        x[j] = T[r, -1]
    x_struct = np.clip(x[:N], 0.0, None)
    residual = np.max(np.abs(A @ x_struct - b), initial=0.0)
    return bool(residual <= tol), x_struct
