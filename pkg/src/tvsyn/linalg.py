"""Dense linear algebra helpers: inverse, rank, pseudoinverses, projectors."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable

import numpy as np
import scipy.linalg

from .exceptions import ConvergenceFailure, EmptyComplement, RankDeficientBasis, Singular

PIVOT_TOL = 1e-12
RANK_TOL = 1e-10
GRAM_COND_WARN = 1e12


@dataclass(frozen=True)
class ProjectionPair:
    projector: np.ndarray
    antiprojector: np.ndarray
    subspace_basis: np.ndarray


def invert(M) -> np.ndarray:
    """Inverse through partial-pivot LU; raises :class:`Singular` on a tiny pivot."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if M.shape[0] == 0:
        return np.zeros((0, 0))
    with warnings.catch_warnings():
        # an exactly zero pivot is reported through Singular below
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(M, check_finite=True)
    if np.min(np.abs(np.diag(lu))) < PIVOT_TOL:
        raise Singular("matrix is singular to working precision")
    return scipy.linalg.lu_solve((lu, piv), np.eye(M.shape[0]))


def rank(M, tol: float = RANK_TOL) -> int:
    """Number of singular values above ``tol`` times the largest one."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def pseudoinverse_svd(M, tol: float = RANK_TOL) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return np.zeros(M.shape[::-1])
    try:
        U, s, Vt = np.linalg.svd(M, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    keep = s > tol * s[0] if s[0] > 0 else np.zeros_like(s, dtype=bool)
    inv_s = np.zeros_like(s)
    inv_s[keep] = 1.0 / s[keep]
    return (Vt.T * inv_s) @ U.T


def projection_pair(basis) -> ProjectionPair:
    """Orthogonal projector onto the column span of ``basis`` and its complement.

    Uses the Gram formula ``B (B'B)^{-1} B'``.
    """
    B = np.asarray(basis, dtype=float)
    if B.ndim == 1:
        B = B[:, None]
    n, d = B.shape
    if d == 0:
        return ProjectionPair(np.zeros((n, n)), np.eye(n), B)
    if rank(B) < d:
        raise RankDeficientBasis(f"basis of {d} columns has rank {rank(B)}")
    gram = B.T @ B
    cond = np.linalg.cond(gram)
    if cond > GRAM_COND_WARN:
        warnings.warn(f"ill-conditioned Gram matrix (cond={cond:.3g})", RuntimeWarning)
    P = B @ np.linalg.solve(gram, B.T)
    P = (P + P.T) / 2
    return ProjectionPair(P, np.eye(n) - P, B)


def pseudoinverse_bordered(D_full, U: Iterable[int]) -> np.ndarray:
    """Pseudoinverse of ``D_full`` with rows ``U`` deleted, via the bordered inverse.

    With ``X = D_full^{-1}``, the result is ``A_U X_{-U}`` where ``A_U`` is the
    antiprojection onto the span of the columns ``X_U``.
    """
    D_full = np.asarray(D_full, dtype=float)
    n = D_full.shape[0]
    U = sorted(set(int(u) for u in U))
    if any(u < 0 or u >= n for u in U):
        raise IndexError(f"row indices {U} outside 0..{n - 1}")
    if len(U) == n:
        raise EmptyComplement("deleting every row leaves nothing to invert")
    X = invert(D_full)
    rest = [i for i in range(n) if i not in set(U)]
    if not U:
        return X
    anti = projection_pair(X[:, U]).antiprojector
    return anti @ X[:, rest]


def nullspace(M, tol: float = RANK_TOL) -> np.ndarray:
    """Orthonormal nullspace basis, columns sign-fixed so the first nonzero entry is positive."""
    M = np.asarray(M, dtype=float)
    n = M.shape[1]
    if M.size == 0:
        return np.eye(n)
    _, s, Vt = np.linalg.svd(M, full_matrices=True)
    r = int(np.sum(s > tol * s[0])) if s.size and s[0] > 0 else 0
    N = Vt[r:].T.copy()
    for j in range(N.shape[1]):
        N[:, j] *= _leading_sign(N[:, j])
    return N


def _leading_sign(v, tol: float = 1e-9) -> float:
    scale = np.max(np.abs(v)) if v.size else 0.0
    for x in v:
        if abs(x) > tol * max(scale, 1.0):
            return 1.0 if x > 0 else -1.0
    return 1.0


def rowspace_projector(D) -> np.ndarray:
    """Orthogonal projector onto the row space of ``D`` (the complement of its nullspace)."""
    D = np.asarray(D, dtype=float)
    N = nullspace(D)
    return np.eye(D.shape[1]) - N @ N.T


def moore_penrose_residuals(M, P) -> tuple[float, float, float, float]:
    """Max-abs residuals of the four Penrose equations for candidate ``P`` of ``M``."""
    M = np.asarray(M, dtype=float)
    P = np.asarray(P, dtype=float)
    MP = M @ P
    PM = P @ M
    return (
        float(np.max(np.abs(MP @ M - M), initial=0.0)),
        float(np.max(np.abs(PM @ P - P), initial=0.0)),
        float(np.max(np.abs(MP - MP.T), initial=0.0)),
        float(np.max(np.abs(PM - PM.T), initial=0.0)),
    )
