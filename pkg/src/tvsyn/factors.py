"""Inverse scaling factor and compatibility constants of a difference operator.

Edge sets ``S`` are 0-based row indices of ``D``.
"""

from __future__ import annotations

import csv
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.optimize import lsq_linear

from ._guards import enum_limit
from .exceptions import TooManySigns
from .graph import cycle_graph, derivative_operator, grid_graph, path_graph, star_graph
from .linalg import pseudoinverse_svd

MAX_STRONG_SIGNS = 20
MAX_WEAK_SIGNS = 12
FAMILIES = ("path", "grid2d", "star", "cycle")
CSV_COLUMNS = ("family", "n", "m", "s'", "rho", "kappa_strong", "kappa_weak_lo", "kappa_weak_hi")


def inverse_scaling_factor(D) -> float:
    """Largest column 2-norm of the pseudoinverse of ``D``."""
    D = np.atleast_2d(np.asarray(D, dtype=float))
    if not np.any(D):
        raise ValueError("operator is identically zero")
    return float(np.max(np.linalg.norm(pseudoinverse_svd(D), axis=0)))


def _edge_set(S: Iterable[int], m: int) -> list[int]:
    S = sorted(set(int(s) for s in S))
    if any(s < 0 or s >= m for s in S):
        raise IndexError(f"edge indices {S} outside 0..{m - 1}")
    return S


def _sign_patterns(s: int):
    """Sign vectors with the first entry fixed to +1 (the other half are negatives)."""
    for tail in itertools.product((1.0, -1.0), repeat=s - 1):
        yield np.array((1.0,) + tail)


def strong_compat(D, S: Iterable[int]) -> float:
    """``sqrt(s') / max_sigma ||D_S' sigma||_2``; 1 for an empty ``S``.

    This is the exact value of ``inf_f sqrt(s') ||f||_2 / ||(D f)_S||_1``.
    """
    D = np.atleast_2d(np.asarray(D, dtype=float))
    S = _edge_set(S, D.shape[0])
    s = len(S)
    if s == 0:
        return 1.0
    limit = enum_limit(MAX_STRONG_SIGNS)
    if s > limit:
        raise TooManySigns(f"|S'| = {s} exceeds the sign-enumeration guard {limit}")
    DS = D[S]
    best = max(np.linalg.norm(DS.T @ sigma) for sigma in _sign_patterns(s))
    return math.sqrt(s) / best if best > 0 else math.inf


def strong_compat_primal(D, S: Iterable[int], restarts: int = 20, iters: int = 200,
                         seed: int = 0) -> float:
    """Primal search for the strong factor.

    Maximises ``||(D f)_S||_1`` over the unit sphere by the fixed-point
    iteration ``f <- D_S' sign(D_S f) / ||.||``, which never decreases the
    objective. Gives an upper bound on the factor.
    """
    D = np.atleast_2d(np.asarray(D, dtype=float))
    S = _edge_set(S, D.shape[0])
    if not S:
        return 1.0
    DS = D[S]
    rng = np.random.default_rng(seed)
    best = 0.0
    for _ in range(restarts):
        f = rng.standard_normal(D.shape[1])
        f /= np.linalg.norm(f)
        for _ in range(iters):
            g = DS.T @ np.sign(DS @ f)
            norm = np.linalg.norm(g)
            if norm == 0:
                break
            g /= norm
            if np.allclose(g, f, atol=1e-14):
                break
            f = g
        best = max(best, float(np.abs(DS @ f).sum()))
    return math.sqrt(len(S)) / best if best > 0 else math.inf


def strong_compat_constant(D, S: Iterable[int]) -> float:
    """Strong factor in the empirical norm: ``strong_compat / sqrt(n)``."""
    D = np.atleast_2d(np.asarray(D, dtype=float))
    return strong_compat(D, S) / math.sqrt(D.shape[1])


def _excess(D, S, rest, f) -> float:
    Df = D @ f
    return float(np.abs(Df[S]).sum() - np.abs(Df[rest]).sum())


def weak_compat_bounds(D, S: Iterable[int]) -> tuple[float, float]:
    """Certified interval for the weak compatibility constant.

    The constant is ``sqrt(s'/n) / t`` with
    ``t = sup_{||f|| <= 1} ||(D f)_S||_1 - ||(D f)_{-S}||_1``. For each sign
    pattern on ``S`` the inner supremum equals the box-constrained least
    squares value ``min_{|w| <= 1} ||D_S' sigma - D_{-S}' w||_2``. Any
    feasible ``w`` bounds ``t`` from above (lower bound on the constant) and
    the normalised residual is a feasible ``f`` bounding it from below.
    """
    D = np.atleast_2d(np.asarray(D, dtype=float))
    m, n = D.shape
    S = _edge_set(S, m)
    s = len(S)
    if s == 0:
        return (1.0, 1.0)
    limit = enum_limit(MAX_WEAK_SIGNS)
    if s > limit:
        raise TooManySigns(f"|S'| = {s} exceeds the sign-enumeration guard {limit}")
    rest = [i for i in range(m) if i not in set(S)]
    DS, DR = D[S], D[rest]
    t_hi = 0.0
    t_lo = 0.0
    for sigma in _sign_patterns(s):
        target = DS.T @ sigma
        if rest:
            sol = lsq_linear(DR.T, target, bounds=(-1.0, 1.0), method="bvls", tol=1e-12)
            resid = target - DR.T @ sol.x
        else:
            resid = target
        value = float(np.linalg.norm(resid))
        t_hi = max(t_hi, value)
        if value > 0:
            t_lo = max(t_lo, _excess(D, S, rest, resid / value))
    scale = math.sqrt(s / n)
    if t_hi <= 1e-12:
        return (math.inf, math.inf)
    lower = scale / t_hi
    upper = scale / t_lo if t_lo > 0 else math.inf
    return (lower, max(lower, upper))


# -- reports ------------------------------------------------------------------

@dataclass
class FactorReport:
    family: str
    n: int
    m: int
    sprime: tuple[int, ...]
    rho: float
    kappa_strong: float
    kappa_weak: tuple[float, float] | None = None
    notes: dict = field(default_factory=dict)

    @property
    def s(self) -> int:
        return len(self.sprime)

    def row(self) -> list:
        lo, hi = self.kappa_weak if self.kappa_weak else (math.nan, math.nan)
        return [self.family, self.n, self.m, self.s, self.rho, self.kappa_strong, lo, hi]


def family_graph(family: str, n: int):
    """Graph of ``family`` with ``n`` vertices (``grid2d`` needs a square ``n``)."""
    if family == "path":
        return path_graph(n)
    if family == "cycle":
        return cycle_graph(n)
    if family == "star":
        return star_graph(n)
    if family == "grid2d":
        side = math.isqrt(n)
        if side * side != n:
            raise ValueError(f"grid2d needs a square vertex count, got {n}")
        return grid_graph(side)
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def spread_edges(m: int, count: int) -> tuple[int, ...]:
    """``count`` edge indices spread evenly over ``0..m-1``."""
    count = min(count, m)
    if count <= 0:
        return ()
    return tuple(sorted(set(int(round(x)) for x in np.linspace(0, m - 1, count + 2)[1:-1])))


def table1_report(family: str, sizes: Sequence[int],
                  sprime_policy: int | Callable[[int], Iterable[int]] = 1,
                  weak: bool = True) -> list[FactorReport]:
    """``rho`` and compatibility factors of ``D`` over a family of graphs.

    ``sprime_policy`` is either a count of evenly spread edges or a function
    of ``m`` returning edge indices. ``kappa_strong`` is the factor computed
    by :func:`strong_compat`.
    """
    reports = []
    for n in sizes:
        D = derivative_operator(family_graph(family, int(n)), 1)
        m = D.shape[0]
        S = spread_edges(m, sprime_policy) if isinstance(sprime_policy, int) \
            else tuple(sorted(set(sprime_policy(m))))
        bounds = weak_compat_bounds(D, S) if weak and len(S) <= MAX_WEAK_SIGNS else None
        reports.append(FactorReport(family, int(n), m, S, inverse_scaling_factor(D),
                                    strong_compat(D, S), bounds))
    return reports


def write_factor_csv(reports: Iterable[FactorReport], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rep in reports:
        writer.writerow([f"{v:.17g}" if isinstance(v, float) else v for v in rep.row()])
