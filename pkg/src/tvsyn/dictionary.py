"""Synthesis dictionaries for analysis operators.

A :class:`Dictionary` splits the synthesis design into an unpenalized block
``J`` spanning the nullspace of the operator and a block ``X`` of penalized
atoms. Fitting the lasso on ``[J X]`` with only ``X`` penalized reproduces the
analysis fit, provided every atom satisfies ``||D x||_1 = 1``.

Two scalings are in use:

``l1_image``
    ``||D x||_1 = 1`` for every atom.
``unit_row``
    each atom is a column of some bordered inverse ``B^{-1}``, so the row of
    ``B`` it pairs with evaluates to 1 on it. Printed closed forms use this.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from ._guards import enum_limit
from .exceptions import (
    BadOrder,
    BadShape,
    InversionFailure,
    NotTree,
    RankZero,
    ShapeMismatch,
    Singular,
    TooManySubsets,
)
from .graph import (
    DirectedGraph,
    branched_path,
    cycle_graph,
    derivative_operator,
    enumerate_two_partitions,
    incidence_matrix,
    is_tree,
    path_graph,
)
from .linalg import _leading_sign, invert, nullspace, rank, rowspace_projector
from .lp import feasible_point

NORMALIZATIONS = ("l1_image", "unit_row")
MAX_SUBSETS = 50_000
DEDUP_TOL = 1e-8
HULL_TOL = 1e-8


@dataclass
class Dictionary:
    J: np.ndarray
    X: np.ndarray
    normalization: str = "l1_image"
    provenance: str = "recipe"
    r: int | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.J = np.asarray(self.J, dtype=float)
        self.X = np.asarray(self.X, dtype=float)
        if self.J.ndim == 1:
            self.J = self.J[:, None]
        if self.normalization not in NORMALIZATIONS:
            raise ValueError(f"unknown normalization {self.normalization!r}")
        if self.J.shape[0] != self.X.shape[0]:
            raise ShapeMismatch(
                f"J has {self.J.shape[0]} rows but X has {self.X.shape[0]}"
            )
        if self.r is None:
            self.r = self.n - self.J.shape[1]

    @property
    def n(self) -> int:
        return self.X.shape[0]

    @property
    def p(self) -> int:
        return self.X.shape[1]

    @property
    def matrix(self) -> np.ndarray:
        """``[J X]``."""
        return np.hstack([self.J, self.X])

    def renormalized(self, D) -> "Dictionary":
        """Copy with every atom rescaled to ``||D x||_1 = 1``."""
        D = np.asarray(D, dtype=float)
        scale = np.abs(D @ self.X).sum(axis=0)
        if np.any(scale <= 0):
            raise ShapeMismatch("an atom lies in the nullspace of the operator")
        return Dictionary(self.J.copy(), self.X / scale, "l1_image",
                          self.provenance, self.r, dict(self.meta))


# -- atom canonicalisation ----------------------------------------------------

def canonical_atoms(atoms, D) -> np.ndarray:
    """Center atoms onto the row space of ``D``, rescale to ``||D x||_1 = 1``
    and flip signs so the first nonzero coordinate is positive."""
    D = np.asarray(D, dtype=float)
    atoms = np.asarray(atoms, dtype=float)
    C = rowspace_projector(D) @ atoms
    scale = np.abs(D @ atoms).sum(axis=0)
    if np.any(scale <= 1e-14):
        raise ShapeMismatch("an atom lies in the nullspace of the operator")
    C = C / scale
    for j in range(C.shape[1]):
        C[:, j] *= _leading_sign(C[:, j])
    return C


def _canonical_signs(atoms, D) -> np.ndarray:
    C = rowspace_projector(D) @ np.asarray(atoms, dtype=float)
    return np.array([_leading_sign(C[:, j]) for j in range(C.shape[1])])


def unique_columns(C, tol: float = DEDUP_TOL) -> list[int]:
    """Indices of the first occurrence of each column up to ``tol`` (max-abs)."""
    kept: list[int] = []
    for j in range(C.shape[1]):
        col = C[:, j]
        if not any(np.max(np.abs(C[:, i] - col)) <= tol for i in kept):
            kept.append(j)
    return kept


def _sort_key(col) -> tuple:
    return tuple(np.round(col, 9) + 0.0)


# -- pruning ------------------------------------------------------------------

def prune_convex_hull(atoms, tol: float = HULL_TOL) -> tuple[list[int], list[int]]:
    """Drop atoms lying in the convex hull of the other atoms and their negatives.

    Atoms are tested in ascending index order, each against the atoms that
    are still kept at that point.
    """
    X = np.asarray(atoms, dtype=float)
    n, p = X.shape
    if p < 1:
        raise ValueError("need at least one atom")
    kept = list(range(p))
    removed = []
    for k in range(p):
        others = [j for j in kept if j != k]
        if not others:
            continue
        Xo = X[:, others]
        A = np.vstack([np.hstack([Xo, -Xo]), np.ones((1, 2 * len(others)))])
        b = np.concatenate([X[:, k], [1.0]])
        inside, _ = feasible_point(A, b, tol=tol)
        if inside:
            kept.remove(k)
            removed.append(k)
    return kept, removed


# -- general recipe -----------------------------------------------------------

def synthesize_dictionary(D, normalization: str = "l1_image", border=None,
                          prune: bool = True) -> Dictionary:
    """Dictionary of an arbitrary analysis operator by bordered inversion.

    Every set of ``r = rank(D)`` linearly independent rows is stacked under
    ``border`` (default: an orthonormal nullspace basis) and inverted. The
    leading ``n - r`` columns of the inverse form ``J``; the rest are pooled,
    deduplicated, pruned against the convex hull and sorted.
    """
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"unknown normalization {normalization!r}")
    D = np.atleast_2d(np.asarray(D, dtype=float))
    m, n = D.shape
    r = rank(D)
    if r == 0:
        raise RankZero("operator has rank zero")
    count = math.comb(m, r)
    limit = enum_limit(MAX_SUBSETS)
    if count > limit:
        raise TooManySubsets(f"C({m}, {r}) = {count} row subsets exceeds guard {limit}")
    if border is None:
        A = nullspace(D).T
    else:
        A = np.atleast_2d(np.asarray(border, dtype=float)).reshape(-1, n)
        if A.shape[0] != n - r:
            raise ShapeMismatch(f"border needs {n - r} rows, got {A.shape[0]}")

    J = None
    blocks = []
    for rows in itertools.combinations(range(m), r):
        DT = D[list(rows)]
        if rank(DT) < r:
            continue
        try:
            Binv = invert(np.vstack([A, DT]))
        except Singular as exc:
            raise InversionFailure(f"bordered matrix for rows {rows} is singular") from exc
        if J is None:
            J = Binv[:, : n - r]
        blocks.append(Binv[:, n - r:])
    pooled = np.hstack(blocks)

    canon = canonical_atoms(pooled, D)
    keep = unique_columns(canon)
    if prune:
        kept, _ = prune_convex_hull(canon[:, keep])
        keep = [keep[i] for i in kept]
    keep.sort(key=lambda j: _sort_key(canon[:, j]))

    X = pooled[:, keep]
    if normalization == "l1_image":
        X = X / np.abs(D @ X).sum(axis=0)
        X = X * _canonical_signs(X, D)
    return Dictionary(J, X, normalization, "recipe", r,
                      {"pooled": pooled.shape[1], "subsets": len(blocks)})


# -- graph shortcuts ----------------------------------------------------------

def tree_dictionary(g: DirectedGraph, root: int = 1) -> Dictionary:
    """Path matrix of a tree: 0/1 indicators of the subtree cut off by each edge."""
    if not is_tree(g):
        raise NotTree(f"graph with n={g.n}, m={g.m} is not a tree")
    D = incidence_matrix(g)
    e = np.zeros(g.n)
    e[root - 1] = 1.0
    V = invert(np.vstack([e, D]))
    X = V[:, 1:]
    # columns are +-indicators; orientation towards the root gives the minus sign
    X = X * np.where(X.sum(axis=0) < 0, -1.0, 1.0)
    X = np.rint(X)
    return Dictionary(V[:, :1], X, "l1_image", "tree", g.n - 1, {"root": root})


def cut_dictionary(g: DirectedGraph, root: int = 1) -> Dictionary:
    """Scaled indicators of every connected two-sided split of the vertices."""
    parts = enumerate_two_partitions(g, root)
    X = np.zeros((g.n, len(parts)))
    for j, part in enumerate(parts):
        for v in part.v2:
            X[v - 1, j] = 1.0
        X[:, j] /= len(part.cut_edges)
    return Dictionary(np.ones((g.n, 1)), X, "l1_image", "cuts", g.n - 1, {"root": root})


# -- closed forms -------------------------------------------------------------

def _check_order(k: int) -> None:
    if k not in (1, 2, 3):
        raise BadOrder(f"closed forms exist for k in {{1, 2, 3}}, got {k}")


def path_border(n: int, k: int) -> np.ndarray:
    """Border rows used with the path closed forms: leading rows of ``D^0..D^{k-1}``."""
    _check_order(k)
    rows = [[1.0], [-1.0, 1.0], [1.0, -2.0, 1.0]][:k]
    A = np.zeros((k, n))
    for i, row in enumerate(rows):
        A[i, : len(row)] = row
    return A


def _path_inverse(n: int, k: int) -> np.ndarray:
    i = np.arange(1, n + 1)[:, None]
    j = np.arange(1, n + 1)[None, :]
    lower = j <= i
    if k == 1:
        V = lower * 1.0
    elif k == 2:
        V = lower * (i - j + 1.0)
        V[:, 0] = 1.0
    else:
        V = lower * (i - j + 1.0) * (i - j + 2.0) / 2
        V[:, 0] = 1.0
        V[:, 1] = i[:, 0] - 1.0
    return V


def closed_form_path(n: int, k: int) -> Dictionary:
    _check_order(k)
    if n <= k:
        raise BadShape(f"path needs n > k, got n={n}, k={k}")
    V = _path_inverse(n, k)
    return Dictionary(V[:, :k], V[:, k:], "unit_row", f"closed_form(path,{k})", n - k)


def _branched_inverse(n: int, b: int, n1: int, k: int) -> np.ndarray:
    i = np.arange(1, n + 1)[:, None]
    j = np.arange(1, n + 1)[None, :]
    side = i >= n1 + 1
    if k == 1:
        V = (j <= i) * 1.0 - (side & (j >= b + 1) & (j <= n1)) * 1.0
        return V
    if k == 2:
        V = ((j <= i) & (i <= n1)) * (i - j + 1.0)
        V = V + (side & (j <= b)) * (i - n1 + b - j + 1.0)
        V = V + ((n1 + 1 <= j) & (j <= i)) * (i - j + 1.0)
        V[:, 0] = 1.0
        return V
    V = ((j <= i) & (i <= n1)) * (i - j + 1.0) * (i - j + 2.0) / 2
    V = V + ((i >= j) & (j > n1)) * (i - j + 1.0) * (i - j + 2.0) / 2
    s = i - j - n1 + b
    V = V + (side & (j <= b)) * (s + 1.0) * (s + 2.0) / 2
    V[:, 0] = 1.0
    col = np.arange(1, n + 1)
    V[:, 1] = np.where(col <= n1, col - 1.0, col - 1.0 - n1 + b)
    return V


def closed_form_branched(n: int, b: int, n1: int, k: int) -> Dictionary:
    _check_order(k)
    if not (1 < b < n1 < n):
        raise BadShape(f"need 1 < b < n1 < n, got n={n}, b={b}, n1={n1}")
    if k == 3 and b < 3:
        # no third-order difference is centred at the branch point
        raise BadShape("k=3 needs the branch point at b >= 3")
    V = _branched_inverse(n, b, n1, k)
    return Dictionary(V[:, :k], V[:, k:], "unit_row",
                      f"closed_form(branched,{k})", n - k, {"b": b, "n1": n1})


def shift_matrix(n: int) -> np.ndarray:
    """Cyclic shift whose columns are ``e_n, e_1, ..., e_{n-1}``."""
    I = np.eye(n)
    return np.hstack([I[:, n - 1:], I[:, : n - 1]])


def rotate_atoms(atoms, count: int) -> np.ndarray:
    """Apply ``T^0, ..., T^{count-1}`` to every column; no deduplication."""
    atoms = np.asarray(atoms, dtype=float)
    n = atoms.shape[0]
    if count > n:
        raise ValueError(f"count {count} exceeds dimension {n}")
    # T x is x rolled up by one position
    return np.hstack([np.roll(atoms, -s, axis=0) for s in range(count)])


def cycle_reference(n: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Bordered matrix ``B`` for the reference row deletion and its closed-form inverse.

    For k = 1, 2 the last row of ``D^k`` is deleted; for k = 3 the second
    to last. The border row is ``1_n'``.
    """
    _check_order(k)
    if n < k + 1 or n < 3:
        raise BadShape(f"cycle closed form needs n >= max(3, k + 1), got n={n}")
    D = derivative_operator(cycle_graph(n), k)
    dropped = n - 1 if k < 3 else n - 2
    B = np.vstack([np.ones(n), np.delete(D, dropped, axis=0)])
    V = np.zeros((n, n))
    V[:, 0] = 1.0 / n
    i = np.arange(1, n + 1)
    if k == 1:
        for j in range(2, n + 1):
            V[:, j - 1] = np.where(i <= j - 1, -1.0 + (j - 1) / n, (j - 1) / n)
    elif k == 2:
        for j in range(2, n + 1):
            u = np.empty(n)
            u[0] = n - j + 2
            mid = np.arange(2, j)
            u[1: j - 1] = n - j + 2 - (mid - 1) * (n - j + 1) / (j - 1)
            u[j - 1:] = np.arange(1, n - j + 2)
            V[:, j - 1] = (j - 1) / n * (u - (n - j + 3) / 2)
    else:
        for j in range(1, n):
            v = np.where(
                i <= j,
                (n - j) / (2 * n) * (i - 1) * (j - i),
                -j / (2 * n) * (i - j) * (n + 1 - i),
            )
            v = v + j * (n - j) * (n - 2 * j + 3) / (12 * n)
            col = j if j >= 2 else n
            V[:, col - 1] = v
    return B, V


def closed_form_cycle(n: int, k: int, rotate: bool = True) -> Dictionary:
    """Cycle dictionary from the closed-form reference atoms.

    With ``rotate`` the reference atoms are closed under cyclic shifts and
    antipodal duplicates are removed.
    """
    B, V = cycle_reference(n, k)
    atoms = V[:, 1:]
    if rotate:
        D = derivative_operator(cycle_graph(n), k)
        pool = rotate_atoms(atoms, n)
        atoms = pool[:, unique_columns(canonical_atoms(pool, D))]
    return Dictionary(V[:, :1], atoms, "unit_row", f"closed_form(cycle,{k})", n - 1)


# -- comparison ---------------------------------------------------------------

def dictionaries_equivalent(d1: Dictionary, d2: Dictionary, D, tol: float = 1e-7) -> bool:
    """Same nullspace block span and same centered atom set up to sign and scale."""
    D = np.atleast_2d(np.asarray(D, dtype=float))
    if not (d1.n == d2.n == D.shape[1]):
        raise ShapeMismatch(f"sizes differ: {d1.n}, {d2.n}, operator has {D.shape[1]} columns")
    if d1.J.shape[1] != d2.J.shape[1]:
        return False
    if d1.J.shape[1]:
        both = rank(np.hstack([d1.J, d2.J]))
        if both != rank(d1.J) or both != rank(d2.J):
            return False
    c1 = canonical_atoms(d1.X, D)
    c2 = canonical_atoms(d2.X, D)
    c1 = c1[:, unique_columns(c1, tol)]
    c2 = c2[:, unique_columns(c2, tol)]
    if c1.shape[1] != c2.shape[1]:
        return False
    for j in range(c1.shape[1]):
        if not np.any(np.max(np.abs(c2 - c1[:, [j]]), axis=0) <= tol):
            return False
    return True


# -- dispatch -----------------------------------------------------------------

METHODS = ("recipe", "tree", "cuts", "closed-form")


def detect_family(g: DirectedGraph) -> tuple:
    """Identify ``g`` as one of the closed-form families.

    Returns ``("path", n)``, ``("cycle", n)`` or ``("branched", n, b, n1)``;
    the edge list must match the family constructor exactly.
    """
    n = g.n
    if g.edges == path_graph(n).edges:
        return ("path", n)
    if n >= 3 and g.edges == cycle_graph(n).edges:
        return ("cycle", n)
    if g.m == n - 1:
        for n1 in range(3, n):
            for b in range(2, n1):
                if g.edges == branched_path(n, b, n1).edges:
                    return ("branched", n, b, n1)
    raise BadShape("graph is not a path, cycle or branched path in canonical labelling")


def closed_form_dictionary(g: DirectedGraph, k: int) -> Dictionary:
    family = detect_family(g)
    if family[0] == "path":
        return closed_form_path(family[1], k)
    if family[0] == "cycle":
        return closed_form_cycle(family[1], k)
    return closed_form_branched(*family[1:], k)


def build_dictionary(g: DirectedGraph, k: int = 1, method: str = "recipe",
                     normalization: str = "l1_image") -> Dictionary:
    """Dictionary for ``D^k`` of ``g`` by the named construction.

    ``tree`` and ``cuts`` are first-order constructions. ``normalization``
    only affects the recipe; the other methods keep their native scaling.
    """
    method = method.replace("_", "-")
    if method == "recipe":
        return synthesize_dictionary(derivative_operator(g, k), normalization)
    if method in ("tree", "cuts") and k != 1:
        raise BadOrder(f"the {method} dictionary is defined for k = 1 only")
    if method == "tree":
        return tree_dictionary(g)
    if method == "cuts":
        return cut_dictionary(g)
    if method == "closed-form":
        return closed_form_dictionary(g, k)
    raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
