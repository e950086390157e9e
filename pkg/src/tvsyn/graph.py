"""Directed graphs, incidence matrices, line graphs and k-th order derivatives.

Vertices are labelled ``1..n`` as in the graph file format. Edge indices are
0-based and coincide with row indices of the incidence matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._guards import enum_limit
from .exceptions import (
    DegenerateLineGraph,
    IndexOutOfRange,
    NotConnected,
    SelfLoop,
    TooLarge,
)

MAX_TREE_EDGES = 24
MAX_PARTITION_VERTICES = 20


@dataclass(frozen=True)
class DirectedGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise IndexOutOfRange(f"vertex count must be >= 1, got {self.n}")
        for i, (tail, head) in enumerate(self.edges):
            if not (1 <= tail <= self.n and 1 <= head <= self.n):
                raise IndexOutOfRange(
                    f"edge {i} = ({tail}, {head}) outside vertex range 1..{self.n}"
                )
            if tail == head:
                raise SelfLoop(f"edge {i} is a self-loop at vertex {tail}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def tails(self) -> np.ndarray:
        return np.array([t for t, _ in self.edges], dtype=int)

    def heads(self) -> np.ndarray:
        return np.array([h for _, h in self.edges], dtype=int)


@dataclass(frozen=True)
class Partition:
    """Split of the vertex set into a rooted side and ``v2``.

    ``cut_edges`` holds the (0-based) indices of edges with one endpoint on
    each side.
    """

    v2: frozenset[int]
    cut_edges: tuple[int, ...]


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> DirectedGraph:
    edges = tuple((int(a), int(b)) for a, b in pairs)
    return DirectedGraph(int(n), edges)


# -- standard families --------------------------------------------------------

def path_graph(n: int) -> DirectedGraph:
    return from_edge_list(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> DirectedGraph:
    if n < 3:
        raise IndexOutOfRange("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def star_graph(n: int) -> DirectedGraph:
    """Star with ``n`` vertices, centre 1, all edges pointing outwards."""
    return from_edge_list(n, [(1, i) for i in range(2, n + 1)])


def branched_path(n: int, b: int, n1: int) -> DirectedGraph:
    """Main path ``1..n1`` with a side path ``n1+1..n`` attached at vertex ``b``."""
    if not (1 < b < n1 < n):
        raise IndexOutOfRange(f"need 1 < b < n1 < n, got b={b}, n1={n1}, n={n}")
    pairs = [(i, i + 1) for i in range(1, n1)]
    pairs.append((b, n1 + 1))
    pairs += [(i, i + 1) for i in range(n1 + 1, n)]
    return from_edge_list(n, pairs)


def grid_graph(side: int) -> DirectedGraph:
    """``side x side`` grid; edges point towards the larger vertex label."""
    def label(r, c):
        return r * side + c + 1

    pairs = []
    for r in range(side):
        for c in range(side - 1):
            pairs.append((label(r, c), label(r, c + 1)))
    for r in range(side - 1):
        for c in range(side):
            pairs.append((label(r, c), label(r + 1, c)))
    return from_edge_list(side * side, pairs)


def complete_graph(n: int) -> DirectedGraph:
    return from_edge_list(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


# -- operators ----------------------------------------------------------------

def incidence_matrix(g: DirectedGraph) -> np.ndarray:
    D = np.zeros((g.m, g.n))
    for i, (tail, head) in enumerate(g.edges):
        D[i, tail - 1] = -1.0
        D[i, head - 1] = 1.0
    return D


def line_graph(g: DirectedGraph) -> DirectedGraph:
    """Directed line graph; vertex ``i + 1`` of the result is edge ``i`` of ``g``.

    Edges ``(e_i, e_j)`` with ``head(e_i) == tail(e_j)`` are listed in
    lexicographic order of ``(i, j)``. Anti-parallel pairs are kept.
    """
    if g.m == 0:
        raise DegenerateLineGraph("graph has no edges, line graph is empty")
    by_tail: dict[int, list[int]] = {}
    for j, (tail, _) in enumerate(g.edges):
        by_tail.setdefault(tail, []).append(j)
    pairs = []
    for i, (_, head) in enumerate(g.edges):
        for j in by_tail.get(head, ()):
            if j != i:
                pairs.append((i + 1, j + 1))
    return from_edge_list(g.m, pairs)


def derivative_operator(g: DirectedGraph, k: int) -> np.ndarray:
    """k-th order graph derivative ``D_{L^{k-1}} ... D_{L^1} D_G``."""
    if k < 1:
        raise ValueError(f"order k must be >= 1, got {k}")
    if g.m == 0:
        raise DegenerateLineGraph("graph has no edges")
    op = incidence_matrix(g)
    current = g
    for order in range(1, k):
        current = line_graph(current)
        if current.m == 0:
            raise DegenerateLineGraph(
                f"line graph of order {order} has no edges; D^{k} is undefined"
            )
        op = incidence_matrix(current) @ op
    return op


# -- connectivity -------------------------------------------------------------

def _adjacency(g: DirectedGraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n + 1)]
    for tail, head in g.edges:
        adj[tail].add(head)
        adj[head].add(tail)
    return adj


def connected_components(g: DirectedGraph) -> list[frozenset[int]]:
    """Undirected components, ordered by smallest vertex."""
    adj = _adjacency(g)
    seen = [False] * (g.n + 1)
    components = []
    for start in range(1, g.n + 1):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        components.append(frozenset(comp))
    return components


def is_connected(g: DirectedGraph) -> bool:
    return len(connected_components(g)) == 1


def is_tree(g: DirectedGraph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def _require_connected(g: DirectedGraph) -> None:
    if not is_connected(g):
        raise NotConnected(f"graph has {len(connected_components(g))} components")


# -- spanning trees -----------------------------------------------------------

class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n + 1))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x


def enumerate_spanning_trees(g: DirectedGraph) -> list[tuple[int, ...]]:
    """All spanning trees as sorted tuples of edge indices, in lexicographic order."""
    _require_connected(g)
    limit = enum_limit(MAX_TREE_EDGES)
    if g.m > limit:
        raise TooLarge(f"{g.m} edges exceeds spanning-tree guard {limit}")
    need = g.n - 1
    if need == 0:
        return [()]
    result: list[tuple[int, ...]] = []
    chosen: list[int] = []

    # Depth-first over edge indices in increasing order yields lexicographic output.
    # Union-find is rebuilt from `chosen` at each level; trees are tiny.
    def extend(start: int) -> None:
        if len(chosen) == need:
            result.append(tuple(chosen))
            return
        if g.m - start < need - len(chosen):
            return
        uf = _UnionFind(g.n)
        for e in chosen:
            a, b = g.edges[e]
            uf.parent[uf.find(a)] = uf.find(b)
        for e in range(start, g.m - (need - len(chosen)) + 1):
            a, b = g.edges[e]
            if uf.find(a) == uf.find(b):
                continue
            chosen.append(e)
            extend(e + 1)
            chosen.pop()

    extend(0)
    return result


def laplacian(g: DirectedGraph) -> np.ndarray:
    D = incidence_matrix(g)
    return D.T @ D


def count_spanning_trees_kirchhoff(g: DirectedGraph) -> int:
    _require_connected(g)
    if g.n == 1:
        return 1
    L = laplacian(g)
    return int(round(np.linalg.det(L[1:, 1:])))


# -- two-sided connected partitions --------------------------------------------

def _is_connected_subset(mask: int, adj: list[set[int]], n: int) -> bool:
    start = (mask & -mask).bit_length()
    stack = [start]
    seen = 1 << (start - 1)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            bit = 1 << (w - 1)
            if mask & bit and not seen & bit:
                seen |= bit
                stack.append(w)
    return seen == mask


def enumerate_two_partitions(g: DirectedGraph, root: int = 1) -> list[Partition]:
    """All splits into two connected sides with ``root`` on the first side.

    Sorted by the bit pattern of ``v2`` (vertex ``v`` is bit ``v - 1``).
    """
    _require_connected(g)
    if not 1 <= root <= g.n:
        raise IndexOutOfRange(f"root {root} outside 1..{g.n}")
    limit = enum_limit(MAX_PARTITION_VERTICES)
    if g.n > limit:
        raise TooLarge(f"{g.n} vertices exceeds partition guard {limit}")
    adj = _adjacency(g)
    full = (1 << g.n) - 1
    root_bit = 1 << (root - 1)
    tails = [t for t, _ in g.edges]
    heads = [h for _, h in g.edges]
    out = []
    for mask in range(1, full + 1):
        if mask & root_bit:
            continue
        if not _is_connected_subset(mask, adj, g.n):
            continue
        if not _is_connected_subset(full ^ mask, adj, g.n):
            continue
        cut = tuple(
            i for i in range(g.m)
            if bool(mask >> (tails[i] - 1) & 1) != bool(mask >> (heads[i] - 1) & 1)
        )
        v2 = frozenset(v for v in range(1, g.n + 1) if mask >> (v - 1) & 1)
        out.append(Partition(v2, cut))
    return out
