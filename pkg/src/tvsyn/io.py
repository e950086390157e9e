"""File formats: graph text, matrix CSV, dictionary and fit JSON, atom SVG."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .dictionary import Dictionary
from .exceptions import FormatError
from .graph import DirectedGraph, from_edge_list


# -- graphs -------------------------------------------------------------------

def parse_graph(text: str) -> DirectedGraph:
    """Parse ``n m`` followed by ``m`` lines of ``tail head``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
    if not rows:
        raise FormatError("empty graph file")
    (n, m), pairs = rows[0], rows[1:]
    if len(pairs) != m:
        raise FormatError(f"header announces {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)


def format_graph(g: DirectedGraph) -> str:
    return "".join([f"{g.n} {g.m}\n"] + [f"{a} {b}\n" for a, b in g.edges])


def read_graph(path) -> DirectedGraph:
    return parse_graph(Path(path).read_text())


def write_graph(g: DirectedGraph, path) -> None:
    Path(path).write_text(format_graph(g))


# -- matrices -----------------------------------------------------------------

def format_matrix(M) -> str:
    M = np.atleast_2d(np.asarray(M, dtype=float))
    return "".join(",".join(f"{v:.17g}" for v in row) + "\n" for row in M)


def write_matrix_csv(M, path) -> None:
    Path(path).write_text(format_matrix(M))


def read_matrix_csv(path) -> np.ndarray:
    rows = [line for line in Path(path).read_text().splitlines() if line.strip()]
    try:
        return np.array([[float(v) for v in line.split(",")] for line in rows])
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def read_vector_csv(path) -> np.ndarray:
    """Signal stored as one value per line or as a single comma-separated row."""
    return read_matrix_csv(path).reshape(-1)


# -- dictionaries -------------------------------------------------------------

def dictionary_to_json(d: Dictionary) -> dict:
    """``J`` and ``atoms`` are lists of columns."""
    return {
        "n": d.n,
        "r": d.r,
        "normalization": d.normalization,
        "J": d.J.T.tolist(),
        "atoms": d.X.T.tolist(),
        "provenance": d.provenance,
    }


def dictionary_from_json(obj: dict) -> Dictionary:
    try:
        n = int(obj["n"])
        J = np.array(obj["J"], dtype=float).reshape(-1, n).T
        X = np.array(obj["atoms"], dtype=float).reshape(-1, n).T
        return Dictionary(J, X, obj["normalization"], obj["provenance"], int(obj["r"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad dictionary JSON: {exc}") from exc


def write_dictionary(d: Dictionary, path) -> None:
    Path(path).write_text(json.dumps(dictionary_to_json(d), indent=1) + "\n")


def read_dictionary(path) -> Dictionary:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    return dictionary_from_json(obj)


def write_fit(result, path) -> None:
    Path(path).write_text(json.dumps(result.to_dict(), indent=1) + "\n")


# -- SVG ----------------------------------------------------------------------

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
SVG_WIDTH, SVG_HEIGHT, SVG_MARGIN = 800, 400, 40


def atoms_svg(X) -> str:
    """One polyline per atom: vertex index on x, atom value on y."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    n, p = X.shape
    lo, hi = (float(X.min()), float(X.max())) if X.size else (0.0, 1.0)
    if hi - lo < 1e-12:
        lo, hi = lo - 1.0, hi + 1.0
    w = SVG_WIDTH - 2 * SVG_MARGIN
    h = SVG_HEIGHT - 2 * SVG_MARGIN

    def xpos(i):
        return SVG_MARGIN + (w * i / (n - 1) if n > 1 else w / 2)

    def ypos(v):
        return SVG_MARGIN + h * (hi - v) / (hi - lo)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}" '
        f'width="{SVG_WIDTH}" height="{SVG_HEIGHT}">',
        f'<rect x="0" y="0" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>',
    ]
    if lo < 0 < hi:
        lines.append(f'<line x1="{SVG_MARGIN}" y1="{ypos(0):.3f}" x2="{SVG_WIDTH - SVG_MARGIN}" '
                     f'y2="{ypos(0):.3f}" stroke="#cccccc"/>')
    for j in range(p):
        pts = " ".join(f"{xpos(i):.3f},{ypos(X[i, j]):.3f}" for i in range(n))
        lines.append(f'<polyline fill="none" stroke="{PALETTE[j % len(PALETTE)]}" '
                     f'stroke-width="1.5" points="{pts}"/>')
    for i in range(n):
        lines.append(f'<text x="{xpos(i):.3f}" y="{SVG_HEIGHT - 12}" font-size="11" '
                     f'text-anchor="middle">{i + 1}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_atoms_svg(d: Dictionary, path) -> None:
    Path(path).write_text(atoms_svg(d.X))
