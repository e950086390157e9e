from __future__ import annotations

import io
import itertools
import math

import numpy as np
import pytest

from tvsyn.exceptions import TooManySigns
from tvsyn.factors import (
    CSV_COLUMNS,
    inverse_scaling_factor,
    spread_edges,
    strong_compat,
    strong_compat_constant,
    strong_compat_primal,
    table1_report,
    weak_compat_bounds,
    write_factor_csv,
)
from tvsyn.graph import cycle_graph, grid_graph, incidence_matrix, path_graph, star_graph


def brute_force_weak(D, S, trials=4000, seed=0):
    """Random-direction upper bound on the weak constant (ratio at sampled f)."""
    rng = np.random.default_rng(seed)
    m, n = D.shape
    rest = [i for i in range(m) if i not in S]
    best = math.inf
    for _ in range(trials):
        f = rng.standard_normal(n)
        Df = D @ f
        t = np.abs(Df[S]).sum() - np.abs(Df[rest]).sum()
        if t > 0:
            best = min(best, math.sqrt(len(S) / n) * np.linalg.norm(f) / t)
    return best


def test_rho_single_edge():
    assert math.isclose(inverse_scaling_factor([[-1.0, 1.0]]), 1 / math.sqrt(2))


def test_rho_table_bounds():
    for n in range(3, 51):
        assert inverse_scaling_factor(incidence_matrix(star_graph(n))) <= 1 + 1e-12
        assert inverse_scaling_factor(incidence_matrix(cycle_graph(n))) <= math.sqrt(n)
        assert inverse_scaling_factor(incidence_matrix(path_graph(n))) <= math.sqrt(n)


def test_rho_invariant_under_row_sign_and_order():
    rng = np.random.default_rng(0)
    D = incidence_matrix(grid_graph(3))
    flipped = D[rng.permutation(D.shape[0])] * rng.choice([-1.0, 1.0], size=(D.shape[0], 1))
    assert math.isclose(inverse_scaling_factor(D), inverse_scaling_factor(flipped), rel_tol=1e-12)


def test_rho_zero_operator():
    with pytest.raises(ValueError):
        inverse_scaling_factor(np.zeros((2, 3)))


def test_strong_empty_and_single_edge():
    D = incidence_matrix(path_graph(6))
    assert strong_compat(D, []) == 1.0
    assert math.isclose(strong_compat(D, [2]), 1 / math.sqrt(2))


def test_strong_two_adjacent_edges_by_hand():
    D = incidence_matrix(path_graph(8))
    norms = [np.linalg.norm(D[[2, 3]].T @ np.array(s)) for s in itertools.product((1, -1), repeat=2)]
    assert math.isclose(strong_compat(D, [2, 3]), math.sqrt(2) / max(norms))


def test_strong_matches_primal_search():
    for g in (path_graph(8), cycle_graph(7), star_graph(6)):
        D = incidence_matrix(g)
        for s in range(1, 5):
            for S in list(itertools.combinations(range(g.m), s))[:10]:
                exact = strong_compat(D, S)
                assert abs(strong_compat_primal(D, S) - exact) <= 0.01 * exact


def test_strong_guard():
    with pytest.raises(TooManySigns):
        strong_compat(incidence_matrix(path_graph(30)), range(21))


def test_weak_empty_and_guard():
    D = incidence_matrix(path_graph(6))
    assert weak_compat_bounds(D, []) == (1.0, 1.0)
    with pytest.raises(TooManySigns):
        weak_compat_bounds(incidence_matrix(path_graph(20)), range(13))


def test_weak_path4_single_edge():
    lo, hi = weak_compat_bounds(incidence_matrix(path_graph(4)), [1])
    assert lo <= hi <= lo * 1.05
    assert math.isclose(lo, 0.5)


def test_weak_lower_bound_below_sampled_ratios():
    D = incidence_matrix(cycle_graph(6))
    for S in ([0], [0, 3], [1, 2]):
        lo, hi = weak_compat_bounds(D, S)
        assert lo <= brute_force_weak(D, S) + 1e-12
        assert lo <= hi


def test_weak_at_least_strong_constant():
    for g in (path_graph(7), cycle_graph(6), star_graph(6), grid_graph(3)):
        D = incidence_matrix(g)
        for s in (1, 2, 3):
            for S in list(itertools.combinations(range(g.m), s))[:8]:
                lo, _ = weak_compat_bounds(D, S)
                assert lo >= strong_compat_constant(D, S) - 1e-9


def test_weak_infinite_when_rest_dominates():
    # S contains every edge: no complementary penalty, finite value
    D = incidence_matrix(path_graph(3))
    lo, hi = weak_compat_bounds(D, [0, 1])
    assert math.isfinite(lo) and lo <= hi


def test_spread_edges():
    assert spread_edges(7, 1) == (3,)
    assert spread_edges(7, 0) == ()
    assert len(spread_edges(20, 4)) == 4


def test_table1_report_and_csv():
    reports = table1_report("star", [10, 20, 40])
    assert all(r.rho <= 1 for r in reports)
    reports = table1_report("path", [8, 16, 32])
    assert all(r.rho / math.sqrt(r.n) <= 1 for r in reports)
    grid = table1_report("grid2d", [9, 16, 25, 36], weak=False)
    ratios = [r.rho / math.sqrt(math.log(r.n)) for r in grid]
    assert max(ratios) <= 1.5 * min(ratios)
    buf = io.StringIO()
    write_factor_csv(reports, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 4
    with pytest.raises(ValueError):
        table1_report("grid2d", [10])
    with pytest.raises(ValueError):
        table1_report("tree", [5])
