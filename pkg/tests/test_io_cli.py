from __future__ import annotations

import json
import re

import numpy as np
import pytest

from golden_matrices import PATH_D2, PATH_V1
from tvsyn import io as tio
from tvsyn.cli import run
from tvsyn.dictionary import build_dictionary, dictionaries_equivalent
from tvsyn.exceptions import FormatError
from tvsyn.graph import branched_path, cycle_graph, derivative_operator


@pytest.fixture
def path8(tmp_path):
    p = tmp_path / "path8.txt"
    p.write_text("# path on eight vertices\n8 7\n" + "".join(f"{i} {i + 1}\n" for i in range(1, 8)))
    return p


@pytest.fixture
def cycle6(tmp_path):
    p = tmp_path / "cycle6.txt"
    tio.write_graph(cycle_graph(6), p)
    return p


def test_graph_round_trip(tmp_path):
    g = branched_path(8, 4, 6)
    tio.write_graph(g, tmp_path / "g.txt")
    assert tio.read_graph(tmp_path / "g.txt") == g


def test_graph_parse_errors():
    with pytest.raises(FormatError):
        tio.parse_graph("")
    with pytest.raises(FormatError):
        tio.parse_graph("3 2\n1 2\n")
    with pytest.raises(FormatError):
        tio.parse_graph("3 1\n1 two\n")
    with pytest.raises(FormatError):
        tio.parse_graph("3 1\n1 2 3\n")


def test_matrix_csv_full_precision(tmp_path):
    M = np.array([[1 / 3, -2.0], [np.pi, 1e-17]])
    tio.write_matrix_csv(M, tmp_path / "m.csv")
    assert np.array_equal(tio.read_matrix_csv(tmp_path / "m.csv"), M)


def test_dictionary_json_round_trip(tmp_path):
    d = build_dictionary(cycle_graph(5), 2, "closed-form")
    tio.write_dictionary(d, tmp_path / "d.json")
    obj = json.loads((tmp_path / "d.json").read_text())
    assert set(obj) == {"n", "r", "normalization", "J", "atoms", "provenance"}
    back = tio.read_dictionary(tmp_path / "d.json")
    assert np.array_equal(back.matrix, d.matrix)
    assert back.normalization == "unit_row" and back.provenance == d.provenance


def test_bad_dictionary_json(tmp_path):
    (tmp_path / "bad.json").write_text("{")
    with pytest.raises(FormatError):
        tio.read_dictionary(tmp_path / "bad.json")
    (tmp_path / "bad.json").write_text("{}")
    with pytest.raises(FormatError):
        tio.read_dictionary(tmp_path / "bad.json")


def test_svg_polylines():
    d = build_dictionary(cycle_graph(6), 1, "cuts")
    svg = tio.atoms_svg(d.X)
    assert 'viewBox="0 0 800 400"' in svg
    assert svg.count("<polyline") == d.p


def test_cli_dict_tree_matches_path_matrix(path8, tmp_path, capsys):
    out = tmp_path / "dict.json"
    assert run(["dict", "--graph", str(path8), "--k", "1", "--method", "tree", "--out", str(out)]) == 0
    assert np.array_equal(tio.read_dictionary(out).matrix, PATH_V1)


def test_cli_dict_round_trip_equivalent(path8, tmp_path):
    out = tmp_path / "dict.json"
    assert run(["dict", "--graph", str(path8), "--k", "2", "--out", str(out)]) == 0
    g = tio.read_graph(path8)
    assert dictionaries_equivalent(tio.read_dictionary(out), build_dictionary(g, 2), PATH_D2)


def test_cli_verify_cycle(cycle6, capsys):
    code = run(["verify", "--graph", str(cycle6), "--k", "1", "--lambda", "0.2", "--seed", "7"])
    captured = capsys.readouterr()
    assert code == 0
    assert "seed 7" in captured.err
    gap = float(re.search(r"gap=(\S+)", captured.out).group(1))
    assert gap < 1e-6


def test_cli_verify_all_on_path(path8, capsys):
    assert run(["verify", "--graph", str(path8), "--lemma", "all", "--method", "tree"]) == 0
    assert capsys.readouterr().out.count("PASS") == 4


def test_cli_domain_error_exit_one(cycle6, capsys):
    assert run(["verify", "--graph", str(cycle6), "--lemma", "31"]) == 1
    assert "error" in capsys.readouterr().err
    assert run(["dict", "--graph", str(cycle6), "--method", "tree"]) == 1


def test_cli_usage_errors_exit_two(capsys):
    for argv in (["bogus"], ["dict", "--unknown"], ["dict"], ["solve", "--family", "path", "--n", "4"]):
        with pytest.raises(SystemExit) as exc:
            run(argv)
        assert exc.value.code == 2


def test_cli_solve_deterministic(path8, tmp_path):
    outs = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        assert run(["solve", "--graph", str(path8), "--lambda", "0.1", "--seed", "3",
                    "--mode", "synthesis", "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    fit = json.loads(outs[0])
    assert set(fit) == {"lambda", "objective", "iterations", "fitted", "beta", "residuals"}


def test_cli_solve_with_signal_file(path8, tmp_path, capsys):
    y = np.linspace(0, 1, 8)
    tio.write_matrix_csv(y[:, None], tmp_path / "y.csv")
    assert run(["solve", "--graph", str(path8), "--lambda", "0", "--y", str(tmp_path / "y.csv")]) == 0
    fit = json.loads(capsys.readouterr().out)
    assert np.allclose(fit["fitted"], y) and fit["beta"] is None


def test_cli_graph_info_and_operator(tmp_path, capsys):
    out = tmp_path / "D.csv"
    assert run(["graph", "--family", "branched", "--n", "8", "--b", "4", "--n1", "6",
                "--k", "2", "--operator-out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "tree true" in text and "spanning_trees 1" in text
    assert np.array_equal(tio.read_matrix_csv(out), derivative_operator(branched_path(8, 4, 6), 2))


def test_cli_factors_and_plot(tmp_path, capsys):
    csv_path = tmp_path / "f.csv"
    assert run(["factors", "--family", "cycle", "--sizes", "6,8", "--sprime", "2", "--out", str(csv_path)]) == 0
    rows = csv_path.read_text().splitlines()
    assert rows[0] == "family,n,m,s',rho,kappa_strong,kappa_weak_lo,kappa_weak_hi" and len(rows) == 3
    d = tmp_path / "d.json"
    tio.write_dictionary(build_dictionary(cycle_graph(8), 1, "cuts"), d)
    svg = tmp_path / "atoms.svg"
    assert run(["plot", "--dict", str(d), "--out", str(svg)]) == 0
    assert svg.read_text().count("<polyline") == 28
