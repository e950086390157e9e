from __future__ import annotations

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from tvsyn.estimators import AnalysisTV, SynthesisTV
from tvsyn.exceptions import DimensionMismatch
from tvsyn.graph import cycle_graph, path_graph


def test_params_and_clone():
    est = SynthesisTV(graph=path_graph(5), k=2, lam=0.3, method="closed-form")
    assert est.get_params() == {"graph": path_graph(5), "k": 2, "lam": 0.3, "method": "closed-form"}
    twin = clone(est).set_params(lam=0.5)
    assert twin.lam == 0.5 and est.lam == 0.3


def test_analysis_and_synthesis_agree():
    rng = np.random.default_rng(0)
    Y = rng.standard_normal((3, 6))
    g = cycle_graph(6)
    a = AnalysisTV(graph=g, lam=0.1).fit_transform(Y)
    s_est = SynthesisTV(graph=g, lam=0.1, method="cuts")
    s = s_est.fit_transform(Y)
    assert np.max(np.abs(a - s)) < 1e-6
    assert s_est.coef_.shape == (3, 1 + s_est.dictionary_.p)
    assert s_est.n_features_in_ == 6


def test_validation():
    with pytest.raises(NotFittedError):
        AnalysisTV(graph=path_graph(4)).transform(np.zeros((1, 4)))
    with pytest.raises(DimensionMismatch):
        AnalysisTV(graph=path_graph(4)).fit(np.zeros((1, 5)))
    with pytest.raises(ValueError):
        AnalysisTV(graph=path_graph(4)).fit(np.array([[np.nan, 0, 0, 0]]))
    with pytest.raises(TypeError):
        AnalysisTV(graph="path").fit(np.zeros((1, 4)))
