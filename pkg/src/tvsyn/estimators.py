"""scikit-learn style wrappers.

Each row of ``X`` is a signal on the vertices of ``graph``; ``transform``
returns the denoised rows.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .dictionary import build_dictionary
from .exceptions import DimensionMismatch
from .graph import DirectedGraph, derivative_operator
from .solvers import fit_analysis, fit_synthesis


class _GraphTV(TransformerMixin, BaseEstimator):
    def _validate(self, X, reset: bool):
        X = check_array(X, dtype=float)
        if not isinstance(self.graph, DirectedGraph):
            raise TypeError("graph must be a DirectedGraph")
        if X.shape[1] != self.graph.n:
            raise DimensionMismatch(f"X has {X.shape[1]} columns, graph has {self.graph.n} vertices")
        if reset:
            self.n_features_in_ = X.shape[1]
        return X

    @property
    def _scale(self) -> float:
        return float(self.graph.n) ** (self.k - 1)


class AnalysisTV(_GraphTV):
    """k-th order graph total-variation denoiser fitted by ADMM."""

    def __init__(self, graph=None, k: int = 1, lam: float = 0.1):
        self.graph = graph
        self.k = k
        self.lam = lam

    def fit(self, X, y=None):
        self._validate(X, reset=True)
        self.operator_ = derivative_operator(self.graph, self.k)
        return self

    def transform(self, X):
        check_is_fitted(self, "operator_")
        X = self._validate(X, reset=False)
        return np.vstack([fit_analysis(row, self.operator_, self.lam, scale=self._scale).fitted
                          for row in X])


class SynthesisTV(_GraphTV):
    """The same estimator in lasso form over a graph dictionary.

    ``method`` picks the dictionary construction (``recipe``, ``tree``,
    ``cuts`` or ``closed-form``).
    """

    def __init__(self, graph=None, k: int = 1, lam: float = 0.1, method: str = "recipe"):
        self.graph = graph
        self.k = k
        self.lam = lam
        self.method = method

    def fit(self, X, y=None):
        self._validate(X, reset=True)
        D = derivative_operator(self.graph, self.k)
        self.dictionary_ = build_dictionary(self.graph, self.k, self.method).renormalized(D)
        return self

    def transform(self, X):
        check_is_fitted(self, "dictionary_")
        X = self._validate(X, reset=False)
        fits = [fit_synthesis(row, self.dictionary_, self.lam, scale=self._scale) for row in X]
        self.coef_ = np.vstack([f.beta for f in fits])
        return np.vstack([f.fitted for f in fits])
