"""Analysis (generalized lasso) and synthesis (partially penalized lasso) fits.

Both objectives use the empirical norm ``||v||_n^2 = ||v||_2^2 / n``::

    analysis:   ||y - f||_n^2 + 2 * scale * lam * ||D f||_1
    synthesis:  ||y - J b_J - X b_X||_n^2 + 2 * scale * lam * ||b_X||_1

``scale`` carries the ``n^(k-1)`` factor of k-th order total variation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dictionary import Dictionary, build_dictionary
from .exceptions import DimensionMismatch, NotConverged, RankAssumptionViolated
from .graph import DirectedGraph, derivative_operator
from .linalg import invert, nullspace, projection_pair, pseudoinverse_svd, rank, rowspace_projector

CD_MAX_SWEEPS = 100_000
ADMM_MAX_ITER = 50_000
CD_TOL = 1e-10
KKT_TOL = 1e-8
ADMM_TOL = 1e-9
EQUIV_TOL = 1e-6


@dataclass
class FitResult:
    fitted: np.ndarray
    objective: float
    lam: float
    iterations: int
    beta: np.ndarray | None = None
    primal_residual: float = 0.0
    dual_residual: float = 0.0
    info: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "objective": self.objective,
            "iterations": self.iterations,
            "fitted": self.fitted.tolist(),
            "beta": None if self.beta is None else self.beta.tolist(),
            "residuals": {"primal": self.primal_residual, "dual": self.dual_residual},
        }


def _vector(y) -> np.ndarray:
    y = np.asarray(y, dtype=float)
    if y.ndim != 1:
        raise DimensionMismatch(f"expected a 1-d signal, got shape {y.shape}")
    return y


def _check_lam(lam: float) -> float:
    lam = float(lam)
    if not lam >= 0:
        raise ValueError(f"lambda must be nonnegative, got {lam}")
    return lam


def _soft(z: float, t: float) -> float:
    if z > t:
        return z - t
    if z < -t:
        return z + t
    return 0.0


def _cd_lasso(G, c, pen: float, beta, tol, max_sweeps):
    """Cyclic coordinate descent on ``b'Gb - 2c'b + 2 pen ||b||_1``.

    Alternates full sweeps with sweeps restricted to the active set.
    Returns ``(beta, sweeps)``.
    """
    p = len(c)
    diag = np.diag(G).copy()
    Gb = G @ beta
    sweeps = 0
    full = True
    while sweeps < max_sweeps:
        sweeps += 1
        idx = range(p) if full else np.flatnonzero(beta)
        max_delta = 0.0
        for j in idx:
            if diag[j] <= 0.0:
                continue
            old = beta[j]
            z = c[j] - Gb[j] + diag[j] * old
            new = _soft(z, pen) / diag[j]
            if new != old:
                delta = new - old
                beta[j] = new
                Gb += delta * G[:, j]
                if abs(delta) > max_delta:
                    max_delta = abs(delta)
        if max_delta < tol:
            if full:
                return beta, sweeps
            full = True
        else:
            full = False
    raise NotConverged(f"coordinate descent did not converge in {max_sweeps} sweeps")


def kkt_violation(y, unpenalized, penalized, beta_pen, lam: float, scale: float = 1.0) -> dict:
    """KKT residuals of a partially penalized lasso solution.

    Gradients are taken of ``||y - Xb||_n^2``, i.e. ``(2/n) X'(y - f)``.
    """
    y = _vector(y)
    n = y.size
    U = np.asarray(unpenalized, dtype=float).reshape(n, -1)
    X = np.asarray(penalized, dtype=float).reshape(n, -1)
    b_pen = np.asarray(beta_pen, dtype=float)
    resid = y - X @ b_pen
    if U.shape[1]:
        b_u = np.linalg.lstsq(U, resid, rcond=None)[0]
        resid = resid - U @ b_u
    grad_pen = 2.0 / n * X.T @ resid
    grad_unpen = 2.0 / n * U.T @ resid if U.shape[1] else np.zeros(0)
    bound = 2.0 * lam * scale
    active = np.abs(b_pen) > 0
    excess = np.max(np.abs(grad_pen) - bound, initial=-np.inf)
    equality = np.max(np.abs(grad_pen[active] - bound * np.sign(b_pen[active])), initial=0.0)
    return {
        "max_abs_gradient": float(np.max(np.abs(grad_pen), initial=0.0)),
        "bound": bound,
        "bound_excess": float(max(excess, 0.0)),
        "active_gap": float(equality),
        "unpenalized_gradient": float(np.max(np.abs(grad_unpen), initial=0.0)),
    }


def fit_lasso(y, penalized, lam: float, unpenalized=None, scale: float = 1.0,
              tol: float = CD_TOL, max_sweeps: int = CD_MAX_SWEEPS) -> FitResult:
    """Lasso with an optional unpenalized block.

    The unpenalized columns are projected out first; coordinate descent runs
    on the antiprojected penalized columns and the unpenalized coefficients
    are recovered by least squares.
    """
    y = _vector(y)
    lam = _check_lam(lam)
    n = y.size
    X = np.asarray(penalized, dtype=float).reshape(n, -1)
    U = np.zeros((n, 0)) if unpenalized is None else np.asarray(unpenalized, dtype=float).reshape(n, -1)
    if X.shape[0] != n or U.shape[0] != n:
        raise DimensionMismatch("design rows must match the signal length")

    if U.shape[1]:
        anti = projection_pair(U).antiprojector
        y_t, X_t = anti @ y, anti @ X
    else:
        y_t, X_t = y, X
    G = X_t.T @ X_t / n
    c = X_t.T @ y_t / n
    pen = lam * scale
    beta = np.zeros(X.shape[1])
    beta, sweeps = _cd_lasso(G, c, pen, beta, tol, max_sweeps)

    resid = y - X @ beta
    b_u = np.linalg.lstsq(U, resid, rcond=None)[0] if U.shape[1] else np.zeros(0)
    fitted = U @ b_u + X @ beta
    objective = float(np.sum((y - fitted) ** 2) / n + 2 * pen * np.sum(np.abs(beta)))
    kkt = kkt_violation(y, U, X, beta, lam, scale)
    return FitResult(
        fitted=fitted,
        objective=objective,
        lam=lam,
        iterations=sweeps,
        beta=np.concatenate([b_u, beta]),
        primal_residual=kkt["bound_excess"],
        dual_residual=kkt["active_gap"],
        info={"kkt": kkt, "n_unpenalized": U.shape[1]},
    )


def fit_synthesis(y, dictionary: Dictionary, lam: float, scale: float = 1.0, **kwargs) -> FitResult:
    """Partially penalized lasso on ``[J X]``; ``beta`` is ordered ``(b_J, b_X)``."""
    y = _vector(y)
    if dictionary.n != y.size:
        raise DimensionMismatch(f"dictionary has {dictionary.n} rows, signal has {y.size}")
    return fit_lasso(y, dictionary.X, lam, unpenalized=dictionary.J, scale=scale, **kwargs)


def analysis_objective(y, f, D, lam: float, scale: float = 1.0) -> float:
    y = np.asarray(y, dtype=float)
    return float(np.sum((y - f) ** 2) / y.size + 2 * scale * lam * np.sum(np.abs(D @ f)))


def _polish(y, D, z, thresh: float) -> np.ndarray:
    """Exact minimiser once the zero pattern and signs of ``D f`` are fixed.

    With ``Z`` the rows where ``z`` vanishes and ``s`` the signs elsewhere,
    minimise ``||y - f||_n^2 + thresh * s' D_A f`` over ``D_Z f = 0``.
    """
    n = y.size
    zero = np.abs(z) <= 0.0
    N = nullspace(D[zero]) if np.any(zero) else np.eye(n)
    shift = 0.5 * n * thresh * D[~zero].T @ np.sign(z[~zero])
    return N @ (N.T @ (y - shift))


def fit_analysis(y, D, lam: float, scale: float = 1.0, tol: float = ADMM_TOL,
                 max_iter: int = ADMM_MAX_ITER, rho: float = 1.0) -> FitResult:
    """ADMM on the split ``z = D f`` with residual balancing of ``rho``."""
    y = _vector(y)
    lam = _check_lam(lam)
    D = np.atleast_2d(np.asarray(D, dtype=float))
    n = y.size
    if D.shape[1] != n:
        raise DimensionMismatch(f"operator has {D.shape[1]} columns, signal has {n}")
    m = D.shape[0]
    thresh = 2.0 * lam * scale
    if thresh == 0.0 or m == 0:
        return FitResult(y.copy(), 0.0, lam, 0)

    DtD = D.T @ D
    f = y.copy()
    z = D @ f
    u = np.zeros(m)
    eps_pri = tol * np.sqrt(m)
    eps_dual = tol * np.sqrt(n)
    history = []

    def system(r):
        return invert(2.0 / n * np.eye(n) + r * DtD)

    solve = system(rho)
    for it in range(1, max_iter + 1):
        f = solve @ (2.0 / n * y + rho * D.T @ (z - u))
        Df = D @ f
        z_old = z
        v = Df + u
        z = np.sign(v) * np.maximum(np.abs(v) - thresh / rho, 0.0)
        u = u + Df - z
        r_norm = np.linalg.norm(Df - z)
        s_norm = rho * np.linalg.norm(D.T @ (z - z_old))
        history.append(analysis_objective(y, f, D, lam, scale))
        if r_norm < eps_pri and s_norm < eps_dual:
            break
        if r_norm > 10 * s_norm:
            rho *= 2.0
            u /= 2.0
            solve = system(rho)
        elif s_norm > 10 * r_norm:
            rho /= 2.0
            u *= 2.0
            solve = system(rho)
    else:
        raise NotConverged(f"ADMM did not converge in {max_iter} iterations")
    objective = analysis_objective(y, f, D, lam, scale)
    polished = _polish(y, D, z, thresh)
    polished_obj = analysis_objective(y, polished, D, lam, scale)
    if polished_obj <= objective:
        f, objective = polished, polished_obj
    return FitResult(
        fitted=f,
        objective=objective,
        lam=lam,
        iterations=it,
        primal_residual=float(r_norm),
        dual_residual=float(s_norm),
        info={
            "rho": rho,
            "polished": bool(f is polished),
            "objective_history": history,
            # ADMM is not a descent method; count increases after the warm-up
            "nonmonotone_steps": int(np.sum(np.diff(history[10:]) > 1e-12)),
        },
    )


# -- equivalence checks -------------------------------------------------------

@dataclass
class EquivalenceReport:
    name: str
    gap: float
    tol: float
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.gap < self.tol)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: gap={self.gap:.3e} (tol {self.tol:g})"


def _gap(a, b) -> float:
    return float(np.linalg.norm(np.asarray(a) - np.asarray(b)))


def check_lemma21(y, X_full, U, lam: float, tol: float = EQUIV_TOL) -> EquivalenceReport:
    """Adding components in the span of the unpenalized columns to the
    penalized columns leaves the fitted values unchanged."""
    X_full = np.asarray(X_full, dtype=float)
    U = sorted(set(int(u) for u in U))
    rest = [j for j in range(X_full.shape[1]) if j not in set(U)]
    XU, XR = X_full[:, U], X_full[:, rest]
    if U and rank(XU) < len(U):
        raise RankAssumptionViolated("unpenalized columns are not of full rank")
    anti = projection_pair(XU).antiprojector if U else np.eye(X_full.shape[0])
    plain = fit_lasso(y, XR, lam, unpenalized=XU)
    projected = fit_lasso(y, anti @ XR, lam, unpenalized=XU)
    return EquivalenceReport("lemma21", _gap(plain.fitted, projected.fitted), tol,
                             {"fits": (plain, projected)})


def check_lemma31(y, D, lam: float, tol: float = EQUIV_TOL) -> EquivalenceReport:
    """Underdetermined full-row-rank ``D``: ``f_A = f_S + A_D y`` with ``X = D^+``."""
    D = np.atleast_2d(np.asarray(D, dtype=float))
    m, n = D.shape
    if not (m < n and rank(D) == m):
        raise RankAssumptionViolated(f"need full row rank m < n, got m={m}, n={n}, rank={rank(D)}")
    y = _vector(y)
    analysis = fit_analysis(y, D, lam)
    synthesis = fit_lasso(y, pseudoinverse_svd(D), lam)
    anti = np.eye(n) - rowspace_projector(D)
    return EquivalenceReport("lemma31", _gap(analysis.fitted, synthesis.fitted + anti @ y), tol,
                             {"fits": (analysis, synthesis)})


def check_lemma32(y, D, lam: float, tol: float = EQUIV_TOL) -> EquivalenceReport:
    """Square invertible ``D``: analysis equals synthesis with ``X = D^{-1}``."""
    D = np.atleast_2d(np.asarray(D, dtype=float))
    if D.shape[0] != D.shape[1]:
        raise RankAssumptionViolated(f"need a square operator, got {D.shape}")
    X = invert(D)
    analysis = fit_analysis(y, D, lam)
    synthesis = fit_lasso(y, X, lam)
    return EquivalenceReport("lemma32", _gap(analysis.fitted, synthesis.fitted), tol,
                             {"fits": (analysis, synthesis)})


def check_corollary41(y, g: DirectedGraph, k: int, lam: float, method: str = "recipe",
                      tol: float = EQUIV_TOL, dictionary: Dictionary | None = None) -> EquivalenceReport:
    """k-th order TV fit versus the synthesis fit with a graph dictionary.

    Both sides carry the ``n^(k-1)`` penalty scale. The dictionary is rescaled
    to ``||D x||_1 = 1`` before fitting.
    """
    y = _vector(y)
    D = derivative_operator(g, k)
    scale = float(g.n) ** (k - 1)
    if dictionary is None:
        dictionary = build_dictionary(g, k, method)
    dictionary = dictionary.renormalized(D)
    analysis = fit_analysis(y, D, lam, scale=scale)
    synthesis = fit_synthesis(y, dictionary, lam, scale=scale)
    return EquivalenceReport(f"corollary41[{method},k={k}]",
                             _gap(analysis.fitted, synthesis.fitted), tol,
                             {"fits": (analysis, synthesis), "p": dictionary.p})
