"""Escalating quadrature engines for integrals of Laguerre type.

Both engines evaluate integrals of the form

    I = int_0^inf t^p e^{-t} g(t) dt,    p > -1,

where ``g`` is positive.  Two complementary rules are provided:

* generalized Gauss-Laguerre (nodes/weights for the weight ``t^p e^{-t}``),
  which converges geometrically when ``g`` is analytic in a neighbourhood of
  the positive axis whose nearest singularity is not too close to the origin;
* an exp-sinh double-exponential trapezoid rule on the substitution
  ``t = exp((pi/2) sinh u)``, whose nodes accumulate double-exponentially at
  both endpoints and therefore resolve integrand features on any scale
  (e.g. a branch point at ``-x^2`` with ``x`` tiny), at the cost of a few
  hundred integrand evaluations.

Each engine escalates through a ladder of node counts and accepts a result
when two consecutive levels agree to a relative tolerance; the difference is
reported as the error estimate.  Integrands are supplied through their
logarithm so that widely scaled factors (``t^q`` with large ``q``, huge or
tiny smooth factors) neither overflow nor underflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.special import roots_genlaguerre

_EPS = float(np.finfo(float).eps)
# exp-sinh transform constant: t = exp(_DE_C * sinh(u))
_DE_C = np.pi / 2.0
# right truncation: t(6.5) = exp(_DE_C*sinh(6.5)) ~ e^519, annihilated by e^{-t}
_DE_U_RIGHT = 6.5
# log t beyond which exp(log t) would overflow a double; such nodes contribute
# only through factors that are identically zero there
_DE_LOG_T_MAX = 700.0


@dataclass(frozen=True)
class QuadOutcome:
    """Result of an escalating quadrature run."""

    value: float
    abs_err: float
    points: int
    converged: bool


# node generation becomes numerically unreliable beyond this count; the
# escalation ladder hands over to the exp-sinh rule instead
GL_NODE_MAX = 320


@lru_cache(maxsize=512)
def gauss_laguerre(n: int, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for the weight ``t^alpha e^{-t}`` on [0, inf)."""
    if alpha <= -1.0:
        raise ValueError(f"Laguerre exponent must exceed -1, got {alpha}")
    with np.errstate(over="ignore", invalid="ignore"):
        nodes, weights = roots_genlaguerre(n, alpha)
    return nodes, weights


def laguerre_escalating(
    log_g: Callable[[np.ndarray], np.ndarray],
    alpha: float,
    node_counts: tuple[int, ...],
    rel_tol: float,
) -> QuadOutcome:
    """Gauss-Laguerre evaluation of ``int t^alpha e^-t g(t) dt``.

    ``log_g`` maps an array of nodes to the log of the smooth factor
    (``-inf`` allowed).  Escalates through ``node_counts`` until consecutive
    levels agree to ``rel_tol``; counts beyond ``GL_NODE_MAX`` are skipped
    (callers fall back to the exp-sinh rule instead).
    """
    counts = tuple(n for n in node_counts if n <= GL_NODE_MAX) or node_counts[:1]
    prev = None
    best_val = np.nan
    best_diff = np.inf
    for n in counts:
        t, w = gauss_laguerre(n, alpha)
        with np.errstate(over="ignore", under="ignore"):
            val = float(np.sum(w * np.exp(log_g(t))))
        if prev is not None:
            diff = abs(val - prev) / max(abs(val), np.finfo(float).tiny)
            if diff <= rel_tol:
                return QuadOutcome(val, diff * abs(val) + _EPS * abs(val), n, True)
            if diff < best_diff:
                best_diff, best_val = diff, val
        prev = val
    if not np.isfinite(best_val):
        best_val, best_diff = prev, np.inf
    return QuadOutcome(best_val, best_diff * abs(best_val), counts[-1], False)


def _expsinh_level(
    log_f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    u_left: float,
    n: int,
) -> float:
    u = np.linspace(-u_left, _DE_U_RIGHT, n)
    h = u[1] - u[0]
    log_t = _DE_C * np.sinh(u)
    ok = log_t < _DE_LOG_T_MAX
    t = np.exp(np.where(ok, log_t, 0.0))
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        # integrand * dt/du, with dt/du = t * _DE_C * cosh(u); the extra
        # log t folds the jacobian's factor of t into log space
        log_terms = np.where(
            ok,
            log_f(t, log_t) + log_t + np.log(_DE_C * np.cosh(u)),
            -np.inf,
        )
        terms = np.exp(log_terms)
    return float(h) * float(np.sum(terms))


def expsinh_escalating(
    log_f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    power: float,
    node_counts: tuple[int, ...],
    rel_tol: float,
) -> QuadOutcome:
    """Double-exponential evaluation of ``int_0^inf f(t) dt``.

    ``log_f(t, log_t)`` returns the log integrand; ``power`` is the exponent
    with which the integrand vanishes at the origin (``f ~ t^power``,
    ``power > -1``), which sets the left truncation point.
    """
    if power <= -1.0:
        raise ValueError(f"endpoint power must exceed -1, got {power}")
    u_left = max(
        float(np.arcsinh(max(30.0, 50.0 / max(power + 1.0, 1e-3)) / _DE_C)),
        _DE_U_RIGHT,
    )
    prev = None
    best_val = np.nan
    best_diff = np.inf
    for n in node_counts:
        val = _expsinh_level(log_f, u_left, n)
        if prev is not None:
            diff = abs(val - prev) / max(abs(val), np.finfo(float).tiny)
            if diff <= rel_tol:
                return QuadOutcome(val, diff * abs(val) + _EPS * abs(val), n, True)
            if diff < best_diff:
                best_diff, best_val = diff, val
        prev = val
    if not np.isfinite(best_val):
        best_val, best_diff = prev, np.inf
    return QuadOutcome(best_val, best_diff * abs(best_val), node_counts[-1], False)
