"""The regularized one-dimensional Coulomb potential V_q and the Mills ratio.

For order q > -1 and x >= 0,

    V_q(x) = (2 e^{x^2} / Gamma(q+1)) int_x^inf e^{-t^2} (t^2 - x^2)^q dt
           = (1/Gamma(q+1)) int_0^inf e^{-t} t^q (x^2 + t)^{-1/2} dt,

with the convention V_{-1}(x) = 1/x at the sentinel order q = -1.  Closed
forms used by the evaluator and its cross-checks:

    V_0(x)  = sqrt(pi) e^{x^2} erfc(x)
    V_q(0)  = Gamma(q+1/2) / Gamma(q+1)            (q > -1/2)
    V_q(x)  = x^{2q+1} psi(q+1, q+3/2, x^2) = psi(1/2, 1/2-q, x^2)

where psi is the Tricomi confluent function.  The Mills ratio of the
standard normal distribution is m(x) = sqrt(pi/2) e^{x^2/2} erfc(x/sqrt 2)
= V_0(x/sqrt 2)/sqrt 2.

The main evaluator routes by argument size: a fused small-x expansion with
O(1) intermediates, direct quadrature of the integral representation in the
central range, and the Tricomi large-argument series beyond.  Every result
carries its evaluation route and an error estimate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.special as sc

from .errors import DivergenceError, DomainError, NumericalError
from .quadrature import expsinh_escalating, laguerre_escalating
from .special import PsiEval, psi_eval

_EPS = float(np.finfo(float).eps)

SQRT_PI = math.sqrt(math.pi)

#: evaluation route tags reported in :class:`EvalResult`
METHODS = frozenset(
    {"quadrature", "psi-series", "psi-asymptotic", "closed-form", "limit-x0", "convention"}
)

# router boundaries: fused expansion below, quadrature between, Tricomi
# asymptotics above
_SERIES_X_MAX = 0.05
_ASYMPTOTIC_X_MIN = 30.0
# the fused expansion degenerates when q sits on a half-integer (gamma poles)
_HALF_INTEGER_GAP = 1e-3

_PRIME_METHODS = ("integral", "differ", "difvq")
_EVAL_METHODS = ("auto", "quadrature", "psi", "closed-form")


@dataclass(frozen=True)
class Order:
    """Order parameter q; admits q > -1 plus the sentinel q = -1."""

    q: float

    def __post_init__(self) -> None:
        q = float(self.q)
        object.__setattr__(self, "q", q)
        if not math.isfinite(q):
            raise DomainError(f"order must be finite, got {q}")
        if q < -1.0:
            raise DomainError(f"order must satisfy q > -1 (or the sentinel -1), got {q}")

    @property
    def is_sentinel(self) -> bool:
        return self.q == -1.0

    def __float__(self) -> float:
        return self.q


@dataclass(frozen=True)
class EvalResult:
    """Value of V_q(x) with an absolute error estimate and route tag."""

    value: float
    abs_err_est: float
    method: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "abs_err_est", float(self.abs_err_est))
        if not (math.isfinite(self.value) and self.value > 0.0):
            raise NumericalError(
                f"V_q evaluation produced a non-positive or non-finite value "
                f"{self.value} (method={self.method})"
            )
        if not (math.isfinite(self.abs_err_est) and self.abs_err_est >= 0.0):
            raise NumericalError(
                f"invalid error estimate {self.abs_err_est} (method={self.method})"
            )
        if self.method not in METHODS:
            raise DomainError(f"unknown method tag {self.method!r}")


@dataclass(frozen=True)
class QuadratureSpec:
    """Node-count ladder and acceptance tolerance for the integral route."""

    node_counts: tuple[int, ...] = (40, 80, 160, 320, 640, 1280)
    rel_tol: float = 1e-11

    def __post_init__(self) -> None:
        counts = tuple(int(n) for n in self.node_counts)
        object.__setattr__(self, "node_counts", counts)
        if not counts or any(n <= 0 for n in counts):
            raise DomainError(f"node counts must be positive, got {counts}")
        if any(b <= a for a, b in zip(counts, counts[1:])):
            raise DomainError(f"node counts must be strictly increasing, got {counts}")
        if not (0.0 < self.rel_tol <= 1e-2):
            raise DomainError(f"rel_tol must lie in (0, 1e-2], got {self.rel_tol}")


_DEFAULT_QUAD = QuadratureSpec()


def _order_value(q: float | Order, *, allow_sentinel: bool = False) -> float:
    qv = float(q) if not isinstance(q, Order) else q.q
    order = Order(qv)
    if order.is_sentinel and not allow_sentinel:
        raise DomainError("the sentinel order q = -1 is not admitted here")
    return order.q


def _check_x(x: float, *, positive: bool = False) -> float:
    x = float(x)
    if not math.isfinite(x) or x < 0.0 or (positive and x == 0.0):
        bound = "x > 0" if positive else "x >= 0"
        raise DomainError(f"argument must satisfy {bound}, got {x}")
    return x


def vq_zero(q: float | Order) -> float:
    """Limit V_q(0) = Gamma(q+1/2)/Gamma(q+1); diverges for q <= -1/2."""
    qv = _order_value(q)
    if qv <= -0.5:
        raise DivergenceError(f"V_q(0) diverges for q <= -1/2, got q={qv}")
    return math.exp(sc.gammaln(qv + 0.5) - sc.gammaln(qv + 1.0))


def vq_neg1(x: float) -> float:
    """Sentinel order: V_{-1}(x) = 1/x by convention."""
    x = _check_x(x, positive=True)
    return 1.0 / x


def _near_half_integer(q: float) -> bool:
    shifted = q + 0.5
    return abs(shifted - round(shifted)) <= _HALF_INTEGER_GAP


def _vq_series(q: float, x: float) -> EvalResult:
    """Fused small-x expansion with O(1) intermediates.

    V_q(x) = V_q(0) Phi(1/2, 1/2-q, x^2)
             + (Gamma(-q-1/2)/sqrt(pi)) x^{2q+1} Phi(q+1, q+3/2, x^2),

    valid whenever q is not a half-integer.  For q > -1/2 the result is
    cross-checked against the x -> 0 limit using the expansion's own
    deviation bound.
    """
    from .special import _phi_series

    big_x = x * x
    coef1 = sc.gamma(q + 0.5) * sc.rgamma(q + 1.0)
    coef2 = sc.gamma(-q - 0.5) / SQRT_PI * math.exp((2.0 * q + 1.0) * math.log(x))
    v1, abs1, ok1 = _phi_series(0.5, 0.5 - q, big_x)
    v2, abs2, ok2 = _phi_series(q + 1.0, q + 1.5, big_x)
    if not (ok1 and ok2):
        raise NumericalError(f"small-x expansion stalled for q={q}, x={x}")
    value = coef1 * v1 + coef2 * v2
    est = 4.0 * _EPS * (abs(coef1) * abs1 + abs(coef2) * abs2) + 2.0 * _EPS * abs(value)
    if not math.isfinite(value) or value <= 0.0:
        raise NumericalError(f"small-x expansion failed for q={q}, x={x}")
    if q > -0.5:
        # deviation from the x -> 0 limit must respect the expansion's bound
        deviation_cap = abs(coef1) * (abs1 - 1.0) + abs(coef2) * abs2
        if abs(value - coef1) > deviation_cap * (1.0 + 1e-9) + 64.0 * _EPS * abs(coef1):
            raise NumericalError(
                f"small-x expansion inconsistent with the x -> 0 limit for q={q}, x={x}"
            )
    return EvalResult(value, est, "psi-series")


def vq_quadrature(
    q: float | Order, x: float, quadrature: QuadratureSpec | None = None
) -> EvalResult:
    """V_q(x) by quadrature of int_0^inf e^-t t^q (x^2+t)^{-1/2} dt / Gamma(q+1).

    Gauss-Laguerre for x >= 1/2; below that the branch point at t = -x^2
    sits too close to the axis for polynomial rules and a double-exponential
    rule takes over.  Either path escalates node counts until two levels
    agree to the requested relative tolerance.
    """
    qv = _order_value(q)
    x = _check_x(x, positive=True)
    spec = quadrature if quadrature is not None else _DEFAULT_QUAD
    shift = -sc.gammaln(qv + 1.0)
    xsq = x * x

    if x >= 0.5:
        def log_g(t: np.ndarray) -> np.ndarray:
            return -0.5 * np.log(xsq + t) + shift

        outcome = laguerre_escalating(log_g, qv, spec.node_counts, spec.rel_tol)
        if outcome.converged and outcome.value > 0.0:
            return EvalResult(outcome.value, outcome.abs_err, "quadrature")

    def log_f(t: np.ndarray, log_t: np.ndarray) -> np.ndarray:
        return -t + qv * log_t - 0.5 * np.log(xsq + t) + shift

    outcome = expsinh_escalating(log_f, qv, spec.node_counts, spec.rel_tol)
    if outcome.converged and outcome.value > 0.0:
        return EvalResult(outcome.value, outcome.abs_err, "quadrature")
    raise NumericalError(
        f"quadrature did not converge for q={qv}, x={x} "
        f"(best estimate {outcome.value!r}, error {outcome.abs_err:.3e})"
    )


def _map_psi_method(method: str) -> str:
    if method == "series":
        return "psi-series"
    if method == "asymptotic":
        return "psi-asymptotic"
    return "quadrature"


def _from_psi(ev: PsiEval, prefactor: float = 1.0) -> EvalResult:
    return EvalResult(
        prefactor * ev.value, prefactor * ev.abs_err_est, _map_psi_method(ev.method)
    )


def vq_via_psi(q: float | Order, x: float) -> EvalResult:
    """V_q(x) through its two Tricomi forms, cross-checked against each other.

    Form 1: x^{2q+1} psi(q+1, q+3/2, x^2); form 2: psi(1/2, 1/2-q, x^2).
    When both evaluate, they must agree to 1e-9 relative; the one with the
    smaller error estimate is returned.
    """
    qv = _order_value(q)
    x = _check_x(x, positive=True)
    big_x = x * x

    results: list[EvalResult] = []
    try:
        prefactor = math.exp((2.0 * qv + 1.0) * math.log(x))
        if math.isfinite(prefactor) and prefactor > 0.0:
            ev = psi_eval(qv + 1.0, qv + 1.5, big_x)
            if math.isfinite(prefactor * ev.value):
                results.append(_from_psi(ev, prefactor))
    except (OverflowError, NumericalError):
        pass
    try:
        results.append(_from_psi(psi_eval(0.5, 0.5 - qv, big_x)))
    except NumericalError:
        pass

    if not results:
        raise NumericalError(f"both Tricomi forms failed for q={qv}, x={x}")
    if len(results) == 2:
        r1, r2 = results
        if abs(r1.value - r2.value) > 1e-9 * max(abs(r1.value), abs(r2.value)):
            raise NumericalError(
                f"Tricomi forms disagree for q={qv}, x={x}: "
                f"{r1.value!r} (form 1) vs {r2.value!r} (form 2)"
            )
    return min(results, key=lambda r: r.abs_err_est / abs(r.value))


def _vq_closed_q0(x: float) -> EvalResult:
    value = SQRT_PI * sc.erfcx(x)
    return EvalResult(value, 2.0 * _EPS * value, "closed-form")


def vq(
    q: float | Order,
    x: float,
    method: str = "auto",
    quadrature: QuadratureSpec | None = None,
) -> EvalResult:
    """Evaluate V_q(x) for q > -1, x >= 0 (plus the sentinel q = -1).

    ``method`` selects the route: "auto" (argument-dependent), "quadrature"
    (integral representation), "psi" (Tricomi forms), or "closed-form"
    (q = 0 only).  The sentinel order always reports method "convention".
    """
    if method not in _EVAL_METHODS:
        raise DomainError(f"unknown method {method!r}; choose one of {_EVAL_METHODS}")
    qv = _order_value(q, allow_sentinel=True)
    x = _check_x(x)

    if qv == -1.0:
        value = vq_neg1(x)
        return EvalResult(value, _EPS * value, "convention")

    if x == 0.0:
        if method in ("quadrature", "psi"):
            raise DomainError(f"method {method!r} requires x > 0; use the x = 0 limit")
        if method == "closed-form" and qv != 0.0:
            raise DomainError("closed form is available only for q = 0")
        value = vq_zero(qv)
        return EvalResult(value, 4.0 * _EPS * value, "limit-x0")

    if method == "quadrature":
        return vq_quadrature(qv, x, quadrature)
    if method == "psi":
        return vq_via_psi(qv, x)
    if method == "closed-form":
        if qv != 0.0:
            raise DomainError("closed form is available only for q = 0")
        return _vq_closed_q0(x)

    if qv == 0.0:
        return _vq_closed_q0(x)
    if x <= _SERIES_X_MAX and not _near_half_integer(qv):
        return _vq_series(qv, x)
    if x >= _ASYMPTOTIC_X_MIN:
        return _from_psi(psi_eval(0.5, 0.5 - qv, x * x))
    return vq_quadrature(qv, x, quadrature)


def vq_prime(q: float | Order, x: float, method: str = "integral") -> float:
    """Derivative V_q'(x) for x > 0; strictly negative.

    Routes: "integral" differentiates under the integral sign,
        V_q'(x) = -(x/Gamma(q+1)) int_0^inf e^-t t^q (x^2+t)^{-3/2} dt;
    "differ" uses the order-raising relation
        x V_q'(x) = (2q+1) V_q(x) - 2(q+1) V_{q+1}(x);
    "difvq" (q >= 0) uses the order-lowering relation
        V_q'(x) = 2x (V_q(x) - V_{q-1}(x)),
    with V_{-1} = 1/x at the chain base.
    """
    if method not in _PRIME_METHODS:
        raise DomainError(f"unknown method {method!r}; choose one of {_PRIME_METHODS}")
    qv = _order_value(q)
    x = _check_x(x, positive=True)

    if method == "integral":
        spec = _DEFAULT_QUAD
        shift = -sc.gammaln(qv + 1.0)
        xsq = x * x
        outcome = None
        if x >= 0.5:
            def log_g(t: np.ndarray) -> np.ndarray:
                return -1.5 * np.log(xsq + t) + shift

            outcome = laguerre_escalating(log_g, qv, spec.node_counts, spec.rel_tol)
        if outcome is None or not outcome.converged:
            def log_f(t: np.ndarray, log_t: np.ndarray) -> np.ndarray:
                return -t + qv * log_t - 1.5 * np.log(xsq + t) + shift

            outcome = expsinh_escalating(log_f, qv, spec.node_counts, spec.rel_tol)
        if not outcome.converged:
            raise NumericalError(f"derivative quadrature did not converge for q={qv}, x={x}")
        return -x * outcome.value

    if method == "differ":
        v_q = vq(qv, x).value
        v_q1 = vq(qv + 1.0, x).value
        return ((2.0 * qv + 1.0) * v_q - 2.0 * (qv + 1.0) * v_q1) / x

    if qv < 0.0:
        raise DomainError(f"method 'difvq' requires q >= 0, got q={qv}")
    v_q = vq(qv, x).value
    v_prev = vq_neg1(x) if qv == 0.0 else vq(qv - 1.0, x).value
    return 2.0 * x * (v_q - v_prev)


def vq_next(q: float | Order, vq_value: float, vq_prev: float, x: float) -> float:
    """Order-raising recurrence: V_{q+1} from (V_q, V_{q-1}) at the same x.

        2 (q+1) V_{q+1}(x) = (2q + 1 - 2x^2) V_q(x) + 2 x^2 V_{q-1}(x).

    The chain base q = 0 takes the sentinel V_{-1} = 1/x as ``vq_prev``.
    Cancellation grows with the chain length; drift stays below about 1e-8
    for chains of length <= 8 at moderate x.
    """
    qv = _order_value(q)
    if qv < 0.0:
        raise DomainError(f"the recurrence requires q >= 0, got q={qv}")
    x = _check_x(x, positive=True)
    vq_value = float(vq_value)
    vq_prev = float(vq_prev)
    if not (vq_value > 0.0 and vq_prev > 0.0):
        raise DomainError("recurrence inputs must be positive V values")
    xsq = x * x
    result = ((2.0 * qv + 1.0 - 2.0 * xsq) * vq_value + 2.0 * xsq * vq_prev) / (
        2.0 * (qv + 1.0)
    )
    if not math.isfinite(result) or result <= 0.0:
        raise NumericalError(
            f"recurrence produced a non-positive value at q={qv}, x={x}; "
            f"cancellation too severe"
        )
    return result


def mills(x: float) -> float:
    """Mills ratio m(x) = (1 - NormalCDF(x)) / NormalPDF(x) for x >= 0."""
    x = _check_x(x)
    return math.sqrt(math.pi / 2.0) * float(sc.erfcx(x / math.sqrt(2.0)))
