"""Command-line front-end: evaluate V_q, tabulate the Mills-ratio bounds,
run the inequality verifier, and tabulate the V_q envelopes.

Exit-code contract:

* 0 — success (for ``verify``: every asserted check holds),
* 1 — the verifier found a genuine violation,
* 2 — malformed usage or a domain error (bad flags, q out of range, ...),
* 3 — numerical failure (an evaluation did not converge to tolerance).

All numeric output is deterministic for fixed inputs; numbers are printed
with ``%.{precision}g`` (shortest form at the configured significant
digits).
"""
from __future__ import annotations

import functools
import json
import math
import os
import sys
from typing import Callable, Optional

import click
import numpy as np

from . import __version__
from .bounds import MillsBoundRow, VqEnvelope, mills_bounds, vq_envelope
from .errors import DomainError, NumericalError, UsageError
from .potential import vq
from .verify import (
    DEFAULT_REL_TOL,
    SUITES,
    Grid,
    VerificationReport,
    VerifyConfig,
    default_grid,
    run_suite,
)

#: Environment variable overriding the default relative tolerance of
#: ``verify``.  Values are clamped to [1e-13, 1e-6]; an explicit
#: ``--tolerance`` flag always wins.
REL_TOL_ENV = "REGCOULOMB_REL_TOL"
_REL_TOL_MIN = 1e-13
_REL_TOL_MAX = 1e-6

_FIGURE_HEADER = "x,f1,f2,f3,f4,f5,m"
_ENVELOPE_HEADER = "x,lower_exp,lower_kratzel,vq,upper_agm"


def _fmt(value: float, precision: int) -> str:
    """Shortest decimal form at ``precision`` significant digits."""
    return format(value, f".{precision}g")


def _jnum(value: Optional[float], precision: int) -> Optional[float]:
    """The same number the CSV emitter would print, as a JSON float."""
    if value is None:
        return None
    return float(_fmt(value, precision))


def _mapped(fn: Callable) -> Callable:
    """Map library exceptions onto the exit-code contract."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (UsageError, DomainError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except NumericalError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)

    return wrapper


def _check_positive_range(x_min: float, x_max: float, steps: int) -> None:
    if not (math.isfinite(x_min) and math.isfinite(x_max)) or x_min <= 0.0:
        raise UsageError(f"x-min must be positive and finite, got {x_min}")
    if x_max <= x_min:
        raise UsageError(f"x-max must exceed x-min, got [{x_min}, {x_max}]")
    if steps < 2:
        raise UsageError(f"steps must be at least 2, got {steps}")


@click.group()
@click.version_option(__version__, prog_name="regcoulomb")
def main() -> None:
    """Regularized Coulomb potential V_q, Mills-ratio bounds, and the
    inequality verifier."""


# ---------------------------------------------------------------------------
# eval


@main.command("eval")
@click.option("--q", type=float, required=True,
              help="Order q > -1, or the sentinel q = -1 (the 1/x convention).")
@click.option("--x", type=float, required=True,
              help="Abscissa x >= 0 (x = 0 requires q > -1/2).")
@click.option("--method",
              type=click.Choice(["auto", "quadrature", "psi", "closed-form"]),
              default="auto", show_default=True,
              help="Evaluation route; 'auto' picks per (q, x).")
@click.option("--format", "fmt", type=click.Choice(["human", "json"]),
              default="human", show_default=True)
@click.option("--precision", type=click.IntRange(6, 17), default=12,
              show_default=True, help="Significant digits of printed numbers.")
@_mapped
def cmd_eval(q: float, x: float, method: str, fmt: str, precision: int) -> None:
    """Evaluate V_q(x); report the value, the route taken, and an error
    estimate."""
    result = vq(q, x, method=method)
    if fmt == "json":
        click.echo(json.dumps({
            "q": q,
            "x": x,
            "value": _jnum(result.value, precision),
            "method": result.method,
            "abs_err_est": _jnum(result.abs_err_est, precision),
        }))
    else:
        click.echo(f"value       = {_fmt(result.value, precision)}")
        click.echo(f"method      = {result.method}")
        click.echo(f"abs_err_est = {result.abs_err_est:.3e}")


# ---------------------------------------------------------------------------
# figure


@main.command("figure")
@click.option("--x-min", type=float, default=0.7, show_default=True)
@click.option("--x-max", type=float, default=3.0, show_default=True)
@click.option("--steps", type=int, default=231, show_default=True,
              help="Number of uniformly spaced grid points (inclusive ends).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--precision", type=click.IntRange(6, 17), default=12,
              show_default=True)
@_mapped
def cmd_figure(x_min: float, x_max: float, steps: int, fmt: str,
               precision: int) -> None:
    """Tabulate the Mills ratio m and its five rational/algebraic bounds
    f1..f5 on a uniform grid; f3 is empty (CSV) or null (JSON) where it
    does not apply."""
    _check_positive_range(x_min, x_max, steps)
    rows = [mills_bounds(float(v)) for v in np.linspace(x_min, x_max, steps)]
    if fmt == "json":
        click.echo(json.dumps([_figure_json_row(r, precision) for r in rows],
                              indent=2))
    else:
        click.echo(_FIGURE_HEADER)
        for r in rows:
            click.echo(",".join(_figure_csv_cells(r, precision)))


def _figure_csv_cells(row: MillsBoundRow, precision: int) -> list[str]:
    return [
        _fmt(row.x, precision),
        _fmt(row.f1, precision),
        _fmt(row.f2, precision),
        "" if row.f3 is None else _fmt(row.f3, precision),
        _fmt(row.f4, precision),
        _fmt(row.f5, precision),
        _fmt(row.m, precision),
    ]


def _figure_json_row(row: MillsBoundRow, precision: int) -> dict:
    return {
        "x": _jnum(row.x, precision),
        "f1": _jnum(row.f1, precision),
        "f2": _jnum(row.f2, precision),
        "f3": _jnum(row.f3, precision),
        "f4": _jnum(row.f4, precision),
        "f5": _jnum(row.f5, precision),
        "m": _jnum(row.m, precision),
    }


# ---------------------------------------------------------------------------
# verify


@main.command("verify")
@click.option("--suite", "suites", type=click.Choice(SUITES + ("all",)),
              multiple=True, default=("all",), show_default=True,
              help="Suite to run; repeatable.")
@click.option("--q", "q_values", type=float, multiple=True,
              help="Override grid orders (repeatable; sorted, deduplicated).")
@click.option("--x", "x_values", type=float, multiple=True,
              help="Override grid abscissas (repeatable; sorted, deduplicated).")
@click.option("--tolerance", type=click.FloatRange(_REL_TOL_MIN, _REL_TOL_MAX),
              default=None,
              help=f"Relative tolerance for strict inequalities "
                   f"[default: {DEFAULT_REL_TOL:g}; the {REL_TOL_ENV} "
                   f"environment variable overrides the default, this flag "
                   f"overrides both].")
@click.option("--format", "fmt", type=click.Choice(["human", "json"]),
              default="human", show_default=True)
@_mapped
def cmd_verify(suites: tuple[str, ...], q_values: tuple[float, ...],
               x_values: tuple[float, ...], tolerance: Optional[float],
               fmt: str) -> None:
    """Verify every selected inequality suite over a grid.

    Exits 0 only if every asserted check holds; a single --q together with
    a single --x selects single-point mode, which echoes each check with
    its lhs/rhs values.
    """
    rel_tol = _resolve_tolerance(tolerance)
    grid = _resolve_grid(q_values, x_values)
    single_point = len(q_values) == 1 and len(x_values) == 1
    report = run_suite(VerifyConfig(
        suites=tuple(suites),
        grid=grid,
        rel_tol=rel_tol,
        emit_checks=single_point,
    ))
    if fmt == "json":
        click.echo(json.dumps(report.to_json_dict(), indent=2))
    else:
        _print_report(report)
    if not report.passed:
        sys.exit(1)
    if report.errors:
        sys.exit(3)


def _resolve_tolerance(flag_value: Optional[float]) -> float:
    """Flag wins; otherwise the environment override (clamped); otherwise
    the library default."""
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(REL_TOL_ENV)
    if raw is None:
        return DEFAULT_REL_TOL
    try:
        value = float(raw)
    except ValueError as exc:
        raise UsageError(f"{REL_TOL_ENV} must be a number, got {raw!r}") from exc
    if not math.isfinite(value):
        raise UsageError(f"{REL_TOL_ENV} must be finite, got {raw!r}")
    return min(max(value, _REL_TOL_MIN), _REL_TOL_MAX)


def _resolve_grid(q_values: tuple[float, ...],
                  x_values: tuple[float, ...]) -> Optional[Grid]:
    if not q_values and not x_values:
        return None
    base = default_grid()
    return Grid(
        q_values=tuple(sorted(set(q_values))) if q_values else base.q_values,
        x_values=tuple(sorted(set(x_values))) if x_values else base.x_values,
        description="command-line override",
    )


def _where(q: Optional[float], x: Optional[float], y: Optional[float]) -> str:
    parts = []
    if q is not None:
        parts.append(f"q={q:.6g}")
    if x is not None:
        parts.append(f"x={x:.6g}")
    if y is not None:
        parts.append(f"y={y:.6g}")
    return f" @ {', '.join(parts)}" if parts else ""


def _print_report(report: VerificationReport) -> None:
    status = "PASS" if report.passed else "FAIL"
    click.echo(f"suite {report.suite}: {status}")
    click.echo(f"  grid: {len(report.grid.q_values)} orders x "
               f"{len(report.grid.x_values)} abscissas")
    click.echo(f"  tolerance: {report.rel_tol:g} (relative)")
    click.echo(f"  checks: {report.n_checks}  "
               f"violations: {len(report.violations)}  "
               f"observations: {len(report.observations)}  "
               f"errors: {len(report.errors)}")
    if report.min_margin is not None:
        click.echo(f"  margin range: [{report.min_margin:.6g}, "
                   f"{report.max_margin:.6g}]")
    for v in report.violations:
        click.echo(f"  VIOLATION {v.suite}{_where(v.q, v.x, v.y)}: "
                   f"lhs={v.lhs:.12g} rhs={v.rhs:.12g} margin={v.margin:.6g}")
    for o in report.observations:
        if o.lhs is None:
            click.echo(f"  note {o.suite}: {o.note}")
        else:
            click.echo(f"  check {o.suite}{_where(o.q, o.x, o.y)}: "
                       f"lhs={o.lhs:.12g} rhs={o.rhs:.12g} [{o.note}]")
    for e in report.errors:
        click.echo(f"  ERROR {e.suite}{_where(e.q, e.x, None)}: {e.note}")


# ---------------------------------------------------------------------------
# envelope


@main.command("envelope")
@click.option("--q", type=float, required=True, help="Order q > -1.")
@click.option("--x-min", type=float, default=0.1, show_default=True)
@click.option("--x-max", type=float, default=20.0, show_default=True)
@click.option("--steps", type=int, default=25, show_default=True,
              help="Number of log-spaced grid points (inclusive ends).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--precision", type=click.IntRange(6, 17), default=12,
              show_default=True)
@_mapped
def cmd_envelope(q: float, x_min: float, x_max: float, steps: int, fmt: str,
                 precision: int) -> None:
    """Tabulate V_q with its closed-form lower and upper envelopes on a
    log-spaced grid; the upper envelope requires q > -3/4 and its column
    is dropped (with a notice) otherwise."""
    _check_positive_range(x_min, x_max, steps)
    has_upper = q > -0.75
    notice = None
    if not has_upper:
        notice = f"upper envelope requires q > -3/4; column dropped for q={q:g}"
        click.echo(f"notice: {notice}", err=True)
    rows = [vq_envelope(q, float(v)) for v in np.geomspace(x_min, x_max, steps)]
    if fmt == "json":
        click.echo(json.dumps({
            "q": q,
            "notice": notice,
            "rows": [_envelope_json_row(r, precision) for r in rows],
        }, indent=2))
    else:
        header = _ENVELOPE_HEADER if has_upper else \
            _ENVELOPE_HEADER.rsplit(",", 1)[0]
        click.echo(header)
        for r in rows:
            click.echo(",".join(_envelope_csv_cells(r, precision, has_upper)))


def _envelope_csv_cells(row: VqEnvelope, precision: int,
                        has_upper: bool) -> list[str]:
    cells = [
        _fmt(row.x, precision),
        _fmt(row.lower_exp, precision),
        _fmt(row.lower_kratzel, precision),
        _fmt(row.value, precision),
    ]
    if has_upper:
        cells.append(_fmt(row.upper_agm, precision))
    return cells


def _envelope_json_row(row: VqEnvelope, precision: int) -> dict:
    return {
        "x": _jnum(row.x, precision),
        "lower_exp": _jnum(row.lower_exp, precision),
        "lower_kratzel": _jnum(row.lower_kratzel, precision),
        "vq": _jnum(row.value, precision),
        "upper_agm": _jnum(row.upper_agm, precision),
    }


if __name__ == "__main__":
    main()
