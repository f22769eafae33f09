"""Error measurement for series solutions.

Three diagnostics are provided, matching how approximate solutions of the
singular boundary value problem are usually judged:

* :func:`abs_error`: pointwise |u_N(x) - u(x)| against a known exact
  solution, with its maximum (ME) over a closed uniform grid on [0, 1].
* :func:`residual`: how well the series satisfies the differential equation
  itself, |u_N'' + (alpha/x) u_N' - f(u_N)| on a half-open grid of (0, 1],
  with its maximum (MER).  This needs no exact solution.
* :func:`error_bound`: an a priori estimate TE of the maximum error, the
  magnitude of the exact Taylor coefficient at the truncation order plus the
  largest defect between computed and exact coefficients.  In practice
  TE >= ME, so it is a usable certificate when the exact solution is known.

Exact solutions are available for the two benchmark problems that have one
in closed form.
"""

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .errors import (
    BoundUnavailableError,
    BlowupError,
    DomainError,
    RangeError,
    SingularityError,
    UsageError,
)
from .powerseries import TruncatedSeries
from .solver import SbvpProblem, SeriesSolution

# -- grids -------------------------------------------------------------------


def closed_grid(points: int) -> np.ndarray:
    """Uniform grid of [0, 1] with the given number of points."""
    if not isinstance(points, (int, np.integer)) or points < 2:
        raise UsageError(f"closed grid needs integer points >= 2, got {points!r}")
    return np.linspace(0.0, 1.0, int(points))


def half_open_grid(points: int) -> np.ndarray:
    """Uniform grid {i/points : i = 1..points} of (0, 1]."""
    if not isinstance(points, (int, np.integer)) or points < 1:
        raise UsageError(f"half-open grid needs integer points >= 1, got {points!r}")
    p = int(points)
    return np.arange(1, p + 1, dtype=np.float64) / p


def _check_grid(grid, allow_zero: bool) -> np.ndarray:
    g = np.asarray(grid, dtype=np.float64)
    if g.ndim != 1 or g.shape[0] == 0:
        raise UsageError("grid must be a non-empty 1-d array")
    if not np.all(np.isfinite(g)):
        raise UsageError("grid contains non-finite points")
    lo = 0.0 if allow_zero else np.nextafter(0.0, 1.0)
    if g.min() < lo or g.max() > 1.0:
        where = "[0, 1]" if allow_zero else "(0, 1]"
        raise UsageError(f"grid points must lie in {where}")
    return g


# -- exact solutions -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ExactSolution:
    """Closed-form solution with both pointwise and Taylor views."""

    kind: str
    eval_fn: Callable[[float], float]
    taylor_fn: Callable[[int], TruncatedSeries]

    def __call__(self, x: float) -> float:
        return float(self.eval_fn(float(x)))

    def taylor(self, order: int) -> TruncatedSeries:
        return self.taylor_fn(int(order))


def _gas_sphere_eval(x: float) -> float:
    return (1.0 + x * x / 3.0) ** -0.5


def _gas_sphere_taylor(order: int) -> TruncatedSeries:
    c = np.zeros(order + 1)
    c[0] = 1.0
    if order >= 2:
        c[2] = 1.0 / 3.0
    return TruncatedSeries(c).pow(-0.5)


# u(x) = 2 log((K+1)/(K + x^2)) solves u'' + u'/x = -exp(u), u'(0) = 0,
# u(1) = 0 for K = 3 + 2 sqrt(2); the K = 3 - 2 sqrt(2) branch has Taylor
# radius < 1 and is not the one the solver converges to.
_K = 3.0 + 2.0 * math.sqrt(2.0)


def _thermal_eval(x: float) -> float:
    return 2.0 * math.log((_K + 1.0) / (_K + x * x))


def _thermal_taylor(order: int) -> TruncatedSeries:
    c = np.zeros(order + 1)
    c[0] = _K
    if order >= 2:
        c[2] = 1.0
    return TruncatedSeries(c).log() * (-2.0) + 2.0 * math.log(_K + 1.0)


_EXACT = {
    "isothermal-gas-sphere": lambda: ExactSolution(
        "isothermal-gas-sphere", _gas_sphere_eval, _gas_sphere_taylor
    ),
    "thermal-explosion": lambda: ExactSolution(
        "thermal-explosion", _thermal_eval, _thermal_taylor
    ),
}

EXACT_KINDS = tuple(sorted(_EXACT))


def exact_solution(kind: str) -> ExactSolution:
    """Look up a closed-form solution by name."""
    try:
        return _EXACT[kind]()
    except KeyError:
        raise UsageError(
            f"no exact solution named {kind!r}; known: {EXACT_KINDS}"
        ) from None


# -- error tables -----------------------------------------------------------


def _as_eval(solution) -> Callable[[float], float]:
    if isinstance(solution, (SeriesSolution, TruncatedSeries, ExactSolution)):
        return solution
    if callable(solution):
        return solution
    raise UsageError(f"cannot evaluate solution object {solution!r}")


@dataclass(frozen=True, eq=False)
class ErrorTable:
    """Pointwise absolute errors and their maximum (ME)."""

    grid: np.ndarray
    errors: np.ndarray
    me: float


def abs_error(solution, exact, grid=None, points: int = 1001) -> ErrorTable:
    """|solution - exact| on a grid (default: 1001-point closed grid)."""
    u = _as_eval(solution)
    v = _as_eval(exact)
    g = closed_grid(points) if grid is None else _check_grid(grid, allow_zero=True)
    errs = np.array([abs(float(u(x)) - float(v(x))) for x in g])
    if not np.all(np.isfinite(errs)):
        raise BlowupError("non-finite value while tabulating errors")
    return ErrorTable(grid=g, errors=errs, me=float(errs.max()))


@dataclass(frozen=True, eq=False)
class ResidualTable:
    """Pointwise equation residuals, their maximum (MER), and exclusions.

    Grid points where the nonlinearity cannot be evaluated at u_N(x) carry
    an infinite entry and are flagged in ``excluded``; the MER is taken over
    the remaining points.
    """

    grid: np.ndarray
    residuals: np.ndarray
    mer: float
    excluded: np.ndarray


def residual(
    problem: SbvpProblem, solution, grid=None, points: int = 1001
) -> ResidualTable:
    """|u_N'' + (alpha/x) u_N' - f(u_N)| on a grid of (0, 1]."""
    if isinstance(solution, SeriesSolution):
        s = solution.series
    elif isinstance(solution, TruncatedSeries):
        s = solution
    else:
        raise UsageError("residual needs a SeriesSolution or TruncatedSeries")
    if s.order < 2:
        raise UsageError("residual needs a series of order >= 2")
    g = (
        half_open_grid(points)
        if grid is None
        else _check_grid(grid, allow_zero=False)
    )
    d1 = s.deriv()
    d2 = d1.deriv()
    vals = np.empty(g.shape[0])
    excluded = np.zeros(g.shape[0], dtype=bool)
    for i, x in enumerate(g):
        x = float(x)
        try:
            fv = problem.f.eval(s(x))
        except (DomainError, SingularityError, RangeError, BlowupError):
            vals[i] = math.inf
            excluded[i] = True
            continue
        vals[i] = abs(d2(x) + problem.alpha / x * d1(x) - fv)
    if excluded.all():
        raise DomainError("nonlinearity undefined at every residual grid point")
    mer = float(vals[~excluded].max())
    if not math.isfinite(mer):
        raise BlowupError("non-finite residual value")
    return ResidualTable(grid=g, residuals=vals, mer=mer, excluded=excluded)


# -- a priori bound -----------------------------------------------------------


@dataclass(frozen=True)
class ErrorBound:
    """A priori truncation-error estimate TE = tail_term + coeff_defect."""

    te: float
    tail_term: float
    coeff_defect: float


def error_bound(
    solution, exact: ExactSolution, guard: int = 30
) -> ErrorBound:
    """Estimate the maximum error of a series solution on [0, 1].

    ``tail_term`` is the magnitude of the exact Taylor coefficient at the
    truncation order (or the next one, whichever is larger, since alternate
    coefficients vanish here); it plays the role of the remainder term.
    ``coeff_defect`` is the largest |computed - exact| coefficient
    discrepancy.  The estimate is only meaningful when the exact Taylor
    coefficients decay, i.e. the exact series converges on [0, 1]; ``guard``
    extra coefficients are inspected to verify decay, and
    BoundUnavailableError is raised if they do not.
    """
    if isinstance(solution, SeriesSolution):
        s = solution.series
    elif isinstance(solution, TruncatedSeries):
        s = solution
    else:
        raise UsageError("error_bound needs a SeriesSolution or TruncatedSeries")
    if not isinstance(exact, ExactSolution):
        raise UsageError("error_bound needs an ExactSolution for comparison")
    if guard < 2:
        raise UsageError(f"guard must be >= 2, got {guard!r}")
    n = s.order
    a = exact.taylor(n + 1 + guard).coeffs

    tail = np.abs(a[n:])
    nonzero = tail[tail > 0.0]
    if nonzero.shape[0] >= 2 and nonzero[-1] >= nonzero[0]:
        raise BoundUnavailableError(
            "exact Taylor coefficients do not decay past the truncation "
            "order; the remainder heuristic does not apply"
        )

    tail_term = float(max(abs(a[n]), abs(a[n + 1])))
    coeff_defect = float(np.abs(s.coeffs - a[: n + 1]).max())
    return ErrorBound(
        te=tail_term + coeff_defect,
        tail_term=tail_term,
        coeff_defect=coeff_defect,
    )
