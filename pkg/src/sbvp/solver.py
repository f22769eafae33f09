"""Series solver for singular boundary value problems on (0, 1].

Problems have the form

    u'' + (alpha/x) u' = f(u),   0 < x <= 1,
    u'(0) = 0,                   (regularity at the singular point)
    a u(1) + b u'(1) = c,        (a, b) != (0, 0),

with alpha >= 1 and f one of the known nonlinearity families.  The solution
is represented as a truncated power series about x = 0 whose coefficients
follow from a two-term recurrence driven by the Adomian polynomials of f,
parameterized by the unknown origin value beta = u(0).  The boundary
condition then becomes a scalar root problem g(beta) = 0.

Truncation produces spurious roots of g that drift or vanish as the order
changes, while roots approximating the true solution stay put.  The solver
therefore scans a beta range at a ladder of increasing orders, chains nearby
roots across the ladder, and accepts the most stable full chain; the final
successive change along the accepted chain is reported as the spread and
decides convergence.
"""

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np

from ._backend import kernels
from .errors import (
    BlowupError,
    DomainError,
    RangeError,
    SingularityError,
    UsageError,
)
from .nonlinearity import Nonlinearity
from .powerseries import TruncatedSeries

DEFAULT_SCAN = (0.1, 3.0, 291)
DEFAULT_ROOT_RADIUS = 0.05
CONVERGENCE_TOL = 1e-6

_BISECT_XTOL = 1e-13
_DEDUPE_TOL = 1e-12


@dataclass(frozen=True)
class SbvpProblem:
    """Equation data: shape parameter, right-hand side, boundary condition."""

    alpha: float
    f: Nonlinearity
    bc: Tuple[float, float, float]

    def __post_init__(self):
        alpha = float(self.alpha)
        if not math.isfinite(alpha) or alpha < 1.0:
            raise DomainError(f"shape parameter alpha must be >= 1, got {alpha!r}")
        object.__setattr__(self, "alpha", alpha)
        if not isinstance(self.f, Nonlinearity):
            raise UsageError("f must be a Nonlinearity instance")
        bc = tuple(float(v) for v in self.bc)
        if len(bc) != 3 or not all(math.isfinite(v) for v in bc):
            raise UsageError(f"bc must be three finite floats (a, b, c), got {self.bc!r}")
        if bc[0] == 0.0 and bc[1] == 0.0:
            raise UsageError("bc needs a != 0 or b != 0")
        object.__setattr__(self, "bc", bc)


@dataclass(frozen=True)
class SeriesSolution:
    """Truncated series u(x) for a fixed origin value beta."""

    problem: SbvpProblem
    beta: float
    series: TruncatedSeries

    @property
    def order(self) -> int:
        return self.series.order

    @property
    def coeffs(self) -> np.ndarray:
        return self.series.coeffs

    def __call__(self, x: float) -> float:
        return self.series(x)


def _check_order(order) -> int:
    if not isinstance(order, (int, np.integer)):
        raise UsageError(f"order must be an integer, got {order!r}")
    if order < 2:
        raise UsageError(f"order must be >= 2, got {order}")
    return int(order)


def build_series(problem: SbvpProblem, beta: float, order: int) -> TruncatedSeries:
    """Series coefficients for a trial origin value beta.

    The recurrence consumes the Adomian polynomials A_0..A_{order-2}, which in
    turn need the derivative table f, f', ..., f^(order-2) at beta.  Raises the
    usual domain errors if beta is outside the nonlinearity's domain, and
    BlowupError if the recurrence leaves float64 range.
    """
    order = _check_order(order)
    beta = float(beta)
    if not math.isfinite(beta):
        raise UsageError(f"beta must be finite, got {beta!r}")
    derivs = problem.f.derivs(beta, order - 2)
    coeffs = kernels.build_coeffs(beta, derivs, problem.alpha, order)
    if not np.all(np.isfinite(coeffs)):
        raise BlowupError(
            f"series coefficients overflow at beta={beta!r}, order={order}"
        )
    return TruncatedSeries(coeffs)


def boundary_residual(problem: SbvpProblem, series: TruncatedSeries) -> float:
    """g(beta) = a u(1) + b u'(1) - c for the series built at beta."""
    a, b, c = problem.bc
    r = a * series(1.0)
    if b != 0.0:
        r += b * series.deriv()(1.0)
    return r - c


def _check_scan(scan) -> Tuple[float, float, int]:
    try:
        lo, hi, steps = scan
    except (TypeError, ValueError):
        raise UsageError(f"scan must be (lo, hi, steps), got {scan!r}") from None
    lo, hi = float(lo), float(hi)
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise UsageError(f"scan needs finite lo < hi, got ({lo!r}, {hi!r})")
    if not isinstance(steps, (int, np.integer)) or steps < 2:
        raise UsageError(f"scan needs integer steps >= 2, got {steps!r}")
    return lo, hi, int(steps)


def _residual_fn(problem: SbvpProblem, order: int):
    """g(beta), or None where the series is inadmissible at this beta."""

    def g(beta: float) -> Optional[float]:
        try:
            s = build_series(problem, beta, order)
        except (DomainError, SingularityError, RangeError, BlowupError):
            return None
        r = boundary_residual(problem, s)
        if not math.isfinite(r):
            return None
        return r

    return g


def _bisect(g, lo, hi, glo, ghi) -> Optional[float]:
    # Plain bisection: the bracket is only ~1e-2 wide, so 50 halvings reach
    # the tolerance with no need for anything fancier.
    while hi - lo > _BISECT_XTOL:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        gm = g(mid)
        if gm is None:
            return None
        if gm == 0.0:
            return mid
        if (gm < 0.0) == (glo < 0.0):
            lo, glo = mid, gm
        else:
            hi, ghi = mid, gm
    return 0.5 * (lo + hi)


def find_roots(problem: SbvpProblem, order: int, scan=DEFAULT_SCAN) -> np.ndarray:
    """All roots of the boundary residual on a uniform beta scan.

    Scan points where the series cannot be built (domain violations, overflow)
    are skipped; a sign change across such a gap is not bracketed.  If every
    point is inadmissible the scan range is bad and DomainError is raised.
    Roots found by bisection are rejected unless the residual actually shrank
    below both bracket endpoints, which discards sign changes caused by poles.
    """
    order = _check_order(order)
    lo, hi, steps = _check_scan(scan)
    g = _residual_fn(problem, order)
    grid = np.linspace(lo, hi, steps)
    vals = [g(x) for x in grid]
    if all(v is None for v in vals):
        raise DomainError(
            f"no admissible beta in scan [{lo}, {hi}] for this nonlinearity"
        )
    roots = []
    for i, (x, v) in enumerate(zip(grid, vals)):
        if v is not None and v == 0.0:
            roots.append(float(x))
    for i in range(steps - 1):
        g0, g1 = vals[i], vals[i + 1]
        if g0 is None or g1 is None or g0 == 0.0 or g1 == 0.0:
            continue
        if (g0 < 0.0) == (g1 < 0.0):
            continue
        r = _bisect(g, float(grid[i]), float(grid[i + 1]), g0, g1)
        if r is None:
            continue
        gr = g(r)
        # A pole flips sign while |g| grows toward it; a root shrinks |g|.
        if gr is not None and abs(gr) < min(abs(g0), abs(g1)):
            roots.append(r)
    roots.sort()
    out = []
    for r in roots:
        if not out or r - out[-1] > _DEDUPE_TOL:
            out.append(r)
    return np.array(out)


@dataclass(frozen=True)
class RootReport:
    """Outcome of the order-ladder root selection."""

    orders: Tuple[int, ...]
    roots_by_order: Mapping[int, Tuple[float, ...]]
    chain: Tuple[Tuple[int, float], ...]
    beta: float
    residual: float
    spread: float
    converged: bool


def _chain_variation(chain) -> float:
    return max(abs(b1 - b0) for (_, b0), (_, b1) in zip(chain, chain[1:]))


def select_root(
    problem: SbvpProblem,
    orders: Sequence[int],
    scan=DEFAULT_SCAN,
    radius: float = DEFAULT_ROOT_RADIUS,
    tol: float = CONVERGENCE_TOL,
) -> RootReport:
    """Chain scan roots across an order ladder and pick the stable one.

    Each root at the lowest order starts a chain; at every later order a
    chain extends to the nearest unclaimed root within ``radius`` of its
    last entry, or dies.  Roots claimed by no chain start new (partial)
    chains.  Among chains spanning the full ladder the one with the smallest
    maximum successive change wins, with |g| and then beta as tie-breaks.
    The spread is the final successive change of the winner; convergence
    means a full-ladder winner with spread <= tol.
    """
    orders = tuple(_check_order(n) for n in orders)
    if len(orders) == 0:
        raise UsageError("order ladder must be non-empty")
    if any(b <= a for a, b in zip(orders, orders[1:])):
        raise UsageError(f"order ladder must be strictly increasing, got {orders}")
    if not radius > 0.0:
        raise UsageError(f"chain radius must be positive, got {radius!r}")

    roots_by_order = {n: find_roots(problem, n, scan) for n in orders}

    chains = []
    for i, n in enumerate(orders):
        roots = [float(r) for r in roots_by_order[n]]
        used = [False] * len(roots)
        if i > 0:
            for ch in chains:
                if ch[-1][0] != orders[i - 1]:
                    continue
                last = ch[-1][1]
                best_j, best_d = None, math.inf
                for j, r in enumerate(roots):
                    if used[j]:
                        continue
                    d = abs(r - last)
                    if d <= radius and d < best_d:
                        best_j, best_d = j, d
                if best_j is not None:
                    used[best_j] = True
                    ch.append((n, roots[best_j]))
        for j, r in enumerate(roots):
            if not used[j]:
                chains.append([(n, r)])

    if not chains:
        lo, hi, _ = _check_scan(scan)
        raise DomainError(
            f"no roots of the boundary condition in scan [{lo}, {hi}]"
        )

    def end_residual(ch) -> float:
        n, b = ch[-1]
        v = _residual_fn(problem, n)(b)
        return abs(v) if v is not None else math.inf

    full = [ch for ch in chains if len(ch) == len(orders)]
    if len(orders) >= 2 and full:
        best = min(
            full, key=lambda ch: (_chain_variation(ch), end_residual(ch), ch[-1][1])
        )
        spread = abs(best[-1][1] - best[-2][1])
        converged = spread <= tol
    else:
        # No chain spans the ladder (or the ladder is a single level): fall
        # back to the chain reaching highest, preferring length, then |g|.
        best = min(
            chains,
            key=lambda ch: (-ch[-1][0], -len(ch), end_residual(ch), ch[-1][1]),
        )
        spread = (
            abs(best[-1][1] - best[-2][1]) if len(best) >= 2 else math.inf
        )
        converged = False

    return RootReport(
        orders=orders,
        roots_by_order=MappingProxyType(
            {n: tuple(float(r) for r in roots_by_order[n]) for n in orders}
        ),
        chain=tuple(best),
        beta=best[-1][1],
        residual=end_residual(best),
        spread=spread,
        converged=converged,
    )


def default_ladder(order: int) -> Tuple[int, ...]:
    """Order ladder (order/2, 3 order/4, order), rounded to even levels.

    Odd-index series coefficients vanish identically for these problems, so
    an odd level would duplicate the even level below it; levels are rounded
    to even, floored at 2, clamped at ``order``, and deduplicated.
    """
    order = _check_order(order)
    levels = set()
    for x in (order / 2.0, 3.0 * order / 4.0, float(order)):
        k = max(2, 2 * int(x / 2.0 + 0.5))
        levels.add(min(k, order))
    return tuple(sorted(levels))


@dataclass(frozen=True)
class SolutionReport:
    """Everything solve() determined: the root search and the final series."""

    problem: SbvpProblem
    order: int
    scan: Tuple[float, float, int]
    ladder: Tuple[int, ...]
    roots: RootReport
    solution: SeriesSolution

    @property
    def beta(self) -> float:
        return self.roots.beta

    @property
    def converged(self) -> bool:
        return self.roots.converged


def solve(
    problem: SbvpProblem,
    order: int = 10,
    scan=DEFAULT_SCAN,
    ladder: Optional[Sequence[int]] = None,
) -> SolutionReport:
    """Solve the boundary value problem with a series of the given order."""
    order = _check_order(order)
    lo, hi, steps = _check_scan(scan)
    if ladder is None:
        ladder = default_ladder(order)
    else:
        ladder = tuple(_check_order(n) for n in ladder)
    if not ladder or max(ladder) != order:
        raise UsageError(
            f"ladder {ladder} must end at the requested order {order}"
        )
    report = select_root(problem, ladder, (lo, hi, steps))
    series = build_series(problem, report.beta, order)
    sol = SeriesSolution(problem=problem, beta=report.beta, series=series)
    return SolutionReport(
        problem=problem,
        order=order,
        scan=(lo, hi, steps),
        ladder=ladder,
        roots=report,
        solution=sol,
    )
