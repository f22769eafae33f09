"""Truncated power series over float64 coefficients.

A :class:`TruncatedSeries` holds the coefficients ``c[0..N]`` of a polynomial
``c0 + c1 t + ... + cN t**N`` understood as a power series truncated at a fixed
order ``N``.  All arithmetic stays at that truncation order: binary operations
require both operands to carry the same order (no silent padding), and the
elementary functions (reciprocal, exp, pow, log) are computed coefficient by
coefficient with the classical differential-equation recurrences, so each
output coefficient is exact up to float64 rounding.

    >>> a = TruncatedSeries([1.0, 1.0, 0.0])
    >>> (a * a).coeffs
    array([1., 2., 1.])
    >>> TruncatedSeries([0.0, 1.0, 0.0, 0.0, 0.0]).exp().coeffs
    array([1.        , 1.        , 0.5       , 0.16666667, 0.04166667])

Values are immutable: every operation returns a new series and validates that
all produced coefficients are finite.
"""

import math
from typing import Sequence

import numpy as np

from ._backend import kernels
from .errors import BlowupError, DomainError, RangeError, SingularityError, UsageError

# Reciprocal guard: constant terms at or below this magnitude are treated as a
# series singularity rather than allowed to overflow into garbage.
RECIP_FLOOR = 1e-300

# Largest argument for which math.exp stays inside the double range.
_EXP_MAX = math.log(np.finfo(np.float64).max)


class TruncatedSeries:
    """Immutable truncated power series with float64 coefficients."""

    __slots__ = ("_c",)

    # Keep numpy from broadcasting over us so scalar * series hits __rmul__.
    __array_ufunc__ = None

    def __init__(self, coeffs: Sequence[float]):
        c = np.asarray(coeffs, dtype=np.float64)
        if c.ndim != 1 or c.shape[0] == 0:
            raise UsageError("coefficients must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(c)):
            raise BlowupError("non-finite coefficient in series construction")
        self._c = c.copy()

    # -- basic accessors ---------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        """Coefficient array c[0..order] (a copy; the series is immutable)."""
        return self._c.copy()

    @property
    def order(self) -> int:
        return self._c.shape[0] - 1

    def __len__(self) -> int:
        return self._c.shape[0]

    def __getitem__(self, k: int) -> float:
        return float(self._c[k])

    def __repr__(self) -> str:
        return f"TruncatedSeries({self._c.tolist()!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._c.shape == other._c.shape and bool(np.all(self._c == other._c))

    __hash__ = None

    # -- helpers -----------------------------------------------------------

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "TruncatedSeries":
        if not np.all(np.isfinite(arr)):
            raise BlowupError("series operation produced a non-finite coefficient")
        out = cls.__new__(cls)
        out._c = arr
        return out

    def _check_same_order(self, other: "TruncatedSeries", op: str) -> None:
        if self.order != other.order:
            raise UsageError(
                f"{op} requires equal truncation orders "
                f"(got {self.order} and {other.order}); use truncated() to align"
            )

    def truncated(self, order: int) -> "TruncatedSeries":
        """Drop coefficients above ``order`` (which must not exceed self.order)."""
        if not 0 <= order <= self.order:
            raise UsageError(f"cannot truncate order-{self.order} series to {order}")
        return TruncatedSeries._wrap(self._c[: order + 1].copy())

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_same_order(other, "add")
            return TruncatedSeries._wrap(self._c + other._c)
        if isinstance(other, (int, float, np.floating)):
            c = self._c.copy()
            c[0] += float(other)
            return TruncatedSeries._wrap(c)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._wrap(-self._c)

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_same_order(other, "sub")
            return TruncatedSeries._wrap(self._c - other._c)
        if isinstance(other, (int, float, np.floating)):
            return self + (-float(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_same_order(other, "mul")
            return TruncatedSeries._wrap(kernels.cauchy_mul(self._c, other._c))
        if isinstance(other, (int, float, np.floating)):
            return TruncatedSeries._wrap(self._c * float(other))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.floating)):
            return TruncatedSeries._wrap(self._c / float(other))
        return NotImplemented

    # -- elementary functions ----------------------------------------------

    def recip(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires |c0| above the 1e-300 floor."""
        if abs(float(self._c[0])) < RECIP_FLOOR:
            raise SingularityError(
                f"series reciprocal at constant term {self._c[0]!r}"
            )
        return TruncatedSeries._wrap(kernels.series_recip(self._c))

    def exp(self) -> "TruncatedSeries":
        if float(self._c[0]) > _EXP_MAX:
            raise RangeError(f"exp overflows at constant term {self._c[0]!r}")
        out = kernels.series_exp(self._c)
        if not np.isfinite(out[0]):
            raise RangeError(f"exp overflows at constant term {self._c[0]!r}")
        return TruncatedSeries._wrap(out)

    def pow(self, p: float) -> "TruncatedSeries":
        """Real power; requires a strictly positive constant term."""
        if not float(self._c[0]) > 0.0:
            raise DomainError(
                f"series power needs constant term > 0 (got {self._c[0]!r})"
            )
        out = kernels.series_pow(self._c, float(p))
        if not np.isfinite(out[0]):
            raise RangeError(f"pow overflows at constant term {self._c[0]!r}")
        return TruncatedSeries._wrap(out)

    def log(self) -> "TruncatedSeries":
        if not float(self._c[0]) > 0.0:
            raise DomainError(
                f"series log needs constant term > 0 (got {self._c[0]!r})"
            )
        return TruncatedSeries._wrap(kernels.series_log(self._c))

    # -- calculus and evaluation --------------------------------------------

    def deriv(self) -> "TruncatedSeries":
        """Formal derivative; drops the truncation order by one."""
        if self.order < 1:
            raise UsageError("cannot differentiate an order-0 series")
        k = np.arange(1, self.order + 1, dtype=np.float64)
        return TruncatedSeries._wrap(self._c[1:] * k)

    def __call__(self, x: float) -> float:
        """Evaluate by Horner's rule at a finite point x."""
        x = float(x)
        if not math.isfinite(x):
            raise UsageError(f"evaluation point must be finite (got {x!r})")
        r = 0.0
        for c in self._c[::-1]:
            r = r * x + c
        return float(r)
