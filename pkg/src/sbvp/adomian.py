"""Adomian polynomials of a one-variable nonlinearity.

Given solution components u_0, u_1, ..., u_n, the m-th Adomian polynomial is
the m-th Taylor coefficient in lam of f(u_0 + u_1 lam + ... + u_n lam**n).
Two independent evaluation routes are provided:

* :func:`adomian_duan` uses Duan's convolution recurrence on the reduced
  coefficient table C[m][k], needing only the derivative values
  f(u_0), f'(u_0), ..., f^(n)(u_0).  This is the fast route the solver uses.
* :func:`adomian_oracle` evaluates the definition directly by lifting the
  component series through the nonlinearity.  It exists as an independent
  cross-check; the two routes agree to rounding.
"""

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import BlowupError, UsageError
from .nonlinearity import Nonlinearity
from .powerseries import TruncatedSeries


def _check_components(components) -> np.ndarray:
    u = np.asarray(components, dtype=np.float64)
    if u.ndim != 1 or u.shape[0] == 0:
        raise UsageError("components must be a non-empty 1-d sequence")
    if not np.all(np.isfinite(u)):
        raise BlowupError("non-finite solution component")
    return u


@dataclass(frozen=True, eq=False)
class AdomianSequence:
    """Components u_0..u_n and their Adomian polynomials A_0..A_n."""

    components: np.ndarray
    polynomials: np.ndarray


def duan_ctable(components) -> np.ndarray:
    """Reduced polynomial table C[m][k] for the given components.

    C[m][k] collects the coefficient of f^(k)(u_0) in A_m.  Row 0 is zero
    (A_0 = f(u_0) carries no table term); in row m only columns 1..m are
    populated.  Mostly useful for inspection and tests.
    """
    u = _check_components(components)
    return kernels.duan_rows(u, u.shape[0] - 1)


def adomian_duan(components, f: Nonlinearity) -> AdomianSequence:
    """Adomian polynomials by the convolution recurrence."""
    u = _check_components(components)
    n = u.shape[0] - 1
    derivs = f.derivs(float(u[0]), n)
    polys = kernels.duan_polys(u, np.asarray(derivs, dtype=np.float64))
    return AdomianSequence(components=u, polynomials=np.asarray(polys))


def adomian_oracle(components, f: Nonlinearity) -> AdomianSequence:
    """Adomian polynomials straight from the definition via a series lift."""
    u = _check_components(components)
    lifted = f.series(TruncatedSeries(u))
    return AdomianSequence(components=u, polynomials=lifted.coeffs)
