"""Right-hand-side families f(u) and their series lifts.

Each family knows how to apply itself to a :class:`TruncatedSeries`, which is
the only primitive the rest of the library needs: Taylor coefficients of
f(u0 + t) come from lifting the seed series ``u0 + t``, pointwise evaluation
is the order-0 case of the same lift, and derivative tables are the Taylor
coefficients rescaled by k!.  Keeping one code path for all three makes them
consistent to the last bit.

Families:

    michaelis_menten   f(u) = delta * u / (u + mu)
    heat_source        f(u) = -l * exp(-l * kappa * u),  l > 0, kappa > 0
    thermal_explosion  f(u) = nu * exp(u)
    power_law          f(u) = -u**gamma
    membrane_cap       f(u) = 1/2 - 1/(8 u**2)
    custom             reserved name; evaluation raises NotImplementedError
"""

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import DomainError, UsageError
from .powerseries import TruncatedSeries

FAMILIES = (
    "michaelis_menten",
    "heat_source",
    "thermal_explosion",
    "power_law",
    "membrane_cap",
    "custom",
)

_PARAM_NAMES = {
    "michaelis_menten": ("delta", "mu"),
    "heat_source": ("l", "kappa"),
    "thermal_explosion": ("nu",),
    "power_law": ("gamma",),
    "membrane_cap": (),
    "custom": (),
}


def _int_pow(s: TruncatedSeries, n: int) -> TruncatedSeries:
    """s**n for integer n >= 0 by binary exponentiation (valid for any s)."""
    one = np.zeros(s.order + 1)
    one[0] = 1.0
    out = TruncatedSeries(one)
    base = s
    while n:
        if n & 1:
            out = out * base
        n >>= 1
        if n:
            base = base * base
    return out


@dataclass(frozen=True)
class Nonlinearity:
    """A validated right-hand side f(u) from one of the known families."""

    family: str
    params: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UsageError(
                f"unknown family {self.family!r}; expected one of {FAMILIES}"
            )
        expected = _PARAM_NAMES[self.family]
        got = dict(self.params)
        if set(got) != set(expected):
            raise UsageError(
                f"family {self.family!r} takes parameters {sorted(expected)}, "
                f"got {sorted(got)}"
            )
        clean = {}
        for name in expected:
            v = float(got[name])
            if not math.isfinite(v):
                raise UsageError(f"parameter {name!r} must be finite, got {v!r}")
            clean[name] = v
        if self.family == "heat_source":
            # The physical model has positive strength and positive exponent
            # scale; zero or negative values silence the nonlinearity.
            if clean["l"] <= 0.0:
                raise DomainError(f"heat_source needs l > 0, got {clean['l']}")
            if clean["kappa"] <= 0.0:
                raise DomainError(
                    f"heat_source needs kappa > 0, got {clean['kappa']}"
                )
        object.__setattr__(self, "params", MappingProxyType(clean))

    # -- series lift ---------------------------------------------------------

    def series(self, s: TruncatedSeries) -> TruncatedSeries:
        """Apply f coefficientwise to a truncated series argument."""
        p = self.params
        if self.family == "michaelis_menten":
            return (s * p["delta"]) * (s + p["mu"]).recip()
        if self.family == "heat_source":
            return (s * (-p["l"] * p["kappa"])).exp() * (-p["l"])
        if self.family == "thermal_explosion":
            return s.exp() * p["nu"]
        if self.family == "power_law":
            g = p["gamma"]
            if g.is_integer():
                n = int(g)
                if n >= 0:
                    return -_int_pow(s, n)
                return -_int_pow(s, -n).recip()
            return -s.pow(g)
        if self.family == "membrane_cap":
            return (s * s).recip() * (-0.125) + 0.5
        raise NotImplementedError(
            "family 'custom' is a reserved name with no evaluation rule"
        )

    # -- pointwise views -------------------------------------------------------

    def taylor(self, u0: float, order: int) -> TruncatedSeries:
        """Taylor coefficients of t -> f(u0 + t) about t = 0, up to ``order``."""
        u0 = float(u0)
        if not math.isfinite(u0):
            raise UsageError(f"expansion point must be finite, got {u0!r}")
        if order < 0:
            raise UsageError(f"taylor order must be >= 0, got {order}")
        seed = np.zeros(order + 1)
        seed[0] = u0
        if order >= 1:
            seed[1] = 1.0
        return self.series(TruncatedSeries(seed))

    def eval(self, u0: float) -> float:
        return self.taylor(u0, 0)[0]

    def derivs(self, u0: float, order: int) -> np.ndarray:
        """Array of f(u0), f'(u0), ..., f^(order)(u0)."""
        t = self.taylor(u0, order)
        return np.array(
            [t[k] * math.factorial(k) for k in range(order + 1)]
        )
