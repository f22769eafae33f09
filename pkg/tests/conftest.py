"""Shared problem fixtures: the five benchmark cases."""

import math

import pytest

import sbvp


@pytest.fixture(scope="session")
def gas_sphere():
    # u'' + (2/x) u' = -u^5, u(1) = sqrt(3)/2; exact u = (1 + x^2/3)^(-1/2)
    f = sbvp.Nonlinearity("power_law", {"gamma": 5.0})
    return sbvp.SbvpProblem(alpha=2.0, f=f, bc=(1.0, 0.0, math.sqrt(3.0) / 2.0))


@pytest.fixture(scope="session")
def thermal():
    # u'' + (1/x) u' = -e^u, u(1) = 0; exact u = 2 log((K+1)/(K+x^2))
    f = sbvp.Nonlinearity("thermal_explosion", {"nu": -1.0})
    return sbvp.SbvpProblem(alpha=1.0, f=f, bc=(1.0, 0.0, 0.0))


@pytest.fixture(scope="session")
def oxygen():
    # u'' + (2/x) u' = delta u/(u + mu), 5 u(1) + u'(1) = 5
    f = sbvp.Nonlinearity("michaelis_menten", {"delta": 0.76129, "mu": 0.03119})
    return sbvp.SbvpProblem(alpha=2.0, f=f, bc=(5.0, 1.0, 5.0))


@pytest.fixture(scope="session")
def head():
    # u'' + (2/x) u' = -e^(-u), u(1) + u'(1) = 0
    f = sbvp.Nonlinearity("heat_source", {"l": 1.0, "kappa": 1.0})
    return sbvp.SbvpProblem(alpha=2.0, f=f, bc=(1.0, 1.0, 0.0))


@pytest.fixture(scope="session")
def head_two():
    # same equation, 0.1 u(1) + u'(1) = 0
    f = sbvp.Nonlinearity("heat_source", {"l": 1.0, "kappa": 1.0})
    return sbvp.SbvpProblem(alpha=2.0, f=f, bc=(0.1, 1.0, 0.0))


@pytest.fixture(scope="session")
def membrane():
    # u'' + (3/x) u' = 1/2 - 1/(8 u^2), u(1) = 1
    f = sbvp.Nonlinearity("membrane_cap", {})
    return sbvp.SbvpProblem(alpha=3.0, f=f, bc=(1.0, 0.0, 1.0))
