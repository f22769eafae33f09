"""Pure-Python kernels: truncated series ops, Duan tables, the series recurrence.

Loop order here is the reference; _kernels_c.pyx mirrors it statement for
statement (and is compiled with FP contraction off), so both backends produce
bit-identical doubles.  Domain and overflow policy live in the wrappers
(powerseries / solver); kernels never raise on float overflow and may return
inf/nan for the wrappers to detect.
"""

import functools
import math

import numpy as np

BACKEND = "python"


def _quiet(fn):
    # Non-finite intermediates are expected on inadmissible inputs; the
    # compiled mirror is silent there, so suppress numpy's FP warnings too.
    @functools.wraps(fn)
    def wrapped(*args):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            return fn(*args)

    return wrapped


@_quiet
def cauchy_mul(a, b):
    n = a.shape[0]
    out = np.empty(n)
    for k in range(n):
        s = 0.0
        for m in range(k + 1):
            s += a[m] * b[k - m]
        out[k] = s
    return out


@_quiet
def series_recip(a):
    n = a.shape[0]
    out = np.empty(n)
    out[0] = 1.0 / a[0]
    for k in range(1, n):
        s = 0.0
        for m in range(1, k + 1):
            s += a[m] * out[k - m]
        out[k] = -s / a[0]
    return out


@_quiet
def series_exp(a):
    n = a.shape[0]
    out = np.empty(n)
    try:
        out[0] = math.exp(a[0])
    except OverflowError:
        out[0] = math.inf
    for k in range(1, n):
        s = 0.0
        for m in range(1, k + 1):
            s += m * a[m] * out[k - m]
        out[k] = s / k
    return out


@_quiet
def series_pow(a, p):
    n = a.shape[0]
    out = np.empty(n)
    try:
        out[0] = a[0] ** p
    except OverflowError:
        out[0] = math.inf
    for k in range(1, n):
        s = 0.0
        for m in range(1, k + 1):
            s += ((p + 1.0) * m - k) * a[m] * out[k - m]
        out[k] = s / (k * a[0])
    return out


@_quiet
def series_log(a):
    n = a.shape[0]
    out = np.empty(n)
    out[0] = math.log(a[0])
    for k in range(1, n):
        s = 0.0
        for m in range(1, k):
            s += (k - m) * a[m] * out[k - m]
        out[k] = (k * a[k] - s) / (k * a[0])
    return out


def _row_into(C, u, m):
    # C[m][k] = C_m^k given rows 1..m-1 and components u[0..m].
    C[m, 1] = u[m]
    for k in range(2, m + 1):
        s = 0.0
        for j in range(0, m - k + 1):
            s += (j + 1) * u[j + 1] * C[m - 1 - j, k - 1]
        C[m, k] = s / m


@_quiet
def duan_rows(u, n):
    # (n+1)x(n+1) table; row m holds C_m^1..C_m^m, row 0 and column 0 unused.
    C = np.zeros((n + 1, n + 1))
    for m in range(1, n + 1):
        _row_into(C, u, m)
    return C


@_quiet
def duan_polys(u, derivs):
    n = u.shape[0] - 1
    C = duan_rows(u, n)
    A = np.empty(n + 1)
    A[0] = derivs[0]
    for m in range(1, n + 1):
        s = 0.0
        for k in range(1, m + 1):
            s += C[m, k] * derivs[k]
        A[m] = s
    return A


@_quiet
def build_coeffs(beta, derivs, alpha, order):
    # U(0)=beta, U(1)=0, U(k+1) = A_{k-1} / ((k+1)(k+alpha)); the Adomian
    # polynomial A_{k-1} is generated incrementally from U(0..k-1).
    U = np.zeros(order + 1)
    U[0] = beta
    C = np.zeros((order + 1, order + 1))
    for k in range(1, order):
        m = k - 1
        if m == 0:
            A = derivs[0]
        else:
            _row_into(C, U, m)
            A = 0.0
            for kk in range(1, m + 1):
                A += C[m, kk] * derivs[kk]
        U[k + 1] = A / ((k + 1) * (k + alpha))
    return U
