# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; statement-for-statement mirror of _kernels_py.

Built with -ffp-contract=off so sums match the pure path bit for bit.
"""

from libc.math cimport exp as c_exp, log as c_log, pow as c_pow

import numpy as np

BACKEND = "compiled"


def cauchy_mul(double[::1] a, double[::1] b):
    cdef Py_ssize_t n = a.shape[0]
    out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t k, m
    cdef double s
    for k in range(n):
        s = 0.0
        for m in range(k + 1):
            s += a[m] * b[k - m]
        out[k] = s
    return out_arr


def series_recip(double[::1] a):
    cdef Py_ssize_t n = a.shape[0]
    out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t k, m
    cdef double s
    out[0] = 1.0 / a[0]
    for k in range(1, n):
        s = 0.0
        for m in range(1, k + 1):
            s += a[m] * out[k - m]
        out[k] = -s / a[0]
    return out_arr


def series_exp(double[::1] a):
    cdef Py_ssize_t n = a.shape[0]
    out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t k, m
    cdef double s
    out[0] = c_exp(a[0])
    for k in range(1, n):
        s = 0.0
        for m in range(1, k + 1):
            s += m * a[m] * out[k - m]
        out[k] = s / k
    return out_arr


def series_pow(double[::1] a, double p):
    cdef Py_ssize_t n = a.shape[0]
    out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t k, m
    cdef double s
    out[0] = c_pow(a[0], p)
    for k in range(1, n):
        s = 0.0
        for m in range(1, k + 1):
            s += ((p + 1.0) * m - k) * a[m] * out[k - m]
        out[k] = s / (k * a[0])
    return out_arr


def series_log(double[::1] a):
    cdef Py_ssize_t n = a.shape[0]
    out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t k, m
    cdef double s
    out[0] = c_log(a[0])
    for k in range(1, n):
        s = 0.0
        for m in range(1, k):
            s += (k - m) * a[m] * out[k - m]
        out[k] = (k * a[k] - s) / (k * a[0])
    return out_arr


cdef void _row_into(double[:, ::1] C, double[::1] u, Py_ssize_t m) noexcept:
    cdef Py_ssize_t k, j
    cdef double s
    C[m, 1] = u[m]
    for k in range(2, m + 1):
        s = 0.0
        for j in range(0, m - k + 1):
            s += (j + 1) * u[j + 1] * C[m - 1 - j, k - 1]
        C[m, k] = s / m


def duan_rows(double[::1] u, int n):
    C_arr = np.zeros((n + 1, n + 1))
    cdef double[:, ::1] C = C_arr
    cdef Py_ssize_t m
    for m in range(1, n + 1):
        _row_into(C, u, m)
    return C_arr


def duan_polys(double[::1] u, double[::1] derivs):
    cdef Py_ssize_t n = u.shape[0] - 1
    C_arr = duan_rows(u, n)
    cdef double[:, ::1] C = C_arr
    A_arr = np.empty(n + 1)
    cdef double[::1] A = A_arr
    cdef Py_ssize_t m, k
    cdef double s
    A[0] = derivs[0]
    for m in range(1, n + 1):
        s = 0.0
        for k in range(1, m + 1):
            s += C[m, k] * derivs[k]
        A[m] = s
    return A_arr


def build_coeffs(double beta, double[::1] derivs, double alpha, int order):
    U_arr = np.zeros(order + 1)
    cdef double[::1] U = U_arr
    C_arr = np.zeros((order + 1, order + 1))
    cdef double[:, ::1] C = C_arr
    cdef Py_ssize_t k, m, kk
    cdef double A
    U[0] = beta
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
    return U_arr
