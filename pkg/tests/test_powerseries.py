"""Arithmetic identities and domain policy of TruncatedSeries."""

import math

import numpy as np
import pytest

from sbvp import (
    BlowupError,
    DomainError,
    RangeError,
    SingularityError,
    TruncatedSeries,
    UsageError,
)


def rand_series(rng, order, c0=None):
    c = rng.uniform(-0.5, 0.5, order + 1)
    if c0 is not None:
        c[0] = c0
    return TruncatedSeries(c)


def test_mul_known_square():
    a = TruncatedSeries([1.0, 1.0, 0.0])
    assert (a * a).coeffs.tolist() == [1.0, 2.0, 1.0]


def test_exp_known_coefficients():
    e = TruncatedSeries([0.0, 1.0, 0.0, 0.0, 0.0]).exp()
    assert e.coeffs.tolist() == [1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0]


def test_pow_square_matches_hand_expansion():
    b = TruncatedSeries([1.0, 1.0, 0.0, 0.0]).pow(2.0)
    assert b.coeffs.tolist() == [1.0, 2.0, 1.0, 0.0]


def test_recip_round_trip():
    a = TruncatedSeries([1.0, 0.3, -0.2])
    prod = a * a.recip()
    assert abs(prod[0] - 1.0) <= 1e-12
    assert abs(prod[1]) <= 1e-12 and abs(prod[2]) <= 1e-12


def test_ring_axioms_random():
    rng = np.random.default_rng(11)
    for _ in range(60):
        n = int(rng.integers(1, 10))
        a, b, c = (rand_series(rng, n) for _ in range(3))
        lhs = ((a * b) * c).coeffs
        rhs = (a * (b * c)).coeffs
        assert np.allclose(lhs, rhs, rtol=0, atol=1e-10)
        assert np.allclose((a * b).coeffs, (b * a).coeffs, rtol=0, atol=1e-12)
        lhs = (a * (b + c)).coeffs
        rhs = (a * b + a * c).coeffs
        assert np.allclose(lhs, rhs, rtol=0, atol=1e-12)
        assert np.array_equal((a - a).coeffs, np.zeros(n + 1))


def test_recip_round_trip_random():
    rng = np.random.default_rng(12)
    ident = lambda n: [1.0] + [0.0] * n
    for _ in range(60):
        n = int(rng.integers(1, 12))
        a = rand_series(rng, n, c0=rng.uniform(0.5, 2.0) * rng.choice([-1, 1]))
        prod = (a * a.recip()).coeffs
        assert np.allclose(prod, ident(n), rtol=0, atol=1e-10)
        assert np.allclose(a.recip().recip().coeffs, a.coeffs, rtol=0, atol=1e-10)


def test_exp_log_round_trip_random():
    rng = np.random.default_rng(13)
    for _ in range(60):
        n = int(rng.integers(1, 12))
        a = rand_series(rng, n, c0=rng.uniform(-0.5, 0.5))
        back = a.exp().log()
        assert np.allclose(back.coeffs, a.coeffs, rtol=0, atol=1e-10)
        b = rand_series(rng, n, c0=rng.uniform(0.5, 2.0))
        assert np.allclose(b.log().exp().coeffs, b.coeffs, rtol=0, atol=1e-10)


def test_pow_exponent_laws_random():
    rng = np.random.default_rng(14)
    for _ in range(60):
        n = int(rng.integers(1, 12))
        a = rand_series(rng, n, c0=rng.uniform(0.5, 2.0))
        p, q = rng.uniform(-2.0, 2.0, 2)
        lhs = a.pow(p).pow(q).coeffs
        rhs = a.pow(p * q).coeffs
        assert np.allclose(lhs, rhs, rtol=1e-10, atol=1e-10)
        half = a.pow(0.5)
        assert np.allclose((half * half).coeffs, a.coeffs, rtol=0, atol=1e-10)
        assert np.allclose(a.pow(-1.0).coeffs, a.recip().coeffs, rtol=0, atol=1e-10)
        assert np.allclose((a * a).coeffs, a.pow(2.0).coeffs, rtol=0, atol=1e-10)


def test_log_matches_exp_inverse_identity():
    # log via its own recurrence must agree with solving exp(b) = a.
    rng = np.random.default_rng(15)
    for _ in range(30):
        n = int(rng.integers(1, 12))
        a = rand_series(rng, n, c0=rng.uniform(0.5, 2.0))
        assert np.allclose(a.log().exp().coeffs, a.coeffs, rtol=0, atol=1e-10)


@pytest.mark.parametrize(
    "fn,scalar,x0",
    [
        (lambda s: s.recip(), lambda x: 1.0 / x, 0.7),
        (lambda s: s.exp(), math.exp, 0.3),
        (lambda s: s.pow(1.7), lambda x: x ** 1.7, 1.3),
        (lambda s: s.log(), math.log, 1.9),
    ],
)
def test_linear_seed_matches_scalar_function(fn, scalar, x0):
    # Lift of x0 + t: coefficient 0 is f(x0), coefficient 1 is f'(x0);
    # check the derivative against a central difference of the scalar f.
    s = fn(TruncatedSeries([x0, 1.0, 0.0, 0.0]))
    assert abs(s[0] - scalar(x0)) <= 1e-14 * max(1.0, abs(scalar(x0)))
    h = 1e-7
    fd = (scalar(x0 + h) - scalar(x0 - h)) / (2.0 * h)
    assert abs(s[1] - fd) <= 1e-6


def test_prefix_stability():
    # Coefficients of recip/exp/log/pow are independent of the truncation
    # order: computing at a shorter order gives the exact same prefix.
    rng = np.random.default_rng(16)
    for _ in range(30):
        n = int(rng.integers(3, 14))
        m = int(rng.integers(1, n))
        a = rand_series(rng, n, c0=rng.uniform(0.5, 2.0))
        for op in (
            lambda s: s.recip(),
            lambda s: s.exp(),
            lambda s: s.log(),
            lambda s: s.pow(0.37),
        ):
            full = op(a).truncated(m)
            short = op(a.truncated(m))
            assert np.array_equal(full.coeffs, short.coeffs)


def test_deriv_product_rule():
    rng = np.random.default_rng(17)
    for _ in range(40):
        n = int(rng.integers(2, 12))
        a, b = rand_series(rng, n), rand_series(rng, n)
        lhs = (a * b).deriv().coeffs
        rhs = (
            a.deriv() * b.truncated(n - 1) + a.truncated(n - 1) * b.deriv()
        ).coeffs
        assert np.allclose(lhs, rhs, rtol=0, atol=1e-12)


def test_deriv_known():
    d = TruncatedSeries([5.0, 1.0, 2.0, 3.0]).deriv()
    assert d.coeffs.tolist() == [1.0, 4.0, 9.0]
    assert d.order == 2


def test_eval_horner():
    s = TruncatedSeries([1.0, 2.0, 3.0])
    assert s(0.0) == 1.0
    assert s(0.5) == 1.0 + 1.0 + 0.75
    assert s(1.0) == 6.0


def test_scalar_ops():
    a = TruncatedSeries([1.0, 2.0])
    assert (a + 1.0).coeffs.tolist() == [2.0, 2.0]
    assert (1.0 + a).coeffs.tolist() == [2.0, 2.0]
    assert (a - 0.5).coeffs.tolist() == [0.5, 2.0]
    assert (1.0 - a).coeffs.tolist() == [0.0, -2.0]
    assert (2.0 * a).coeffs.tolist() == [2.0, 4.0]
    assert (a * 2.0).coeffs.tolist() == [2.0, 4.0]
    assert (a / 2.0).coeffs.tolist() == [0.5, 1.0]
    assert (-a).coeffs.tolist() == [-1.0, -2.0]


def test_equal_order_discipline():
    a = TruncatedSeries([1.0, 2.0])
    b = TruncatedSeries([1.0, 2.0, 3.0])
    for op in (lambda: a + b, lambda: a - b, lambda: a * b):
        with pytest.raises(UsageError):
            op()
    # aligning orders explicitly makes the same operation legal
    assert (a * b.truncated(1)).order == 1


def test_truncated_bounds():
    a = TruncatedSeries([1.0, 2.0, 3.0])
    assert a.truncated(1).coeffs.tolist() == [1.0, 2.0]
    with pytest.raises(UsageError):
        a.truncated(3)
    with pytest.raises(UsageError):
        a.truncated(-1)


def test_domain_errors():
    with pytest.raises(SingularityError):
        TruncatedSeries([0.0, 1.0]).recip()
    with pytest.raises(SingularityError):
        TruncatedSeries([1e-301, 1.0]).recip()
    with pytest.raises(DomainError):
        TruncatedSeries([0.0, 1.0]).pow(0.5)
    with pytest.raises(DomainError):
        TruncatedSeries([-1.0, 1.0]).pow(0.5)
    with pytest.raises(DomainError):
        TruncatedSeries([0.0, 1.0]).log()
    with pytest.raises(DomainError):
        TruncatedSeries([-2.0, 1.0]).log()
    with pytest.raises(RangeError):
        TruncatedSeries([1000.0, 1.0]).exp()
    with pytest.raises(RangeError):
        TruncatedSeries([1e-300, 0.0]).pow(-2.0)


def test_construction_policy():
    with pytest.raises(BlowupError):
        TruncatedSeries([1.0, math.inf])
    with pytest.raises(BlowupError):
        TruncatedSeries([math.nan])
    with pytest.raises(UsageError):
        TruncatedSeries([])
    with pytest.raises(UsageError):
        TruncatedSeries([[1.0, 2.0]])


def test_misuse_errors():
    with pytest.raises(UsageError):
        TruncatedSeries([1.0]).deriv()
    with pytest.raises(UsageError):
        TruncatedSeries([1.0, 2.0])(math.inf)


def test_immutability():
    a = TruncatedSeries([1.0, 2.0])
    a.coeffs[0] = 99.0
    assert a[0] == 1.0
    src = np.array([3.0, 4.0])
    b = TruncatedSeries(src)
    src[0] = -1.0
    assert b[0] == 3.0


def test_equality():
    assert TruncatedSeries([1.0, 2.0]) == TruncatedSeries([1.0, 2.0])
    assert TruncatedSeries([1.0, 2.0]) != TruncatedSeries([1.0, 2.0, 0.0])
    assert TruncatedSeries([1.0, 2.0]) != TruncatedSeries([1.0, 2.5])
