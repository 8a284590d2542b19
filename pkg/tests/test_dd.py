"""Exactness of the error-free transforms behind the compensated series.

two_sum and two_prod promise a + b = s + e and a * b = p + e exactly in
real arithmetic; verified here against Fraction (arbitrary precision).
"""

from fractions import Fraction

import numpy as np

from expwell._dd import dd_add, dd_div, dd_mul, two_prod, two_sum


def _rand_doubles(rng, n):
    return (rng.normal(size=n) * 10.0 ** rng.integers(-8, 9, size=n)).tolist()


def test_two_sum_is_exact():
    rng = np.random.default_rng(41)
    for a, b in zip(_rand_doubles(rng, 300), _rand_doubles(rng, 300)):
        s, e = two_sum(a, b)
        assert Fraction(a) + Fraction(b) == Fraction(s) + Fraction(e)


def test_two_prod_is_exact():
    rng = np.random.default_rng(42)
    for a, b in zip(_rand_doubles(rng, 300), _rand_doubles(rng, 300)):
        p, e = two_prod(a, b)
        assert Fraction(a) * Fraction(b) == Fraction(p) + Fraction(e)


def test_dd_mul_relative_error():
    rng = np.random.default_rng(43)
    for _ in range(200):
        xh, yh = _rand_doubles(rng, 2)
        zh, zl = dd_mul(xh, 0.0, yh, 0.0)
        exact = Fraction(xh) * Fraction(yh)
        err = abs((Fraction(zh) + Fraction(zl)) - exact)
        assert err <= abs(exact) * Fraction(1, 2**100)


def test_dd_div_relative_error():
    rng = np.random.default_rng(44)
    for _ in range(200):
        xh, yh = _rand_doubles(rng, 2)
        if yh == 0.0:
            continue
        zh, zl = dd_div(xh, 0.0, yh, 0.0)
        exact = Fraction(xh) / Fraction(yh)
        err = abs((Fraction(zh) + Fraction(zl)) - exact)
        assert err <= abs(exact) * Fraction(1, 2**98)


def test_dd_add_keeps_cancelled_bits():
    # (1 + 2^-80) - 1 in double-double keeps what plain doubles lose
    one = 1.0
    tiny = 2.0 ** -80
    sh, sl = dd_add(one, tiny, -one, 0.0)
    assert sh + sl == tiny


def test_helpers_are_polymorphic_over_arrays():
    rng = np.random.default_rng(45)
    a = rng.normal(size=64)
    b = rng.normal(size=64)
    s_vec, e_vec = two_sum(a, b)
    p_vec, q_vec = two_prod(a, b)
    for i in range(64):
        s, e = two_sum(float(a[i]), float(b[i]))
        p, q = two_prod(float(a[i]), float(b[i]))
        assert (s, e) == (s_vec[i], e_vec[i])
        assert (p, q) == (p_vec[i], q_vec[i])
