"""Truncated series and the tau/rho grading conversions."""

import random
from fractions import Fraction

import pytest

from quadslice.errors import NonInvertibleError
from quadslice.exactalg import bipoly, tb, tw
from quadslice.ratfunc import QQ, RatFunc
from quadslice.series import RHO_FIELD, Series, bipoly_to_tau, graded_div, tau_to_bipoly

from test_exactalg import random_bipoly


def frac_series(coeffs, cap):
    return Series("z", cap, [Fraction(c) for c in coeffs], QQ)


def test_divide_examples():
    tau = Series.gen("tau", 5, QQ)
    a = tau ** 2 + tau ** 3
    q = a.divide(tau ** 2)
    assert q.coeffs[:2] == (Fraction(1), Fraction(1)) and q.cap == 3
    b = frac_series([1, 2, 3], 4)
    assert b.divide(frac_series([1], 4)) == b
    rho = RatFunc.gen("rho")
    s = Series("tau", 4, [RHO_FIELD.zero, rho, rho * rho], RHO_FIELD)
    q = s.divide(Series("tau", 4, [RHO_FIELD.zero, rho], RHO_FIELD))
    assert q.coeffs[0] == RatFunc.one("rho") and q.coeffs[1] == rho


def test_divide_valuation_errors():
    tau = Series.gen("tau", 4, QQ)
    with pytest.raises(NonInvertibleError):
        tau.divide(tau ** 2)  # quotient would not be a series
    with pytest.raises(NonInvertibleError):
        tau.divide(tau.ring_zero())


def test_inverse_needs_unit():
    s = frac_series([0, 1], 3)
    with pytest.raises(NonInvertibleError):
        s.inv()
    g = frac_series([1, -1], 5).inv()
    assert g.coeffs == tuple(Fraction(1) for _ in range(6))


def test_shift_checks_divisibility():
    s = frac_series([0, 0, 3, 1], 5)
    assert s.shift(-2).coeffs[:2] == (Fraction(3), Fraction(1))
    with pytest.raises(NonInvertibleError):
        frac_series([0, 1], 3).shift(-2)


def test_grading_examples():
    N = 3
    rho = RatFunc.gen("rho")
    t = bipoly_to_tau(tb(N) + tw(N))
    assert t.coeffs[1] == 1 + rho
    t2 = bipoly_to_tau(tb(N) * tw(N))
    assert t2.coeffs[2] == rho
    p = bipoly({(0, 0): 1, (2, 0): 1, (0, 2): 1}, 4)
    assert tau_to_bipoly(bipoly_to_tau(p)) == p


def test_grading_round_trip_randomized():
    rng = random.Random(9)
    for _ in range(40):
        p = random_bipoly(rng, 5)
        assert tau_to_bipoly(bipoly_to_tau(p)) == p


def test_grading_rejects_bad_series():
    rho = RatFunc.gen("rho")
    bad = Series("tau", 2, [RHO_FIELD.zero, rho * rho], RHO_FIELD)  # rho-degree 2 > 1
    with pytest.raises(NonInvertibleError):
        tau_to_bipoly(bad)
    non_poly = Series("tau", 2, [RHO_FIELD.one, 1 / (1 + rho)], RHO_FIELD)
    with pytest.raises(NonInvertibleError):
        tau_to_bipoly(non_poly)


def test_graded_div_exactness():
    N = 5
    num = (tb(N) + tw(N)) * tb(N) * tb(N)
    assert graded_div(num, tb(N) ** 2) == (tb(3) + tw(3))
    with pytest.raises(NonInvertibleError):
        graded_div(tw(N), tb(N))  # tw/tb is not a polynomial


def test_series_equality_is_structural():
    a = frac_series([1, 2], 3)
    b = frac_series([1, 2], 4)
    assert a != b  # caps differ
    assert a.agrees_with(b)
