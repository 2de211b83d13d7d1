from __future__ import annotations

import math

import pytest
from hypothesis import given, settings, strategies as st

from plucking import qcalc
from plucking.errors import BudgetExceeded, NotDivisible

polys = st.lists(st.integers(0, 20), min_size=1, max_size=8).map(qcalc.normalize)
monic = st.lists(st.integers(0, 20), max_size=6).map(lambda c: tuple(c) + (1,))


def test_normalize_and_degree():
    assert qcalc.normalize([1, 2, 0, 0]) == (1, 2)
    assert qcalc.normalize([0, 0]) == qcalc.ZERO
    assert qcalc.degree((1, 2, 3)) == 2
    assert qcalc.degree(qcalc.ZERO) == -1 or qcalc.is_zero(qcalc.ZERO)


def test_q_int_and_factorial():
    assert qcalc.q_int(1) == (1,)
    assert qcalc.q_int(4) == (1, 1, 1, 1)
    assert qcalc.q_factorial(3) == (1, 2, 2, 1)
    assert qcalc.q_factorial(0) == (1,)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(0, 6) for n in range(0, 7)])
def test_gauss_matches_lattice_count(m, n):
    # rank generating function of monotone sequences 0 <= a1 <= ... <= am <= n
    assert qcalc.gauss(m, n) == qcalc.lattice_gf(m, n)


@pytest.mark.parametrize("m,n", [(3, 5), (6, 6), (4, 9), (7, 2)])
def test_gauss_is_factorial_ratio(m, n):
    num = qcalc.q_factorial(m + n)
    den = qcalc.poly_mul(qcalc.q_factorial(m), qcalc.q_factorial(n))
    assert qcalc.poly_divexact(num, den) == qcalc.gauss(m, n)
    assert qcalc.evaluate(qcalc.gauss(m, n)) == math.comb(m + n, m)
    assert qcalc.gauss(m, n) == qcalc.gauss(n, m)


def test_q_multinomial():
    assert qcalc.q_multinomial([2, 3]) == qcalc.gauss(2, 3)
    p = qcalc.q_multinomial([1, 2, 3])
    assert qcalc.evaluate(p) == math.factorial(6) // (1 * 2 * 6)
    assert qcalc.poly_mul(p, qcalc.poly_prod(qcalc.q_factorial(k) for k in (1, 2, 3))) == qcalc.q_factorial(6)


def test_divexact_rejects_remainder():
    with pytest.raises(NotDivisible):
        qcalc.poly_divexact((1, 0, 1), (1, 1))
    with pytest.raises(ZeroDivisionError):
        qcalc.poly_divexact((1, 1), qcalc.ZERO)


def test_large_coefficients_stay_exact():
    p = qcalc.gauss(40, 40)
    assert qcalc.evaluate(p) == math.comb(80, 40)
    assert max(p) > 2**64


def test_lattice_budget():
    with pytest.raises(BudgetExceeded):
        qcalc.lattice_gf(10, 10, budget=1000)


def test_csv_round_trip():
    p = qcalc.gauss(4, 4)
    assert qcalc.from_csv(qcalc.to_csv(p)) == p
    with pytest.raises(ValueError):
        qcalc.from_csv("1,x,2")


@given(polys, polys)
def test_mul_commutes(a, b):
    assert qcalc.poly_mul(a, b) == qcalc.poly_mul(b, a)


@given(polys, monic)
def test_divexact_inverts_mul(a, b):
    assert qcalc.poly_divexact(qcalc.poly_mul(a, b), b) == a


@settings(max_examples=50)
@given(st.integers(0, 12), st.integers(0, 12))
def test_gauss_pascal_both_ways(m, n):
    if m == 0 or n == 0:
        assert qcalc.gauss(m, n) == qcalc.ONE
        return
    # C(m,n) = q^m C(m,n-1) + C(m-1,n), the mirror of the recurrence used internally
    rhs = qcalc.poly_add(qcalc.poly_shift(qcalc.gauss(m, n - 1), m), qcalc.gauss(m - 1, n))
    assert qcalc.gauss(m, n) == rhs
