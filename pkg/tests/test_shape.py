from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from plucking import qcalc, shape
from plucking.errors import DegreeMismatch, NotSymmetric, NotUnimodal


def test_symmetric_and_unimodal():
    assert shape.is_symmetric((1, 2, 1))
    assert not shape.is_symmetric((1, 2, 2))
    assert shape.is_unimodal((1, 3, 3, 2))
    assert not shape.is_unimodal((1, 3, 2, 3, 1))


def test_rows_of_small_polynomials():
    assert shape.row_decompose((1, 2, 3, 2, 1)).rows == (1, 1, 1)
    assert shape.row_decompose(qcalc.gauss(2, 2)).rows == (1, 0, 1)
    prof = shape.row_decompose(qcalc.gauss(5, 7))
    assert prof.reconstruct() == qcalc.gauss(5, 7)


def test_row_decompose_errors():
    with pytest.raises(NotSymmetric):
        shape.row_decompose((1, 2, 3))
    with pytest.raises(NotUnimodal):
        shape.row_decompose((2, 1, 2))
    with pytest.raises(NotUnimodal):
        shape.classify((1, 0, 1))


def test_dominance():
    q5 = shape.row_decompose(qcalc.q_int(5))  # rows (1,0,0)
    g22 = shape.row_decompose(qcalc.gauss(2, 2))  # rows (1,0,1)
    full = shape.row_decompose((1, 2, 3, 2, 1))
    assert shape.dominates(full, g22)
    assert shape.dominates(g22, q5)
    assert not shape.dominates(q5, g22)
    assert shape.shape_equivalent(full, shape.row_decompose((1, 3, 4, 3, 1)))
    with pytest.raises(DegreeMismatch):
        shape.dominates(q5, shape.row_decompose(qcalc.q_int(3)))


def test_classify_basic_cases():
    sc = shape.classify((1,))
    assert sc.N == 0 and sc.top_len == 0 and sc.strictly_unimodal
    sc = shape.classify(qcalc.q_int(4))
    assert sc.top_len == 3 and sc.trapezoidal and not sc.strictly_unimodal
    assert sc.top_type is None
    sc = shape.classify(qcalc.gauss(2, 2))
    assert sc.strict_below is False and sc.almost_strict_below
    assert shape.top_type(qcalc.gauss(2, 2)) == (2, 1, 2)


def test_run_lengths():
    assert shape.run_lengths((1, 1, 2, 3, 3, 3)) == ((1, 2), (2, 1), (3, 3))


@pytest.mark.parametrize("pair", sorted(shape.ALMOST_STRICT_EXCEPTIONS))
def test_listed_exceptions_are_not_almost_strict(pair):
    assert not shape.classify(qcalc.gauss(*pair)).almost_strictly_unimodal


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 8), st.integers(1, 6), st.integers(1, 8))
def test_row_support_rule(m1, n1, m2, n2):
    a = shape.row_decompose(qcalc.gauss(m1, n1))
    b = shape.row_decompose(qcalc.gauss(m2, n2))
    prod = shape.row_decompose(qcalc.poly_mul(qcalc.gauss(m1, n1), qcalc.gauss(m2, n2)))
    assert shape.product_row_support(a, b) == prod.support


def test_normalize_factors():
    # orientation fixed, empty factors dropped
    assert sorted(shape.normalize_factors([(5, 2), (0, 3), (1, 1)])) == [(1, 1), (2, 5)]


@pytest.mark.parametrize(
    "factors,top",
    [
        ([(1, 2), (6, 6)], 2),
        ([(2, 2), (2, 3)], 2),
        ([(2, 4), (2, 2)], 0),
        ([(1, 3), (1, 3)], 0),
        ([(1, 9), (1, 2)], 7),
    ],
)
def test_prediction_examples(factors, top):
    pred = shape.predict_product_shape(factors)
    actual = shape.classify(qcalc.poly_prod(qcalc.gauss(m, n) for m, n in factors))
    assert pred.covered
    assert pred.top_len == top == actual.top_len
    assert pred.matches(actual)


factor = st.tuples(st.integers(1, 5), st.integers(1, 6))


@settings(max_examples=150, deadline=None)
@given(st.lists(factor, min_size=2, max_size=4))
def test_covered_predictions_hold(factors):
    p = qcalc.poly_prod(qcalc.gauss(m, n) for m, n in factors)
    sc = shape.classify(p)
    assert sc.trapezoidal
    assert shape.predict_product_shape(factors).matches(sc)
