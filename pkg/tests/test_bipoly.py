from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tuttepoly.bipoly import (
    BiPoly,
    PolyMatrix,
    UniPoly,
    X,
    Y,
    exact_div,
    falling_factorial,
    interpolate,
    mat_mul,
    mat_pow,
    subst_rational,
    trace,
)
from tuttepoly.errors import DimensionMismatch, NonExactDivision
from tuttepoly.render import json_terms, to_latex, to_text

coeffs = st.integers(min_value=-9, max_value=9)
exps = st.integers(min_value=0, max_value=5)
polys = st.dictionaries(st.tuples(exps, exps), coeffs, max_size=8).map(BiPoly)
points = st.tuples(
    st.integers(min_value=-5, max_value=5), st.integers(min_value=-5, max_value=5)
)


def test_zero_terms_dropped():
    p = BiPoly({(1, 0): 0, (0, 0): 3})
    assert p.terms() == {(0, 0): 3}
    assert BiPoly({(2, 1): 5}) - BiPoly({(2, 1): 5}) == BiPoly.zero()


def test_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        BiPoly({(-1, 0): 1})
    with pytest.raises(TypeError):
        BiPoly({(0, 0): 1.5})


def test_basic_algebra():
    p = (X + 1) * (Y + 1)
    assert p == BiPoly({(1, 1): 1, (1, 0): 1, (0, 1): 1, (0, 0): 1})
    assert (X + Y) ** 2 == X**2 + 2 * X * Y + Y**2
    assert p.scale(0) == BiPoly.zero()
    assert (X**0) == BiPoly.one()


@given(polys, polys, polys)
@settings(max_examples=60)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p + BiPoly.zero() == p
    assert p * BiPoly.one() == p


@given(polys, points)
@settings(max_examples=60)
def test_eval_is_ring_hom(p, pt):
    x, y = pt
    q = p * p + p
    assert q.eval(x, y) == p.eval(x, y) ** 2 + p.eval(x, y)


def test_eval_zero_power_zero():
    # 0**0 := 1, so the constant term survives evaluation at the origin
    p = BiPoly({(0, 0): 7, (1, 0): 3, (0, 2): 4})
    assert p.eval(0, 0) == 7
    assert p.eval(Fraction(1, 2), 0) == Fraction(17, 2)


@given(polys, polys)
@settings(max_examples=60)
def test_exact_div_roundtrip(p, q):
    if q.is_zero():
        with pytest.raises(NonExactDivision):
            exact_div(p, q)
    else:
        assert exact_div(p * q, q) == p


def test_exact_div_rejects_remainder():
    with pytest.raises(NonExactDivision):
        exact_div(X + 1, Y)
    with pytest.raises(NonExactDivision):
        exact_div(BiPoly.const(3), BiPoly.const(2))


def test_subst_rational_matches_fraction_eval():
    p = X**2 * Y + 3 * X + 2
    # x -> (x+1)/2, y -> y/(y+1), cleared by 4*(y+1)
    got = subst_rational(p, X + 1, BiPoly.const(2), Y, Y + 1, BiPoly.const(4) * (Y + 1))
    for xv in (0, 1, 2, -3):
        for yv in (0, 1, 5):
            want = p.eval(Fraction(xv + 1, 2), Fraction(yv, yv + 1)) * 4 * (yv + 1)
            assert got.eval(xv, yv) == want


def test_subst_rational_raises_when_not_polynomial():
    with pytest.raises(NonExactDivision):
        subst_rational(X, BiPoly.one(), Y + 1, Y, BiPoly.one())


def test_subst_identity():
    p = (X + 2 * Y) ** 3
    assert subst_rational(p, X, BiPoly.one(), Y, BiPoly.one()) == p


def test_text_rendering_order_and_omissions():
    p = BiPoly(
        {(3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4, (0, 1): 2, (0, 2): 3, (0, 3): 1}
    )
    assert to_text(p) == "x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3"
    assert to_text(BiPoly.zero()) == "0"
    assert to_text(BiPoly.const(-5) + X) == "x - 5"
    assert to_text(BiPoly.one()) == "1"


def test_json_terms_graded_order():
    p = X**2 + X * Y + Y**2 + 3 * X + 1
    assert json_terms(p) == [
        [0, 0, "1"],
        [1, 0, "3"],
        [0, 2, "1"],
        [1, 1, "1"],
        [2, 0, "1"],
    ]


def test_latex_rendering():
    p = X**2 * Y + 2 * X - Y**3
    assert to_latex(p) == "x^{2}y + 2x - y^{3}"


def test_unipoly_algebra_and_eval():
    f = UniPoly((1, 2, 1))  # (v+1)^2
    g = UniPoly((0, 1)) + UniPoly.one()
    assert g * g == f
    assert f.eval(3) == 16
    assert f.degree() == 2
    assert UniPoly.zero().degree() == -1


def test_unipoly_int_coeffs_guard():
    h = UniPoly((Fraction(1, 2),))
    with pytest.raises(NonExactDivision):
        h.int_coeffs()


def test_interpolation_recovers_polynomial():
    f = UniPoly((3, -2, 0, 1))
    xs = [0, 1, 2, 3]
    ys = [f.eval(v) for v in xs]
    assert interpolate(xs, ys) == f


def test_falling_factorial():
    f = falling_factorial(3)
    assert [f.eval(v) for v in range(5)] == [0, 0, 0, 6, 24]
    assert falling_factorial(0) == UniPoly.one()


def test_matrix_mul_pow_trace():
    a = PolyMatrix([[X, 1], [0, Y]])
    sq = mat_mul(a, a)
    assert sq.entry(0, 0) == X**2
    assert sq.entry(0, 1) == X + Y
    assert mat_pow(a, 0) == PolyMatrix.identity(2)
    assert mat_pow(a, 3).entry(0, 0) == X**3
    assert trace(a) == X + Y


def test_matrix_dimension_errors():
    a = PolyMatrix([[X, 1]])
    with pytest.raises(DimensionMismatch):
        mat_mul(a, a)
    with pytest.raises(DimensionMismatch):
        a.trace()
    with pytest.raises(DimensionMismatch):
        PolyMatrix([[X], [X, Y]])


@given(st.integers(min_value=0, max_value=6))
def test_mat_pow_matches_repeated_mul(k):
    a = PolyMatrix([[X + 1, Y], [1, X * Y]])
    expect = PolyMatrix.identity(2)
    for _ in range(k):
        expect = mat_mul(expect, a)
    assert mat_pow(a, k) == expect
