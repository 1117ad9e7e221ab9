from math import comb

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from projbundles.field import QQ, Field
from projbundles.poly import (
    DegreeMismatch,
    HomogPoly,
    PolySum,
    PolySyntaxError,
    UnknownVariable,
    homogeneity_check,
    monomial_basis,
    parse_form,
    parse_poly,
)
from strategies import elements, fields, vectors

F5 = Field(5)


def form(text, field=QQ, nvars=2):
    return parse_form(text, field, nvars)


def test_eval_examples():
    assert form("x0^2 + x1^2")((QQ(1), QQ(2))) == 5
    assert form("x0^2*x1")((QQ(2), QQ(3))) == 12


@given(st.integers(min_value=1, max_value=4))
def test_eval_at_zero(d):
    P = HomogPoly.monomial(QQ, (d, 0)) + HomogPoly.monomial(QQ, (0, d), 3)
    assert P((QQ(0), QQ(0))) == 0


def test_homogeneity_examples():
    assert homogeneity_check(form("x0*x1"), (QQ(1), QQ(1)), 3)
    assert form("x0*x1")((QQ(3), QQ(3))) == 9
    P = form("x0^3", F5)
    assert homogeneity_check(P, (F5(2), F5(0)), 2)
    assert P((F5(4), F5(0))) == 4


@st.composite
def form_vec_lam(draw):
    F = draw(fields)
    nvars = draw(st.integers(min_value=1, max_value=4))
    d = draw(st.integers(min_value=0, max_value=4))
    basis = monomial_basis(nvars, d)
    coeffs = draw(st.lists(elements(F), min_size=len(basis), max_size=len(basis)))
    P = HomogPoly.from_coefficients(F, nvars, d, coeffs)
    v = draw(vectors(F, nvars, nonzero=False))
    lam = draw(elements(F, nonzero=True))
    return P, v, lam


@settings(max_examples=200)
@given(form_vec_lam())
def test_homogeneity_random(t):
    P, v, lam = t
    assert homogeneity_check(P, v, lam)
    assert homogeneity_check(P, v, 1)


def test_mul_examples():
    x0 = HomogPoly.variable(QQ, 2, 0)
    x1 = HomogPoly.variable(QQ, 2, 1)
    assert x0 * x1 == form("x0*x1")
    one = HomogPoly.constant(QQ, 2)
    P = form("3*x0^2 - x0*x1")
    assert P * one == P
    assert (x0 + x1) * (x0 - x1) == form("x0^2 - x1^2")


@given(form_vec_lam(), st.data())
def test_eval_respects_mul_and_add(t, data):
    P, v, _ = t
    basis = monomial_basis(P.nvars, P.degree)
    Q = HomogPoly.from_coefficients(
        P.field, P.nvars, P.degree, data.draw(st.lists(elements(P.field), min_size=len(basis), max_size=len(basis)))
    )
    assert (P * Q)(v) == P(v) * Q(v)
    assert (P + Q)(v) == P(v) + Q(v)
    assert (P * Q).degree == 2 * P.degree


def test_mul_against_sympy():
    x0, x1, x2 = sympy.symbols("x0 x1 x2")
    P = parse_form("1/2*x0^2*x1 - x2^3", QQ, 3)
    Q = parse_form("x0 + 2*x1 - 3/4*x2", QQ, 3)
    expanded = sympy.Poly(sympy.expand((sympy.Rational(1, 2) * x0**2 * x1 - x2**3) * (x0 + 2 * x1 - sympy.Rational(3, 4) * x2)), x0, x1, x2)
    ours = P * Q
    for monom, coeff in expanded.terms():
        assert ours.coefficient(monom).value == coeff
    assert len(ours.terms) == len(expanded.terms())


def test_degree_mismatch_on_add():
    with pytest.raises(DegreeMismatch):
        form("x0") + form("x0^2")


def test_monomial_basis_examples():
    assert monomial_basis(2, 3) == ((3, 0), (2, 1), (1, 2), (0, 3))
    assert monomial_basis(4, 0) == ((0, 0, 0, 0),)
    assert len(monomial_basis(3, 2)) == 6


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("d", range(7))
def test_monomial_basis_count(n, d):
    basis = monomial_basis(n + 1, d)
    assert len(basis) == comb(n + d, n)
    assert len(set(basis)) == len(basis)
    assert all(sum(m) == d for m in basis)
    # brute-force oracle: all exponent tuples with the right sum
    brute = {m for m in sympy.utilities.iterables.iproduct(*[range(d + 1)] * (n + 1)) if sum(m) == d}
    assert set(basis) == brute


def test_parse_examples():
    P = parse_poly("2*x0*x1 - x2^2", QQ)
    assert P.is_homogeneous()
    assert P.degrees == (2,)
    assert len(P.as_homogeneous().terms) == 2
    S = parse_poly("x0^2 + x1", QQ)
    assert S.degrees == (1, 2)
    with pytest.raises(PolySyntaxError) as err:
        parse_poly("x0 + + x1", QQ)
    assert err.value.pos == 5


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        parse_poly("x0 + x3", QQ, 2)


@pytest.mark.parametrize("text", ["x0 *", "2/", "x0^", "(x0)", "x", "3 x0"])
def test_syntax_errors(text):
    with pytest.raises(PolySyntaxError):
        parse_poly(text, QQ)


def test_parse_fraction_over_prime_field():
    P = parse_form("1/2*x0", F5, 1)
    assert P.coefficient((1,)) == 3


@st.composite
def polysums(draw):
    F = draw(fields)
    nvars = draw(st.integers(min_value=1, max_value=3))
    comps = []
    for d in draw(st.sets(st.integers(min_value=0, max_value=3), max_size=3)):
        basis = monomial_basis(nvars, d)
        comps.append(
            HomogPoly.from_coefficients(F, nvars, d, draw(st.lists(elements(F), min_size=len(basis), max_size=len(basis))))
        )
    return PolySum(F, nvars, comps)


@given(polysums())
def test_print_parse_roundtrip(S):
    assert parse_poly(str(S), S.field, S.nvars) == S


def test_zero_form_keeps_degree():
    P = form("x0^2")
    Z = P - P
    assert Z.is_zero()
    assert Z.degree == 2
    assert str(Z) == "0"
