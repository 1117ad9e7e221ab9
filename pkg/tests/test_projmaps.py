from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from projbundles.bundles import transition
from projbundles.field import QQ, Field
from projbundles.linalg import matrix
from projbundles.poly import DegreeMismatch, HomogPoly, monomial_basis, parse_form
from projbundles.projmaps import (
    BaseLocusCert,
    InKernel,
    IndeterminacyPoint,
    LinearInduced,
    MorphismData,
    induced_map,
    morphism_eval,
    segre,
    segre_minors,
    veronese,
    veronese_chart,
    veronese_morphism,
    veronese_relations,
    veronese_relations_hold,
)
from projbundles.projspace import ProjPoint, enumerate_proj, scaled_representative
from strategies import elements, field_and_point, points

F3, F5, F7 = Field(3), Field(5), Field(7)


def P(*c, field=QQ):
    return ProjPoint(field, tuple(field(x) for x in c))


def test_induced_map_examples():
    Q = P(3, 1, 4)
    assert induced_map(LinearInduced(matrix(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])), Q) == Q
    with pytest.raises(InKernel):
        induced_map(LinearInduced(matrix(QQ, [[1, 0], [0, 0]])), P(0, 1))
    swap = LinearInduced(matrix(QQ, [[0, 1], [1, 0]]))
    assert swap(P(1, 2)) == P(2, 1) == P(1, Fraction(1, 2))


def test_veronese_examples():
    assert veronese(P(1, 2), 2) == P(1, 2, 4)
    Q = P(2, -1, 5)
    assert veronese(Q, 1) == Q
    y = veronese(P(1, 2), 2).coords
    assert y[0] * y[2] - y[1] ** 2 == 0
    with pytest.raises(ValueError):
        veronese(Q, 0)


def test_segre_examples():
    z = segre(P(1, 2), P(1, 3))
    assert z == P(1, 3, 2, 6)
    assert segre_minors(z, 1, 1) == [QQ(0)]
    assert segre(P(1, 0), P(1, 0)) == P(1, 0, 0, 0)
    assert segre(P(1, 2, field=F5), P(1, 4, field=F5)) == P(1, 4, 2, 3, field=F5)


def test_morphism_examples():
    coords = [HomogPoly.variable(QQ, 3, i) for i in range(3)]
    ident = MorphismData(tuple(coords))
    assert morphism_eval(ident, P(1, 5, 7)) == P(1, 5, 7)
    Q = P(1, 2, 3)
    assert veronese_morphism(QQ, 3, 2)(Q) == veronese(Q, 2)
    bad = MorphismData((parse_form("x1^2", QQ, 2), parse_form("x0*x1", QQ, 2)))
    with pytest.raises(IndeterminacyPoint):
        morphism_eval(bad, P(1, 0))


def test_morphism_validation_and_certificate():
    with pytest.raises(DegreeMismatch):
        MorphismData((parse_form("x0", QQ, 2), parse_form("x1^2", QQ, 2)))
    with pytest.raises(ValueError):
        MorphismData((HomogPoly.zero(QQ, 2, 1),))
    m = MorphismData.certified([HomogPoly.monomial(F5, e) for e in monomial_basis(2, 3)])
    assert m.base_locus_cert is BaseLocusCert.EXHAUSTIVE_FINITE_FIELD
    assert MorphismData.certified([parse_form("x0", QQ, 2)]).base_locus_cert is BaseLocusCert.ASSUMED
    with pytest.raises(IndeterminacyPoint):
        MorphismData.certified([parse_form("x0^2 + x1^2", F5, 2), parse_form("x0*x1 + 3*x1^2", F5, 2)])


@given(field_and_point(), st.integers(1, 3), st.data())
def test_representative_independence(t, d, data):
    F, Q = t
    lam = data.draw(elements(F, nonzero=True))
    mu = data.draw(elements(F, nonzero=True))
    raw = scaled_representative(Q, lam)
    assert veronese(raw, d) == veronese(Q, d)
    R = data.draw(points(F, 1))
    assert segre(raw, scaled_representative(R, mu)) == segre(Q, R)
    n = Q.n
    A = tuple(tuple(data.draw(elements(F)) for _ in range(n + 1)) for _ in range(n + 1))
    try:
        image = induced_map(A, Q)
    except InKernel:
        return
    assert induced_map(A, raw) == image


@pytest.mark.parametrize("field,n", [(F7, 1), (F3, 2)])
@pytest.mark.parametrize("d", [1, 2, 3])
def test_veronese_injective(field, n, d):
    pts = list(enumerate_proj(field, n))
    images = {veronese(Q, d) for Q in pts}
    assert len(images) == len(pts)


def test_catalecticant_relations_rational_normal_curve():
    rels = veronese_relations(2, 3)
    # monomials x0^{3-i} x1^i; i+j = k+l
    for a, b, c, e in rels:
        assert {a, b} != {c, e}
        assert a + b == c + e
    assert (0, 2, 1, 1) in rels and (1, 3, 2, 2) in rels and (0, 3, 1, 2) in rels
    for Q in enumerate_proj(F7, 1):
        for d in (2, 3):
            assert veronese_relations_hold(veronese(Q, d), 2, d)


def test_relations_detect_non_image():
    assert not veronese_relations_hold(P(1, 1, 2), 2, 2)


def test_segre_minors_exhaustive_f5():
    for A, B in product(enumerate_proj(F5, 1), repeat=2):
        assert all(not m for m in segre_minors(segre(A, B), 1, 1))
    for A, B in product(enumerate_proj(F3, 2), enumerate_proj(F3, 1)):
        assert all(not m for m in segre_minors(segre(A, B), 2, 1))


@given(field_and_point(n=1), st.integers(1, 3))
def test_veronese_pullback_transition(t, d):
    _, Q = t
    V = veronese(Q, d)
    for j, k in product(range(2), repeat=2):
        if Q.in_chart(j) and Q.in_chart(k):
            J, K = veronese_chart(j, 2, d), veronese_chart(k, 2, d)
            assert transition(-d, j, k, Q) == transition(-1, J, K, V)


def test_veronese_chart_positions():
    assert veronese_chart(0, 2, 3) == 0
    assert veronese_chart(1, 2, 3) == 3
    basis = monomial_basis(3, 2)
    for j in range(3):
        assert basis[veronese_chart(j, 3, 2)] == tuple(2 if i == j else 0 for i in range(3))
