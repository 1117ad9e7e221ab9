"""Acceptance gate: ten end-to-end criteria, all checked with exact equality.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import product
from math import comb

import pytest

from projbundles.bundles import find_cocycle_violation, transition
from projbundles.euler import (
    euler_sequence_fiber,
    hyperplane_sequence_fiber,
    p1_tangent_iso_check,
    taut_sequence_fiber,
)
from projbundles.field import QQ, Field
from projbundles.poly import HomogPoly, monomial_basis, parse_form
from projbundles.projmaps import induced_map, segre, segre_minors, veronese, veronese_relations_hold
from projbundles.projspace import ProjPoint, enumerate_proj, normalize, random_point, scaled_representative
from projbundles.sections import (
    CertKind,
    RationalMap,
    coefficient_rank,
    eval_regular,
    local_rep,
    mobius_section,
    random_points,
    section_basis,
    section_from_form,
    tensor_power_section,
)

SEED = 0
RESULTS: list[str] = []

F5 = Field(5)


def record(number: int, title: str, ok: bool, detail: str) -> None:
    RESULTS.append(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})")


def transition_points():
    return random_points(QQ, 3, 100, seed=SEED), list(enumerate_proj(F5, 2))


# criteria


def criterion_1():
    start = time.perf_counter()
    bad = []
    for n in range(5):
        for d in range(7):
            basis = section_basis(n, d)
            if len(basis) != comb(n + d, n) or coefficient_rank(basis) != len(basis):
                bad.append((n, d))
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 1.0, f"{35 - len(bad)}/35 (n, d) pairs, {elapsed:.3f}s"


def criterion_2():
    start = time.perf_counter()
    rational, finite = transition_points()
    checks = 0
    for Q in rational + finite:
        charts = [j for j in range(Q.n + 1) if Q.in_chart(j)]
        for e in range(-6, 7):
            for j, k in product(charts, repeat=2):
                g = transition(e, j, k, Q)
                d = abs(e)
                lemma = (Q[k] / Q[j]) ** d if e <= 0 else (Q[j] / Q[k]) ** d
                if g != lemma:
                    return False, f"e={e} j={j} k={k} at {Q}: {g} != {lemma}"
                checks += 1
    elapsed = time.perf_counter() - start
    return elapsed < 5.0, f"{checks} transitions, {elapsed:.3f}s"


def criterion_3():
    rational, finite = transition_points()
    total = 0
    for e in range(-6, 7):
        for pts in (rational, finite):
            violation, checks = find_cocycle_violation(e, pts)
            total += checks
            if violation is not None:
                return False, f"e={e} charts={violation.charts} at {violation.point}: product {violation.product}"
    return True, f"{total} chart triples"


def _acceptance_sections():
    out = []
    for nvars in (2, 3):
        for d in range(5):
            out += [section_from_form(HomogPoly.monomial(QQ, m)) for m in monomial_basis(nvars, d)]
    numerators = {1: "x0", 2: "x0^2*x1", 3: "x0^2*x1^3 + x0^3*x1^2"}
    for k in range(1, 4):
        for text in numerators.values():
            p = parse_form(text, QQ, 2)
            if p.degree != 2 * k - 1:
                continue
            s = mobius_section(k, p)
            out += [tensor_power_section(s, d) for d in range(1, 4)]
    return out


def criterion_4():
    samples = {2: random_points(QQ, 1, 40, seed=SEED), 3: random_points(QQ, 2, 40, seed=SEED)}
    sections = _acceptance_sections()
    checks = 0
    for s in sections:
        for Q in samples[s.nvars]:
            charts = [j for j in range(Q.n + 1) if Q.in_chart(j)]
            for j, k in product(charts, repeat=2):
                if local_rep(s, k, Q) != transition(s.degree, j, k, Q) * local_rep(s, j, Q):
                    return False, f"{s} charts {j}->{k} at {Q}"
                checks += 1
    return True, f"{len(sections)} sections, {checks} overlap checks"


def criterion_5():
    rng = random.Random(SEED)
    g = RationalMap(parse_form("x0*x1 + 2*x1^2", QQ, 2), parse_form("x0^2 + x1^2", QQ, 2), "projective")
    s = tensor_power_section(mobius_section(2, parse_form("x0^2*x1", QQ, 2)), 2)
    A = ((QQ(1), QQ(2)), (QQ(-3), QQ(1)))
    cases = 0
    fields = (QQ, F5, Field(7))
    for F in fields:
        for _ in range(4):
            P = random_point(F, 1, rng)
            R = random_point(F, 2, rng)
            for _ in range(50):
                lam = F.random_element(rng, nonzero=True)
                mu = F.random_element(rng, nonzero=True)
                v, w = scaled_representative(P, lam), scaled_representative(R, mu)
                if normalize(v, F) != P or normalize(w, F) != R:
                    return False, f"normalize at {P}"
                if veronese(v, 3) != veronese(P, 3) or segre(v, w) != segre(P, R):
                    return False, f"embedding at {P}, {R}"
                AF = tuple(tuple(F(x.value) for x in row) for row in A)
                if induced_map(AF, v) != induced_map(AF, P):
                    return False, f"induced map at {P}"
                if F is QQ:
                    if eval_regular(g, v) != eval_regular(g, P):
                        return False, f"eval_regular at {P}"
                    for j in range(2):
                        if P.in_chart(j) and local_rep(s, j, v) != local_rep(s, j, P):
                            return False, f"local_rep chart {j} at {P}"
                cases += 1
    return True, f"{cases} rescaled representatives"


def criterion_6():
    s = mobius_section(1, parse_form("x0", QQ, 2))
    one_one = ProjPoint(QQ, (1, 1))
    a_ok = s.cert.kind is CertKind.POSITIVE_DIAGONAL_EVEN_FORM and local_rep(s, 0, one_one) != 0 and not s.hat(one_one).is_zero()
    g = RationalMap(parse_form("x0*x1", QQ, 2), parse_form("x0^2 + x1^2", QQ, 2), "projective")
    values = {eval_regular(g, ProjPoint(QQ, (1, 0))), eval_regular(g, ProjPoint(QQ, (1, 1)))}
    b_ok = values == {QQ(0), QQ(Fraction(1, 2))}
    f = RationalMap.parse("1", "1 + x0^2", QQ, 1)
    rng = random.Random(SEED)
    xs = [Fraction(rng.randint(-30, 30), rng.randint(1, 12)) for _ in range(20)]
    c_ok = all(eval_regular(f, (QQ(x),)) == 1 / (1 + x * x) for x in xs)
    return a_ok and b_ok and c_ok, f"(a) {a_ok}, (b) {b_ok}, (c) {c_ok} on {len(xs)} rationals"


def criterion_7():
    F7 = Field(7)
    for Q in enumerate_proj(F7, 1):
        for d in (2, 3):
            if not veronese_relations_hold(veronese(Q, d), 2, d):
                return False, f"Veronese d={d} at {Q}"
    pairs = 0
    for A, B in product(enumerate_proj(F5, 1), repeat=2):
        if any(segre_minors(segre(A, B), 1, 1)):
            return False, f"Segre minor at {A}, {B}"
        pairs += 1
    return True, f"P^1(F_7) Veronese d=2,3; {pairs} Segre pairs"


def criterion_8():
    pts = random_points(QQ, 3, 100, seed=SEED) + list(enumerate_proj(Field(3), 2))
    for Q in pts:
        n = Q.n
        for build, dims in (
            (taut_sequence_fiber, (1, n + 1, n)),
            (hyperplane_sequence_fiber, (n, n + 1, 1)),
            (euler_sequence_fiber, (1, n + 1, n)),
        ):
            seq = build(Q)
            if seq.dims != dims or not seq.composite_is_zero() or not seq.is_exact():
                return False, f"{build.__name__} at {Q}"
    return True, f"{len(pts)} points x 3 sequences"


def criterion_9():
    rational = [Q for Q in random_points(QQ, 1, 200, seed=SEED) if Q.in_chart(0) and Q.in_chart(1)][:50]
    double = [Q for Q in enumerate_proj(F5, 1) if Q.in_chart(0) and Q.in_chart(1)]
    lam_q = p1_tangent_iso_check(rational)
    lam_5 = p1_tangent_iso_check(double)
    ok = len(rational) == 50 and lam_q == -1 and lam_5 == F5(-1)
    return ok, f"lambda = {lam_q} on {len(rational)} Q points, {lam_5} on {len(double)} F_5 points"


def criterion_10():
    start = time.perf_counter()
    for p in (2, 3, 5, 7):
        F = Field(p)
        for n in (1, 2):
            pts = list(enumerate_proj(F, n))
            brute = {normalize(v, F) for v in product(range(p), repeat=n + 1) if any(v)}
            if len(set(pts)) != len(pts) or set(pts) != brute:
                return False, f"p={p} n={n}: {len(pts)} vs {len(brute)}"
    elapsed = time.perf_counter() - start
    return elapsed < 1.0, f"8 (p, n) cases, {elapsed:.3f}s"


CRITERIA = [
    (1, "section-space dimension C(n+d, n)", criterion_1),
    (2, "transition laws for O(e)", criterion_2),
    (3, "cocycle identity", criterion_3),
    (4, "section transformation law", criterion_4),
    (5, "representative independence", criterion_5),
    (6, "non-closed-field witnesses", criterion_6),
    (7, "Veronese and Segre relations", criterion_7),
    (8, "exact fibre sequences", criterion_8),
    (9, "TP^1 = O(2) with constant -1", criterion_9),
    (10, "enumeration sanity", criterion_10),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    ok, detail = check()
    record(number, title, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    for number, title, check in CRITERIA:
        record(number, title, *check())
    print("\n".join(RESULTS))
