"""Morphisms between projective spaces: linear maps, Veronese and Segre embeddings."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .field import FieldValue
from .linalg import DimensionMismatch, Matrix, mat_vec
from .poly import DegreeMismatch, HomogPoly, monomial_basis
from .projspace import ProjPoint, as_representative, enumerate_proj


class InKernel(ValueError):
    pass


class IndeterminacyPoint(ValueError):
    pass


@dataclass(frozen=True)
class LinearInduced:
    """``P(A)`` for a matrix with one row per target coordinate."""

    matrix: Matrix

    def __call__(self, P) -> ProjPoint:
        return induced_map(self, P)


def induced_map(A: LinearInduced | Matrix, P) -> ProjPoint:
    """``[A v]``; points on the projectivized kernel raise :class:`InKernel`."""
    matrix = A.matrix if isinstance(A, LinearInduced) else A
    field, v = as_representative(P)
    w = mat_vec(matrix, v)
    if not any(w):
        raise InKernel(f"{P} lies in the projectivized kernel")
    return ProjPoint(field, w)


# Veronese


def veronese_coords(v: Sequence[FieldValue], d: int) -> tuple[FieldValue, ...]:
    """All degree-``d`` monomials of ``v`` in grlex order."""
    out = []
    for m in monomial_basis(len(v), d):
        t = v[0].field.one
        for x, e in zip(v, m):
            if e:
                t = t * x**e
        out.append(t)
    return tuple(out)


def veronese(P, d: int) -> ProjPoint:
    """``[v] -> [v^d]`` into ``P^{C(n+d, n) - 1}``."""
    if d < 1:
        raise ValueError("Veronese degree must be at least 1")
    field, v = as_representative(P)
    return ProjPoint(field, veronese_coords(v, d))


def veronese_chart(j: int, nvars: int, d: int) -> int:
    """Target chart matching chart ``j``: the position of the pure power ``x_j^d``."""
    pure = tuple(d if i == j else 0 for i in range(nvars))
    return monomial_basis(nvars, d).index(pure)


def veronese_relations(nvars: int, d: int) -> list[tuple[int, int, int, int]]:
    """Index quadruples ``(a, b, c, e)`` with ``m_a + m_b = m_c + m_e`` among degree-``d`` monomials.

    For two variables these are the 2x2 catalecticant relations.
    """
    basis = monomial_basis(nvars, d)
    by_sum: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for a, b in combinations_with_replacement(range(len(basis)), 2):
        s = tuple(x + y for x, y in zip(basis[a], basis[b]))
        by_sum.setdefault(s, []).append((a, b))
    rels = []
    for pairs in by_sum.values():
        for (a, b), (c, e) in combinations(pairs, 2):
            rels.append((a, b, c, e))
    return rels


def veronese_relations_hold(y: ProjPoint, nvars: int, d: int) -> bool:
    c = y.coords
    return all(c[a] * c[b] == c[x] * c[e] for a, b, x, e in veronese_relations(nvars, d))


# Segre


def segre_coords(u: Sequence[FieldValue], v: Sequence[FieldValue]) -> tuple[FieldValue, ...]:
    return tuple(a * b for a in u for b in v)


def segre(P, Q) -> ProjPoint:
    """``([u], [v]) -> [u (x) v]`` with coordinates ``u_i v_j`` in row-major order."""
    field, u = as_representative(P)
    field_q, v = as_representative(Q)
    if field != field_q:
        raise DimensionMismatch("Segre factors over different fields")
    return ProjPoint(field, segre_coords(u, v))


def segre_minors(z: ProjPoint, m: int, n: int) -> list[FieldValue]:
    """All 2x2 minors ``z_ij z_kl - z_il z_kj`` of the ``(m+1) x (n+1)`` coordinate matrix."""
    rows, cols = m + 1, n + 1
    if len(z) != rows * cols:
        raise DimensionMismatch(f"point of length {len(z)} is not a {rows}x{cols} matrix")
    c = z.coords
    out = []
    for i, k in combinations(range(rows), 2):
        for j, l in combinations(range(cols), 2):
            out.append(c[i * cols + j] * c[k * cols + l] - c[i * cols + l] * c[k * cols + j])
    return out


# general morphisms


class BaseLocusCert(enum.Enum):
    EXHAUSTIVE_FINITE_FIELD = "ExhaustiveFiniteField"
    ASSUMED = "Assumed"


@dataclass(frozen=True)
class MorphismData:
    """``[v] -> [f_0(v) : ... : f_m(v)]`` with all components of one degree."""

    components: tuple[HomogPoly, ...]
    base_locus_cert: BaseLocusCert = BaseLocusCert.ASSUMED

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps or all(c.is_zero() for c in comps):
            raise ValueError("a morphism needs a nonzero component")
        nonzero = [c for c in comps if not c.is_zero()]
        if len({c.degree for c in nonzero}) != 1:
            raise DegreeMismatch("morphism components must share one degree")
        if len({(c.field, c.nvars) for c in comps}) != 1:
            raise DimensionMismatch("morphism components over different fields or variable counts")
        object.__setattr__(self, "components", comps)

    @classmethod
    def certified(cls, components: Sequence[HomogPoly]) -> "MorphismData":
        """Build, scanning for a common zero when the field is finite."""
        data = cls(tuple(components))
        field = data.components[0].field
        if not field.is_finite:
            return data
        n = data.components[0].nvars - 1
        for P in enumerate_proj(field, n):
            if not any(c(P.coords) for c in data.components):
                raise IndeterminacyPoint(f"all components vanish at {P}")
        return cls(data.components, BaseLocusCert.EXHAUSTIVE_FINITE_FIELD)

    def __call__(self, P) -> ProjPoint:
        return morphism_eval(self, P)


def morphism_eval(M: MorphismData, P) -> ProjPoint:
    field, v = as_representative(P)
    w = tuple(c(v) for c in M.components)
    if not any(w):
        raise IndeterminacyPoint(f"all components vanish at {P}")
    return ProjPoint(field, w)


def veronese_morphism(field, nvars: int, d: int) -> MorphismData:
    return MorphismData(tuple(HomogPoly.monomial(field, m) for m in monomial_basis(nvars, d)))
