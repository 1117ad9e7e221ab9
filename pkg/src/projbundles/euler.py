"""Fibrewise linear algebra of the tautological, hyperplane and Euler sequences.

At a point ``[v]`` each sequence restricts to a short exact sequence of
vector spaces ``0 -> A -> B -> C -> 0``, stored as a pair of matrices.
Quotients ``V/[v]`` use the coset basis of standard vectors away from the
pivot of the canonical representative.

On ``P^1`` the tangent transition is the formal derivative of the overlap map
``u -> 1/u``, which is compared with the transition of ``O(2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bundles import transition
from .field import Field, FieldValue
from .linalg import DimensionMismatch, Matrix, Vector, column, column_span_equal, is_zero, kernel, mat_mul, rank
from .projspace import OutsideOverlap, ProjPoint, chart_coords


class NotProportional(ValueError):
    def __init__(self, witness: ProjPoint, ratio: FieldValue, expected: FieldValue):
        super().__init__(f"tangent and O(2) transitions have ratio {ratio} at {witness}, expected {expected}")
        self.witness = witness
        self.ratio = ratio
        self.expected = expected


@dataclass(frozen=True)
class FiberSequence:
    """``0 -> F^a --left--> F^b --right--> F^c -> 0``."""

    left: Matrix
    right: Matrix
    dims: tuple[int, int, int]
    field: Field

    def __post_init__(self):
        a, b, c = self.dims
        if len(self.left) != b or any(len(r) != a for r in self.left):
            raise DimensionMismatch(f"left map is not {b}x{a}")
        if len(self.right) != c or any(len(r) != b for r in self.right):
            raise DimensionMismatch(f"right map is not {c}x{b}")

    def composite_is_zero(self) -> bool:
        return is_zero(mat_mul(self.right, self.left, self.field))

    def is_exact(self) -> bool:
        """``right . left = 0``, ``left`` injective, ``right`` surjective, ranks add up to ``b``."""
        a, b, c = self.dims
        ra, rc = rank(self.left), rank(self.right)
        return self.composite_is_zero() and ra == a and rc == c and ra + rc == b

    def kernel_is_image(self) -> bool:
        """``ker(right) = im(left)`` compared as column spans."""
        ker = kernel(self.right, self.field, self.dims[1])
        basis = tuple(zip(*ker)) if ker else tuple(() for _ in range(self.dims[1]))
        return column_span_equal(self.left, basis)


def _unit(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if t == i else field.zero for t in range(n))


def quotient_indices(P: ProjPoint) -> list[int]:
    """Positions of the standard vectors forming the coset basis of ``V/[v]``."""
    return [i for i in range(len(P)) if i != P.pivot]


def quotient_matrix(P: ProjPoint) -> Matrix:
    """Projection ``V -> V/[v]`` in the coset basis: row ``i`` is ``e_i - v_i e_p``.

    With ``v_p = 1`` the vector ``v`` maps to zero and ``e_i`` to the ``i``-th coset.
    """
    field, v, p = P.field, P.coords, P.pivot
    rows = []
    for i in quotient_indices(P):
        row = list(_unit(field, len(P), i))
        row[p] = -v[i]
        rows.append(tuple(row))
    return tuple(rows)


def annihilator_basis(P: ProjPoint) -> list[Vector]:
    """Covectors ``e_i* - v_i e_p*`` (``i`` away from the pivot) spanning ``ann([v])``."""
    return list(quotient_matrix(P))


def taut_sequence_fiber(P: ProjPoint) -> FiberSequence:
    """``0 -> [v] -> V -> V/[v] -> 0``."""
    n = P.n
    return FiberSequence(column(P.coords), quotient_matrix(P), (1, n + 1, n), P.field)


def hyperplane_sequence_fiber(P: ProjPoint) -> FiberSequence:
    """``0 -> ann([v]) -> V* -> [v]* -> 0``, the last map being evaluation at ``v``."""
    n = P.n
    ann = annihilator_basis(P)
    left = tuple(zip(*ann)) if ann else tuple(() for _ in range(n + 1))
    right = (tuple(P.coords),)
    return FiberSequence(left, right, (n, n + 1, 1), P.field)


def euler_sequence_fiber(P: ProjPoint) -> FiberSequence:
    """``0 -> F -> V (x) [v]* -> (V/[v]) (x) [v]* -> 0``.

    The generator of ``[v]*`` is the functional with value 1 on the canonical
    ``v``, so ``1 -> v (x) alpha`` is the column ``v`` and the right map is the
    quotient projection twisted by ``alpha``.
    """
    taut = taut_sequence_fiber(P)
    alpha = P.coords[P.pivot]
    left = tuple(tuple(x * alpha for x in row) for row in taut.left)
    right = tuple(tuple(x * alpha for x in row) for row in taut.right)
    return FiberSequence(left, right, taut.dims, P.field)


@dataclass(frozen=True)
class TangentFiber:
    """``T_[v] = [v]* (x) V/[v]``, described by ``v`` and coset representatives."""

    base: ProjPoint
    line_basis: Vector
    quotient_basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.quotient_basis)

    def completes_basis(self) -> bool:
        return rank((self.line_basis,) + self.quotient_basis) == len(self.base)


def tangent_fiber(P: ProjPoint) -> TangentFiber:
    field = P.field
    cosets = tuple(_unit(field, len(P), i) for i in quotient_indices(P))
    return TangentFiber(P, P.coords, cosets)


# tangent bundle of P^1


def _poly_eval(coeffs: Sequence[FieldValue], u: FieldValue) -> FieldValue:
    acc = u.field.zero
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


def _poly_derivative(coeffs: Sequence[FieldValue]) -> list[FieldValue]:
    return [c * i for i, c in enumerate(coeffs)][1:]


def _poly_mul(a: Sequence[FieldValue], b: Sequence[FieldValue], field: Field) -> list[FieldValue]:
    out = [field.zero] * max(len(a) + len(b) - 1, 0)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def rational_derivative(num: Sequence[FieldValue], den: Sequence[FieldValue], field: Field):
    """Formal derivative of ``num/den`` as ``(num' den - num den', den^2)``; coefficients low to high."""
    a = _poly_mul(_poly_derivative(num), den, field)
    b = _poly_mul(num, _poly_derivative(den), field)
    size = max(len(a), len(b))
    a += [field.zero] * (size - len(a))
    b += [field.zero] * (size - len(b))
    return [x - y for x, y in zip(a, b)], _poly_mul(den, den, field)


def p1_overlap_rational(j: int, k: int, field: Field):
    """The overlap from chart ``j`` to chart ``k`` of ``P^1`` as ``num/den`` in the chart-``j`` coordinate."""
    if j == k:
        return [field.zero, field.one], [field.one]
    return [field.one], [field.zero, field.one]


def tangent_transition_p1(j: int, k: int, P: ProjPoint) -> FieldValue:
    """Derivative of the chart ``j -> k`` overlap at the chart-``j`` coordinate of ``P``."""
    if P.n != 1:
        raise DimensionMismatch("tangent transitions are implemented on P^1 only")
    if not (P.in_chart(j) and P.in_chart(k)):
        raise OutsideOverlap(f"{P} is not in U_{j} and U_{k}")
    field = P.field
    (u,) = chart_coords(P, j)
    num, den = rational_derivative(*p1_overlap_rational(j, k, field), field)
    return _poly_eval(num, u) / _poly_eval(den, u)


def p1_tangent_iso_check(
    samples: Iterable[ProjPoint],
    pairs: Sequence[tuple[int, int]] = ((0, 1), (1, 0)),
    degree: int = 2,
) -> FieldValue:
    """The constant ``lam`` with ``tangent(j, k, P) = lam * transition(degree, j, k, P)`` at every sample.

    With ``degree = 2`` this exhibits ``TP^1 = O(2)``.  Raises
    :class:`NotProportional` at the first point where the ratio changes.
    """
    lam = None
    for P in samples:
        for j, k in pairs:
            ratio = tangent_transition_p1(j, k, P) / transition(degree, j, k, P)
            if lam is None:
                lam = ratio
            elif ratio != lam:
                raise NotProportional(P, ratio, lam)
    if lam is None:
        raise ValueError("no sample points")
    return lam
