"""Line bundles ``O(e)`` on ``P^n`` through their standard local trivializations.

Over ``U_j`` a fibre element of ``O(e)`` has a scalar coordinate.  Going from
chart ``j`` to chart ``k`` multiplies it by ``(x_j / x_k)**e``; for
``e = -d`` this is ``(x_k / x_j)**d``.  The ratio is homogeneous of degree
zero, so any representative of the base point gives the same value.

Two total-space descriptions are kept as well: fibre elements
``[a (+) v]`` of ``O(1)`` and the inclusion of ``O(-d)`` into the trivial
bundle with fibre ``Sym^d(V)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .field import FieldValue
from .linalg import DimensionMismatch
from .poly import HomogPoly
from .projspace import OutsideChart, OutsideOverlap, ProjPoint, as_representative


class BaseMismatch(ValueError):
    pass


class WrongDegreeSign(ValueError):
    pass


class NotOnFiberLine(ValueError):
    """A ``Sym^d(V)`` tensor that is not a multiple of ``v^d`` for the base point."""


def transition(e: int, j: int, k: int, P: ProjPoint | Sequence) -> FieldValue:
    """Transition ``g_{k<-j} = (x_j / x_k)**e`` at ``P``: chart-``k`` value over chart-``j`` value."""
    field, x = as_representative(P)
    if not x[j] or not x[k]:
        raise OutsideOverlap(f"point is not in U_{j} and U_{k}")
    if j == k:
        return field.one
    return (x[j] / x[k]) ** e


def cocycle_product(e: int, i: int, j: int, k: int, P: ProjPoint | Sequence) -> FieldValue:
    """``g_{i<-k} g_{k<-j} g_{j<-i}`` at ``P`` (which must lie in all three charts)."""
    return transition(e, k, i, P) * transition(e, j, k, P) * transition(e, i, j, P)


def cocycle_check(e: int, i: int, j: int, k: int, P: ProjPoint | Sequence) -> bool:
    return cocycle_product(e, i, j, k, P) == 1


@dataclass(frozen=True)
class CocycleViolation:
    e: int
    charts: tuple[int, int, int]
    point: ProjPoint
    product: FieldValue


def find_cocycle_violation(e: int, points: Iterable[ProjPoint]) -> tuple[CocycleViolation | None, int]:
    """Check every chart triple at every point; return the first violation and the number of checks."""
    checks = 0
    for P in points:
        charts = [j for j in range(P.n + 1) if P.in_chart(j)]
        for i, j, k in product(charts, repeat=3):
            checks += 1
            value = cocycle_product(e, i, j, k, P)
            if value != 1:
                return CocycleViolation(e, (i, j, k), P, value), checks
    return None, checks


def tensor_degree(*degrees: int) -> int:
    """Degree of ``O(e1) (x) O(e2) (x) ...``."""
    return sum(degrees)


def dual_degree(e: int) -> int:
    return -e


@dataclass(frozen=True)
class LocalValue:
    """A fibre element of ``O(degree)`` over ``base``, in the trivialization over ``U_chart``."""

    degree: int
    chart: int
    base: ProjPoint
    value: FieldValue

    def __post_init__(self):
        if not self.base.in_chart(self.chart):
            raise OutsideChart(f"{self.base} is not in chart {self.chart}")
        object.__setattr__(self, "value", self.base.field(self.value))


def transport(lv: LocalValue, k: int) -> LocalValue:
    """Re-express ``lv`` in chart ``k``."""
    if k == lv.chart:
        return lv
    g = transition(lv.degree, lv.chart, k, lv.base)
    return LocalValue(lv.degree, k, lv.base, g * lv.value)


def power_tensor(v: Sequence[FieldValue], d: int) -> HomogPoly:
    """``v^d`` in ``Sym^d(V)``, written as the form ``(sum v_i y_i)^d``."""
    field = v[0].field
    return HomogPoly.linear_form(field, v) ** d


def local_to_tensor(lv: LocalValue) -> HomogPoly:
    """Image of a fibre element of ``O(-d)`` in ``Sym^d(V)``: ``a x_j^{-d} v^d``."""
    if lv.degree >= 0:
        raise WrongDegreeSign("only negative-degree bundles include into Sym^d(V)")
    d = -lv.degree
    v = lv.base.coords
    return power_tensor(v, d).scale(lv.value / v[lv.chart] ** d)


def tensor_to_local(T: HomogPoly, P: ProjPoint, j: int) -> LocalValue:
    """Inverse of :func:`local_to_tensor`: the chart-``j`` coordinate of ``T`` in ``O(-d)`` at ``P``."""
    d = T.degree
    if d < 1:
        raise WrongDegreeSign("tensor must have positive degree")
    if T.nvars != len(P):
        raise DimensionMismatch("tensor and point live in different dimensions")
    power = power_tensor(P.coords, d)
    pivot_mono = tuple(d if i == P.pivot else 0 for i in range(len(P)))
    c = T.coefficient(pivot_mono)
    if power.scale(c) != T:
        raise NotOnFiberLine(f"{T} is not a multiple of the {d}-th power of {P}")
    return LocalValue(-d, j, P, c * P.coords[j] ** d)


@dataclass(frozen=True)
class O1FiberElement:
    """The point ``[a (+) v]`` of ``P(F (+) V)`` over ``[v]``, with ``v`` the canonical representative.

    As an element of the dual line it is the functional sending ``v`` to ``a``.
    """

    base: ProjPoint
    a: FieldValue

    def __post_init__(self):
        object.__setattr__(self, "a", self.base.field(self.a))

    @classmethod
    def from_representative(cls, a, v: Sequence) -> "O1FiberElement":
        """``[a (+) v]`` for an arbitrary representative ``v``."""
        field, v = as_representative(v)
        P = ProjPoint(field, v)
        lam = v[P.pivot]
        return cls(P, field(a) / lam)

    @classmethod
    def zero(cls, base: ProjPoint) -> "O1FiberElement":
        return cls(base, base.field.zero)

    def functional(self, w: Sequence) -> FieldValue:
        """Evaluate on a vector ``w`` in the line ``[v]``."""
        field, w = as_representative(w, self.base.field)
        lam = w[self.base.pivot]
        if ProjPoint(field, w) != self.base:
            raise BaseMismatch(f"vector is not on the line {self.base}")
        return lam * self.a

    def local_value(self, j: int) -> LocalValue:
        """Coordinate ``a x_j^{-1}`` in the chart-``j`` trivialization of ``O(1)``."""
        if not self.base.in_chart(j):
            raise OutsideChart(f"{self.base} is not in chart {j}")
        return LocalValue(1, j, self.base, self.a / self.base.coords[j])

    def __add__(self, other: "O1FiberElement") -> "O1FiberElement":
        return o1_fiber_add(self, other)

    def __rmul__(self, alpha) -> "O1FiberElement":
        return o1_fiber_scale(alpha, self)

    def __neg__(self) -> "O1FiberElement":
        return O1FiberElement(self.base, -self.a)

    def __str__(self) -> str:
        return f"[{self.a} (+) {self.base}]"


def o1_fiber_add(u: O1FiberElement, w: O1FiberElement) -> O1FiberElement:
    if u.base != w.base:
        raise BaseMismatch(f"fibres over {u.base} and {w.base}")
    return O1FiberElement(u.base, u.a + w.a)


def o1_fiber_scale(alpha, u: O1FiberElement) -> O1FiberElement:
    return O1FiberElement(u.base, u.base.field(alpha) * u.a)


def hyperplane_eval(P: ProjPoint, A: Sequence | HomogPoly) -> O1FiberElement:
    """The fibre element ``[A(v) (+) v]`` defined by a covector ``A``."""
    if isinstance(A, HomogPoly):
        if A.degree != 1:
            raise ValueError("hyperplane evaluation needs a linear form")
        A = A.coefficients()
    if len(A) != len(P):
        raise DimensionMismatch(f"covector of length {len(A)} on P^{P.n}")
    field = P.field
    value = sum((field(a) * x for a, x in zip(A, P.coords)), field.zero)
    return O1FiberElement(P, value)


def covector_for(target: O1FiberElement) -> tuple[FieldValue, ...]:
    """A covector whose hyperplane evaluation is ``target`` (witness of surjectivity)."""
    P = target.base
    field = P.field
    return tuple(target.a if i == P.pivot else field.zero for i in range(len(P)))
