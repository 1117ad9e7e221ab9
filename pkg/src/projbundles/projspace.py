"""Points of ``P(F^{n+1})``, affine charts, and overlap maps.

A point is stored by its canonical representative: the leftmost nonzero
coordinate is 1.  Standard chart ``j`` is ``U_j = {x_j != 0}`` with affine
coordinates ``x / x_j`` with the ``j``-th entry dropped.  A
:class:`GeneralChart` is the complement of an arbitrary hyperplane
``ker ell`` with a chosen origin ``[e_O]``, ``ell(e_O) = 1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .field import Field, FieldValue, InfiniteField, MixedFields
from .linalg import DimensionMismatch, Vector

MAX_RAW_VECTORS = 10**6


class ZeroVector(ValueError):
    pass


class PointInHyperplane(ValueError):
    pass


class NotInHyperplane(ValueError):
    pass


class OutsideOverlap(ValueError):
    """The point is not in every chart the operation needs."""


class OutsideChart(OutsideOverlap):
    pass


class TooLarge(ValueError):
    pass


def _dot(a: Sequence[FieldValue], b: Sequence[FieldValue]) -> FieldValue:
    if len(a) != len(b):
        raise DimensionMismatch(f"lengths {len(a)} and {len(b)} differ")
    acc = a[0] * b[0]
    for x, y in zip(a[1:], b[1:]):
        acc = acc + x * y
    return acc


@dataclass(frozen=True)
class ProjPoint:
    """A line in ``F^{n+1}``; construction from any nonzero vector normalizes it."""

    field: Field
    coords: Vector

    def __post_init__(self):
        coords = tuple(self.field(c) for c in self.coords)
        pivot = next((i for i, c in enumerate(coords) if c), None)
        if pivot is None:
            raise ZeroVector("the zero vector does not span a line")
        if coords[pivot] != 1:
            inv = coords[pivot].inverse()
            coords = tuple(c * inv for c in coords)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, coords: Sequence, field: Field | None = None) -> "ProjPoint":
        if field is None:
            fields = {c.field for c in coords if isinstance(c, FieldValue)}
            if len(fields) != 1:
                raise MixedFields("cannot infer a single field from the coordinates")
            field = fields.pop()
        return cls(field, tuple(coords))

    @property
    def n(self) -> int:
        """Dimension of the projective space."""
        return len(self.coords) - 1

    @property
    def pivot(self) -> int:
        return next(i for i, c in enumerate(self.coords) if c)

    def __getitem__(self, i: int) -> FieldValue:
        return self.coords[i]

    def __len__(self) -> int:
        return len(self.coords)

    def in_chart(self, j: int) -> bool:
        return bool(self.coords[j])

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"


def normalize(raw: Sequence, field: Field | None = None) -> ProjPoint:
    """Canonical point of the line through ``raw``."""
    return ProjPoint.of(raw, field)


def parse_point(text: str, field: Field) -> ProjPoint:
    """Parse ``[a0:a1:...:an]`` with integer or ``a/b`` entries."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"point literal must look like [a0:a1:...], got {text!r}")
    parts = s[1:-1].split(":")
    if any(not p.strip() for p in parts):
        raise ValueError(f"empty coordinate in point literal {text!r}")
    return ProjPoint(field, tuple(field.parse_element(p) for p in parts))


def scaled_representative(P: ProjPoint, lam) -> Vector:
    """The representative ``lam * canonical``; used to test representative independence."""
    lam = P.field(lam)
    if not lam:
        raise ValueError("scale must be nonzero")
    return tuple(lam * c for c in P.coords)


def as_representative(P: ProjPoint | Sequence, field: Field | None = None) -> tuple[Field, Vector]:
    """A (field, vector) pair from either a point or a raw nonzero representative."""
    if isinstance(P, ProjPoint):
        return P.field, P.coords
    if field is None:
        field = next(c.field for c in P if isinstance(c, FieldValue))
    v = tuple(field(c) for c in P)
    if not any(v):
        raise ZeroVector("the zero vector does not represent a point")
    return field, v


# standard charts


def chart_coords(P: ProjPoint | Sequence, j: int) -> Vector:
    """Affine coordinates ``x_j^{-1}(x_0, ..., x_{j-1}, x_{j+1}, ..., x_n)``."""
    _, x = as_representative(P)
    if not x[j]:
        raise OutsideChart(f"point {_fmt(x)} is not in chart {j}")
    inv = x[j].inverse()
    return tuple(c * inv for i, c in enumerate(x) if i != j)


def chart_point(u: Sequence[FieldValue], j: int, field: Field | None = None) -> ProjPoint:
    """Inverse of :func:`chart_coords`: insert a 1 at position ``j``."""
    if field is None:
        field = next(c.field for c in u if isinstance(c, FieldValue)) if u else None
        if field is None:
            raise ValueError("field needed for the zero-dimensional chart")
    u = tuple(field(c) for c in u)
    if not 0 <= j <= len(u):
        raise IndexError(f"chart index {j} out of range for P^{len(u)}")
    return ProjPoint(field, u[:j] + (field.one,) + u[j:])


def overlap(j: int, k: int, u: Sequence[FieldValue], field: Field | None = None) -> Vector:
    """Change of coordinates from chart ``k`` to chart ``j``."""
    if j == k:
        return tuple(u)
    P = chart_point(u, k, field)
    if not P.in_chart(j):
        raise OutsideOverlap(f"point {P} with chart-{k} coordinates lies outside chart {j}")
    return chart_coords(P, j)


# general charts


@dataclass(frozen=True)
class GeneralChart:
    """Chart on the complement of ``P(ker ell)`` with origin ``[origin]``."""

    ell: Vector
    origin: Vector

    def __post_init__(self):
        if len(self.ell) != len(self.origin):
            raise DimensionMismatch("covector and origin have different lengths")
        if not any(self.ell):
            raise ValueError("the covector of a chart must be nonzero")
        if _dot(self.ell, self.origin) != 1:
            raise ValueError("origin vector must satisfy ell(origin) = 1")

    @classmethod
    def standard(cls, field: Field, n: int, j: int) -> "GeneralChart":
        e = tuple(field.one if i == j else field.zero for i in range(n + 1))
        return cls(e, e)

    @property
    def field(self) -> Field:
        return self.ell[0].field

    def contains(self, P: ProjPoint) -> bool:
        return bool(_dot(self.ell, P.coords))

    def forward(self, P: ProjPoint | Sequence) -> Vector:
        """``v / ell(v) - e_O``, an element of ``ker ell``; independent of the representative."""
        _, v = as_representative(P, self.field)
        lv = _dot(self.ell, v)
        if not lv:
            raise PointInHyperplane(f"{_fmt(v)} lies in the hyperplane of the chart")
        inv = lv.inverse()
        return tuple(c * inv - o for c, o in zip(v, self.origin))

    def inverse(self, u: Sequence[FieldValue]) -> ProjPoint:
        u = tuple(self.field(c) for c in u)
        if _dot(self.ell, u):
            raise NotInHyperplane(f"{_fmt(u)} is not in the kernel of the chart covector")
        return ProjPoint(self.field, tuple(o + c for o, c in zip(self.origin, u)))


def general_chart_fwd(chart: GeneralChart, P: ProjPoint | Sequence) -> Vector:
    return chart.forward(P)


def general_chart_inv(chart: GeneralChart, u: Sequence[FieldValue]) -> ProjPoint:
    return chart.inverse(u)


def general_overlap(target: GeneralChart, source: GeneralChart, u: Sequence[FieldValue]) -> Vector:
    """``phi_target o phi_source^{-1}``: the ``O``-component inverse times the ``U``-component."""
    w = tuple(o + c for o, c in zip(source.origin, u))
    w_o = _dot(target.ell, w)
    if not w_o:
        raise OutsideOverlap("point lies in the hyperplane of the target chart")
    w_u = tuple(c - w_o * o for c, o in zip(w, target.origin))
    inv = w_o.inverse()
    return tuple(inv * c for c in w_u)


# enumeration and sampling


def enumerate_proj(field: Field, n: int) -> Iterator[ProjPoint]:
    """Every point of ``P^n(F_p)`` once, grouped by pivot position (leftmost first)."""
    if not field.is_finite:
        raise InfiniteField("cannot enumerate projective space over the rationals")
    if field.order ** (n + 1) > MAX_RAW_VECTORS:
        raise TooLarge(f"P^{n}(F_{field.order}) exceeds the {MAX_RAW_VECTORS} raw-vector guard")
    elems = list(field.elements())
    zero, one = field.zero, field.one
    for pivot in range(n + 1):
        for tail in product(elems, repeat=n - pivot):
            yield ProjPoint(field, (zero,) * pivot + (one,) + tail)


def projective_point_count(p: int, n: int) -> int:
    return sum(p**i for i in range(n + 1))


def random_point(field: Field, n: int, rng: random.Random, height: int = 9) -> ProjPoint:
    while True:
        v = tuple(field.random_element(rng, height) for _ in range(n + 1))
        if any(v):
            return ProjPoint(field, v)


def random_point_in_charts(field: Field, n: int, rng: random.Random, charts: Sequence[int], height: int = 9) -> ProjPoint:
    while True:
        P = random_point(field, n, rng, height)
        if all(P.in_chart(j) for j in charts):
            return P


def _fmt(v: Sequence) -> str:
    return "(" + ", ".join(str(c) for c in v) + ")"
