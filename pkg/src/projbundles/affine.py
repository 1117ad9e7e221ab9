"""Affine spaces in coordinates: points of ``F^n`` acted on by vectors of ``F^n``.

Vectors are plain tuples of :class:`~projbundles.field.FieldValue`; points are
:class:`AffinePoint` so a point cannot accidentally be added to a point.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Sequence

from .field import Field, FieldValue, InfiniteField, MixedFields
from .linalg import DimensionMismatch, Matrix, Vector, mat_vec, transpose


class NotAffine(ValueError):
    """A sampled map failed the affine identity; ``witness`` is the offending point."""

    def __init__(self, witness: "AffinePoint", expected, got):
        super().__init__(f"map is not affine: at {witness} expected {expected}, got {got}")
        self.witness = witness
        self.expected = expected
        self.got = got


class EmptySet(ValueError):
    pass


def _check_dims(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"dimensions {len(a)} and {len(b)} differ")


def vec_add(u: Sequence[FieldValue], v: Sequence[FieldValue]) -> Vector:
    _check_dims(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[FieldValue], v: Sequence[FieldValue]) -> Vector:
    _check_dims(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: FieldValue, v: Sequence[FieldValue]) -> Vector:
    return tuple(c * a for a in v)


@dataclass(frozen=True)
class AffinePoint:
    field: Field
    coords: Vector

    @classmethod
    def of(cls, field: Field, coords: Iterable) -> "AffinePoint":
        return cls(field, tuple(field(c) for c in coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __add__(self, v) -> "AffinePoint":
        """Act on the point by a vector."""
        if isinstance(v, AffinePoint):
            raise TypeError("points of an affine space cannot be added")
        return AffinePoint(self.field, vec_add(self.coords, tuple(self.field(x) for x in v)))

    def __sub__(self, other):
        """``y - x`` is the vector carrying ``x`` to ``y``; ``y - v`` translates back."""
        if isinstance(other, AffinePoint):
            if other.field != self.field:
                raise MixedFields(f"points over {self.field} and {other.field}")
            return vec_sub(self.coords, other.coords)
        return AffinePoint(self.field, vec_sub(self.coords, tuple(self.field(x) for x in other)))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def point_diff(y: AffinePoint, x: AffinePoint) -> Vector:
    if y.dim != x.dim:
        raise DimensionMismatch(f"dimensions {y.dim} and {x.dim} differ")
    return y - x


def vectorize_ops(x0: AffinePoint, x1: AffinePoint, x2: AffinePoint, a) -> tuple[AffinePoint, AffinePoint]:
    """Sum ``x1 + x2`` and product ``a x1`` in the vector space with origin ``x0``."""
    for p in (x1, x2):
        if p.dim != x0.dim:
            raise DimensionMismatch(f"dimensions {p.dim} and {x0.dim} differ")
    a = x0.field(a)
    total = x0 + vec_add(x1 - x0, x2 - x0)
    scaled = x0 + vec_scale(a, x1 - x0)
    return total, scaled


def is_affine_subspace(points: Iterable[Sequence], field: Field) -> bool:
    """Exhaustively test whether a finite point set is an affine subspace of ``F^n``.

    Uses the difference-set criterion: ``{y - x0 : y in B}`` must be closed
    under addition and scalar multiplication.
    """
    if not field.is_finite:
        raise InfiniteField("affine-subspace test needs a finite field")
    pts = [AffinePoint.of(field, p) for p in points]
    if not pts:
        raise EmptySet("empty point set")
    x0 = pts[0]
    for p in pts:
        if p.dim != x0.dim:
            raise DimensionMismatch("points of different dimensions")
    diffs = {p - x0 for p in pts}
    for u in diffs:
        for c in field.elements():
            if vec_scale(c, u) not in diffs:
                return False
        for w in diffs:
            if vec_add(u, w) not in diffs:
                return False
    return True


@dataclass(frozen=True)
class AffineMap:
    """``phi(x) = image_base + linear (x - base)``; ``linear`` has one row per output coordinate."""

    linear: Matrix
    base: AffinePoint
    image_base: AffinePoint

    def __call__(self, x: AffinePoint) -> AffinePoint:
        return self.image_base + mat_vec(self.linear, x - self.base)

    def apply_linear(self, v: Sequence[FieldValue]) -> Vector:
        return mat_vec(self.linear, v)


def linear_part(
    phi: Callable[[AffinePoint], AffinePoint],
    x0: AffinePoint,
    samples: Iterable[AffinePoint] = (),
) -> AffineMap:
    """Recover the linear part of ``phi`` from ``L(v) = phi(x0 + v) - phi(x0)``.

    Columns come from the standard basis vectors.  The result is checked on
    every sample point; a mismatch raises :class:`NotAffine`.
    """
    field = x0.field
    image0 = phi(x0)
    cols = []
    for i in range(x0.dim):
        e = tuple(field.one if k == i else field.zero for k in range(x0.dim))
        cols.append(phi(x0 + e) - image0)
    linear = transpose(tuple(cols), nrows_if_empty=image0.dim)
    amap = AffineMap(linear, x0, image0)
    for x in samples:
        got = phi(x)
        expected = amap(x)
        if got != expected:
            raise NotAffine(x, expected, got)
    return amap


def all_points(field: Field, n: int) -> Iterable[AffinePoint]:
    """Every point of ``F^n`` for a finite field."""
    for coords in product(list(field.elements()), repeat=n):
        yield AffinePoint(field, coords)
