"""Dense exact linear algebra over a :class:`~projbundles.field.Field`.

Matrices are tuples of row tuples of ``FieldValue``.  Only what the sequence
and independence checks need: products, row reduction, rank, kernel.
"""

from __future__ import annotations

from typing import Sequence

from .field import Field, FieldValue

Matrix = tuple[tuple[FieldValue, ...], ...]
Vector = tuple[FieldValue, ...]


class DimensionMismatch(ValueError):
    pass


def matrix(field: Field, rows) -> Matrix:
    return tuple(tuple(field(x) for x in row) for row in rows)


def shape(m: Matrix, ncols: int | None = None) -> tuple[int, int]:
    """Row and column counts; ``ncols`` disambiguates a matrix with no rows."""
    if not m:
        return 0, ncols or 0
    return len(m), len(m[0])


def column(v: Sequence[FieldValue]) -> Matrix:
    return tuple((x,) for x in v)


def transpose(m: Matrix, nrows_if_empty: int = 0) -> Matrix:
    if not m:
        return ((),) * nrows_if_empty if nrows_if_empty else ()
    return tuple(zip(*m))


def mat_vec(m: Matrix, v: Sequence[FieldValue]) -> Vector:
    out = []
    for row in m:
        if len(row) != len(v):
            raise DimensionMismatch(f"row length {len(row)} vs vector length {len(v)}")
        acc = v[0].field.zero if v else None
        for a, b in zip(row, v):
            acc = acc + a * b
        out.append(acc)
    return tuple(out)


def mat_mul(a: Matrix, b: Matrix, field: Field) -> Matrix:
    """Product ``a @ b``; ``field`` supplies zeros when an inner dimension is empty."""
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch(f"inner dimensions {len(a[0])} and {len(b)} differ")
    ncols = len(b[0]) if b else 0
    return tuple(
        tuple(sum((row[t] * b[t][c] for t in range(len(b))), field.zero) for c in range(ncols))
        for row in a
    )


def is_zero(m: Matrix) -> bool:
    return all(not x for row in m for x in row)


def rref(m: Matrix) -> tuple[list[list[FieldValue]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in m]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel(m: Matrix, field: Field, ncols: int | None = None) -> list[Vector]:
    """A basis of ``{x : m x = 0}``."""
    _, n = shape(m, ncols)
    reduced, pivots = rref(m)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [field.zero] * n
        x[f] = field.one
        for row, pc in zip(reduced, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def column_span_equal(a: Matrix, b: Matrix) -> bool:
    """Whether the column spaces of two matrices with equal row count coincide."""
    ra, rb = rank(a), rank(b)
    if ra != rb:
        return False
    joined = tuple(tuple(x) + tuple(y) for x, y in zip(a, b))
    return rank(joined) == ra
