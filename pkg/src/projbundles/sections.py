"""Regular functions and global regular sections of ``O(e)``.

A section of degree ``e`` is a single global quotient ``h = N / D`` of forms
with ``deg N - deg D = e`` and ``D`` nowhere zero on ``F^{n+1} \\ {0}``.
Because ``h(lam v) = lam**e h(v)``, its chart-``j`` value ``h(x) / x_j**e``
is independent of the representative, and the chart values obey the
transition law of ``O(e)`` automatically.

For ``e = -d < 0`` the ``Sym^d(V)``-valued map of the section is
``h(v) v^d``; for ``e >= 0`` the section is determined by the scalar ``h``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .bundles import O1FiberElement, power_tensor, transition
from .field import Field, FieldValue, MixedFields, QQ
from .linalg import DimensionMismatch, rank
from .poly import DegreeMismatch, HomogPoly, PolySum, monomial_basis, parse_poly
from .projspace import OutsideChart, ProjPoint, as_representative, enumerate_proj, random_point


class DenominatorVanishes(ValueError):
    def __init__(self, witness, message: str = ""):
        super().__init__(message or f"denominator vanishes at {_fmt(witness)}")
        self.witness = witness


class UndecidedDenominator(ValueError):
    """No certificate could be produced and ``assume`` was not requested."""


class WrongDegree(ValueError):
    pass


# certificates


class CertKind(enum.Enum):
    EXHAUSTIVE_FINITE_FIELD = "ExhaustiveFiniteField"
    POSITIVE_DIAGONAL_EVEN_FORM = "PositiveDiagonalEvenForm"
    ASSUMED = "Assumed"


@dataclass(frozen=True)
class NonvanishingCertificate:
    kind: CertKind
    detail: str = ""

    @property
    def assumed(self) -> bool:
        """True when nonvanishing was taken on trust rather than proved."""
        return self.kind is CertKind.ASSUMED

    def __str__(self) -> str:
        return self.kind.value


@dataclass(frozen=True)
class Undecided:
    reason: str


@dataclass(frozen=True)
class VanishesAt:
    witness: ProjPoint


def is_positive_diagonal_even(D: HomogPoly) -> bool:
    """Over Q: every monomial a square, every coefficient positive, every pure power ``x_i^deg`` present.

    Such a form is a sum of nonnegative terms on ``Q^{n+1}`` and the pure power
    of any nonzero coordinate is strictly positive, so it has no nonzero root.
    """
    if D.field.p is not None or D.is_zero() or D.degree % 2:
        return False
    for m, c in D.terms.items():
        if c.value <= 0 or any(e % 2 for e in m):
            return False
    for i in range(D.nvars):
        pure = tuple(D.degree if k == i else 0 for k in range(D.nvars))
        if pure not in D.terms:
            return False
    return True


def certify_nonvanishing(D: HomogPoly, field: Field | None = None) -> NonvanishingCertificate | Undecided | VanishesAt:
    """Decide whether ``D`` has a nonzero root over ``field``.

    Prime fields are scanned exhaustively over ``P^n(F_p)``; over Q only the
    positive-diagonal-even pattern (up to an overall sign) is recognised.
    """
    field = field or D.field
    if field != D.field:
        raise MixedFields(f"form over {D.field} certified over {field}")
    if D.is_zero():
        raise ValueError("the zero form vanishes identically")
    n = D.nvars - 1
    if field.is_finite:
        if D.degree == 0:
            return NonvanishingCertificate(CertKind.EXHAUSTIVE_FINITE_FIELD, "nonzero constant")
        for P in enumerate_proj(field, n):
            if not D(P.coords):
                return VanishesAt(P)
        return NonvanishingCertificate(CertKind.EXHAUSTIVE_FINITE_FIELD, f"scanned P^{n}(F_{field.p})")
    if is_positive_diagonal_even(D):
        return NonvanishingCertificate(CertKind.POSITIVE_DIAGONAL_EVEN_FORM)
    if is_positive_diagonal_even(-D):
        return NonvanishingCertificate(CertKind.POSITIVE_DIAGONAL_EVEN_FORM, "negated")
    # cheap search for a witness among coordinate points and small vectors
    for P in _small_points(field, n):
        if not D(P.coords):
            return VanishesAt(P)
    return Undecided("not a positive diagonal even form over Q")


def _small_points(field: Field, n: int) -> Iterable[ProjPoint]:
    """Canonical points with small integer entries, in the same pivot order as ``enumerate_proj``."""
    vals = [field(k) for k in (0, 1, -1, 2, -2)]
    zero, one = field.zero, field.one
    for pivot in range(n + 1):
        for tail in product(vals, repeat=n - pivot):
            yield ProjPoint(field, (zero,) * pivot + (one,) + tail)


# regular maps


@dataclass(frozen=True)
class RationalMap:
    """``f = f_N / f_D`` on a vector space (``affine``) or on ``P(V)`` (``projective``)."""

    numerator: PolySum
    denominator: PolySum
    kind: str = "affine"

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if isinstance(num, HomogPoly):
            num = PolySum.of(num)
        if isinstance(den, HomogPoly):
            den = PolySum.of(den)
        if num.field != den.field:
            raise MixedFields("numerator and denominator over different fields")
        if num.nvars != den.nvars:
            raise DimensionMismatch("numerator and denominator in different variable counts")
        if den.is_zero():
            raise ValueError("denominator is identically zero")
        if self.kind not in ("affine", "projective"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.kind == "projective":
            if not (num.is_homogeneous() and den.is_homogeneous()):
                raise DegreeMismatch("projective regular maps need homogeneous numerator and denominator")
            if not num.is_zero() and num.degrees != den.degrees:
                raise DegreeMismatch("numerator and denominator must have equal degree")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def parse(cls, numerator: str, denominator: str, field: Field, nvars: int, kind: str = "affine") -> "RationalMap":
        return cls(parse_poly(numerator, field, nvars), parse_poly(denominator, field, nvars), kind)

    @property
    def field(self) -> Field:
        return self.numerator.field

    def __call__(self, at) -> FieldValue:
        return eval_regular(self, at)


def eval_regular(f: RationalMap, at) -> FieldValue:
    """Value of ``f`` at a vector (affine) or at a point or representative (projective)."""
    if f.kind == "projective":
        _, v = as_representative(at, f.field)
    else:
        v = tuple(f.field(c) for c in (at.coords if hasattr(at, "coords") else at))
    den = f.denominator(v)
    if not den:
        raise DenominatorVanishes(v)
    return f.numerator(v) / den


# sections


@dataclass(frozen=True)
class RationalSection:
    """A regular section of ``O(degree)`` given by ``h = N / D``."""

    degree: int
    N: HomogPoly
    D: HomogPoly
    cert: NonvanishingCertificate

    def __post_init__(self):
        if self.N.field != self.D.field:
            raise MixedFields("N and D over different fields")
        if self.N.nvars != self.D.nvars:
            raise DimensionMismatch("N and D in different variable counts")
        if self.D.is_zero():
            raise ValueError("denominator is identically zero")
        # the zero form lies in every degree, so a zero numerator fits any e
        if not self.N.is_zero() and self.N.degree - self.D.degree != self.degree:
            raise DegreeMismatch(
                f"deg N - deg D = {self.N.degree - self.D.degree} does not match degree {self.degree}"
            )

    @classmethod
    def build(cls, degree: int, N: HomogPoly, D: HomogPoly, cert=None, assume: bool = False) -> "RationalSection":
        """Construct, certifying ``D`` unless a certificate is supplied."""
        if cert is None:
            verdict = certify_nonvanishing(D)
            if isinstance(verdict, VanishesAt):
                raise DenominatorVanishes(verdict.witness.coords)
            if isinstance(verdict, Undecided):
                if not assume:
                    raise UndecidedDenominator(f"cannot certify {D}: {verdict.reason}")
                verdict = NonvanishingCertificate(CertKind.ASSUMED, verdict.reason)
            cert = verdict
        return cls(degree, N, D, cert)

    @classmethod
    def zero(cls, field: Field, nvars: int, degree: int) -> "RationalSection":
        return cls.build(degree, HomogPoly.zero(field, nvars, max(degree, 0)), HomogPoly.constant(field, nvars))

    @property
    def field(self) -> Field:
        return self.N.field

    @property
    def nvars(self) -> int:
        return self.N.nvars

    def is_zero(self) -> bool:
        return self.N.is_zero()

    def h(self, v: Sequence) -> FieldValue:
        """The homogeneous rational function ``N(v) / D(v)`` (degree ``e``) at a vector."""
        den = self.D(v)
        if not den:
            raise DenominatorVanishes(v)
        return self.N(v) / den

    def local_rep(self, j: int, P) -> FieldValue:
        return local_rep(self, j, P)

    def hat(self, P):
        """The section's defining map: ``h(v) v^d`` in ``Sym^d(V)`` for ``e = -d < 0``, else ``h(v)``.

        For ``e > 0`` this depends on the representative passed in.
        """
        _, v = as_representative(P, self.field)
        hv = self.h(v)
        if self.degree < 0:
            return power_tensor(v, -self.degree).scale(hv)
        return hv

    def o1_value(self, P: ProjPoint) -> O1FiberElement:
        """For ``e = 1``: the fibre element ``[h(v) (+) v]``."""
        if self.degree != 1:
            raise WrongDegree("fibre elements [a (+) v] describe O(1) only")
        return O1FiberElement.from_representative(self.h(P.coords), P.coords)

    def __str__(self) -> str:
        return format_section(self)


def local_rep(s: RationalSection, j: int, P) -> FieldValue:
    """Chart-``j`` value ``h(x) / x_j**e`` of the section at a point or representative."""
    _, x = as_representative(P, s.field)
    if not x[j]:
        raise OutsideChart(f"{_fmt(x)} is not in chart {j}")
    return s.h(x) / x[j] ** s.degree


def transformation_law_holds(s: RationalSection, j: int, k: int, P) -> bool:
    return local_rep(s, k, P) == transition(s.degree, j, k, P) * local_rep(s, j, P)


def section_from_form(A: HomogPoly) -> RationalSection:
    """The section of ``O(d)`` whose value at ``[v]`` is ``[A(v) (+) v^d]``."""
    return RationalSection.build(A.degree, A, HomogPoly.constant(A.field, A.nvars))


def mobius_section(k: int, p: HomogPoly) -> RationalSection:
    """Section of ``O(-1)`` on the projective line with map ``v * p(v) / (a0^{2k} + a1^{2k})``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if p.nvars != 2:
        raise DimensionMismatch("the Mobius construction lives on the projective line")
    if p.degree != 2 * k - 1 and not p.is_zero():
        raise DegreeMismatch(f"p must have degree {2 * k - 1}, got {p.degree}")
    F = p.field
    D = HomogPoly(F, 2, 2 * k, {(2 * k, 0): 1, (0, 2 * k): 1})
    return RationalSection.build(-1, p, D)


def tensor_power_section(s: RationalSection, d: int) -> RationalSection:
    """``s^d`` for a section of ``O(-1)``: a section of ``O(-d)`` with ``h`` raised to the ``d``-th power."""
    if s.degree != -1:
        raise WrongDegree(f"tensor powers are taken of O(-1) sections, got degree {s.degree}")
    if d < 1:
        raise ValueError("tensor power must be positive")
    if d == 1:
        return s
    N = s.N**d if not s.N.is_zero() else s.N
    return RationalSection(-d, N, s.D**d, s.cert)


def section_basis(n: int, d: int, field: Field = QQ) -> list[RationalSection]:
    """The monomial sections ``sigma_m`` of ``O(d)`` on ``P^n``, grlex order."""
    if d < 0:
        raise ValueError("polynomial section basis needs d >= 0")
    one = HomogPoly.constant(field, n + 1)
    cert = certify_nonvanishing(one)
    return [RationalSection(d, HomogPoly.monomial(field, m), one, cert) for m in monomial_basis(n + 1, d)]


def coefficient_rank(sections: Sequence[RationalSection]) -> int:
    """Rank of the matrix of numerator coefficient vectors (sections sharing ``D = 1``)."""
    if not sections:
        return 0
    return rank(tuple(s.N.coefficients() for s in sections))


def nonzero_witness(s: RationalSection, points: Iterable[ProjPoint]) -> ProjPoint | None:
    """First point where some chart value of ``s`` is nonzero."""
    for P in points:
        if s.D(P.coords) and s.N(P.coords):
            return P
    return None


def random_points(field: Field, n: int, count: int, seed: int = 0) -> list[ProjPoint]:
    rng = random.Random(seed)
    return [random_point(field, n, rng) for _ in range(count)]


# text form


def format_section(s: RationalSection) -> str:
    return f"degree={s.degree}; N={s.N}; D={s.D}"


def parse_section(text: str, field: Field, nvars: int, assume: bool = False) -> RationalSection:
    """Parse ``degree=<e>; N=<poly>; D=<poly>``."""
    fields: dict[str, str] = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        key, sep, value = part.partition("=")
        if not sep:
            raise ValueError(f"section field {part.strip()!r} lacks '='")
        fields[key.strip()] = value.strip()
    missing = {"degree", "N", "D"} - fields.keys()
    if missing:
        raise ValueError(f"section text lacks {', '.join(sorted(missing))}")
    e = int(fields["degree"])
    D = parse_poly(fields["D"], field, nvars).as_homogeneous()
    num = parse_poly(fields["N"], field, nvars)
    N = num.as_homogeneous(None if not num.is_zero() else max(D.degree + e, 0))
    return RationalSection.build(e, N, D, assume=assume)


def _fmt(v) -> str:
    return "(" + ", ".join(str(c) for c in v) + ")"
