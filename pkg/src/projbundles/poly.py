"""Sparse homogeneous forms in ``x0..xn`` and their finite sums.

A :class:`HomogPoly` stores a mapping ``exponent tuple -> nonzero coefficient``
together with an explicit degree, so the zero form still knows its degree.
Monomials are ordered graded-lexicographically, highest first; this order
fixes printing, equality of coefficient vectors, and Veronese coordinates.

The same representation serves forms on ``V`` and on ``V*``: a vector
``v`` of ``Sym^d(V)`` such as ``v^d`` is the form ``(sum v_i x_i)^d``, paired
with functionals by evaluation.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .field import Field, FieldValue, MixedFields
from .linalg import DimensionMismatch

Monomial = tuple[int, ...]


class DegreeMismatch(ValueError):
    pass


class PolySyntaxError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}" + (f" in {text!r}" if text else ""))
        self.pos = pos
        self.text = text


class UnknownVariable(ValueError):
    def __init__(self, index: int, nvars: int, pos: int):
        super().__init__(f"variable x{index} at position {pos} is outside x0..x{nvars - 1}")
        self.index = index
        self.pos = pos


def grlex_key(m: Monomial) -> tuple:
    """Sort key placing monomials in descending graded-lex order."""
    return (-sum(m),) + tuple(-e for e in m)


@lru_cache(maxsize=None)
def monomial_basis(nvars: int, degree: int) -> tuple[Monomial, ...]:
    """All exponent tuples of total ``degree`` in ``nvars`` variables, grlex-descending.

    >>> monomial_basis(2, 3)
    ((3, 0), (2, 1), (1, 2), (0, 3))
    """
    if nvars < 1 or degree < 0:
        raise ValueError("need nvars >= 1 and degree >= 0")

    def rec(k: int, d: int) -> Iterator[Monomial]:
        if k == 1:
            yield (d,)
            return
        for first in range(d, -1, -1):
            for rest in rec(k - 1, d - first):
                yield (first,) + rest

    return tuple(rec(nvars, degree))


def basis_size(nvars: int, degree: int) -> int:
    return comb(nvars - 1 + degree, nvars - 1)


def _power_table(v: Sequence[FieldValue], degree: int) -> list[list[FieldValue]]:
    table = []
    for x in v:
        row = [x.field.one]
        for _ in range(degree):
            row.append(row[-1] * x)
        table.append(row)
    return table


class HomogPoly:
    """A homogeneous form of fixed degree over a field.

    Construct with a dict of exponent tuples to coefficients; zero
    coefficients are dropped and every monomial must have total ``degree``.
    """

    __slots__ = ("field", "nvars", "degree", "terms", "_hash")

    def __init__(self, field: Field, nvars: int, degree: int, terms: Mapping[Monomial, object] | None = None):
        if nvars < 1:
            raise ValueError("a form needs at least one variable")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Monomial, FieldValue] = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != nvars or any(e < 0 for e in m):
                raise DimensionMismatch(f"exponent {m} does not fit {nvars} variables")
            if sum(m) != degree:
                raise DegreeMismatch(f"monomial {m} has degree {sum(m)}, expected {degree}")
            c = field(c)
            if c:
                clean[m] = c
        self.field = field
        self.nvars = nvars
        self.degree = degree
        self.terms = dict(sorted(clean.items(), key=lambda t: grlex_key(t[0])))
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, field: Field, nvars: int, degree: int = 0) -> "HomogPoly":
        return cls(field, nvars, degree)

    @classmethod
    def constant(cls, field: Field, nvars: int, c=1) -> "HomogPoly":
        return cls(field, nvars, 0, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field: Field, nvars: int, i: int) -> "HomogPoly":
        return cls.monomial(field, tuple(int(k == i) for k in range(nvars)))

    @classmethod
    def monomial(cls, field: Field, exponents: Sequence[int], coeff=1) -> "HomogPoly":
        exponents = tuple(exponents)
        return cls(field, len(exponents), sum(exponents), {exponents: coeff})

    @classmethod
    def from_coefficients(cls, field: Field, nvars: int, degree: int, coeffs: Sequence) -> "HomogPoly":
        basis = monomial_basis(nvars, degree)
        if len(coeffs) != len(basis):
            raise DimensionMismatch(f"expected {len(basis)} coefficients, got {len(coeffs)}")
        return cls(field, nvars, degree, dict(zip(basis, coeffs)))

    @classmethod
    def linear_form(cls, field: Field, coeffs: Sequence) -> "HomogPoly":
        """``sum c_i x_i``; also the degree-1 tensor of a vector in ``V``."""
        n = len(coeffs)
        return cls(field, n, 1, {tuple(int(k == i) for k in range(n)): c for i, c in enumerate(coeffs)})

    # structure

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Sequence[int]) -> FieldValue:
        return self.terms.get(tuple(m), self.field.zero)

    def coefficients(self) -> tuple[FieldValue, ...]:
        """Coefficient vector on :func:`monomial_basis` (grlex order)."""
        return tuple(self.coefficient(m) for m in monomial_basis(self.nvars, self.degree))

    def _check(self, other: "HomogPoly") -> None:
        if other.field != self.field:
            raise MixedFields(f"forms over {self.field} and {other.field}")
        if other.nvars != self.nvars:
            raise DimensionMismatch(f"forms in {self.nvars} and {other.nvars} variables")

    # evaluation

    def __call__(self, v: Sequence) -> FieldValue:
        """Evaluate the polynomial function ``v -> A(v, ..., v)``."""
        if len(v) != self.nvars:
            raise DimensionMismatch(f"point has {len(v)} coordinates, form has {self.nvars} variables")
        v = [self.field(x) for x in v]
        powers = _power_table(v, self.degree)
        acc = self.field.zero
        for m, c in self.terms.items():
            t = c
            for i, e in enumerate(m):
                if e:
                    t = t * powers[i][e]
            acc = acc + t
        return acc

    def homogeneity_holds(self, v: Sequence, lam) -> bool:
        """Whether ``f(lam v) == lam**d f(v)`` at this point."""
        lam = self.field(lam)
        if not lam:
            raise ValueError("scaling factor must be nonzero")
        return self([lam * self.field(x) for x in v]) == lam**self.degree * self(v)

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        self._check(other)
        if other.degree != self.degree:
            raise DegreeMismatch("sum of forms of different degrees is not homogeneous; use PolySum")
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return HomogPoly(self.field, self.nvars, self.degree, terms)

    def __neg__(self):
        return HomogPoly(self.field, self.nvars, self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HomogPoly":
        c = self.field(c)
        return HomogPoly(self.field, self.nvars, self.degree, {m: c * a for m, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldValue)):
            return self.scale(other)
        if not isinstance(other, HomogPoly):
            return NotImplemented
        self._check(other)
        terms: dict[Monomial, FieldValue] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms[m] + c1 * c2 if m in terms else c1 * c2
        return HomogPoly(self.field, self.nvars, self.degree + other.degree, terms)

    def __rmul__(self, other):
        if isinstance(other, HomogPoly):
            return NotImplemented
        return self.__mul__(other)

    def __pow__(self, k: int) -> "HomogPoly":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = HomogPoly.constant(self.field, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # identity

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.nvars == other.nvars
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.nvars, self.degree, tuple(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"HomogPoly({self}; degree={self.degree}, nvars={self.nvars}, field={self.field})"

    def __str__(self) -> str:
        return format_terms(self.field, self.terms.items())


def _format_monomial(m: Monomial) -> str:
    return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(m) if e)


def format_terms(field: Field, terms: Iterable[tuple[Monomial, FieldValue]]) -> str:
    """Canonical text for a sequence of (monomial, coefficient) pairs."""
    parts: list[str] = []
    for m, c in terms:
        negative = field.p is None and c.value < 0
        mag = -c if negative else c
        mono = _format_monomial(m)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts) or "0"


class PolySum:
    """A general polynomial, kept as its nonzero homogeneous components."""

    __slots__ = ("field", "nvars", "components")

    def __init__(self, field: Field, nvars: int, components: Iterable[HomogPoly] = ()):
        by_degree: dict[int, HomogPoly] = {}
        for c in components:
            if c.field != field:
                raise MixedFields(f"component over {c.field} in a sum over {field}")
            if c.nvars != nvars:
                raise DimensionMismatch(f"component in {c.nvars} variables in a sum over {nvars}")
            by_degree[c.degree] = by_degree[c.degree] + c if c.degree in by_degree else c
        self.field = field
        self.nvars = nvars
        self.components = tuple(by_degree[d] for d in sorted(by_degree) if by_degree[d])

    @classmethod
    def of(cls, p: HomogPoly) -> "PolySum":
        return cls(p.field, p.nvars, [p])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(c.degree for c in self.components)

    def is_zero(self) -> bool:
        return not self.components

    def is_homogeneous(self) -> bool:
        return len(self.components) <= 1

    def component(self, degree: int) -> HomogPoly:
        for c in self.components:
            if c.degree == degree:
                return c
        return HomogPoly.zero(self.field, self.nvars, degree)

    def as_homogeneous(self, degree: int | None = None) -> HomogPoly:
        """The single component; the zero sum becomes the zero form of ``degree``."""
        if len(self.components) > 1:
            raise DegreeMismatch(f"polynomial has components of degrees {self.degrees}")
        if not self.components:
            return HomogPoly.zero(self.field, self.nvars, degree or 0)
        c = self.components[0]
        if degree is not None and c.degree != degree:
            raise DegreeMismatch(f"expected degree {degree}, got {c.degree}")
        return c

    def __call__(self, v: Sequence) -> FieldValue:
        if len(v) != self.nvars:
            raise DimensionMismatch(f"point has {len(v)} coordinates, polynomial has {self.nvars} variables")
        return sum((c(v) for c in self.components), self.field.zero)

    def __add__(self, other):
        if isinstance(other, HomogPoly):
            other = PolySum.of(other)
        if not isinstance(other, PolySum):
            return NotImplemented
        return PolySum(self.field, self.nvars, self.components + other.components)

    __radd__ = __add__

    def __neg__(self):
        return PolySum(self.field, self.nvars, [-c for c in self.components])

    def __sub__(self, other):
        if isinstance(other, HomogPoly):
            other = PolySum.of(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomogPoly):
            other = PolySum.of(other)
        if not isinstance(other, PolySum):
            return NotImplemented
        return PolySum(self.field, self.nvars, [a * b for a in self.components for b in other.components])

    def __eq__(self, other) -> bool:
        if isinstance(other, HomogPoly):
            other = PolySum.of(other)
        if not isinstance(other, PolySum):
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.field, self.nvars, self.components))

    def __repr__(self) -> str:
        return f"PolySum({self}; nvars={self.nvars}, field={self.field})"

    def __str__(self) -> str:
        terms = [t for c in reversed(self.components) for t in c.terms.items()]
        return format_terms(self.field, terms)


# text parsing

_TOKEN = re.compile(r"\s*(?:(?P<var>x(?P<idx>\d+))|(?P<num>\d+)|(?P<op>[-+*/^])|(?P<bad>\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group("var"):
            tokens.append(("var", m.group("idx"), m.start("var")))
        elif m.group("num"):
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.group("op"):
            tokens.append((m.group("op"), m.group("op"), m.start("op")))
        elif m.group("bad"):
            raise PolySyntaxError(f"unexpected character {m.group('bad')!r}", m.start("bad"), text)
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the token list.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := NUM ['/' NUM] | VAR ['^' NUM]
    """

    def __init__(self, text: str, field: Field, nvars: int | None):
        self.text = text
        self.field = field
        self.nvars = nvars
        self.tokens = _tokenize(text)
        self.i = 0
        self.max_index = -1

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind}, found {what}", tok[2], self.text)
        self.i += 1
        return tok

    def expr(self) -> list[tuple[FieldValue, dict[int, int]]]:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take(self.peek()[0])[0] == "-" else 1
        terms = [self.term(sign)]
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take(self.peek()[0])[0] == "-" else 1
            terms.append(self.term(sign))
        self.take("end")
        return terms

    def term(self, sign: int) -> tuple[FieldValue, dict[int, int]]:
        coeff = self.field(sign)
        exps: dict[int, int] = {}
        coeff = self.factor(coeff, exps)
        while self.peek()[0] == "*":
            self.take("*")
            coeff = self.factor(coeff, exps)
        return coeff, exps

    def factor(self, coeff: FieldValue, exps: dict[int, int]) -> FieldValue:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take("num")
            num = int(val)
            if self.peek()[0] == "/":
                self.take("/")
                _, den, dpos = self.take("num")
                if int(den) == 0:
                    raise PolySyntaxError("zero denominator", dpos, self.text)
                return coeff * self.field(num) / self.field(int(den))
            return coeff * self.field(num)
        if kind == "var":
            self.take("var")
            idx = int(val)
            if self.nvars is not None and idx >= self.nvars:
                raise UnknownVariable(idx, self.nvars, pos)
            self.max_index = max(self.max_index, idx)
            e = 1
            if self.peek()[0] == "^":
                self.take("^")
                e = int(self.take("num")[1])
            exps[idx] = exps.get(idx, 0) + e
            return coeff
        what = "end of input" if kind == "end" else repr(val)
        raise PolySyntaxError(f"expected a coefficient or variable, found {what}", pos, self.text)


def homogeneity_check(P: HomogPoly, v: Sequence, lam) -> bool:
    """``P(lam v) == lam**deg P * P(v)``; always true for a well-formed form."""
    return P.homogeneity_holds(v, lam)


def evaluate(P: HomogPoly | PolySum, v: Sequence) -> FieldValue:
    return P(v)


def parse_poly(text: str, field: Field, nvars: int | None = None) -> PolySum:
    """Parse text such as ``1/2*x0^2*x1 - x2^3`` into a :class:`PolySum`.

    When ``nvars`` is omitted it is one more than the largest variable index.
    Raises :class:`PolySyntaxError` or :class:`UnknownVariable`.
    """
    parser = _Parser(text, field, nvars)
    raw = parser.expr()
    n = nvars if nvars is not None else max(parser.max_index + 1, 1)
    comps: dict[int, dict[Monomial, FieldValue]] = {}
    for coeff, exps in raw:
        m = tuple(exps.get(i, 0) for i in range(n))
        bucket = comps.setdefault(sum(m), {})
        bucket[m] = bucket[m] + coeff if m in bucket else coeff
    return PolySum(field, n, [HomogPoly(field, n, d, t) for d, t in comps.items()])


def parse_form(text: str, field: Field, nvars: int | None = None, degree: int | None = None) -> HomogPoly:
    """Parse text that must be homogeneous (or zero, of the given ``degree``)."""
    return parse_poly(text, field, nvars).as_homogeneous(degree)
