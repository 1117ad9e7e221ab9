"""Exact scalars over the rationals and prime fields.

Every other module is generic over a :class:`Field`.  Elements are
:class:`FieldValue` instances; two values only combine when they live in the
same field.  Plain Python ``int`` operands are accepted everywhere and mapped
through the canonical ring map ``Z -> F``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, Union


class FieldError(ValueError):
    """Base class for field-level errors."""


class MixedFields(FieldError):
    """Raised when values from two different fields are combined."""


class InfiniteField(FieldError):
    """Raised when an operation needs a finite field but got the rationals."""


class DivisionByZero(ZeroDivisionError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Either the rationals (``p is None``) or the prime field of order ``p``."""

    __slots__ = ("p", "_zero", "_one")

    def __init__(self, p: int | None = None):
        if p is not None:
            if not isinstance(p, int) or not is_prime(p):
                raise FieldError(f"prime field order must be a prime, got {p!r}")
        self.p = p
        self._zero = FieldValue(self, 0 if p else Fraction(0))
        self._one = FieldValue(self, 1 if p else Fraction(1))

    @classmethod
    def rationals(cls) -> "Field":
        return QQ

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse the textual descriptor ``Q`` or ``Fp:<p>``."""
        text = text.strip()
        if text == "Q":
            return QQ
        if text.startswith("Fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise FieldError(f"bad field descriptor {text!r}") from None
            return cls(p)
        raise FieldError(f"bad field descriptor {text!r}; expected 'Q' or 'Fp:<p>'")

    # identity

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Field", self.p))

    def __repr__(self) -> str:
        return "Field.rationals()" if self.p is None else f"Field.prime({self.p})"

    def __str__(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return self.p or 0

    @property
    def order(self) -> int:
        if self.p is None:
            raise InfiniteField("the rationals have no finite order")
        return self.p

    # element construction

    @property
    def zero(self) -> "FieldValue":
        return self._zero

    @property
    def one(self) -> "FieldValue":
        return self._one

    def __call__(self, x: "Scalar | str") -> "FieldValue":
        if isinstance(x, FieldValue):
            if x.field != self:
                raise MixedFields(f"cannot reinterpret an element of {x.field} in {self}")
            return x
        if isinstance(x, str):
            return self.parse_element(x)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return FieldValue(self, x % self.p if self.p else Fraction(x))
        if isinstance(x, Fraction):
            if self.p is None:
                return FieldValue(self, x)
            den = x.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"denominator of {x} vanishes in {self}")
            return FieldValue(self, x.numerator * pow(den, -1, self.p) % self.p)
        raise TypeError(f"cannot convert {type(x).__name__} to a field element")

    def parse_element(self, text: str) -> "FieldValue":
        """Parse an integer or ``a/b`` literal, with optional sign."""
        num, _, den = text.strip().partition("/")
        try:
            num_i, den_i = int(num), int(den) if den else 1
        except ValueError:
            raise FieldError(f"bad field element literal {text!r}") from None
        if den_i == 0:
            raise DivisionByZero(f"zero denominator in literal {text!r}")
        return self(Fraction(num_i, den_i))

    def elements(self) -> Iterator["FieldValue"]:
        """Yield every element of a prime field once, in residue order."""
        if self.p is None:
            raise InfiniteField("cannot enumerate the rationals")
        for r in range(self.p):
            yield FieldValue(self, r)

    def nonzero_elements(self) -> Iterator["FieldValue"]:
        for a in self.elements():
            if a:
                yield a

    def random_element(self, rng: random.Random, height: int = 12, nonzero: bool = False) -> "FieldValue":
        """Draw a random element; rationals have numerator and denominator bounded by ``height``."""
        while True:
            if self.p is None:
                a = self(Fraction(rng.randint(-height, height), rng.randint(1, height)))
            else:
                a = FieldValue(self, rng.randrange(self.p))
            if a or not nonzero:
                return a


Scalar = Union[int, Fraction, "FieldValue"]


class FieldValue:
    """An immutable element of a :class:`Field`.

    The payload is a reduced :class:`~fractions.Fraction` over the rationals
    and a residue in ``[0, p)`` over a prime field.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int | Fraction):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldValue is immutable")

    def _coerce(self, other) -> "FieldValue":
        if isinstance(other, FieldValue):
            if other.field is not self.field and other.field != self.field:
                raise MixedFields(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def _new(self, value) -> "FieldValue":
        p = self.field.p
        return FieldValue(self.field, value % p if p else value)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o.value - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value * o.value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __pos__(self):
        return self

    def inverse(self) -> "FieldValue":
        if not self.value:
            raise DivisionByZero(f"zero has no inverse in {self.field}")
        p = self.field.p
        if p:
            return FieldValue(self.field, pow(self.value, -1, p))
        return FieldValue(self.field, 1 / self.value)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        p = self.field.p
        if p:
            return FieldValue(self.field, pow(self.value, e, p))
        return FieldValue(self.field, self.value**e)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldValue):
            if other.field != self.field:
                raise MixedFields(f"cannot compare elements of {self.field} and {other.field}")
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field(other).value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.field!s}({self})"

    def __str__(self) -> str:
        return str(self.value)

    def to_json(self) -> str:
        return str(self.value)


QQ = Field()


def zero_vector(field: Field, n: int) -> tuple[FieldValue, ...]:
    return (field.zero,) * n


def as_vector(field: Field, coords) -> tuple[FieldValue, ...]:
    """Convert a sequence of scalars (or literals) into a tuple of field elements."""
    return tuple(field(c) for c in coords)


def field_of(values) -> Field:
    """The common field of a non-empty sequence of ``FieldValue``."""
    fields = {v.field for v in values if isinstance(v, FieldValue)}
    if len(fields) > 1:
        raise MixedFields("sequence mixes elements of different fields")
    if not fields:
        raise FieldError("cannot infer a field from plain integers")
    return fields.pop()
