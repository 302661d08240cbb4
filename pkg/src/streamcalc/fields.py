"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields GF(p).

Rational scalars are plain ``fractions.Fraction`` values (always in lowest
terms with positive denominator).  Prime-field scalars are
:class:`PrimeFieldElement` residues.  A field descriptor object
(:data:`QQ` or a :class:`PrimeField`) supplies identities, coercion,
inversion and the text syntax used by matrices, files and the CLI.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FieldMismatch, FormatError

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")
_INTEGER_RE = re.compile(r"[+-]?\d+\Z")

# Witness set making Miller-Rabin deterministic for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _invmod(a: int, p: int) -> int:
    # extended Euclid; works uniformly for any prime size
    old_r, r = a % p, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise ZeroDivisionError("inversion of zero in prime field")
    return old_s % p


class Field:
    """Descriptor of a scalar field: identities, coercion, text syntax."""

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, value):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def is_negative(self, a) -> bool:
        """Whether ``a`` renders with a leading minus sign."""
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def spec(self) -> str:
        """The CLI/file syntax naming this field (``q`` or ``gf:p``)."""
        raise NotImplementedError


class Rationals(Field):
    """The field of arbitrary-precision rationals."""

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise FieldMismatch(f"cannot interpret {value!r} as a rational scalar")

    def inv(self, a):
        return 1 / self.coerce(a)

    def is_negative(self, a):
        return a < 0

    def parse(self, text):
        text = text.strip()
        if not _RATIONAL_RE.match(text):
            raise FormatError(f"bad rational scalar: {text!r}")
        num, slash, den = text.partition("/")
        if slash and int(den) == 0:
            raise FormatError(f"zero denominator in scalar: {text!r}")
        return Fraction(int(num), int(den)) if slash else Fraction(int(num))

    def format(self, a):
        return str(a)

    def spec(self):
        return "q"

    def __repr__(self):
        return "Rationals()"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")


QQ = Rationals()


class PrimeFieldElement:
    """A residue in GF(p), always reduced to [0, p)."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: "PrimeField"):
        self.value = value % field.modulus
        self.field = field

    def _lift(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.field != self.field:
                raise FieldMismatch(
                    f"GF({other.field.modulus}) value used in GF({self.field.modulus})"
                )
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.field)
        if isinstance(other, Fraction):
            raise FieldMismatch("rational scalar used in a prime field")
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value + other.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value - other.value, self.field)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value * other.value, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.field)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeFieldElement(pow(self.value, k, self.field.modulus), self.field)

    def inverse(self):
        return PrimeFieldElement(_invmod(self.value, self.field.modulus), self.field)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.field.modulus, self.value))

    def __repr__(self):
        return f"GF{self.field.modulus}({self.value})"

    def __str__(self):
        return str(self.value)


class PrimeField(Field):
    """GF(p) for a prime modulus, checked at construction."""

    def __init__(self, modulus: int):
        if not is_prime(modulus):
            raise FormatError(f"prime field modulus must be prime, got {modulus}")
        self.modulus = modulus

    def zero(self):
        return PrimeFieldElement(0, self)

    def one(self):
        return PrimeFieldElement(1, self)

    def from_int(self, n):
        return PrimeFieldElement(n, self)

    def coerce(self, value):
        if isinstance(value, PrimeFieldElement):
            if value.field != self:
                raise FieldMismatch(
                    f"GF({value.field.modulus}) value used in GF({self.modulus})"
                )
            return value
        if isinstance(value, int):
            return PrimeFieldElement(value, self)
        raise FieldMismatch(f"cannot interpret {value!r} in GF({self.modulus})")

    def inv(self, a):
        return self.coerce(a).inverse()

    def is_negative(self, a):
        return False

    def parse(self, text):
        text = text.strip()
        if not _INTEGER_RE.match(text):
            raise FormatError(f"bad GF({self.modulus}) scalar: {text!r}")
        return PrimeFieldElement(int(text), self)

    def format(self, a):
        return str(self.coerce(a).value)

    def spec(self):
        return f"gf:{self.modulus}"

    def __repr__(self):
        return f"PrimeField({self.modulus})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("PrimeField", self.modulus))


def field_from_spec(text: str) -> Field:
    """Resolve the CLI/file field syntax: ``q`` or ``gf:<p>``."""
    text = text.strip().lower()
    if text == "q":
        return QQ
    if text.startswith("gf:"):
        body = text[3:]
        if not body.isdigit():
            raise FormatError(f"bad field spec: {text!r}")
        return PrimeField(int(body))
    raise FormatError(f"bad field spec: {text!r} (use 'q' or 'gf:<prime>')")


def field_of(element) -> Field:
    """The field an element belongs to."""
    if isinstance(element, Fraction):
        return QQ
    if isinstance(element, PrimeFieldElement):
        return element.field
    raise FieldMismatch(f"not a field element: {element!r}")
