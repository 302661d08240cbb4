"""Rational streams in closed form: reduced quotients p/q with q(0) = 1.

A rational stream is the quotient of two polynomial streams whose denominator
is invertible at 0.  Normalizing the denominator's constant term to 1 (always
possible) makes the representation unique, so equality is structural, the
coefficient expansion is a direct linear recurrence, and the stream derivative
has a closed form that keeps the denominator fixed.
"""

from __future__ import annotations

from typing import List

from .errors import FieldMismatch, NotInvertibleAtZero
from .fields import Field
from .poly import Polynomial, RationalFunction, format_terms


class RationalStream:
    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if num.field != den.field:
            raise FieldMismatch("numerator and denominator over different fields")
        field = num.field
        if den.constant_term == field.zero():
            raise NotInvertibleAtZero(
                "denominator has initial value 0 and therefore no inverse"
            )
        if num.is_zero:
            num, den = num, Polynomial.one(field)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            unit = field.inv(den.constant_term)
            num, den = num.scale(unit), den.scale(unit)
        self.num = num
        self.den = den

    @property
    def field(self) -> Field:
        return self.num.field

    @classmethod
    def constant(cls, field, c):
        return cls(Polynomial.constant(field, c), Polynomial.one(field))

    @classmethod
    def zero(cls, field):
        return cls(Polynomial.zero(field), Polynomial.one(field))

    @classmethod
    def one(cls, field):
        return cls.constant(field, field.one())

    @classmethod
    def x(cls, field):
        return cls(Polynomial.x(field), Polynomial.one(field))

    @classmethod
    def from_polynomial(cls, p: Polynomial):
        return cls(p, Polynomial.one(p.field))

    @classmethod
    def from_fraction(cls, rf: RationalFunction):
        """Reinterpret an element of k(X); requires den(0) != 0."""
        return cls(rf.num, rf.den)

    def as_fraction(self) -> RationalFunction:
        return RationalFunction(self.num, self.den)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _check(self, other: "RationalStream"):
        if other.field != self.field:
            raise FieldMismatch("streams over different fields")

    def __add__(self, other):
        self._check(other)
        return RationalStream(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other):
        self._check(other)
        return RationalStream(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return RationalStream(-self.num, self.den)

    def __mul__(self, other):
        self._check(other)
        return RationalStream(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        self._check(other)
        if other.num.constant_term == self.field.zero():
            raise NotInvertibleAtZero(
                "divisor has initial value 0 and therefore no inverse"
            )
        return RationalStream(self.num * other.den, self.den * other.num)

    def inverse(self):
        return RationalStream.one(self.field) / self

    def scale(self, c):
        return RationalStream(self.num.scale(c), self.den)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative stream power; use inverse() explicitly")
        result = RationalStream.one(self.field)
        for _ in range(k):
            result = result * self
        return result

    def initial_value(self):
        """The head coefficient; num(0) since the denominator is 1 at 0."""
        return self.num.constant_term / self.den.constant_term

    def derivative(self) -> "RationalStream":
        """Stream derivative (tail), computed symbolically.

        Subtracting the initial value kills the numerator's constant term, so
        the difference is X times a polynomial; dividing that X out yields the
        derivative over the *same* denominator.
        """
        shifted = self.num - self.den.scale(self.initial_value())
        return RationalStream(shifted.shifted_down(), self.den)

    def iterated_derivative(self, k: int) -> "RationalStream":
        s = self
        for _ in range(k):
            s = s.derivative()
        return s

    def expand(self, n: int) -> List:
        """First ``n`` coefficients via the recurrence induced by the denominator."""
        zero = self.field.zero()
        den = self.den.coeffs
        out: List = []
        for i in range(n):
            acc = self.num.coefficient(i)
            for j in range(1, min(i, len(den) - 1) + 1):
                acc = acc - den[j] * out[i - j]
            out.append(acc)
        return out

    def coefficient(self, i: int):
        return self.expand(i + 1)[i]

    def __eq__(self, other):
        if not isinstance(other, RationalStream):
            return NotImplemented
        # reduced form with den(0) = 1 is unique, so cross-multiplication
        # (num * other.den == other.num * den) reduces to structural equality
        return (
            self.field == other.field
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalStream({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == Polynomial.one(self.field):
            return format_terms(self.num)
        return f"({format_terms(self.num)})/({format_terms(self.den)})"


def valuation(s: RationalStream) -> int:
    """Index of the first nonzero coefficient; -1 for the zero stream.

    Equals the X-adic valuation of the numerator because den(0) = 1.
    """
    if s.is_zero:
        return -1
    zero = s.field.zero()
    for i, c in enumerate(s.num.coeffs):
        if c != zero:
            return i
    raise AssertionError("nonzero numerator without nonzero coefficient")
