"""Exact coefficient fields: the rationals and odd prime fields F_p.

A field object knows how to operate on raw coefficient values.  Rational
coefficients are `fractions.Fraction` (always reduced, positive
denominator); F_p coefficients are plain ints in [0, p).  Every polynomial
carries exactly one field tag, and mixing tags raises FieldMismatchError.
"""

from __future__ import annotations

from fractions import Fraction


class FieldMismatchError(ValueError):
    """Operands carry different coefficient fields."""


def is_prime(n: int) -> bool:
    """Trial division; the moduli used here are tiny."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class RationalField:
    """The field Q.  Values are `Fraction`."""

    char = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        return a / b

    def pow(self, a, e: int):
        return a ** e

    def from_int(self, n: int):
        return Fraction(n)

    def from_fraction(self, q: Fraction):
        return Fraction(q)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def to_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for an odd prime p > 2.  Values are ints in [0, p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p) or p <= 2:
            raise ValueError(f"modulus must be an odd prime > 2, got {p}")
        if p >= 1 << 31:
            raise ValueError("modulus too large for this desk-scale field")
        self.p = p
        self.char = p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def pow(self, a, e: int):
        return pow(a, e, self.p)

    def from_int(self, n: int):
        return n % self.p

    def from_fraction(self, q: Fraction):
        den = q.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator of {q} vanishes mod {self.p}")
        return (q.numerator % self.p) * pow(den, -1, self.p) % self.p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    def to_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def require_same_field(f1, f2):
    if f1 != f2:
        raise FieldMismatchError(f"field mismatch: {f1!r} vs {f2!r}")
