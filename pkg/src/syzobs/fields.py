"""Exact coefficient fields: the rationals and odd prime fields.

Field elements are plain values supporting +, -, *, /, ==, bool().  Rationals
use fractions.Fraction directly; prime fields use PrimeFieldElement.  No
floating point is involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class Rationals:
    """The field QQ; elements are fractions.Fraction."""

    name = "QQ"
    characteristic = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def elem(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot make a rational out of {value!r}")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class PrimeFieldElement:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError(f"mixed characteristics {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return PrimeFieldElement(self.value * pow(v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        if self.value == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return PrimeFieldElement(v * pow(self.value, self.p - 2, self.p), self.p)

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        if isinstance(other, Fraction):
            return other.denominator == 1 and self.value == other.numerator % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return str(self.value)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


class PrimeField:
    """F_p for an odd prime p.  Opt-in speed mode; reports carry a warning
    that ranks over F_p may differ from characteristic zero."""

    characteristic_warning = (
        "computed over a prime field: Betti numbers and ranks may differ "
        "from the characteristic-zero values"
    )

    def __init__(self, p: int):
        if not _is_prime(p) or p == 2:
            raise ValueError(f"{p} is not an odd prime")
        self.p = p
        self.name = f"Fp:{p}"

    @property
    def characteristic(self):
        return self.p

    @property
    def zero(self):
        return PrimeFieldElement(0, self.p)

    @property
    def one(self):
        return PrimeFieldElement(1, self.p)

    def elem(self, value):
        if isinstance(value, PrimeFieldElement):
            if value.p != self.p:
                raise ValueError(f"mixed characteristics {value.p} and {self.p}")
            return value
        if isinstance(value, int):
            return PrimeFieldElement(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return PrimeFieldElement(value.numerator, self.p) / PrimeFieldElement(
                value.denominator, self.p
            )
        if isinstance(value, str):
            return self.elem(Fraction(value))
        raise TypeError(f"cannot make an F_{self.p} element out of {value!r}")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return self.name


def field_by_name(name: str):
    """Parse a field label: "QQ" or "Fp:<odd prime q>"."""
    if name == "QQ":
        return QQ
    if name.startswith("Fp:"):
        try:
            q = int(name[3:])
        except ValueError:
            raise ValueError(f"bad prime field label {name!r}") from None
        return PrimeField(q)
    raise ValueError(f"unknown field {name!r} (expected QQ or Fp:<q>)")
