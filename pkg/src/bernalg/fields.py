"""Exact scalar fields: the rationals and prime fields GF(p).

Rational scalars are `fractions.Fraction` values, which are always stored
reduced with a positive denominator, so exactness and canonical form come
for free.  Prime fields (p >= 5, avoiding characteristics 2 and 3 so that
halving stays invertible) exist only so that tests can run exhaustive
enumeration oracles over a finite ambient space; they are never used for
identity checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class RationalField:
    """Field object for exact rational arithmetic."""

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def of(value) -> Fraction:
        return Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self) -> str:
        return "QQ"

    def __str__(self) -> str:
        return "Q"


QQ = RationalField()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ModP:
    """Residue class modulo a prime p."""

    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _lift(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other
        if isinstance(other, int):
            return ModP(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return ModP(self.value * pow(o.value, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)


class PrimeField:
    """GF(p) for a prime p >= 5; characteristics 2 and 3 are rejected."""

    def __init__(self, p: int):
        if not _is_prime(p) or p < 5:
            raise ValueError("prime field modulus must be a prime >= 5")
        self.p = p
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def of(self, value) -> ModP:
        if isinstance(value, ModP):
            if value.p != self.p:
                raise ValueError("mixed moduli")
            return value
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError("denominator vanishes in GF(p)")
            return ModP(value.numerator * pow(den, self.p - 2, self.p), self.p)
        if isinstance(value, int):
            return ModP(value, self.p)
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"

    __str__ = __repr__
