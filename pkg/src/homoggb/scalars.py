"""Exact coefficient fields: the rationals and prime fields.

Rational coefficients are plain :class:`fractions.Fraction` values, which are
already kept in lowest terms with a positive denominator.  Prime-field
coefficients are :class:`ModP` residues in ``[0, p)``.
"""

from __future__ import annotations

from fractions import Fraction


class ModP:
    """A residue class modulo a prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"mixing residues mod {self.p} and mod {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero mod {self.p}")
        return ModP(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o, self.p) / self

    def __pow__(self, k: int):
        if k < 0 and self.value == 0:
            raise ZeroDivisionError(f"division by zero mod {self.p}")
        return ModP(pow(self.value, k, self.p), self.p)

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.value - o) % self.p == 0

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Coefficient field descriptor.

    ``Field()`` is the rationals; ``Field(p)`` is the prime field of order
    ``p``.  Calling the field converts an int, a :class:`Fraction` or a
    string such as ``"3/4"`` into a canonical coefficient.
    """

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic and not _is_prime(characteristic):
            raise ValueError(f"{characteristic} is not prime")
        self.characteristic = characteristic

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, value):
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value)
        if p == 0:
            if isinstance(value, ModP):
                raise TypeError("cannot embed a prime-field residue in QQ")
            return Fraction(value)
        if isinstance(value, ModP):
            if value.p != p:
                raise ValueError(f"residue mod {value.p} in field of order {p}")
            return value
        value = Fraction(value)
        if value.denominator % p == 0:
            raise ZeroDivisionError(f"denominator {value.denominator} vanishes mod {p}")
        return ModP(value.numerator * pow(value.denominator, -1, p), p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def spec(self) -> str:
        """Command-line spelling: ``q`` or ``fp:<p>``."""
        return "q" if self.characteristic == 0 else f"fp:{self.characteristic}"

    @classmethod
    def from_spec(cls, text: str) -> "Field":
        text = text.strip().lower()
        if text in ("q", "qq"):
            return cls()
        if text.startswith("fp:"):
            return cls(int(text[3:]))
        raise ValueError(f"unknown field {text!r} (expected 'q' or 'fp:<prime>')")


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)
