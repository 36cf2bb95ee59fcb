"""Exact coefficient fields: the rationals and prime fields of odd characteristic.

Coefficients are stored as plain Python values (``Fraction`` over Q, ``int`` in
``[0, p)`` over F_p); a :class:`Field` only knows how to normalize and invert them.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def is_prime(n: int) -> bool:
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
    char: int = 0

    def __call__(self, x):
        """Coerce an int, Fraction or ``"a/b"`` string into the field."""
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def norm(self, x):
        """Cheap normalization of a value produced by ring operations."""
        return x

    def inv(self, x):
        raise NotImplementedError

    def div(self, x, y):
        return self(x * self.inv(y))

    def fmt(self, x) -> str:
        return str(x)

    def is_negative(self, x) -> bool:
        return False


class RationalField(Field):
    char = 0

    def __call__(self, x):
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def fmt(self, x) -> str:
        return str(Fraction(x))

    def is_negative(self, x) -> bool:
        return x < 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    @property
    def spec(self) -> str:
        return "q"


class PrimeField(Field):
    def __init__(self, p: int):
        if p == 2 or not is_prime(p):
            raise ValueError(f"characteristic must be an odd prime, got {p}")
        self.char = p

    def __call__(self, x):
        p = self.char
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def norm(self, x):
        return x % self.char

    def inv(self, x):
        x %= self.char
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.char)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("GF", self.char))

    def __repr__(self):
        return f"GF({self.char})"

    @property
    def spec(self) -> str:
        return f"fp:{self.char}"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> Field:
    """Parse ``q`` / ``Q`` / ``fp:<p>``."""
    t = text.strip().lower()
    if t in ("q", "qq", "rational", "0"):
        return QQ
    if t.startswith("fp:"):
        return GF(int(t[3:]))
    if t.startswith("gf(") and t.endswith(")"):
        return GF(int(t[3:-1]))
    raise ValueError(f"unknown field {text!r}; expected 'q' or 'fp:<p>'")
