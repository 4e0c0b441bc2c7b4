"""Exact coefficient fields.

Elements are plain Python values so the hot loops stay cheap: rationals are
:class:`fractions.Fraction`, residues modulo ``p`` are ``int`` in ``[0, p)``.
A :class:`Field` object carries the arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational

DEFAULT_PRIME = 32003


class Field:
    """Base class; use :data:`QQ` or :func:`GF`."""

    characteristic = 0

    def __call__(self, x):
        return self.convert(x)

    def convert(self, x):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == 0

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def random_element(self, rng, bound: int | None = None):
        """Uniform element (for ``GF(p)``) or a small random integer (for ``QQ``)."""
        raise NotImplementedError

    def to_json(self) -> str:
        raise NotImplementedError


class RationalField(Field):
    characteristic = 0

    def convert(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(x, (Integral, Rational)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x.strip())
        raise TypeError(f"cannot convert {x!r} to a rational number")

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
            raise ZeroDivisionError("zero is not invertible")
        return 1 / Fraction(a)

    def random_element(self, rng, bound=None):
        bound = 7 if bound is None else bound
        return Fraction(int(rng.integers(-bound, bound + 1)))

    def to_json(self):
        return "Q"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 3 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not an odd prime")
        self.p = p
        self.characteristic = p

    def convert(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(x, Integral):
            return int(x) % self.p
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Rational):
            den = int(x.denominator) % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes modulo {self.p}")
            return int(x.numerator) * pow(den, -1, self.p) % self.p
        raise TypeError(f"cannot convert {x!r} to GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("zero is not invertible")
        return pow(a, -1, self.p)

    def random_element(self, rng, bound=None):
        return int(rng.integers(0, self.p))

    def signed(self, a) -> int:
        """Symmetric representative, used for printing."""
        return a - self.p if a > self.p // 2 else a

    def to_json(self):
        return f"Fp:{self.p}"

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()
_PRIME_FIELDS: dict[int, PrimeField] = {}


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    if p not in _PRIME_FIELDS:
        _PRIME_FIELDS[p] = PrimeField(p)
    return _PRIME_FIELDS[p]


def parse_field(spec: str | None) -> Field:
    """Parse ``"Q"``, ``"Fp"`` or ``"Fp:<p>"``; ``None`` gives the default GF(32003)."""
    if spec is None:
        return GF()
    s = spec.strip()
    if s in ("Q", "QQ"):
        return QQ
    if s == "Fp":
        return GF()
    if s.startswith("Fp:"):
        return GF(int(s[3:]))
    raise ValueError(f"unknown field {spec!r}; expected Q, Fp or Fp:<prime>")
