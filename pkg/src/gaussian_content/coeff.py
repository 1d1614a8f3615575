"""Exact coefficient fields: the rationals and prime fields GF(p).

Rationals are plain :class:`fractions.Fraction` values. Prime field elements
are small immutable objects that interoperate with ``int`` operands.
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import InvalidArgument

MAX_MODULUS = 2**31 - 1


def normalize_rational(num, den):
    """Return ``num/den`` in lowest terms with a positive denominator."""
    if den == 0:
        raise InvalidArgument("zero denominator")
    return Fraction(num, den)


def field_inverse(a):
    if not a:
        raise ZeroDivisionError("zero has no inverse")
    return 1 / a


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class RationalField:
    name = "QQ"
    characteristic = 0

    def __call__(self, value, den=1):
        return normalize_rational(value, den) if den != 1 else Fraction(value)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def is_finite(self):
        return False

    def elements(self):
        raise InvalidArgument("QQ is infinite")

    def format(self, c):
        return str(c)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeFieldElem:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("residue", "p")

    def __init__(self, residue, p):
        object.__setattr__(self, "residue", residue % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldElem is immutable")

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise InvalidArgument(f"mixing GF({self.p}) and GF({other.p})")
            return other.residue
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.residue + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.residue - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(o - self.residue, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.residue * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElem(-self.residue, self.p)

    def __pos__(self):
        return self

    def inverse(self):
        if not self.residue:
            raise ZeroDivisionError(f"zero has no inverse in GF({self.p})")
        return PrimeFieldElem(pow(self.residue, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * PrimeFieldElem(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.inverse() * o

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** -n
        return PrimeFieldElem(pow(self.residue, n, self.p), self.p)

    def __bool__(self):
        return self.residue != 0

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return (self.residue - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"{self.residue} mod {self.p}"

    def __str__(self):
        return str(self.residue)


class PrimeField:
    def __init__(self, p):
        if not isinstance(p, int) or p > MAX_MODULUS:
            raise InvalidArgument(f"modulus must be an integer below {MAX_MODULUS + 1}")
        if not is_prime(p):
            raise InvalidArgument(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, value, den=1):
        if isinstance(value, PrimeFieldElem):
            if value.p != self.p:
                raise InvalidArgument(f"cannot convert {value!r} into GF({self.p})")
            return value
        if isinstance(value, Fraction):
            value, den = value.numerator, value.denominator * den
        if den % self.p == 0:
            raise InvalidArgument(f"denominator {den} vanishes in GF({self.p})")
        return PrimeFieldElem(value * pow(den, -1, self.p), self.p)

    @property
    def zero(self):
        return PrimeFieldElem(0, self.p)

    @property
    def one(self):
        return PrimeFieldElem(1, self.p)

    def is_finite(self):
        return True

    def elements(self):
        return [PrimeFieldElem(i, self.p) for i in range(self.p)]

    def format(self, c):
        return str(c.residue)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)
