"""Ring presentations ``k[x1..xn]/J``, fractional ideals, and local generator counts."""

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidArgument, TrivialRingError, UnsupportedInput
from .groebner import Ideal, colength, colon, lift, normal_form, _groebner
from .poly import MAIN_VAR, PolyRing, Polynomial


@dataclass(frozen=True, eq=False)
class RingSpec:
    """``field[variables]/relations``, plus the main indeterminate ``X``.

    ``relations`` is the reduced Groebner basis of the defining ideal.
    ``domain`` is asserted by the user, never verified.
    """

    field: object
    variables: tuple
    relations: tuple = ()
    domain: bool = False

    @cached_property
    def base(self):
        return PolyRing(self.field, self.variables)

    @cached_property
    def full(self):
        return self.base.with_main

    @cached_property
    def X(self):
        return self.full.var(MAIN_VAR)

    def _ident(self):
        return (self.field, self.variables, self.relations, self.domain)

    def __eq__(self, other):
        return isinstance(other, RingSpec) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def var(self, name):
        return self.full.var(name)

    @property
    def gens(self):
        return tuple(self.base.var(n) for n in self.variables)

    def __call__(self, value):
        return self.full(value)

    def ideal(self, gens=()):
        """Ideal of the base ring (held as its preimage, relations included)."""
        gens = [self._to_base(g) for g in gens]
        return Ideal(self.base, gens, self.relations, spec=self)

    @cached_property
    def zero_ideal(self):
        return self.ideal()

    @cached_property
    def unit_ideal(self):
        return self.ideal([self.base.one])

    def _to_base(self, g):
        if isinstance(g, Polynomial):
            return g if g.ring == self.base else self.base.convert(g)
        return self.base(g)

    @cached_property
    def _gb_base(self):
        return _groebner(self.base, list(self.relations)) if self.relations else None

    @cached_property
    def _gb_full(self):
        if not self.relations:
            return None
        return _groebner(self.full, [self.full.convert(r) for r in self.relations])

    def reduce(self, p):
        """Canonical representative of ``p`` modulo the relations."""
        if p.ring == self.base:
            return normal_form(p, self._gb_base) if self._gb_base else p
        if p.ring != self.full:
            p = self.full.convert(p)
        return normal_form(p, self._gb_full) if self._gb_full else p

    def equal(self, a, b):
        return not self.reduce(a - b)

    def is_zero(self, p):
        return not self.reduce(p)

    def adjoin(self, names):
        """``R[names]``: fresh indeterminates over this ring."""
        names = tuple(names)
        for n in names:
            if n in self.variables or n == MAIN_VAR:
                raise InvalidArgument(f"variable {n!r} already present")
        base = PolyRing(self.field, self.variables + names)
        rels = tuple(base.convert(r) for r in self.relations)
        return make_quotient(self.variables + names, self.field, rels, domain=self.domain)

    def is_finite(self):
        return self.field.is_finite() and colength(self.zero_ideal) != math.inf

    def elements(self):
        """Every element of a finite ring, as reduced base polynomials."""
        if not self.is_finite():
            raise UnsupportedInput(f"{self} is not a finite ring")
        basis = [self.base.monomial(m) for m in _standard_monomials(self)]
        out = []
        for coeffs in itertools.product(self.field.elements(), repeat=len(basis)):
            out.append(sum((c * b for c, b in zip(coeffs, basis)), self.base.zero))
        return out

    def __str__(self):
        text = f"{self.field.name}[{','.join(self.variables)}]"
        if self.relations:
            text += "/(" + ", ".join(str(r) for r in self.relations) + ")"
        if self.domain:
            text += " domain"
        return text

    def __repr__(self):
        return f"RingSpec({str(self)!r})"


def _standard_monomials(R):
    from .groebner import standard_monomials

    return standard_monomials(R.zero_ideal)


def make_quotient(variables, field, relations=(), domain=False):
    """Build ``field[variables]/(relations)``; the main variable is implicit."""
    variables = tuple(variables)
    if MAIN_VAR in variables:
        raise InvalidArgument(f"{MAIN_VAR} is reserved for the main indeterminate")
    base = PolyRing(field, variables)
    rels = []
    for r in relations:
        if isinstance(r, Polynomial) and MAIN_VAR in r.ring.names and r.degree(MAIN_VAR) > 0:
            raise InvalidArgument(f"relation {r} involves {MAIN_VAR}")
        rels.append(base.convert(r) if isinstance(r, Polynomial) else base(r))
    rels = [r for r in rels if r]
    gb = _groebner(base, rels).generators if rels else ()
    if any(g.is_constant() for g in gb):
        raise TrivialRingError("defining ideal contains a unit; the ring is zero")
    return RingSpec(field, variables, tuple(g.monic() for g in gb), bool(domain))


def ideal_product(I, J):
    return I * J


def ideal_power(I, n):
    return I ** n


@dataclass(frozen=True, eq=False)
class FractionalIdeal:
    """``(1/denominator) * numerator`` inside the fraction field of a domain."""

    denominator: Polynomial
    numerator: Ideal

    def __eq__(self, other):
        if not isinstance(other, FractionalIdeal):
            return NotImplemented
        return self.numerator.scale(other.denominator) == other.numerator.scale(self.denominator)

    __hash__ = None

    def __str__(self):
        gens = ", ".join(str(g) for g in self.numerator.gens)
        return f"(1/({self.denominator}))*({gens})"


def _require_domain(I):
    spec = I.spec
    if spec is None or not spec.domain:
        raise UnsupportedInput("operation needs a ring flagged as a domain")
    if I.is_zero():
        raise InvalidArgument("the zero ideal is not invertible")
    return spec


def fractional_inverse(I, d=None):
    """``(R : I)`` as ``(1/d) * (d : I)`` for a nonzero ``d`` in ``I``."""
    spec = _require_domain(I)
    if d is None:
        d = I.nonzero_gens()[0]
    elif spec.is_zero(d) or not I.contains(d):
        raise InvalidArgument(f"{d} is not a nonzero element of the ideal")
    d = spec.reduce(spec._to_base(d))
    return FractionalIdeal(d, colon(I.principal(d), I))


class Invertibility:
    """Outcome of :func:`is_invertible`; truthy iff the ideal is invertible.

    ``product`` is ``I * (d : I)``; when invertible it equals ``(d)`` and
    ``cofactors`` expresses ``d`` in the product's generators.
    """

    def __init__(self, ideal, inverse, product, invertible):
        self.ideal = ideal
        self.inverse = inverse
        self.product = product
        self.invertible = invertible

    def __bool__(self):
        return self.invertible

    @cached_property
    def cofactors(self):
        if not self.invertible:
            return None
        return lift(self.inverse.denominator, self.product)

    def verify(self):
        """Re-check the certificate from scratch."""
        d = self.inverse.denominator
        if not self.invertible:
            return self.product != self.ideal.principal(d)
        if not self.product.contains(d):
            return False
        cof = self.cofactors
        if cof is None:
            return False
        total = sum((h * g for h, g in zip(cof, self.product.generators)), d.ring.zero)
        return total == d

    def __repr__(self):
        return f"Invertibility({self.invertible}, inverse={self.inverse})"


def is_invertible(I):
    inv = fractional_inverse(I)
    product = (I * inv.numerator).compact()
    return Invertibility(I, inv, product, product == I.principal(inv.denominator))


@dataclass(frozen=True, eq=False)
class LocalityWitness:
    """A rational maximal ideal ``M`` with ``R/M`` equal to the base field."""

    ring: RingSpec
    ideal: Ideal
    point: tuple = None

    @classmethod
    def at_point(cls, ring, point):
        """``point`` maps every base variable to a field value."""
        missing = [v for v in ring.variables if v not in point]
        if missing:
            raise InvalidArgument(f"point misses coordinates for {missing}")
        gens = [ring.base.var(v) - ring.base(point[v]) for v in ring.variables]
        return cls._checked(ring, ring.ideal(gens), tuple((v, point[v]) for v in ring.variables))

    @classmethod
    def from_generators(cls, ring, gens):
        return cls._checked(ring, ring.ideal(gens), None)

    @classmethod
    def _checked(cls, ring, M, point):
        n = colength(M)
        if n != 1:
            raise InvalidArgument(
                f"ideal {M} is not a rational maximal ideal of {ring} (colength {n})"
            )
        return cls(ring, M, point)


def min_generators_local(I, M):
    """``nu(I R_M) = colength(M*I) - colength(I)``, the dimension of ``I/MI``."""
    M = M.ideal if isinstance(M, LocalityWitness) else M
    if not I <= M:
        raise InvalidArgument(f"{I} is not contained in {M}")
    outer = colength(I)
    if outer == math.inf:
        raise UnsupportedInput(f"colength of {I} is infinite; need zero-dimensional support")
    inner = colength((M * I).compact())
    if inner == math.inf:
        raise UnsupportedInput("colength of M*I is infinite; need zero-dimensional support")
    return inner - outer


def min_generators_greedy(I, M):
    """Drop generators lying in ``(others) + M*I``; the survivors generate ``I`` locally.

    Works without finiteness assumptions and serves as a cross-check for
    :func:`min_generators_local`. Returns the surviving generators.
    """
    M = M.ideal if isinstance(M, LocalityWitness) else M
    MI = M * I
    kept = list(I.nonzero_gens())
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1 :]
        if (Ideal(I.ring, others, I.modulus, I.spec) + MI).contains(kept[i]):
            kept.pop(i)
        else:
            i += 1
    return tuple(kept)
