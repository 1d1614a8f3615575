"""Sparse multivariate polynomials over an exact field.

A polynomial is a dict from exponent tuples to nonzero coefficients. The
variable named ``X`` is reserved as the main indeterminate: when present it
is always the last variable of the ring, and the content helpers at the
bottom of this module view a polynomial as ``sum c_i X^i`` with coefficients
``c_i`` in the remaining variables.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from operator import add, sub

from .coeff import PrimeFieldElem
from .errors import InvalidArgument

MAIN_VAR = "X"


class MonomialOrder:
    """A multiplicative well-order on exponent tuples.

    ``key(m)`` returns a tuple of ints; larger keys mean larger monomials.
    Variables are ranked by their position in the ring (first is greatest).
    ``block`` splits the variables into ``[:block]`` and ``[block:]``,
    each ordered by grevlex, with the first block dominating.
    """

    KINDS = ("lex", "grevlex", "block")

    def __init__(self, kind="grevlex", block=None):
        if kind not in self.KINDS:
            raise InvalidArgument(f"unknown monomial order {kind!r}")
        if (kind == "block") != (block is not None):
            raise InvalidArgument("block orders need a block size")
        self.kind = kind
        self.block = block
        self._cache = {}

    def key(self, m):
        k = self._cache.get(m)
        if k is None:
            if self.kind == "lex":
                k = m
            elif self.kind == "grevlex":
                k = _grevlex_key(m)
            else:
                k = _grevlex_key(m[: self.block]) + _grevlex_key(m[self.block :])
            if len(self._cache) > 500_000:
                self._cache.clear()
            self._cache[m] = k
        return k

    def _ident(self):
        return (self.kind, self.block)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder('block', block={self.block})"
        return f"MonomialOrder({self.kind!r})"


def _grevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def monomial_mul(a, b):
    return tuple(map(add, a, b))


def monomial_div(a, b):
    return tuple(map(sub, a, b))


def monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(map(max, a, b))


@dataclass(frozen=True)
class PolyRing:
    """``field[names]`` with a fixed monomial order."""

    field: object
    names: tuple
    order: MonomialOrder = field(default=GREVLEX)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise InvalidArgument(f"duplicate variable in {names}")
        if MAIN_VAR in names and names[-1] != MAIN_VAR:
            raise InvalidArgument(f"{MAIN_VAR} must be the last variable")

    @property
    def nvars(self):
        return len(self.names)

    @property
    def has_main(self):
        return bool(self.names) and self.names[-1] == MAIN_VAR

    @cached_property
    def zero_monomial(self):
        return (0,) * len(self.names)

    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return self(1)

    def __call__(self, value=0):
        if isinstance(value, Polynomial):
            return self.convert(value)
        c = self.field(value)
        return Polynomial(self, {self.zero_monomial: c} if c else {})

    def coerce_scalar(self, value):
        return self.field(value)

    def var(self, name):
        try:
            i = self.names.index(name)
        except ValueError:
            raise InvalidArgument(f"unknown variable {name!r}") from None
        m = [0] * len(self.names)
        m[i] = 1
        return Polynomial(self, {tuple(m): self.field.one})

    @property
    def gens(self):
        return tuple(self.var(n) for n in self.names)

    def monomial(self, exps, coeff=1):
        c = self.field(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def from_dict(self, terms):
        out = {}
        for m, c in terms.items():
            c = self.field(c)
            if c:
                out[tuple(m)] = c
        return Polynomial(self, out)

    def with_order(self, order):
        return PolyRing(self.field, self.names, order)

    def extend(self, names, front=False):
        """Ring with extra variables; ``X`` stays last."""
        names = tuple(names)
        base = tuple(n for n in self.names if n != MAIN_VAR)
        main = (MAIN_VAR,) if self.has_main else ()
        new = names + base if front else base + names
        return PolyRing(self.field, new + main, self.order)

    @cached_property
    def base(self):
        """The ring of the coefficients in the main variable."""
        if not self.has_main:
            raise InvalidArgument(f"ring {self} has no main variable {MAIN_VAR}")
        return PolyRing(self.field, self.names[:-1], self.order)

    @cached_property
    def with_main(self):
        if self.has_main:
            return self
        return PolyRing(self.field, self.names + (MAIN_VAR,), self.order)

    def convert(self, p):
        """Embed ``p`` by matching variable names."""
        if p.ring == self:
            return p
        if p.ring.field != self.field:
            raise InvalidArgument(f"cannot convert from {p.ring.field} to {self.field}")
        index = {n: i for i, n in enumerate(self.names)}
        positions = []
        for i, n in enumerate(p.ring.names):
            positions.append(index.get(n))
        terms = {}
        for m, c in p.terms.items():
            new = [0] * len(self.names)
            for i, e in enumerate(m):
                if e:
                    j = positions[i]
                    if j is None:
                        raise InvalidArgument(f"variable {p.ring.names[i]!r} not in {self}")
                    new[j] = e
            terms[tuple(new)] = c
        return Polynomial(self, terms)

    def __str__(self):
        return f"{self.field.name}[{', '.join(self.names)}]"


class Polynomial:
    """Immutable sparse polynomial; ``terms`` must not be mutated."""

    __slots__ = ("ring", "terms", "_lm", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._lm = None
        self._hash = None

    # -- coercion -------------------------------------------------------
    def _other(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise InvalidArgument(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            return self.ring(other)
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Polynomial(self.ring, _add_terms(self.terms, o.terms, 1))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Polynomial(self.ring, _add_terms(self.terms, o.terms, -1))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            return self.scale(other)
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(map(add, ma, mb))
                c = out.get(m)
                out[m] = ca * cb if c is None else c + ca * cb
        return Polynomial(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InvalidArgument("exponent must be a natural number")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        c = self.ring.field(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, m, c):
        return Polynomial(
            self.ring, {tuple(map(add, k, m)): v * c for k, v in self.terms.items()}
        )

    # -- comparison -----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            return self.terms == self.ring(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- structure ------------------------------------------------------
    @property
    def lm(self):
        """Leading monomial under the ring's order."""
        if self._lm is None:
            if not self.terms:
                raise InvalidArgument("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.order.key)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.order.key(t[0]), reverse=True)

    def monic(self):
        if not self.terms:
            return self
        return self.scale(1 / self.lc)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def degree(self, name):
        i = self.ring.names.index(name)
        return max((m[i] for m in self.terms), default=-1)

    def variables(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return tuple(n for i, n in enumerate(self.ring.names) if i in used)

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def constant_coefficient(self):
        return self.terms.get(self.ring.zero_monomial, self.ring.field.zero)

    def evaluate(self, values):
        """Substitute ``{name: polynomial or scalar}``; other variables stay."""
        ring = self.ring
        result = ring.zero
        subs = [values.get(n) for n in ring.names]
        for m, c in self.terms.items():
            term = ring.monomial(
                tuple(0 if subs[i] is not None else e for i, e in enumerate(m)), c
            )
            for i, e in enumerate(m):
                if e and subs[i] is not None:
                    term = term * (subs[i] ** e if isinstance(subs[i], Polynomial) else ring(subs[i]) ** e)
            result = result + term
        return result

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r} in {self.ring})"


def _add_terms(a, b, sign):
    out = dict(a)
    for m, c in b.items():
        v = out.get(m)
        if v is None:
            out[m] = c if sign == 1 else -c
        else:
            v = v + c if sign == 1 else v - c
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def poly_arith(f, g, op):
    """Add, subtract, or multiply two polynomials of the same ring."""
    if f.ring != g.ring:
        raise InvalidArgument(f"ring mismatch: {f.ring} vs {g.ring}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise InvalidArgument(f"unknown operation {op!r}")


def divide_exact(f, g):
    """Return ``q`` with ``f == q * g``; raise if ``g`` does not divide ``f``."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    key = ring.order.key
    glm, glc = g.lm, g.lc
    gtail = [(m, c) for m, c in g.terms.items() if m != glm]
    p = dict(f.terms)
    q = {}
    while p:
        m = max(p, key=key)
        if not monomial_divides(glm, m):
            raise InvalidArgument(f"{g} does not divide {f}")
        c = p.pop(m) / glc
        t = monomial_div(m, glm)
        q[t] = c
        for gm, gc in gtail:
            mm = tuple(map(add, gm, t))
            v = p.get(mm)
            v = -c * gc if v is None else v - c * gc
            if v:
                p[mm] = v
            else:
                p.pop(mm, None)
    return Polynomial(ring, q)


# -- canonical text ------------------------------------------------------


def _print_key(ring):
    if ring.has_main:
        return lambda m: (m[-1], _grevlex_key(m[:-1]) if ring.order.kind != "lex" else m[:-1])
    return ring.order.key


def format_poly(p):
    """Canonical text: descending terms, explicit ``*`` and ``^``.

    With a main variable the X-degree is the major sort key.
    """
    if not p.terms:
        return "0"
    ring = p.ring
    key = _print_key(ring)
    pieces = []
    for m, c in sorted(p.terms.items(), key=lambda t: key(t[0]), reverse=True):
        text = ring.field.format(c)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        factors = []
        for name, e in zip(ring.names, m):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        if factors:
            if text != "1":
                factors.insert(0, text)
            body = "*".join(factors)
        else:
            body = text
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


# -- main-variable view --------------------------------------------------


@dataclass(frozen=True)
class MainVarView:
    """``f = sum(coeffs[i] * X**i)`` with ``coeffs`` in the base ring."""

    ring: PolyRing
    coeffs: tuple

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def reassemble(self):
        return from_main_coefficients(self.coeffs, self.ring)


def main_view(f):
    if not f.ring.has_main:
        raise InvalidArgument(f"ring {f.ring} has no main variable {MAIN_VAR}")
    base = f.ring.base
    buckets = {}
    for m, c in f.terms.items():
        buckets.setdefault(m[-1], {})[m[:-1]] = c
    n = max(buckets, default=-1)
    coeffs = tuple(Polynomial(base, buckets.get(i, {})) for i in range(n + 1))
    return MainVarView(f.ring, coeffs)


def main_coefficients(f):
    return main_view(f).coeffs


def main_degree(f):
    return max((m[-1] for m in f.terms), default=-1)


def from_main_coefficients(coeffs, ring):
    """Rebuild ``sum coeffs[i] X^i`` in ``ring`` (which must contain X)."""
    terms = {}
    for i, c in enumerate(coeffs):
        c = ring.base.convert(c) if c.ring != ring.base else c
        for m, v in c.terms.items():
            terms[m + (i,)] = v
    return Polynomial(ring, terms)


def _map_main_exponent(f, fn):
    terms = {}
    for m, c in f.terms.items():
        e, c = fn(m[-1], c)
        terms[m[:-1] + (e,)] = c
    return Polynomial(f.ring, terms)


def substitute_power(f, n):
    """``f(X) -> f(X**n)``."""
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument("power must be a positive integer")
    main_view(f)
    return _map_main_exponent(f, lambda e, c: (e * n, c))


def negate_main_var(f):
    """``f(X) -> f(-X)``."""
    main_view(f)
    return _map_main_exponent(f, lambda e, c: (e, -c if e % 2 else c))


def even_odd_split(f):
    """Return ``(g0, g1)`` with ``f(X) == g0(X**2) + X * g1(X**2)``."""
    main_view(f)
    even, odd = {}, {}
    for m, c in f.terms.items():
        e = m[-1]
        (odd if e % 2 else even)[m[:-1] + (e // 2,)] = c
    return Polynomial(f.ring, even), Polynomial(f.ring, odd)


def halve_main_degrees(f):
    """Inverse of ``substitute_power(., 2)``; every X-degree must be even."""
    terms = {}
    for m, c in f.terms.items():
        if m[-1] % 2:
            raise InvalidArgument(f"{f} has an odd power of {MAIN_VAR}")
        terms[m[:-1] + (m[-1] // 2,)] = c
    return Polynomial(f.ring, terms)


def permute_coefficients(f, perm):
    """Coefficient of ``X**i`` in the result is that of ``X**perm[i]`` in ``f``."""
    coeffs = main_coefficients(f)
    perm = tuple(perm)
    if sorted(perm) != list(range(len(coeffs))):
        raise InvalidArgument(
            f"expected a permutation of 0..{len(coeffs) - 1}, got {perm}"
        )
    return from_main_coefficients([coeffs[j] for j in perm], f.ring)


@lru_cache(maxsize=None)
def main_variable(ring):
    return ring.var(MAIN_VAR)
