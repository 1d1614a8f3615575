"""Reduced Groebner bases and the ideal operations built on them.

Buchberger's algorithm with the normal selection strategy (smallest lcm
first) and Buchberger's two pair criteria. Results are cached per
(ring, generator set), so repeated membership and equality questions on the
same ideal reuse one basis.

Ideals of a quotient ring ``k[x]/J`` are stored as their preimages in
``k[x]``: every :class:`Ideal` carries the generators of ``J`` as its
``modulus`` and includes them in the basis computation.
"""

import heapq
import math
import os
import threading
from collections import OrderedDict
from dataclasses import dataclass
from functools import cached_property
from operator import add

from .errors import InvalidArgument, ResourceLimitError
from .poly import (
    MonomialOrder,
    Polynomial,
    divide_exact,
    monomial_div,
    monomial_divides,
    monomial_lcm,
)

DEFAULT_MAX_GENERATORS = 10_000
DEFAULT_MAX_TERMS = 1_000_000
_CACHE_SIZE = 4096

_cache = OrderedDict()
_cache_lock = threading.Lock()


def budget():
    """Current (generator, term) caps, overridable from the environment."""
    return (
        int(os.environ.get("GAUSSIAN_CONTENT_MAX_GENERATORS", DEFAULT_MAX_GENERATORS)),
        int(os.environ.get("GAUSSIAN_CONTENT_MAX_TERMS", DEFAULT_MAX_TERMS)),
    )


def clear_cache():
    with _cache_lock:
        _cache.clear()


@dataclass(frozen=True)
class GroebnerBasis:
    ring: object
    generators: tuple
    reduced: bool = True

    @property
    def order(self):
        return self.ring.order

    @cached_property
    def leading_monomials(self):
        return tuple(g.lm for g in self.generators)

    def is_unit(self):
        return any(g.is_constant() for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


class _Basis:
    """Working basis of monic polynomials as raw term dicts."""

    def __init__(self, ring):
        self.ring = ring
        self.key = ring.order.key
        self.lms = []
        self.polys = []

    def reduce(self, terms):
        """Fully reduce ``terms`` modulo the basis; returns a new dict."""
        if not terms:
            return {}
        key = self.key
        p = dict(terms)
        heap = [(_neg(key(m)), m) for m in p]
        heapq.heapify(heap)
        r = {}
        lms, polys = self.lms, self.polys
        while heap:
            _, m = heapq.heappop(heap)
            c = p.pop(m, None)
            if c is None:
                continue
            for glm, g in zip(lms, polys):
                if monomial_divides(glm, m):
                    q = monomial_div(m, glm)
                    for gm, gc in g.items():
                        if gm == glm:
                            continue
                        mm = tuple(map(add, gm, q))
                        v = p.get(mm)
                        if v is None:
                            p[mm] = -c * gc
                            heapq.heappush(heap, (_neg(key(mm)), mm))
                        else:
                            v = v - c * gc
                            if v:
                                p[mm] = v
                            else:
                                del p[mm]
                    break
            else:
                r[m] = c
        return r

    def append(self, terms):
        lm = max(terms, key=self.key)
        inv = 1 / terms[lm]
        terms = {m: c * inv for m, c in terms.items()}
        self.lms.append(lm)
        self.polys.append(terms)
        return lm


def _neg(k):
    return tuple(-x for x in k)


def _spoly(f, flm, g, glm):
    lcm = monomial_lcm(flm, glm)
    a = monomial_div(lcm, flm)
    b = monomial_div(lcm, glm)
    out = {}
    for m, c in f.items():
        out[tuple(map(add, m, a))] = c
    for m, c in g.items():
        mm = tuple(map(add, m, b))
        v = out.get(mm)
        if v is None:
            out[mm] = -c
        else:
            v = v - c
            if v:
                out[mm] = v
            else:
                del out[mm]
    return out


def buchberger(gens, order=None):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``gens`` must share a ring. ``order`` overrides the ring's order. The
    result is cached; the same generator set always yields the same object.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise InvalidArgument("need at least one polynomial to know the ring")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise InvalidArgument(f"ring mismatch: {g.ring} vs {ring}")
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        gens = [ring.convert(g) for g in gens]
    return _groebner(ring, gens)


def _groebner(ring, gens):
    cache_key = (ring, frozenset(gens))
    with _cache_lock:
        hit = _cache.get(cache_key)
        if hit is not None:
            _cache.move_to_end(cache_key)
            return hit
    gb = GroebnerBasis(ring, _compute(ring, gens))
    with _cache_lock:
        _cache[cache_key] = gb
        if len(_cache) > _CACHE_SIZE:
            _cache.popitem(last=False)
    return gb


def _compute(ring, gens):
    max_gens, max_terms = budget()
    key = ring.order.key
    basis = _Basis(ring)
    pairs = []
    pending = set()
    total_terms = 0

    def add_element(terms):
        nonlocal total_terms
        basis.append(terms)
        total_terms += len(terms)
        if len(basis.polys) > max_gens or total_terms > max_terms:
            raise ResourceLimitError(
                f"Groebner basis exceeded budget ({len(basis.polys)} generators, "
                f"{total_terms} terms; caps {max_gens}, {max_terms})"
            )
        j = len(basis.polys) - 1
        lmj = basis.lms[j]
        for i in range(j):
            lcm = monomial_lcm(basis.lms[i], lmj)
            heapq.heappush(pairs, (sum(lcm), key(lcm), i, j))
            pending.add((i, j))

    # Start from the inputs sorted small-to-large; reduce each against the rest.
    for g in sorted(gens, key=lambda p: key(p.lm)):
        h = basis.reduce(g.terms)
        if h:
            add_element(h)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        lmi, lmj = basis.lms[i], basis.lms[j]
        if all(not (a and b) for a, b in zip(lmi, lmj)):
            continue
        lcm = monomial_lcm(lmi, lmj)
        if _chain_criterion(basis.lms, i, j, lcm, pending):
            continue
        h = basis.reduce(_spoly(basis.polys[i], lmi, basis.polys[j], lmj))
        if h:
            if all(not any(m) for m in h):
                return (ring.one,)
            add_element(h)

    return _reduce_basis(ring, basis)


def _chain_criterion(lms, i, j, lcm, pending):
    for k, lmk in enumerate(lms):
        if k == i or k == j:
            continue
        if not monomial_divides(lmk, lcm):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _reduce_basis(ring, basis):
    key = ring.order.key
    items = sorted(zip(basis.lms, basis.polys), key=lambda t: key(t[0]))
    minimal = []
    for lm, poly in items:
        if any(monomial_divides(other, lm) for other, _ in minimal):
            continue
        minimal = [(o, p) for o, p in minimal if not monomial_divides(lm, o)]
        minimal.append((lm, poly))
    out = []
    for idx, (lm, poly) in enumerate(minimal):
        rest = _Basis(ring)
        for k, (olm, op) in enumerate(minimal):
            if k != idx:
                rest.lms.append(olm)
                rest.polys.append(op)
        tail = {m: c for m, c in poly.items() if m != lm}
        reduced = rest.reduce(tail)
        reduced[lm] = poly[lm]
        out.append(Polynomial(ring, reduced))
    out.sort(key=lambda p: key(p.lm), reverse=True)
    return tuple(out)


def normal_form(f, G):
    """Remainder of ``f`` on division by the basis ``G``."""
    if not isinstance(G, GroebnerBasis):
        G = buchberger(list(G)) if G else None
    if G is None or not G.generators:
        return f
    if f.ring != G.ring:
        f = G.ring.convert(f)
    basis = _Basis(G.ring)
    for g in G.generators:
        basis.lms.append(g.lm)
        basis.polys.append(g.monic().terms)
    return Polynomial(G.ring, basis.reduce(f.terms))


def is_groebner(G):
    """Post-hoc Buchberger criterion: every S-polynomial reduces to zero."""
    gens = list(G.generators)
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            f, g = gens[a].monic(), gens[b].monic()
            s = Polynomial(G.ring, _spoly(f.terms, f.lm, g.terms, g.lm))
            if normal_form(s, G):
                return False
    return True


# -- ideals ----------------------------------------------------------------


def _dedup(polys):
    seen = []
    found = set()
    for p in polys:
        if p and p not in found:
            found.add(p)
            seen.append(p)
    return tuple(seen)


def fresh_name(ring, stem):
    name = stem
    i = 0
    while name in ring.names:
        i += 1
        name = f"{stem}{i}"
    return name


class Ideal:
    """Finitely generated ideal of ``ring`` (modulo ``modulus``).

    ``gens`` are the generators as given; ``generators`` adds the modulus and
    is what the Groebner basis is computed from.
    """

    def __init__(self, ring, gens=(), modulus=(), spec=None):
        self.ring = ring
        self.spec = spec
        gens = tuple(ring.convert(g) if g.ring != ring else g for g in gens)
        self.modulus = _dedup(ring.convert(m) for m in modulus)
        self.gens = _dedup(gens)
        self.generators = _dedup(self.gens + self.modulus)

    @cached_property
    def gb(self):
        if not self.generators:
            return GroebnerBasis(self.ring, ())
        return _groebner(self.ring, list(self.generators))

    def reduce(self, f):
        return normal_form(self._own(f), self.gb)

    def contains(self, f):
        return not self.reduce(f)

    __contains__ = contains

    def _own(self, f):
        if isinstance(f, Polynomial):
            return f if f.ring == self.ring else self.ring.convert(f)
        return self.ring(f)

    def _check(self, other):
        if other.ring != self.ring:
            raise InvalidArgument(f"ring mismatch: {self.ring} vs {other.ring}")

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        self._check(other)
        return self.gb.generators == other.gb.generators

    def __hash__(self):
        return hash(self.gb.generators)

    def __le__(self, other):
        self._check(other)
        return all(other.contains(g) for g in self.generators)

    def __add__(self, other):
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens, self.modulus + other.modulus, self.spec)

    def __mul__(self, other):
        self._check(other)
        prods = [a * b for a in self.gens for b in other.gens]
        return Ideal(self.ring, prods, self.modulus + other.modulus, self.spec)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InvalidArgument("ideal exponent must be a natural number")
        result = Ideal(self.ring, [self.ring.one], self.modulus, self.spec)
        base = self
        while n:
            if n & 1:
                result = (result * base).compact()
            n >>= 1
            if n:
                base = (base * base).compact()
        return result

    def compact(self):
        """Same ideal, generated by its reduced Groebner basis."""
        mod = set(self.modulus)
        gens = [g for g in self.gb.generators if g not in mod]
        return Ideal(self.ring, gens, self.modulus, self.spec)

    def scale(self, d):
        d = self._own(d)
        return Ideal(self.ring, [d * g for g in self.gens], self.modulus, self.spec)

    def principal(self, f):
        return Ideal(self.ring, [self._own(f)], self.modulus, self.spec)

    def is_zero(self):
        return all(self.modulus_ideal.contains(g) for g in self.gens)

    @cached_property
    def modulus_ideal(self):
        return Ideal(self.ring, (), self.modulus, self.spec)

    def is_unit(self):
        return self.gb.is_unit()

    def nonzero_gens(self):
        """Generators that are nonzero modulo the defining ideal."""
        zero = self.modulus_ideal
        return tuple(g for g in self.gens if not zero.contains(g))

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.gens)
        mod = f" mod ({', '.join(str(g) for g in self.modulus)})" if self.modulus else ""
        return f"Ideal({inner}){mod}"


def is_member(f, I):
    return I.contains(f)


def ideal_equal(I, J):
    return I == J


def intersect(I, J):
    """``I ∩ J`` by eliminating a tag variable ``t`` from ``t*I + (1-t)*J``."""
    I._check(J)
    ring = I.ring
    tag = fresh_name(ring, "_t")
    big = ring.extend([tag], front=True)
    big = big.with_order(MonomialOrder("block", block=1))
    t = big.var(tag)
    one_minus_t = 1 - t
    gens = [t * big.convert(g) for g in I.generators]
    gens += [one_minus_t * big.convert(g) for g in J.generators]
    if not I.generators or not J.generators:
        return Ideal(ring, (), I.modulus + J.modulus, I.spec)
    gb = _groebner(big, gens)
    kept = [Polynomial(ring, {m[1:]: c for m, c in g.terms.items()})
            for g in gb.generators if all(m[0] == 0 for m in g.terms)]
    return Ideal(ring, kept, I.modulus + J.modulus, I.spec)


def colon(I, J):
    """``(I : J) = {r : r*J ⊆ I}``, intersecting ``(I : g)`` over generators of J."""
    I._check(J)
    if J.is_zero():
        raise InvalidArgument("colon by the zero ideal")
    result = None
    for g in J.gens:
        if I.contains(g):
            continue
        inter = intersect(Ideal(I.ring, I.generators), Ideal(I.ring, [g]))
        quotients = [divide_exact(h, g) for h in inter.gens]
        part = Ideal(I.ring, quotients, I.modulus, I.spec)
        result = part if result is None else intersect(result, part)
    if result is None:
        return Ideal(I.ring, [I.ring.one], I.modulus, I.spec)
    return result.compact()


def radical_member(f, I):
    """Rabinowitsch: ``f`` is in the radical iff ``1 ∈ I + (1 - y*f)``."""
    ring = I.ring
    y = fresh_name(ring, "_y")
    big = ring.extend([y])
    gens = [big.convert(g) for g in I.generators]
    gens.append(1 - big.var(y) * big.convert(I._own(f)))
    return _groebner(big, gens).is_unit()


def colength(I):
    """``dim_k(ring/I)``: the number of standard monomials, or ``math.inf``."""
    gb = I.gb
    n = I.ring.nvars
    if not gb.generators:
        return math.inf if n else 1
    lms = gb.leading_monomials
    for i in range(n):
        if not any(m[i] and sum(m) == m[i] for m in lms):
            return math.inf
    return len(standard_monomials(I))


def standard_monomials(I):
    """Monomials outside the leading-term ideal (the ideal must be zero-dimensional)."""
    lms = I.gb.leading_monomials
    n = I.ring.nvars
    start = (0,) * n
    if any(monomial_divides(m, start) for m in lms):
        return []
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                mm = m[:i] + (m[i] + 1,) + m[i + 1 :]
                if mm in seen or any(monomial_divides(l, mm) for l in lms):
                    continue
                seen.add(mm)
                nxt.append(mm)
        frontier = nxt
    return sorted(seen, key=I.ring.order.key)


def lift(f, I):
    """Cofactors ``h`` with ``f == sum(h[i] * I.generators[i])``, or ``None``.

    Uses a Buchberger run that tracks how each basis element is built from the
    original generators, so it is much slower than plain membership.
    """
    ring = I.ring
    f = I._own(f)
    gens = list(I.generators)
    n = len(gens)
    zero = ring.zero
    max_gens, _ = budget()
    basis = []  # (poly, cofactors)
    for i, g in enumerate(gens):
        cof = [zero] * n
        cof[i] = ring.one
        basis.append((g, cof))

    def reduce(p, cof):
        p_terms = p
        while p_terms:
            for b, bcof in basis:
                lm = p_terms.lm
                if monomial_divides(b.lm, lm):
                    q = monomial_div(lm, b.lm)
                    c = p_terms.lc / b.lc
                    p_terms = p_terms - b.mul_term(q, c)
                    mono = ring.monomial(q, c)
                    cof = [x - mono * y for x, y in zip(cof, bcof)]
                    break
            else:
                return p_terms, cof
        return p_terms, cof

    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        (a, acof), (b, bcof) = basis[i], basis[j]
        if all(not (x and y) for x, y in zip(a.lm, b.lm)):
            continue
        lcm = monomial_lcm(a.lm, b.lm)
        ma = ring.monomial(monomial_div(lcm, a.lm), 1 / a.lc)
        mb = ring.monomial(monomial_div(lcm, b.lm), 1 / b.lc)
        s = ma * a - mb * b
        scof = [ma * x - mb * y for x, y in zip(acof, bcof)]
        h, hcof = reduce(s, scof)
        if h:
            k = len(basis)
            basis.append((h, hcof))
            if k > max_gens:
                raise ResourceLimitError("cofactor lift exceeded the generator budget")
            pairs.extend((x, k) for x in range(k))

    rem, cof = reduce(f, [zero] * n)
    if rem:
        return None
    # reduce() accumulated f - rem = -(sum cof*g); flip the sign.
    return [-c for c in cof]
