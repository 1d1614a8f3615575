"""Content ideals and the Gaussian property.

``f`` lives in ``R[X]`` for a :class:`~gaussian_content.rings.RingSpec` ``R``;
its content ``c(f)`` is the ideal of ``R`` generated by the X-coefficients.
``f`` is Gaussian when ``c(f*g) == c(f)*c(g)`` for every ``g`` in ``R[X]``.
"""

import enum
import itertools
import logging
from dataclasses import dataclass, field

from .errors import InvalidArgument, UnsupportedInput
from .groebner import radical_member
from .poly import (
    MAIN_VAR,
    even_odd_split,
    from_main_coefficients,
    halve_main_degrees,
    main_coefficients,
    main_degree,
    negate_main_var,
    permute_coefficients,
    substitute_power,
)
from .rings import LocalityWitness, is_invertible, min_generators_local

log = logging.getLogger(__name__)

MAX_PERMUTATIONS = 720
MAX_SPECIALIZATIONS = 400


class Status(str, enum.Enum):
    CERTIFIED = "gaussian-certified"
    NON_GAUSSIAN = "non-gaussian"
    INCONCLUSIVE = "inconclusive"


class Method(str, enum.Enum):
    GENERIC = "generic-coefficients"
    INVERTIBILITY = "invertibility"
    PRINCIPAL = "principal-content"


@dataclass(frozen=True)
class Witness:
    """``element`` lies in ``c(f)*c(g)`` but not in ``c(f*g)``."""

    g: object
    element: object


@dataclass(frozen=True)
class GaussianVerdict:
    status: Status
    method: Method
    degree: int = None
    witness: Witness = None
    detail: str = ""

    @property
    def certified(self):
        return self.status is Status.CERTIFIED


def _prepare(f, ring):
    if f.ring != ring.full:
        f = ring.full.convert(f)
    return ring.reduce(f)


def content(f, ring):
    """Ideal of ``ring`` generated by the coefficients of ``f`` in ``X``."""
    f = _prepare(f, ring)
    if not f:
        log.debug("content of the zero polynomial is the zero ideal")
    return ring.ideal([c for c in main_coefficients(f) if c])


def degree(f, ring):
    return main_degree(_prepare(f, ring))


def verify_witness(f, witness, ring):
    f = _prepare(f, ring)
    g = _prepare(witness.g, ring)
    prod = content(f, ring) * content(g, ring)
    return prod.contains(witness.element) and not content(f * g, ring).contains(witness.element)


def _defect_element(f, g, ring):
    """First pairwise coefficient product outside ``c(f*g)``, or ``None``."""
    target = content(f * g, ring)
    for a in main_coefficients(f):
        if not a:
            continue
        for b in main_coefficients(g):
            if not b:
                continue
            p = ring.reduce(a * b)
            if p and not target.contains(p):
                return p
    return None


@dataclass(frozen=True)
class ContentDefect:
    contained: bool
    equal: bool
    witness: object = None


def content_product_defect(f, g, ring):
    """Compare ``c(f*g)`` with ``c(f)*c(g)``; the first always sits inside the second."""
    f, g = _prepare(f, ring), _prepare(g, ring)
    lhs = content(f * g, ring)
    rhs = content(f, ring) * content(g, ring)
    contained = lhs <= rhs
    w = _defect_element(f, g, ring)
    return ContentDefect(contained, w is None, w)


def _candidates(f, ring, degree, exhaustive):
    coeffs = [c for c in main_coefficients(f)]
    seen = set()

    def fresh(g):
        g = ring.reduce(g)
        if g in seen:
            return False
        seen.add(g)
        return sum(1 for c in main_coefficients(g) if c) >= 2

    for h in (f, negate_main_var(f)):
        perms = itertools.permutations(range(len(coeffs)))
        for perm in itertools.islice(perms, MAX_PERMUTATIONS):
            g = permute_coefficients(h, perm)
            if fresh(g):
                yield g

    pool = []
    seeds = [c for c in coeffs if c] + list(ring.gens) + [ring.base.zero, ring.base.one]
    for p in seeds + [-c for c in seeds]:
        p = ring.reduce(p)
        if p not in pool:
            pool.append(p)
    count = 0
    for choice in itertools.product(pool, repeat=degree + 1):
        g = from_main_coefficients(choice, ring.full)
        if fresh(g):
            yield g
            count += 1
            if count >= MAX_SPECIALIZATIONS:
                break

    if exhaustive and ring.is_finite():
        elems = ring.elements()
        for choice in itertools.product(elems, repeat=degree + 1):
            g = from_main_coefficients(choice, ring.full)
            if fresh(g):
                yield g


def find_witness(f, ring, degree=None, exhaustive=False):
    """Search for ``g`` with ``c(f*g) != c(f)*c(g)``.

    Tries coefficient permutations of ``f(X)`` and ``f(-X)`` first, then
    polynomials of degree at most ``degree`` whose coefficients come from
    the coefficients of ``f``, the variables, 0, 1 and their negatives. With ``exhaustive`` and a finite ring,
    every polynomial of degree at most ``degree`` is tried afterwards.
    """
    f = _prepare(f, ring)
    if degree is None:
        degree = main_degree(f)
    for g in _candidates(f, ring, degree, exhaustive):
        w = _defect_element(f, g, ring)
        if w is not None:
            return Witness(g, w)
    return None


def _fresh_names(ring, count):
    taken = set(ring.variables) | {MAIN_VAR}
    stem = "u"
    while any(f"{stem}{i}" in taken for i in range(count)):
        stem += "_"
    return [f"{stem}{i}" for i in range(count)]


def generic_polynomial(ring, degree):
    """``(R[u0..ud], sum u_i X^i)``."""
    names = _fresh_names(ring, degree + 1)
    ext = ring.adjoin(names)
    g = from_main_coefficients([ext.base.var(n) for n in names], ext.full)
    return ext, g


def gaussian_generic(f, ring, degree=None):
    """Test ``c(f*g) == c(f)*c(g)`` for the generic ``g`` of the given degree.

    Equality means multiplicativity for every ``g`` of that degree over every
    extension ring, which is stronger than Gaussian over ``ring`` itself
    unless ``ring`` is a domain.
    """
    f = _prepare(f, ring)
    if not f:
        raise InvalidArgument("the zero polynomial has no Gaussian status")
    if degree is None:
        degree = main_degree(f)
    ext, g = generic_polynomial(ring, degree)
    fe = ext.full.convert(f)
    if content(fe * g, ext) == content(fe, ext) * content(g, ext):
        return GaussianVerdict(Status.CERTIFIED, Method.GENERIC, degree)
    w = find_witness(f, ring, degree)
    if w is not None:
        return GaussianVerdict(Status.NON_GAUSSIAN, Method.GENERIC, degree, w)
    return GaussianVerdict(
        Status.INCONCLUSIVE,
        Method.GENERIC,
        degree,
        detail="generic product is not multiplicative; no concrete witness over the ring",
    )


def principal_generator(I):
    """A single generator among ``I.gens`` that generates ``I``, if any."""
    for g in I.nonzero_gens():
        if I.principal(g) == I:
            return g
    return None


def gaussian_status_domain(f, ring):
    """Decide Gaussian-ness over a domain via invertibility of the content."""
    if not ring.domain:
        raise UnsupportedInput("invertibility test needs a ring flagged as a domain")
    f = _prepare(f, ring)
    if not f:
        raise InvalidArgument("the zero polynomial has no Gaussian status")
    d = main_degree(f)
    if is_invertible(content(f, ring)):
        return GaussianVerdict(Status.CERTIFIED, Method.INVERTIBILITY, d)
    w = find_witness(f, ring, d)
    if w is not None:
        return GaussianVerdict(Status.NON_GAUSSIAN, Method.INVERTIBILITY, d, w)
    return GaussianVerdict(
        Status.INCONCLUSIVE,
        Method.INVERTIBILITY,
        d,
        detail="content is not invertible but no witness was found in the search budget",
    )


def gaussian_status(f, ring, degree=None):
    """Principal content first, then invertibility on domains, else the generic test."""
    f = _prepare(f, ring)
    if not f:
        raise InvalidArgument("the zero polynomial has no Gaussian status")
    if principal_generator(content(f, ring)) is not None:
        return GaussianVerdict(Status.CERTIFIED, Method.PRINCIPAL, main_degree(f))
    if ring.domain and degree is None:
        return gaussian_status_domain(f, ring)
    return gaussian_generic(f, ring, degree)


def dedekind_mertens_check(f, g, ring):
    """``c(f)^(m+1) c(g) == c(f)^m c(fg)`` with ``m = deg g``, and equal radicals."""
    f, g = _prepare(f, ring), _prepare(g, ring)
    if not f or not g:
        raise InvalidArgument("Dedekind-Mertens needs nonzero polynomials")
    m = main_degree(g)
    cf, cg, cfg = content(f, ring), content(g, ring), content(f * g, ring)
    power = cf ** m
    if (power * cf * cg).compact() != (power * cfg).compact():
        return False
    prod = cf * cg
    if not all(radical_member(p, cfg) for p in prod.gens):
        return False
    return all(radical_member(p, prod) for p in cfg.gens)


def power_substitution_check(f, n, samples, ring):
    """``c(f(X^n) g(X^n)) == c(f g)`` for each sample, and multiplicativity of
    ``f(X^n)`` against each sample whenever ``f`` is certified Gaussian."""
    f = _prepare(f, ring)
    fn = substitute_power(f, n)
    certified = False
    if ring.domain and f:
        certified = gaussian_status_domain(f, ring).certified
    for g in samples:
        g = _prepare(g, ring)
        if content(fn * substitute_power(g, n), ring) != content(f * g, ring):
            return False
        if certified and content(fn * g, ring) != content(fn, ring) * content(g, ring):
            return False
    return True


def squaring_step(h):
    """``g0^2 - X*g1^2`` where ``h = g0(X^2) + X*g1(X^2)``."""
    g0, g1 = even_odd_split(h)
    X = h.ring.var(MAIN_VAR)
    return g0 * g0 - X * g1 * g1


@dataclass
class SquaringTrack:
    """Polynomials ``h_0 = f, h_{m+1} = squaring_step(h_m)`` and their checks.

    ``pullback_ok[m]``: ``h_{m+1}(X^2) == h_m(X) h_m(-X)``.
    ``degree_ok[m]``: ``deg h_{m+1} == deg f``.
    ``matches_power[m]``: ``c(h_m) == c(f)^(2^m)``; holds when ``f`` is Gaussian.
    """

    polys: list
    pullback_ok: list = field(default_factory=list)
    degree_ok: list = field(default_factory=list)
    matches_power: list = field(default_factory=list)
    powers: list = field(default_factory=list)


def squaring_track(f, ring, mmax):
    f = _prepare(f, ring)
    d = main_degree(f)
    I = content(f, ring)
    track = SquaringTrack([f], powers=[I])
    h = f
    for _ in range(mmax):
        nxt = ring.reduce(squaring_step(h))
        full = ring.reduce(h * negate_main_var(h))
        track.pullback_ok.append(ring.equal(halve_main_degrees(full), nxt))
        track.degree_ok.append(main_degree(nxt) == d)
        track.polys.append(nxt)
        track.powers.append((track.powers[-1] * track.powers[-1]).compact())
        h = nxt
    track.matches_power = [
        content(h, ring) == power for h, power in zip(track.polys, track.powers)
    ]
    return track


@dataclass
class NuSequence:
    """Local generator counts ``nu(c(f)^(2^m))`` for ``m = 0..mmax``."""

    ideal: object
    degree: int
    values: list
    track: SquaringTrack

    @property
    def bound(self):
        return self.degree + 1

    @property
    def violated_at(self):
        for m, v in enumerate(self.values):
            if v > self.bound:
                return m
        return None

    @property
    def bound_violated(self):
        return self.violated_at is not None


def nu_sequence(f, witness, mmax, ring=None):
    """Follow the squaring track and count local generators of ``c(f)^(2^m)``.

    A value above ``deg f + 1`` shows ``f`` is not Gaussian.
    """
    if not isinstance(witness, LocalityWitness):
        raise InvalidArgument("need a LocalityWitness")
    ring = ring or witness.ring
    track = squaring_track(f, ring, mmax)
    values = [min_generators_local(power, witness) for power in track.powers]
    return NuSequence(track.powers[0], main_degree(track.polys[0]), values, track)
