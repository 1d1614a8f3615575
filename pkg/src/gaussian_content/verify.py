"""Fixed catalog of checks reproducing the counterexamples and identities.

Each check has a stable anchor name and returns ``(passed, detail)``.
"""

import time
from dataclasses import dataclass

from . import catalog
from .content import (
    Status,
    content,
    content_product_defect,
    dedekind_mertens_check,
    find_witness,
    gaussian_generic,
    gaussian_status_domain,
    nu_sequence,
    power_substitution_check,
    principal_generator,
    squaring_track,
    verify_witness,
)
from .errors import GaussianContentError
from .parsing import parse_poly, parse_ring
from .poly import main_degree, substitute_power
from .rings import LocalityWitness

DEFAULT_RINGS = {
    "extension-counterexample": catalog.RINGS["square-zero"],
    "square-gaussian-factor": catalog.RINGS["ratio"],
    "reduced-ring": catalog.RINGS["axes"],
}


@dataclass
class CheckResult:
    anchor: str
    passed: bool
    detail: str
    seconds: float = 0.0


class CheckFailed(Exception):
    pass


def _require(cond, message):
    if not cond:
        raise CheckFailed(message)


def check_extension_counterexample(ring_text):
    """Over R = k[s,t]/(s,t)^2, s + tX is Gaussian, yet not over R[u,v]."""
    R = parse_ring(ring_text)
    S = R.adjoin(["u", "v"])
    f, g = parse_poly("s + t*X", S), parse_poly("u + v*X", S)
    sv = parse_poly("s*v", S.base)
    prod = content(f, S) * content(g, S)
    cfg = content(f * g, S)
    _require(prod.contains(sv), "sv should lie in c(f)c(g)")
    _require(cfg == S.ideal([parse_poly(p, S.base) for p in ("s*u", "t*v", "s*v + t*u")]),
             "c(fg) should be (su, tv, sv+tu)")
    _require(not cfg.contains(sv), "sv should not lie in (su, tv, sv+tu)")
    f0 = parse_poly("s + t*X", R)
    w = find_witness(f0, R, degree=2, exhaustive=True)
    _require(w is None, f"s + tX should be Gaussian over {R}, but g = {w and w.g} breaks it")
    verdict = gaussian_generic(f0, R, 1)
    _require(verdict.status is not Status.CERTIFIED,
             "generic test should not certify s + tX over R")
    how = "exhaustively at degree <= 2" if R.is_finite() else "by witness search"
    return f"sv in c(f)c(g) \\ c(fg) over {S}; f Gaussian over R ({how})"


def check_square_gaussian_factor(ring_text):
    """f^2 Gaussian with principal content while f is not."""
    R = parse_ring(ring_text)
    f = parse_poly("a + b*X", R)
    f2 = R.reduce(f * f)
    b2 = parse_poly("b^2", R.base)
    ab = parse_poly("a*b", R.base)
    if R.field.characteristic == 2:
        _require(f2 == parse_poly("a^2 + b^2*X^2", R), "f^2 should be a^2 + b^2 X^2")
    c2 = content(f2, R)
    _require(c2 == R.ideal([b2]), "c(f^2) should be (b^2)")
    _require(principal_generator(c2) is not None, "c(f^2) should be principal")
    _require((content(f, R) ** 2).contains(ab), "ab should lie in c(f)^2")
    _require(not c2.contains(ab), "ab should not lie in c(f^2)")
    _require(gaussian_status_domain(f2, R).certified, "f^2 should be certified Gaussian")
    v = gaussian_status_domain(f, R)
    _require(v.status is Status.NON_GAUSSIAN and verify_witness(f, v.witness, R),
             "f should be non-Gaussian with a verified witness")
    return f"c(f^2) = (b^2); ab in c(f)^2 \\ c(f^2); witness g = {v.witness.g}"


def check_reduced_ring(ring_text):
    P = parse_ring("QQ[s,t]")
    I = P.ideal([parse_poly("s*t", P.base), parse_poly("s^2 + t^2", P.base)])
    _require(not I.contains(parse_poly("s^2", P.base)), "s^2 should not lie in (st, s^2+t^2)")
    R = parse_ring(ring_text)
    f, g = parse_poly("s + t*X", R), parse_poly("t + s*X", R)
    _require(R.equal(f * g, parse_poly("s^2*X + t^2*X", R)),
             "fg should be (s^2 + t^2) X")
    d = content_product_defect(f, g, R)
    _require(d.contained, "c(fg) should be contained in c(f)c(g)")
    _require(not d.equal and d.witness == parse_poly("s^2", R.base),
             f"defect witness should be s^2, got {d.witness}")
    return "s^2 not in (st, s^2+t^2); witness s^2 for f = s + tX, g = t + sX"


def _ring_and_point(name):
    R = catalog.ring(name)
    return R, catalog.point_ideal_gens(R, name)


def check_power_substitution(seed=7, count=12):
    rng = catalog.rng_for(seed)
    names = list(catalog.RINGS)
    checked = 0
    for k in range(count):
        R, within = _ring_and_point(names[k % len(names)])
        f = catalog.random_poly(R, rng, 3, 2, min_main_degree=1, within=within)
        g = catalog.random_poly(R, rng, 3, 2, min_main_degree=1, within=within)
        n = rng.randint(1, 3)
        lhs = content(substitute_power(f, n) * substitute_power(g, n), R)
        _require(lhs == content(f * g, R), f"c(f(X^n)g(X^n)) != c(fg) for f={f}, g={g}, n={n}")
        checked += 1
    R = catalog.ring("plane")
    f, g = parse_poly("x + y*X", R), parse_poly("y + x*X", R)
    d1 = content_product_defect(f, g, R)
    d2 = content_product_defect(substitute_power(f, 2), substitute_power(g, 2), R)
    _require(not d1.equal and not d2.equal and d1.witness == d2.witness,
             "f and f(X^2) should fail with the same witness")
    for ex in catalog.DOMAIN_EXAMPLES:
        R, f, _ = catalog.load(ex)
        samples = [catalog.random_poly(R, rng) for _ in range(2)]
        _require(power_substitution_check(f, 2, samples, R),
                 f"power substitution failed for {f} over {R}")
    return f"{checked} random substitutions and {len(catalog.DOMAIN_EXAMPLES)} catalog checks"


def check_bounded_generators(mmax=3):
    parts = []
    for ex in catalog.BOUNDED_EXAMPLES:
        R, f, point = catalog.load(ex)
        seq = nu_sequence(f, LocalityWitness.at_point(R, point), mmax)
        _require(not seq.bound_violated, f"nu bound violated for {f}: {seq.values}")
        _require(all(seq.track.pullback_ok) and all(seq.track.degree_ok),
                 f"squaring track broken for {f}")
        _require(all(seq.track.matches_power), f"c(h_m) != c(f)^(2^m) for {f}")
        parts.append(f"{f}: {seq.values}")
    R = catalog.ring("plane")
    f = parse_poly("x + y*X", R)
    seq = nu_sequence(f, LocalityWitness.at_point(R, {"x": 0, "y": 0}), mmax)
    expected = [2 ** m + 1 for m in range(mmax + 1)]
    _require(seq.values == expected, f"nu for x + yX should be {expected}, got {seq.values}")
    _require(seq.violated_at == 1, "bound should fail from m = 1")
    v = gaussian_status_domain(f, R)
    _require(v.status is Status.NON_GAUSSIAN and verify_witness(f, v.witness, R),
             "x + yX should be non-Gaussian with a verified witness")
    parts.append(f"x + yX: {seq.values} (exceeds 2 from m = 1)")
    return "; ".join(parts)


def check_squaring_track(seed=11, count=6, mmax=2):
    rng = catalog.rng_for(seed)
    for k in range(count):
        R, within = _ring_and_point(catalog.PRUEFER_RINGS[k % 2])
        f = catalog.random_poly(R, rng, 3, 2, min_main_degree=1, within=within)
        track = squaring_track(f, R, mmax)
        _require(all(track.pullback_ok) and all(track.degree_ok) and all(track.matches_power),
                 f"squaring track failed for {f} over {R}")
    return f"{count} random polynomials over Pruefer rings, m <= {mmax}"


def check_dedekind_mertens(seed=3, count=16):
    rng = catalog.rng_for(seed)
    names = list(catalog.RINGS)
    for k in range(count):
        R, within = _ring_and_point(names[k % len(names)])
        f = catalog.random_poly(R, rng, 2, 2, min_main_degree=1, within=within)
        g = catalog.random_poly(R, rng, 2, 2, min_main_degree=1, within=within)
        _require(dedekind_mertens_check(f, g, R), f"Dedekind-Mertens failed for f={f}, g={g} over {R}")
    P = parse_ring("QQ[s,t,u,v]")
    _require(dedekind_mertens_check(parse_poly("s + t*X", P), parse_poly("u + v*X", P), P),
             "Dedekind-Mertens failed for s + tX, u + vX")
    return f"{count} random pairs across {len(names)} rings"


def invertibility_cross_check(example):
    R, f, _ = catalog.load(example)
    by_inverse = gaussian_status_domain(f, R)
    generic = gaussian_generic(f, R, main_degree(R.reduce(f)))
    return by_inverse, generic


def check_gaussian_iff_invertible():
    lines = []
    for ex in catalog.DOMAIN_EXAMPLES:
        by_inverse, generic = invertibility_cross_check(ex)
        _require(by_inverse.status is not Status.INCONCLUSIVE,
                 f"no decision for {ex.poly} over {ex.ring}")
        _require(by_inverse.certified == generic.certified,
                 f"verdicts disagree for {ex.poly} over {ex.ring}: "
                 f"{by_inverse.status.value} vs {generic.status.value}")
        R, f, _ = catalog.load(ex)
        for v in (by_inverse, generic):
            if v.status is Status.NON_GAUSSIAN:
                _require(verify_witness(f, v.witness, R), f"witness does not verify for {f}")
        lines.append(by_inverse.status.value)
    certified = lines.count(Status.CERTIFIED.value)
    return f"{len(lines)} domain examples agree ({certified} Gaussian, {len(lines) - certified} not)"


CHECKS = [
    ("extension-counterexample", lambda rings: check_extension_counterexample(rings["extension-counterexample"])),
    ("square-gaussian-factor", lambda rings: check_square_gaussian_factor(rings["square-gaussian-factor"])),
    ("reduced-ring", lambda rings: check_reduced_ring(rings["reduced-ring"])),
    ("power-substitution", lambda rings: check_power_substitution()),
    ("bounded-generators", lambda rings: check_bounded_generators()),
    ("squaring-track", lambda rings: check_squaring_track()),
    ("dedekind-mertens", lambda rings: check_dedekind_mertens()),
    ("gaussian-iff-invertible", lambda rings: check_gaussian_iff_invertible()),
]

ANCHORS = [name for name, _ in CHECKS]


def verify_paper(overrides=None):
    """Run every catalog check; ``overrides`` maps anchor names to ring text."""
    rings = dict(DEFAULT_RINGS)
    for anchor, text in (overrides or {}).items():
        if anchor not in DEFAULT_RINGS:
            raise KeyError(f"no ring to override for {anchor!r}")
        rings[anchor] = text
    results = []
    for anchor, run in CHECKS:
        start = time.perf_counter()
        try:
            detail = run(rings)
            passed = True
        except CheckFailed as exc:
            detail, passed = str(exc), False
        except GaussianContentError as exc:
            detail, passed = f"{type(exc).__name__}: {exc}", False
        results.append(CheckResult(anchor, passed, detail, time.perf_counter() - start))
    return results
