"""Named rings and polynomials used by the verification suite, plus random generators."""

import random
from dataclasses import dataclass

from .parsing import parse_point, parse_poly, parse_ring
from .poly import from_main_coefficients, main_degree

RINGS = {
    "plane": "QQ[x,y] domain",
    "line": "QQ[x] domain",
    "circle": "QQ[x,y]/(x^2 + y^2 - 1) domain",
    "cusp": "QQ[x,y]/(y^2 - x^3) domain",
    "plane-gf2": "GF(2)[s,t] domain",
    # k[s,t]/(s,t)^2: every polynomial over it is Gaussian.
    "square-zero": "GF(2)[s,t]/(s^2, s*t, t^2)",
    # k[s,t,s^2/t^2] in characteristic 2 with a=s, b=t, c=s^2/t^2.
    "ratio": "GF(2)[a,b,c]/(a^2 - b^2*c) domain",
    "axes": "QQ[s,t]/(s*t)",
}

# A rational point on each ring, used to keep random contents proper.
POINTS = {
    "plane": "x=0, y=0",
    "line": "x=0",
    "circle": "x=1, y=0",
    "cusp": "x=0, y=0",
    "plane-gf2": "s=0, t=0",
    "square-zero": "s=0, t=0",
    "ratio": "a=0, b=0, c=0",
    "axes": "s=0, t=0",
}

DOMAIN_RINGS = [name for name, text in RINGS.items() if text.endswith("domain")]

# Rings over which every polynomial is Gaussian (Pruefer domains).
PRUEFER_RINGS = ["line", "circle"]


def ring(name):
    return parse_ring(RINGS[name])


@dataclass(frozen=True)
class Example:
    ring: str
    poly: str
    point: str = None


# Claimed-domain polynomials for the Gaussian-iff-invertible cross-check.
DOMAIN_EXAMPLES = [
    Example("plane", "x + y*X"),
    Example("plane", "x + x*X"),
    Example("plane", "x^2 + x*y*X + y^2*X^2"),
    Example("plane", "x*y + x*X"),
    Example("line", "x + x^2*X"),
    Example("line", "1 + x*X"),
    Example("circle", "1 - x + y*X"),
    Example("circle", "1 - x + y*X + X^2 - x*X^2"),
    Example("circle", "x + y*X"),
    Example("cusp", "x + y*X"),
    Example("cusp", "y + x*y*X"),
    Example("plane-gf2", "s + t*X"),
    Example("ratio", "a + b*X"),
    Example("ratio", "a^2 + b^2*X^2"),
]

# Invertible content with zero-dimensional support at the given point.
BOUNDED_EXAMPLES = [
    Example("line", "x + x^2*X", "x=0"),
    Example("line", "x^2 - x*X + 2*x^3*X^2", "x=0"),
    Example("circle", "1 - x + y*X", "x=1, y=0"),
    Example("circle", "1 - x + y*X + X^2 - x*X^2", "x=1, y=0"),
    Example("cusp", "y + x*y*X", "x=0, y=0"),
]


def load(example):
    R = ring(example.ring)
    f = parse_poly(example.poly, R)
    point = parse_point(example.point, R) if example.point else None
    return R, f, point


def random_base_element(R, rng, max_degree=1, terms=2, coeffs=(-2, -1, 1, 2)):
    """A random element of the base ring, reduced modulo the relations."""
    p = R.base.zero
    if not R.variables:
        return R.base(rng.choice(coeffs))
    for _ in range(terms):
        exps = [0] * len(R.variables)
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(len(R.variables))] += 1
        p = p + R.base.monomial(tuple(exps), rng.choice(coeffs))
    return R.reduce(p)


def point_ideal_gens(R, name):
    """Generators ``v - a`` of the maximal ideal at the ring's catalog point."""
    point = parse_point(POINTS[name], R)
    return [R.base.var(v) - R.base(point[v]) for v in R.variables]


def random_poly(R, rng, max_main_degree=2, max_base_degree=1, terms=2,
                min_main_degree=0, within=None):
    """Random nonzero element of ``R[X]``.

    With ``within`` (a list of base elements) every coefficient is a random
    combination of them, so the content stays inside the ideal they generate.
    """
    while True:
        n = rng.randint(min_main_degree, max_main_degree)
        coeffs = []
        for _ in range(n + 1):
            if within:
                c = R.base.zero
                for _ in range(rng.randint(1, 2)):
                    r = random_base_element(R, rng, max(max_base_degree - 1, 0), terms)
                    c = c + r * rng.choice(within)
            else:
                c = random_base_element(R, rng, max_base_degree, terms)
            coeffs.append(c)
        f = R.reduce(from_main_coefficients(coeffs, R.full))
        if f and main_degree(f) >= min_main_degree:
            return f


def rng_for(seed):
    return random.Random(seed)
