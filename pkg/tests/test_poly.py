import itertools

import pytest
from hypothesis import given, strategies as st

from gaussian_content import (
    GF,
    GREVLEX,
    LEX,
    QQ,
    InvalidArgument,
    MonomialOrder,
    PolyRing,
    content,
    even_odd_split,
    negate_main_var,
    parse_poly,
    permute_coefficients,
    poly_arith,
    substitute_power,
)
from gaussian_content import catalog
from gaussian_content.poly import main_coefficients, main_degree, main_view

R = PolyRing(QQ, ("x", "y", "X"))
S = PolyRing(GF(2), ("s", "t", "u", "v", "X"))

monomials = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(monomials, st.integers(-5, 5), max_size=5).map(R.from_dict)
exponents = st.tuples(*[st.integers(0, 6)] * 4)


def P(text, ring=R):
    return parse_poly(text, ring)


def test_arith_examples():
    assert poly_arith(P("s + t*X", S), P("u + v*X", S), "mul") == P("s*u + s*v*X + t*u*X + t*v*X^2", S)
    f = P("x^2 - y*X")
    assert poly_arith(f, R.one, "mul") == f
    assert P("s + t*X", S) ** 2 == P("s^2 + t^2*X^2", S)
    assert poly_arith(f, f, "sub") == R.zero


def test_ring_mismatch():
    with pytest.raises(InvalidArgument):
        poly_arith(R.var("x"), PolyRing(QQ, ("x", "z", "X")).var("x"), "add")
    with pytest.raises(InvalidArgument):
        poly_arith(R.var("x"), R.var("y"), "div")


def test_no_zero_terms_stored():
    f = P("x + y") - P("y")
    assert f.terms == {(1, 0, 0): 1}
    assert all(c for c in P("3*x - 3*x + y^2").terms.values())


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f - f == R.zero


@pytest.mark.parametrize("order", [LEX, GREVLEX, MonomialOrder("block", block=2)])
@given(a=exponents, b=exponents, c=exponents)
def test_orders_total_and_multiplicative(order, a, b, c):
    ka, kb = order.key(a), order.key(b)
    assert (ka == kb) == (a == b)
    mul = lambda m, n: tuple(i + j for i, j in zip(m, n))
    if ka < kb:
        assert order.key(mul(a, c)) < order.key(mul(b, c))
    assert order.key((0, 0, 0, 0)) <= ka


def test_grevlex_and_lex_differ():
    # x*y^2 vs x^2: grevlex prefers total degree, lex the first variable.
    assert GREVLEX.key((1, 2)) > GREVLEX.key((2, 0))
    assert LEX.key((1, 2)) < LEX.key((2, 0))


def test_main_view_reassembles():
    f = P("x + y*X^2 - X^3")
    view = main_view(f)
    assert view.degree == 3
    assert str(view.coeffs[1]) == "0"
    assert view.reassemble() == f


def test_substitute_power():
    assert substitute_power(P("x + y*X"), 2) == P("x + y*X^2")
    f = P("x^2 - X + y*X^3")
    assert substitute_power(f, 1) == f
    for n in (0, -1):
        with pytest.raises(InvalidArgument):
            substitute_power(f, n)


@given(polys, st.integers(1, 4), st.integers(1, 4))
def test_substitute_power_composes(f, a, b):
    assert substitute_power(substitute_power(f, a), b) == substitute_power(f, a * b)


def test_negate_main_var():
    assert negate_main_var(P("s + t*X", S)) == P("s - t*X", S)
    f = P("x - y*X + x*y*X^2")
    assert negate_main_var(negate_main_var(f)) == f


def test_even_odd_split_examples():
    a = [P(t) for t in ("x", "y", "x*y")]
    g0, g1 = even_odd_split(a[0] + a[1] * R.var("X") + a[2] * R.var("X") ** 2)
    assert g0 == P("x + x*y*X") and g1 == P("y")
    c = P("x^2 + 1")
    assert even_odd_split(c) == (c, R.zero)


def test_even_odd_roundtrip_random():
    rng = catalog.rng_for(100)
    X = R.var("X")
    for _ in range(100):
        f = catalog.random_poly(catalog.ring("plane"), rng, max_main_degree=6, max_base_degree=2)
        g0, g1 = even_odd_split(f)
        assert substitute_power(g0, 2) + X * substitute_power(g1, 2) == f


def test_permute_coefficients():
    assert permute_coefficients(P("s + t*X", S), (1, 0)) == P("t + s*X", S)
    f = P("x + y*X + X^2")
    assert permute_coefficients(f, (0, 1, 2)) == f
    assert main_coefficients(permute_coefficients(f, (2, 0, 1)))[0] == R.base.one
    with pytest.raises(InvalidArgument):
        permute_coefficients(f, (0, 1))
    with pytest.raises(InvalidArgument):
        permute_coefficients(f, (0, 0, 1))


@pytest.mark.parametrize("name", ["plane", "circle", "ratio", "axes"])
def test_content_invariance(name):
    R = catalog.ring(name)
    rng = catalog.rng_for(name)
    for _ in range(10):
        f = catalog.random_poly(R, rng, max_main_degree=3, max_base_degree=2)
        I = content(f, R)
        d = main_degree(f)
        assert content(negate_main_var(f), R) == I
        assert content(substitute_power(f, 3), R) == I
        perm = list(range(d + 1))
        rng.shuffle(perm)
        assert content(permute_coefficients(f, perm), R) == I


def test_all_permutations_small():
    f = P("x + y*X + x*y*X^2")
    R2 = catalog.ring("plane")
    I = content(R2.reduce(R2.full.convert(f)), R2)
    for perm in itertools.permutations(range(3)):
        assert content(R2.full.convert(permute_coefficients(f, perm)), R2) == I
