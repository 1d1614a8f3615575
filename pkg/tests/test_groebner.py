import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from gaussian_content import (
    GF,
    LEX,
    QQ,
    Ideal,
    InvalidArgument,
    PolyRing,
    ResourceLimitError,
    buchberger,
    colength,
    colon,
    ideal_equal,
    intersect,
    is_member,
    normal_form,
    parse_poly,
    parse_poly_list,
    radical_member,
)
from gaussian_content.groebner import clear_cache, is_groebner, standard_monomials

from oracles import bounded_membership, colength_power_of_maximal

R = PolyRing(QQ, ("x", "y"))
R3 = PolyRing(GF(3), ("x", "y"))


def P(text, ring=R):
    return parse_poly(text, ring)


def I(text, ring=R):
    return Ideal(ring, parse_poly_list(text, ring))


small = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)).filter(lambda m: sum(m) <= 2),
    st.integers(-2, 2),
    min_size=1,
    max_size=3,
)


def test_normal_form_examples():
    L = R.with_order(LEX)
    G = buchberger([L.convert(P("x^2 + y^2 - 1"))])
    assert normal_form(L.convert(P("x^2")), G) == L.convert(P("1 - y^2"))
    G = I("x^2 + y^2 - 1, x*y - 1").gb
    for g in parse_poly_list("x^2 + y^2 - 1, x*y - 1", R):
        assert not normal_form(g, G)
    f = P("x^5 + 3*x*y^3 - y")
    once = normal_form(f, G)
    assert normal_form(once, G) == once


def test_buchberger_examples():
    assert set(buchberger([R.var("x"), R.var("y")]).generators) == {R.var("x"), R.var("y")}
    L = R.with_order(LEX)
    G = buchberger([L.convert(P("x^2 + y^2 - 1")), L.convert(P("1 - x"))])
    assert set(G.generators) == {L.convert(P("x - 1")), L.convert(P("y^2"))}
    S = PolyRing(QQ, ("s", "t", "u", "v"))
    G = buchberger(parse_poly_list("s*u, t*v, s*v + t*u, s^2, s*t, t^2", S))
    assert normal_form(P("s*v", S), G)
    assert is_groebner(G)


def test_reduced_basis_shape():
    G = I("x^3 - 2*x*y, x^2*y - 2*y^2 + x").gb
    assert is_groebner(G)
    lms = G.leading_monomials
    for g in G.generators:
        assert g.lc == 1
        for h in G.generators:
            if h is not g:
                assert not any(all(a <= b for a, b in zip(h.lm, m)) for m in g.terms)
    assert len(set(lms)) == len(lms)


def test_membership_examples():
    S = PolyRing(QQ, ("s", "t"))
    assert not is_member(P("s^2", S), I("s*t, s^2 + t^2", S))
    J = I("x^2 + y^2, x*y")
    assert is_member(P("x*y"), J)
    assert all(is_member(g, J) for g in J.gens)


def test_equality_examples():
    assert ideal_equal(I("x, y"), I("y, x + y"))
    assert not ideal_equal(I("x"), I("x^2"))
    S = PolyRing(QQ, ("s", "t", "u", "v"))
    left = I("s*u, s*v, t*u, t*v", S)
    right = I("s*u, s*v + t*u, t*v", S)
    assert right <= left and not ideal_equal(left, right)


def test_intersect_examples():
    assert intersect(I("x"), I("y")) == I("x*y")
    J = I("x^2 - y, x*y")
    assert intersect(J, J) == J
    assert intersect(I("x"), I("x, y")) == I("x")


def test_colon_examples():
    assert colon(I("x^2, x*y"), I("x")) == I("x, y")
    J = I("x^3, y^2 - x")
    assert colon(J, Ideal(R, [R.one])) == J
    assert colon(I("x*y"), I("x")) == I("y")
    with pytest.raises(InvalidArgument):
        colon(J, Ideal(R, []))


def test_radical_examples():
    assert radical_member(P("x"), I("x^2"))
    assert not radical_member(P("y"), I("x^2"))
    assert radical_member(P("x + y"), I("x^3, y^5"))


def test_colength_examples():
    assert colength(I("x, y")) == 1
    assert colength(I("x^2, x*y, y^2")) == 3
    assert colength(I("x")) == math.inf
    assert sorted(standard_monomials(I("x^2, x*y, y^2"))) == [(0, 0), (0, 1), (1, 0)]


@pytest.mark.parametrize("n", range(1, 7))
def test_colength_of_maximal_powers(n):
    assert colength(I("x, y") ** n) == n * (n + 1) // 2 == colength_power_of_maximal(2, n)


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_shuffled_generators_same_basis(gens, rnd):
    gens = [R.from_dict(g) for g in gens]
    gens = [g for g in gens if g]
    if not gens:
        return
    G = buchberger(gens)
    assert is_groebner(G)
    mixed = gens + [gens[0] * P("x - y") + gens[-1]]
    rnd.shuffle(mixed)
    assert buchberger(mixed).generators == G.generators


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=1, max_size=3), small, st.sampled_from([R, R3]))
def test_membership_matches_linear_algebra(gens, target, ring):
    gens = [ring.from_dict(g) for g in gens]
    gens = [g for g in gens if g]
    f = ring.from_dict(target)
    if not gens:
        return
    J = Ideal(ring, gens)
    if bounded_membership(f, gens, 3):
        assert is_member(f, J)
    if not is_member(f, J):
        assert not bounded_membership(f, gens, 3)


def test_constructed_members_found():
    rng = random.Random(5)
    for ring in (R, R3):
        gens = [P("x^2 - y", ring), P("x*y + 1", ring)]
        J = Ideal(ring, gens)
        for _ in range(20):
            f = ring.zero
            for g in gens:
                h = ring.from_dict({(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-3, 3)})
                f = f + h * g
            assert is_member(f, J)
            assert bounded_membership(f, gens, 6)


@settings(max_examples=25, deadline=None)
@given(st.lists(small, min_size=1, max_size=2), st.lists(small, min_size=1, max_size=2))
def test_intersect_and_colon_containments(a, b):
    A = Ideal(R, [R.from_dict(g) for g in a])
    B = Ideal(R, [R.from_dict(g) for g in b])
    if A.is_zero() or B.is_zero():
        return
    inter = intersect(A, B)
    assert A * B <= inter
    assert inter <= A and inter <= B
    assert colon(A, B) * B <= A


def test_quotient_ideals_carry_modulus():
    J = Ideal(R, [P("x")], modulus=[P("x^2 + y^2 - 1")])
    assert is_member(P("y^2 - 1"), J)
    assert not is_member(P("y - 1"), J)
    assert colength(J) == 2


def test_resource_limit(monkeypatch):
    monkeypatch.setenv("GAUSSIAN_CONTENT_MAX_GENERATORS", "3")
    clear_cache()
    try:
        with pytest.raises(ResourceLimitError):
            buchberger(parse_poly_list("x^3 - y, x*y^2 - 1, y^3 - x^2 + x", R))
    finally:
        clear_cache()
