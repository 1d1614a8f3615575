from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gaussian_content import GF, QQ, InvalidArgument, field_inverse, normalize_rational
from gaussian_content.coeff import MAX_MODULUS, PrimeFieldElem, is_prime

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
primes = st.sampled_from([2, 3, 5, 7, 101, 65537, 2147483647])


@pytest.mark.parametrize("num, den, expected", [(2, 4, (1, 2)), (3, -6, (-1, 2)), (0, 7, (0, 1))])
def test_normalize_rational(num, den, expected):
    q = normalize_rational(num, den)
    assert (q.numerator, q.denominator) == expected


def test_zero_denominator():
    with pytest.raises(InvalidArgument):
        normalize_rational(1, 0)
    with pytest.raises(ValueError):
        QQ(1, 0)


def test_field_inverse_examples():
    assert field_inverse(Fraction(1, 2)) == 2
    assert field_inverse(GF(7)(3)) == GF(7)(5)
    assert field_inverse(GF(2)(1)) == GF(2)(1)
    with pytest.raises(ZeroDivisionError):
        field_inverse(Fraction(0))
    with pytest.raises(ZeroDivisionError):
        field_inverse(GF(5)(10))


def test_prime_check_and_cap():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(MAX_MODULUS)
    for bad in (0, 1, 4, 91, 2**31 + 11):
        with pytest.raises(InvalidArgument):
            GF(bad)


def test_residue_range_and_immutability():
    a = GF(5)(-7)
    assert a.residue == 3 and a.p == 5
    with pytest.raises(AttributeError):
        a.residue = 1
    assert GF(5)(1, 3) == GF(5)(2)
    with pytest.raises(InvalidArgument):
        GF(5)(1, 10)


def test_mixed_fields_rejected():
    with pytest.raises(InvalidArgument):
        GF(5)(1) + GF(7)(1)


def test_field_elements():
    assert [int(e) for e in GF(3).elements()] == [0, 1, 2]
    with pytest.raises(InvalidArgument):
        QQ.elements()


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * field_inverse(a) == 1


@given(st.integers(), st.integers(min_value=1))
def test_rational_canonical_form_unique(n, d):
    k = 7
    q, r = normalize_rational(n, d), normalize_rational(n * k, d * k)
    assert (q.numerator, q.denominator) == (r.numerator, r.denominator)
    assert q.denominator > 0


@given(primes, st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, x, y, z):
    F = GF(p)
    a, b, c = F(x), F(y), F(z)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    if a:
        assert a * a.inverse() == F.one
        assert (b / a) * a == b


@given(primes, st.integers(), st.integers())
def test_prime_field_matches_integers(p, x, y):
    F = GF(p)
    assert (F(x) + F(y)).residue == (x + y) % p
    assert (F(x) - F(y)).residue == (x - y) % p
    assert (F(x) * F(y)).residue == (x * y) % p
    assert (F(x) * y).residue == (x * y) % p
    assert isinstance(F(x), PrimeFieldElem)
    assert 0 <= F(x).residue < p
