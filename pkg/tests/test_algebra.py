"""Field backend behaviour: axioms, roots, enumeration, parsing."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from partialdet.algebra import (
    ComplexField,
    InvalidFieldError,
    NotEnumerableError,
    PrimeField,
    RationalField,
    field_from_name,
)

rationals = st.fractions(max_numerator=50, max_denominator=20)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    f = RationalField()
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == f.zero()
    if a != 0:
        assert f.mul(a, f.div(f.one(), a)) == f.one()


def test_prime_field_axioms_randomized():
    rng = random.Random(20240817)
    for p in (2, 3, 5, 7, 11):
        f = PrimeField(p)
        for _ in range(200):
            a, b, c = (rng.randrange(p) for _ in range(3))
            assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            assert f.add(a, f.neg(a)) == 0
            if a:
                assert f.mul(a, f.inv(a)) == 1
            # Fermat: a^p = a
            assert f.pow(a, p) == a


def test_field_ops_examples(gf7, rat, gf2):
    assert gf7.mul(3, 5) == 1
    assert rat.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert gf2.add(1, 1) == 0
    assert gf7.pow(0, 0) == 1
    assert rat.pow(Fraction(0), 0) == 1


def test_division_by_zero(rat, gf7, c64):
    with pytest.raises(ZeroDivisionError):
        rat.div(Fraction(1), Fraction(0))
    with pytest.raises(ZeroDivisionError):
        gf7.div(3, 0)
    with pytest.raises(ZeroDivisionError):
        c64.div(1 + 0j, 0j)


def test_invalid_field():
    with pytest.raises(InvalidFieldError):
        PrimeField(6)
    with pytest.raises(InvalidFieldError):
        PrimeField(1)
    with pytest.raises(InvalidFieldError):
        PrimeField(2**31 + 11)
    with pytest.raises(InvalidFieldError):
        field_from_name("gf:not-a-number")
    with pytest.raises(InvalidFieldError):
        field_from_name("octonions")


def test_enumerate_field(gf2, rat, c64):
    assert PrimeField(3).elements() == [0, 1, 2]
    assert gf2.elements() == [0, 1]
    with pytest.raises(NotEnumerableError):
        rat.elements()
    with pytest.raises(NotEnumerableError):
        c64.elements()


def test_mth_roots_examples(gf7, rat):
    assert gf7.mth_roots(2, 2) == {3, 4}
    assert rat.mth_roots(Fraction(4, 9), 2) == {Fraction(2, 3), Fraction(-2, 3)}
    assert rat.mth_roots(Fraction(1), 1) == {Fraction(1)}
    assert gf7.mth_roots(1, 1) == {1}
    assert rat.mth_roots(Fraction(2), 2) == set()
    assert rat.mth_roots(Fraction(-8, 27), 3) == {Fraction(-2, 3)}
    assert rat.mth_roots(Fraction(-4), 2) == set()
    assert rat.mth_roots(Fraction(0), 5) == {Fraction(0)}


def test_mth_roots_exhaustive_consistency():
    for p in (2, 3, 5, 7):
        f = PrimeField(p)
        for m in range(1, 5):
            for b in f.elements():
                roots = f.mth_roots(b, m)
                for r in roots:
                    assert f.pow(r, m) == b
                for x in f.elements():
                    if x not in roots:
                        assert f.pow(x, m) != b


def test_complex_roots(c64):
    roots = c64.mth_roots(4 + 0j, 2)
    assert len(roots) == 2
    for r in roots:
        assert c64.eq(r * r, 4 + 0j)
    assert c64.mth_roots(0j, 3) == {0j}
    cubes = c64.mth_roots(-8 + 0j, 3)
    assert len(cubes) == 3
    for r in cubes:
        assert c64.eq(c64.pow(r, 3), -8 + 0j)


def test_complex_tolerance_equality():
    f = ComplexField(1e-9)
    assert f.eq(1.0 + 0j, 1.0 + 5e-10j)
    assert not f.eq(1.0 + 0j, 1.0 + 1e-6j)
    # relative scaling for large magnitudes
    assert f.eq(1e12 + 0j, 1e12 + 1.0j + 0j * 1)


def test_scalar_text_round_trip(rat, gf7, c64):
    assert rat.parse("-3/4") == Fraction(-3, 4)
    assert rat.format(Fraction(5, 6)) == "5/6"
    assert rat.format(Fraction(3)) == "3"
    assert gf7.parse("12") == 5
    assert gf7.parse("-1") == 6
    z = c64.parse("(1.5,-2.25)")
    assert z == complex(1.5, -2.25)
    assert c64.parse(c64.format(z)) == z
    assert c64.parse("2") == 2 + 0j


def test_field_names_round_trip():
    for name in ("rat", "gf:7", "gf:2", "c64"):
        assert field_from_name(name).name == name
