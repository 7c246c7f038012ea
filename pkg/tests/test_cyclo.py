import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mjtheta.cyclo import (
    Cyc, ex, cyclotomic_poly, cadd, cmul, cinv, ceq, ciszero, cconj,
    cfloat, as_fraction,
)

# float-embedding oracle: every exact identity is cross-checked numerically


def approx_eq(a, b, tol=1e-9):
    return abs(complex(a) - complex(b)) < tol


def emb(x):
    return cfloat(x)


def test_cyclotomic_poly_small():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_ex_basic():
    assert ex(0) == 1
    assert ex(1) == 1
    assert ex(Fraction(1, 2)) == -1
    z4 = ex(Fraction(1, 4))
    assert isinstance(z4, Cyc)
    assert approx_eq(emb(z4), 1j)
    assert ceq(cmul(z4, z4), -1)


def test_roots_of_unity_order():
    for den in (3, 5, 8, 12, 24):
        z = ex(Fraction(1, den))
        acc = Fraction(1)
        for _ in range(den):
            acc = cmul(acc, z)
        assert ceq(acc, 1)
        assert approx_eq(emb(z), cmath.exp(2j * cmath.pi / den))


def test_rational_demotion():
    z = ex(Fraction(1, 6))
    w = ex(Fraction(-1, 6))
    p = cmul(z, w)
    assert not isinstance(p, Cyc)
    assert p == 1


def test_conductor_mixing():
    a = ex(Fraction(1, 3))
    b = ex(Fraction(1, 4))
    p = cmul(a, b)
    assert approx_eq(emb(p), cmath.exp(2j * cmath.pi * (1 / 3 + 1 / 4)))
    s = cadd(a, b)
    assert approx_eq(emb(s),
                     cmath.exp(2j * cmath.pi / 3) + cmath.exp(2j * cmath.pi / 4))


def test_inverse():
    for den, num in [(5, 2), (7, 3), (8, 1), (12, 5)]:
        z = cadd(ex(Fraction(num, den)), Fraction(3, 2))
        zi = cinv(z)
        assert ceq(cmul(z, zi), 1)
        assert approx_eq(emb(zi), 1 / emb(z))


def test_conjugate():
    z = cadd(ex(Fraction(1, 7)), ex(Fraction(2, 7)))
    zc = cconj(z)
    assert approx_eq(emb(zc), emb(z).conjugate())
    # z * conj(z) is real: equals its own conjugate
    p = cmul(z, zc)
    assert ceq(p, cconj(p))


def test_as_fraction():
    assert as_fraction(cmul(ex(Fraction(1, 3)), ex(Fraction(2, 3)))) == 1
    with pytest.raises(ValueError):
        as_fraction(ex(Fraction(1, 3)))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)
roots = st.fractions(min_value=0, max_value=1, max_denominator=12)


@settings(max_examples=60, deadline=None)
@given(roots, roots, rationals)
def test_ring_axioms_numeric(r1, r2, c):
    a = cadd(ex(r1), c)
    b = ex(r2)
    assert approx_eq(emb(cmul(a, b)), emb(a) * emb(b), tol=1e-7)
    assert approx_eq(emb(cadd(a, b)), emb(a) + emb(b), tol=1e-7)
    # distributivity, exactly
    lhs = cmul(a, cadd(b, c))
    rhs = cadd(cmul(a, b), cmul(a, c))
    assert ceq(lhs, rhs)


@settings(max_examples=40, deadline=None)
@given(roots)
def test_half_turn_pairs(r):
    # ex(r) * ex(-r) == 1 exactly, whatever the conductor
    assert ceq(cmul(ex(r), ex(-r)), 1)


def test_iszero():
    assert ciszero(0)
    assert ciszero(Fraction(0))
    assert not ciszero(ex(Fraction(1, 5)))
    d = cadd(ex(Fraction(1, 5)), cmul(-1, ex(Fraction(1, 5))))
    assert ciszero(d)
