from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from szego.exact_arith import (
    GaussRational,
    GaussRatPoly,
    RatPoly,
    falling_factorial,
    falling_to_monomial,
    interpolate,
    monomial_to_falling,
    stirling1,
    stirling2,
    to_fraction,
)

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=30)
coeff_lists = st.lists(fracs, min_size=1, max_size=8)


def test_floats_never_enter():
    with pytest.raises(TypeError):
        to_fraction(0.5)
    assert to_fraction("3/4") == F(3, 4)
    assert to_fraction(7) == F(7)


def test_gauss_arithmetic_matches_sympy():
    z = GaussRational(F(1, 2), F(-3))
    w = GaussRational(2, F(5, 7))
    zs = sympy.Rational(1, 2) - 3 * sympy.I
    ws = 2 + sympy.Rational(5, 7) * sympy.I
    for got, want in ((z * w, zs * ws), (z / w, zs / ws), (z - w, zs - ws), (z**3, zs**3)):
        want = sympy.expand(want)
        assert got.re == F(str(sympy.re(want))) and got.im == F(str(sympy.im(want)))
    assert z.conjugate() * z == z.norm()
    assert GaussRational(3, 0) == F(3)


@given(coeff_lists, coeff_lists)
def test_poly_ring_against_sympy(a, b):
    x = sympy.Symbol("x")
    pa, pb = RatPoly(a), RatPoly(b)
    sa = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(a))
    sb = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(b))
    prod = sympy.Poly(sympy.expand(sa * sb), x)
    got = pa * pb
    if prod.is_zero:
        assert got.is_zero()
    else:
        assert [F(str(c)) for c in reversed(prod.all_coeffs())] == list(got.coeffs)
    if not pb.is_zero():
        q, r = pa.divmod(pb)
        assert q * pb + r == pa
        assert r.is_zero() or r.degree < pb.degree


def test_zero_poly_degree_and_normalisation():
    assert RatPoly([0, 0]).is_zero()
    assert RatPoly([1, 2, 0, 0]).degree == 1
    assert RatPoly([]).degree == float("-inf")


def test_gcd_and_monic():
    a = RatPoly.from_roots([1, 2, F(1, 3)])
    b = RatPoly.from_roots([2, F(1, 3), -5])
    g = a.gcd(b)
    assert g == RatPoly.from_roots([2, F(1, 3)])
    assert g.lc == 1


def test_interpolation_examples():
    assert interpolate([0, 1, 2], [6, 12, 20]) == RatPoly([6, 5, 1])
    with pytest.raises(ValueError):
        interpolate([0, 0], [1, 2])
    with pytest.raises(ValueError):
        interpolate([0, 1], [1])


@given(st.lists(fracs, min_size=1, max_size=7, unique=True), st.data())
def test_interpolation_reproduces_values(nodes, data):
    values = data.draw(st.lists(fracs, min_size=len(nodes), max_size=len(nodes)))
    p = interpolate(nodes, values)
    assert all(p(t) == v for t, v in zip(nodes, values))
    assert p.is_zero() or p.degree < len(nodes)


def test_stirling_rows():
    assert stirling1(4) == (0, -6, 11, -6, 1)
    assert stirling2(4) == (0, 1, 7, 6, 1)


def test_falling_factorial_examples():
    # t(t-1) = t^2 - t
    assert falling_to_monomial([0, 0, 1]) == [0, -1, 1]
    # 1 + 2x + x^2/2 -> (t+1)(t+2)/2
    assert falling_to_monomial([1, 2, F(1, 2)]) == [1, F(3, 2), F(1, 2)]


@given(coeff_lists)
def test_falling_roundtrip_and_values(cs):
    mono = falling_to_monomial(cs)
    assert monomial_to_falling(mono) == [to_fraction(c) for c in cs]
    g = RatPoly(mono)
    for t in range(6):
        assert g(t) == sum(c * falling_factorial(t, k) for k, c in enumerate(cs))


def test_gauss_poly_demotion():
    z = GaussRational(1, 2)
    p = GaussRatPoly.from_roots([z, z.conjugate()])
    assert p.is_real()
    assert p.to_ratpoly() == RatPoly([5, -2, 1])
