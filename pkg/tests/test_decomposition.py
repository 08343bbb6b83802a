import random
from fractions import Fraction as F

import pytest

import _laws
from szego.composition import factor_K, schur_szego
from szego.decomposition import (
    EXPONENTIAL,
    POLYNOMIAL,
    DecompositionGateError,
    FactorMultiset,
    decompose_exp,
    decompose_poly,
    node_polynomial,
    phi_affine,
    phi_eigen_check,
    phi_of,
)
from szego.exact_arith import GaussRational, RatPoly

K2K3 = RatPoly([6, F(35, 3), F(20, 3), 1])


def test_k2k3():
    assert node_polynomial(K2K3, 3) == RatPoly([6, 5, 1])
    fm = decompose_poly(K2K3, 3)
    assert fm.rational == (2, 3) and fm.zeros == 0 and fm.scalar == 1 and fm.exact


def test_unity_gives_ones():
    for n in range(2, 9):
        fm = decompose_poly(RatPoly((1, 1)) ** n, n)
        assert fm.values() == [F(1)] * (n - 1)


def test_double_zero_root():
    p = RatPoly([0, 0, 1, 1])
    assert node_polynomial(p, 3) == RatPoly([0, F(-1, 2), 1])
    assert sorted(decompose_poly(p, 3).values()) == [F(-1, 2), 0]


def test_exp_examples():
    fm = decompose_exp(RatPoly([1, 2, F(1, 2)]))
    assert fm.rational == (1, 2) and fm.scalar == F(1, 2)
    assert fm.to_expform().y == RatPoly([1, 2, F(1, 2)])
    fm = decompose_exp(RatPoly([1]))
    assert fm.values() == [] and fm.scalar == 1
    fm = decompose_exp(RatPoly([0, 1, 1]))
    assert fm.zeros == 2 and fm.rational == () and fm.scalar == 1
    assert fm.to_expform().series(5) == [j * j for j in range(6)]


def test_complex_pair_roundtrip():
    z = GaussRational(F(1, 3), 2)
    fm = FactorMultiset.from_values([z, z.conjugate(), F(5)], scalar=F(-2, 7))
    p = fm.to_polynomial(4)
    back = decompose_poly(p, 4)
    assert back == fm
    assert back.complex_pairs == (z,)


def test_irreducible_node_kept_as_residual():
    # a_i = 1 +- sqrt 2 is neither rational nor Gaussian
    q = RatPoly([-1, -2, 1])  # roots -a_i = 1 +- sqrt2, so a_i = -1 -+ sqrt2
    from szego.decomposition import poly_from_node

    p = poly_from_node(q, 3)
    fm = decompose_poly(p, 3)
    assert not fm.exact and fm.count == 2
    assert fm.to_polynomial(3) == p


def test_degree_deficient_means_infinity():
    from szego.composition import factor_K_infinity, schur_szego_multi

    p = schur_szego_multi([factor_K(2, 4), factor_K_infinity(4), factor_K(-3, 4)])
    fm = decompose_poly(p, 4)
    assert fm.infinity == 1 and sorted(fm.values()) == [-3, 2]


def test_bad_inputs():
    with pytest.raises(ValueError):
        decompose_poly(RatPoly([]), 3)
    with pytest.raises(ValueError):
        decompose_poly(RatPoly([1, 1, 1, 1, 1]), 3)


def test_phi_small():
    assert phi_of([F(17, 3), 6], 3) == [5, 6]
    m = phi_affine(2)
    assert m.matrix == ((1,),) and m.offset == (0,)
    m = phi_affine(3)
    assert m([F(17, 3), 6]) == [5, 6]
    assert phi_eigen_check(2).eigenvalues == (1,)
    assert phi_eigen_check(3).eigenvalues == (F(3, 2), 1)
    assert phi_eigen_check(4).eigenvalues == (F(8, 3), F(4, 3), 1)


def test_phi_exponential_all_ones():
    for n in range(2, 7):
        rep = phi_eigen_check(n, EXPONENTIAL)
        assert rep.ok and set(rep.eigenvalues) == {1}


def test_roundtrip(rng):
    assert _laws.roundtrip(rng, 80, POLYNOMIAL) == []
    assert _laws.roundtrip(rng, 80, EXPONENTIAL) == []


def test_reversion_consistency():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(2, 7)
        vals = [_laws.random_rational(rng, nonzero=True) for _ in range(n - 1)]
        fm = FactorMultiset.from_values(vals)
        from szego.composition import DegreeTaggedPoly, revert

        pr = revert(DegreeTaggedPoly(fm.to_polynomial(n), n)).poly
        assert sorted(decompose_poly(pr, n).values()) == sorted(1 / a for a in vals)


def test_gate_error_is_runtime_error():
    assert issubclass(DecompositionGateError, RuntimeError)
