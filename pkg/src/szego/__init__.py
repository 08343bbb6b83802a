"""Exact Schur-Szego composition: compose, decompose, classify and realize sign patterns."""

from .composition import (
    DegreeTaggedPoly,
    ExpForm,
    exp_apply_factor,
    exp_compose,
    factor_K,
    factor_K_infinity,
    kappa,
    revert,
    schur_szego,
    schur_szego_multi,
)
from .decomposition import AffineMap, FactorMultiset, decompose_exp, decompose_poly, phi_affine, phi_eigen_check
from .exact_arith import GaussRational, GaussRatPoly, RatPoly
from .phi_map import phi_report
from .realization import (
    RealizationCertificate,
    SearchConfig,
    base_composition_exp,
    base_composition_pol,
    couple_factor_exp,
    couple_factor_pol,
    realize_all,
    realize_case,
)
from .signature import (
    CaseSpec,
    RootSignature,
    SignVector8,
    check_necessary,
    classify_roots,
    enumerate_cases,
    signature_pair,
    verify_realization,
)

__version__ = "0.1.0"
