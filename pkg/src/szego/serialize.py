"""JSON encodings.  Exact numbers always travel as ``"p/q"`` strings."""

from __future__ import annotations

from fractions import Fraction

from .decomposition import POLYNOMIAL, FactorMultiset
from .exact_arith import GaussRational, RatPoly, to_fraction
from .roots import IsolatingInterval, RootFindingError, complex_roots_approx

__all__ = [
    "fraction_to_str",
    "number_to_json",
    "number_from_json",
    "poly_to_json",
    "poly_from_json",
    "factors_to_json",
    "factors_from_json",
]


def fraction_to_str(x) -> str:
    return str(to_fraction(x))


def number_to_json(v):
    if isinstance(v, GaussRational):
        if v.im == 0:
            return fraction_to_str(v.re)
        return [fraction_to_str(v.re), fraction_to_str(v.im)]
    return fraction_to_str(v)


def _exact(v):
    if isinstance(v, float):
        raise TypeError(f"float {v!r} is not an exact rational; pass it as a string like \"1/3\"")
    return v


def number_from_json(v):
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            raise ValueError("complex numbers are [re, im] pairs")
        g = GaussRational(to_fraction(_exact(v[0])), to_fraction(_exact(v[1])))
        return g.re if g.im == 0 else g
    if isinstance(v, dict) and set(v) == {"re", "im"}:
        return number_from_json([v["re"], v["im"]])
    return to_fraction(_exact(v))


def poly_to_json(p: RatPoly, n: int | None = None) -> dict:
    d = {"coeffs": [fraction_to_str(c) for c in p.coeffs], "pretty": str(p)}
    if n is not None:
        d["n"] = n
    return d


def poly_from_json(obj) -> tuple[RatPoly, int | None]:
    """Accept ``{"coeffs": [...], "n": ...}`` or a bare ascending coefficient list."""
    n = None
    if isinstance(obj, dict):
        if "coeffs" not in obj:
            raise ValueError('polynomial JSON needs a "coeffs" list (ascending powers)')
        n = obj.get("n")
        obj = obj["coeffs"]
    if not isinstance(obj, list):
        raise ValueError("coefficients must be a JSON list")
    return RatPoly([to_fraction(_exact(c)) for c in obj]), (int(n) if n is not None else None)


def _interval_to_json(iv: IsolatingInterval) -> dict:
    return {"lo": fraction_to_str(iv.lo), "hi": fraction_to_str(iv.hi), "poly": [fraction_to_str(c) for c in iv.defining_poly.coeffs]}


def factors_to_json(fm: FactorMultiset, approx: bool = False) -> dict:
    d = {
        "rational": [fraction_to_str(a) for a in fm.rational],
        "complex_pairs": [[fraction_to_str(z.re), fraction_to_str(z.im)] for z in fm.complex_pairs],
        "algebraic": [_interval_to_json(iv) for iv in fm.algebraic],
        "zeros": fm.zeros,
        "infinity": fm.infinity,
        "scalar": fraction_to_str(fm.scalar),
        "mode": fm.mode,
    }
    if not fm.exact:
        d["residual"] = [fraction_to_str(c) for c in fm.residual.coeffs]
        d["other_complex_pairs"] = fm.other_complex_pairs
        if approx:
            d["approx"] = _approx_block(fm)
    return d


def _approx_block(fm: FactorMultiset) -> dict:
    try:
        roots = complex_roots_approx(fm.residual)
        bound = 1e-12
    except RootFindingError as exc:
        return {"error": str(exc), "residual_bound": exc.best_residual}
    vals = [(-z.real, -z.imag) for z in roots if z.imag > 0]
    return {"complex_a": [[re, im] for re, im in vals], "residual_bound": bound}


def factors_from_json(obj, mode: str | None = None) -> FactorMultiset:
    """Inverse of :func:`factors_to_json` for exact multisets."""
    if obj.get("algebraic") or obj.get("residual"):
        raise ValueError("only exact (rational / Gaussian-rational) multisets can be read back")
    pairs = []
    for z in obj.get("complex_pairs", []):
        g = number_from_json(z)
        if not isinstance(g, GaussRational):
            raise ValueError("complex pair entries need a nonzero imaginary part")
        pairs.append(g)
    values = [number_from_json(a) for a in obj.get("rational", [])]
    zeros = int(obj.get("zeros", 0)) + sum(1 for v in values if v == 0)
    values = [v for v in values if v != 0]
    if any(isinstance(v, GaussRational) for v in values):
        raise ValueError('complex values go in "complex_pairs"')
    return FactorMultiset(
        rational=tuple(values),
        complex_pairs=tuple(pairs),
        zeros=zeros,
        infinity=int(obj.get("infinity", 0)),
        scalar=to_fraction(obj.get("scalar", 1)),
        mode=mode or obj.get("mode", POLYNOMIAL),
    )
