"""Schur-Szego composition of degree-n polynomials and of functions e^x * Y.

A polynomial ``A = sum C(n,j) a_j x^j`` is stored by its ordinary
coefficients; the *normalized* coefficients are the ``a_j``.  Composition at a
declared degree ``n`` multiplies normalized coefficients entrywise, so ``n`` is
always explicit (see :class:`DegreeTaggedPoly`).

For entire functions ``f = sum gamma_j x^j / j!`` composition multiplies the
``gamma_j``.  Functions of the form ``e^x * Y`` have ``gamma_j = G(j)`` where
``G`` is ``Y`` rewritten in the falling-factorial basis, which keeps every
operation closed-form and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import (
    GaussRational,
    GaussRatPoly,
    RatPoly,
    _DensePoly,
    binomial,
    falling_factorial,
    falling_to_monomial,
    monomial_to_falling,
    to_fraction,
    to_number,
)

__all__ = [
    "DegreeTaggedPoly",
    "ExpForm",
    "schur_szego",
    "schur_szego_multi",
    "factor_K",
    "factor_K_infinity",
    "revert",
    "exp_apply_factor",
    "exp_compose",
    "exp_truncated_compose",
    "kappa",
    "sign_changes",
    "make_monic",
    "real_if_possible",
    "normalized_coeffs",
    "from_normalized",
]


def real_if_possible(p):
    """Demote a Gaussian polynomial whose imaginary parts all vanish."""
    if isinstance(p, GaussRatPoly) and p.is_real():
        return p.real_part()
    return p


def _as_poly(p):
    if isinstance(p, _DensePoly):
        return p
    cs = [to_number(c) for c in p]
    if any(isinstance(c, GaussRational) for c in cs):
        return GaussRatPoly(cs)
    return RatPoly(cs)


@dataclass(frozen=True)
class DegreeTaggedPoly:
    """A polynomial together with the degree ``n`` at which it is composed."""

    poly: _DensePoly
    n: int

    def __post_init__(self):
        object.__setattr__(self, "poly", _as_poly(self.poly))
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError("declared degree must be a nonnegative integer")
        if self.poly.degree > self.n:
            raise ValueError(f"degree {self.poly.degree} exceeds declared degree {self.n}")

    @property
    def full_degree(self) -> bool:
        return self.poly.degree == self.n

    def normalized(self) -> list:
        return normalized_coeffs(self.poly, self.n)

    def __iter__(self):
        # lets ``poly, n = tagged`` work
        return iter((self.poly, self.n))


def normalized_coeffs(p, n: int) -> list:
    """``coeff_j / C(n, j)`` for j = 0..n."""
    cs = p.padded(n + 1)
    return [c / binomial(n, j) for j, c in enumerate(cs)]


def from_normalized(values, n: int):
    cs = [to_number(v) * binomial(n, j) for j, v in enumerate(values)]
    if any(isinstance(c, GaussRational) for c in cs):
        return GaussRatPoly(cs)
    return RatPoly(cs)


def _tag(p, n=None) -> DegreeTaggedPoly:
    if isinstance(p, DegreeTaggedPoly):
        if n is not None and p.n != n:
            raise ValueError(f"mismatched declared degrees {p.n} and {n}")
        return p
    if n is None:
        raise ValueError("untagged polynomial needs an explicit degree")
    return DegreeTaggedPoly(p, n)


def schur_szego(a: DegreeTaggedPoly, b: DegreeTaggedPoly):
    """``A*B = sum C(n,j) a_j b_j x^j`` at the common declared degree.

    At least one operand must have full degree n.  Returns a RatPoly, or a
    GaussRatPoly when an operand has non-real coefficients.
    """
    if a.n != b.n:
        raise ValueError(f"mismatched declared degrees {a.n} and {b.n}")
    if not (a.full_degree or b.full_degree):
        raise ValueError("at least one composed polynomial must have degree n")
    return schur_szego_multi([a, b])


def schur_szego_multi(factors):
    """Composition of any number of factors sharing one declared degree."""
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    n = factors[0].n
    for f in factors:
        if f.n != n:
            raise ValueError(f"mismatched declared degrees {n} and {f.n}")
    if not any(f.full_degree for f in factors):
        raise ValueError("at least one composed polynomial must have degree n")
    acc = [Fraction(1)] * (n + 1)
    for f in factors:
        nc = f.normalized()
        acc = [x * y for x, y in zip(acc, nc)]
    return from_normalized(acc, n)


def factor_K(a, n: int) -> DegreeTaggedPoly:
    """``K_a = (x+1)^(n-1) (x+a)`` tagged with degree n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    a = to_number(a)
    cs = [binomial(n - 1, j - 1) + a * binomial(n - 1, j) for j in range(n + 1)]
    return DegreeTaggedPoly(from_coeffs(cs), n)


def from_coeffs(cs):
    if any(isinstance(c, GaussRational) for c in cs):
        return GaussRatPoly(cs)
    return RatPoly(cs)


def factor_K_infinity(n: int) -> DegreeTaggedPoly:
    """``K_inf = (x+1)^(n-1)``, the degree-deficient limit of K_a."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return DegreeTaggedPoly(RatPoly([binomial(n - 1, j) for j in range(n)]), n)


def revert(p: DegreeTaggedPoly) -> DegreeTaggedPoly:
    """``x^n P(1/x)``: the coefficient list reversed inside length n+1."""
    cs = p.poly.padded(p.n + 1)
    return DegreeTaggedPoly(type(p.poly)(reversed(cs)), p.n)


def make_monic(p):
    """Return ``(scalar, monic)`` with ``p == scalar * monic``."""
    lc = p.lc
    return lc, p * (1 / lc if isinstance(lc, GaussRational) else Fraction(1) / lc)


def sign_changes(p: RatPoly) -> int:
    """Sign alternations in the sequence of nonzero coefficients."""
    if p.is_zero():
        raise ValueError("zero polynomial has no sign pattern")
    signs = [1 if c > 0 else -1 for c in p.coeffs if c]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


# ---------------------------------------------------------------------------
# entire functions e^x * Y


@dataclass(frozen=True)
class ExpForm:
    """The entire function ``e^x * y(x)``."""

    y: _DensePoly

    def __post_init__(self):
        object.__setattr__(self, "y", _as_poly(self.y))

    def gamma_poly(self):
        """G with ``gamma_j = G(j)`` for every j >= 0."""
        if self.y.is_zero():
            return type(self.y)(())
        cs = self.y.coeffs
        if isinstance(self.y, GaussRatPoly):
            re = falling_to_monomial([c.re for c in cs])
            im = falling_to_monomial([c.im for c in cs])
            return GaussRatPoly(GaussRational(r, i) for r, i in zip(re, im))
        return RatPoly(falling_to_monomial(cs))

    @classmethod
    def from_gamma_poly(cls, g) -> "ExpForm":
        if isinstance(g, GaussRatPoly):
            re = monomial_to_falling(g.real_part().padded(len(g)))
            im = monomial_to_falling(g.imag_part().padded(len(g)))
            return cls(real_if_possible(GaussRatPoly(GaussRational(r, i) for r, i in zip(re, im))))
        return cls(RatPoly(monomial_to_falling(g.coeffs)))

    def series(self, N: int) -> list:
        """``gamma_0..gamma_N`` computed straight from the definition."""
        cs = self.y.coeffs
        return [sum((c * falling_factorial(j, k) for k, c in enumerate(cs)), Fraction(0)) for j in range(N + 1)]

    def taylor(self, N: int) -> list:
        """Ordinary Taylor coefficients of e^x * y through x^N (series cross-check)."""
        out = []
        cs = self.y.coeffs
        for j in range(N + 1):
            acc = Fraction(0)
            for k, c in enumerate(cs):
                if k <= j:
                    acc += c * Fraction(1, _fact(j - k))
            out.append(acc)
        return out


def _fact(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def kappa(a) -> ExpForm:
    """``kappa_a = e^x (1 + x/a)``; ``a`` must be nonzero."""
    a = to_number(a)
    if a == 0:
        raise ValueError("kappa_a needs a nonzero; use the factor e^x*x instead")
    return ExpForm(from_coeffs([Fraction(1), 1 / a if isinstance(a, GaussRational) else Fraction(1) / a]))


def exp_apply_factor(alpha, beta, f: ExpForm) -> ExpForm:
    """``e^x (alpha x + beta) * e^x Y = e^x (alpha x (Y + Y') + beta Y)``."""
    alpha = to_number(alpha)
    beta = to_number(beta)
    if alpha == 0 and beta == 0:
        raise ValueError("factor e^x*(alpha x + beta) must be nonzero")
    y = f.y
    x = RatPoly.x()
    out = x * (y + y.derivative()) * alpha + y * beta
    return ExpForm(real_if_possible(out) if isinstance(out, GaussRatPoly) else out)


def exp_compose(*forms: ExpForm) -> ExpForm:
    """Composition of any number of e^x * Y forms (product of gamma polynomials)."""
    if not forms:
        raise ValueError("need at least one factor")
    g = forms[0].gamma_poly()
    for f in forms[1:]:
        g = g * f.gamma_poly()
    return ExpForm.from_gamma_poly(g)


def exp_truncated_compose(f, g, N: int) -> list:
    """Entrywise product of two gamma sequences through index N."""
    f = list(f)
    g = list(g)
    if len(f) < N + 1 or len(g) < N + 1:
        raise ValueError(f"need at least {N + 1} coefficients in each series")
    return [f[j] * g[j] for j in range(N + 1)]
