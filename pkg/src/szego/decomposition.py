"""Recovering composition factors, and the affine map Phi.

Polynomial case.  With ``K_a`` normalized coefficients ``((n-j) a + j) / n``,
a composition ``P = c * K_{a_1} * ... * K_{a_{n-1}}`` has normalized
coefficients

    p_j = c * ((n-j)/n)^(n-1) * Q(j/(n-j)),     Q(t) = prod (t + a_i),

for ``j < n``.  So ``Q`` is recovered exactly by interpolating at the ``n``
nodes ``t_j = j/(n-j)``.  A factor ``(x+1)^(n-1)`` contributes ``(n-j)/n`` and
shows up as a missing degree of ``Q``.

Exponential case.  ``e^x R`` has ``gamma_j = G(j)`` with ``G`` the
falling-factorial transform of ``R``, and ``G = c * prod (t + a_i)``.

Both derivations are re-checked on every call by composing back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .composition import DegreeTaggedPoly, ExpForm, from_normalized
from .exact_arith import (
    GaussRational,
    RatPoly,
    as_ratpoly,
    falling_to_monomial,
    interpolate,
    monomial_to_falling,
    to_fraction,
    to_number,
)
from .roots import IsolatingInterval, isolate_real_roots, lacks_low_degree_factors, rational_roots, squarefree_decompose

__all__ = [
    "FactorMultiset",
    "DecompositionGateError",
    "decompose_poly",
    "decompose_exp",
    "node_polynomial",
    "poly_from_node",
    "AffineMap",
    "phi_affine",
    "phi_eigen_check",
    "phi_of",
    "EigenReport",
    "charpoly",
]

POLYNOMIAL = "polynomial"
EXPONENTIAL = "exponential"
MODES = (POLYNOMIAL, EXPONENTIAL)


class DecompositionGateError(RuntimeError):
    """Composing the recovered factors did not reproduce the input."""


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


@dataclass(frozen=True)
class FactorMultiset:
    """Multiset of composition-factor parameters ``a_i``.

    ``complex_pairs`` stores one member of each conjugate pair (``im > 0``).
    ``residual`` is the monic part of ``prod (t + a_i)`` whose roots are not
    held exactly: irrational reals (listed in ``algebraic`` as intervals for
    ``a_i``) and complex values that are not Gaussian rationals.
    """

    rational: tuple = ()
    complex_pairs: tuple = ()
    algebraic: tuple = ()
    zeros: int = 0
    infinity: int = 0
    scalar: Fraction = Fraction(1)
    residual: RatPoly = field(default_factory=lambda: RatPoly((1,)))
    mode: str = POLYNOMIAL

    def __post_init__(self):
        _check_mode(self.mode)
        object.__setattr__(self, "rational", tuple(sorted(to_fraction(a) for a in self.rational)))
        pairs = []
        for z in self.complex_pairs:
            z = GaussRational.coerce(to_number(z) if not isinstance(z, GaussRational) else z)
            if z.im == 0:
                raise ValueError("complex pair member must be non-real")
            pairs.append(z if z.im > 0 else z.conjugate())
        object.__setattr__(self, "complex_pairs", tuple(sorted(pairs, key=lambda z: (z.re, z.im))))
        object.__setattr__(self, "scalar", to_fraction(self.scalar))
        if any(a == 0 for a in self.rational):
            raise ValueError("zero factors are counted in `zeros`, not listed")
        if self.scalar == 0:
            raise ValueError("scalar must be nonzero")
        if self.residual.is_zero() or self.residual.lc != 1:
            raise ValueError("residual must be monic")
        if self.infinity and self.mode != POLYNOMIAL:
            raise ValueError("K_inf factors exist only in the polynomial case")

    # -- construction -------------------------------------------------------
    @classmethod
    def from_values(cls, values, scalar=1, infinity: int = 0, mode: str = POLYNOMIAL) -> "FactorMultiset":
        """Build from explicit values; non-real entries must come in conjugate pairs."""
        rational = []
        zeros = 0
        pending: dict = {}
        pairs = []
        for v in values:
            v = to_number(v)
            if isinstance(v, GaussRational):
                key = (v.re, abs(v.im))
                sign = 1 if v.im > 0 else -1
                bucket = pending.setdefault(key, [0, 0])
                bucket[0 if sign > 0 else 1] += 1
            elif v == 0:
                zeros += 1
            else:
                rational.append(v)
        for (re, im), (up, down) in pending.items():
            if up != down:
                raise ValueError(f"complex value {re}+{im}i lacks its conjugate")
            pairs.extend([GaussRational(re, im)] * up)
        return cls(tuple(rational), tuple(pairs), (), zeros, infinity, scalar, RatPoly((1,)), mode)

    # -- views ----------------------------------------------------------------
    @property
    def exact(self) -> bool:
        return self.residual.degree == 0

    @property
    def count(self) -> int:
        """Number of finite a_i (with multiplicity)."""
        return len(self.rational) + 2 * len(self.complex_pairs) + self.zeros + self.residual.degree

    @property
    def other_complex_pairs(self) -> int:
        return (self.residual.degree - len(self.algebraic)) // 2

    @property
    def complex_pair_count(self) -> int:
        return len(self.complex_pairs) + self.other_complex_pairs

    def values(self) -> list:
        """All exact values with multiplicity (raises if some are only isolated)."""
        if not self.exact:
            raise ValueError("multiset holds algebraic entries without exact values")
        out = [Fraction(0)] * self.zeros + list(self.rational)
        for z in self.complex_pairs:
            out.extend([z, z.conjugate()])
        return out

    def node_poly(self) -> RatPoly:
        """Monic ``prod (t + a_i)`` over the finite a_i."""
        out = RatPoly.monomial(self.zeros)
        for a in self.rational:
            out = out * RatPoly((a, 1))
        for z in self.complex_pairs:
            out = out * RatPoly((z.norm(), 2 * z.re, 1))
        return out * self.residual

    def to_polynomial(self, n: int) -> RatPoly:
        if self.mode != POLYNOMIAL:
            raise ValueError("not a polynomial-case multiset")
        if self.count + self.infinity != n - 1:
            raise ValueError(f"{self.count + self.infinity} factors do not match degree {n}")
        return poly_from_node(self.node_poly() * self.scalar, n)

    def to_expform(self) -> ExpForm:
        if self.mode != EXPONENTIAL:
            raise ValueError("not an exponential-case multiset")
        g = self.node_poly() * self.scalar
        return ExpForm(RatPoly(monomial_to_falling(g.coeffs)))

    def negated_node_roots(self):
        """Alias: the roots of ``node_poly`` are the numbers ``-a_i``."""
        return self.node_poly()

    def canonical(self) -> "FactorMultiset":
        return self


# ---------------------------------------------------------------------------
# polynomial case


def node_polynomial(p: RatPoly, n: int) -> RatPoly:
    """``c * Q`` interpolated from the values at the nodes ``t_j = j/(n-j)``."""
    nodes = []
    values = []
    cs = p.padded(n + 1)
    for j in range(n):
        pj = cs[j] / math.comb(n, j)
        nodes.append(Fraction(j, n - j))
        values.append(pj * Fraction(n ** (n - 1), (n - j) ** (n - 1)))
    return interpolate(nodes, values)


def poly_from_node(q: RatPoly, n: int) -> RatPoly:
    """Inverse of :func:`node_polynomial` for ``deg q <= n - 1``."""
    if q.degree > n - 1:
        raise ValueError("node polynomial degree exceeds n-1")
    normalized = []
    for j in range(n):
        normalized.append(Fraction((n - j) ** (n - 1), n ** (n - 1)) * q(Fraction(j, n - j)))
    normalized.append(q.coeff(n - 1))
    return from_normalized(normalized, n)


def _check_form(p: RatPoly, n: int) -> None:
    if p.is_zero():
        raise ValueError("zero polynomial")
    if n < 1:
        raise ValueError("n must be at least 1")
    if p.degree > n:
        raise ValueError(f"degree {p.degree} exceeds declared degree {n}")
    if p(-1) != 0:
        raise ValueError("not of form (x+1)*S: P(-1) != 0")


def decompose_poly(p, n: int | None = None) -> FactorMultiset:
    """Factors ``a_i`` with ``P = scalar * K_{a_1} * ... * K_{a_{n-1}}``.

    ``P`` must vanish at -1 and have degree at most ``n``; each missing degree
    of the recovered ``Q`` is a ``K_inf`` factor.
    """
    if isinstance(p, DegreeTaggedPoly):
        if n is not None and n != p.n:
            raise ValueError("mismatched declared degree")
        p, n = p.poly, p.n
    if n is None:
        raise ValueError("declared degree n is required")
    p = as_ratpoly(p)
    _check_form(p, n)
    qs = node_polynomial(p, n)
    scalar = qs.lc
    q = qs.monic()
    fm = factors_from_node(q, scalar, n - 1 - q.degree, POLYNOMIAL)
    if fm.to_polynomial(n) != p:
        raise DecompositionGateError("recovered factors do not compose back to P")
    return fm


# ---------------------------------------------------------------------------
# exponential case


def decompose_exp(r) -> FactorMultiset:
    """Factors with ``e^x R = scalar * (e^x (x + a_1)) * ... `` (a_i = 0 is e^x*x)."""
    if isinstance(r, ExpForm):
        r = r.y
    r = as_ratpoly(r)
    if r.is_zero():
        raise ValueError("zero polynomial")
    g = RatPoly(falling_to_monomial(r.coeffs))
    scalar = g.lc
    fm = factors_from_node(g.monic(), scalar, 0, EXPONENTIAL)
    if fm.to_expform().y != r:
        raise DecompositionGateError("recovered factors do not compose back to R")
    return fm


# ---------------------------------------------------------------------------
# root classification of the node polynomial


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    v = Fraction(int(man)) * (Fraction(2) ** int(exp))
    return -v if sign else v


def _gaussian_quadratics(g: RatPoly) -> list[RatPoly]:
    """Monic quadratic factors of g whose roots are non-real Gaussian rationals."""
    if g.degree < 2 or lacks_low_degree_factors(g):
        return []
    if g.degree == 2:
        h = g.monic()
        gamma, beta, _ = h.coeffs
        disc = beta * beta - 4 * gamma
        if disc < 0 and _is_square(-disc.numerator) and _is_square(disc.denominator):
            return [h]
        return []
    _, ints = g.content_primitive()
    bound = abs(ints[-1])
    digits = max(len(str(abs(v))) for v in ints)
    dps = 30 + 2 * len(str(bound)) + digits
    found = []
    with mpmath.workdps(dps):
        try:
            approx = mpmath.polyroots([mpmath.mpf(v) for v in reversed(ints)], maxsteps=400, extraprec=2 * dps)
        except mpmath.libmp.NoConvergence:
            return []
        rest = g
        for z in approx:
            z = mpmath.mpc(z)
            if z.imag <= 0:
                continue
            beta = _mpf_to_fraction(-2 * z.real).limit_denominator(bound)
            gamma = _mpf_to_fraction(z.real**2 + z.imag**2).limit_denominator(bound)
            disc = beta * beta - 4 * gamma
            if disc >= 0:
                continue
            if not (_is_square(-disc.numerator) and _is_square(disc.denominator)):
                continue
            h = RatPoly((gamma, beta, 1))
            if rest.degree >= 2 and (rest % h).is_zero():
                found.append(h)
                rest = rest.exact_div(h)
    return found


def _is_square(v: int) -> bool:
    if v < 0:
        return False
    r = math.isqrt(v)
    return r * r == v


def _quadratic_root(h: RatPoly) -> GaussRational:
    """The root with positive imaginary part of a monic quadratic with Gaussian-rational roots."""
    gamma, beta, _ = h.coeffs
    disc = -(beta * beta - 4 * gamma)
    im = Fraction(math.isqrt(disc.numerator), math.isqrt(disc.denominator)) / 2
    return GaussRational(-beta / 2, im)


def factors_from_node(q: RatPoly, scalar, infinity: int, mode: str) -> FactorMultiset:
    """Classify the roots ``-a_i`` of the monic node polynomial ``q``."""
    zeros = q.trailing_zero_multiplicity()
    rest = q.shift_down(zeros)
    rational: list = []
    pairs: list = []
    algebraic: list = []
    residual = RatPoly((1,))
    for f, mult in squarefree_decompose(rest):
        g = f
        for r in rational_roots(f):
            rational.extend([-r] * mult)
            g = g.exact_div(RatPoly((-r, 1)))
        for h in _gaussian_quadratics(g):
            root = _quadratic_root(h)
            # a = -root; store the member with positive imaginary part
            pairs.extend([GaussRational(-root.re, root.im)] * mult)
            g = g.exact_div(h)
        if g.degree > 0:
            residual = residual * g**mult
            for iv in isolate_real_roots(g):
                algebraic.extend([iv.negated()] * mult)
    return FactorMultiset(
        tuple(rational), tuple(pairs), tuple(algebraic), zeros, infinity, scalar, residual.monic(), mode
    )


# ---------------------------------------------------------------------------
# the affine map Phi


def phi_of(c, n: int, mode: str = POLYNOMIAL) -> list[Fraction]:
    """Phi(c) via full decomposition.

    Polynomial case: ``c`` are the coefficients of ``P/(x+1)`` after the
    leading 1; the image is the elementary symmetric functions of the a_i.
    Exponential case: ``R = 1 + c_1 x + ... + c_{n-1} x^(n-1)``; the image is
    the elementary symmetric functions of the ``1/a_i``.
    """
    _check_mode(mode)
    c = [to_fraction(v) for v in c]
    if len(c) != n - 1:
        raise ValueError(f"expected {n - 1} coordinates")
    if mode == POLYNOMIAL:
        s = RatPoly(list(reversed([Fraction(1)] + c)))
        fm = decompose_poly(RatPoly((1, 1)) * s, n)
        q = fm.node_poly()
        # sigma_j = coefficient of t^(n-1-j) in the monic node polynomial
        return [q.coeff(n - 1 - j) for j in range(1, n)]
    fm = decompose_exp(RatPoly([Fraction(1)] + c))
    g = fm.node_poly() * fm.scalar
    g0 = g.coeff(0)
    return [g.coeff(j) / g0 for j in range(1, n)]


@dataclass(frozen=True)
class AffineMap:
    n: int
    mode: str
    matrix: tuple
    offset: tuple

    def __call__(self, c) -> list[Fraction]:
        c = [to_fraction(v) for v in c]
        return [sum((m * v for m, v in zip(row, c)), Fraction(0)) + o for row, o in zip(self.matrix, self.offset)]

    def determinant(self) -> Fraction:
        return _det([list(r) for r in self.matrix])

    @property
    def invertible(self) -> bool:
        return self.determinant() != 0


def phi_affine(n: int, mode: str = POLYNOMIAL) -> AffineMap:
    """Phi as matrix + offset, from the images of 0 and the unit vectors."""
    _check_mode(mode)
    if n < 2:
        raise ValueError("n must be at least 2")
    d = n - 1
    offset = phi_of([0] * d, n, mode)
    cols = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        img = phi_of(e, n, mode)
        cols.append([a - b for a, b in zip(img, offset)])
    matrix = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
    return AffineMap(n, mode, matrix, tuple(offset))


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [list(r) for r in m]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            f = m[r][col] * inv
            if f:
                for k in range(col, size):
                    m[r][k] -= f * m[col][k]
    return det


def charpoly(matrix) -> RatPoly:
    """Characteristic polynomial det(lambda I - A) by the Faddeev-LeVerrier recurrence."""
    a = [[to_fraction(v) for v in row] for row in matrix]
    size = len(a)
    coeffs = [Fraction(0)] * (size + 1)
    coeffs[size] = Fraction(1)
    m = [[Fraction(0)] * size for _ in range(size)]
    for k in range(1, size + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = [[sum(a[i][t] * m[t][j] for t in range(size)) for j in range(size)] for i in range(size)]
        for i in range(size):
            am[i][i] += coeffs[size - k + 1]
        m = am
        tr = sum(sum(a[i][t] * m[t][i] for t in range(size)) for i in range(size))
        coeffs[size - k] = -tr / k
    return RatPoly(coeffs)


@dataclass(frozen=True)
class EigenReport:
    n: int
    mode: str
    charpoly: RatPoly
    eigenvalues: tuple  # rational eigenvalues with multiplicity, descending
    all_rational: bool
    all_positive: bool
    invertible: bool
    unsplit_factor: RatPoly  # part of the characteristic polynomial without rational roots

    @property
    def ok(self) -> bool:
        return self.all_rational and self.all_positive and self.invertible


def phi_eigen_check(n: int, mode: str = POLYNOMIAL, amap: AffineMap | None = None) -> EigenReport:
    """Exact eigenvalues of Phi's linear part; never masks a non-splitting case."""
    amap = amap or phi_affine(n, mode)
    cp = charpoly(amap.matrix)
    eig = []
    rest = cp
    for f, mult in squarefree_decompose(cp):
        for r in rational_roots(f):
            eig.extend([r] * mult)
            for _ in range(mult):
                rest = rest.exact_div(RatPoly((-r, 1)))
    eig.sort(reverse=True)
    all_rational = rest.degree == 0
    return EigenReport(
        n=n,
        mode=mode,
        charpoly=cp,
        eigenvalues=tuple(eig),
        all_rational=all_rational,
        all_positive=all_rational and all(e > 0 for e in eig),
        invertible=amap.invertible,
        unsplit_factor=rest.monic(),
    )
