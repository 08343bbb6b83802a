"""Exact real-root counting and isolation, plus an approximate complex solver.

Everything that feeds a count is exact (integer Sturm sequences).  The
approximate solver is for reporting only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .exact_arith import GaussRational, RatPoly, to_fraction

__all__ = [
    "lacks_low_degree_factors",
    "SturmSequence",
    "sturm_count",
    "squarefree_part",
    "squarefree_decompose",
    "IsolatingInterval",
    "isolate_real_roots",
    "rational_roots",
    "real_root_count",
    "complex_roots_approx",
    "RootFindingError",
]

INF = math.inf


class RootFindingError(RuntimeError):
    """Approximate solver did not reach the requested residual."""

    def __init__(self, message, best_residual):
        super().__init__(message)
        self.best_residual = best_residual


def _require_nonzero(p: RatPoly) -> None:
    if p.is_zero():
        raise ValueError("zero polynomial has no root count")


# -- integer helpers ---------------------------------------------------------


def _prim(ints: list[int]) -> list[int]:
    """Divide out the positive content; the sign is kept."""
    while ints and ints[-1] == 0:
        ints.pop()
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        return []
    return [v // g for v in ints]


def _prem_sign_ok(a: list[int], b: list[int]) -> list[int]:
    """Remainder of a by b scaled by a positive integer (signs preserved)."""
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    # multiply by |lb| each step: lb*a - coef*x^k*b, sign-correct when lb < 0
    sgn = 1 if lb > 0 else -1
    alb = abs(lb)
    while len(a) - 1 >= db and a:
        c = a[-1]
        k = len(a) - 1 - db
        a = [v * alb for v in a]
        cs = c * sgn
        for i in range(db + 1):
            a[k + i] -= cs * b[i]
        while a and a[-1] == 0:
            a.pop()
        if a:
            g = 0
            for v in a:
                g = math.gcd(g, v)
            if g > 1:
                a = [v // g for v in a]
    return a


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _eval_sign_int(ints: list[int], x) -> int:
    """Sign of the integer polynomial at a Fraction or +-inf."""
    if x == INF:
        return _sign(ints[-1])
    if x == -INF:
        return _sign(ints[-1]) * (1 if (len(ints) - 1) % 2 == 0 else -1)
    x = to_fraction(x)
    return _sign(_homog_eval(ints, x.numerator, x.denominator))


def _homog_eval(ints: list[int], num: int, den: int) -> int:
    d = len(ints) - 1
    acc = 0
    dp = 1
    pows = [1] * (d + 1)
    for i in range(1, d + 1):
        dp *= den
        pows[i] = dp
    for i in range(d, -1, -1):
        acc = acc * num + ints[i] * pows[d - i]
    return acc


# -- Sturm sequences ----------------------------------------------------------


class SturmSequence:
    """Sturm chain of the square-free part of ``p`` with integer entries."""

    def __init__(self, p: RatPoly):
        _require_nonzero(p)
        f = squarefree_part(p)
        _, s0 = f.content_primitive()
        s1 = _prim([c * j for j, c in enumerate(s0)][1:])
        seq = [s0]
        if s1:
            seq.append(s1)
            a, b = s0, s1
            while len(b) > 1:
                r = _prem_sign_ok(a, b)
                r = _prim([-v for v in r])
                if not r:
                    break
                seq.append(r)
                a, b = b, r
        self.seq = seq
        self.degree = len(s0) - 1

    def variations(self, x) -> int:
        prev = 0
        count = 0
        for s in self.seq:
            sg = _eval_sign_int(s, x)
            if sg == 0:
                continue
            if prev and sg != prev:
                count += 1
            prev = sg
        return count

    def count(self, lo=-INF, hi=INF) -> int:
        if not lo < hi:
            raise ValueError("need lo < hi")
        if self.degree <= 0:
            return 0
        return self.variations(lo) - self.variations(hi)


def sturm_count(p: RatPoly, lo=-INF, hi=INF) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval (lo, hi]."""
    _require_nonzero(p)
    return SturmSequence(p).count(lo, hi)


def real_root_count(p: RatPoly) -> int:
    """Distinct real roots of p."""
    return sturm_count(p)


# -- square-free decomposition -------------------------------------------------


def squarefree_part(p: RatPoly) -> RatPoly:
    _require_nonzero(p)
    if p.degree <= 0:
        return RatPoly((1,))
    g = p.gcd(p.derivative())
    return p.exact_div(g).monic()


def squarefree_decompose(p: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's algorithm; factors are monic, pairwise coprime and square-free."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free decomposition")
    if p.degree == 0:
        return []
    out = []
    f = p.monic()
    fp = f.derivative()
    a = f.gcd(fp)
    b = f.exact_div(a)
    c = fp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = b.gcd(d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        if a.degree > 0:
            out.append((a, i))
        d = c - b.derivative()
        i += 1
    return out


# -- isolation ------------------------------------------------------------------


@dataclass(frozen=True)
class IsolatingInterval:
    """A real algebraic number: the unique root of ``defining_poly`` in (lo, hi).

    Degenerate intervals (lo == hi) hold rational roots.
    """

    lo: Fraction
    hi: Fraction
    defining_poly: RatPoly

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def sign(self) -> int:
        if self.is_rational:
            return _sign(self.lo)
        return 1 if self.lo >= 0 else -1

    def check(self) -> bool:
        p = self.defining_poly
        if self.is_rational:
            return p(self.lo) == 0
        if not self.lo < self.hi:
            return False
        if self.lo < 0 < self.hi:
            return False
        if p(self.lo) == 0 or p(self.hi) == 0:
            return False
        return sturm_count(p, self.lo, self.hi) == 1

    def negated(self) -> "IsolatingInterval":
        return IsolatingInterval(-self.hi, -self.lo, self.defining_poly.reflect())

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def refine(self, width) -> "IsolatingInterval":
        """Bisect until hi - lo <= width."""
        if self.is_rational:
            return self
        _, ints = self.defining_poly.content_primitive()
        lo, hi = self.lo, self.hi
        slo = _sign(_homog_eval(ints, lo.numerator, lo.denominator))
        width = to_fraction(width)
        while hi - lo > width:
            mid = (lo + hi) / 2
            sm = _sign(_homog_eval(ints, mid.numerator, mid.denominator))
            if sm == 0:
                return IsolatingInterval(mid, mid, self.defining_poly)
            if sm == slo:
                lo = mid
            else:
                hi = mid
        return IsolatingInterval(lo, hi, self.defining_poly)

    def __float__(self):
        return float(self.midpoint())


def _cauchy_bound(p: RatPoly) -> Fraction:
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    b = 1 + m / lc
    # round up to a power of two to keep endpoints simple
    e = max(0, math.ceil(math.log2(float(b)) if b > 1 else 0)) + 1
    return Fraction(2**e)


def _isolate_squarefree(f: RatPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint (lo, hi] intervals, each holding exactly one root of square-free f."""
    seq = SturmSequence(f)
    bound = _cauchy_bound(f)
    out = []
    stack = [(-bound, Fraction(0)), (Fraction(0), bound)]
    while stack:
        lo, hi = stack.pop()
        c = seq.count(lo, hi)
        if c == 0:
            continue
        if c == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort()
    return out


def _rational_root_in(ints: list[int], lo: Fraction, hi: Fraction):
    """Exact search for a rational root of the primitive integer poly in (lo, hi].

    Returns the root or None.  Uses the fact that two distinct rationals with
    denominators dividing lc differ by at least 1/lc^2.
    """
    lc = abs(ints[-1])
    shi = _sign(_homog_eval(ints, hi.numerator, hi.denominator))
    if shi == 0:
        return hi
    target = Fraction(1, 2 * lc * lc)
    while True:
        cand = ((lo + hi) / 2).limit_denominator(lc)
        if lo < cand < hi and _homog_eval(ints, cand.numerator, cand.denominator) == 0:
            return cand
        if hi - lo < target:
            return None
        mid = (lo + hi) / 2
        sm = _sign(_homog_eval(ints, mid.numerator, mid.denominator))
        if sm == 0:
            return mid
        if sm == shi:
            hi = mid
        else:
            lo = mid


def _approx_rational_candidates(ints: list[int]):
    """Cheap float guesses for rational roots (verified exactly by the caller)."""
    if len(ints) <= 2:
        if len(ints) == 2:
            yield Fraction(-ints[0], ints[1])
        return
    try:
        with np.errstate(all="ignore"):
            rts = np.roots([float(c) for c in reversed(ints)])
    except (OverflowError, ValueError, np.linalg.LinAlgError):
        return
    lc = abs(ints[-1])
    for z in rts:
        if not np.isfinite(z):
            continue
        if abs(z.imag) > 1e-6 * max(1.0, abs(z.real)):
            continue
        x = Fraction(float(z.real))
        for bound in (1, 2, 4, 8, 16, 64, 256, 1024, 10**6):
            if bound > lc and bound != 1:
                break
            yield x.limit_denominator(bound)


# -- modular screen for factors of degree <= 2 --------------------------------

_SCREEN_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23)


def _mod_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_rem(a: list[int], m: list[int], p: int) -> list[int]:
    a = a[:]
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, v in enumerate(m):
            a[shift + i] = (a[shift + i] - c * v) % p
        _mod_trim(a)
    return a


def _mod_mulrem(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _mod_rem(_mod_trim([c % p for c in out]), m, p)


def _mod_gcd_degree(a: list[int], b: list[int], p: int) -> int:
    while b:
        a, b = b, _mod_rem(a, b, p)
    return len(a) - 1


def lacks_low_degree_factors(f: RatPoly, max_degree: int = 2) -> bool:
    """True when ``f`` provably has no factor of degree 1..max_degree (1 or 2) over Q.

    If h | f over Z then h mod p | f mod p for any prime p not dividing the
    leading coefficient, and every polynomial of degree <= 2 over F_p splits
    in F_{p^2}.  So ``gcd(f mod p, x^(p^2) - x) = 1`` for a single such p rules
    out all linear and quadratic factors (``x^p - x`` suffices for linear ones).
    False means "not proven", not "has one".
    """
    if max_degree not in (1, 2):
        raise ValueError("max_degree must be 1 or 2")
    if f.degree <= max_degree:
        return False
    _, ints = f.content_primitive()
    for p in _SCREEN_PRIMES:
        if ints[-1] % p == 0:
            continue
        m = [c % p for c in ints]
        acc, base, e = [1], [0, 1], p**max_degree
        while e:
            if e & 1:
                acc = _mod_mulrem(acc, base, m, p)
            base = _mod_mulrem(base, base, m, p)
            e >>= 1
        h = acc + [0] * max(0, 2 - len(acc))
        h[1] = (h[1] - 1) % p
        h = _mod_trim(h)
        if h and _mod_gcd_degree(m, h, p) == 0:
            return True
    return False


def rational_roots(p: RatPoly) -> list[Fraction]:
    """Distinct rational roots of p, ascending."""
    _require_nonzero(p)
    f = squarefree_part(p)
    found = set()
    if f.coeff(0) == 0:
        found.add(Fraction(0))
        f = f.shift_down(1)
    # fast path: float guesses, exactly verified and deflated
    _, ints = f.content_primitive() if f.degree > 0 else (None, [1])
    for cand in _approx_rational_candidates(ints) if f.degree > 0 else ():
        if cand in found:
            continue
        if f.degree > 0 and f(cand) == 0:
            found.add(cand)
            f = f.exact_div(RatPoly((-cand, 1)))
    if f.degree > 0 and not lacks_low_degree_factors(f, 1):
        _, ints = f.content_primitive()
        for lo, hi in _isolate_squarefree(f):
            r = _rational_root_in(ints, lo, hi)
            if r is not None:
                found.add(r)
    return sorted(found)


def isolate_real_roots(p: RatPoly) -> list[IsolatingInterval]:
    """One interval per distinct real root; rational roots as degenerate intervals.

    Irrational intervals never contain 0 and are certified by a Sturm count of 1
    on their (square-free, rational-root-free) defining polynomial.
    """
    _require_nonzero(p)
    f = squarefree_part(p)
    rats = rational_roots(f)
    out = [IsolatingInterval(r, r, RatPoly((-r, 1))) for r in rats]
    g = f
    for r in rats:
        g = g.exact_div(RatPoly((-r, 1)))
    if g.degree > 0:
        for lo, hi in _isolate_squarefree(g):
            # hi is never a root (no rational roots left), so (lo, hi) holds it
            out.append(IsolatingInterval(lo, hi, g))
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    return out


# -- approximate complex roots ------------------------------------------------------


def _aberth(coeffs: list[complex], iters: int = 500, tol: float = 1e-15) -> np.ndarray:
    """Aberth-Ehrlich on a float polynomial (descending coefficients)."""
    c = np.array(coeffs, dtype=complex)
    c = c / c[0]
    d = len(c) - 1
    deriv = np.polyder(c)
    radius = 1 + np.max(np.abs(c[1:])) if d > 0 else 1.0
    radius = min(radius, 1e6)
    k = np.arange(d)
    z = radius * 0.5 * np.exp(2j * np.pi * k / d + 0.4j) * (1 + 0.01 * k)
    for _ in range(iters):
        pz = np.polyval(c, z)
        dz = np.polyval(deriv, z)
        with np.errstate(all="ignore"):
            ratio = pz / dz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1)
            inv = 1 / diff
            np.fill_diagonal(inv, 0)
            s = inv.sum(axis=1)
            w = ratio / (1 - ratio * s)
        w = np.where(np.isfinite(w), w, 0)
        z = z - w
        if np.all(np.abs(w) <= tol * np.maximum(1, np.abs(z))):
            break
    return z


def complex_roots_approx(p: RatPoly, tol=Fraction(1, 10**12), max_iter: int = 200) -> list[complex]:
    """Approximate all deg(p) complex roots, with multiplicity.

    Each square-free factor is solved by Aberth iteration from points on a
    perturbed circle and polished by Newton steps in mpmath.  Raises
    :class:`RootFindingError` if any root misses ``|p(z)| / ||p|| < tol``.
    """
    _require_nonzero(p)
    tol = to_fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    out: list[complex] = []
    pnorm = max(abs(c) for c in p.coeffs)
    dps = 40
    for factor, mult in squarefree_decompose(p):
        _, ints = factor.content_primitive()
        d = len(ints) - 1
        if d == 1:
            roots = [mpmath.mpf(-ints[0]) / ints[1]]
        else:
            scale = max(abs(v) for v in ints)
            guess = _aberth([v / scale for v in reversed(ints)])
            with mpmath.workdps(dps):
                roots = []
                coeffs = [mpmath.mpf(v) for v in reversed(ints)]
                for g in guess:
                    z = mpmath.mpc(g.real, g.imag)
                    for _ in range(max_iter):
                        val, der = mpmath.polyval(coeffs, z, derivative=True)
                        if der == 0:
                            break
                        step = val / der
                        z -= step
                        if abs(step) <= mpmath.mpf(10) ** (-dps + 5) * max(1, abs(z)):
                            break
                    roots.append(z)
        for z in roots:
            out.extend([complex(z)] * mult)
    # residual check on p itself, at higher precision
    best = 0.0
    with mpmath.workdps(dps):
        pc = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(p.coeffs)]
        pn = mpmath.mpf(pnorm.numerator) / pnorm.denominator
        for z in out:
            r = abs(mpmath.polyval(pc, mpmath.mpc(z.real, z.imag))) / pn
            best = max(best, float(r))
    if best >= float(tol):
        raise RootFindingError(f"residual {best:.3g} above tolerance {float(tol):.3g}", best)
    return out


def gauss_rational_from_approx(z: complex, bound: int) -> GaussRational:
    return GaussRational(Fraction(z.real).limit_denominator(bound), Fraction(z.imag).limit_denominator(bound))
