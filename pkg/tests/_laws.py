"""Law checkers shared by the unit tests (small scale) and the acceptance suite.

Each function returns a list of failure descriptions; empty means the law held
on every sampled instance.  Oracles avoid the code path under test where
possible (e.g. round trips compose with literal K_a factors, not with the
node-interpolation route used by decompose).
"""

from __future__ import annotations

import random
from fractions import Fraction as F

from szego.composition import (
    DegreeTaggedPoly,
    ExpForm,
    exp_apply_factor,
    exp_compose,
    factor_K,
    kappa,
    revert,
    schur_szego,
    schur_szego_multi,
    sign_changes,
)
from szego.decomposition import EXPONENTIAL, POLYNOMIAL, FactorMultiset, decompose_exp, decompose_poly
from szego.exact_arith import GaussRational, GaussRatPoly, RatPoly
from szego.sampling import random_rational, random_ratpoly, random_values
from szego.signature import analyze, check_necessary

ONE_PLUS_X = RatPoly((1, 1))


def tagged(p, n):
    return DegreeTaggedPoly(p, n)


# -- composition ------------------------------------------------------------


def identity_law(rng, per_n=500, ns=range(2, 13)):
    bad = []
    for n in ns:
        e = tagged(ONE_PLUS_X**n, n)
        for _ in range(per_n):
            a = random_ratpoly(rng, n)
            if schur_szego(e, tagged(a, n)) != a or schur_szego(tagged(a, n), e) != a:
                bad.append((n, a))
    return bad


def diffpol_laws(rng, trials=200, nmax=12):
    bad = []
    for _ in range(trials):
        n = rng.randint(2, nmax)
        a, b = random_ratpoly(rng, n), random_ratpoly(rng, n)
        lhs = schur_szego(tagged(a, n), tagged(b, n)).derivative()
        rhs = schur_szego(tagged(a.derivative(), n - 1), tagged(b.derivative(), n - 1)) * F(1, n)
        if lhs != rhs:
            bad.append(("(A*B)'", n, a, b))
        s = random_ratpoly(rng, n - 1)
        lhs = schur_szego(tagged(RatPoly.x() * s, n), tagged(b, n))
        rhs = RatPoly.x() * schur_szego(tagged(s, n - 1), tagged(b.derivative(), n - 1)) * F(1, n)
        if lhs != rhs:
            bad.append(("xS*B", n, s, b))
    return bad


def _series_from_taylor(f: ExpForm, N: int):
    """gamma_j = j! * (Taylor coefficient), independent of the falling-factorial route."""
    out = []
    fact = 1
    for j, c in enumerate(f.taylor(N)):
        if j:
            fact *= j
        out.append(c * fact)
    return out


def _deriv(f: ExpForm) -> ExpForm:
    return ExpForm(f.y + f.y.derivative())


def diffef_laws(rng, trials=100, N=25, deg=5):
    bad = []
    for _ in range(trials):
        f = ExpForm(random_ratpoly(rng, rng.randint(0, deg)))
        g = ExpForm(random_ratpoly(rng, rng.randint(0, deg)))
        fg = exp_compose(f, g)
        sf, sg, sfg = (_series_from_taylor(h, N) for h in (f, g, fg))
        if sfg != [u * v for u, v in zip(sf, sg)] or f.series(N) != sf:
            bad.append(("series", f, g))
        if _series_from_taylor(_deriv(fg), N) != _series_from_taylor(exp_compose(_deriv(f), _deriv(g)), N):
            bad.append(("(f*g)'", f, g))
        xf = ExpForm(RatPoly.x() * f.y)
        lhs = exp_compose(xf, g)
        rhs = ExpForm(RatPoly.x() * exp_compose(f, _deriv(g)).y)
        if lhs.y != rhs.y or _series_from_taylor(lhs, N) != _series_from_taylor(rhs, N):
            bad.append(("xf*g", f, g))
    return bad


def revert_laws(rng, trials=100, nmax=10):
    bad = []
    for _ in range(trials):
        n = rng.randint(2, nmax)
        vals = [random_rational(rng, nonzero=True) for _ in range(n - 1)]
        p = schur_szego_multi([factor_K(a, n) for a in vals])
        pr = revert(tagged(p, n)).poly
        prod = F(1)
        for a in vals:
            prod *= a
        want = schur_szego_multi([factor_K(1 / a, n) for a in vals]) * prod
        if pr != want:
            bad.append(("(1) direct", n, vals))
        if sorted(decompose_poly(pr, n).rational) != sorted(1 / a for a in vals):
            bad.append(("(1) factors", n, vals))
        a, b = random_ratpoly(rng, n), random_ratpoly(rng, n)
        if a.coeff(0) == 0 and b.coeff(0) == 0:
            a = a + 1
        lhs = revert(tagged(schur_szego(tagged(a, n), tagged(b, n)), n)).poly
        rhs = schur_szego(revert(tagged(a, n)), revert(tagged(b, n)))
        if lhs != rhs:
            bad.append(("(2)", n, a, b))
        x = RatPoly.x()
        if schur_szego(tagged(ONE_PLUS_X ** (n - 1), n), tagged(a, n)) != a - x * a.derivative() * F(1, n):
            bad.append(("(3a)", n, a))
        want = a - x * a.derivative() * F(2, n) + x * x * a.derivative(2) * F(1, n * (n - 1))
        if schur_szego(tagged(ONE_PLUS_X ** (n - 2), n), tagged(a, n)) != want:
            bad.append(("(3b)", n, a))
    return bad


def _multiplicity(p: RatPoly, root) -> int:
    lin = RatPoly((-root, 1))
    k = 0
    while not p.is_zero() and p.degree > 0:
        q, r = p.divmod(lin)
        if not r.is_zero():
            break
        p, k = q, k + 1
    return k


def mult_law(rng, trials=200, nmax=10):
    bad = []
    for _ in range(trials):
        n = rng.randint(2, nmax)
        ma = rng.randint(1, n)
        mb = rng.randint(max(1, n - ma), n)
        xa, xb = random_rational(rng, 5, 3, nonzero=True), random_rational(rng, 5, 3, nonzero=True)
        a = RatPoly((-xa, 1)) ** ma * random_ratpoly(rng, n - ma)
        b = RatPoly((-xb, 1)) ** mb * random_ratpoly(rng, n - mb)
        c = schur_szego(tagged(a, n), tagged(b, n))
        need = ma + mb - n
        if c.is_zero():
            continue
        if _multiplicity(c, -xa * xb) < need:
            bad.append((n, ma, mb, xa, xb))
    return bad


def cork_law(rng, trials=1000, nmax=30, N=60):
    bad = []
    for _ in range(trials):
        n = rng.randint(1, nmax)
        a = random_rational(rng, 200, 40, nonzero=True) if rng.random() < 0.8 else F(-rng.randint(1, n), max(1, n - rng.randint(0, n - 1)))
        if sign_changes(factor_K(a, n).poly) > 1:
            bad.append(("K", n, a))
        seq = RatPoly(kappa(a).series(N))
        if sign_changes(seq) > 1:
            bad.append(("kappa", a))
    return bad


# -- decomposition ----------------------------------------------------------


def _exp_chain(values, scalar) -> ExpForm:
    f = ExpForm(RatPoly((scalar,)))
    for a in values:
        f = exp_apply_factor(1, a, f)
    y = f.y
    return ExpForm(y.to_ratpoly() if isinstance(y, GaussRatPoly) else y)


def roundtrip(rng, trials=1000, mode=POLYNOMIAL, nmax=10):
    bad = []
    for _ in range(trials):
        n = rng.randint(2, nmax)
        vals = random_values(rng, n - 1, n, mode)
        c = random_rational(rng, nonzero=True)
        want = FactorMultiset.from_values(vals, scalar=c, mode=mode)
        if mode == POLYNOMIAL:
            p = schur_szego_multi([factor_K(a, n) for a in vals]) * c
            p = p.to_ratpoly() if isinstance(p, GaussRatPoly) else p
            got = decompose_poly(p, n)
        else:
            got = decompose_exp(_exp_chain(vals, c).y)
        if got != want:
            bad.append((mode, n, vals, c, got))
    return bad


def _zero_mult(p: RatPoly) -> int:
    return p.trailing_zero_multiplicity()


def observation_law(nmax=8, mode=POLYNOMIAL, rng=None, extra_per_k=3):
    """k-fold root at 0  <=>  {0, b_1..b_{k-1}} (or {0,-1..-(k-1)}) among the factors."""
    rng = rng or random.Random(7)
    bad = []

    def special(j, n):
        return F(-j, n - j) if mode == POLYNOMIAL else F(-j)

    def build(vals, n):
        if mode == POLYNOMIAL:
            p = schur_szego_multi([factor_K(a, n) for a in vals])
            return p.to_ratpoly() if isinstance(p, GaussRatPoly) else p
        return _exp_chain(vals, 1).y

    for n in range(2, nmax + 1):
        for k in range(0, n):
            for _ in range(extra_per_k):
                chain = [special(j, n) for j in range(k)]
                forbidden = {special(j, n) for j in range(n)}
                others = []
                while len(others) < n - 1 - k:
                    v = random_rational(rng, 9, 4)
                    if v not in forbidden:
                        others.append(v)
                vals = chain + others
                rng.shuffle(vals)
                p = build(vals, n)
                # forward: designated slots force exactly a k-fold root
                if _zero_mult(p) != k:
                    bad.append(("forward", mode, n, k, vals))
                # backward: from the zero multiplicity, the forced values are present
                fm = decompose_poly(p, n) if mode == POLYNOMIAL else decompose_exp(p)
                got = list(fm.values())
                for j in range(_zero_mult(p)):
                    if special(j, n) not in got:
                        bad.append(("backward", mode, n, k, vals))
                        break
                # dropping one forced value from the chain breaks the multiplicity
                if k >= 1:
                    drop = rng.randrange(k)
                    vals2 = [v for v in vals if v != special(drop, n)]
                    vals2.append(F(97, 3))
                    if _zero_mult(build(vals2, n)) != drop:
                        bad.append(("drop", mode, n, k, drop))
    return bad


def necessary_law(rng, trials=10_000, mode=POLYNOMIAL, nmax=10):
    bad = []
    for _ in range(trials):
        n = rng.randint(2, nmax)
        vals = random_values(rng, n - 1, n, mode)
        fm = FactorMultiset.from_values(vals, scalar=random_rational(rng, nonzero=True), mode=mode)
        obj = fm.to_polynomial(n) if mode == POLYNOMIAL else fm.to_expform().y
        f2, sig = analyze(obj, n, mode)
        # parity law between the two rows
        if sig.roots.real % 2 != sig.neg_a.real % 2:
            bad.append(("parity", mode, n, vals))
        rep = check_necessary(sig, f2, n, mode)
        if not rep.ok:
            bad.append((mode, n, vals, rep.violations))
    return bad


def sector_eps(rng, scale=F(1, 20)):
    u = F(rng.randint(1, 50), 100) * scale
    v = 2 * u + F(rng.randint(1, 100), 100) * scale
    return GaussRational(u, v)
