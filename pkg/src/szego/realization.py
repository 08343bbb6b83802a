"""Constructive realization of the four admissible cases.

Every candidate is described by its list of factor values ``a_i``.  The
normalized coefficients of the composition are (up to the positive weights
``((n-j)/n)^(n-1)``) the values of ``Q(t) = prod (t + a_i)`` at the nodes
``t_j = -b_j``, and ``gamma_j = G(j)`` in the exponential case.  Shifting the
factor ``a = b_j`` to ``b_j + lambda_j`` therefore moves the j-th coefficient
linearly in ``lambda_j``, which lets the splitting of the multiple root at 0
be *solved for* instead of sampled blindly.  Whatever the heuristics produce,
acceptance is an exact recount of every root.
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .composition import (
    ExpForm,
    exp_apply_factor,
    factor_K,
    schur_szego,
    schur_szego_multi,
)
from .decomposition import EXPONENTIAL, POLYNOMIAL, FactorMultiset, _check_mode, poly_from_node
from .exact_arith import GaussRational, GaussRatPoly, RatPoly, binomial, monomial_to_falling
from .roots import SturmSequence, squarefree_decompose
from .signature import CaseSpec, SignVector8, Verification, analyze, classify_roots, enumerate_cases, verify_realization

__all__ = [
    "SearchConfig",
    "PerturbationPlan",
    "RealizationCertificate",
    "RealizationError",
    "RealizationUnsupported",
    "base_composition_pol",
    "base_composition_exp",
    "couple_factor_pol",
    "couple_factor_exp",
    "in_sector",
    "realize_case",
    "realize_all",
    "RealizeAllResult",
    "compose_values",
]

DEFAULT_SEED = 20240229


class RealizationError(RuntimeError):
    def __init__(self, message, diagnostic=None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}


class RealizationUnsupported(RealizationError):
    """Odd-delta spec that the fallback search did not realize."""


@dataclass(frozen=True)
class SearchConfig:
    seed: int = DEFAULT_SEED
    rounds: int = 64
    resamples: int = 32
    eps0: Fraction = Fraction(1, 8)
    fallback_trials: int = 1024
    cross_check: bool = False


# ---------------------------------------------------------------------------
# base compositions and the complex-couple factors


def _root_multiplicity(p: RatPoly, root) -> int:
    lin = RatPoly((-root, 1))
    k = 0
    while p.degree > 0:
        quo, rem = p.divmod(lin)
        if not rem.is_zero():
            break
        p = quo
        k += 1
    return k


def base_composition_pol(l: int, mu: int, n: int, cross_check: bool = False) -> RatPoly:
    """``l`` factors ``(x+1)^(n-1) x`` composed with ``K_{b_1} .. K_{b_mu}``.

    Closed route: ``K_0 * K_{b_1} * .. * K_{b_mu} = x^(mu+1) (x+1)^(n-mu-1)``,
    and each further ``K_0`` acts as ``x d/dx / n``.
    """
    if l < 1 or mu < 0 or l + mu > n:
        raise ValueError("need l >= 1, mu >= 0 and l + mu <= n")
    u = RatPoly.monomial(mu + 1) * RatPoly((1, 1)) ** (n - mu - 1)
    x = RatPoly.x()
    for _ in range(l - 1):
        u = x * u.derivative() * Fraction(1, n)
    zero = u.trailing_zero_multiplicity()
    if zero != mu + 1:
        raise AssertionError(f"root at 0 has multiplicity {zero}, expected {mu + 1}")
    at_minus_one = _root_multiplicity(u, -1)
    if at_minus_one != n - mu - l:
        raise AssertionError(f"root at -1 has multiplicity {at_minus_one}, expected {n - mu - l}")
    w = u.shift_down(mu + 1).exact_div(RatPoly((1, 1)) ** at_minus_one)
    if w.degree != l - 1:
        raise AssertionError("unexpected remaining degree")
    if w.degree > 0:
        seq = SturmSequence(w)
        if any(m > 1 for _, m in squarefree_decompose(w)) or seq.count(-1, 0) != l - 1:
            raise AssertionError(f"expected {l - 1} simple roots in (-1, 0)")
    if cross_check:
        factors = [factor_K(0, n)] * l + [factor_K(Fraction(-j, n - j), n) for j in range(1, mu + 1)]
        if schur_szego_multi(factors) != u:
            raise AssertionError("closed route disagrees with direct composition")
    return u


def base_composition_exp(l: int, mu: int, cross_check: bool = False) -> ExpForm:
    """``l`` factors ``e^x x`` composed with ``e^x (x-1) .. e^x (x-mu)``."""
    if l < 1 or mu < 0:
        raise ValueError("need l >= 1 and mu >= 0")
    f = ExpForm(RatPoly.monomial(mu + 1))
    for _ in range(l - 1):
        f = exp_apply_factor(1, 0, f)
    y = f.y
    if y.trailing_zero_multiplicity() != mu + 1:
        raise AssertionError("wrong multiplicity at 0")
    w = y.shift_down(mu + 1)
    if w.degree != l - 1:
        raise AssertionError("unexpected remaining degree")
    if w.degree > 0:
        if any(m > 1 for _, m in squarefree_decompose(w)) or SturmSequence(w).count(float("-inf"), 0) != l - 1:
            raise AssertionError(f"expected {l - 1} simple negative roots")
    if cross_check:
        g = f.gamma_poly()
        want = RatPoly.monomial(l)
        for j in range(1, mu + 1):
            want = want * RatPoly((-j, 1))
        if g != want:
            raise AssertionError("closed route disagrees with direct composition")
    return f


def in_sector(eps: GaussRational) -> bool:
    """``0 < 2u < v`` for ``eps = u + iv``."""
    return 0 < 2 * eps.re < eps.im


def _as_gauss(eps) -> GaussRational:
    if isinstance(eps, GaussRational):
        return eps
    if isinstance(eps, complex):
        raise TypeError("pass Gaussian rationals, not floats")
    if isinstance(eps, (tuple, list)):
        return GaussRational(*eps)
    return GaussRational(eps, 0)


def couple_factor_pol(eps, n: int) -> RatPoly:
    """``K_{1+eps} * K_{1+conj(eps)}``, checked against its closed form."""
    eps = _as_gauss(eps)
    if not in_sector(eps):
        raise ValueError("eps must satisfy 0 < 2 Re(eps) < Im(eps)")
    if n < 2:
        raise ValueError("n must be at least 2")
    one = GaussRational(1)
    v = schur_szego(factor_K(one + eps, n), factor_K(one + eps.conjugate(), n))
    v = v.to_ratpoly() if isinstance(v, GaussRatPoly) else v
    tr = 2 * eps.re
    nm = eps.norm()
    b = tr + nm / n
    c = (n - 1) * nm / n
    y = RatPoly((1, 1))
    closed = y ** (n - 2) * (y * y + y * b + c)
    if closed != v:
        raise AssertionError("closed form disagrees with direct composition")
    if b * b - 4 * c >= 0:
        raise ValueError("eps too large: the quadratic factor has real roots")
    return v


def couple_factor_exp(eps) -> RatPoly:
    """``V`` with ``e^x (1 + eps x) * e^x (1 + conj(eps) x) = e^x V``."""
    eps = _as_gauss(eps)
    if eps.im == 0:
        raise ValueError("eps must be non-real")
    nm = eps.norm()
    v = RatPoly((1, 2 * eps.re + nm, nm))
    direct = exp_apply_factor(eps, 1, ExpForm(GaussRatPoly((1, eps.conjugate())))).y
    direct = direct.to_ratpoly() if isinstance(direct, GaussRatPoly) else direct
    if direct != v:
        raise AssertionError("closed form disagrees with direct composition")
    b, c = v.coeff(1), v.coeff(2)
    if b * b - 4 * c >= 0:
        raise ValueError("eps too large: V has real roots")
    return v


# ---------------------------------------------------------------------------
# plans and certificates


@dataclass(frozen=True)
class Slot:
    kind: str  # keep-zero | b-exact | positive-perturb | complex-perturb | b-shift | sector-couple | free
    value: object
    j: int | None = None

    def to_dict(self) -> dict:
        from .serialize import number_to_json

        d = {"kind": self.kind, "value": number_to_json(self.value)}
        if self.j is not None:
            d["j"] = self.j
        return d


@dataclass(frozen=True)
class PerturbationPlan:
    mode: str
    n: int
    base: tuple  # (l, mu) of the unperturbed composition
    slots: tuple
    magnitudes: dict
    seed: int

    def values(self) -> list:
        return [s.value for s in self.slots]

    def to_dict(self) -> dict:
        from .serialize import fraction_to_str

        return {
            "mode": self.mode,
            "n": self.n,
            "base": list(self.base),
            "slots": [s.to_dict() for s in self.slots],
            "magnitudes": {k: fraction_to_str(v) for k, v in self.magnitudes.items()},
            "seed": self.seed,
        }


@dataclass(frozen=True)
class RealizationCertificate:
    spec: CaseSpec
    mode: str
    object: RatPoly
    factors: FactorMultiset
    signature: SignVector8
    plan: PerturbationPlan | None
    trace: dict

    def recheck(self) -> Verification:
        """Recount everything from the stored polynomial alone."""
        ver = verify_realization(self.object, self.spec, self.spec.n, self.mode)
        if ver.ok:
            fm, sig = analyze(self.object, self.spec.n, self.mode)
            if sig.as_tuple() != self.spec.expected().as_tuple():
                return Verification(False, self.spec, sig, ("decomposition disagrees with counts",))
        return ver

    def to_dict(self) -> dict:
        from .serialize import factors_to_json, poly_to_json

        return {
            "spec": self.spec.to_dict(),
            "mode": self.mode,
            "object": poly_to_json(self.object),
            "factors": factors_to_json(self.factors),
            "signature": self.signature.to_dict(),
            "plan": self.plan.to_dict() if self.plan else None,
            "trace": {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.trace.items()},
        }


def compose_values(values, n: int, mode: str) -> RatPoly:
    """P (or R) from an explicit list of factor values; conjugates must both be listed."""
    fm = FactorMultiset.from_values(values, mode=mode)
    node = fm.node_poly()
    if mode == POLYNOMIAL:
        return poly_from_node(node, n)
    return RatPoly(monomial_to_falling(node.coeffs))


# ---------------------------------------------------------------------------
# search


def _node(j: int, n: int, mode: str) -> Fraction:
    return Fraction(j, n - j) if mode == POLYNOMIAL else Fraction(j)


def _weight(j: int, n: int, mode: str) -> Fraction:
    return Fraction((n - j) ** (n - 1), n ** (n - 1)) if mode == POLYNOMIAL else Fraction(1)


def _round_rel(x: Fraction, bits: int = 40) -> Fraction:
    if x == 0:
        return x
    mag = x.numerator.bit_length() - x.denominator.bit_length()
    e = bits - mag
    if e <= 0:
        return Fraction(round(x / (Fraction(2) ** -e))) * (Fraction(2) ** -e)
    scale = 1 << e
    return Fraction(round(x * scale), scale)


def _real_node_poly(values) -> RatPoly:
    return FactorMultiset.from_values(values).node_poly() if values else RatPoly((1,))


def _target_poly(pos, neg, pairs, tau: Fraction) -> RatPoly:
    t = RatPoly((1,))
    for r in list(pos) + [-v for v in neg]:
        t = t * RatPoly((-tau * r, 1))
    for u, v in pairs:
        t = t * RatPoly(((u * u + v * v) * tau * tau, -2 * u * tau, 1))
    return t


def _solve_cluster(fixed_node: RatPoly, j0: int, M: int, target: RatPoly, n: int, mode: str, passes: int = 3):
    """Shifts lambda_j for the slots a = -t_j + lambda_j, j0 <= j < j0 + M.

    The local coefficients of x^(j0) .. x^(j0+M-1) are matched to
    ``A * target`` where ``A`` is the current coefficient of x^(j0+M).
    """
    ts = [_node(j, n, mode) for j in range(j0, j0 + M + 1)]
    lam = [Fraction(0)] * M
    fixed_at = [fixed_node(t) for t in ts]
    for _ in range(passes):
        def cluster_prod(idx, skip=None):
            t = ts[idx]
            out = Fraction(1)
            for i in range(M):
                if i != skip:
                    out *= t - ts[i] + lam[i]
            return out

        if mode == POLYNOMIAL:
            jM = j0 + M
            A = binomial(n, jM) * _weight(jM, n, mode) * fixed_at[M] * cluster_prod(M)
            for i in range(M):
                j = j0 + i
                want = A * target.coeff(i) / binomial(n, j)
                rest = _weight(j, n, mode) * fixed_at[i] * cluster_prod(i, skip=i)
                lam[i] = _round_rel(want / rest)
        else:
            # gamma values (j0 .. j0+M) -> coefficient of x^(j0+M) of R
            jM = j0 + M
            gam = [fixed_at[i] * cluster_prod(i) for i in range(M + 1)]
            A = sum(
                (gam[i] * Fraction((-1) ** (jM - (j0 + i)), _fact(j0 + i) * _fact(jM - (j0 + i))) for i in range(M + 1)),
                Fraction(0),
            )
            coeffs = [A * target.coeff(i) for i in range(M)]
            for i in range(M):
                j = j0 + i
                # gamma_j = sum_{c <= j} ctilde_c (j)_c, with ctilde_c = 0 below j0
                g = Fraction(0)
                ff = Fraction(1)
                for c in range(j + 1):
                    if c >= j0:
                        g += coeffs[c - j0] * ff
                    ff *= j - c
                rest = fixed_at[i] * cluster_prod(i, skip=i)
                lam[i] = _round_rel(g / rest)
    return lam


def _fact(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _distinct_fracs(rng: random.Random, count: int, lo: int, hi: int, den: int) -> list[Fraction]:
    vals = rng.sample(range(lo, hi + 1), count)
    return [Fraction(v, den) for v in vals]


def _pairs(rng: random.Random, count: int) -> list[tuple[Fraction, Fraction]]:
    seen = set()
    out = []
    while len(out) < count:
        u = Fraction(rng.randint(-16, 16), 16)
        v = Fraction(rng.randint(2, 32), 16)
        if (u, v) not in seen:
            seen.add((u, v))
            out.append((u, v))
    return out


def _sector_points(rng: random.Random, count: int) -> list[GaussRational]:
    out = []
    for _ in range(count):
        u = Fraction(rng.randint(1, 8), 16)
        v = 2 * u + Fraction(rng.randint(1, 16), 16)
        out.append(GaussRational(u, v))
    return out


@dataclass(frozen=True)
class _Layout:
    chain: int
    zeros: int
    positive: int
    pairs: int
    j0: int
    M: int
    target: tuple  # (positive, negative, complex pairs) near 0
    lemma: int

    @property
    def base(self) -> tuple:
        l = self.zeros + self.positive + 2 * self.pairs + (1 if self.chain else 0)
        if self.chain == 0:
            l += 1 if self.M else 0
        mu = max(self.j0 + self.M - 1, 0)
        return (max(l, 1), mu)


def _layout(spec: CaseSpec) -> _Layout:
    c = spec
    if c.case_id == 1:
        return _Layout(c.k, c.q - 1, c.q1, c.qC // 2, c.k, c.m + c.k1 + c.kC, (c.m, c.k1, c.kC // 2), 0)
    if c.case_id == 2:
        return _Layout(0, 0, c.q1, c.qC // 2, 0, c.m + c.k1 + c.kC, (c.m, c.k1, c.kC // 2), 0)
    if c.case_id == 3:
        return _Layout(c.k, c.q - 1, c.q1, c.s // 2, c.k, c.m + c.r, (c.m, 0, c.r // 2), c.delta // 2)
    return _Layout(0, 0, c.q1, c.s // 2, 0, c.m + c.r, (c.m, 0, c.r // 2), c.delta // 2)


def _lemma_values(eps_d: GaussRational, n: int, mode: str) -> list:
    if mode == POLYNOMIAL:
        couple_factor_pol(eps_d, n)
        one = GaussRational(1)
        return [one + eps_d, one + eps_d.conjugate()]
    couple_factor_exp(eps_d)
    inv = 1 / eps_d
    return [inv, inv.conjugate()]


def _rng_for(config: SearchConfig, spec: CaseSpec, mode: str, tag: str = "") -> random.Random:
    return random.Random(f"{config.seed}:{mode}:{spec.key()}:{spec.n}:{tag}")


def _candidate(spec: CaseSpec, lay: _Layout, mode: str, rng: random.Random, eps: Fraction):
    """One sampled plan at scale eps; returns (plan, object) or None."""
    n = spec.n
    slots: list[Slot] = []
    for j in range(lay.chain):
        slots.append(Slot("keep-zero" if j == 0 else "b-exact", -_node(j, n, mode), j))
    slots += [Slot("keep-zero", Fraction(0))] * lay.zeros
    for g in _distinct_fracs(rng, lay.positive, 1, 4 * lay.positive + 8, 4):
        slots.append(Slot("positive-perturb", eps * g))
    for u, v in _pairs(rng, lay.pairs):
        z = GaussRational(eps * u, eps * v)
        slots += [Slot("complex-perturb", z), Slot("complex-perturb", z.conjugate())]
    scale = eps / 8
    for eta in _sector_points(rng, lay.lemma):
        try:
            vals = _lemma_values(eta * scale, n, mode)
        except ValueError:
            return None
        slots += [Slot("sector-couple", v) for v in vals]
        scale /= 16
    tau = eps / 4
    lam = []
    if lay.M:
        npos, nneg, npairs = lay.target
        pos = _distinct_fracs(rng, npos, 4, 32, 16)
        neg = _distinct_fracs(rng, nneg, 4, 32, 16)
        prs = _pairs(rng, npairs)
        fixed_node = _real_node_poly([s.value for s in slots])
        for _ in range(60):
            target = _target_poly(pos, neg, prs, tau)
            lam = _solve_cluster(fixed_node, lay.j0, lay.M, target, n, mode)
            if max(abs(v) for v in lam) <= eps:
                break
            tau /= 2
        else:
            return None
        for i, v in enumerate(lam):
            j = lay.j0 + i
            slots.append(Slot("b-shift", -_node(j, n, mode) + v, j))
    plan = PerturbationPlan(
        mode, n, lay.base, tuple(slots), {"eps": eps, "tau": tau, "lemma_scale": eps / 8}, 0
    )
    return plan, compose_values(plan.values(), n, mode)


def _fallback_candidate(spec: CaseSpec, mode: str, rng: random.Random):
    """Random factor values consistent with the a-side counts (no guarantee)."""
    n = spec.n
    c = spec
    slots = []
    for j in range(c.k):
        slots.append(Slot("keep-zero" if j == 0 else "b-exact", -_node(j, n, mode), j))
    slots += [Slot("keep-zero", Fraction(0))] * max(c.q - 1, 0)

    def mag():
        return Fraction(rng.randint(1, 64), 16) * Fraction(2) ** rng.randint(-6, 3)

    used = set()

    def fresh(sign):
        while True:
            v = sign * mag()
            if v not in used and v != 0:
                used.add(v)
                return v

    slots += [Slot("free", fresh(1)) for _ in range(c.q1)]
    slots += [Slot("free", fresh(-1)) for _ in range(c.m + c.r)]
    for _ in range(c.qC // 2):
        z = GaussRational(rng.choice((-1, 1)) * mag(), mag())
        slots += [Slot("free", z), Slot("free", z.conjugate())]
    plan = PerturbationPlan(mode, n, (0, 0), tuple(slots), {}, 0)
    return plan, compose_values(plan.values(), n, mode)


def _quick_counts(obj: RatPoly, spec: CaseSpec, mode: str) -> bool:
    """Cheap root-side precheck before the full verification."""
    want = spec.expected().roots
    side = obj.exact_div(RatPoly((1, 1))) if mode == POLYNOMIAL else obj
    if mode == POLYNOMIAL and obj.degree != spec.n:
        return False
    got = classify_roots(side)
    return got == want


def _finish(spec, mode, obj, plan, trace) -> RealizationCertificate:
    fm, sig = analyze(obj, spec.n, mode)
    cert = RealizationCertificate(spec, mode, obj, fm, sig, plan, trace)
    ver = cert.recheck()
    if not ver.ok:
        raise AssertionError(f"accepted candidate failed re-verification: {ver.failures}")
    return cert


def realize_case(spec: CaseSpec, mode: str = POLYNOMIAL, config: SearchConfig | None = None) -> RealizationCertificate:
    """Find an exact polynomial (or R) realizing ``spec``; deterministic for a fixed config."""
    _check_mode(mode)
    config = config or SearchConfig()
    start = time.perf_counter()
    best: Verification | None = None
    tried = 0
    lay = _layout(spec)
    supported = not spec.construction_unsupported and not (spec.case_id in (2, 4) and spec.r % 2)
    if supported:
        rng = _rng_for(config, spec, mode)
        eps = config.eps0
        for rnd in range(config.rounds):
            for res in range(config.resamples):
                cand = _candidate(spec, lay, mode, rng, eps)
                tried += 1
                if cand is None:
                    continue
                plan, obj = cand
                if not _quick_counts(obj, spec, mode):
                    continue
                ver = verify_realization(obj, spec, spec.n, mode)
                if ver.ok:
                    plan = PerturbationPlan(plan.mode, plan.n, plan.base, plan.slots, plan.magnitudes, config.seed)
                    trace = {
                        "strategy": "construction",
                        "round": rnd,
                        "resample": res,
                        "candidates": tried,
                        "eps": plan.magnitudes["eps"],
                        "tau": plan.magnitudes["tau"],
                        "seconds": round(time.perf_counter() - start, 4),
                    }
                    return _finish(spec, mode, obj, plan, trace)
                best = _better(best, ver)
            eps /= 2
        raise RealizationError(
            f"budget exhausted for {spec.label()} ({mode})",
            {"candidates": tried, "best": best.to_dict() if best else None},
        )
    rng = _rng_for(config, spec, mode, "fallback")
    for i in range(config.fallback_trials):
        plan, obj = _fallback_candidate(spec, mode, rng)
        tried += 1
        if not _quick_counts(obj, spec, mode):
            continue
        ver = verify_realization(obj, spec, spec.n, mode)
        if ver.ok:
            trace = {"strategy": "fallback-random", "candidates": tried, "seconds": round(time.perf_counter() - start, 4)}
            return _finish(spec, mode, obj, plan, trace)
        best = _better(best, ver)
    raise RealizationUnsupported(
        f"unsupported: {spec.label()} ({mode}) not realized by fallback search",
        {"candidates": tried, "best": best.to_dict() if best else None},
    )


def _better(best, ver):
    if best is None or len(ver.failures) < len(best.failures):
        return ver
    return best


# ---------------------------------------------------------------------------


SUMMARY_COLUMNS = (
    "case_id", "n", "q", "q1", "qC", "k", "k1", "kC", "m", "r", "s", "delta",
    "construction_unsupported", "status", "strategy", "candidates", "seconds",
)


@dataclass
class RealizeAllResult:
    n: int
    mode: str
    certificates: list
    rows: list
    counts: dict = field(default_factory=dict)

    def summary_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=SUMMARY_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in self.rows:
            w.writerow(row)
        return buf.getvalue()


def realize_all(n: int, mode: str = POLYNOMIAL, config: SearchConfig | None = None, strict_errors: bool = True) -> RealizeAllResult:
    """Realize every admissible spec for ``n``; failure on a supported spec is an error."""
    if n < 2:
        raise ValueError("n must be at least 2")
    config = config or SearchConfig()
    certs, rows = [], []
    counts = {"realized": 0, "failed": 0, "unsupported": 0}
    hard = []
    for spec in enumerate_cases(n):
        row = spec.to_dict()
        try:
            cert = realize_case(spec, mode, config)
        except RealizationUnsupported as exc:
            counts["unsupported"] += 1
            row.update(status="unsupported", strategy="fallback-random", candidates=exc.diagnostic.get("candidates"), seconds="")
        except RealizationError as exc:
            counts["failed"] += 1
            hard.append(spec)
            row.update(status="failed", strategy="construction", candidates=exc.diagnostic.get("candidates"), seconds="")
        else:
            certs.append(cert)
            counts["realized"] += 1
            row.update(
                status="realized",
                strategy=cert.trace["strategy"],
                candidates=cert.trace["candidates"],
                seconds=cert.trace["seconds"],
            )
        rows.append(row)
    result = RealizeAllResult(n, mode, certs, rows, counts)
    if hard and strict_errors:
        err = RealizationError(f"{len(hard)} supported spec(s) not realized for n={n} ({mode})", {"failed": [s.to_dict() for s in hard]})
        err.result = result
        raise err
    return result
