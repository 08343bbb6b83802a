"""Sign signatures, necessary conditions and the four admissible cases.

Two rows of counts describe an instance: the roots of ``P/(x+1)`` (or of
``R``) and the numbers ``-a_i``.  The roots of the node polynomial
``Q(t) = prod (t + a_i)`` (or ``G``) are exactly the ``-a_i``, so both rows
come from exact Sturm counts on explicit rational polynomials.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .composition import DegreeTaggedPoly, ExpForm
from .decomposition import (
    EXPONENTIAL,
    POLYNOMIAL,
    DecompositionGateError,
    FactorMultiset,
    _check_form,
    _check_mode,
    decompose_exp,
    decompose_poly,
    node_polynomial,
    poly_from_node,
)
from .exact_arith import RatPoly, as_ratpoly, falling_to_monomial, monomial_to_falling
from .roots import SturmSequence, squarefree_decompose

__all__ = [
    "RootSignature",
    "SignVector8",
    "CaseSpec",
    "NecessaryReport",
    "Verification",
    "classify_roots",
    "signature_pair",
    "analyze",
    "check_necessary",
    "static_admissible",
    "enumerate_cases",
    "verify_realization",
]

INF = float("inf")


@dataclass(frozen=True)
class RootSignature:
    pos: int
    zero: int
    neg: int
    complex_pairs: int
    distinct_nonzero: bool = True

    @property
    def degree(self) -> int:
        return self.pos + self.zero + self.neg + 2 * self.complex_pairs

    @property
    def real(self) -> int:
        return self.pos + self.zero + self.neg

    def swapped(self) -> "RootSignature":
        """The same multiset viewed with the opposite sign."""
        return RootSignature(self.neg, self.zero, self.pos, self.complex_pairs, self.distinct_nonzero)

    def counts(self) -> tuple[int, int, int, int]:
        return (self.pos, self.zero, self.neg, self.complex_pairs)


def classify_roots(p) -> RootSignature:
    """Exact counts of positive, zero, negative roots and complex pairs, with multiplicity."""
    p = as_ratpoly(p)
    if p.is_zero():
        raise ValueError("zero polynomial")
    zero = p.trailing_zero_multiplicity()
    rest = p.shift_down(zero)
    pos = neg = 0
    distinct = True
    for f, mult in squarefree_decompose(rest):
        if mult > 1:
            distinct = False
        seq = SturmSequence(f)
        pos += mult * seq.count(0, INF)
        neg += mult * seq.count(-INF, 0)
    cplx = rest.degree - pos - neg
    assert cplx % 2 == 0
    return RootSignature(pos, zero, neg, cplx // 2, distinct)


@dataclass(frozen=True)
class SignVector8:
    """Roots of P/(x+1) (or R), and the numbers -a_i (the figures' convention)."""

    roots: RootSignature
    neg_a: RootSignature
    infinity: int = 0

    @property
    def a_side(self) -> RootSignature:
        return self.neg_a.swapped()

    def as_tuple(self) -> tuple[int, ...]:
        return self.roots.counts() + self.neg_a.counts()

    def to_dict(self) -> dict:
        r, a = self.roots, self.neg_a
        return {
            "roots_pos": r.pos,
            "roots_zero": r.zero,
            "roots_neg": r.neg,
            "roots_complex_pairs": r.complex_pairs,
            "roots_distinct_nonzero": r.distinct_nonzero,
            "neg_a_pos": a.pos,
            "neg_a_zero": a.zero,
            "neg_a_neg": a.neg,
            "neg_a_complex_pairs": a.complex_pairs,
            "neg_a_distinct_nonzero": a.distinct_nonzero,
            "infinity": self.infinity,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SignVector8":
        roots = RootSignature(
            d["roots_pos"], d["roots_zero"], d["roots_neg"], d["roots_complex_pairs"], d.get("roots_distinct_nonzero", True)
        )
        neg_a = RootSignature(
            d["neg_a_pos"], d["neg_a_zero"], d["neg_a_neg"], d["neg_a_complex_pairs"], d.get("neg_a_distinct_nonzero", True)
        )
        return cls(roots, neg_a, d.get("infinity", 0))


def _unwrap(p, n, mode):
    _check_mode(mode)
    if isinstance(p, DegreeTaggedPoly):
        p, n = p.poly, p.n
    elif isinstance(p, ExpForm):
        p = p.y
    return as_ratpoly(p), n


def _roots_side(p: RatPoly, mode: str) -> RootSignature:
    if mode == POLYNOMIAL:
        return classify_roots(p.exact_div(RatPoly((1, 1))))
    return classify_roots(p)


def analyze(p, n: int | None = None, mode: str = POLYNOMIAL) -> tuple[FactorMultiset, SignVector8]:
    """Decompose and classify in one pass."""
    p, n = _unwrap(p, n, mode)
    if mode == POLYNOMIAL:
        fm = decompose_poly(p, n)
    else:
        fm = decompose_exp(p)
    sig = SignVector8(_roots_side(p, mode), classify_roots(fm.node_poly()), fm.infinity)
    return fm, sig


def signature_pair(p, n: int | None = None, mode: str = POLYNOMIAL) -> SignVector8:
    return analyze(p, n, mode)[1]


def _node_of(p: RatPoly, n: int | None, mode: str) -> tuple[RatPoly, int]:
    """Scaled node polynomial (c*Q or G) and the number of K_inf factors, with the compose-back gate."""
    if mode == POLYNOMIAL:
        _check_form(p, n)
        qs = node_polynomial(p, n)
        if poly_from_node(qs, n) != p:
            raise DecompositionGateError("node polynomial does not compose back")
        return qs, n - 1 - qs.degree
    if p.is_zero():
        raise ValueError("zero polynomial")
    g = RatPoly(falling_to_monomial(p.coeffs))
    if RatPoly(monomial_to_falling(g.coeffs)) != p:
        raise DecompositionGateError("falling-factorial transform does not invert")
    return g, 0


def quick_signature(p, n: int | None = None, mode: str = POLYNOMIAL) -> SignVector8:
    """Same counts as :func:`signature_pair` without extracting factor values."""
    p, n = _unwrap(p, n, mode)
    node, inf = _node_of(p, n, mode)
    return SignVector8(_roots_side(p, mode), classify_roots(node), inf)


# ---------------------------------------------------------------------------
# necessary conditions


@dataclass(frozen=True)
class Violation:
    clause: str
    observed: object
    required: object
    detail: str = ""


@dataclass(frozen=True)
class NecessaryReport:
    violations: tuple = ()
    checked: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checked": list(self.checked),
            "violations": [
                {"clause": v.clause, "observed": v.observed, "required": v.required, "detail": v.detail}
                for v in self.violations
            ],
        }


def _node_value(node: RatPoly, j: int, n: int, mode: str):
    t = Fraction(j, n - j) if mode == POLYNOMIAL else Fraction(j)
    return node(t)


def check_necessary(sig: SignVector8, factors: FactorMultiset, n: int | None, mode: str = POLYNOMIAL) -> NecessaryReport:
    """Check the necessary conditions on a (signature, factors) pair.

    Clauses: ``1a`` enough distinct negative a_i; ``1b`` the forced values
    0, b_1..b_{k-1} (or 0, -1..-(k-1)) are present; ``2a`` enough negative
    roots; ``2b`` a root at 0 whenever some a_i vanishes; ``sign_parity``
    when 0 is not a root, the number of positive roots and the number of
    negative a_i agree mod 2 (compare the signs of P(0)/lc and prod a_i).
    """
    _check_mode(mode)
    if factors.mode != mode:
        raise ValueError("factor multiset mode does not match")
    if mode == EXPONENTIAL:
        n = factors.count + 1
    if sig.neg_a.zero != factors.zeros or sig.neg_a.degree != factors.count or sig.infinity != factors.infinity:
        raise ValueError("signature and factor multiset describe different objects")
    if sig.roots.degree + (sig.infinity if mode == POLYNOMIAL else 0) < factors.count or sig.roots.degree > n - 1:
        raise ValueError("signature degree inconsistent with n")

    node = factors.node_poly()
    m, k = sig.roots.pos, sig.roots.zero
    q, q1 = factors.zeros, sig.neg_a.neg
    out = []

    need = m + max(0, k - 1)
    # distinct negative a_i = distinct positive roots of the node polynomial
    distinct_neg_a = SturmSequence(node).count(0, INF) if node.degree > 0 else 0
    if distinct_neg_a < need:
        out.append(Violation("1a", distinct_neg_a, need, "distinct negative a_i"))
    missing = [j for j in range(1, k) if _node_value(node, j, n, mode) != 0]
    if missing:
        out.append(Violation("1b", f"missing j={missing}", "a_i = b_j for j < k", "forced factor values absent"))
    if k >= 1 and q < 1:
        out.append(Violation("1b", q, 1, "k >= 1 needs a factor a_i = 0"))
    need2 = q1 + max(0, q - 1)
    if sig.roots.neg < need2:
        out.append(Violation("2a", sig.roots.neg, need2, "negative roots with multiplicity"))
    if q >= 1 and k < 1:
        out.append(Violation("2b", k, 1, "q >= 1 needs a root at 0"))
    checked = ["1a", "1b", "2a", "2b"]
    if k == 0 and q == 0 and sig.infinity == 0:
        checked.append("sign_parity")
        if (m - sig.neg_a.pos) % 2:
            out.append(Violation("sign_parity", m % 2, sig.neg_a.pos % 2, "positive roots vs negative a_i mod 2"))
    return NecessaryReport(tuple(out), tuple(checked))


def static_admissible(sig: SignVector8, n: int) -> bool:
    """The necessary conditions that depend on counts alone."""
    r, a = sig.roots, sig.neg_a
    if r.degree != n - 1 or a.degree != n - 1:
        return False
    m, k, q, q1 = r.pos, r.zero, a.zero, a.neg
    if a.pos < m + max(0, k - 1):
        return False
    if r.neg < q1 + max(0, q - 1):
        return False
    if (k >= 1) != (q >= 1):
        return False
    if k == 0 and (m - a.pos) % 2:
        return False
    return True


# ---------------------------------------------------------------------------
# the four cases


@dataclass(frozen=True)
class CaseSpec:
    case_id: int
    n: int
    q: int = 0
    q1: int = 0
    qC: int = 0
    k: int = 0
    k1: int = 0
    kC: int = 0
    m: int = 0
    r: int = 0
    s: int = 0
    delta: int = 0

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        c = self.case_id
        if c not in (1, 2, 3, 4):
            raise ValueError("case_id must be 1..4")
        if min(self.params()) < 0:
            raise ValueError("parameters must be nonnegative")
        if c in (1, 3):
            if self.k < 1 or self.q < 1:
                raise ValueError("Cases 1 and 3 need k >= 1 and q >= 1")
        elif self.k or self.q:
            raise ValueError("Cases 2 and 4 need k = q = 0")
        if c in (1, 2):
            if self.r != self.kC + self.k1 or self.s != self.qC + self.k1 or self.delta:
                raise ValueError("Cases 1 and 2 need r = kC + k1, s = qC + k1")
        else:
            if self.delta < 1 or self.kC != self.r + self.delta or self.qC != self.s + self.delta or self.k1:
                raise ValueError("Cases 3 and 4 need kC = r + delta, qC = s + delta, delta >= 1")
        if self.kC % 2 or self.qC % 2:
            raise ValueError("complex counts must be even")
        ex = self.expected()
        if ex.roots.degree != self.n - 1 or ex.neg_a.degree != self.n - 1:
            raise ValueError("row sums must equal n - 1")

    def params(self) -> tuple[int, ...]:
        return (self.q, self.q1, self.qC, self.k, self.k1, self.kC, self.m, self.r, self.s, self.delta)

    def key(self) -> tuple[int, ...]:
        return (self.case_id,) + self.params()

    @property
    def construction_unsupported(self) -> bool:
        """Odd delta: not covered by applying the complex-couple lemma delta/2 times."""
        return self.case_id in (3, 4) and self.delta % 2 == 1

    def expected(self) -> SignVector8:
        roots = RootSignature(self.m, self.k, max(self.q - 1, 0) + self.q1 + self.s, self.kC // 2, True)
        neg_a = RootSignature(max(self.k - 1, 0) + self.m + self.r, self.q, self.q1, self.qC // 2, True)
        return SignVector8(roots, neg_a, 0)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["construction_unsupported"] = self.construction_unsupported
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CaseSpec":
        names = ("case_id", "n", "q", "q1", "qC", "k", "k1", "kC", "m", "r", "s", "delta")
        return cls(**{k: int(d[k]) for k in names if k in d})

    def label(self) -> str:
        nz = [f"{k}={v}" for k, v in zip(("q", "q1", "qC", "k", "k1", "kC", "m", "r", "s", "delta"), self.params()) if v]
        return f"Case {self.case_id} (n={self.n}" + (", " + ", ".join(nz) if nz else "") + ")"


CSV_COLUMNS = ("case_id", "n", "q", "q1", "qC", "k", "k1", "kC", "m", "r", "s", "delta", "construction_unsupported")


def enumerate_cases(n: int, strict: bool = False) -> list[CaseSpec]:
    """All admissible parameter tuples, sorted; ``strict`` keeps only k = 1 in Cases 1 and 3."""
    if n < 2:
        raise ValueError("n must be at least 2")
    N = n - 1
    found: dict = {}
    rng = range(N + 1)
    for k, q in itertools.product(rng, rng):
        if (k >= 1) != (q >= 1):
            continue
        if strict and k > 1:
            continue
        for q1, m, a, b in itertools.product(rng, rng, rng, rng):
            # a, b are (kC, qC) for Cases 1/2 and (r, s) for Cases 3/4
            for case_id in ((1, 3) if k else (2, 4)):
                if case_id in (1, 2):
                    kC, qC = a, b
                    if kC % 2 or qC % 2:
                        continue
                    k1 = N - (max(k - 1, 0) + m + kC) - q - q1 - qC
                    if k1 < 0:
                        continue
                    r, s, delta = kC + k1, qC + k1, 0
                    cand = (case_id, q, q1, qC, k, k1, kC, m, r, s, delta)
                else:
                    r, s = a, b
                    delta = N - q1 - q - (max(k - 1, 0) + m + r) - s
                    if delta < 1:
                        continue
                    kC, qC = r + delta, s + delta
                    if kC % 2 or qC % 2:
                        continue
                    cand = (case_id, q, q1, qC, k, 0, kC, m, r, s, delta)
                try:
                    spec = CaseSpec(cand[0], n, *cand[1:])
                except ValueError:
                    continue
                if not static_admissible(spec.expected(), n):
                    continue
                found.setdefault(spec.expected().as_tuple(), spec)
    return sorted(found.values(), key=CaseSpec.key)


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class Verification:
    ok: bool
    spec: CaseSpec
    observed: SignVector8 | None
    failures: tuple = ()

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "spec": self.spec.to_dict(),
            "observed": self.observed.to_dict() if self.observed else None,
            "failures": list(self.failures),
        }


def verify_realization(p, spec: CaseSpec, n: int | None = None, mode: str = POLYNOMIAL) -> Verification:
    """Recompute every count from ``p`` alone and compare with the spec."""
    n = spec.n if n is None else n
    try:
        q, _ = _unwrap(p, n, mode)
        if mode == EXPONENTIAL and q.degree != n - 1:
            return Verification(False, spec, None, (f"deg R = {q.degree}, expected {n - 1}",))
        sig = quick_signature(q, n, mode)
    except (ValueError, DecompositionGateError) as exc:
        return Verification(False, spec, None, (f"not analyzable: {exc}",))
    exp = spec.expected()
    failures = []
    names = ("pos", "zero", "neg", "complex_pairs")
    for side, got, want in (("roots", sig.roots, exp.roots), ("neg_a", sig.neg_a, exp.neg_a)):
        for name, g, w in zip(names, got.counts(), want.counts()):
            if g != w:
                failures.append(f"{side}.{name}: observed {g}, required {w}")
        if not got.distinct_nonzero:
            failures.append(f"{side}: repeated nonzero values")
    if sig.infinity:
        failures.append(f"{sig.infinity} K_inf factor(s)")
    return Verification(not failures, spec, sig, tuple(failures))
