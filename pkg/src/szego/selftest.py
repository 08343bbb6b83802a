"""Reduced-scale versions of the invariant suites, for ``szego selftest``."""

from __future__ import annotations

import random
import time
from fractions import Fraction

from .composition import DegreeTaggedPoly, schur_szego
from .decomposition import EXPONENTIAL, MODES, POLYNOMIAL, decompose_exp, decompose_poly
from .exact_arith import RatPoly
from .phi_map import phi_report
from .realization import SearchConfig, realize_all
from .sampling import random_multiset, random_ratpoly
from .signature import analyze, check_necessary

__all__ = ["run_selftest"]


def _identity(rng, trials):
    bad = 0
    for _ in range(trials):
        n = rng.randint(2, 12)
        a = DegreeTaggedPoly(random_ratpoly(rng, n), n)
        one = DegreeTaggedPoly(RatPoly((1, 1)) ** n, n)
        if schur_szego(one, a) != a.poly:
            bad += 1
    return bad


def _roundtrip(rng, trials):
    bad = 0
    for i in range(trials):
        mode = MODES[i % 2]
        n = rng.randint(2, 10)
        fm = random_multiset(rng, n, mode)
        if mode == POLYNOMIAL:
            back = decompose_poly(fm.to_polynomial(n), n)
        else:
            back = decompose_exp(fm.to_expform().y)
        bad += back != fm
    return bad


def _necessary(rng, trials):
    bad = 0
    for i in range(trials):
        mode = MODES[i % 2]
        n = rng.randint(2, 10)
        fm = random_multiset(rng, n, mode)
        obj = fm.to_polynomial(n) if mode == POLYNOMIAL else fm.to_expform().y
        f2, sig = analyze(obj, n, mode)
        bad += not check_necessary(sig, f2, n, mode).ok
    return bad


def run_selftest(seed: int = 0, scale: float = 1.0) -> dict:
    rng = random.Random(f"selftest:{seed}")
    t = lambda k: max(1, int(k * scale))  # noqa: E731
    results = {}

    def record(name, fn):
        start = time.perf_counter()
        failures = fn()
        results[name] = {"failures": failures, "seconds": round(time.perf_counter() - start, 3)}

    record("identity_law", lambda: _identity(rng, t(200)))
    record("roundtrip", lambda: _roundtrip(rng, t(100)))
    record("necessary_conditions", lambda: _necessary(rng, t(200)))

    def phi():
        bad = 0
        for mode in MODES:
            for row in phi_report(5, mode, affinity_trials=t(5)):
                bad += not (row.all_rational and row.all_positive and row.invertible and row.affinity_ok)
        return bad

    record("phi", phi)

    def realize():
        bad = 0
        for mode in MODES:
            res = realize_all(3, mode, SearchConfig(seed=seed or SearchConfig.seed), strict_errors=False)
            bad += res.counts["failed"]
        return bad

    record("realize_n3", realize)
    ok = all(v["failures"] == 0 for v in results.values())
    return {"ok": ok, "seed": seed, "suites": results}
