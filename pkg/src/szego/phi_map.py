"""Phi as a named artifact: extraction, affinity check, eigenvalue table."""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from fractions import Fraction

from .decomposition import POLYNOMIAL, AffineMap, _check_mode, phi_affine, phi_eigen_check, phi_of

__all__ = ["PhiRow", "phi_report", "affinity_residual", "rows_to_csv"]


@dataclass(frozen=True)
class PhiRow:
    n: int
    mode: str
    eigenvalues: tuple
    all_rational: bool
    all_positive: bool
    invertible: bool
    affinity_checked: int = 0
    affinity_ok: bool = True

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "eigenvalues": [str(e) for e in self.eigenvalues],
            "all_rational": self.all_rational,
            "all_positive": self.all_positive,
            "invertible": self.invertible,
            "affinity_checked": self.affinity_checked,
            "affinity_ok": self.affinity_ok,
        }


def _random_vector(rng: random.Random, d: int) -> list[Fraction]:
    return [Fraction(rng.randint(-40, 40), rng.randint(1, 12)) for _ in range(d)]


def affinity_residual(amap: AffineMap, trials: int = 100, seed: int = 0) -> int:
    """Number of random c where the stored map and a full decomposition disagree (0 expected)."""
    rng = random.Random(f"affinity:{amap.n}:{amap.mode}:{seed}")
    bad = 0
    for _ in range(trials):
        c = _random_vector(rng, amap.n - 1)
        if amap(c) != phi_of(c, amap.n, amap.mode):
            bad += 1
    return bad


def phi_report(n_max: int, mode: str = POLYNOMIAL, affinity_trials: int = 0, n_min: int = 2, seed: int = 0) -> list[PhiRow]:
    """One row per n in [n_min, n_max]."""
    _check_mode(mode)
    if n_max < 2 or n_min < 2 or n_min > n_max:
        raise ValueError("need 2 <= n_min <= n_max")
    rows = []
    for n in range(n_min, n_max + 1):
        amap = phi_affine(n, mode)
        rep = phi_eigen_check(n, mode, amap)
        bad = affinity_residual(amap, affinity_trials, seed) if affinity_trials else 0
        rows.append(
            PhiRow(n, mode, rep.eigenvalues, rep.all_rational, rep.all_positive, rep.invertible, affinity_trials, bad == 0)
        )
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    cols = ["n", "mode", "eigenvalues", "all_rational", "all_positive", "invertible", "affinity_checked", "affinity_ok"]
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    for r in rows:
        d = r.to_dict()
        d["eigenvalues"] = " ".join(d["eigenvalues"])
        w.writerow(d)
    return buf.getvalue()
