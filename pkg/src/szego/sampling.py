"""Random exact instances for property checks (self-test and test-suite)."""

from __future__ import annotations

import random
from fractions import Fraction

from .decomposition import POLYNOMIAL, FactorMultiset
from .exact_arith import GaussRational, RatPoly

__all__ = ["random_rational", "random_values", "random_multiset", "random_ratpoly"]


def random_rational(rng: random.Random, num: int = 30, den: int = 12, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-num, num), rng.randint(1, den))
        if v or not nonzero:
            return v


def random_values(rng: random.Random, count: int, n: int | None = None, mode: str = POLYNOMIAL,
                  zeros: bool = True, specials: bool = True, pairs: bool = True) -> list:
    """``count`` factor values: rationals of both signs, zeros, b_j values and conjugate pairs."""
    out: list = []
    while len(out) < count:
        kind = rng.random()
        room = count - len(out)
        if pairs and room >= 2 and kind < 0.25:
            z = GaussRational(random_rational(rng), random_rational(rng, nonzero=True))
            out += [z, z.conjugate()]
        elif zeros and kind < 0.35:
            out.append(Fraction(0))
        elif specials and kind < 0.5:
            if mode == POLYNOMIAL:
                j = rng.randint(1, n - 1)
                out.append(Fraction(-j, n - j))
            else:
                out.append(Fraction(-rng.randint(1, 9)))
        else:
            out.append(random_rational(rng, nonzero=True))
    rng.shuffle(out)
    return out


def random_multiset(rng: random.Random, n: int, mode: str = POLYNOMIAL, scalar: bool = True, **kw) -> FactorMultiset:
    """Polynomial mode: n-1 values.  Exponential mode: deg R = n-1 values."""
    vals = random_values(rng, n - 1, n, mode, **kw)
    c = random_rational(rng, nonzero=True) if scalar else Fraction(1)
    return FactorMultiset.from_values(vals, scalar=c, mode=mode)


def random_ratpoly(rng: random.Random, degree: int, num: int = 20, den: int = 9) -> RatPoly:
    cs = [random_rational(rng, num, den) for _ in range(degree)]
    cs.append(random_rational(rng, num, den, nonzero=True))
    return RatPoly(cs)
