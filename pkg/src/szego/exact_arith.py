"""Exact number towers and dense univariate polynomials.

Rationals are :class:`fractions.Fraction`.  Gaussian rationals and the two
polynomial types (real and Gaussian coefficients) are defined here, together
with the Stirling-number basis changes and exact interpolation.  Root counting
and isolation live in :mod:`szego.roots`.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "NEG_INF",
    "GaussRational",
    "RatPoly",
    "GaussRatPoly",
    "to_fraction",
    "to_number",
    "format_fraction",
    "interpolate",
    "falling_to_monomial",
    "monomial_to_falling",
    "stirling1",
    "stirling2",
    "binomial",
]

NEG_INF = float("-inf")  # degree of the zero polynomial


def to_fraction(value) -> Fraction:
    """Coerce ``int``/``Fraction``/``"p/q"`` strings to a Fraction.

    Floats are rejected on purpose: nothing in this package is allowed to
    enter the exact pipeline through binary floating point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, GaussRational) and value.im == 0:
        return value.re
    raise TypeError(f"cannot convert {value!r} to an exact rational")


def format_fraction(x: Fraction) -> str:
    return str(x)


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class GaussRational:
    """A complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", to_fraction(re))
        object.__setattr__(self, "im", to_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @staticmethod
    def coerce(value) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        return GaussRational(to_fraction(value), 0)

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __add__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        d = o.norm()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussRational(1) / (self ** (-k))
        out = GaussRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        try:
            o = to_fraction(other)
        except TypeError:
            return NotImplemented
        return self.im == 0 and self.re == o

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def to_number(value):
    """Fraction for real input, GaussRational for ``(re, im)`` pairs or Gaussian input."""
    if isinstance(value, GaussRational):
        return value.re if value.im == 0 else value
    if isinstance(value, (tuple, list)) and len(value) == 2:
        g = GaussRational(value[0], value[1])
        return g.re if g.im == 0 else g
    return to_fraction(value)


def _is_gauss(c) -> bool:
    return isinstance(c, GaussRational)


class _DensePoly:
    """Immutable dense polynomial with ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [self._coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    # -- construction helpers -------------------------------------------------
    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1):
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots):
        out = cls.one()
        for r in roots:
            out = out * cls((-cls._coerce(r), 1))
        return out

    # -- basic properties ----------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, j: int):
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return self._coerce(0)

    def padded(self, length: int) -> list:
        if len(self.coeffs) > length:
            raise ValueError("polynomial longer than requested padding")
        return list(self.coeffs) + [self._coerce(0)] * (length - len(self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, _DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussRational)):
            return self.coeffs == type(self)((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            cs = f"({c})" if _is_gauss(c) and c.im != 0 else str(c)
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")

    # -- arithmetic -----------------------------------------------------------
    def _promote(self, other):
        """Return (cls, a, b) with both operands lifted to a common type."""
        if isinstance(other, _DensePoly):
            if isinstance(self, GaussRatPoly) or isinstance(other, GaussRatPoly):
                return GaussRatPoly, self.coeffs, other.coeffs
            return type(self), self.coeffs, other.coeffs
        if isinstance(other, GaussRational) or isinstance(self, GaussRatPoly):
            return GaussRatPoly, self.coeffs, (other,)
        return type(self), self.coeffs, (other,)

    def __add__(self, other):
        if not isinstance(other, (_DensePoly, int, Fraction, GaussRational)):
            return NotImplemented
        cls, a, b = self._promote(other)
        n = max(len(a), len(b))
        out = []
        for i in range(n):
            x = a[i] if i < len(a) else 0
            y = b[i] if i < len(b) else 0
            out.append(x + y)
        return cls(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, (_DensePoly, int, Fraction, GaussRational)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            cls = GaussRatPoly if (_is_gauss(other) or isinstance(self, GaussRatPoly)) else type(self)
            return cls(c * other for c in self.coeffs)
        if not isinstance(other, _DensePoly):
            return NotImplemented
        cls, a, b = self._promote(other)
        if not a or not b:
            return cls(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return cls(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = type(self).one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c):
        return self * c

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if self.coeffs else self._coerce(0)

    def derivative(self, order: int = 1):
        cs = list(self.coeffs)
        for _ in range(order):
            cs = [c * j for j, c in enumerate(cs)][1:]
        return type(self)(cs)

    def divmod(self, divisor):
        """Euclidean division over the coefficient field."""
        if isinstance(divisor, (int, Fraction, GaussRational)):
            divisor = type(self)((divisor,))
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        cls = GaussRatPoly if isinstance(self, GaussRatPoly) or isinstance(divisor, GaussRatPoly) else type(self)
        rem = list(self.coeffs)
        d = divisor.coeffs
        dl = len(d)
        inv_lc = 1 / cls._coerce(d[-1]) if cls is GaussRatPoly else Fraction(1) / d[-1]
        if len(rem) < dl:
            return cls(()), cls(rem)
        quot = [0] * (len(rem) - dl + 1)
        for i in range(len(rem) - dl, -1, -1):
            c = rem[i + dl - 1] * inv_lc
            quot[i] = c
            if c:
                for j in range(dl):
                    rem[i + j] = rem[i + j] - c * d[j]
        return cls(quot), cls(rem[: dl - 1])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("polynomial division is not exact")
        return q

    def monic(self):
        if self.is_zero():
            raise ValueError("zero polynomial cannot be made monic")
        return self * (1 / self._coerce(self.lc)) if isinstance(self, GaussRatPoly) else self * (Fraction(1) / self.lc)

    def compose_affine(self, a, b):
        """Return p(a*x + b)."""
        out = type(self)(())
        lin = type(self)((b, a))
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def reflect(self):
        """Return p(-x)."""
        return type(self)(c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs))


class RatPoly(_DensePoly):
    """Polynomial with exact rational coefficients (ascending order)."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        return to_fraction(c)

    def gcd(self, other: "RatPoly") -> "RatPoly":
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def content_primitive(self) -> tuple[Fraction, list[int]]:
        """Split into ``c * f`` with ``f`` a primitive integer polynomial, ``lc(f) > 0``."""
        if self.is_zero():
            raise ValueError("zero polynomial has no primitive part")
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), [v // g for v in ints]

    def primitive(self) -> "RatPoly":
        return RatPoly(self.content_primitive()[1])

    def to_gauss(self) -> "GaussRatPoly":
        return GaussRatPoly(self.coeffs)

    def trailing_zero_multiplicity(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial")
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def shift_down(self, k: int) -> "RatPoly":
        """Divide by x^k (the low k coefficients must vanish)."""
        if any(self.coeffs[:k]):
            raise ValueError("not divisible by x^k")
        return RatPoly(self.coeffs[k:])


class GaussRatPoly(_DensePoly):
    """Polynomial with Gaussian-rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        return GaussRational.coerce(c)

    def conj(self) -> "GaussRatPoly":
        return GaussRatPoly(c.conjugate() for c in self.coeffs)

    def real_part(self) -> RatPoly:
        return RatPoly(c.re for c in self.coeffs)

    def imag_part(self) -> RatPoly:
        return RatPoly(c.im for c in self.coeffs)

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.coeffs)

    def to_ratpoly(self) -> RatPoly:
        if not self.is_real():
            raise ValueError("polynomial has non-real coefficients")
        return self.real_part()


def as_ratpoly(p) -> RatPoly:
    """Demote a Gaussian polynomial with zero imaginary parts; pass RatPoly through."""
    if isinstance(p, RatPoly):
        return p
    if isinstance(p, GaussRatPoly):
        return p.to_ratpoly()
    return RatPoly(p)


# ---------------------------------------------------------------------------
# interpolation


def interpolate(nodes, values) -> RatPoly:
    """Unique polynomial of degree < len(nodes) through the given points (Newton form)."""
    xs = [to_fraction(t) for t in nodes]
    ys = [to_fraction(v) for v in values]
    if len(xs) != len(ys):
        raise ValueError("nodes and values differ in length")
    if not xs:
        raise ValueError("need at least one node")
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate interpolation nodes")
    n = len(xs)
    dd = list(ys)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # Horner on the Newton basis
    out = [Fraction(0)] * n
    out[0] = dd[n - 1]
    size = 1
    for i in range(n - 2, -1, -1):
        # out <- out * (t - xs[i]) + dd[i]
        new = [Fraction(0)] * (size + 1)
        for j in range(size):
            new[j + 1] += out[j]
            new[j] -= xs[i] * out[j]
        new[0] += dd[i]
        size += 1
        out[:size] = new
    return RatPoly(out[:size])


# ---------------------------------------------------------------------------
# Stirling numbers and the falling-factorial basis


@functools.lru_cache(maxsize=None)
def stirling1(n: int) -> tuple[int, ...]:
    """Row n of signed Stirling numbers of the first kind: (t)_n = sum_k s(n,k) t^k."""
    if n == 0:
        return (1,)
    prev = stirling1(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        left = prev[k - 1]
        mid = prev[k] if k < n else 0
        row[k] = left - (n - 1) * mid
    return tuple(row)


@functools.lru_cache(maxsize=None)
def stirling2(n: int) -> tuple[int, ...]:
    """Row n of Stirling numbers of the second kind: t^n = sum_k S(n,k) (t)_k."""
    if n == 0:
        return (1,)
    prev = stirling2(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        left = prev[k - 1]
        mid = prev[k] if k < n else 0
        row[k] = left + k * mid
    return tuple(row)


def falling_to_monomial(c) -> list[Fraction]:
    """Monomial coefficients of ``sum_k c[k] * t(t-1)...(t-k+1)``."""
    cs = [to_fraction(v) for v in c]
    out = [Fraction(0)] * len(cs)
    for k, ck in enumerate(cs):
        if not ck:
            continue
        for j, s in enumerate(stirling1(k)):
            if s:
                out[j] += ck * s
    return out


def monomial_to_falling(c) -> list[Fraction]:
    """Inverse of :func:`falling_to_monomial`."""
    cs = [to_fraction(v) for v in c]
    out = [Fraction(0)] * len(cs)
    for j, cj in enumerate(cs):
        if not cj:
            continue
        for k, s in enumerate(stirling2(j)):
            if s:
                out[k] += cj * s
    return out


def falling_factorial(t, k: int):
    out = 1
    for i in range(k):
        out = out * (t - i)
    return out
