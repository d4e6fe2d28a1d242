"""Exact arithmetic in the field Q(i) of Gaussian rationals.

A Gaussian rational is a pair of arbitrary-precision rationals (re, im)
standing for re + im*i.  ``fractions.Fraction`` already provides reduced
arbitrary-precision rationals, so the real and imaginary parts are plain
Fractions and every field operation here is exact.

The module also provides exact square roots (needed to solve quadratics
over Q(i) in closed form) and gcd/divisor utilities for Gaussian integers
(needed for content normalization and rational-root sieving).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator

_RatLike = (int, Fraction)


class GaussRational:
    """An element of Q(i), immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def coerce(value) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, _RatLike):
            return GaussRational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussRational")

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (GaussRational, *_RatLike)):
            return NotImplemented
        other = GaussRational.coerce(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (GaussRational, *_RatLike)):
            return NotImplemented
        other = GaussRational.coerce(other)
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussRational.coerce(other) - self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, (GaussRational, *_RatLike)):
            return NotImplemented
        other = GaussRational.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Field norm re^2 + im^2, a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _RatLike):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- conversion -----------------------------------------------------

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * float(self.im)

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{_imag_str(abs(self.im))}"

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"


def _imag_str(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)


# -- exact square roots -------------------------------------------------


def fraction_sqrt(f: Fraction) -> Fraction | None:
    """Exact nonnegative square root of a rational, or None."""
    if f < 0:
        return None
    num, den = f.numerator, f.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def gauss_sqrt(z: GaussRational) -> GaussRational | None:
    """A square root of z inside Q(i), or None when no such root exists.

    Writing w = c + d*i with w^2 = z forces c^2 = (re + |z|)/2 where
    |z| = sqrt(norm z), so everything reduces to rational square tests.
    """
    if z.is_zero():
        return ZERO
    if not z.im:
        r = fraction_sqrt(z.re)
        if r is not None:
            return GaussRational(r)
        r = fraction_sqrt(-z.re)
        if r is not None:
            return GaussRational(0, r)
        return None
    n = fraction_sqrt(z.norm())
    if n is None:
        return None
    c = fraction_sqrt((z.re + n) / 2)
    if c is None or c == 0:
        return None
    d = z.im / (2 * c)
    w = GaussRational(c, d)
    return w if w * w == z else None


# -- Gaussian integers --------------------------------------------------


def gauss_int_gcd(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    """Euclidean gcd in Z[i] with rounded division, normalized so the
    result has re > 0, or re == 0 and im > 0 (zero stays zero)."""
    while b != (0, 0):
        a, b = b, _gauss_int_mod(a, b)
    return _normalize_unit(a)


def _gauss_int_mod(a, b):
    ar, ai = a
    br, bi = b
    n = br * br + bi * bi
    # nearest Gaussian integer to a/b
    qr = (2 * (ar * br + ai * bi) + n) // (2 * n)
    qi = (2 * (ai * br - ar * bi) + n) // (2 * n)
    return (ar - (qr * br - qi * bi), ai - (qr * bi + qi * br))


def _normalize_unit(a):
    ar, ai = a
    if ar == 0 and ai == 0:
        return a
    # multiply by a unit to land in the half-plane re > 0, tie-broken upward
    for _ in range(4):
        if ar > 0 or (ar == 0 and ai > 0):
            break
        ar, ai = -ai, ar
    return (ar, ai)


def gauss_int_divisors(z: tuple[int, int], cap: int = 200000) -> Iterator[tuple[int, int]]:
    """All divisors of a nonzero Gaussian integer, up to units.

    Scans the norm lattice; every divisor's norm divides norm(z).  Yields
    nothing when norm(z) exceeds ``cap`` (callers fall back to numerics).
    """
    zr, zi = z
    n = zr * zr + zi * zi
    if n == 0 or n > cap:
        return
    seen = set()
    bound = math.isqrt(n)
    for a in range(0, bound + 1):
        for b in range(0, bound + 1):
            m = a * a + b * b
            if m == 0 or m > n or n % m:
                continue
            for cand in ((a, b), (b, a)):
                for d in {cand, (cand[0], -cand[1])}:
                    if d[0] * d[0] + d[1] * d[1] == 0:
                        continue
                    if _divides(d, z) and _normalize_unit(d) not in seen:
                        d = _normalize_unit(d)
                        seen.add(d)
                        yield d


def _divides(d, z):
    dr, di = d
    zr, zi = z
    n = dr * dr + di * di
    return (zr * dr + zi * di) % n == 0 and (zi * dr - zr * di) % n == 0
