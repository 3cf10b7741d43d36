"""Special-function primitives shared by the rest of the package.

All approximate values are binary64.  Quantities that blow up (such as
Gamma(2n + m) for large n) are never formed directly on the approximate
path; everything is assembled in the log domain.  Quantities that are
rational (gamma ratios with integer argument difference, binomials) are
computed exactly over arbitrary-precision integers.

Half-integers are represented as Fraction with denominator 1 or 2; plain
ints and exactly-half-integral floats are accepted and coerced.
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from functools import lru_cache

import numpy as np

LOG_PI = math.log(math.pi)


def as_half_integer(q) -> Fraction:
    """Coerce q to an exact half-integer Fraction; reject anything else."""
    if isinstance(q, (int, np.integer)):
        return Fraction(int(q))
    if isinstance(q, Fraction):
        f = q
    elif isinstance(q, float):
        f = Fraction(q)
    else:
        raise TypeError(f"not a half-integer: {q!r}")
    if (2 * f).denominator != 1:
        raise ValueError(f"not a half-integer: {q!r}")
    return f


def log_gamma(q) -> float:
    """Natural log of Gamma(q) for a positive half-integer q.

    Relative accuracy 1e-14 against max(1, |ln Gamma(q)|); delegated to
    math.lgamma, which is well within that on half-integral arguments
    (validated against the exact factorial forms in the test-suite).
    """
    f = as_half_integer(q)
    if f <= 0:
        raise ValueError(f"log_gamma needs q > 0, got {q}")
    return math.lgamma(float(f))


def gamma_ratio_exact(a, b) -> Fraction:
    """Gamma(a)/Gamma(b) as an exact rational, for half-integers with a - b
    an integer (the sqrt(pi) factors cancel and the ratio telescopes).
    """
    fa, fb = as_half_integer(a), as_half_integer(b)
    if fa <= 0 or fb <= 0:
        raise ValueError(f"gamma_ratio_exact needs positive arguments, got ({a}, {b})")
    if (fa - fb).denominator != 1:
        raise ValueError(
            f"unsupported ratio: Gamma({a})/Gamma({b}) is irrational-over-rational "
            "(a - b must be an integer)"
        )
    if fa < fb:
        return 1 / gamma_ratio_exact(fb, fa)
    # Gamma(a) = (a-1)(a-2)...(b) Gamma(b)
    out = Fraction(1)
    x = fb
    while x < fa:
        out *= x
        x += 1
    return out


def binomial(p: int, q: int) -> int:
    """Exact C(p, q); returns 0 when q > p (empty selection convention)."""
    if p < 0 or q < 0:
        raise ValueError(f"binomial needs nonnegative arguments, got ({p}, {q})")
    if q > p:
        return 0
    return math.comb(p, q)


def sphere_area(d: int) -> float:
    """Surface measure of the unit d-sphere: 2 pi^((d+1)/2) / Gamma((d+1)/2)."""
    if d < 0:
        raise ValueError(f"sphere_area needs d >= 0, got {d}")
    h = Fraction(d + 1, 2)
    return math.exp(math.log(2) + float(h) * LOG_PI - log_gamma(h))


@lru_cache(maxsize=None)
def zeta(s: int) -> float:
    """Riemann zeta at an integer s >= 2, by direct summation.

    Sums j^-s for j < N and encloses the remainder sum_{j>=N} j^-s in the
    integral bracket [N^(1-s), (N-1)^(1-s)] / (s-1); N is chosen so the
    bracket is narrower than 1e-14 and the midpoint is returned.
    """
    if not isinstance(s, (int, np.integer)) or s < 2:
        raise ValueError(f"zeta needs an integer s >= 2, got {s!r}")
    s = int(s)
    # bracket width ~ N^-s, so N = ceil(1e14^(1/s)) + 1 makes it < 1e-14
    N = math.ceil(10 ** (14 / s)) + 2
    total = 0.0
    comp = 0.0
    for lo in range(1, N, 1 << 16):
        j = np.arange(lo, min(lo + (1 << 16), N), dtype=np.float64)
        block = float(np.sum(j ** (-float(s))))
        y = block - comp  # Kahan across blocks
        t = total + y
        comp = (t - total) - y
        total = t
    lo_tail = float(N) ** (1 - s) / (s - 1)
    hi_tail = float(N - 1) ** (1 - s) / (s - 1)
    return total + (lo_tail + hi_tail) / 2


def round_half_away(value, decimals: int = 4) -> str:
    """Fixed-point decimal string, rounding halves away from zero.

    Fractions are rounded exactly; floats via their exact binary value.
    This is the display convention of the reference tables (0.72576 ->
    "0.7258").
    """
    if decimals < 0:
        raise ValueError("decimals must be >= 0")
    if isinstance(value, Fraction):
        sign = "-" if value < 0 else ""
        scaled = abs(value) * 10**decimals
        q, r = divmod(scaled.numerator, scaled.denominator)
        if 2 * r >= scaled.denominator:
            q += 1  # halves of the magnitude go up, i.e. away from zero
        if decimals == 0:
            return f"{sign}{q}"
        return f"{sign}{q // 10**decimals}.{q % 10**decimals:0{decimals}d}"
    d = Decimal(float(value)).quantize(Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_UP)
    return str(d)
