"""Certified rational enclosures of natural logarithms.

Search bounds and applicability thresholds have the shape ceil(c*ln(x) + d)
or strict tests n > c*ln(x) + d.  Rounding these with floating point could
under-shoot a bound near a tie, so everything here is Fraction interval
arithmetic built on the series ln(m) = 2*atanh(y) = 2*sum y^(2j+1)/(2j+1)
with y = (m-1)/(m+1), after the range reduction x = 2^e * m, m in [1, 2).

For integer x >= 2 and rational c != 0, d the value c*ln(x) + d is
irrational, so widening the precision always separates it from any integer
and the exact ceiling is reached in a bounded number of refinements.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import ceil

_ZERO = Fraction(0)


def _atanh_enclosure(y: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    """[lo, hi] for atanh(y), 0 <= y < 1, via partial sum + geometric tail."""
    if y == 0:
        return _ZERO, _ZERO
    y2 = y * y
    power = y
    total = Fraction(0)
    for j in range(terms):
        total += power / (2 * j + 1)
        power *= y2
    tail = power / ((2 * terms + 1) * (1 - y2))
    return total, total + tail


def ln_enclosure(x: Fraction | int, terms: int = 12) -> tuple[Fraction, Fraction]:
    """[lo, hi] containing ln(x) for rational x >= 1; exact [0, 0] at x = 1."""
    x = Fraction(x)
    if x < 1:
        raise ValueError("ln_enclosure requires x >= 1")
    if x == 1:
        return _ZERO, _ZERO
    e = x.numerator.bit_length() - x.denominator.bit_length()
    m = x / Fraction(2) ** e
    if m >= 2:
        m /= 2
        e += 1
    elif m < 1:
        m *= 2
        e -= 1
    ln2_lo, ln2_hi = _atanh_enclosure(Fraction(1, 3), terms)
    m_lo, m_hi = _atanh_enclosure((m - 1) / (m + 1), terms)
    return 2 * (e * ln2_lo + m_lo), 2 * (e * ln2_hi + m_hi)


@lru_cache(maxsize=65536)
def ceil_log_affine(coeff, x: int, offset, scale=1) -> int:
    """Exact ceil(scale * (coeff*ln(x) + offset)) for integer x >= 1.

    coeff, offset, scale are rationals with scale > 0.  Refines the log
    enclosure until lower and upper ceilings agree.
    """
    coeff, offset, scale = Fraction(coeff), Fraction(offset), Fraction(scale)
    terms = 8
    while True:
        lo, hi = ln_enclosure(x, terms)
        c_lo = ceil(scale * (coeff * lo + offset))
        c_hi = ceil(scale * (coeff * hi + offset))
        if c_lo == c_hi:
            return c_hi
        terms *= 2
        if terms > 4096:  # unreachable for irrational values; safety stop
            return c_hi


@lru_cache(maxsize=65536)
def exceeds_log_affine(n: int, coeff, x: int, offset) -> bool:
    """Exact test n > coeff*ln(x) + offset for integer x >= 1."""
    coeff, offset = Fraction(coeff), Fraction(offset)
    if coeff == 0 or x == 1:
        return Fraction(n) > offset
    terms = 8
    while True:
        lo, hi = ln_enclosure(x, terms)
        if Fraction(n) > coeff * hi + offset:
            return True
        if Fraction(n) <= coeff * lo + offset:
            return False
        terms *= 2
        if terms > 4096:
            return False


@lru_cache(maxsize=65536)
def below_log_affine(n: int, coeff, x: int, offset) -> bool:
    """Exact test n < coeff*ln(x) + offset for integer x >= 1."""
    coeff, offset = Fraction(coeff), Fraction(offset)
    if coeff == 0 or x == 1:
        return Fraction(n) < offset
    terms = 8
    while True:
        lo, hi = ln_enclosure(x, terms)
        if Fraction(n) < coeff * lo + offset:
            return True
        if Fraction(n) >= coeff * hi + offset:
            return False
        terms *= 2
        if terms > 4096:
            return False


@lru_cache(maxsize=65536)
def upper_log_loglog(c, x: int, terms: int = 40) -> int:
    """Certified integer upper bound of c * ln(x) * (ln(ln(x)))^2.

    Returns 1 when x <= 2 (the inner logarithm would be <= 0 there).  The
    bound is rounded up; it is a threshold estimate, never an assertion.
    """
    c = Fraction(c)
    if x <= 2:
        return 1
    _, hi = ln_enclosure(x, terms)
    _, llhi = ln_enclosure(hi, terms)  # x >= 3 so hi >= ln 3 > 1
    return max(1, ceil(c * hi * llhi * llhi))
