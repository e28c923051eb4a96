"""Exact verification of growth lower bounds on |u_n|.

Real case (A^2 > 4B): the branch on how far the minor root sits from zero
relative to |Q/P| decides which pair of lower bounds applies, each verified
exactly: powers of the dominant root alpha go through the Lucas-pair
representation alpha^m = (V_m + U_m*sqrt(delta))/2 and one QuadElem sign,
and pure-surd bounds (sqrt5/2 and the golden ratio) clear denominators by
powers of two against the Fibonacci/Lucas pair at (1, -1).  Non-real case
(A^2 < 4B): |alpha| = sqrt(B), so the claimed |u_n| >= |alpha|^(2n/3) is the
pure integer test |u_n|^3 >= B^n.

Every report carries the exact margin whose sign was tested.  Applicability
thresholds that involve ln|Q| are rounded up with certified enclosures, so
"applicable" is never claimed before the bound's hypothesis truly holds.
A < 0 inputs are flipped internally (u_n -> (-1)^n u_n leaves every |u_n|
unchanged).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from . import kernels, terms
from .core import (DegenerateInputError, Kind, Reason, SequenceParams, classify,
                   discriminant)
from .exactnum import QuadElem, alpha_power
from .logbounds import ceil_log_affine, exceeds_log_affine, ln_enclosure, upper_log_loglog

DEFAULT_C_NONREAL_THRESHOLD = Fraction(50)   # factor in the structural threshold
DEFAULT_C_LUCAS_NONREAL = Fraction(100)      # exponent slack in the non-real Lucas check


class BranchKind(enum.Enum):
    FAR = "far"    # |A - D| >= 6|Q/P|: the minor root is bounded away
    NEAR = "near"  # |A - D| < 6|Q/P|: both closed-form terms can compete


class GrowthCase(enum.Enum):
    FAR_POS = "far-positive"     # A - D >= 6|Q/P| (minor root positive, B > 0)
    FAR_NEG = "far-negative"     # D - A >= 6|Q/P| (minor root negative, B < 0)
    NEAR_WIDE = "near-wide"      # |A - D| < 6|Q/P| and A + D >= 9|Q/P|
    NEAR_TIGHT = "near-tight"    # |A - D| < 6|Q/P| and A + D < 9|Q/P|


@dataclass(frozen=True)
class GrowthBranch:
    kind: BranchKind
    case: GrowthCase
    n_min: int


@dataclass(frozen=True)
class Margin:
    """An exact difference whose sign decided one inequality."""

    label: str
    value: QuadElem | int
    sign: int

    @property
    def holds(self) -> bool:
        return self.sign >= 0


@dataclass(frozen=True)
class GrowthReport:
    n: int
    regime: str
    applicable: bool
    bound_holds: bool | None
    margins: tuple[Margin, ...]
    threshold: int | None = None


def _margin(label: str, value) -> Margin:
    sign = value.sign() if isinstance(value, QuadElem) else (value > 0) - (value < 0)
    return Margin(label, value, sign)


def _report(n, regime, applicable, margins=(), threshold=None) -> GrowthReport:
    holds = all(m.sign >= 0 for m in margins) if applicable else None
    return GrowthReport(n, regime, applicable, holds, tuple(margins), threshold)


def _real_setup(params: SequenceParams):
    cls = classify(params)
    if cls.kind is not Kind.REAL:
        raise DegenerateInputError(f"real-case growth check got {cls.label()}")
    if params.P == 0 or params.Q == 0:
        raise DegenerateInputError("real-case growth bounds need P*Q != 0")
    return abs(params.A), params.B, abs(params.P), abs(params.Q)


def real_case_branch(params: SequenceParams) -> GrowthBranch:
    """Exact branch and sub-case decision with its applicability threshold.

    All comparisons against D = sqrt(A^2-4B) are QuadElem sign tests; the
    threshold is ceil(6|Q/P| + 6) on the far branch and the certified
    ceiling of (18 + 7*ln|Q|)*max(1, |Q/P|) on the near branch.
    """
    a, b, abs_p, abs_q = _real_setup(params)
    delta = a * a - 4 * b
    q = Fraction(abs_q, abs_p)
    if QuadElem(a - 6 * q, Fraction(-1), delta).sign() >= 0:
        return GrowthBranch(BranchKind.FAR, GrowthCase.FAR_POS, ceil(6 * q + 6))
    if QuadElem(-(a + 6 * q), Fraction(1), delta).sign() >= 0:
        return GrowthBranch(BranchKind.FAR, GrowthCase.FAR_NEG, ceil(6 * q + 6))
    n_min = ceil_log_affine(7, abs_q, 18, scale=max(Fraction(1), q))
    if QuadElem(a - 9 * q, Fraction(1), delta).sign() >= 0:
        return GrowthBranch(BranchKind.NEAR, GrowthCase.NEAR_WIDE, n_min)
    return GrowthBranch(BranchKind.NEAR, GrowthCase.NEAR_TIGHT, n_min)


def check_real_growth(params: SequenceParams, n: int) -> GrowthReport:
    """Both lower bounds of the applicable real-case branch at index n.

    Far branch (n >= 6|Q/P| + 6):
        |u_n| >= |Q|*(alpha/2)^(n-2)   and   |u_n| >= |Q|*(sqrt5/2)^n.
    Near branch (n >= (18 + 7 ln|Q|)*max(1, |Q/P|)):
        |u_n| >= alpha^(n-2)/max(5|P|, 22|Q|)
        and |u_n| >= phi^n/max(14|P|, 36|Q|).
    """
    a, b, abs_p, abs_q = _real_setup(params)
    branch = real_case_branch(params)
    regime = f"real-{branch.kind.value}"
    if n < branch.n_min:
        return _report(n, regime, False, threshold=branch.n_min)
    un = abs(terms.term_fast(params, n))
    delta = a * a - 4 * b
    apow = alpha_power(a, b, n - 2)
    if branch.kind is BranchKind.FAR:
        m1 = _margin("alpha-halves",
                     QuadElem.rational(un, delta) - apow * Fraction(abs_q, 2 ** (n - 2)))
        m2 = _margin("sqrt5-halves", un * un * 4 ** n - abs_q * abs_q * 5 ** n)
        return _report(n, regime, True, (m1, m2), branch.n_min)
    k1 = max(5 * abs_p, 22 * abs_q)
    k2 = max(14 * abs_p, 36 * abs_q)
    phi_n = alpha_power(1, -1, n)
    m1 = _margin("alpha-power",
                 QuadElem.rational(un, delta) - apow * Fraction(1, k1))
    m2 = _margin("golden-power",
                 QuadElem.rational(un, 5) - phi_n * Fraction(1, k2))
    return _report(n, regime, True, (m1, m2), branch.n_min)


def check_sharp_growth(params: SequenceParams, n: int) -> GrowthReport:
    """The sharper per-case bounds, under each sub-case's own hypotheses.

    far-positive  (n >= 7):       |u_n| >= 11|Q|(A/2)^(n-1), |u_n| >= 7|Q|(3/2)^n
    far-negative, n even (n >= 2): |u_n| >= |Q|*alpha^(n-1), |u_n| >= (3/5)|Q|*phi^n
    far-negative, n odd
      (n >= 6|Q/P| + 3):          |u_n| >= (n*A*|Q|/2)(D/2)^(n-2),
                                  |u_n| >= (14/5)|Q|(sqrt5/2)^n
    near-wide (n > 12 + 5 ln|Q|): |u_n| >= alpha^(n-2)/(5|P|), phi^n/(14|P|)
    near-tight (near threshold):  |u_n| >= alpha^(n-1)/(22|Q|), phi^n/(36|Q|)
    """
    a, b, abs_p, abs_q = _real_setup(params)
    branch = real_case_branch(params)
    delta = a * a - 4 * b
    case = branch.case

    if case is GrowthCase.FAR_POS:
        regime = "sharp-far-positive"
        if n < 7:
            return _report(n, regime, False, threshold=7)
        un = abs(terms.term_fast(params, n))
        m1 = _margin("eleven-a-halves",
                     un * 2 ** (n - 1) - 11 * abs_q * a ** (n - 1))
        m2 = _margin("seven-three-halves", un * 2 ** n - 7 * abs_q * 3 ** n)
        return _report(n, regime, True, (m1, m2), 7)

    if case is GrowthCase.FAR_NEG:
        q = Fraction(abs_q, abs_p)
        if n % 2 == 0:
            regime = "sharp-far-negative-even"
            if n < 2:
                return _report(n, regime, False, threshold=2)
            un = abs(terms.term_fast(params, n))
            m1 = _margin("alpha-linear",
                         QuadElem.rational(un, delta) - alpha_power(a, b, n - 1) * abs_q)
            m2 = _margin("golden-three-fifths",
                         QuadElem.rational(un, 5) - alpha_power(1, -1, n) * Fraction(3 * abs_q, 5))
            return _report(n, regime, True, (m1, m2), 2)
        regime = "sharp-far-negative-odd"
        n_min = ceil(6 * q + 3)
        if n < n_min:
            return _report(n, regime, False, threshold=n_min)
        un = abs(terms.term_fast(params, n))
        # n odd: D^(n-2) = delta^((n-3)/2) * sqrt(delta)
        d_pow = QuadElem(Fraction(0),
                         Fraction(n * a * abs_q * delta ** ((n - 3) // 2), 2 ** (n - 1)),
                         delta)
        m1 = _margin("half-n-a-d-halves", QuadElem.rational(un, delta) - d_pow)
        surd = QuadElem(Fraction(0),
                        Fraction(14 * abs_q * 5 ** ((n - 1) // 2), 5 * 2 ** n), 5)
        m2 = _margin("sqrt5-fourteen-fifths", QuadElem.rational(un, 5) - surd)
        return _report(n, regime, True, (m1, m2), n_min)

    if case is GrowthCase.NEAR_WIDE:
        regime = "sharp-near-wide"
        # smallest n with n > 12 + 5*ln|Q| (the bound is strict)
        t = ceil_log_affine(5, abs_q, 12) + (1 if abs_q == 1 else 0)
        if not exceeds_log_affine(n, 5, abs_q, 12):
            return _report(n, regime, False, threshold=t)
        un = abs(terms.term_fast(params, n))
        m1 = _margin("alpha-over-5p",
                     QuadElem.rational(un, delta) - alpha_power(a, b, n - 2) * Fraction(1, 5 * abs_p))
        m2 = _margin("golden-over-14p",
                     QuadElem.rational(un, 5) - alpha_power(1, -1, n) * Fraction(1, 14 * abs_p))
        return _report(n, regime, True, (m1, m2), t)

    regime = "sharp-near-tight"
    if n < branch.n_min:
        return _report(n, regime, False, threshold=branch.n_min)
    un = abs(terms.term_fast(params, n))
    m1 = _margin("alpha-over-22q",
                 QuadElem.rational(un, delta) - alpha_power(a, b, n - 1) * Fraction(1, 22 * abs_q))
    m2 = _margin("golden-over-36q",
                 QuadElem.rational(un, 5) - alpha_power(1, -1, n) * Fraction(1, 36 * abs_q))
    return _report(n, regime, True, (m1, m2), branch.n_min)


def check_nonreal_growth(params: SequenceParams, n: int) -> GrowthReport:
    """Non-real case: |u_n|^3 >= B^n (i.e. |u_n| >= |alpha|^(2n/3)), plus the
    weaker |u_n| >= 1.25^n as a second integer margin."""
    cls = classify(params)
    if cls.kind is not Kind.NONREAL:
        raise DegenerateInputError(f"non-real growth check got {cls.label()}")
    b = params.B
    if b < 2:
        raise DegenerateInputError("non-real non-degenerate sequences have B >= 2")
    if n < 0:
        raise ValueError("index must be non-negative")
    un = abs(terms.term_fast(params, n))
    m1 = _margin("cube-vs-b-power", un ** 3 - b ** n)
    m2 = _margin("five-fourths", un * 4 ** n - 5 ** n)
    return _report(n, "nonreal", True, (m1, m2))


def nonreal_threshold_formula(params: SequenceParams,
                              c_factor=DEFAULT_C_NONREAL_THRESHOLD) -> int:
    """Structural threshold c * ln(B|P|+|Q|) * (ln ln(B|P|+|Q|))^2, rounded up.

    The constant is configuration, not ground truth: the result is reported
    next to the empirical threshold, never asserted against it.
    """
    cls = classify(params)
    if cls.kind is not Kind.NONREAL:
        raise DegenerateInputError(f"threshold formula got {cls.label()}")
    x = params.B * abs(params.P) + abs(params.Q)
    return upper_log_loglog(Fraction(c_factor), x)


def empirical_nonreal_threshold(params: SequenceParams, horizon: int) -> int:
    """Smallest n* with |u_n|^3 >= B^n for every n in [n*, horizon].

    Returns horizon + 1 when the final index itself fails.
    """
    cls = classify(params)
    if cls.kind is not Kind.NONREAL:
        raise DegenerateInputError(f"threshold scan got {cls.label()}")
    last_fail = kernels.nonreal_growth_scan(params.A, params.B, params.P,
                                            params.Q, 0, horizon)
    return last_fail + 1


def check_lucas_growth(A: int, B: int, n: int,
                       c_nonreal=None) -> GrowthReport:
    """Growth floor of the first-kind Lucas sequence U_n at index n >= 2.

    B < 0:        2|U_n| >= alpha^(n-2)
    0 < 4B < A^2: |U_n| >= alpha^(n-1)
    A^2 < 4B:     |U_n| >= |alpha|^(n - c*(ln n)^2), which carries an
                  inexplicit constant; it is checked only against the
                  caller-supplied c (conservatively: the claimed exponent is
                  rounded up, so a holding verdict is certain, a failing one
                  is merely "not confirmed at this c").
    """
    if n < 2:
        raise ValueError("Lucas growth bounds start at n = 2")
    cls = classify(SequenceParams(A, B, 0, 1))
    if cls.is_degenerate:
        raise DegenerateInputError(f"Lucas growth check got {cls.label()}")
    a = abs(A)
    un = abs(terms.lucas_U(a, B, n))
    delta = a * a - 4 * B
    if cls.kind is Kind.REAL:
        if B < 0:
            value = QuadElem.rational(2 * un, delta) - alpha_power(a, B, n - 2)
            return _report(n, "lucas-negative-b", True, (_margin("double-u", value),), 2)
        value = QuadElem.rational(un, delta) - alpha_power(a, B, n - 1)
        return _report(n, "lucas-positive-b", True, (_margin("u-alpha", value),), 2)
    if c_nonreal is None:
        raise DegenerateInputError(
            "non-real Lucas bound needs an explicit constant (c_nonreal)")
    lo, _ = ln_enclosure(n)
    slack = floor(Fraction(c_nonreal) * lo * lo)
    exponent = max(0, n - slack)
    value = un * un - B ** exponent
    return _report(n, "lucas-nonreal", True, (_margin("u-squared", value),))


# -- naive height of the root-coefficient ratio ------------------------------

@dataclass(frozen=True)
class RatioHeight:
    """Primitive integer polynomial with root b/a, and its height.

    coeffs are ascending with positive leading coefficient.  In the
    quadratic (irrational-D) case the polynomial is self-reciprocal: its
    roots b/a and a/b multiply to 1.
    """

    coeffs: tuple[int, ...]
    height: int
    linear: bool


def _primitive(coeffs: list[int]) -> tuple[int, ...]:
    from math import gcd
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    out = [c // g for c in coeffs]
    if out[-1] < 0:
        out = [-c for c in out]
    return tuple(out)


def _require_coeffs_nonzero(params: SequenceParams) -> None:
    cls = classify(params)
    if cls.reason in (Reason.BOTH_INITIAL_ZERO, Reason.B_ZERO,
                      Reason.EQUAL_ROOTS, Reason.LEADING_COEFF_ZERO,
                      Reason.SECONDARY_COEFF_ZERO):
        raise DegenerateInputError(
            f"ratio b/a undefined or zero for {cls.label()}")


def ratio_height(params: SequenceParams) -> RatioHeight:
    """Defining polynomial and naive height of b/a, where u_n = a*alpha^n - b*beta^n.

    A is sign-normalized to |A| first (the flipped sequence has the same
    term magnitudes).  Integer roots give the linear polynomial
    (PA - PD - 2Q)x - (PA + PD - 2Q); irrational D gives the self-reciprocal
    quadratic N*x^2 + M*x + N with N = Q^2 - PQA + BP^2 and
    M = -(2Q^2 - 2PQA + P^2(A^2 - 2B)); a rational ratio with irrational D
    (only P = 0, ratio 1, or 2Q = PA, ratio -1) degenerates to x -+ 1.
    The height always satisfies H <= 2(|Q| + |P|(A + |D|)/2)^2 - 1.
    """
    _require_coeffs_nonzero(params)
    a1 = abs(params.A)
    B, P, Q = params.B, params.P, params.Q
    if params.A < 0:
        Q = -Q  # (A,B,P,Q) -> (-A,B,P,-Q) maps u_n to (-1)^n u_n
    disc = discriminant(a1, B)
    if P == 0:
        rh = RatioHeight((-1, 1), 1, True)
    elif disc.is_square:
        d = disc.sqrt
        c1 = P * a1 - P * d - 2 * Q
        c0 = -(P * a1 + P * d - 2 * Q)
        coeffs = _primitive([c0, c1])
        rh = RatioHeight(coeffs, max(abs(c) for c in coeffs), True)
    elif 2 * Q == P * a1:
        rh = RatioHeight((1, 1), 1, True)
    else:
        n_coef = Q * Q - P * Q * a1 + B * P * P
        m_coef = -(2 * Q * Q - 2 * P * Q * a1 + P * P * (a1 * a1 - 2 * B))
        coeffs = _primitive([n_coef, m_coef, n_coef])
        rh = RatioHeight(coeffs, max(abs(c) for c in coeffs), False)
    assert _height_bound_ok(a1, B, P, Q, rh.height), "height bound violated"
    return rh


def _height_bound_ok(a1: int, B: int, P: int, Q: int, h: int) -> bool:
    # H + 1 <= 2(|Q| + |P|(A+|D|)/2)^2, expanded over sqrt(|delta|)
    abs_delta = abs(a1 * a1 - 4 * B)
    x = Fraction(abs(Q)) + Fraction(abs(P) * a1, 2)
    y = Fraction(abs(P), 2)
    margin = QuadElem(2 * x * x + 2 * y * y * abs_delta - 1 - h, 4 * x * y, abs_delta)
    return margin.sign() >= 0


def ratio_value(params: SequenceParams) -> QuadElem:
    """b/a as an exact element of Q(sqrt(delta)), A sign-normalized.

    Only defined in the real case; requires a*b != 0.
    """
    _require_coeffs_nonzero(params)
    a1 = abs(params.A)
    B, P, Q = params.B, params.P, params.Q
    if params.A < 0:
        Q = -Q  # same flip as ratio_height
    delta = a1 * a1 - 4 * B
    if delta < 0:
        raise DegenerateInputError("ratio_value needs the real case")
    num = QuadElem(Fraction(2 * Q - P * a1, 2), Fraction(-P, 2), delta)  # Q - P*alpha
    den = num.conjugate()                                                # Q - P*beta
    return num / den


def height_sandwich_check(params: SequenceParams) -> bool:
    """Exact check of 1/(H+1) < |b/a| < H+1 (real case, a*b != 0)."""
    cls = classify(params)
    if cls.kind is Kind.NONREAL:
        raise DegenerateInputError(
            "non-real case: |b/a| = 1, the sandwich is trivial")
    rh = ratio_height(params)
    h1 = rh.height + 1
    if rh.linear:
        ratio = abs(Fraction(-rh.coeffs[0], rh.coeffs[1]))
        return Fraction(1, h1) < ratio < Fraction(h1)
    g = abs(ratio_value(params))
    return (g * h1 - 1).sign() > 0 and (h1 - g).sign() > 0
