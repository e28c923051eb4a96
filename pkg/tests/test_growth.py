from fractions import Fraction

import pytest
from brigkit import SequenceParams, classify
from brigkit.core import DegenerateInputError, Kind
from brigkit.growth import (BranchKind, GrowthCase, check_lucas_growth,
                            check_nonreal_growth, check_real_growth,
                            check_sharp_growth, empirical_nonreal_threshold,
                            height_sandwich_check, nonreal_threshold_formula,
                            ratio_height, ratio_value, real_case_branch)

from conftest import interval_sign, iter_terms


# -- branch decision ----------------------------------------------------------

def test_branch_examples():
    br = real_case_branch(SequenceParams(10, 1, 1, 1))
    assert (br.kind, br.case) == (BranchKind.NEAR, GrowthCase.NEAR_WIDE)
    br = real_case_branch(SequenceParams(3, -100, 1, 1))
    assert (br.kind, br.case) == (BranchKind.FAR, GrowthCase.FAR_NEG)
    br = real_case_branch(SequenceParams(100, 1, 1, 1))
    assert br.kind is BranchKind.NEAR
    br = real_case_branch(SequenceParams(7, 12, 1, 1))   # roots 4 and 3
    assert (br.kind, br.case) == (BranchKind.FAR, GrowthCase.FAR_POS)
    assert br.n_min == 12                                 # ceil(6*1 + 6)
    br = real_case_branch(SequenceParams(1, -1, 1, 8))    # A+D < 9*8
    assert br.case is GrowthCase.NEAR_TIGHT


def test_branch_thresholds():
    # near threshold: ceil((18 + 7 ln 3) * 3) = 78
    br = real_case_branch(SequenceParams(3, 2, 1, 3))
    assert (br.case, br.n_min) == (GrowthCase.NEAR_TIGHT, 78)
    # far threshold with |Q/P| = 2: ceil(18) = 18
    br = real_case_branch(SequenceParams(13, 42, 1, 2))   # roots 7, 6
    assert (br.case, br.n_min) == (GrowthCase.FAR_POS, 18)


def test_branch_rejects_degenerate_and_zero_pq():
    with pytest.raises(DegenerateInputError):
        real_case_branch(SequenceParams(3, 6, 5, 6))      # non-real
    with pytest.raises(DegenerateInputError):
        real_case_branch(SequenceParams(3, 2, 0, 1))      # P = 0
    with pytest.raises(DegenerateInputError):
        real_case_branch(SequenceParams(3, 2, 1, 1))      # a = 0 (degenerate)
    with pytest.raises(DegenerateInputError):
        real_case_branch(SequenceParams(3, 2, 1, 2))      # b = 0 (degenerate)


# -- real-case growth ---------------------------------------------------------

def test_real_growth_below_threshold_not_applicable():
    rep = check_real_growth(SequenceParams(3, 2, 1, 3), 50)
    assert not rep.applicable and rep.bound_holds is None
    assert rep.threshold == 78


def test_real_growth_holds_on_corrected_example():
    # u_n = 2^(n+1) - 1 for (3, 2, 1, 3)
    rep = check_real_growth(SequenceParams(3, 2, 1, 3), 100)
    assert rep.applicable and rep.bound_holds
    assert rep.regime == "real-near"
    assert all(m.sign >= 0 for m in rep.margins)


def test_real_growth_far_branch():
    rep = check_real_growth(SequenceParams(7, 12, 1, 1), 12)
    assert rep.applicable and rep.bound_holds and rep.regime == "real-far"


def test_real_growth_negative_a_flip():
    # |u_n| is invariant under (A,B,P,Q) -> (-A,B,P,-Q)
    r1 = check_real_growth(SequenceParams(7, 12, 1, 1), 15)
    r2 = check_real_growth(SequenceParams(-7, 12, 1, -1), 15)
    assert r1.bound_holds == r2.bound_holds == True
    assert r1.regime == r2.regime == "real-far"


def test_real_growth_sweep_small_grid():
    for a in range(1, 9):
        for b in range(-8, 9):
            for p, q in [(1, 1), (2, -3), (-1, 4), (3, 2)]:
                params = SequenceParams(a, b, p, q)
                if classify(params).is_degenerate:
                    continue
                if classify(params).kind is not Kind.REAL:
                    continue
                br = real_case_branch(params)
                for n in range(br.n_min, min(br.n_min + 12, 160)):
                    rep = check_real_growth(params, n)
                    assert rep.applicable and rep.bound_holds, (params, n)


# -- sharp per-case bounds ----------------------------------------------------

def test_sharp_far_positive():
    rep = check_sharp_growth(SequenceParams(7, 12, 1, 1), 9)
    assert rep.regime == "sharp-far-positive" and rep.bound_holds
    rep = check_sharp_growth(SequenceParams(7, 12, 1, 1), 6)
    assert not rep.applicable


def test_sharp_far_negative_parity():
    params = SequenceParams(3, -100, 1, 1)
    even = check_sharp_growth(params, 14)
    odd = check_sharp_growth(params, 15)
    assert even.regime == "sharp-far-negative-even" and even.bound_holds
    assert odd.regime == "sharp-far-negative-odd" and odd.bound_holds
    # odd case below its own threshold n >= 6|Q/P| + 3 = 9
    assert not check_sharp_growth(params, 7).applicable


def test_sharp_near_cases():
    wide = SequenceParams(10, 1, 1, 1)       # near-wide, threshold n > 12
    rep = check_sharp_growth(wide, 20)
    assert rep.regime == "sharp-near-wide" and rep.bound_holds
    assert not check_sharp_growth(wide, 12).applicable   # needs n > 12
    assert check_sharp_growth(wide, 13).applicable
    tight = SequenceParams(3, 2, 1, 3)
    rep = check_sharp_growth(tight, 100)
    assert rep.regime == "sharp-near-tight" and rep.bound_holds
    assert not check_sharp_growth(tight, 77).applicable


def test_sharp_sweep_consistent_with_general():
    for a, b in [(7, 12), (3, -100), (10, 1), (3, 2), (5, -2)]:
        for p, q in [(1, 1), (1, 3), (2, -5)]:
            params = SequenceParams(a, b, p, q)
            if classify(params).is_degenerate:
                continue
            for n in range(2, 90):
                rep = check_sharp_growth(params, n)
                if rep.applicable:
                    assert rep.bound_holds, (params, n, rep.regime)


# -- non-real case ------------------------------------------------------------

def test_nonreal_examples():
    params = SequenceParams(1, 2, 1, 1)
    # u: 1, 1, -1, -3, -1, 5, 7, -3
    assert iter_terms(1, 2, 1, 1, 7) == [1, 1, -1, -3, -1, 5, 7, -3]
    assert check_nonreal_growth(params, 7).bound_holds is False   # 27 < 128
    assert check_nonreal_growth(params, 5).bound_holds is True    # 125 >= 32
    assert check_nonreal_growth(params, 0).bound_holds is True    # |P|^3 >= 1


def test_nonreal_threshold_scan():
    params = SequenceParams(1, 2, 1, 1)
    t = empirical_nonreal_threshold(params, 500)
    assert t == 26
    # every n from the threshold up satisfies the cube bound
    seq = iter_terms(1, 2, 1, 1, 500)
    for n in range(t, 501):
        assert abs(seq[n]) ** 3 >= 2 ** n
    assert abs(seq[t - 1]) ** 3 < 2 ** (t - 1)


def test_nonreal_formula_threshold():
    params = SequenceParams(3, 6, 5, 6)
    v = nonreal_threshold_formula(params, Fraction(50))
    assert v >= 1
    assert nonreal_threshold_formula(params, Fraction(100)) >= v
    with pytest.raises(DegenerateInputError):
        nonreal_threshold_formula(SequenceParams(3, 2, 1, 3))


def test_nonreal_rejects_real():
    with pytest.raises(DegenerateInputError):
        check_nonreal_growth(SequenceParams(3, 2, 1, 3), 5)


# -- Lucas growth -------------------------------------------------------------

def test_lucas_growth_examples():
    # 2*F_10 = 110 >= phi^8
    assert check_lucas_growth(1, -1, 10).bound_holds
    # U_5(3,2) = 31 >= 2^4 = 16 (the positive-B clause holds)
    assert check_lucas_growth(3, 2, 5).bound_holds
    # n = 2 with B < 0: 2|A| >= alpha^0 = 1
    assert check_lucas_growth(1, -1, 2).bound_holds
    with pytest.raises(ValueError):
        check_lucas_growth(1, -1, 1)
    with pytest.raises(DegenerateInputError):
        check_lucas_growth(2, 2, 5)     # degenerate pair


def test_lucas_growth_sweeps():
    for a in range(1, 11):
        for b in range(-10, 11):
            pair = SequenceParams(a, b, 0, 1)
            if b == 0 or classify(pair).is_degenerate:
                continue
            if a * a <= 4 * b:
                continue
            for n in range(2, 60):
                assert check_lucas_growth(a, b, n).bound_holds, (a, b, n)


def test_lucas_growth_nonreal_conservative():
    with pytest.raises(DegenerateInputError):
        check_lucas_growth(1, 2, 10)            # needs explicit constant
    rep = check_lucas_growth(1, 2, 10, Fraction(100))
    assert rep.regime == "lucas-nonreal"
    assert rep.bound_holds        # slack 100*(ln 10)^2 > 10: exponent clamps to 0


# -- heights ------------------------------------------------------------------

def test_ratio_height_quadratic_example():
    rh = ratio_height(SequenceParams(1, -1, 1, 1))
    assert rh.coeffs == (1, 3, 1) and rh.height == 3 and not rh.linear


def test_ratio_height_rational_cases():
    rh = ratio_height(SequenceParams(3, -5, 0, 1))
    assert rh.coeffs == (-1, 1) and rh.height == 1 and rh.linear
    # 2Q = PA with irrational D: ratio -1
    rh = ratio_height(SequenceParams(4, 1, 1, 2))
    assert rh.coeffs == (1, 1) and rh.height == 1 and rh.linear


def test_ratio_height_linear_integer_roots():
    # (3, 2, 7, 6): roots 2, 1; b/a = (6-14)/(6-7) = 8
    rh = ratio_height(SequenceParams(3, 2, 7, 6))
    assert rh.linear
    c0, c1 = rh.coeffs
    assert Fraction(-c0, c1) == 8
    assert rh.height == max(abs(c0), abs(c1))


def test_ratio_height_rejects_degenerate():
    for params in [SequenceParams(2, 1, 1, 1),    # equal roots
                   SequenceParams(3, 0, 1, 1),    # B = 0
                   SequenceParams(3, 2, 1, 2),    # b = 0
                   SequenceParams(0, 0, 0, 0)]:
        with pytest.raises(DegenerateInputError):
            ratio_height(params)


def test_ratio_value_matches_polynomial():
    params = SequenceParams(1, -1, 1, 1)
    g = ratio_value(params)
    c0, c1, c2 = ratio_height(params).coeffs
    # plug the exact root back into the polynomial
    value = (g * g) * c2 + g * c1 + c0
    assert value.sign() == 0 and value.r == 0 and value.s == 0


def test_sandwich_examples():
    assert height_sandwich_check(SequenceParams(1, -1, 1, 1))
    assert height_sandwich_check(SequenceParams(3, -5, 0, 1))      # ratio 1
    assert height_sandwich_check(SequenceParams(3, 2, 7, 6))
    with pytest.raises(DegenerateInputError):
        height_sandwich_check(SequenceParams(3, 6, 5, 6))          # non-real


def test_sandwich_and_bound_sweep():
    for a in range(-8, 9):
        for b in range(-8, 9):
            for p, q in [(1, 1), (0, 1), (2, -3), (-1, 2), (3, 4)]:
                params = SequenceParams(a, b, p, q)
                try:
                    rh = ratio_height(params)   # internal bound assert runs
                except DegenerateInputError:
                    continue
                if not rh.linear:
                    assert rh.coeffs[0] == rh.coeffs[2]   # self-reciprocal
                if classify(params).kind is Kind.REAL:
                    assert height_sandwich_check(params), params


def test_sandwich_against_interval_oracle():
    for params in [SequenceParams(1, -1, 1, 1), SequenceParams(5, 3, 2, -7),
                   SequenceParams(9, -4, 3, 1)]:
        g = ratio_value(params)
        s = interval_sign(g.r, g.s, g.delta)
        assert s is not None and s == g.sign()
        h1 = ratio_height(params).height + 1
        ag = abs(g)
        assert float(Fraction(1, h1)) < float(ag.r) + float(ag.s) * (ag.delta ** 0.5) < h1


def test_margin_certificates_against_interval_oracle():
    """Every margin re-evaluates to the reported sign under >256-bit
    directed-rounding interval arithmetic."""
    from brigkit.exactnum import QuadElem
    reports = [check_real_growth(SequenceParams(7, 12, 1, 1), 15),
               check_real_growth(SequenceParams(3, 2, 1, 3), 90),
               check_real_growth(SequenceParams(3, -100, 1, 1), 14),
               check_sharp_growth(SequenceParams(3, -100, 1, 1), 15),
               check_sharp_growth(SequenceParams(10, 1, 1, 1), 20),
               check_nonreal_growth(SequenceParams(1, 2, 1, 1), 7)]
    margins = 0
    for rep in reports:
        assert rep.applicable
        for m in rep.margins:
            if isinstance(m.value, QuadElem):
                s = interval_sign(m.value.r, m.value.s, m.value.delta)
                assert s is not None and s == m.sign
            else:
                assert ((m.value > 0) - (m.value < 0)) == m.sign
            margins += 1
    assert margins == 12


def test_sharp_far_negative_with_square_discriminant():
    # (3, -4): integer roots 4 and -1, D = 5, D - A = 2 >= 6*(1/3)
    params = SequenceParams(3, -4, 3, 1)
    br = real_case_branch(params)
    assert br.case is GrowthCase.FAR_NEG
    even = check_sharp_growth(params, 14)
    assert even.applicable and even.bound_holds
    odd = check_sharp_growth(params, 15)
    assert odd.applicable and odd.bound_holds


def test_cube_bound_dominates_five_fourths():
    # B^(n/3) >= 1.25^n for every B >= 2 because (5/4)^3 < 2
    assert Fraction(5, 4) ** 3 < 2


def test_sharp_bounds_broad_deterministic_sweep():
    """Every applicable per-case sharp bound holds on a dense small grid."""
    checked = 0
    for a in range(1, 9):
        for b in range(-8, 9):
            if b == 0 or a * a <= 4 * b:
                continue
            for p, q in [(1, 1), (1, -2), (2, 3), (-1, 1), (3, -1), (2, -5)]:
                params = SequenceParams(a, b, p, q)
                if classify(params).is_degenerate:
                    continue
                for n in range(2, 51):
                    rep = check_sharp_growth(params, n)
                    if rep.applicable:
                        assert rep.bound_holds, (params, n, rep.regime)
                        checked += 1
    assert checked > 5000
