"""Rational functions in s: assembly from terms, reduction, poles."""

import random
from fractions import Fraction

import pytest

from topzeta.poly import UniPoly
from topzeta.ratfunc import RationalFunctionS, poles_of, rf_sum_of_terms


def test_sum_golden():
    rf = rf_sum_of_terms([
        (1, [(4, 7)]),
        (1, [(3, 6), (4, 7)]),
        (1, [(2, 5), (3, 6)]),
        (1, [(1, 1), (2, 5)]),
    ])
    assert rf.num == UniPoly([8, 16, 5])
    assert rf.den == (((2, 5), 1), ((4, 7), 1), ((1, 1), 1))


def test_sum_single_vertex():
    rf = rf_sum_of_terms([(2, [(2, 1)])])
    assert rf.num == UniPoly([2])
    assert rf.den == (((2, 1), 1),)


def test_sum_empty_is_zero():
    assert rf_sum_of_terms([]).is_zero()


def test_sum_constant_factor_folds():
    # N = 0 factors are plain constants
    rf = rf_sum_of_terms([(6, [(3, 0), (1, 1)])])
    assert rf.num == UniPoly([2])
    assert rf.den == (((1, 1), 1),)


def test_sum_matches_pointwise_evaluation():
    cases = [
        [(1, [(4, 7)]), (1, [(3, 6), (4, 7)]), (1, [(2, 5), (3, 6)]),
         (1, [(1, 1), (2, 5)])],
        [(2, [(2, 1)])],
        [(1, [(1, 2), (1, 2)]), (-1, [(1, 2)])],
        [(3, [(5, 4), (2, 3)]), (-2, [(2, 3)]), (7, [(5, 4)])],
    ]
    rng = random.Random(7)
    for terms in cases:
        rf = rf_sum_of_terms(terms)
        for _ in range(10):
            s = Fraction(rng.randint(-40, 40), rng.randint(1, 17))
            if any(nu + N * s == 0 for _, fs in terms for nu, N in fs):
                continue
            direct = sum(
                (Fraction(c) / _prod(fs, s) for c, fs in terms),
                Fraction(0),
            )
            assert rf.eval_at(s) == direct


def _prod(factors, s):
    out = Fraction(1)
    for nu, N in factors:
        out *= nu + N * s
    return out


def test_reduction_cancels_linear_factor():
    # (3+6s) cancels against the numerator in the golden sum
    rf = rf_sum_of_terms([
        (1, [(4, 7)]),
        (1, [(3, 6), (4, 7)]),
        (1, [(2, 5), (3, 6)]),
        (1, [(1, 1), (2, 5)]),
    ])
    assert all(f != (1, 2) for f, _ in rf.den)
    assert rf.num.eval(Fraction(-1, 2)) != 0


def test_poles_golden():
    rf = rf_sum_of_terms([
        (1, [(4, 7)]),
        (1, [(3, 6), (4, 7)]),
        (1, [(2, 5), (3, 6)]),
        (1, [(1, 1), (2, 5)]),
    ])
    ps = poles_of(rf)
    assert [(p.location, p.order) for p in ps] == [
        (Fraction(-1), 1), (Fraction(-4, 7), 1), (Fraction(-2, 5), 1)]
    by_loc = {p.location: p.leading_coefficient for p in ps}
    assert by_loc[Fraction(-1)] == Fraction(-1, 3)
    assert by_loc[Fraction(-2, 5)] == Fraction(2, 3)
    assert by_loc[Fraction(-4, 7)] == Fraction(-4, 21)


def test_poles_simple_readoff():
    rf = rf_sum_of_terms([(2, [(2, 1)])])
    (p,) = poles_of(rf)
    assert (p.location, p.order, p.leading_coefficient) == (Fraction(-2), 1,
                                                            Fraction(2))


def test_pole_order_two():
    rf = RationalFunctionS.build(UniPoly([1]), {(1, 1): 2})
    (p,) = poles_of(rf)
    assert (p.location, p.order) == (Fraction(-1), 2)
    assert p.leading_coefficient == Fraction(1)


def test_poles_are_roots_of_reduced_denominator():
    rf = rf_sum_of_terms([(1, [(1, 2), (3, 4)]), (5, [(3, 4)])])
    for p in poles_of(rf):
        assert rf.num.eval(p.location) != 0


def test_canonical_order_and_str():
    rf = rf_sum_of_terms([
        (1, [(4, 7)]),
        (1, [(3, 6), (4, 7)]),
        (1, [(2, 5), (3, 6)]),
        (1, [(1, 1), (2, 5)]),
    ])
    assert str(rf) == "(5*s^2 + 16*s + 8)/((2+5s)(4+7s)(1+s))"
    # ratios nu/N ascend: 2/5 < 4/7 < 1
    ratios = [Fraction(nu, N) for (nu, N), _ in rf.den]
    assert ratios == sorted(ratios)


def test_term_validation():
    with pytest.raises(ValueError):
        rf_sum_of_terms([(1, [(1, 1), (1, 1), (1, 1)])])
    with pytest.raises(ValueError):
        rf_sum_of_terms([(1, [(0, 0)])])
