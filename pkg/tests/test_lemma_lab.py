#!/usr/bin/env python
import math
from fractions import Fraction

import numpy as np
import pytest
import hypothesis.strategies as st
from hypothesis import given, settings

from fermatlab.exactcore import int_nth_root, rational_root_search
from fermatlab.triples import FermatTriple, FormVariant, PythParam, pyth_from_param
from fermatlab.lemma_lab import ParityProfile, RootKind, Eq12Branch
from fermatlab.lemma_lab import parity_profile, parity_consistent, root_verdict, third_element_verdict
from fermatlab.lemma_lab import two_adic_as_power_of_two, eq12_evaluate, eq12_case, pq_dominance, min_gap_holds
from fermatlab.lemma_lab import frac_reduction_quotient, frac_reduction_check, even_power_sum_residue
from fermatlab.utilities import FermatlabDomainError


odd_numbers = st.integers(min_value=0, max_value=49).map(lambda i: 2 * i + 1)


def test_parity_profile():
    assert parity_profile(FermatTriple(4, 3, 5)) == ParityProfile.OneEven
    assert parity_profile((7, 5, 9)) == ParityProfile.AllOdd
    assert parity_profile((8, 6, 11)) == ParityProfile.TwoEven
    assert parity_profile((8, 6, 10)) == ParityProfile.AllEven


def test_parity_consistent():
    assert parity_consistent(FermatTriple(4, 3, 5), 3)
    assert not parity_consistent(FermatTriple(7, 5, 9), 3)


def test_parity_consistent_iff_one_even():
    for c in range(2, 101):
        for a in range(1, c):
            for b in range(1, a + 1):
                if math.gcd(math.gcd(a, b), c) != 1:
                    continue
                one_even = parity_profile((a, b, c)) == ParityProfile.OneEven
                for n in range(3, 7):
                    assert parity_consistent((a, b, c), n) == one_even


def test_root_verdict():
    verdict = root_verdict(3, 4, 2)
    assert verdict.kind == RootKind.IntegerValue and verdict.value == 5
    assert root_verdict(1, 1, 3).kind == RootKind.Irrational
    assert root_verdict(6, 8, 3).kind == RootKind.Irrational
    assert str(root_verdict(3, 4, 2)) == 'IntegerValue(5)'
    with pytest.raises(FermatlabDomainError):
        root_verdict(3, 4, 1)


def test_root_verdict_never_fractional():
    rng = np.random.default_rng(42)
    for _ in range(1000):
        a, b = (int(x) for x in rng.integers(1, 101, size=2))
        n = int(rng.integers(3, 7))
        verdict = root_verdict(a, b, n)
        if not verdict.is_integer:
            assert not int_nth_root(a ** n + b ** n, n).exact
            assert rational_root_search(a ** n + b ** n, n, 50) is None


def test_third_element_verdict():
    verdict = third_element_verdict(4, 5, 2)
    assert verdict.is_integer and verdict.value == 3
    assert not third_element_verdict(8, 9, 3).is_integer
    with pytest.raises(FermatlabDomainError):
        third_element_verdict(5, 5, 3)


def test_two_adic_as_power_of_two():
    form = two_adic_as_power_of_two(3, 1)
    assert form.h == 3.0 and form.h_is_integer
    form = two_adic_as_power_of_two(2, 3)
    assert form.h == pytest.approx(3.5849625007, rel=1e-10)
    assert not form.h_is_integer
    assert form.exact_source == 12
    form = two_adic_as_power_of_two(0, 5)
    assert form.h == pytest.approx(2.3219280949, rel=1e-10)
    with pytest.raises(FermatlabDomainError):
        two_adic_as_power_of_two(1, 4)


def test_two_adic_as_power_of_two_beyond_float_range():
    form = two_adic_as_power_of_two(1100, 3)
    assert form.value == math.inf
    assert form.exact_source == 3 << 1100
    assert form.h == pytest.approx(1100 + math.log2(3), rel=1e-12)
    assert not form.h_is_integer
    form = two_adic_as_power_of_two(1100, 1)
    assert form.h == 1100.0 and form.h_is_integer


def test_two_adic_power_reproduces_value():
    for k in range(0, 41):
        for d in range(1, 200, 2):
            form = two_adic_as_power_of_two(k, d)
            assert math.isclose(2.0 ** form.h, form.value, rel_tol=1e-12)
            assert form.h_is_integer == (d == 1)


def test_eq12_evaluate():
    assert eq12_evaluate(4, 1) == 5
    assert eq12_evaluate(4, 2) == 5
    value = eq12_evaluate(3, 3)
    assert value == Fraction(83, 9) and value.denominator != 1


def test_eq12_reproduces_hypotenuse():
    # primitive parameters with 2pq a power of two are q = 1, p = 2^(e-1)
    for e in range(2, 21):
        pp = PythParam(2 ** (e - 1), 1)
        leg1, leg2, hyp = pyth_from_param(pp)
        assert leg2 == 2 ** e
        assert eq12_evaluate(2 * e, pp.q) == hyp == pp.p ** 2 + pp.q ** 2
        assert pq_dominance(pp, 2 * e)


def test_eq12_case_branches():
    case = eq12_case(4, 2)
    assert case.branch == Eq12Branch.QEvenEqual and case.value == 5
    case = eq12_case(8, 8)
    assert case.branch == Eq12Branch.QEvenEqual and case.value == 65
    case = eq12_case(10, 2)
    assert case.branch == Eq12Branch.QEvenDivides and case.integral and case.even
    case = eq12_case(5, 4)
    assert case.branch == Eq12Branch.QEvenNotDivides and not case.integral and case.even is None
    case = eq12_case(6, 1)
    assert case.branch == Eq12Branch.QOne and case.value == 17 and not case.even
    case = eq12_case(3, 3)
    assert case.branch == Eq12Branch.QOddGreater and not case.integral


def test_pq_dominance():
    assert pq_dominance(PythParam(2, 1), 4)
    assert pq_dominance(PythParam(4, 2), 8)
    assert pq_dominance(PythParam(8, 4), 12)
    with pytest.raises(FermatlabDomainError):
        pq_dominance(PythParam(3, 1), 4)
    with pytest.raises(FermatlabDomainError):
        pq_dominance(PythParam(2, 1), 5)


def test_min_gap_holds():
    assert min_gap_holds(3, 5, 2)
    assert min_gap_holds(1, 3, 2)
    for c in range(3, 100, 2):
        for a in range(1, c, 2):
            for m in range(2, 7):
                assert min_gap_holds(a, c, m)
    with pytest.raises(FermatlabDomainError):
        min_gap_holds(2, 5, 2)
    with pytest.raises(FermatlabDomainError):
        min_gap_holds(5, 3, 2)


def test_frac_reduction_examples():
    assert frac_reduction_check(3, 5, 3)
    quotient = frac_reduction_quotient(3, 3)
    assert frac_reduction_check(3, 3, 3) and quotient.equal and quotient.value == 3 and quotient.odd
    quotient = frac_reduction_quotient(9, 3)
    assert frac_reduction_check(9, 3, 5) and quotient.divides and quotient.value == 1
    assert not frac_reduction_quotient(3, 5).divides
    with pytest.raises(FermatlabDomainError):
        frac_reduction_check(4, 5, 3)
    with pytest.raises(FermatlabDomainError):
        frac_reduction_check(3, 5, 4)


@settings(max_examples=1000)
@given(odd_numbers, odd_numbers, st.sampled_from([3, 5, 7]))
def test_frac_reduction_identities(a, b, n):
    assert frac_reduction_check(a, b, n)
    if a < b:
        assert frac_reduction_check(a, b, n, form=FormVariant.FormB_even)
        assert frac_reduction_check(a, b, n, form=FormVariant.FormA_even)


def test_even_power_sum_residue():
    for a in range(1, 100, 2):
        for b in range(1, 100, 2):
            for n in range(2, 13, 2):
                assert even_power_sum_residue(a, b, n) == 2
    with pytest.raises(FermatlabDomainError):
        even_power_sum_residue(3, 5, 3)
