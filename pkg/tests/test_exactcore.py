#!/usr/bin/env python
import operator
from fractions import Fraction

import pytest
import hypothesis.strategies as st
from hypothesis import given, settings
from sympy import integer_nthroot

from fermatlab.exactcore import gcd3, two_adic_split, int_nth_root, pow_big, is_perfect_square
from fermatlab.exactcore import ratio, ratio_is_integer, rational_root_search, TwoAdicForm
from fermatlab.utilities import FermatlabDomainError


def test_gcd3():
    assert gcd3(4, 6, 8) == 2
    assert gcd3(3, 4, 5) == 1
    assert gcd3(15, 25, 35) == 5


def test_gcd3_rejects_zero():
    with pytest.raises(FermatlabDomainError):
        gcd3(0, 4, 5)


def test_two_adic_split_examples():
    assert two_adic_split(40) == TwoAdicForm(k=3, d=5)
    assert two_adic_split(7) == TwoAdicForm(k=0, d=7)
    assert two_adic_split(1024) == TwoAdicForm(k=10, d=1)
    with pytest.raises(FermatlabDomainError):
        two_adic_split(0)


def test_two_adic_split_recomposes():
    for m in range(1, 10**5 + 1):
        form = two_adic_split(m)
        assert form.d % 2 == 1
        assert 2 ** form.k * form.d == m


def test_int_nth_root_examples():
    assert tuple(int_nth_root(27, 3)) == (3, True)
    assert tuple(int_nth_root(91, 3)) == (4, False)
    assert tuple(int_nth_root(728, 3)) == (8, False)
    with pytest.raises(FermatlabDomainError):
        int_nth_root(8, 0)


def test_int_nth_root_brackets():
    for n in range(1, 7):
        for s in range(1, 10**4 + 1):
            root, exact = int_nth_root(s, n)
            assert root ** n <= s < (root + 1) ** n
            assert exact == (root ** n == s)


@given(st.integers(min_value=1, max_value=10**60), st.integers(min_value=1, max_value=20))
def test_int_nth_root_matches_sympy(s, n):
    root, exact = int_nth_root(s, n)
    expected_root, expected_exact = integer_nthroot(s, n)
    assert root == expected_root
    assert exact == expected_exact


def test_pow_big():
    assert pow_big(2, 10) == 1024
    assert pow_big(9, 3) == 729
    assert pow_big(10, 20) == 10**20
    assert len(str(pow_big(10, 20))) == 21
    assert pow_big(0, 0) == 1
    assert pow_big(10**4, 20) == 10**80


def test_is_perfect_square():
    assert is_perfect_square(49)
    assert not is_perfect_square(50)
    assert is_perfect_square(9801)


def _cross_multiply(op, x, y):
    # (a/b) op (c/d) through numerators and denominators only
    a, b, c, d = x.numerator, x.denominator, y.numerator, y.denominator
    if op is operator.add:
        return a * d + c * b, b * d
    if op is operator.sub:
        return a * d - c * b, b * d
    if op is operator.mul:
        return a * c, b * d
    return a * d, b * c


@settings(max_examples=1000)
@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=10**6),
       st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=10**6),
       st.sampled_from([operator.add, operator.sub, operator.mul, operator.truediv]))
def test_ratio_arithmetic_against_cross_multiplication(p, q, r, s, op):
    x, y = ratio(p, q), ratio(r, s)
    result = op(x, y)
    num, den = _cross_multiply(op, x, y)
    # equal as fractions and canonical
    assert result.numerator * den == num * result.denominator
    assert Fraction(result.numerator, result.denominator) == result
    assert result.denominator > 0
    assert ratio_is_integer(result) == (num % den == 0)


def test_ratio_power_and_normalization():
    assert ratio(6, 4) == ratio(3, 2)
    assert ratio(6, 4).denominator == 2
    assert ratio(2, 3) ** 3 == ratio(8, 27)
    assert ratio_is_integer(ratio(9, 3))
    assert not ratio_is_integer(ratio(83, 9))
    with pytest.raises(FermatlabDomainError):
        ratio(1, 0)


def test_rational_root_search():
    assert rational_root_search(27, 3, 10) == 3
    assert rational_root_search(91, 3, 50) is None
    assert rational_root_search(Fraction(8, 27), 3, 5) == Fraction(2, 3)
    assert rational_root_search(Fraction(8, 27), 3, 2) is None
