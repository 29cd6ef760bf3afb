#!/usr/bin/env python

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from fermatlab.exactcore import Natural, Ratio
from fermatlab.triples import FormVariant, PythParam
from fermatlab.utilities import FermatlabDomainError


class Eq12Branch(Enum):
    QEvenEqual = 'q even, q^2 = 2^(kn-2)'
    QEvenDivides = 'q even, q^2 | 2^(kn-2)'
    QEvenNotDivides = 'q even, q^2 does not divide 2^(kn-2)'
    QOne = 'q = 1'
    QOddGreater = 'q odd, q > 1'


@dataclass(frozen=True)
class Eq12Case:
    branch: Eq12Branch
    value: Ratio
    integral: bool
    even: Optional[bool]  # None when the value is fractional


@dataclass(frozen=True)
class FracQuotient:
    """The quotient b^2/a with the flags that select a branch of the fractional reduction."""
    value: Ratio
    equal: bool
    divides: bool
    odd: bool


def eq12_evaluate(k_times_n, q):
    """Exact value of 2^(kn-2)/q^2 + q^2, the hypotenuse c^(n/2) once p is eliminated."""
    if k_times_n < 2:
        raise FermatlabDomainError(f'kn must be at least 2, got {k_times_n}')
    if q < 1:
        raise FermatlabDomainError(f'q must be positive, got {q}')
    return Fraction(2 ** (k_times_n - 2), q * q) + q * q


def eq12_case(k_times_n, q):
    value = eq12_evaluate(k_times_n, q)
    power = 2 ** (k_times_n - 2)
    q_sq = q * q
    if q % 2 == 0:
        if q_sq == power:
            branch = Eq12Branch.QEvenEqual
        elif power % q_sq == 0:
            branch = Eq12Branch.QEvenDivides
        else:
            branch = Eq12Branch.QEvenNotDivides
    elif q == 1:
        branch = Eq12Branch.QOne
    else:
        branch = Eq12Branch.QOddGreater
    integral = value.denominator == 1
    return Eq12Case(branch=branch, value=value, integral=integral,
                    even=value.numerator % 2 == 0 if integral else None)


def pq_dominance(pp, k_times_n):
    """True iff 2^(kn-2) > q^2 for a parameter pair whose even leg 2pq equals 2^(kn/2)."""
    if not isinstance(pp, PythParam):
        pp = PythParam(*pp)
    if k_times_n < 2 or k_times_n % 2 == 1:
        raise FermatlabDomainError(f'kn must be even and at least 2, got {k_times_n}')
    if 2 * pp.p * pp.q != 2 ** (k_times_n // 2):
        raise FermatlabDomainError(f'2pq = {2 * pp.p * pp.q} is not 2^(kn/2) = {2 ** (k_times_n // 2)}')
    return 2 ** (k_times_n - 2) > pp.q ** 2


def min_gap_holds(a, c, m):
    if a % 2 == 0 or c % 2 == 0:
        raise FermatlabDomainError(f'a and c must be odd, got a={a}, c={c}')
    if not 1 <= a < c:
        raise FermatlabDomainError(f'1 <= a < c required, got a={a}, c={c}')
    if m < 2:
        raise FermatlabDomainError(f'm must be at least 2, got {m}')
    return c ** m - a ** m > 2


def frac_reduction_quotient(a, b):
    value = Fraction(b * b, a)
    return FracQuotient(value=value, equal=a == b, divides=value.denominator == 1,
                        odd=value.denominator == 1 and value.numerator % 2 == 1)


def _check_odd(n, *values):
    for value in values:
        if value < 1 or value % 2 == 0:
            raise FermatlabDomainError(f'inputs must be odd positive integers, got {value}')
    if n < 3 or n % 2 == 0:
        raise FermatlabDomainError(f'n must be odd and at least 3, got {n}')


def frac_reduction_check(x, y, n, form=FormVariant.FormC_even):
    """Verifies the fractional rewriting of an equation with two odd perfect squares, in exact arithmetic.

    Parameters
    ----------
    x, y : int
        odd square roots of the two odd elements: (a, b) for ``FormC_even``, (a, c) for ``FormB_even`` and
        (b, c) for ``FormA_even``.
    n : int
        odd exponent, at least 3.
    form : FormVariant
        which element of the equation is the even one.

    Returns
    -------
    holds : bool
        True when every identity of the chosen form holds. They are algebraic identities, so False means a bug.
    """
    _check_odd(n, x, y)
    if form == FormVariant.FormC_even:
        a, b = x, y
        # (2^k d)^n = a^(2n) + b^(2n), divided through by a^n
        lhs = Fraction(a ** (2 * n) + b ** (2 * n), a ** n)
        quotient = Fraction(b * b, a)
        reduced = lhs == a ** n + quotient ** n
        rearranged = lhs - quotient ** n + b ** n == a ** n + b ** n
        return reduced and rearranged

    if x >= y:
        raise FermatlabDomainError(f'the odd addend must be smaller than c, got {x} and {y}')
    odd, c = x, y
    # the even element's n-th power is known exactly without taking its root
    even_power = Fraction(c ** (2 * n) - odd ** (2 * n), odd ** n)
    if form == FormVariant.FormB_even:
        return Fraction(c * c, odd) ** n == odd ** n + even_power
    if form == FormVariant.FormA_even:
        return Fraction(c * c, odd) ** n == even_power + odd ** n
    raise FermatlabDomainError(f'unknown form {form!r}')


def even_power_sum_residue(a, b, n):
    """a^n + b^n mod 4 for odd a, b and even n, always 2, so the sum is never 2^(kn) with kn >= 2."""
    if a % 2 == 0 or b % 2 == 0:
        raise FermatlabDomainError(f'a and b must be odd, got a={a}, b={b}')
    if n < 2 or n % 2 == 1:
        raise FermatlabDomainError(f'n must be even and at least 2, got {n}')
    return (pow(a, n, 4) + pow(b, n, 4)) % 4
