#!/usr/bin/env python

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from fermatlab.exactcore import Natural, Ratio, int_nth_root
from fermatlab.utilities import FermatlabDomainError


class ParityProfile(Enum):
    OneEven = 'OneEven'
    AllOdd = 'AllOdd'
    TwoEven = 'TwoEven'
    AllEven = 'AllEven'


class RootKind(Enum):
    IntegerValue = 'IntegerValue'
    Irrational = 'Irrational'
    # no Fractional member, an integer polynomial x^n - s has no rational non-integer root


@dataclass(frozen=True)
class RealnessVerdict:
    kind: RootKind
    value: Optional[Natural] = None

    @property
    def is_integer(self):
        return self.kind == RootKind.IntegerValue

    def __str__(self):
        if self.is_integer:
            return f'IntegerValue({self.value})'
        return 'Irrational'


@dataclass(frozen=True)
class RealPowerForm:
    """2^k * d rewritten as 2^h; ``h`` is for reporting, integrality is decided from d.

    ``value`` is inf past the float range, ``exact_source`` always holds the integer.
    """
    value: float
    h: float
    exact_source: Optional[Ratio]
    h_is_integer: bool


_PROFILES = {0: ParityProfile.AllOdd, 1: ParityProfile.OneEven, 2: ParityProfile.TwoEven, 3: ParityProfile.AllEven}


def parity_profile(t):
    return _PROFILES[sum(1 for value in t if value % 2 == 0)]


def parity_consistent(t, n):
    """True iff a^n + b^n and c^n have the same parity."""
    if n < 1:
        raise FermatlabDomainError(f'n must be at least 1, got {n}')
    a, b, c = t
    return (pow(a, n, 2) + pow(b, n, 2)) % 2 == pow(c, n, 2)


def _verdict(s, n):
    root, exact = int_nth_root(s, n)
    if exact:
        return RealnessVerdict(RootKind.IntegerValue, root)
    return RealnessVerdict(RootKind.Irrational)


def root_verdict(a, b, n):
    """Decides whether c = (a^n + b^n)^(1/n) is a positive integer or irrational."""
    if a < 1 or b < 1:
        raise FermatlabDomainError(f'a and b must be positive, got a={a}, b={b}')
    if n < 2:
        raise FermatlabDomainError(f'n must be at least 2, got {n}')
    return _verdict(a ** n + b ** n, n)


def third_element_verdict(a, c, n):
    """Same decision for the missing addend b = (c^n - a^n)^(1/n), given integers a < c."""
    if a < 1 or c <= a:
        raise FermatlabDomainError(f'1 <= a < c required, got a={a}, c={c}')
    if n < 2:
        raise FermatlabDomainError(f'n must be at least 2, got {n}')
    return _verdict(c ** n - a ** n, n)


def two_adic_as_power_of_two(k, d):
    if d < 1 or d % 2 == 0:
        raise FermatlabDomainError(f'd must be odd and positive, got {d}')
    if k < 0:
        raise FermatlabDomainError(f'k must be nonnegative, got {k}')
    try:
        value = math.ldexp(d, k)
    except OverflowError:
        value = math.inf
    return RealPowerForm(value=value, h=k + math.log2(d), exact_source=Fraction(d << k), h_is_integer=d == 1)
