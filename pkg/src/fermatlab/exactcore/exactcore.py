#!/usr/bin/env python

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from fermatlab.utilities import FermatlabDomainError

# python ints are unbounded, every value below is exact at any magnitude
Natural = int
Ratio = Fraction


@dataclass(frozen=True)
class TwoAdicForm:
    """A positive integer written as 2**k * d with d odd."""
    k: Natural
    d: Natural

    def __post_init__(self):
        if self.k < 0 or self.d < 1 or self.d % 2 == 0:
            raise FermatlabDomainError(f'invalid 2-adic form (k={self.k}, d={self.d}), d must be odd and positive')

    @property
    def value(self):
        return self.d << self.k


@dataclass(frozen=True)
class NthRoot:
    root: Natural
    exact: bool

    def __iter__(self):
        return iter((self.root, self.exact))


def _check_natural(name, value, minimum=1):
    if isinstance(value, bool) or not isinstance(value, int):
        raise FermatlabDomainError(f'{name} must be an integer, got {value!r}')
    if value < minimum:
        raise FermatlabDomainError(f'{name} must be at least {minimum}, got {value}')


def gcd3(a, b, c):
    for name, value in zip('abc', (a, b, c)):
        _check_natural(name, value)
    return reduce(math.gcd, (a, b, c))


def two_adic_split(m):
    """Splits ``m`` into (k, d) with ``m == 2**k * d`` and ``d`` odd.

    Parameters
    ----------
    m : int
        positive integer to decompose.

    Returns
    -------
    form : TwoAdicForm
    """
    _check_natural('m', m)
    # m & -m isolates the lowest set bit
    k = (m & -m).bit_length() - 1
    return TwoAdicForm(k=k, d=m >> k)


def int_nth_root(s, n):
    """Exact floor of the n-th root of ``s``, and whether the root is exact.

    Binary search on integer powers, no floating point is involved so the ``exact`` flag is decision grade.
    """
    _check_natural('n', n)
    _check_natural('s', s)
    if n == 1:
        return NthRoot(s, True)
    if n == 2:
        root = math.isqrt(s)
        return NthRoot(root, root * root == s)

    lo, hi = 1, 1 << (s.bit_length() // n + 1)
    # invariant: lo**n <= s < hi**n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid ** n <= s:
            lo = mid
        else:
            hi = mid
    return NthRoot(lo, lo ** n == s)


def pow_big(base, exp):
    if exp < 0:
        raise FermatlabDomainError(f'exponent must be nonnegative, got {exp}')
    # python defines 0 ** 0 == 1
    return base ** exp


def is_perfect_square(m):
    return int_nth_root(m, 2).exact


def is_perfect_power(m, n):
    return int_nth_root(m, n).exact


def ratio(numerator, denominator=1):
    """Builds a Ratio in lowest terms."""
    if denominator == 0:
        raise FermatlabDomainError('denominator must be nonzero')
    return Fraction(numerator, denominator)


def ratio_is_integer(r):
    return Fraction(r).denominator == 1


def rational_root_search(s, n, max_denominator):
    """Looks for a rational p/q with q <= max_denominator and (p/q)**n == s.

    Returns the first hit as a Ratio, or None. For an integer ``s`` every hit has q == 1, the search exists to
    check that claim independently of the root algorithm.
    """
    s = Fraction(s)
    if s <= 0:
        raise FermatlabDomainError(f'radicand must be positive, got {s}')
    _check_natural('n', n)
    _check_natural('max_denominator', max_denominator)
    for q in range(1, max_denominator + 1):
        target = s * q ** n
        if target.denominator != 1:
            continue
        root, exact = int_nth_root(target.numerator, n)
        if exact:
            return Fraction(root, q)
    return None
