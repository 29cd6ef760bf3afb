#!/usr/bin/env python

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from fermatlab.exactcore import int_nth_root
from fermatlab.utilities import FermatlabDomainError, FermatlabGeometryError


class TriangleShape(Enum):
    Acute = 'Acute'
    Right = 'Right'
    Obtuse = 'Obtuse'
    Degenerate = 'Degenerate'


@dataclass(frozen=True)
class LatticeCount:
    count: int
    bound: int

    def __iter__(self):
        return iter((self.count, self.bound))


@dataclass(frozen=True)
class LimitShape:
    theta_minus_60: float
    c_gap_ratio: float  # (c - a) / a


# largest rational denominator for which the arc count stays in integers
MAX_EXACT_DENOMINATOR = 1000
# relative slack on the sign of a^2 + b^2 - c^2
SIGN_TOLERANCE = 1e-9


def _check_sides(a, b):
    if a <= 0 or b <= 0:
        raise FermatlabGeometryError(f'sides must be positive, got a={a}, b={b}')


def c_of_n(a, b, n):
    """c(n) = (a^n + b^n)^(1/n), evaluated with the larger side factored out so it never overflows."""
    _check_sides(a, b)
    if n < 1:
        raise FermatlabGeometryError(f'n must be at least 1, got {n}')
    big, small = (a, b) if a >= b else (b, a)
    big, small = float(big), float(small)
    return big * (1.0 + (small / big) ** n) ** (1.0 / n)


def theta_angle(a, b, n):
    """Interior angle opposite c, in degrees, by the law of cosines."""
    _check_sides(a, b)
    if n <= 1:
        raise FermatlabGeometryError(f'n must be greater than 1 for a proper triangle, got {n}')
    c = c_of_n(a, b, n)
    if c >= a + b:
        raise FermatlabGeometryError(f'degenerate triangle a={a}, b={b}, c={c}')
    # scale to unit perimeter
    perimeter = a + b + c
    a, b, c = a / perimeter, b / perimeter, c / perimeter
    cosine = (a * a + b * b - c * c) / (2.0 * a * b)
    return float(np.degrees(np.arccos(np.clip(cosine, -1.0, 1.0))))


def classify_triangle(a, b, n, right_angle_tol=1e-12):
    """Shape of the triangle with sides a, b and c(n), read from n and checked against the sign of a^2 + b^2 - c^2."""
    theta_angle(a, b, n)
    c = c_of_n(a, b, n)
    if abs(n - 2) <= right_angle_tol:
        shape = TriangleShape.Right
    elif n < 2:
        shape = TriangleShape.Obtuse
    else:
        shape = TriangleShape.Acute

    excess = (a * a + b * b - c * c) / (c * c)
    if (shape == TriangleShape.Acute and excess < -SIGN_TOLERANCE) or \
            (shape == TriangleShape.Obtuse and excess > SIGN_TOLERANCE) or \
            (shape == TriangleShape.Right and abs(excess) > SIGN_TOLERANCE):
        raise FermatlabGeometryError(f'{shape.value} at n={n} disagrees with a^2 + b^2 - c^2 = {excess * c * c}')
    return shape


def c_bounds_hold(a, c):
    """a + 1 <= c < a*sqrt(2), the upper bound checked as c^2 < 2a^2."""
    if a < 1:
        raise FermatlabDomainError(f'a must be positive, got {a}')
    return a + 1 <= c and c * c < 2 * a * a


def _as_fraction(n_min):
    if isinstance(n_min, Fraction):
        return n_min
    if isinstance(n_min, int):
        return Fraction(n_min)
    # str() gives the shortest repr, so 2.5 becomes 5/2 rather than a binary expansion
    return Fraction(str(n_min))


def lattice_count_on_arc(a, n_min):
    """Integers c with a < c < a * 2^(1/n_min), next to the bound floor(a(2^(1/3) - 1)).

    For a rational n_min = p/q the count compares c^p < 2^q a^p in integers; only exponents whose denominator
    exceeds ``MAX_EXACT_DENOMINATOR`` fall back to floating point.
    """
    if a < 1:
        raise FermatlabDomainError(f'a must be positive, got {a}')
    if n_min <= 2:
        raise FermatlabDomainError(f'n_min must be greater than 2, got {n_min}')

    # a * 2^(1/3) is never an integer, so its floor is the integer cube root of 2a^3
    bound = int_nth_root(2 * a ** 3, 3).root - a

    exponent = _as_fraction(n_min)
    if exponent.denominator <= MAX_EXACT_DENOMINATOR:
        p, q = exponent.numerator, exponent.denominator
        # largest c with c^p <= 2^q a^p - 1
        c_max = int_nth_root(2 ** q * a ** p - 1, p).root
    else:
        c_max = math.ceil(a * 2.0 ** (1.0 / float(n_min))) - 1
        # c^n >= 2 a^n, compared through logarithms
        threshold = math.log(2.0) / float(n_min)
        while c_max > a and math.log(c_max) - math.log(a) >= threshold:
            c_max -= 1
    return LatticeCount(count=max(c_max - a, 0), bound=bound)


def sqrt2_lattice_count(a):
    """Integers c with a < c < a*sqrt(2)."""
    if a < 1:
        raise FermatlabDomainError(f'a must be positive, got {a}')
    return math.isqrt(2 * a * a) - a


def small_b_excludes_integer_c(a, b, n):
    """True when (a+1)^n - a^n > b^n, so a^n + b^n falls strictly between two consecutive n-th powers."""
    if not 1 <= b <= a:
        raise FermatlabDomainError(f'1 <= b <= a required, got a={a}, b={b}')
    if n < 2:
        raise FermatlabDomainError(f'n must be at least 2, got {n}')
    return (a + 1) ** n - a ** n > b ** n


def limit_shape(a, b, n):
    c = c_of_n(a, b, n)
    return LimitShape(theta_minus_60=theta_angle(a, b, n) - 60.0, c_gap_ratio=(c - a) / a)
