#!/usr/bin/env python

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from fermatlab.triples import FermatTriple, make_fermat_triple


@dataclass(frozen=True)
class ExponentSolution:
    """Real exponent n with a^n + b^n = c^n, bracketed by bisection."""
    n: float
    residual: float           # a^n + b^n - c^n, inf when c^n overflows a float
    relative_residual: float  # residual / c^n
    iterations: int
    bracket: Tuple[float, float]

    def to_dict(self):
        return {'n': self.n, 'residual': self.residual, 'relative_residual': self.relative_residual,
                'iterations': self.iterations, 'bracket': list(self.bracket)}


def _gap_function(t):
    a, b, c = (float(value) for value in t)
    ratio_a, ratio_b = a / c, b / c

    def g(n):
        # strictly decreasing from g(0) = 1 towards -1
        return ratio_a ** n + ratio_b ** n - 1.0
    return g


def solve_exponent(t, width=1e-13):
    """Solves a^n + b^n = c^n for the unique real n > 0.

    Parameters
    ----------
    t : FermatTriple
        triple with b <= a < c; tuples are validated through ``make_fermat_triple``.
    width : float
        bracket width at which the bisection stops.

    Returns
    -------
    solution : ExponentSolution
    """
    if not isinstance(t, FermatTriple):
        t = make_fermat_triple(*t)
    g = _gap_function(t)

    low, high = 0.0, 1.0
    while g(high) > 0.0:
        low, high = high, 2.0 * high

    iterations = 0
    while high - low > width:
        mid = 0.5 * (low + high)
        if mid <= low or mid >= high:
            break
        iterations += 1
        g_mid = g(mid)
        if g_mid == 0.0:
            low = high = mid
            break
        if g_mid > 0.0:
            low = mid
        else:
            high = mid

    n = 0.5 * (low + high)
    relative_residual = g(n)
    try:
        residual = relative_residual * float(t.c) ** n
    except OverflowError:
        residual = math.copysign(math.inf, relative_residual) if relative_residual != 0.0 else 0.0
    return ExponentSolution(n=n, residual=residual, relative_residual=relative_residual, iterations=iterations,
                            bracket=(low, high))


def integer_exponent(t, n_max):
    """Smallest integer n in [1, n_max] with a^n + b^n = c^n, or None.

    The scan stops early once c^n - a^n - b^n is positive and growing from n to n + 1.
    """
    a, b, c = t
    defect = c - a - b
    for n in range(1, n_max + 1):
        if defect == 0:
            return n
        next_defect = c ** (n + 1) - a ** (n + 1) - b ** (n + 1)
        if 0 < defect < next_defect:
            return None
        defect = next_defect
    return None


def integer_exponent_exclusion(t, n_max):
    """True iff no integer n in [1, n_max] satisfies a^n + b^n = c^n exactly."""
    return integer_exponent(t, n_max) is None


@dataclass(frozen=True)
class Conjecture1Row:
    a: int
    b: int
    c: int
    solved_n: float
    nearest_integer: int
    distance: float
    integer_exponent: Optional[int]
    excluded_ge3: bool
    relative_residual: float

    def to_dict(self):
        return {'a': self.a, 'b': self.b, 'c': self.c, 'solved_n': self.solved_n,
                'nearest_integer': self.nearest_integer, 'distance': self.distance,
                'integer_exponent': self.integer_exponent, 'excluded_ge3': self.excluded_ge3,
                'relative_residual': self.relative_residual}


def conjecture1_row(t, n_max, width=1e-13):
    solution = solve_exponent(t, width=width)
    exponent = integer_exponent(t, n_max)
    nearest = int(round(solution.n))
    return Conjecture1Row(a=t.a, b=t.b, c=t.c, solved_n=solution.n, nearest_integer=nearest,
                          distance=abs(solution.n - nearest), integer_exponent=exponent,
                          excluded_ge3=exponent is None or exponent < 3,
                          relative_residual=solution.relative_residual)
