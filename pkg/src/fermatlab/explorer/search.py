#!/usr/bin/env python

import math
from dataclasses import dataclass

from fermatlab.exactcore import int_nth_root
from fermatlab.triples import FermatTriple
from fermatlab.utilities import FermatlabDomainError
from .exponent_solver import conjecture1_row


@dataclass(frozen=True)
class ExactSolution:
    triple: FermatTriple
    n: int

    def to_dict(self):
        return {'a': self.triple.a, 'b': self.triple.b, 'c': self.triple.c, 'n': self.n}


@dataclass(frozen=True)
class NearMiss:
    triple: FermatTriple
    n: int
    defect: int  # |c^n - a^n - b^n|

    def __post_init__(self):
        if self.defect < 1:
            raise FermatlabDomainError(f'a near miss has a positive defect, {tuple(self.triple)} at n={self.n} is '
                                       f'an exact solution')

    def to_dict(self):
        return {'a': self.triple.a, 'b': self.triple.b, 'c': self.triple.c, 'n': self.n, 'defect': self.defect}


def arc_candidates(a):
    """Integers c with a + 1 <= c and c^2 < 2a^2."""
    return range(a + 1, math.isqrt(2 * a * a - 1) + 1)


def scan_flt(a_values, n_min, n_max):
    """Exact solutions of a^n + b^n = c^n with b <= a, gcd 1 and c below a*sqrt(2), for the given a values.

    Each (a, c, n) is evaluated once: b is recovered as the exact n-th root of c^n - a^n.

    Returns
    -------
    hits : list of (a, b, c, n) tuples
    stats : dict
        number of (a, c, n) candidates evaluated and of (a, c) pairs pruned by gcd(a, c) > 1.
    """
    hits = []
    stats = {'candidates': 0, 'gcd_pruned_pairs': 0}
    for a in a_values:
        a = int(a)
        for c in arc_candidates(a):
            # gcd(a, c) > 1 would divide b as well
            if math.gcd(a, c) > 1:
                stats['gcd_pruned_pairs'] += 1
                continue
            for n in range(n_min, n_max + 1):
                a_pow = a ** n
                remainder = c ** n - a_pow
                # c^n / a^n grows with n, once b would exceed a it does so for every larger n
                if remainder > a_pow:
                    break
                stats['candidates'] += 1
                b, exact = int_nth_root(remainder, n)
                if exact:
                    hits.append((a, b, c, n))
    return hits, stats


def scan_near_misses(a_values, n_set, defect_cap):
    """Triples with b <= a, gcd 1 and |c^n - a^n - b^n| <= defect_cap.

    c runs upward from a + 1 while c^n - 2a^n stays within the cap, since a^n + b^n <= 2a^n.
    Returns (a, b, c, n, defect) tuples, exact solutions included with defect 0.
    """
    rows = []
    for a in a_values:
        a = int(a)
        for n in n_set:
            a_pow = a ** n
            c = a + 1
            c_pow = c ** n
            while c_pow - 2 * a_pow <= defect_cap:
                remainder = c_pow - a_pow
                b_root = int_nth_root(remainder, n).root
                # the defect grows monotonically on both sides of the real root
                b = min(b_root, a)
                while b >= 1:
                    defect = abs(remainder - b ** n)
                    if defect > defect_cap:
                        break
                    if math.gcd(math.gcd(a, b), c) == 1:
                        rows.append((a, b, c, n, defect))
                    b -= 1
                b = b_root + 1
                while b <= a:
                    defect = abs(remainder - b ** n)
                    if defect > defect_cap:
                        break
                    if math.gcd(math.gcd(a, b), c) == 1:
                        rows.append((a, b, c, n, defect))
                    b += 1
                c += 1
                c_pow = c ** n
    return rows


def scan_conjecture1(a_values, n_max, width):
    rows = []
    for a in a_values:
        a = int(a)
        for c in arc_candidates(a):
            for b in range(1, a + 1):
                if math.gcd(math.gcd(a, b), c) != 1:
                    continue
                rows.append(conjecture1_row(FermatTriple(a, b, c), n_max, width=width))
    return rows
