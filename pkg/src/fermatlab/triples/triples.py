#!/usr/bin/env python

import math
from dataclasses import dataclass
from enum import Enum

from fermatlab.exactcore import Natural, TwoAdicForm, gcd3, two_adic_split
from fermatlab.utilities import FermatlabDomainError, FermatlabOrderingError, FermatlabNonPrimitiveError
from fermatlab.utilities import FermatlabClassificationError


class FormVariant(Enum):
    FormC_even = 'FormC_even'  # c = 2^k d
    FormB_even = 'FormB_even'  # b = 2^k d, the smaller addend
    FormA_even = 'FormA_even'  # a = 2^k d, the larger addend


@dataclass(frozen=True)
class FermatTriple:
    """Primitive candidate (a, b, c) of a^n + b^n = c^n with b <= a < c.

    Build it through ``make_fermat_triple`` to get the addends reordered; the constructor only validates.
    """
    a: Natural
    b: Natural
    c: Natural

    def __post_init__(self):
        for name in 'abc':
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise FermatlabDomainError(f'{name} must be a positive integer, got {value!r}')
        if self.b > self.a:
            raise FermatlabOrderingError(f'b <= a required, got a={self.a}, b={self.b}')
        if self.c <= self.a:
            raise FermatlabOrderingError(f'a < c required, got a={self.a}, c={self.c}')
        divisor = gcd3(self.a, self.b, self.c)
        if divisor != 1:
            raise FermatlabNonPrimitiveError(f'gcd(a, b, c) = {divisor}, the triple ({self.a}, {self.b}, {self.c}) '
                                             f'is not primitive', gcd=divisor)

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def defect(self, n):
        """Signed exact difference c^n - a^n - b^n."""
        return self.c ** n - self.a ** n - self.b ** n


@dataclass(frozen=True)
class FormTag:
    variant: FormVariant
    two_adic: TwoAdicForm


@dataclass(frozen=True)
class PythParam:
    p: Natural
    q: Natural

    def __post_init__(self):
        if self.q < 1 or self.p <= self.q:
            raise FermatlabDomainError(f'p > q >= 1 required, got p={self.p}, q={self.q}')

    @property
    def is_primitive(self):
        return math.gcd(self.p, self.q) == 1 and (self.p - self.q) % 2 == 1


def make_fermat_triple(a, b, c):
    # the two addends commute, store the larger one as a
    if b > a:
        a, b = b, a
    return FermatTriple(a, b, c)


def classify_form(t):
    """Tags the single even element of ``t`` with its 2-adic form.

    Raises
    ------
    FermatlabClassificationError
        when the triple does not have exactly one even element, which the parity claim L1 rules out for solutions.
    """
    a, b, c = t
    even = [(variant, value) for variant, value in ((FormVariant.FormC_even, c), (FormVariant.FormB_even, b),
                                                    (FormVariant.FormA_even, a)) if value % 2 == 0]
    if len(even) != 1:
        raise FermatlabClassificationError(f'({a}, {b}, {c}) has {len(even)} even elements, the parity claim L1 '
                                           f'requires a single even element')
    variant, value = even[0]
    return FormTag(variant=variant, two_adic=two_adic_split(value))


def pyth_from_param(pp):
    if not isinstance(pp, PythParam):
        pp = PythParam(*pp)
    p, q = pp.p, pp.q
    return p * p - q * q, 2 * p * q, p * p + q * q


def enum_primitive_pythagorean(hyp_limit):
    """All primitive Pythagorean triples with hypotenuse up to ``hyp_limit``.

    Returns
    -------
    triples : list
        (p^2 - q^2, 2pq, p^2 + q^2) tuples ordered by hypotenuse, then by the first leg.
    """
    if hyp_limit < 5:
        raise FermatlabDomainError(f'hypotenuse limit must be at least 5, got {hyp_limit}')
    triples = []
    p = 2
    while p * p + 1 <= hyp_limit:
        # q of opposite parity to p, coprime with it
        for q in range(1 if p % 2 == 0 else 2, p, 2):
            if p * p + q * q > hyp_limit:
                break
            if math.gcd(p, q) == 1:
                triples.append(pyth_from_param(PythParam(p, q)))
        p += 1
    return sorted(triples, key=lambda triple: (triple[2], triple[0]))


def scan_primitive_pythagorean(hyp_limit):
    """Brute-force counterpart of ``enum_primitive_pythagorean``, legs sorted ascending."""
    triples = []
    for z in range(5, hyp_limit + 1):
        z_sq = z * z
        x = 1
        while 2 * x * x < z_sq:
            y_sq = z_sq - x * x
            y = math.isqrt(y_sq)
            if y * y == y_sq and gcd3(x, y, z) == 1:
                triples.append((x, y, z))
            x += 1
    return triples


def is_pythagorean(x, y, z):
    return x * x + y * y == z * z
