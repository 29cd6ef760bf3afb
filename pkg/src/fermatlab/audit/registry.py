#!/usr/bin/env python

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from .claims import ClaimKind
from . import gatherers


@dataclass(frozen=True)
class ClaimSpec:
    id: str
    kind: ClaimKind
    anchor: str        # verbatim fragment of the audited text
    statement: str
    bounds: Tuple[str, ...] = ()
    gatherer: Optional[Callable] = None
    attached: Tuple[str, ...] = ()  # computed claims a narrative step leans on


EXACT = ClaimKind.ExactTheorem
SWEEP = ClaimKind.EmpiricalSweep
NARRATIVE = ClaimKind.NarrativeUnchecked

FLT_BOUNDS = ('flt_a_max', 'flt_n_max')
EQ12_BOUNDS = ('eq12_exponent_max', 'eq12_q_max')
TRICHOTOMY_BOUNDS = ('trichotomy_samples', 'trichotomy_ab_max', 'trichotomy_n_max', 'rational_denominator_max')

CLAIMS = (
    ClaimSpec('L1', EXACT, 'a single element of the triple $(a,b,c)$ is even',
              'a^n + b^n and c^n have equal parity iff exactly one of a, b, c is even (gcd 1)',
              ('parity_c_max', 'parity_n_max'), gatherers.gather_parity),
    ClaimSpec('C2', EXACT, 'has one of the following three forms',
              'the even element of a primitive one-even triple is 2^k d with k >= 1 and d odd',
              ('parity_c_max',), gatherers.gather_forms),
    ClaimSpec('L3', EXACT, 'Then $c$ is not a fractional number',
              '(a^n + b^n)^(1/n) is an integer or irrational, never a fraction',
              TRICHOTOMY_BOUNDS, gatherers.gather_trichotomy),
    ClaimSpec('C4', EXACT, 'the third element is not a fractional number',
              '(c^n - a^n)^(1/n) is an integer or irrational, never a fraction',
              TRICHOTOMY_BOUNDS, gatherers.gather_third_element),
    ClaimSpec('PYTH_PARAM', EXACT,
              'must satisfy the following conditions for two positive integers $p$ and $q$ with $p>q$',
              '(p^2 - q^2, 2pq, p^2 + q^2) over coprime p > q of opposite parity gives every primitive triple once',
              ('pyth_hyp_limit',), gatherers.gather_pythagorean_parametrization),
    ClaimSpec('HYP_ODD', EXACT, 'requires that the hypotenuse $2^{kn/2}$ is odd',
              'primitive Pythagorean triples have an odd hypotenuse and exactly one even leg',
              ('pyth_hyp_limit',), gatherers.gather_hypotenuse_parity),
    ClaimSpec('EQ12', EXACT, r'\frac{2^{kn-2}}{q^2}+q^2',
              '2^(kn-2)/q^2 + q^2 equals p^2 + q^2 whenever 2pq = 2^(kn/2)',
              ('eq12_exponent_max',), gatherers.gather_eq12),
    ClaimSpec('PQ_DOM', EXACT, 'results that $2^{kn-2}>q^2$',
              '2^(kn-2) = p^2 q^2 > q^2 for every p > q with 2pq = 2^(kn/2)',
              ('eq12_exponent_max',), gatherers.gather_pq_dominance),
    ClaimSpec('MIN_GAP', EXACT, 'Therefore $c^{n/2}-a^{n/2}>2$',
              'c^m - a^m > 2 for odd a < c and m >= 2',
              ('min_gap_c_max', 'min_gap_m_max'), gatherers.gather_min_gap),
    ClaimSpec('L5.case1', EXACT, '2^{kn}&=a^n+b^n',
              'a^n + b^n = 2 (mod 4) for odd a, b and even n, so it is never 2^(kn)',
              ('residue_ab_max', 'residue_n_max'), gatherers.gather_even_power_residue),
    ClaimSpec('L5.case2.qeven1', EXACT, 'results that $2^{kn-2}>q^2$',
              'q^2 = 2^(kn-2) admits no parameter pair with p > q',
              EQ12_BOUNDS, gatherers.gather_qeven_equal),
    ClaimSpec('L5.case2.qeven2', EXACT, '$c^{n/2}$ is even, contradicting the fact that $c^{n/2}$ is odd',
              'q even with q^2 | 2^(kn-2), q^2 != 2^(kn-2) makes the hypotenuse even',
              EQ12_BOUNDS, gatherers.gather_qeven_divides),
    ClaimSpec('L5.case2.qeven3', EXACT,
              r'If $q$ is even such that $q^2\nmid 2^{kn-2}$ then $c^{n/2}\in\mathbb{Q}\setminus \mathbb{Z}$',
              'q even with q^2 not dividing 2^(kn-2) makes the hypotenuse fractional',
              EQ12_BOUNDS, gatherers.gather_qeven_not_divides),
    ClaimSpec('L5.case2.qodd1', EXACT, 'Therefore $c^{n/2}-a^{n/2}>2$',
              'q = 1 forces c^(n/2) - a^(n/2) = 2, which no pair of odd powers reaches',
              ('eq12_exponent_max',), gatherers.gather_q_one),
    ClaimSpec('L5.case2.qodd2', EXACT, 'Assume $q$ is odd greater than $1$',
              'odd q > 1 makes the hypotenuse fractional',
              EQ12_BOUNDS, gatherers.gather_q_odd_greater),
    ClaimSpec('L5', SWEEP, r'the other element has the form $2^k$ with $k \in \mathbb{R}$',
              'no solution with even n > 2 has a power of two as its even element',
              FLT_BOUNDS, gatherers.gather_power_of_two_sweep),
    ClaimSpec('L5.narrative', NARRATIVE, 'must be a Pythagorean triple',
              'Pythagorean necessity applied to the exponent n/2',
              attached=('L5.case1', 'L5.case2.qeven1', 'L5.case2.qeven2', 'L5.case2.qeven3', 'L5.case2.qodd1',
                        'L5.case2.qodd2', 'L5')),
    ClaimSpec('L6', EXACT, 'Then $2^{k}d=2^{h}$',
              '2^k d = 2^h with h = k + log2(d), integral exactly when d = 1',
              ('power_form_k_max', 'power_form_d_max'), gatherers.gather_power_form),
    ClaimSpec('L6.narrative', NARRATIVE, r'Using Lemma \ref{2knpar} (Case 1) with $c=2^{h}$',
              'the power-of-two argument reused with a real exponent h',
              attached=('L6', 'L5')),
    ClaimSpec('L7', SWEEP, 'a triple with three perfect square numbers',
              'no solution has two or more perfect square elements, square addends give irrational roots',
              FLT_BOUNDS, gatherers.gather_perfect_squares),
    ClaimSpec('L7.narrative', NARRATIVE, 'This case is proved following a similar reasoning',
              'the perfect-square case by analogy with the power-of-two case',
              attached=('L7', 'L6')),
    ClaimSpec('L8', EXACT, 'Then $[b^2/a]=b$ and it is odd',
              'a = b gives c = a 2^(1/n), irrational, and b^2/a is odd whenever it is an integer',
              ('frac_ab_max', 'frac_n_max'), gatherers.gather_fractional_branches),
    ClaimSpec('L8.narrative', NARRATIVE, 'we are allowed to replace the rascal',
              'replacing the rearranged sum by an irrational (2^k d)^n',
              attached=('L8', 'FRAC_ID', 'C4')),
    ClaimSpec('FRAC_ID', EXACT, r'(2^{h}d)^n=a^{n}+\left[\frac{b^2}{a}\right]^n',
              'the fractional rewriting and its rearrangement are exact identities in all three forms',
              ('frac_samples', 'frac_ab_max', 'frac_n_max'), gatherers.gather_fractional_identities),
    ClaimSpec('TABLE1', NARRATIVE, 'The valid structure for Equation',
              'the structural comparison of valid and invalid equation shapes',
              attached=('FRAC_ID', 'L8')),
    ClaimSpec('C_BOUNDS', EXACT, r'then for all $n>2$ we have $(a+1) \leq c<a\sqrt{2}$',
              'a < c(n) < a sqrt(2) for n > 2, and an integer c is at least a + 1',
              ('geometry_grid',), gatherers.gather_c_bounds),
    ClaimSpec('THETA_BOUND', EXACT, r'observe that $60$\textdegree $<\theta <90$\textdegree',
              'the angle opposite c lies strictly between 60 and 90 degrees for n > 2',
              ('geometry_grid',), gatherers.gather_theta_bound),
    ClaimSpec('TRI_SHAPE', EXACT, r'If $1<n<2$, then $\Delta ABC$ is obtuse',
              'the triangle is obtuse for 1 < n < 2, right at n = 2 and acute for n > 2',
              ('geometry_grid',), gatherers.gather_triangle_shape),
    ClaimSpec('TRI_LIMITS', EXACT,
              r'tends to be an equilateral triangle whenever $a=b$ and $n\rightarrow \infty$',
              'with a = b the angle opposite c tends to 60 degrees and c = a 2^(1/n); with a > b, c tends to a',
              (), gatherers.gather_triangle_limits),
    ClaimSpec('NOTE_DAGGER', EXACT, r'h\leq \lfloor a(\sqrt[3]{2}-1)\rfloor',
              'at most floor(a(2^(1/3) - 1)) integers lie in (a, a 2^(1/3)), none for b in {1, 2, 3}',
              ('lattice_a_max',), gatherers.gather_lattice),
    ClaimSpec('FLT_SWEEP', SWEEP,
              r'there are no positive integers \mbox{$a,b,c$}, that satisfy the equation $a^n+b^n=c^n$',
              'no primitive solution with a within the sweep bound and 3 <= n <= n_max',
              FLT_BOUNDS, gatherers.gather_flt_sweep),
    ClaimSpec('CONJ1', SWEEP, 'Then, $n$ is irrational',
              'the real exponent solving an integer triple is never an integer >= 3',
              ('conj1_a_max', 'conj1_n_max'), gatherers.gather_conjecture1),
)

_CASES = ('L5.case1', 'L5.case2.qeven1', 'L5.case2.qeven2', 'L5.case2.qeven3', 'L5.case2.qodd1', 'L5.case2.qodd2')

DEPENDENCY_EDGES = (
    ('L1', 'C2'), ('L3', 'C4'), ('C2', 'L5'), ('C4', 'L5'),
    *((case, 'L5') for case in _CASES),
    ('HYP_ODD', 'L5.case1'), ('PYTH_PARAM', 'EQ12'),
    *(('EQ12', case) for case in _CASES[1:]),
    ('PQ_DOM', 'L5.case2.qeven1'), ('MIN_GAP', 'L5.case2.qodd1'),
    ('L5', 'L6'), ('L6', 'L7'), ('L6', 'L8'), ('L7', 'L8'), ('FRAC_ID', 'L8'), ('TABLE1', 'L8'),
    ('L5.narrative', 'L5'), ('L6.narrative', 'L6'), ('L7.narrative', 'L7'), ('L8.narrative', 'L8'),
    ('L5', 'FLT_SWEEP'), ('L6', 'FLT_SWEEP'), ('L7', 'FLT_SWEEP'), ('L8', 'FLT_SWEEP'),
    ('C_BOUNDS', 'FLT_SWEEP'), ('C_BOUNDS', 'NOTE_DAGGER'), ('TRI_SHAPE', 'THETA_BOUND'), ('FLT_SWEEP', 'CONJ1'),
)

# the explicit citation chain every report must carry
REQUIRED_EDGES = (('L1', 'C2'), ('L3', 'C4'), ('L5', 'L6'), ('L6', 'L8'))


def claim_ids():
    return [entry.id for entry in CLAIMS]
