#!/usr/bin/env python

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np

from fermatlab.exactcore import int_nth_root, is_perfect_power, is_perfect_square, rational_root_search
from fermatlab.triples import FormVariant, PythParam, FermatTriple, classify_form, pyth_from_param
from fermatlab.triples import enum_primitive_pythagorean, scan_primitive_pythagorean, is_pythagorean
from fermatlab.lemma_lab import ParityProfile, Eq12Branch, parity_profile, parity_consistent, root_verdict
from fermatlab.lemma_lab import third_element_verdict, two_adic_as_power_of_two, eq12_evaluate, eq12_case
from fermatlab.lemma_lab import pq_dominance, min_gap_holds, frac_reduction_check, frac_reduction_quotient
from fermatlab.lemma_lab import even_power_sum_residue
from fermatlab.geometry import TriangleShape, c_of_n, theta_angle, classify_triangle, lattice_count_on_arc
from fermatlab.geometry import sqrt2_lattice_count, small_b_excludes_integer_c, limit_shape
from fermatlab.utilities import FermatlabBoundsError

# counterexamples listed in a claim's evidence, the total is always reported
MAX_LISTED = 10


@dataclass
class Outcome:
    evidence: Dict[str, Any] = field(default_factory=dict)
    counterexamples: List[Any] = field(default_factory=list)


class AuditContext:
    """Bounds, tolerances and shared sweep results handed to every gatherer."""

    def __init__(self, bounds, tolerances, seed, explorer, exceeded=None):
        self.bounds = bounds
        self.exceeded = {} if exceeded is None else exceeded
        self.tolerances = tolerances
        self.seed = seed
        self.explorer = explorer
        self._flt_solutions = None

    def bound(self, key):
        if key in self.exceeded:
            value, limit = self.exceeded[key]
            raise FermatlabBoundsError(f'bound "{key}" = {value} is above its limit {limit}')
        return self.bounds[key]

    def tol(self, key):
        return self.tolerances[key]

    def rng(self):
        # fresh per gatherer, so a claim's samples do not depend on which claims ran before it
        return np.random.default_rng(self.seed)

    @property
    def validation_mode(self):
        return self.bound('flt_n_max') == 2

    def flt_solutions(self):
        if self._flt_solutions is None:
            self._flt_solutions = self.explorer.flt_brute_force(self.bound('flt_a_max'), self.bound('flt_n_max'),
                                                                validation=self.validation_mode)
        return self._flt_solutions


def _primitive_triples(c_max):
    """Every (a, b, c) with b <= a < c <= c_max and gcd 1."""
    for c in range(2, c_max + 1):
        for a in range(1, c):
            g = math.gcd(a, c)
            for b in range(1, a + 1):
                if math.gcd(g, b) == 1:
                    yield a, b, c


def _power_of_two_params(e_max):
    """Parameter pairs with 2pq = 2^e for e <= e_max, i.e. p = 2^i > q = 2^j with i + j + 1 = e."""
    for e in range(2, e_max + 1):
        for j in range(0, e):
            i = e - 1 - j
            if i > j:
                yield e, PythParam(2 ** i, 2 ** j)


# -------------------
# parity and 2-adic forms
# -------------------
def gather_parity(context):
    c_max, n_max = context.bound('parity_c_max'), context.bound('parity_n_max')
    outcome = Outcome()
    profiles = {profile.value: 0 for profile in ParityProfile}
    checks = 0
    for t in _primitive_triples(c_max):
        profile = parity_profile(t)
        profiles[profile.value] += 1
        for n in range(3, n_max + 1):
            checks += 1
            if parity_consistent(t, n) != (profile == ParityProfile.OneEven):
                outcome.counterexamples.append({'a': t[0], 'b': t[1], 'c': t[2], 'n': n})
    outcome.evidence = {'c_max': c_max, 'n_range': [3, n_max], 'triples': sum(profiles.values()),
                        'checks': checks, 'profiles': profiles}
    return outcome


def gather_forms(context):
    c_max = context.bound('parity_c_max')
    outcome = Outcome()
    variants = {variant.value: 0 for variant in FormVariant}
    for a, b, c in _primitive_triples(c_max):
        if parity_profile((a, b, c)) != ParityProfile.OneEven:
            continue
        tag = classify_form(FermatTriple(a, b, c))
        variants[tag.variant.value] += 1
        even = {FormVariant.FormC_even: c, FormVariant.FormB_even: b, FormVariant.FormA_even: a}[tag.variant]
        if tag.two_adic.value != even or tag.two_adic.k < 1:
            outcome.counterexamples.append({'a': a, 'b': b, 'c': c, 'k': tag.two_adic.k, 'd': tag.two_adic.d})
    outcome.evidence = {'c_max': c_max, 'classified': sum(variants.values()), 'forms': variants}
    return outcome


# -------------------
# realness of roots
# -------------------
def _sample_root_claims(context, radicand):
    samples, ab_max = context.bound('trichotomy_samples'), context.bound('trichotomy_ab_max')
    n_max, max_den = context.bound('trichotomy_n_max'), context.bound('rational_denominator_max')
    rng = context.rng()
    outcome = Outcome()
    integer_roots = 0
    for _ in range(samples):
        x, y = sorted(int(value) for value in rng.integers(1, ab_max + 1, size=2))
        n = int(rng.integers(3, n_max + 1))
        s, verdict = radicand(x, y, n)
        if s is None:
            continue
        if verdict.is_integer:
            integer_roots += 1
            if verdict.value ** n != s:
                outcome.counterexamples.append({'x': x, 'y': y, 'n': n, 'root': verdict.value})
            continue
        hit = rational_root_search(s, n, max_den)
        if hit is not None:
            outcome.counterexamples.append({'x': x, 'y': y, 'n': n, 'rational_root': str(hit)})
    outcome.evidence = {'samples': samples, 'ab_max': ab_max, 'n_range': [3, n_max],
                        'max_denominator': max_den, 'integer_roots': integer_roots, 'seed': context.seed}
    return outcome


def gather_trichotomy(context):
    def radicand(x, y, n):
        return x ** n + y ** n, root_verdict(y, x, n)
    return _sample_root_claims(context, radicand)


def gather_third_element(context):
    def radicand(x, y, n):
        if x == y:
            return None, None
        return y ** n - x ** n, third_element_verdict(x, y, n)
    return _sample_root_claims(context, radicand)


# -------------------
# Pythagorean reduction
# -------------------
def _leg_sorted(triples):
    return {(min(x, y), max(x, y), z) for x, y, z in triples}


def gather_pythagorean_parametrization(context):
    hyp_limit = context.bound('pyth_hyp_limit')
    enumerated = enum_primitive_pythagorean(hyp_limit)
    scanned = set(scan_primitive_pythagorean(hyp_limit))
    found = _leg_sorted(enumerated)
    outcome = Outcome()
    outcome.counterexamples = [{'missing': list(triple)} for triple in sorted(scanned - found)] + \
                              [{'spurious': list(triple)} for triple in sorted(found - scanned)]
    if len(found) != len(enumerated):
        outcome.counterexamples.append({'duplicates': len(enumerated) - len(found)})
    outcome.evidence = {'hyp_limit': hyp_limit, 'enumerated': len(enumerated), 'brute_force': len(scanned)}
    return outcome


def gather_hypotenuse_parity(context):
    hyp_limit = context.bound('pyth_hyp_limit')
    outcome = Outcome()
    triples = enum_primitive_pythagorean(hyp_limit)
    for leg1, leg2, hyp in triples:
        if hyp % 2 == 0 or (leg1 % 2 == 0) == (leg2 % 2 == 0) or not is_pythagorean(leg1, leg2, hyp):
            outcome.counterexamples.append([leg1, leg2, hyp])
    outcome.evidence = {'hyp_limit': hyp_limit, 'triples': len(triples)}
    return outcome


def gather_eq12(context):
    e_max = context.bound('eq12_exponent_max')
    outcome = Outcome()
    checked = 0
    for e, pp in _power_of_two_params(e_max):
        checked += 1
        hyp = pyth_from_param(pp)[2]
        value = eq12_evaluate(2 * e, pp.q)
        if value != hyp or value != pp.p ** 2 + pp.q ** 2:
            outcome.counterexamples.append({'p': pp.p, 'q': pp.q, 'kn': 2 * e, 'value': str(value)})
    outcome.evidence = {'even_leg_max': f'2^{e_max}', 'parameters': checked}
    return outcome


def gather_pq_dominance(context):
    e_max = context.bound('eq12_exponent_max')
    outcome = Outcome()
    checked = 0
    for e, pp in _power_of_two_params(e_max):
        checked += 1
        if not pq_dominance(pp, 2 * e):
            outcome.counterexamples.append({'p': pp.p, 'q': pp.q, 'kn': 2 * e})
    outcome.evidence = {'even_leg_max': f'2^{e_max}', 'parameters': checked}
    return outcome


def gather_min_gap(context):
    c_max, m_max = context.bound('min_gap_c_max'), context.bound('min_gap_m_max')
    outcome = Outcome()
    checks = 0
    for c in range(3, c_max + 1, 2):
        for a in range(1, c, 2):
            for m in range(2, m_max + 1):
                checks += 1
                if not min_gap_holds(a, c, m):
                    outcome.counterexamples.append({'a': a, 'c': c, 'm': m})
    outcome.evidence = {'c_max': c_max, 'm_range': [2, m_max], 'checks': checks}
    return outcome


def gather_even_power_residue(context):
    ab_max, n_max = context.bound('residue_ab_max'), context.bound('residue_n_max')
    outcome = Outcome()
    checks = 0
    for a in range(1, ab_max + 1, 2):
        for b in range(1, a + 1, 2):
            for n in range(2, n_max + 1, 2):
                checks += 1
                if even_power_sum_residue(a, b, n) != 2:
                    outcome.counterexamples.append({'a': a, 'b': b, 'n': n})
    outcome.evidence = {'ab_max': ab_max, 'n_range': [2, n_max], 'checks': checks, 'residue_mod_4': 2}
    return outcome


def _eq12_branch_sweep(context, branch, expectation):
    kn_max, q_max = context.bound('eq12_exponent_max'), context.bound('eq12_q_max')
    outcome = Outcome()
    cases = 0
    for kn in range(2, kn_max + 1):
        for q in range(1, q_max + 1):
            case = eq12_case(kn, q)
            if case.branch != branch:
                continue
            cases += 1
            if not expectation(kn, q, case):
                outcome.counterexamples.append({'kn': kn, 'q': q, 'value': str(case.value)})
    outcome.evidence = {'kn_range': [2, kn_max], 'q_max': q_max, 'branch': branch.value, 'cases': cases}
    return outcome


def gather_qeven_equal(context):
    def no_valid_parameter(kn, q, case):
        # 2pq = 2^(kn/2) would force p = 2^(kn/2 - 1) / q, never an integer above q
        if kn % 2 == 1:
            return True
        numerator = 2 ** (kn // 2 - 1)
        return numerator % q != 0 or numerator // q <= q
    outcome = _eq12_branch_sweep(context, Eq12Branch.QEvenEqual, no_valid_parameter)
    on_valid_domain = sum(1 for e, pp in _power_of_two_params(context.bound('eq12_exponent_max'))
                          if eq12_case(2 * e, pp.q).branch == Eq12Branch.QEvenEqual)
    outcome.evidence['valid_parameters_in_branch'] = on_valid_domain
    if on_valid_domain > 0:
        outcome.counterexamples.append({'valid_parameters_in_branch': on_valid_domain})
    return outcome


def gather_qeven_divides(context):
    return _eq12_branch_sweep(context, Eq12Branch.QEvenDivides, lambda kn, q, case: case.integral and case.even)


def gather_qeven_not_divides(context):
    return _eq12_branch_sweep(context, Eq12Branch.QEvenNotDivides, lambda kn, q, case: not case.integral)


def gather_q_one(context):
    kn_max = context.bound('eq12_exponent_max')
    outcome = Outcome()
    checks = 0
    for kn in range(4, kn_max + 1, 2):
        p = 2 ** (kn // 2 - 1)
        hyp, leg = p * p + 1, p * p - 1
        if eq12_evaluate(kn, 1) != hyp or hyp - leg != 2:
            outcome.counterexamples.append({'kn': kn, 'reason': 'q = 1 does not give c^(n/2) - a^(n/2) = 2'})
        # both would have to be m-th powers of odd integers for some even n = 2m > 2
        for m in range(2, kn // 2 + 1):
            if kn % (2 * m) != 0:
                continue
            checks += 1
            if leg >= 1 and is_perfect_power(hyp, m) and is_perfect_power(leg, m):
                outcome.counterexamples.append({'kn': kn, 'm': m, 'hyp': hyp, 'leg': leg})
    outcome.evidence = {'kn_range': [4, kn_max], 'power_checks': checks}
    return outcome


def gather_q_odd_greater(context):
    return _eq12_branch_sweep(context, Eq12Branch.QOddGreater, lambda kn, q, case: not case.integral)


# -------------------
# sweep-backed lemmas
# -------------------
def _flt_evidence(context, solutions, selected):
    return {'a_max': context.bound('flt_a_max'), 'n_max': context.bound('flt_n_max'),
            'validation_mode': context.validation_mode, 'sweep_solutions': len(solutions),
            'selected': len(selected)}


def gather_power_of_two_sweep(context):
    solutions = context.flt_solutions()
    selected = []
    for solution in solutions:
        if solution.n < 3 or solution.n % 2 == 1:
            continue
        even = [value for value in solution.triple if value % 2 == 0]
        if len(even) == 1 and even[0] & (even[0] - 1) == 0:
            selected.append(solution.to_dict())
    return Outcome(evidence=_flt_evidence(context, solutions, selected), counterexamples=selected)


def gather_power_form(context):
    k_max, d_max = context.bound('power_form_k_max'), context.bound('power_form_d_max')
    tol = context.tol('relative')
    outcome = Outcome()
    checks = 0
    for k in range(0, k_max + 1):
        for d in range(1, d_max + 1, 2):
            checks += 1
            form = two_adic_as_power_of_two(k, d)
            if form.h_is_integer != (d == 1) or not math.isclose(2.0 ** form.h, form.value, rel_tol=tol) or \
                    form.exact_source != (d << k):
                outcome.counterexamples.append({'k': k, 'd': d, 'h': form.h})
    outcome.evidence = {'k_range': [0, k_max], 'd_max': d_max, 'checks': checks, 'integral_h_iff': 'd = 1'}
    return outcome


def gather_perfect_squares(context):
    solutions = context.flt_solutions()
    selected = [solution.to_dict() for solution in solutions if solution.n >= 3 and
                sum(1 for value in solution.triple if is_perfect_square(value)) >= 2]
    evidence = _flt_evidence(context, solutions, selected)

    # square addends directly: c^n = x^(2n) + y^(2n) never has an integer root
    root_max = math.isqrt(context.bound('flt_a_max'))
    irrational = 0
    for x in range(1, root_max + 1):
        for y in range(1, x + 1):
            for n in range(3, max(context.bound('flt_n_max'), 3) + 1):
                verdict = root_verdict(x * x, y * y, n)
                if verdict.is_integer:
                    selected.append({'a': x * x, 'b': y * y, 'c': verdict.value, 'n': n})
                else:
                    irrational += 1
    evidence['square_addend_roots_irrational'] = irrational
    return Outcome(evidence=evidence, counterexamples=selected)


def gather_fractional_branches(context):
    ab_max, n_max = context.bound('frac_ab_max'), context.bound('frac_n_max')
    outcome = Outcome()
    equal_checks, quotient_checks = 0, 0
    for a in range(1, ab_max + 1):
        for n in range(3, n_max + 1):
            equal_checks += 1
            verdict = root_verdict(a, a, n)
            if verdict.is_integer:
                outcome.counterexamples.append({'a': a, 'b': a, 'n': n, 'c': verdict.value})
    branches = {'equal': 0, 'divides': 0, 'fractional': 0}
    for a in range(1, ab_max + 1, 2):
        for b in range(1, ab_max + 1, 2):
            quotient_checks += 1
            quotient = frac_reduction_quotient(a, b)
            if quotient.equal:
                branches['equal'] += 1
                if quotient.value != b or not quotient.odd:
                    outcome.counterexamples.append({'a': a, 'b': b, 'quotient': str(quotient.value)})
            elif quotient.divides:
                branches['divides'] += 1
                if not quotient.odd:
                    outcome.counterexamples.append({'a': a, 'b': b, 'quotient': str(quotient.value)})
            else:
                branches['fractional'] += 1
    outcome.evidence = {'ab_max': ab_max, 'n_range': [3, n_max], 'equal_addend_roots_irrational': equal_checks,
                        'quotients': quotient_checks, 'branches': branches}
    return outcome


def gather_fractional_identities(context):
    samples, ab_max, n_max = context.bound('frac_samples'), context.bound('frac_ab_max'), context.bound('frac_n_max')
    rng = context.rng()
    odd_exponents = list(range(3, n_max + 1, 2))
    outcome = Outcome()
    forms = {variant.value: 0 for variant in FormVariant}
    for _ in range(samples):
        x, y = sorted(2 * int(value) + 1 for value in rng.integers(0, (ab_max + 1) // 2, size=2))
        n = odd_exponents[int(rng.integers(0, len(odd_exponents)))]
        checks = [(FormVariant.FormC_even, x, y)]
        if x < y:
            checks += [(FormVariant.FormB_even, x, y), (FormVariant.FormA_even, x, y)]
        for form, first, second in checks:
            forms[form.value] += 1
            if not frac_reduction_check(first, second, n, form=form):
                outcome.counterexamples.append({'form': form.value, 'x': first, 'y': second, 'n': n})
    outcome.evidence = {'samples': samples, 'ab_max': ab_max, 'odd_n': odd_exponents, 'identities': forms,
                        'seed': context.seed}
    return outcome


# -------------------
# geometry
# -------------------
def _geometry_grid(context):
    size = context.bound('geometry_grid')
    exponents = np.linspace(2.05, 2.0 + size, 2 * size)
    for a in range(1, size + 1):
        for b in range(1, a + 1):
            for n in exponents:
                yield float(a), float(b), float(n)


def gather_c_bounds(context):
    outcome = Outcome()
    points = 0
    for a, b, n in _geometry_grid(context):
        points += 1
        c = c_of_n(a, b, n)
        # c - a from log1p, c itself rounds to a once (b/a)^n drops below the float epsilon
        gap = a * math.expm1(math.log1p((b / a) ** n) / n)
        if not (gap > 0.0 and c < a * math.sqrt(2)):
            outcome.counterexamples.append({'a': a, 'b': b, 'n': n, 'c': c})
    # integer version: a^n < a^n + b^n and (a^n + b^n)^2 < 2^n a^(2n)
    a_max = 10 * context.bound('geometry_grid')
    exact_checks = 0
    for a in range(1, a_max + 1):
        for b in range(1, a + 1):
            for n in range(3, 7):
                exact_checks += 1
                s = a ** n + b ** n
                if not (a ** n < s and s * s < 2 ** n * a ** (2 * n)):
                    outcome.counterexamples.append({'a': a, 'b': b, 'n': n})
                root, exact = int_nth_root(s, n)
                if exact and not a + 1 <= root:
                    outcome.counterexamples.append({'a': a, 'b': b, 'n': n, 'c': root})
    outcome.evidence = {'grid_points': points, 'exact_checks': exact_checks, 'exact_a_max': a_max}
    return outcome


def gather_theta_bound(context):
    outcome = Outcome()
    thetas = []
    for a, b, n in _geometry_grid(context):
        theta = theta_angle(a, b, n)
        thetas.append(theta)
        if not 60.0 < theta < 90.0:
            outcome.counterexamples.append({'a': a, 'b': b, 'n': n, 'theta_deg': theta})
    outcome.evidence = {'grid_points': len(thetas), 'theta_min': min(thetas), 'theta_max': max(thetas)}
    return outcome


def gather_triangle_shape(context):
    tol = context.tol('right_angle_n')
    outcome = Outcome()
    expected = {1.5: TriangleShape.Obtuse, 2.0: TriangleShape.Right, 3.0: TriangleShape.Acute}
    shapes = {shape.value: 0 for shape in TriangleShape}
    size = context.bound('geometry_grid')
    exponents = sorted(set(np.round(np.linspace(1.05, 2.0 + size, 4 * size), 12).tolist()) | set(expected))
    for a in range(1, size + 1):
        for b in range(1, a + 1):
            for n in exponents:
                shape = classify_triangle(float(a), float(b), n, right_angle_tol=tol)
                shapes[shape.value] += 1
                wanted = expected.get(n, TriangleShape.Obtuse if n < 2 else TriangleShape.Acute)
                if shape != wanted:
                    outcome.counterexamples.append({'a': a, 'b': b, 'n': n, 'shape': shape.value})
    outcome.evidence = {'exponents': len(exponents), 'shapes': shapes}
    return outcome


def gather_triangle_limits(context):
    slack = context.tol('angle_deg')
    tol = context.tol('relative')
    outcome = Outcome()
    exponents = [10.0, 100.0, 1000.0, 1e4, 1e5, 1e6]
    equal_sides = [limit_shape(1.0, 1.0, n).theta_minus_60 for n in exponents]
    unequal_sides = [limit_shape(5.0, 3.0, n).c_gap_ratio for n in exponents]
    for values, label in ((equal_sides, 'theta_minus_60'), (unequal_sides, 'c_gap_ratio')):
        if any(later > earlier for earlier, later in zip(values, values[1:])) or values[-1] > 1e-3 or \
                values[-1] < -slack:
            outcome.counterexamples.append({label: values})
    for a in range(1, 11):
        for n in (3.0, 5.0, 50.0):
            if not math.isclose(c_of_n(a, a, n), a * 2.0 ** (1.0 / n), rel_tol=tol):
                outcome.counterexamples.append({'a': a, 'n': n})
    outcome.evidence = {'exponents': exponents, 'equal_sides_theta_minus_60': equal_sides,
                        'unequal_sides_c_gap_ratio': unequal_sides}
    return outcome


def gather_lattice(context):
    a_max = context.bound('lattice_a_max')
    outcome = Outcome()
    max_gap = 0
    for a in range(1, a_max + 1):
        count, bound = lattice_count_on_arc(a, 3)
        if count > bound:
            outcome.counterexamples.append({'a': a, 'count': count, 'bound': bound})
        max_gap = max(max_gap, sqrt2_lattice_count(a) - count)
    reference = tuple(lattice_count_on_arc(100, 3))
    if reference != (25, 25):
        outcome.counterexamples.append({'a': 100, 'count_bound': list(reference)})
    small = [lattice_count_on_arc(a, 3).count for a in (1, 2, 3)]
    if any(count != 0 for count in small):
        outcome.counterexamples.append({'small_a_counts': small})
    small_b_checks = 0
    for b in (1, 2, 3):
        for a in range(b, 201):
            for n in range(3, 9):
                small_b_checks += 1
                if not small_b_excludes_integer_c(a, b, n):
                    outcome.counterexamples.append({'a': a, 'b': b, 'n': n})
    outcome.evidence = {'a_max': a_max, 'count_at_100': list(reference), 'small_a_counts': small,
                        'max_sqrt2_minus_cbrt2_count': max_gap, 'small_b_checks': small_b_checks}
    return outcome


def gather_flt_sweep(context):
    solutions = context.flt_solutions()
    evidence = {'a_max': context.bound('flt_a_max'), 'n_max': context.bound('flt_n_max'),
                'validation_mode': context.validation_mode, 'scan_stats': dict(context.explorer.scan_stats)}
    if context.validation_mode:
        # n = 2 hits are the Pythagorean triples, expected and cross-checked rather than counterexamples
        found = {(s.triple.b, s.triple.a, s.triple.c) for s in solutions}
        a_max = context.bound('flt_a_max')
        expected = {triple for triple in _leg_sorted(enum_primitive_pythagorean(max(5, 2 * a_max)))
                    if triple[1] <= a_max}
        evidence['expected_findings'] = len(found)
        mismatches = sorted(found ^ expected)
        return Outcome(evidence=evidence, counterexamples=[{'mismatch': list(t)} for t in mismatches])
    evidence['solutions'] = len(solutions)
    return Outcome(evidence=evidence, counterexamples=[solution.to_dict() for solution in solutions])


def gather_conjecture1(context):
    report = context.explorer.conjecture1_experiment(context.bound('conj1_a_max'), context.bound('conj1_n_max'))
    evidence = dict(report.summary)
    evidence.update({'a_max': report.a_max, 'n_max': report.n_max})
    counterexamples = [row.to_dict() for row in report.rows if not row.excluded_ge3]
    return Outcome(evidence=evidence, counterexamples=counterexamples)
