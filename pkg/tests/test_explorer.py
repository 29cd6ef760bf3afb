#!/usr/bin/env python
import math
import time

import numpy as np
import pytest

from fermatlab.triples import FermatTriple, enum_primitive_pythagorean
from fermatlab.explorer import Explorer, NearMiss, solve_exponent, integer_exponent_exclusion, integer_exponent
from fermatlab.explorer import scan_near_misses
from fermatlab.utilities import ConfigParser, FermatlabDomainError, FermatlabOrderingError, FermatlabSearchError


def _explorer(num_threads=1):
    config = ConfigParser(config_dict={'general': {'num_threads': num_threads, 'verbosity': 0}})
    config.parse()
    return Explorer(config)


def test_solve_exponent_pythagorean():
    solution = solve_exponent(FermatTriple(4, 3, 5))
    assert abs(solution.n - 2.0) <= 1e-12
    low, high = solution.bracket
    assert high - low <= 1e-13


def test_solve_exponent_near_cube():
    t = FermatTriple(8, 6, 9)
    solution = solve_exponent(t)
    assert 2.99 < solution.n < 3.0
    assert abs(solution.relative_residual) <= 1e-12
    assert abs(solution.residual) / 9.0 ** solution.n <= 1e-12


def test_solve_exponent_rejects_invalid_triple():
    with pytest.raises(FermatlabOrderingError):
        solve_exponent((2, 1, 2))


def test_gap_function_decreasing():
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 100:
        a = int(rng.integers(2, 200))
        b = int(rng.integers(1, a + 1))
        c = int(rng.integers(a + 1, 2 * a + 2))
        if math.gcd(math.gcd(a, b), c) != 1:
            continue
        checked += 1
        ratio_a, ratio_b = a / c, b / c
        grid = np.linspace(0.1, 30.0, 100)
        values = ratio_a ** grid + ratio_b ** grid - 1.0
        assert np.all(np.diff(values) < 0)
        solution = solve_exponent((a, b, c))
        low, high = solution.bracket
        assert ratio_a ** low + ratio_b ** low - 1.0 >= 0.0 >= ratio_a ** high + ratio_b ** high - 1.0


def test_integer_exponent_exclusion():
    assert not integer_exponent_exclusion(FermatTriple(4, 3, 5), 20)
    assert integer_exponent(FermatTriple(4, 3, 5), 20) == 2
    assert integer_exponent_exclusion(FermatTriple(8, 6, 9), 20)
    assert integer_exponent_exclusion(FermatTriple(5, 5, 6), 20)
    assert integer_exponent(FermatTriple(3, 2, 5), 20) == 1


def test_flt_brute_force_small():
    assert _explorer().flt_brute_force(50, 10) == []


def test_flt_brute_force_desk_scale():
    explorer = _explorer()
    start = time.perf_counter()
    assert explorer.flt_brute_force(200, 20) == []
    assert time.perf_counter() - start < 60.0
    assert explorer.scan_stats['candidates'] > 0
    assert explorer.scan_stats['gcd_pruned_pairs'] > 0
    assert explorer.counterexamples == []


def test_flt_validation_recovers_pythagorean_triples():
    solutions = _explorer().flt_brute_force(200, 2, validation=True)
    found = {(sol.triple.b, sol.triple.a, sol.triple.c) for sol in solutions}
    assert all(sol.n == 2 for sol in solutions)
    expected = {(min(x, y), max(x, y), z) for x, y, z in enum_primitive_pythagorean(283) if max(x, y) <= 200}
    assert found == expected
    assert (3, 4, 5) in found


def test_flt_brute_force_bounds():
    with pytest.raises(FermatlabDomainError):
        _explorer().flt_brute_force(1, 10)
    with pytest.raises(FermatlabDomainError):
        _explorer().flt_brute_force(10, 2)


def test_flt_brute_force_parallel():
    assert _explorer(num_threads=2).flt_brute_force(60, 2, validation=True) == \
        _explorer(num_threads=1).flt_brute_force(60, 2, validation=True)


def test_near_miss_search():
    near_misses = _explorer().near_miss_search(10, {3}, 1)
    assert NearMiss(triple=FermatTriple(8, 6, 9), n=3, defect=1) in near_misses
    assert NearMiss(triple=FermatTriple(10, 9, 12), n=3, defect=1) in near_misses
    assert _explorer().near_miss_search(10, {3}, 0) == []


def test_near_miss_defects_verify():
    explorer = _explorer()
    near_misses = explorer.near_miss_search(12, {4}, 100)
    for near_miss in near_misses:
        a, b, c = near_miss.triple
        assert abs(c ** 4 - a ** 4 - b ** 4) == near_miss.defect <= 100
    keys = [(near_miss.defect, near_miss.triple.a) for near_miss in near_misses]
    assert keys == sorted(keys)
    assert explorer.counterexamples == []


def _near_miss_oracle(a_max, n_set, defect_cap):
    # c^n <= 2a^n + cap keeps c below 2a + cap^(1/3) + 1 for n >= 3
    c_limit = int(round(defect_cap ** (1 / 3))) + 2
    rows = set()
    for a in range(1, a_max + 1):
        for b in range(1, a + 1):
            for c in range(a + 1, 4 * a + c_limit):
                if math.gcd(math.gcd(a, b), c) != 1:
                    continue
                for n in n_set:
                    defect = abs(c ** n - a ** n - b ** n)
                    if defect <= defect_cap:
                        rows.add((a, b, c, n, defect))
    return rows


@pytest.mark.parametrize('a_max, n_set, defect_cap', [(12, [4], 100), (10, [3], 1), (40, [3], 5000),
                                                      (25, [3, 5], 10**6)])
def test_near_miss_scan_is_complete(a_max, n_set, defect_cap):
    rows = scan_near_misses(range(1, a_max + 1), n_set, defect_cap)
    assert len(rows) == len(set(rows))
    assert set(rows) == _near_miss_oracle(a_max, n_set, defect_cap)


def test_near_miss_search_beyond_the_arc():
    # 3^4 - 1 - 1 = 79 with c far above a * 2^(1/4)
    near_misses = _explorer().near_miss_search(12, {4}, 100)
    assert NearMiss(triple=FermatTriple(1, 1, 3), n=4, defect=79) in near_misses
    found = {(near_miss.triple.a, near_miss.triple.b, near_miss.triple.c, near_miss.n, near_miss.defect)
             for near_miss in near_misses}
    assert found == _near_miss_oracle(12, [4], 100)


def _failing_scan(a_values, *args):
    if 2 in a_values:
        raise ZeroDivisionError('worker failure')
    return list(a_values)


def test_partitioned_scan_reports_failed_worker():
    with pytest.raises(FermatlabSearchError, match=r'worker 1 exited with code 1 on a = \[2, 4, 6, 8\]'):
        _explorer(num_threads=2)._run_partitioned(_failing_scan, range(1, 9))


def test_partitioned_scan_merges_chunks():
    assert _explorer(num_threads=2)._run_partitioned(_failing_scan, range(3, 8, 2)) == [[3, 7], [5]]


def test_near_miss_search_parallel():
    assert _explorer(num_threads=3).near_miss_search(30, {3, 4}, 50) == \
        _explorer(num_threads=1).near_miss_search(30, {3, 4}, 50)


def test_near_miss_scan_reports_exact_hits():
    # at n = 2 the scan sees the Pythagorean triples as zero defects
    rows = scan_near_misses([4], [2], 0)
    assert rows == [(4, 3, 5, 2, 0)]


def test_near_miss_rejects_zero_defect():
    with pytest.raises(FermatlabDomainError):
        NearMiss(triple=FermatTriple(4, 3, 5), n=2, defect=0)


def test_conjecture1_experiment():
    report = _explorer().conjecture1_experiment(10, 20)
    assert len(report.rows) > 0
    assert all(row.excluded_ge3 for row in report.rows)
    pythagorean = [row for row in report.rows if (row.a, row.b, row.c) == (4, 3, 5)]
    assert len(pythagorean) == 1 and pythagorean[0].integer_exponent == 2
    assert abs(pythagorean[0].solved_n - 2.0) < 1e-12
    (row,) = [row for row in report.rows if (row.a, row.b, row.c) == (8, 6, 9)]
    assert row.nearest_integer == 3 and row.integer_exponent is None and 2.99 < row.solved_n < 3.0
    assert report.summary['all_excluded_ge3']


def test_conjecture1_empty_range():
    report = _explorer().conjecture1_experiment(2, 20)
    assert report.rows == []
    assert report.summary['triples'] == 0
