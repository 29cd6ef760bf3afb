#!/usr/bin/env python

from dataclasses import dataclass, field
from multiprocessing import Process, Manager
from typing import List

from fermatlab.triples import FermatTriple
from fermatlab.utilities import Logger, Stopwatch, FermatlabDomainError, FermatlabSearchError, ConfigParser
from .exponent_solver import Conjecture1Row, solve_exponent
from .search import ExactSolution, NearMiss, scan_flt, scan_near_misses, scan_conjecture1


@dataclass
class Conjecture1Report:
    a_max: int
    n_max: int
    rows: List[Conjecture1Row] = field(default_factory=list)

    @property
    def summary(self):
        distances = [row.distance for row in self.rows if row.integer_exponent is None]
        return {'triples': len(self.rows),
                'integer_exponent_rows': sum(1 for row in self.rows if row.integer_exponent is not None),
                'all_excluded_ge3': all(row.excluded_ge3 for row in self.rows),
                'min_distance_to_integer': min(distances) if len(distances) > 0 else None}

    def to_dict(self):
        return {'a_max': self.a_max, 'n_max': self.n_max, 'summary': self.summary,
                'rows': [row.to_dict() for row in self.rows]}


def _scan_worker(scan, a_values, args, return_dict=None, return_index=0):
    result = scan(a_values, *args)
    if return_dict.__class__.__name__ == 'DictProxy':
        return_dict[return_index] = result
    return result


def _describe_chunk(chunk):
    if len(chunk) <= 4:
        return str(list(chunk))
    return f'[{chunk[0]}, {chunk[1]}, ..., {chunk[-1]}] ({len(chunk)} values)'


class Explorer(Logger):
    """Exhaustive exact searches over a-values, optionally split across processes."""

    def __init__(self, config=None):

        if config is None:
            config = ConfigParser()
            config.parse()
        self.config = config

        self.verbosity = self.config.get('verbosity')
        Logger.__init__(self, 'Explorer', verbosity=self.verbosity)

        self.num_threads = self.config.num_threads
        self.width = self.config.get_tol('bisection_width')
        self.scan_stats = {}
        self.counterexamples = []

    def _partition(self, a_values):
        num_chunks = max(1, min(self.num_threads, len(a_values)))
        # interleaved so that every chunk gets a share of the expensive large a
        return [a_values[idx::num_chunks] for idx in range(num_chunks)]

    def _run_partitioned(self, scan, a_values, *args):
        chunks = self._partition(list(a_values))
        if len(chunks) > 1:
            with Manager() as manager:
                return_dict = manager.dict()
                processes = []
                for idx, chunk in enumerate(chunks):
                    process = Process(target=_scan_worker, args=(scan, chunk, args, return_dict, idx))
                    processes.append(process)
                    process.start()
                for process in processes:
                    process.join()
                for idx, process in enumerate(processes):
                    if process.exitcode != 0 or idx not in return_dict:
                        raise FermatlabSearchError(f'{scan.__name__} worker {idx} exited with code {process.exitcode} '
                                                   f'on a = {_describe_chunk(chunks[idx])}')
                return [return_dict[idx] for idx in range(len(chunks))]
        return [_scan_worker(scan, chunk, args) for chunk in chunks]

    def solve(self, t):
        solution = solve_exponent(t, width=self.width)
        self.log(f'solved {tuple(t)}: n = {solution.n!r} after {solution.iterations} iterations', 'DEBUG')
        return solution

    def flt_brute_force(self, a_max, n_max, validation=False):
        """Every exact solution with b <= a <= a_max, a < c < a*sqrt(2) and n in [3, n_max].

        With ``validation`` the scan starts at n = 2 and the primitive Pythagorean triples are expected hits.
        """
        n_min = 2 if validation else 3
        if a_max < 2:
            raise FermatlabDomainError(f'a_max must be at least 2, got {a_max}')
        if n_max < n_min:
            raise FermatlabDomainError(f'n_max must be at least {n_min}, got {n_max}')

        with Stopwatch() as watch:
            results = self._run_partitioned(scan_flt, range(1, a_max + 1), n_min, n_max)
        hits = sorted(hit for chunk_hits, _ in results for hit in chunk_hits)
        self.scan_stats = {'candidates': sum(stats['candidates'] for _, stats in results),
                           'gcd_pruned_pairs': sum(stats['gcd_pruned_pairs'] for _, stats in results)}

        solutions = [ExactSolution(triple=FermatTriple(a, b, c), n=n) for a, b, c, n in hits]
        self.log(f'scanned {self.scan_stats["candidates"]} candidates (a <= {a_max}, {n_min} <= n <= {n_max}) '
                 f'in {watch}, found {len(solutions)} solutions', 'STATS')
        for solution in solutions:
            if solution.n >= 3:
                self.counterexamples.append(solution)
                self.log(f'exact solution {tuple(solution.triple)} at n={solution.n}', 'ERROR')
        return solutions

    def near_miss_search(self, a_max, n_set, defect_cap):
        """Primitive triples with b <= a <= a_max and exact defect at most ``defect_cap``, sorted by defect then a."""
        n_set = sorted(set(n_set))
        if a_max < 2:
            raise FermatlabDomainError(f'a_max must be at least 2, got {a_max}')
        if len(n_set) == 0 or n_set[0] < 3:
            raise FermatlabDomainError(f'exponents must be at least 3, got {n_set}')
        if defect_cap < 0:
            raise FermatlabDomainError(f'defect cap must be nonnegative, got {defect_cap}')

        with Stopwatch() as watch:
            results = self._run_partitioned(scan_near_misses, range(1, a_max + 1), n_set, defect_cap)
        rows = sorted((row for chunk in results for row in chunk), key=lambda row: (row[4], row[0], row[1], row[2],
                                                                                   row[3]))
        near_misses = []
        for a, b, c, n, defect in rows:
            if defect == 0:
                solution = ExactSolution(triple=FermatTriple(a, b, c), n=n)
                self.counterexamples.append(solution)
                self.log(f'exact solution {(a, b, c)} at n={n}', 'ERROR')
                continue
            near_misses.append(NearMiss(triple=FermatTriple(a, b, c), n=n, defect=defect))
        self.log(f'found {len(near_misses)} near misses with defect <= {defect_cap} in {watch}', 'STATS')
        return near_misses

    def conjecture1_experiment(self, a_max, n_max):
        """Solved real exponent and exact integer-exponent verdict for every primitive triple in the arc."""
        if n_max < 3:
            raise FermatlabDomainError(f'n_max must be at least 3, got {n_max}')
        with Stopwatch() as watch:
            results = self._run_partitioned(scan_conjecture1, range(1, max(a_max, 0) + 1), n_max, self.width)
        rows = sorted((row for chunk in results for row in chunk), key=lambda row: (row.a, row.b, row.c))
        report = Conjecture1Report(a_max=a_max, n_max=n_max, rows=rows)
        self.log(f'solved {len(rows)} exponents in {watch}', 'STATS')
        return report
