#!/usr/bin/env python

from typing import Dict

from .audit import AuditRunner
from .explorer import Explorer, integer_exponent_exclusion
from .geometry import c_bounds_hold, lattice_count_on_arc, sqrt2_lattice_count, sweep_emit
from .lemma_lab import parity_profile, parity_consistent, root_verdict
from .triples import classify_form, make_fermat_triple, enum_primitive_pythagorean, is_pythagorean
from .utilities import ConfigParser, Logger, FermatlabDomainError, FermatlabClassificationError


GEOMETRY_COLUMNS = ['a', 'b', 'n', 'c', 'theta_deg', 'shape', 'in_S']
LATTICE_COLUMNS = ['a', 'n_min', 'count', 'bound', 'count_sqrt2']
NEARMISS_COLUMNS = ['a', 'b', 'c', 'n', 'defect']
PYTHAGOREAN_COLUMNS = ['leg1', 'leg2', 'hyp']


class FermatLab(Logger):

    def __init__(self, config_file: str = None, config_dict: Dict = None, silent: bool = False) -> None:
        """Set up fermatlab from a config file or dict.

        If both a config file and a config dict are provided, the file is ignored. Without either, the defaults
        of ``fermatlab.utilities.defaults`` apply.

        :param config_file: path to a JSON configuration file
        :param config_dict: configuration dictionary
        :param silent: only report errors. Overrides the ``verbosity`` setting of the configuration.
        """
        self.config = ConfigParser(config_file, config_dict)
        self.config.parse()

        if silent is True:
            self.config.general.add_attr('verbosity', 1)
        self.verbosity = self.config.get('verbosity')
        Logger.__init__(self, 'FermatLab', verbosity=self.verbosity)

        self.explorer = Explorer(self.config)

    def update_bounds(self, **overrides):
        """Overrides individual sweep bounds, e.g. ``update_bounds(flt_a_max=100)``."""
        self.config.update_bounds({key: value for key, value in overrides.items() if value is not None})

    # -----
    # audit
    # -----
    def audit(self, seed=None):
        self.log_chapter('Audit', line='=', style='bold #d9ed92')
        runner = AuditRunner(self.config, seed=seed)
        report = runner.run()
        self.log(f'audit finished with exit status {report.exit_status}', 'STATS')
        return report

    # ----------------
    # single instances
    # ----------------
    def check(self, a, b, c, n):
        """Every applicable predicate on one (a, b, c, n).

        Returns
        -------
        bundle : dict
            ``bundle['triple']['valid']`` is False when the inputs violate the triple assumptions; the violated
            assumption is named in ``bundle['triple']['violation']``.
        """
        for name, value in zip('abcn', (a, b, c, n)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise FermatlabDomainError(f'{name} must be a positive integer, got {value!r}')

        raw = (a, b, c)
        bundle = {'input': {'a': a, 'b': b, 'c': c, 'n': n},
                  'parity_profile': parity_profile(raw).value,
                  'parity_consistent': parity_consistent(raw, n),
                  'pythagorean': is_pythagorean(a, b, c),
                  'defect': c ** n - a ** n - b ** n,
                  'c_bounds': c_bounds_hold(max(a, b), c),
                  'root_verdict': str(root_verdict(a, b, n)) if n >= 2 else None}

        try:
            t = make_fermat_triple(a, b, c)
        except FermatlabDomainError as error:
            bundle['triple'] = {'valid': False, 'violation': error.to_dict()}
            self.log(f'{raw} is not a valid triple: {error.message}', 'WARNING')
            return bundle

        bundle['triple'] = {'valid': True, 'a': t.a, 'b': t.b, 'c': t.c}
        try:
            tag = classify_form(t)
            bundle['form'] = {'variant': tag.variant.value, 'k': tag.two_adic.k, 'd': tag.two_adic.d}
        except FermatlabClassificationError as error:
            bundle['form'] = {'variant': None, 'reason': error.message}

        solution = self.explorer.solve(t)
        bundle['solved_n'] = solution.n
        bundle['relative_residual'] = solution.relative_residual
        n_max = max(n, self.config.get_bound('conj1_n_max'))
        bundle['integer_exponent_exclusion'] = {'n_max': n_max, 'excluded': integer_exponent_exclusion(t, n_max)}
        return bundle

    def solve(self, a, b, c):
        return self.explorer.solve(make_fermat_triple(a, b, c))

    def pyth(self, hyp_limit):
        return [dict(zip(PYTHAGOREAN_COLUMNS, triple)) for triple in enum_primitive_pythagorean(hyp_limit)]

    # ------
    # sweeps
    # ------
    def bruteforce(self, a_max, n_max, validation=False):
        return self.explorer.flt_brute_force(a_max, n_max, validation=validation)

    def sweep_geometry(self, a_range, b_range, n_range, step):
        points = sweep_emit(a_range, b_range, n_range, step, right_angle_tol=self.config.get_tol('right_angle_n'))
        self.log(f'emitted {len(points)} geometry points', 'STATS')
        return [point.to_dict() for point in points]

    def sweep_lattice(self, a_min, a_max, n_min):
        if a_min < 1 or a_max < a_min:
            raise FermatlabDomainError(f'need 1 <= a_min <= a_max, got {a_min} and {a_max}')
        rows = []
        for a in range(a_min, a_max + 1):
            count, bound = lattice_count_on_arc(a, n_min)
            rows.append({'a': a, 'n_min': n_min, 'count': count, 'bound': bound,
                         'count_sqrt2': sqrt2_lattice_count(a)})
        return rows

    def sweep_nearmiss(self, a_max, n_set, defect_cap):
        return [near_miss.to_dict() for near_miss in self.explorer.near_miss_search(a_max, n_set, defect_cap)]

    def sweep_conjecture1(self, a_max, n_max):
        return self.explorer.conjecture1_experiment(a_max, n_max)
