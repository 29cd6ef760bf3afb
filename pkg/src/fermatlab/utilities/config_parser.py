#!/usr/bin/env python

import os
import multiprocessing

from .exceptions import FermatlabSettingsError
from .logger import Logger
from .json_parser import ParserJSON
from .decorators import safe_execute
from .defaults import default_general_configuration
from .defaults import default_tolerance_configuration
from .defaults import bounds_presets, bounds_minimums, bounds_limits


THREADS_ENV_VAR = 'FERMATLAB_THREADS'


class Configuration(object):

    def __init__(self, me=''):
        self.me = me + ':'
        self.added_props = []

    def __str__(self):
        new_line = '%s\n' % self.me
        for prop in sorted(self.added_props):
            new_line += '--> %s:\t%s\n' % (prop, getattr(self, prop))
        return new_line

    def __contains__(self, prop):
        return prop in self.added_props

    def to_dict(self):
        return {prop: getattr(self, prop) for prop in sorted(self.added_props)}

    def add_attr(self, prop, attr):
        setattr(self, prop, attr)
        if prop not in self.added_props:
            self.added_props.append(prop)

    def get_attr(self, prop):
        return getattr(self, prop)


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


class ConfigParser(Logger):

    def __init__(self, config_file=None, config_dict=None):

        Logger.__init__(self, 'ConfigParser', verbosity=3)
        self.config_file = config_file
        self.config_dict = config_dict

    def _parse_general(self, provided_settings):
        self._check_known_keys('general', provided_settings, default_general_configuration)
        self.general = Configuration('general')
        for general_key, general_value in default_general_configuration.items():
            if general_key in provided_settings:
                general_value = provided_settings[general_key]
            if general_value in ['True', 'False']:
                general_value = general_value == 'True'
            self.general.add_attr(general_key, general_value)

        if self.general.verbosity not in Logger.VERBOSITY_LEVELS:
            raise FermatlabSettingsError(f'verbosity must be an integer between 0 and 5, got {self.general.verbosity!r}')
        if self.general.bounds not in bounds_presets:
            raise FermatlabSettingsError(f'unknown bounds preset "{self.general.bounds}". '
                                         f'Please choose from {", ".join(bounds_presets)}')
        if not _is_int(self.general.num_threads) or self.general.num_threads < 0:
            raise FermatlabSettingsError(f'num_threads must be a nonnegative integer, got {self.general.num_threads!r}')
        if not _is_int(self.general.random_seed):
            raise FermatlabSettingsError(f'random_seed must be an integer, got {self.general.random_seed!r}')
        if not _is_int(self.general.float_digits) or not 1 <= self.general.float_digits <= 17:
            raise FermatlabSettingsError(f'float_digits must be an integer in [1, 17], got {self.general.float_digits!r}')

        env_threads = os.environ.get(THREADS_ENV_VAR)
        if env_threads is not None and env_threads.strip() != '':
            try:
                num_threads = int(env_threads)
            except ValueError:
                raise FermatlabSettingsError(f'{THREADS_ENV_VAR} must be an integer, got "{env_threads}"')
            if num_threads < 0:
                raise FermatlabSettingsError(f'{THREADS_ENV_VAR} must be nonnegative, got {num_threads}')
            self.general.add_attr('num_threads', num_threads)

    def _parse_tolerances(self, provided_settings):
        self._check_known_keys('tolerances', provided_settings, default_tolerance_configuration)
        self.tolerances = Configuration('tolerances')
        for tol_key, tol_value in default_tolerance_configuration.items():
            if tol_key in provided_settings:
                tol_value = provided_settings[tol_key]
            if isinstance(tol_value, bool) or not isinstance(tol_value, (int, float)) or tol_value <= 0:
                raise FermatlabSettingsError(f'tolerance "{tol_key}" must be a positive number, got {tol_value!r}')
            self.tolerances.add_attr(tol_key, float(tol_value))

    def _parse_bounds(self, provided_settings):
        self.bounds = Configuration('bounds')
        for bound_key, bound_value in bounds_presets[self.general.bounds].items():
            self.bounds.add_attr(bound_key, bound_value)
        self.update_bounds(provided_settings)

    def update_bounds(self, overrides):
        """Applies bound overrides on top of the current bounds, validating each of them."""
        self._check_known_keys('bounds', overrides, bounds_minimums)
        for bound_key, bound_value in overrides.items():
            if not _is_int(bound_value):
                raise FermatlabSettingsError(f'bound "{bound_key}" must be an integer, got {bound_value!r}')
            if bound_value < bounds_minimums[bound_key]:
                raise FermatlabSettingsError(f'bound "{bound_key}" must be at least {bounds_minimums[bound_key]}, '
                                             f'got {bound_value}')
            self.bounds.add_attr(bound_key, bound_value)

    @staticmethod
    def _check_known_keys(section, provided_settings, reference):
        if not isinstance(provided_settings, dict):
            raise FermatlabSettingsError(f'section "{section}" must be a JSON object')
        unknown = sorted(set(provided_settings) - set(reference))
        if len(unknown) > 0:
            raise FermatlabSettingsError(f'unknown {section} setting(s): {", ".join(unknown)}')

    # ----------
    # Properties
    # ----------
    @property
    def settings(self):
        settings_dict = {}
        settings_dict['general'] = self.general.to_dict()
        settings_dict['tolerances'] = self.tolerances.to_dict()
        settings_dict['bounds'] = self.bounds.to_dict()
        return settings_dict

    @property
    def num_threads(self):
        num_threads = self.general.num_threads
        if num_threads == 0:
            return multiprocessing.cpu_count()
        return num_threads

    @property
    def exceeded_bounds(self):
        """Bounds above their desk-scale ceiling, as {key: (value, limit)}."""
        exceeded = {}
        for bound_key in sorted(self.bounds.added_props):
            value = self.bounds.get_attr(bound_key)
            if value > bounds_limits[bound_key]:
                exceeded[bound_key] = (value, bounds_limits[bound_key])
        return exceeded

    def get(self, attr):
        return self.general.get_attr(attr)

    def get_tol(self, attr):
        return self.tolerances.get_attr(attr)

    def get_bound(self, attr):
        return self.bounds.get_attr(attr)

    def _parse(self, config_dict):
        self.config = config_dict
        self._check_known_keys('configuration', self.config, {'general': None, 'tolerances': None, 'bounds': None})

        self._parse_general(self.config.get('general', {}))
        self.update_verbosity(self.general.verbosity)
        self._parse_tolerances(self.config.get('tolerances', {}))
        self._parse_bounds(self.config.get('bounds', {}))

    @safe_execute(FermatlabSettingsError)
    def parse_config_file(self, config_file=None):

        if config_file is not None:
            self.config_file = config_file

        self.json_parser = ParserJSON(json_file=self.config_file)
        self.config_dict = self.json_parser.parse()
        self._parse(self.config_dict)

    @safe_execute(FermatlabSettingsError)
    def parse_config_dict(self, config_dict=None):

        if config_dict is not None:
            self.config_dict = config_dict

        self._parse(self.config_dict)

    def parse(self):
        # test if both dict and file have been provided
        if self.config_dict is not None and self.config_file is not None:
            self.log('Found both configuration file and configuration dictionary. Will parse configuration from '
                     'dictionary and ignore file', 'WARNING')
            self.parse_config_dict(self.config_dict)
        elif self.config_dict is not None:
            self.parse_config_dict(self.config_dict)
        elif self.config_file is not None:
            self.parse_config_file(self.config_file)
        else:
            self.parse_config_dict({})
