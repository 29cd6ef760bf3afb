#!/usr/bin/env python

import json
import multiprocessing

import pytest

from fermatlab import FermatLab, get_config_defaults
from fermatlab.utilities import ConfigParser, FermatlabSettingsError, Logger, parse_time, Stopwatch
from fermatlab.utilities.defaults import bounds_presets, bounds_limits


def _parse(config_dict=None, config_file=None):
    config = ConfigParser(config_file=config_file, config_dict=config_dict)
    config.parse()
    return config


def test_defaults():
    config = _parse()
    assert config.get('bounds') == 'default'
    assert config.get('verbosity') == 3
    assert config.get('random_seed') == 42
    assert config.get_tol('relative') == 1e-12
    assert config.settings['bounds'] == bounds_presets['default']
    assert config.exceeded_bounds == {}


def test_get_config_defaults(tmp_path):
    json_file = tmp_path / 'defaults.json'
    defaults = get_config_defaults(json_file=str(json_file))
    assert json.loads(json_file.read_text()) == defaults
    assert _parse(config_file=str(json_file)).settings == _parse().settings


def test_presets_stay_within_limits():
    for preset in bounds_presets.values():
        assert set(preset) == set(bounds_limits)
        for key, value in preset.items():
            assert value <= bounds_limits[key]


def test_bounds_preset_and_overrides():
    config = _parse({'general': {'bounds': 'small'}, 'bounds': {'flt_a_max': 80}})
    assert config.get_bound('flt_a_max') == 80
    assert config.get_bound('flt_n_max') == bounds_presets['small']['flt_n_max']


def test_exceeded_bounds():
    config = _parse({'bounds': {'conj1_a_max': 151, 'flt_a_max': 1000}})
    assert config.exceeded_bounds == {'conj1_a_max': (151, 150)}


def test_update_bounds():
    config = _parse({'general': {'verbosity': 0}})
    config.update_bounds({'flt_n_max': 2})
    assert config.get_bound('flt_n_max') == 2
    with pytest.raises(FermatlabSettingsError):
        config.update_bounds({'flt_n_max': 1})
    with pytest.raises(FermatlabSettingsError):
        config.update_bounds({'flt_a_max': 3.5})


@pytest.mark.parametrize('config_dict', [
    {'general': {'verbosity': 9}},
    {'general': {'bounds': 'huge'}},
    {'general': {'num_threads': -1}},
    {'general': {'float_digits': 0}},
    {'general': {'unknown_key': 1}},
    {'tolerances': {'relative': 0}},
    {'tolerances': {'angle_deg': 'wide'}},
    {'bounds': {'lattice_a_max': 0}},
    {'bounds': {'no_such_bound': 3}},
    {'parameters': []},
])
def test_invalid_settings(config_dict):
    with pytest.raises(FermatlabSettingsError):
        _parse(config_dict)


def test_missing_config_file(tmp_path):
    with pytest.raises(FermatlabSettingsError):
        _parse(config_file=str(tmp_path / 'missing.json'))


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv('FERMATLAB_THREADS', '3')
    assert _parse({'general': {'num_threads': 1}}).num_threads == 3
    monkeypatch.setenv('FERMATLAB_THREADS', '0')
    assert _parse().num_threads == multiprocessing.cpu_count()
    monkeypatch.setenv('FERMATLAB_THREADS', 'many')
    with pytest.raises(FermatlabSettingsError):
        _parse()


def test_silent_overrides_verbosity():
    lab = FermatLab(config_dict={'general': {'verbosity': 5}}, silent=True)
    assert lab.verbosity == 1
    assert lab.verbosity_levels == Logger.VERBOSITY_LEVELS[1]


def test_logger_levels(capsys):
    logger = Logger('test', verbosity=2)
    assert logger.log('hidden', 'STATS') is None
    _, message = logger.log('shown', 'WARNING')
    assert message == 'shown'
    captured = capsys.readouterr()
    assert captured.out == ''
    assert 'shown' in captured.err


def test_parse_time():
    assert parse_time(0.5) == '500.0 ms'
    assert parse_time(12.34) == '12.3 s'
    assert parse_time(125) == '2 min 5 s'
    with Stopwatch() as watch:
        pass
    assert watch.elapsed >= 0
    assert str(watch).endswith('ms')
