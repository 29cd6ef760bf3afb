#!/usr/bin/env python

import json

# =============================
# Default general configuration
# =============================
default_general_configuration = {
    'num_threads':    0,          # worker processes for sweeps, 0 = one per CPU
    'random_seed':    42,         # seed for every randomized property sample
    'bounds':         'default',  # bounds preset, options are "small", "default" or "large"
    'float_digits':   12,         # significant digits of floats in CSV/JSON output
    # verbosity level, from 0 to 5. 0: FATAL, 1: ERROR, 2: WARNING, 3: STATS, 4: INFO, 5: DEBUG
    'verbosity':      3,
}

# ===============================
# Default tolerance configuration
# ===============================
default_tolerance_configuration = {
    'relative':         1e-12,  # relative tolerance of any floating comparison
    'angle_deg':        1e-9,   # slack in degrees on angle bounds
    'bisection_width':  1e-13,  # final bracket width of the exponent solver
    'right_angle_n':    1e-12,  # |n - 2| below which a triangle is Right
}

# =============
# Sweep bounds
# =============
bounds_presets = {
    'small': {
        'parity_c_max':             40,
        'parity_n_max':             5,
        'trichotomy_samples':       200,
        'trichotomy_ab_max':        50,
        'trichotomy_n_max':         5,
        'rational_denominator_max': 20,
        'pyth_hyp_limit':           200,
        'eq12_exponent_max':        12,
        'eq12_q_max':               16,
        'min_gap_c_max':            49,
        'min_gap_m_max':            4,
        'residue_ab_max':           49,
        'residue_n_max':            8,
        'frac_samples':             200,
        'frac_ab_max':              49,
        'frac_n_max':               5,
        'power_form_k_max':         16,
        'power_form_d_max':         99,
        'geometry_grid':            6,
        'lattice_a_max':            1000,
        'flt_a_max':                60,
        'flt_n_max':                10,
        'conj1_a_max':              15,
        'conj1_n_max':              10,
    },
    'default': {
        'parity_c_max':             100,
        'parity_n_max':             6,
        'trichotomy_samples':       1000,
        'trichotomy_ab_max':        100,
        'trichotomy_n_max':         6,
        'rational_denominator_max': 50,
        'pyth_hyp_limit':           1000,
        'eq12_exponent_max':        20,
        'eq12_q_max':               64,
        'min_gap_c_max':            99,
        'min_gap_m_max':            6,
        'residue_ab_max':           99,
        'residue_n_max':            12,
        'frac_samples':             1000,
        'frac_ab_max':              99,
        'frac_n_max':               7,
        'power_form_k_max':         40,
        'power_form_d_max':         999,
        'geometry_grid':            10,
        'lattice_a_max':            10000,
        'flt_a_max':                200,
        'flt_n_max':                20,
        'conj1_a_max':              30,
        'conj1_n_max':              20,
    },
    'large': {
        'parity_c_max':             160,
        'parity_n_max':             8,
        'trichotomy_samples':       5000,
        'trichotomy_ab_max':        1000,
        'trichotomy_n_max':         8,
        'rational_denominator_max': 100,
        'pyth_hyp_limit':           5000,
        'eq12_exponent_max':        40,
        'eq12_q_max':               256,
        'min_gap_c_max':            299,
        'min_gap_m_max':            8,
        'residue_ab_max':           299,
        'residue_n_max':            16,
        'frac_samples':             5000,
        'frac_ab_max':              999,
        'frac_n_max':               11,
        'power_form_k_max':         64,
        'power_form_d_max':         9999,
        'geometry_grid':            20,
        'lattice_a_max':            100000,
        'flt_a_max':                400,
        'flt_n_max':                30,
        'conj1_a_max':              60,
        'conj1_n_max':              30,
    },
}

# smallest admissible value of every bound, anything below is a usage error
bounds_minimums = {key: 1 for key in bounds_presets['default']}
bounds_minimums.update({
    'parity_c_max':       3,
    'parity_n_max':       3,
    'trichotomy_n_max':   3,
    'pyth_hyp_limit':     5,
    'eq12_exponent_max':  2,
    'min_gap_c_max':      3,
    'min_gap_m_max':      2,
    'residue_ab_max':     1,
    'residue_n_max':      2,
    'frac_n_max':         3,
    'power_form_k_max':   0,
    'geometry_grid':      2,
    'flt_a_max':          2,
    'flt_n_max':          2,   # 2 switches the sweep to validation mode
    'conj1_a_max':        2,
    'conj1_n_max':        3,
})

# desk-scale ceilings, claims reading a bound above its ceiling are left Unchecked
bounds_limits = {
    'parity_c_max':             400,
    'parity_n_max':             16,
    'trichotomy_samples':       10**5,
    'trichotomy_ab_max':        10**6,
    'trichotomy_n_max':         16,
    'rational_denominator_max': 1000,
    'pyth_hyp_limit':           20000,
    'eq12_exponent_max':        256,
    'eq12_q_max':               4096,
    'min_gap_c_max':            2001,
    'min_gap_m_max':            16,
    'residue_ab_max':           2001,
    'residue_n_max':            32,
    'frac_samples':             10**5,
    'frac_ab_max':              10**6,
    'frac_n_max':               31,
    'power_form_k_max':         512,
    'power_form_d_max':         10**5,
    'geometry_grid':            60,
    'lattice_a_max':            10**6,
    'flt_a_max':                1000,
    'flt_n_max':                60,
    'conj1_a_max':              150,
    'conj1_n_max':              60,
}

# =============================
# Default overall configuration
# =============================
default_configuration = {
    'general': {
        key: default_general_configuration[key] for key in default_general_configuration.keys()
    },
    'tolerances': {
        key: default_tolerance_configuration[key] for key in default_tolerance_configuration.keys()
    },
    'bounds': {},  # overrides on top of the preset named in general/bounds
}


def get_config_defaults(json_file=None):
    """Returns the default configuration of fermatlab.

    Parameters
    ----------
    json_file: str
        Whether to write the default configuration to a json file with this name. Default is None, i.e.
        do not save json file.

    Returns
    -------
    config : dict
        The default configuration, with the bounds of the default preset spelled out.
    """
    config = {
        'general': dict(default_configuration['general']),
        'tolerances': dict(default_configuration['tolerances']),
        'bounds': dict(bounds_presets[default_general_configuration['bounds']]),
    }
    if json_file is not None:
        with open(json_file, 'w') as f:
            json.dump(config, f, indent=4)

    return config
