#!/usr/bin/env python

from .geometry import TriangleShape, LatticeCount, LimitShape
from .geometry import c_of_n, theta_angle, classify_triangle, c_bounds_hold
from .geometry import lattice_count_on_arc, sqrt2_lattice_count, small_b_excludes_integer_c, limit_shape
from .sweep import SPoint, grid_axis, sweep_emit
