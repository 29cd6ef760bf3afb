#!/usr/bin/env python

from .exponent_solver import ExponentSolution, Conjecture1Row
from .exponent_solver import solve_exponent, integer_exponent, integer_exponent_exclusion, conjecture1_row
from .search import ExactSolution, NearMiss, arc_candidates, scan_flt, scan_near_misses, scan_conjecture1
from .explorer import Explorer, Conjecture1Report
