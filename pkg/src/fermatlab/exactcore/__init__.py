#!/usr/bin/env python

from .exactcore import Natural, Ratio, TwoAdicForm, NthRoot
from .exactcore import gcd3, two_adic_split, int_nth_root, pow_big
from .exactcore import is_perfect_square, is_perfect_power
from .exactcore import ratio, ratio_is_integer, rational_root_search
