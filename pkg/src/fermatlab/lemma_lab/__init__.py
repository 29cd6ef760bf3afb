#!/usr/bin/env python

from .predicates import ParityProfile, RootKind, RealnessVerdict, RealPowerForm
from .predicates import parity_profile, parity_consistent, root_verdict, third_element_verdict
from .predicates import two_adic_as_power_of_two

from .identities import Eq12Branch, Eq12Case, FracQuotient
from .identities import eq12_evaluate, eq12_case, pq_dominance, min_gap_holds
from .identities import frac_reduction_quotient, frac_reduction_check, even_power_sum_residue
