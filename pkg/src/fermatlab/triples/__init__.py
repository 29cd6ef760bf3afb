#!/usr/bin/env python

from .triples import FormVariant, FermatTriple, FormTag, PythParam
from .triples import make_fermat_triple, classify_form, pyth_from_param
from .triples import enum_primitive_pythagorean, scan_primitive_pythagorean, is_pythagorean
