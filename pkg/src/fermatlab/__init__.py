#!/usr/bin/env python

from ._version import __version__
from .fermatlab import FermatLab
from .utilities.defaults import get_config_defaults
