#!/usr/bin/env python

from .decorators      import safe_execute
from .defaults        import default_general_configuration
from .defaults        import default_tolerance_configuration
from .defaults        import bounds_presets, bounds_limits, bounds_minimums
from .defaults        import get_config_defaults

from .exceptions      import FermatlabError
from .exceptions      import FermatlabDomainError
from .exceptions      import FermatlabOrderingError
from .exceptions      import FermatlabNonPrimitiveError
from .exceptions      import FermatlabClassificationError
from .exceptions      import FermatlabGeometryError
from .exceptions      import FermatlabSettingsError
from .exceptions      import FermatlabBoundsError
from .exceptions      import FermatlabIOError
from .exceptions      import FermatlabSearchError

from .logger          import Logger

from .json_parser     import ParserJSON
from .config_parser   import ConfigParser, Configuration

from .infos import parse_time, peak_memory_mb, Stopwatch
