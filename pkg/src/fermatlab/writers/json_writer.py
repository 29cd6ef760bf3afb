#!/usr/bin/env python

import json
import math
import sys
from enum import Enum
from fractions import Fraction

import numpy as np

from fermatlab.utilities import Logger, safe_execute, FermatlabIOError


class JsonWriter(Logger):

    def __init__(self, float_digits=12, verbosity=3):
        Logger.__init__(self, 'JsonWriter', verbosity=verbosity)
        self.float_digits = float_digits

    def clean(self, content):
        """Turns reports, enums and numpy scalars into plain JSON values with floats at fixed precision."""
        if hasattr(content, 'to_dict'):
            return self.clean(content.to_dict())
        if isinstance(content, dict):
            return {str(key): self.clean(value) for key, value in content.items()}
        if isinstance(content, (list, tuple)):
            return [self.clean(value) for value in content]
        if isinstance(content, Enum):
            return content.value
        if isinstance(content, np.generic):
            return self.clean(content.item())
        if isinstance(content, Fraction):
            return str(content)
        if isinstance(content, bool) or content is None or isinstance(content, (int, str)):
            return content
        if isinstance(content, float):
            if math.isnan(content):
                return None
            if math.isinf(content):
                return 'inf' if content > 0 else '-inf'
            return float(f'{content:.{self.float_digits}g}')
        return str(content)

    def dumps(self, content):
        return json.dumps(self.clean(content), indent=4, separators=(',', ': ')) + '\n'

    def write(self, content, outfile=None):
        formatted_string = self.dumps(content)
        if outfile is None or outfile == '-':
            sys.stdout.write(formatted_string)
            sys.stdout.flush()
            return formatted_string
        self._write_file(formatted_string, outfile)
        self.log(f'wrote JSON to {outfile}', 'INFO')
        return formatted_string

    @staticmethod
    @safe_execute(FermatlabIOError)
    def _write_file(formatted_string, outfile):
        with open(outfile, 'w', encoding='utf-8', newline='\n') as content:
            content.write(formatted_string)
