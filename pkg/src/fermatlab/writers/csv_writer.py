#!/usr/bin/env python

import math
import sys

import pandas as pd

from fermatlab.utilities import Logger, safe_execute, FermatlabIOError


class CsvWriter(Logger):

    def __init__(self, float_digits=12, verbosity=3):
        Logger.__init__(self, 'CsvWriter', verbosity=verbosity)
        self.float_digits = float_digits

    def _format(self, value):
        if isinstance(value, float):
            return '' if math.isnan(value) else f'{value:.{self.float_digits}g}'
        return value

    def to_frame(self, rows, columns):
        """DataFrame with the requested column order; floats are pre-rendered at fixed precision."""
        records = [{column: self._format(row[column]) for column in columns} for row in rows]
        return pd.DataFrame(records, columns=columns)

    def dumps(self, rows, columns):
        return self.to_frame(rows, columns).to_csv(index=False, lineterminator='\n')

    def write(self, rows, columns, outfile=None):
        frame = self.to_frame(rows, columns)
        if outfile is None or outfile == '-':
            formatted_string = frame.to_csv(index=False, lineterminator='\n')
            sys.stdout.write(formatted_string)
            sys.stdout.flush()
        else:
            self._write_file(frame, outfile)
            self.log(f'wrote {len(frame)} rows to {outfile}', 'INFO')
        return frame

    @staticmethod
    @safe_execute(FermatlabIOError)
    def _write_file(frame, outfile):
        frame.to_csv(outfile, index=False, lineterminator='\n', encoding='utf-8')
