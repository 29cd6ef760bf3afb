#!/usr/bin/env python

from .json_writer import JsonWriter
from .csv_writer import CsvWriter
