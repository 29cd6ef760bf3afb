#!/usr/bin/env python

import json


class ParserJSON(object):

    def __init__(self, json_file=None):
        self.json_file = json_file
        self.parsed_json = None

    def parse(self, json_file=None):
        if json_file is not None:
            self.json_file = json_file

        if self.json_file is None:
            from .defaults import default_configuration
            self.parsed_json = default_configuration
        else:
            with open(self.json_file) as content:
                self.parsed_json = json.load(content)

        if not isinstance(self.parsed_json, dict):
            raise TypeError(f'expected a JSON object at the top level of "{self.json_file}"')
        return self.parsed_json
