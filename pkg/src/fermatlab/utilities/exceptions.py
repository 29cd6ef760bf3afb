#!/usr/bin/env python

import sys


class FermatlabError(Exception):

    name = 'FermatlabError'

    def __init__(self, message):
        Exception.__init__(self, message)
        self.message = message

    def report(self, stream=None):
        stream = sys.stderr if stream is None else stream
        stream.write('\x1b[0;31m%s: %s\x1b[0m\n' % (self.name, self.message))

    def to_dict(self):
        return {'type': self.name, 'message': self.message}


class FermatlabDomainError(FermatlabError, ValueError):
    name = 'FermatlabDomainError'


class FermatlabOrderingError(FermatlabDomainError):
    name = 'FermatlabOrderingError'


class FermatlabNonPrimitiveError(FermatlabDomainError):
    name = 'FermatlabNonPrimitiveError'

    def __init__(self, message, gcd=None):
        FermatlabDomainError.__init__(self, message)
        self.gcd = gcd

    def to_dict(self):
        info = FermatlabDomainError.to_dict(self)
        info['gcd'] = self.gcd
        return info


class FermatlabClassificationError(FermatlabDomainError):
    name = 'FermatlabClassificationError'


class FermatlabGeometryError(FermatlabDomainError):
    name = 'FermatlabGeometryError'


class FermatlabSettingsError(FermatlabError):
    name = 'FermatlabSettingsError'


class FermatlabBoundsError(FermatlabError):
    name = 'FermatlabBoundsError'


class FermatlabIOError(FermatlabError):
    name = 'FermatlabIOError'


class FermatlabSearchError(FermatlabError):
    name = 'FermatlabSearchError'
