#!/usr/bin/env python

import sys
from functools import wraps

from .exceptions import FermatlabError


def safe_execute(error):
    """Re-raise anything that is not already a fermatlab error as ``error``."""
    def decorator_wrapper(function):
        @wraps(function)
        def wrapper(*args, **kwargs):
            try:
                return function(*args, **kwargs)
            except FermatlabError:
                raise
            except Exception:
                error_type, error_message, traceback = sys.exc_info()
                raise error(f'{error_type.__name__}: {error_message}').with_traceback(traceback)
        return wrapper
    return decorator_wrapper
