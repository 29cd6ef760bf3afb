#!/usr/bin/env python

import resource
import sys
import time


def parse_time(elapsed):
    """Human readable duration for a number of seconds."""
    if elapsed <= 1.0:
        return f"{elapsed * 1000.:.1f} ms"
    if elapsed < 60.0:
        return f"{elapsed:.1f} s"
    minutes, seconds = divmod(elapsed, 60)
    return f"{minutes:.0f} min {seconds:.0f} s"


def peak_memory_mb():
    # ru_maxrss is in bytes on MacOS and in kilobytes on Linux
    max_rss = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    if sys.platform == 'darwin':
        return max_rss / 1e6
    return max_rss / 1e3


class Stopwatch:
    """Context manager timing a block; ``str(watch)`` gives the formatted duration."""

    def __init__(self):
        self.start = None
        self.elapsed = 0.0

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc_info):
        self.elapsed = time.perf_counter() - self.start
        return False

    def __str__(self):
        return parse_time(self.elapsed)
