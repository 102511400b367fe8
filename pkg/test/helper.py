"""Shared fixtures for the RootLab test modules.

Every test module imports this first so the repository root is importable
when the suite is started from inside test/.
"""

import os
import signal
import sys
from contextlib import contextmanager

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from catalog import get_catalog_entry, load_catalog_datum  # noqa: E402
from config import set_settings  # noqa: E402

CERTIFY_SECONDS = 300


def reset_settings():
    """Drop settings a test installed; the next lookup reloads config.yaml."""
    set_settings(None)


def catalog(name, n=None):
    """Certified catalog datum, loaded within CERTIFY_SECONDS."""
    with time_limit(CERTIFY_SECONDS):
        return load_catalog_datum(name, n)


def named(name, n):
    """Named coweights of a catalog family, in internal coordinates."""
    return get_catalog_entry(name).named(n)


def write_file(directory, name, text):
    path = os.path.join(directory, name)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path


@contextmanager
def time_limit(seconds):
    """Fail the running test instead of hanging when a computation overruns."""
    if not hasattr(signal, "SIGALRM"):
        yield
        return

    def overrun(signum, frame):
        raise AssertionError(f"computation did not finish within {seconds}s")

    previous = signal.signal(signal.SIGALRM, overrun)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, previous)
