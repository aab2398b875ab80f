"""Process-wide switch for the expensive invariant checks.

Enabled by ``MOILFP_DEBUG=1`` in the environment or :func:`set_debug`.
"""
import os

from .errors import InvariantError

ENABLED = os.environ.get("MOILFP_DEBUG", "") not in ("", "0")


def set_debug(flag=True):
    global ENABLED
    ENABLED = bool(flag)


def check(cond, message):
    if not cond:
        raise InvariantError(message)
