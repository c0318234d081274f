"""Numerical core: compiled stepper with a pure-Python fallback.

The compiled extension (helfrich._kernel._speed, built from _speed.pyx) is
preferred; the pure backend is selected when the extension is missing or the
HELFRICH_PURE environment variable is set to a non-empty value.
"""

import os

from . import pure

ST_SIGMA_MAX = pure.ST_SIGMA_MAX
ST_EV_Z = pure.ST_EV_Z
ST_EV_COSPHI = pure.ST_EV_COSPHI
ST_EV_RTARGET = pure.ST_EV_RTARGET
ST_R_FLOOR = pure.ST_R_FLOOR
ST_BLOWUP = pure.ST_BLOWUP
ST_STALL = pure.ST_STALL
ST_MAXSTEPS = pure.ST_MAXSTEPS


def _select():
    if os.environ.get("HELFRICH_PURE"):
        return pure, "pure"
    try:
        from . import _speed
    except ImportError:
        return pure, "pure"
    return _speed, "compiled"


backend, backend_name = _select()


def get_backend(name=None):
    """Backend module by name ("compiled" or "pure"); default = selected."""
    if name is None:
        return backend
    if name == "pure":
        return pure
    if name == "compiled":
        from . import _speed
        return _speed
    raise ValueError(f"unknown backend {name!r}")
