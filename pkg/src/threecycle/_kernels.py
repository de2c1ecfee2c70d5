"""Import-time selection of the kernel backend.

The compiled extension is preferred; the pure-Python twin is used when the
extension is absent (no compiler at install time) or when the environment
variable THREECYCLE_PURE_PYTHON is set to a non-empty value.
"""

from __future__ import annotations

import os

from threecycle import _pykernels

if os.environ.get("THREECYCLE_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from threecycle import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND: str = _impl.BACKEND
ORIENT_231: int = _impl.ORIENT_231
ORIENT_312: int = _impl.ORIENT_312
PROFILE_PATTERNS = _impl.PROFILE_PATTERNS

contains_pattern3 = _impl.contains_pattern3
count_avoiders = _impl.count_avoiders
avoidance_profile = _impl.avoidance_profile
h_of_tset = _impl.h_of_tset
