"""Kernel selection.

The compiled extension is used when it was built; otherwise the numpy
fallback.  Set ``NUMENT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("NUMENT_PURE_PYTHON") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

system_row = _impl.system_row
divergence_row = _impl.divergence_row


def worker_count() -> int:
    """Worker cap from ``NUMENT_THREADS``, else the available parallelism."""
    raw = os.environ.get("NUMENT_THREADS")
    if raw:
        return max(1, int(raw))
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return os.cpu_count() or 1
