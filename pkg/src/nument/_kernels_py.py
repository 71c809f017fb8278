"""Pure-Python (numpy) versions of the scan kernels.

Each kernel returns the candidates that survive the floating-point log-domain
filter for one value of the outer loop variable; exact confirmation happens
in :mod:`nument.search`.
"""

import numpy as np


def _log_table(size):
    table = np.zeros(size, dtype=np.float64)
    table[1:] = np.log(np.arange(1, size, dtype=np.float64))
    return table


def system_row(x, bound, allow_negative, rel_margin):
    """(y, u) in [1, bound]^2 with u != x and |x log x + y log y - x log u - y log|v|| small."""
    logs = _log_table(2 * bound + 2)
    y = np.arange(1, bound + 1)[:, None]
    u = np.arange(1, bound + 1)[None, :]
    v = x + y - u
    ok = (u != x) & ((v != 0) if allow_negative else (v >= 1))
    lhs = x * logs[x] + y * logs[y]
    rhs = x * logs[u] + y * logs[np.abs(v)]
    slack = rel_margin * np.maximum(lhs, 1.0)
    hit = ok & (np.abs(lhs - rhs) <= slack)
    ys, us = np.nonzero(hit)
    return [(int(a) + 1, int(b) + 1) for a, b in zip(ys, us)]


def divergence_row(total, rel_margin):
    """(a1, b1) with a1 + a2 = b1 + b2 = total and a1 log(a1/b1) + a2 log(a2/b2) small."""
    logs = _log_table(total + 1)
    a1 = np.arange(1, total)[:, None]
    b1 = np.arange(1, total)[None, :]
    a2 = total - a1
    b2 = total - b1
    lhs = a1 * logs[a1] + a2 * logs[a2]
    rhs = a1 * logs[b1] + a2 * logs[b2]
    hit = np.abs(lhs - rhs) <= rel_margin * np.maximum(lhs, 1.0)
    xs, ys = np.nonzero(hit)
    return [(int(a) + 1, int(b) + 1) for a, b in zip(xs, ys)]
