"""Exhaustive searches around the entropy of n p^2 versus n p and the system

    x + y = u + v,    x^x y^y = u^x v^y.

Both Diophantine scans run a float log-domain filter in a kernel
(:mod:`nument.kernels`) and confirm every survivor with exact integer
arithmetic, so the float filter only has to be conservative.
"""

from __future__ import annotations

import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, TextIO

from . import kernels
from .arith import Factorization, primes_below
from .entropy import integer_entropy
from .errors import DomainError, NumentError

#: Relative slack of the log-domain filter.
FILTER_MARGIN = 1e-6

_LOG2 = math.log(2)
_M = (1 << 61) - 1  # Mersenne prime modulus for the residue pre-check


@dataclass(frozen=True)
class GapPoint:
    s: int
    r: int
    value: float


@dataclass(frozen=True, order=True)
class SystemSolution:
    x: int
    y: int
    u: int
    v: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.u, self.v)


def gap_function(s: int, r: int) -> float:
    """log((s+r+2)/(s+r+1)) - 2 log 2 (r+1) / ((s+r+1)(s+r+2)), any s, r >= 0."""
    t = s + r
    return math.log((t + 2) / (t + 1)) - 2 * _LOG2 * (r + 1) / ((t + 1) * (t + 2))


def entropy_gap(s: int, r: int) -> float:
    """H(n p^2) - H(n p) for n with s squared and r - s simple prime factors."""
    if not 1 <= s <= r:
        raise DomainError(f"need 1 <= s <= r, got s={s}, r={r}")
    return gap_function(s, r)


def gap_witness(s: int, r: int) -> tuple[Factorization, Factorization]:
    """Explicit (n p, n p^2) for the entropy_gap cross-check."""
    primes = primes_below(8 * (r + 2) * 10)[: r + 1]
    if len(primes) < r + 1:
        raise NumentError("not enough primes for witness")
    base = [(q, 2) for q in primes[:s]] + [(q, 1) for q in primes[s:r]]
    fresh = primes[r]
    return (
        Factorization.from_factors(base + [(fresh, 1)]),
        Factorization.from_factors(base + [(fresh, 2)]),
    )


def witness_gap(s: int, r: int) -> float:
    np1, np2 = gap_witness(s, r)
    return integer_entropy(np2) - integer_entropy(np1)


def min_r_negative(s: int) -> int:
    """Smallest r >= s with entropy_gap(s, r) < 0.

    The search stops at 8s + 10; r >= (8s+5)/3 is already sufficient.
    """
    if s < 1:
        raise DomainError(f"need s >= 1, got {s}")
    for r in range(s, 8 * s + 11):
        if entropy_gap(s, r) < 0:
            return r
    raise AssertionError(f"no negative gap for s={s} below r={8 * s + 10}")


def sufficient_r(s: int) -> int:
    """ceil((8s + 5) / 3)."""
    return -(-(8 * s + 5) // 3)


def grid_points(s_max: int, r_max: int) -> Iterable[GapPoint]:
    for s in range(s_max + 1):
        for r in range(r_max + 1):
            yield GapPoint(s, r, gap_function(s, r))


def write_grid_csv(out: TextIO, s_max: int, r_max: int) -> int:
    """Write ``s,r,f`` rows (12 significant digits); returns the data-row count."""
    if s_max < 0 or r_max < 0:
        raise DomainError("grid bounds must be >= 0")
    out.write("s,r,f\n")
    rows = 0
    for pt in grid_points(s_max, r_max):
        out.write(f"{pt.s},{pt.r},{pt.value:.12g}\n")
        rows += 1
    return rows


def grid_csv(s_max: int, r_max: int) -> str:
    buf = io.StringIO()
    write_grid_csv(buf, s_max, r_max)
    return buf.getvalue()


def _map_ordered(fn, items, workers):
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(i) for i in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def is_system_solution(x: int, y: int, u: int, v: int) -> bool:
    """Exact check of x + y = u + v, x != u, x^x y^y = u^x v^y."""
    if x + y != u + v or x == u or v == 0:
        return False
    if v < 0 and y % 2:
        return False  # right-hand side negative
    w = abs(v)
    # residues that differ already prove inequality
    if pow(x, x, _M) * pow(y, y, _M) % _M != pow(u, x, _M) * pow(w, y, _M) % _M:
        return False
    return x**x * y**y == u**x * w**y


def scan_system(
    bound: int,
    allow_negative_v: bool = False,
    *,
    margin: float | None = FILTER_MARGIN,
    workers: int | None = None,
) -> list[SystemSolution]:
    """All solutions with x, y, u in [1, bound], in lexicographic order.

    ``margin=None`` disables the float filter and checks every triple exactly.
    """
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    workers = kernels.worker_count() if workers is None else workers

    def row(x):
        if margin is None:
            pairs = [(y, u) for y in range(1, bound + 1) for u in range(1, bound + 1)]
        else:
            pairs = kernels.system_row(x, bound, allow_negative_v, margin)
        found = []
        for y, u in pairs:
            v = x + y - u
            if v < 1 and not allow_negative_v:
                continue
            if is_system_solution(x, y, u, v):
                found.append(SystemSolution(x, y, u, v))
        return found

    rows = _map_ordered(row, range(1, bound + 1), workers)
    return sorted(sol for r in rows for sol in r)


def divergence_zero_scan(
    omega_budget: int,
    *,
    margin: float | None = FILTER_MARGIN,
    workers: int | None = None,
) -> list[tuple[int, int, int, int]]:
    """(a1, a2, b1, b2) >= 1 with a1 + a2 = b1 + b2 <= omega_budget and
    a1^a1 a2^a2 = b1^a1 b2^a2, lexicographically sorted."""
    if omega_budget < 2:
        raise DomainError(f"omega budget must be >= 2, got {omega_budget}")
    workers = kernels.worker_count() if workers is None else workers

    def row(total):
        if margin is None:
            pairs = [(a, b) for a in range(1, total) for b in range(1, total)]
        else:
            pairs = kernels.divergence_row(total, margin)
        found = []
        for a1, b1 in pairs:
            a2, b2 = total - a1, total - b1
            if pow(a1, a1, _M) * pow(a2, a2, _M) % _M != pow(b1, a1, _M) * pow(b2, a2, _M) % _M:
                continue
            if a1**a1 * a2**a2 == b1**a1 * b2**a2:
                found.append((a1, a2, b1, b2))
        return found

    rows = _map_ordered(row, range(2, omega_budget + 1), workers)
    return sorted(t for r in rows for t in r)
