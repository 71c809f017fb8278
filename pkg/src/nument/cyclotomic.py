"""Decomposition of rational primes in cyclotomic rings Z[xi_n].

For ``p`` prime write ``n = p**v * n'`` with ``p`` coprime to ``n'``.  Then
``p Z[xi_n] = (P_1 ... P_g)**e`` with ``e = phi(p**v)``, residue degree
``f = ord_{n'}(p)`` and ``g = phi(n') / f``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arith import euler_phi, is_prime, mult_order, primes_below, valuation
from .errors import (
    ConductorNotPrime,
    InvalidSplitCount,
    NumentError,
    RationalPartEqualsConductor,
)
from .ideals import IdealFactorization, Lambda, PrimeAbove, RationalInert, ideal_entropy


@dataclass(frozen=True)
class SplittingType:
    e: int
    f: int
    g: int
    n: int

    @property
    def phi(self) -> int:
        return self.e * self.f * self.g

    def as_dict(self) -> dict:
        return {"e": self.e, "f": self.f, "g": self.g, "phi": self.phi}


@dataclass(frozen=True)
class CyclotomicGeneratorSpec:
    """Generator ``prod(p**k) * (1 - xi)**lambda_exponent`` of an ideal of Z[xi_q]."""

    conductor: int
    rational_parts: tuple[tuple[int, int], ...] = ()
    lambda_exponent: int = 0

    def __post_init__(self):
        primes = [p for p, _ in self.rational_parts]
        if len(set(primes)) != len(primes):
            raise NumentError("rational primes must be distinct")
        if any(k < 1 for _, k in self.rational_parts):
            raise NumentError("rational exponents must be >= 1")
        if self.lambda_exponent < 0:
            raise NumentError("lambda exponent must be >= 0")


def _check_args(p: int, n: int) -> None:
    if not is_prime(p):
        raise NumentError(f"{p} is not prime")
    if n < 3:
        raise NumentError(f"conductor must be >= 3, got {n}")


def splitting_type(p: int, n: int) -> SplittingType:
    _check_args(p, n)
    v = valuation(p, n)
    rest = n // p**v
    e = euler_phi(p**v)
    f = 1 if rest == 1 else mult_order(p, rest)
    return SplittingType(e=e, f=f, g=euler_phi(rest) // f, n=n)


def splits_completely(p: int, n: int) -> bool:
    _check_args(p, n)
    return p % n == 1


def is_ramified(p: int, n: int) -> bool:
    _check_args(p, n)
    if p == 2:
        return n % 4 == 0
    return n % p == 0


def ideal_of_generator(spec: CyclotomicGeneratorSpec) -> IdealFactorization:
    q = spec.conductor
    if q < 3 or not is_prime(q):
        raise ConductorNotPrime(f"conductor {q} must be an odd prime")
    entries = []
    for p, k in spec.rational_parts:
        if p == q:
            raise RationalPartEqualsConductor(
                f"write {q}**{k} as (1-xi)**{k * (q - 1)} via lambda_exponent"
            )
        st = splitting_type(p, q)
        if st.g == 1:
            entries.append((RationalInert(p), k))
        else:
            entries.extend((PrimeAbove(p, i), k) for i in range(1, st.g + 1))
    if spec.lambda_exponent:
        entries.append((Lambda(), spec.lambda_exponent))
    return IdealFactorization(tuple(entries))


def primitive_root_prime(q: int, exclude: Iterable[int] = ()) -> int:
    """Smallest prime p != q whose residue generates (Z/q)^*."""
    exclude = set(exclude) | {q}
    for p in _prime_stream():
        if p not in exclude and mult_order(p, q) == q - 1:
            return p
    raise AssertionError("unreachable")


def _prime_stream():
    limit = 1 << 10
    start = 0
    while True:
        ps = primes_below(limit)
        yield from ps[start:]
        start = len(ps)
        limit *= 2


def primes_with_split_counts(q: int, split_counts: Sequence[int], exclude: Iterable[int] = ()) -> list[int]:
    """Distinct primes p_i (ascending search) with (q - 1) / ord_q(p_i) == split_counts[i]."""
    taken = set(exclude) | {q}
    chosen = []
    for s in split_counts:
        if s < 1 or (q - 1) % s:
            raise InvalidSplitCount(f"split count {s} does not divide {q - 1}")
        want = (q - 1) // s
        for p in _prime_stream():
            if p not in taken and mult_order(p, q) == want:
                chosen.append(p)
                taken.add(p)
                break
    return chosen


def lambda_shift_gap(q: int, split_counts: Sequence[int] = ()) -> tuple[float, float]:
    """Entropy change from moving one (1-xi) factor onto an inert prime.

    Builds ``I = p * q * p_1 ... p_r`` and ``J = p**2 * (1-xi)**(q-2) * p_1 ... p_r``
    in Z[xi_q], where ``p`` is a primitive root mod ``q`` (so inert) and ``p_i``
    splits into ``split_counts[i]`` primes.  Returns ``(H(J) - H(I), bound)``
    with ``bound = (q-1) log(q-1) / q - log(q/2)``.
    """
    if q < 5 or not is_prime(q):
        raise NumentError(f"q must be a prime >= 5, got {q}")
    for s in split_counts:
        if s < 1 or (q - 1) % s:
            raise InvalidSplitCount(f"split count {s} does not divide {q - 1}")
    inert = primitive_root_prime(q)
    others = [(p, 1) for p in primes_with_split_counts(q, split_counts, exclude=[inert])]
    ideal_i = ideal_of_generator(
        CyclotomicGeneratorSpec(q, ((inert, 1), *others), lambda_exponent=q - 1)
    )
    ideal_j = ideal_of_generator(
        CyclotomicGeneratorSpec(q, ((inert, 2), *others), lambda_exponent=q - 2)
    )
    gap = ideal_entropy(ideal_j) - ideal_entropy(ideal_i)
    bound = (q - 1) * math.log(q - 1) / q - math.log(q / 2)
    return gap, bound
