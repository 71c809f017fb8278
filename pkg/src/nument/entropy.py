"""Shannon entropy, Kullback-Leibler divergence, and their integer versions.

Distributions are held as exact :class:`~fractions.Fraction` vectors so that
"sums to one" is a hard invariant; logarithms (natural) are only taken when a
value is evaluated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .arith import Factorization, factorize
from .errors import LengthMismatch, NumentError, OmegaMismatch, UnitInput


@dataclass(frozen=True)
class ProbabilityVector:
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.entries:
            raise NumentError("empty probability vector")
        if any(not 0 < p <= 1 for p in self.entries):
            raise NumentError("entries must lie in (0, 1]")
        if sum(self.entries) != 1:
            raise NumentError("entries must sum to 1")

    @classmethod
    def of(cls, values: Iterable) -> ProbabilityVector:
        return cls(tuple(Fraction(v) for v in values))

    def __len__(self):
        return len(self.entries)

    def product(self, other: ProbabilityVector) -> ProbabilityVector:
        """Joint distribution of two independent variables, row-major."""
        return ProbabilityVector(tuple(p * q for p in self.entries for q in other.entries))


@dataclass(frozen=True)
class ExponentProfile:
    """Exponent multiset (in the order supplied) with its induced distribution."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if not self.exponents or any(e < 1 for e in self.exponents):
            raise NumentError("exponents must be a non-empty list of positive integers")

    @classmethod
    def of(cls, exponents: Iterable[int]) -> ExponentProfile:
        return cls(tuple(int(e) for e in exponents))

    @property
    def big_omega(self) -> int:
        return sum(self.exponents)

    @property
    def little_omega(self) -> int:
        return len(self.exponents)

    @property
    def distribution(self) -> ProbabilityVector:
        total = self.big_omega
        return ProbabilityVector(tuple(Fraction(e, total) for e in self.exponents))


def shannon_entropy(p: ProbabilityVector) -> float:
    return max(0.0, -math.fsum(float(x) * math.log(x) for x in p.entries))


def kl_divergence(p: ProbabilityVector, q: ProbabilityVector) -> float:
    if len(p) != len(q):
        raise LengthMismatch(f"lengths differ: {len(p)} vs {len(q)}")
    return math.fsum(float(a) * math.log(a / b) for a, b in zip(p.entries, q.entries))


def _xlogx_sum(values: Iterable[int]) -> float:
    return math.fsum(v * math.log(v) for v in values)


def log_form_entropy(exponents: Iterable[int]) -> float:
    """``log(Omega) - sum(e log e) / Omega`` for a positive exponent list."""
    exponents = tuple(exponents)
    if len(exponents) == 1:
        return 0.0
    total = sum(exponents)
    return math.log(total) - _xlogx_sum(exponents) / total


def log_form_divergence(left: Iterable[int], right: Iterable[int]) -> float:
    """``log(Omega_r / Omega_l) - sum(a log(b / a)) / Omega_l``, pairing entries in order."""
    left, right = tuple(left), tuple(right)
    if len(left) != len(right):
        raise OmegaMismatch(f"omega differs: {len(left)} vs {len(right)}")
    big_l, big_r = sum(left), sum(right)
    cross = math.fsum(a * (math.log(b) - math.log(a)) for a, b in zip(left, right))
    return math.log(big_r / big_l) - cross / big_l


def _as_factorization(n) -> Factorization:
    return n if isinstance(n, Factorization) else factorize(n)


def integer_entropy(n: int | Factorization) -> float:
    """H(n) over the exponents of n; H(1) is 0 by convention."""
    fact = _as_factorization(n)
    if fact.value == 1:
        return 0.0
    return log_form_entropy(fact.exponents)


def integer_divergence(n: int | Factorization, m: int | Factorization) -> float:
    """D(n||m) with exponents paired by ascending prime on each side."""
    fn, fm = _as_factorization(n), _as_factorization(m)
    if fn.value < 2 or fm.value < 2:
        raise UnitInput("divergence needs n, m >= 2")
    if fn.little_omega != fm.little_omega:
        raise OmegaMismatch(
            f"omega({fn.value}) = {fn.little_omega} != omega({fm.value}) = {fm.little_omega}"
        )
    return log_form_divergence(fn.exponents, fm.exponents)


def entropy_of_profile(e: ExponentProfile) -> float:
    return shannon_entropy(e.distribution)
