"""Partially ramified primes in cubic fields Q(theta), theta a root of X^3 - aX + b.

Two independent routes decide whether ``p O_K = P1 * P2**2``:

* :func:`classify_prime` applies the two sufficient conditions on valuations
  of ``a``, ``b`` and the discriminant ``4a^3 - 27b^2`` literally;
* :func:`dedekind_oracle` factors the polynomial mod ``p`` and, when the
  Dedekind index test shows ``p`` does not divide the index of Z[theta],
  reads the decomposition off the factorization.

The literal second condition ("p does not divide ab and s_p is odd") also
fires for primes not dividing the discriminant, which are unramified; those
cases are reported as known discrepancies rather than reconciled.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass, field
from typing import Iterable

from . import _gfpoly as gf
from .arith import factorize, is_prime, valuation
from .errors import HypothesisNotMet, NumentError, PrimeTooSmall, ReducibleCubic
from .ideals import IdealFactorization, PrimeAbove, ideal_divergence, ideal_entropy


class Outcome(enum.Enum):
    PARTIALLY_RAMIFIED_12 = "PartiallyRamified12"
    NOT_COVERED = "NotCovered"


class Condition(enum.Enum):
    COND_I = "CondI"
    COND_II = "CondII"
    NONE = "None"


class Source(enum.Enum):
    PAPER_RULE = "PaperRule"
    DEDEKIND_ORACLE = "DedekindOracle"


P1_P2_SQUARED = ((1, 1), (2, 1))


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n, bound=None).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


@dataclass(frozen=True)
class CubicField:
    a: int
    b: int
    checked: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if self.checked and self.rational_root() is not None:
            raise ReducibleCubic(f"X^3 - {self.a}X + {self.b} has a rational root")

    @classmethod
    def unchecked(cls, a: int, b: int) -> CubicField:
        """Skip the irreducibility test; the rule and the oracle then describe
        the polynomial, not a cubic field."""
        return cls(a, b, checked=False)

    def rational_root(self) -> int | None:
        # a monic integer cubic can only have integer roots dividing b
        if self.b == 0:
            return 0
        for d in _divisors(abs(self.b)):
            for r in (d, -d):
                if r**3 - self.a * r + self.b == 0:
                    return r
        return None

    @property
    def delta(self) -> int:
        return 4 * self.a**3 - 27 * self.b**2

    def s_part(self, p: int) -> int:
        """Discriminant with every factor p removed (sign kept)."""
        return self.delta // p ** valuation(p, self.delta)

    @property
    def coefficients(self) -> list[int]:
        return [self.b, -self.a, 0, 1]


@dataclass(frozen=True)
class CubicClassification:
    outcome: Outcome
    triggered_condition: Condition


@dataclass(frozen=True)
class SplittingPattern:
    parts: tuple[tuple[int, int], ...]
    source: Source

    def __post_init__(self):
        if sum(e * f for e, f in self.parts) != 3:
            raise NumentError(f"pattern {self.parts} does not have degree 3")

    @property
    def is_p1_p2_squared(self) -> bool:
        return self.parts == P1_P2_SQUARED

    def __str__(self):
        names = []
        for i, (e, f) in enumerate(self.parts, 1):
            name = f"P{i}" + (f"^{e}" if e > 1 else "") + (f"[f{f}]" if f > 1 else "")
            names.append(name)
        return ".".join(names)


def classify_prime(cubic: CubicField, p: int) -> CubicClassification:
    if p < 5:
        raise PrimeTooSmall(f"the rule only covers p >= 5, got {p}")
    if not is_prime(p):
        raise NumentError(f"{p} is not prime")
    a, b = cubic.a, cubic.b
    # v_p(0) is infinite, so a == 0 never has v_p(a) == 1
    if a != 0 and a % p == 0 and b % p == 0 and valuation(p, a) == 1 < valuation(p, b):
        return CubicClassification(Outcome.PARTIALLY_RAMIFIED_12, Condition.COND_I)
    if (a * b) % p != 0 and cubic.s_part(p) % 2 == 1:
        return CubicClassification(Outcome.PARTIALLY_RAMIFIED_12, Condition.COND_II)
    return CubicClassification(Outcome.NOT_COVERED, Condition.NONE)


def factor_mod_p(coeffs: list[int], p: int) -> list[tuple[list[int], int]]:
    """Factor a monic cubic over GF(p) into (monic irreducible, multiplicity) pairs.

    Linear factors come from an exhaustive root search; whatever is left has
    no roots, hence is irreducible (degree <= 3).
    """
    rest = gf.reduce(coeffs, p)
    factors = []
    for r in range(p):
        if gf.evaluate(rest, r, p):
            continue
        linear = [-r % p, 1]
        mult = 0
        while len(rest) > 1 and gf.evaluate(rest, r, p) == 0:
            rest = gf.divmod_p(rest, linear, p)[0]
            mult += 1
        factors.append((linear, mult))
    if len(rest) > 1:
        factors.append((gf.monic(rest, p), 1))
    return factors


def dedekind_oracle(cubic: CubicField, p: int) -> SplittingPattern | None:
    """Decomposition of p from f mod p, or None when p divides the index."""
    f = cubic.coefficients
    factors = factor_mod_p(f, p)
    g, h = [1], [1]
    for gi, ei in factors:
        g = gf.mul(g, gi)
        h = gf.mul(h, gf.power(gi, ei - 1))
    diff = gf.sub(gf.mul(g, h), f)
    assert all(c % p == 0 for c in diff)
    t = [c // p for c in diff]
    common = gf.gcd_p(gf.gcd_p(t, g, p), h, p)
    if len(common) > 1:
        return None
    parts = sorted((ei, len(gi) - 1) for gi, ei in factors)
    return SplittingPattern(tuple(parts), Source.DEDEKIND_ORACLE)


@dataclass(frozen=True)
class CrossCheckRecord:
    a: int
    b: int
    p: int
    condition: str
    paper_verdict: str
    oracle_verdict: str
    agree: bool

    def as_dict(self) -> dict:
        return asdict(self)

    @property
    def delta_valuation(self) -> int:
        return valuation(self.p, 4 * self.a**3 - 27 * self.b**2)

    @property
    def kind(self) -> str:
        """Bucket used by reports.

        ``unramified-condII`` marks the literal second condition firing on a
        prime that does not divide the discriminant; ``uncovered-ramified``
        marks a P1*P2^2 prime the rule does not cover.
        """
        if self.agree:
            return "agree"
        if self.condition == Condition.COND_II.value and self.delta_valuation == 0:
            return "unramified-condII"
        if self.condition == Condition.NONE.value:
            return "uncovered-ramified"
        return "disagree"


@dataclass
class CrossCheckSection:
    records: list[CrossCheckRecord] = field(default_factory=list)
    abstained: int = 0
    reducible: int = 0

    def by_kind(self) -> dict[str, list[CrossCheckRecord]]:
        out: dict[str, list[CrossCheckRecord]] = {}
        for rec in self.records:
            out.setdefault(rec.kind, []).append(rec)
        return out

    def summary(self) -> dict:
        counts: dict[str, int] = {}
        for rec in self.records:
            key = f"{rec.condition}:{'agree' if rec.agree else 'disagree'}"
            counts[key] = counts.get(key, 0) + 1
        return {
            "records": len(self.records),
            "abstained": self.abstained,
            "reducible_skipped": self.reducible,
            "by_condition": dict(sorted(counts.items())),
            "by_kind": {k: len(v) for k, v in sorted(self.by_kind().items())},
        }


RULE_YES = "P1.P2^2"
RULE_NO = "not-covered"


def cross_check(a_range: Iterable[int], b_range: Iterable[int], p_range: Iterable[int]) -> CrossCheckSection:
    """Compare the rule with the oracle on every irreducible cubic in the box.

    Records come out in (a, b, p) lexicographic order.
    """
    primes = sorted(p for p in set(p_range) if p >= 5 and is_prime(p))
    section = CrossCheckSection()
    for a in sorted(set(a_range)):
        for b in sorted(set(b_range)):
            try:
                cubic = CubicField(a, b)
            except ReducibleCubic:
                section.reducible += 1
                continue
            for p in primes:
                pattern = dedekind_oracle(cubic, p)
                if pattern is None:
                    section.abstained += 1
                    continue
                verdict = classify_prime(cubic, p)
                rule_yes = verdict.outcome is Outcome.PARTIALLY_RAMIFIED_12
                section.records.append(
                    CrossCheckRecord(
                        a=a,
                        b=b,
                        p=p,
                        condition=verdict.triggered_condition.value,
                        paper_verdict=RULE_YES if rule_yes else RULE_NO,
                        oracle_verdict=str(pattern),
                        agree=rule_yes == pattern.is_p1_p2_squared,
                    )
                )
    return section


def partially_ramified_ideal(p: int) -> IdealFactorization:
    return IdealFactorization(((PrimeAbove(p, 1), 1), (PrimeAbove(p, 2), 2)))


def covered_pair_check(cubic: CubicField, p: int, q: int) -> tuple[float, float, float]:
    """Entropies of p O_K, q O_K and D(p O_K || q O_K) for two rule-covered primes."""
    for r in (p, q):
        if classify_prime(cubic, r).outcome is not Outcome.PARTIALLY_RAMIFIED_12:
            raise HypothesisNotMet(f"{r} is not covered for a={cubic.a}, b={cubic.b}")
    ideal_p, ideal_q = partially_ramified_ideal(p), partially_ramified_ideal(q)
    return ideal_entropy(ideal_p), ideal_entropy(ideal_q), ideal_divergence(ideal_p, ideal_q)
