"""Symbolic ideal factorizations and their entropy / divergence.

No ring arithmetic happens here: an ideal is a list of distinct prime-ideal
labels with positive exponents.  Only the exponent multiset enters the
numerics; labels are carried for display.

Text formats
------------
* raw profile: comma-separated exponents, e.g. ``"1,4"``
* labelled ideal: ``label^exp`` tokens separated by whitespace or commas,
  e.g. ``"(2)^1 (1-xi)^4"``.  Recognised labels are ``(p)`` for an inert
  rational prime, ``P<p>.<i>`` for the i-th prime above p and ``(1-xi)``;
  anything else is kept as an opaque name.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Union

from .entropy import log_form_divergence, log_form_entropy
from .errors import NumentError, OmegaMismatch, OmegaTooSmall

MAX_ENTROPY_TOL = 1e-12


@dataclass(frozen=True, order=True)
class RationalInert:
    p: int

    def __str__(self):
        return f"({self.p})"


@dataclass(frozen=True, order=True)
class PrimeAbove:
    p: int
    index: int

    def __str__(self):
        return f"P{self.p}.{self.index}"


@dataclass(frozen=True, order=True)
class Lambda:
    """The prime ideal (1 - xi) of Z[xi]."""

    def __str__(self):
        return "(1-xi)"


@dataclass(frozen=True, order=True)
class Named:
    name: str

    def __str__(self):
        return self.name


PrimeIdealLabel = Union[RationalInert, PrimeAbove, Lambda, Named]

_INERT_RE = re.compile(r"\((\d+)\)")
_ABOVE_RE = re.compile(r"P(\d+)\.(\d+)")


def parse_label(text: str) -> PrimeIdealLabel:
    if text == "(1-xi)":
        return Lambda()
    if m := _INERT_RE.fullmatch(text):
        return RationalInert(int(m[1]))
    if m := _ABOVE_RE.fullmatch(text):
        return PrimeAbove(int(m[1]), int(m[2]))
    if not text or any(c in text for c in "^, \t"):
        raise NumentError(f"bad ideal label {text!r}")
    return Named(text)


@dataclass(frozen=True)
class IdealFactorization:
    entries: tuple[tuple[PrimeIdealLabel, int], ...]

    def __post_init__(self):
        if not self.entries:
            raise NumentError("an ideal factorization needs at least one prime ideal")
        labels = [label for label, _ in self.entries]
        if len(set(labels)) != len(labels):
            raise NumentError("prime-ideal labels must be pairwise distinct")
        if any(e < 1 for _, e in self.entries):
            raise NumentError("exponents must be >= 1")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> IdealFactorization:
        """Anonymous ideal P1^e1 ... Pg^eg."""
        return cls(tuple((Named(f"P{i}"), int(e)) for i, e in enumerate(exponents, 1)))

    @classmethod
    def parse(cls, text: str) -> IdealFactorization:
        """Parse either a raw exponent list or ``label^exp`` tokens."""
        tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
        if not tokens:
            raise NumentError("empty ideal description")
        if all(t.isdigit() for t in tokens):
            return cls.from_exponents(int(t) for t in tokens)
        entries = []
        for token in tokens:
            label, sep, exp = token.rpartition("^")
            if not sep or not exp.isdigit():
                raise NumentError(f"expected label^exp, got {token!r}")
            entries.append((parse_label(label), int(exp)))
        return cls(tuple(entries))

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.entries)

    @property
    def big_omega(self) -> int:
        return sum(self.exponents)

    @property
    def little_omega(self) -> int:
        return len(self.entries)

    def dump(self) -> list[str]:
        return [f"{label}^{e}" for label, e in self.entries]

    def __str__(self):
        return " ".join(self.dump())


def ideal_entropy(ideal: IdealFactorization) -> float:
    if ideal.little_omega == 1:
        return 0.0
    return log_form_entropy(ideal.exponents)


def ideal_divergence(left: IdealFactorization, right: IdealFactorization) -> float:
    """D(I||J), pairing the two exponent lists after sorting each ascending."""
    if left.little_omega != right.little_omega:
        raise OmegaMismatch(f"omega differs: {left.little_omega} vs {right.little_omega}")
    return log_form_divergence(sorted(left.exponents), sorted(right.exponents))


def max_entropy_witness(ideal: IdealFactorization) -> bool:
    """True iff H(I) reaches log(omega(I)) within 1e-12."""
    if ideal.little_omega < 2:
        raise OmegaTooSmall("max-entropy test needs at least two prime ideals")
    gap = math.log(ideal.little_omega) - ideal_entropy(ideal)
    return gap <= MAX_ENTROPY_TOL
