"""Exact integer arithmetic: primality, factorization, totient, orders, valuations."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputTooLarge, NotCoprime, NumentError, ZeroInput

#: Default guardrail for :func:`factorize`.
FACTORIZATION_BOUND = 10**12

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_TRIAL_LIMIT = 1 << 12


@lru_cache(maxsize=None)
def primes_below(limit: int) -> tuple[int, ...]:
    """All primes p < limit, by a sieve of Eratosthenes."""
    if limit <= 2:
        return ()
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin.

    The first 13 prime bases are a proven witness set for n < 3.3e24,
    which covers every 64-bit integer.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int, rng: random.Random) -> int:
    # Brent's variant; n is odd and composite.
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    """``value = prod(p**e for p, e in factors)`` with primes ascending."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise NumentError("primes must be strictly ascending")
        if any(e < 1 for _, e in self.factors):
            raise NumentError("exponents must be >= 1")
        if not all(is_prime(p) for p in primes):
            raise NumentError("factor bases must be prime")
        if math.prod(p**e for p, e in self.factors) != self.value:
            raise NumentError("factors do not multiply to value")

    @classmethod
    def from_factors(cls, factors) -> Factorization:
        factors = tuple(sorted((int(p), int(e)) for p, e in factors))
        return cls(math.prod(p**e for p, e in factors), factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    @property
    def big_omega(self) -> int:
        return sum(self.exponents)

    @property
    def little_omega(self) -> int:
        return len(self.factors)

    def power(self, k: int) -> Factorization:
        if k < 1:
            raise NumentError("power must be >= 1")
        return Factorization(self.value**k, tuple((p, e * k) for p, e in self.factors))

    def __mul__(self, other: Factorization) -> Factorization:
        merged: dict[int, int] = dict(self.factors)
        for p, e in other.factors:
            merged[p] = merged.get(p, 0) + e
        return Factorization(self.value * other.value, tuple(sorted(merged.items())))


def factorize(n: int, bound: int | None = FACTORIZATION_BOUND) -> Factorization:
    """Prime factorization of ``n >= 1``.

    Raises :class:`InputTooLarge` above ``bound`` (pass ``None`` to lift it).
    """
    if n < 1:
        raise NumentError(f"factorize needs n >= 1, got {n}")
    if bound is not None and n > bound:
        raise InputTooLarge(f"{n} exceeds the factorization bound {bound}")
    counts: dict[int, int] = {}
    m = n
    for p in primes_below(_TRIAL_LIMIT):
        if p * p > m:
            break
        while m % p == 0:
            m //= p
            counts[p] = counts.get(p, 0) + 1
    if m > 1:
        rng = random.Random(n)
        stack = [m]
        while stack:
            c = stack.pop()
            if c < _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(c):
                # every prime below the trial limit is gone, so small c is prime
                counts[c] = counts.get(c, 0) + 1
                continue
            d = _rho(c, rng)
            stack.extend((d, c // d))
    return Factorization(n, tuple(sorted(counts.items())))


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n).factors:
        result -= result // p
    return result


def mult_order(p: int, n: int) -> int:
    """Smallest f >= 1 with p**f == 1 (mod n)."""
    if n < 2:
        raise NumentError(f"modulus must be >= 2, got {n}")
    if math.gcd(p, n) != 1:
        raise NotCoprime(f"gcd({p}, {n}) = {math.gcd(p, n)}")
    order = euler_phi(n)
    for q, _ in factorize(order).factors:
        while order % q == 0 and pow(p, order // q, n) == 1:
            order //= q
    return order


def valuation(p: int, m: int) -> int:
    """Exponent of ``p`` in ``|m|``."""
    if m == 0:
        raise ZeroInput("valuation of 0 is undefined")
    m = abs(m)
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k
