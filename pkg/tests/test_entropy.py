import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nument.arith import factorize
from nument.entropy import (
    ExponentProfile,
    ProbabilityVector,
    entropy_of_profile,
    integer_divergence,
    integer_entropy,
    kl_divergence,
    shannon_entropy,
)
from nument.errors import LengthMismatch, NumentError, OmegaMismatch, UnitInput


def naive_entropy(exps):
    total = sum(exps)
    return -sum(e / total * math.log(e / total) for e in exps)


@pytest.mark.parametrize("n, h", [
    (1, 0.0),
    (7, 0.0),
    (2**10, 0.0),
    (30, math.log(3)),
    (12, math.log(3) - 2 / 3 * math.log(2)),  # 0.636514...
])
def test_integer_entropy_values(n, h):
    assert integer_entropy(n) == pytest.approx(h, abs=1e-12)


def test_entropy_prime_power_is_exact_zero():
    assert integer_entropy(3**7) == 0.0


@given(st.integers(min_value=2, max_value=10**9))
@settings(max_examples=300, deadline=None)
def test_integer_entropy_matches_naive(n):
    f = factorize(n)
    assert integer_entropy(f) == pytest.approx(naive_entropy(f.exponents), abs=1e-12)
    assert 0.0 <= integer_entropy(f) <= math.log(f.little_omega) + 1e-12


def test_divergence_12_18():
    # exponents (2, 1) against (1, 2)
    want = 2 / 3 * math.log(2) + 1 / 3 * math.log(0.5)
    assert integer_divergence(12, 18) == pytest.approx(want, abs=1e-12)
    assert integer_divergence(12, 18) == pytest.approx(0.231049, abs=1e-6)


def test_divergence_errors():
    with pytest.raises(OmegaMismatch):
        integer_divergence(12, 30)
    with pytest.raises(UnitInput):
        integer_divergence(1, 2)


def test_divergence_self_zero():
    assert integer_divergence(360, 360) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("p, q, d", [
    ((Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 4), Fraction(3, 4)), 0.143841),
    ((Fraction(2, 3), Fraction(1, 3)), (Fraction(1, 3), Fraction(2, 3)), 0.231049),
])
def test_kl_examples(p, q, d):
    assert kl_divergence(ProbabilityVector.of(p), ProbabilityVector.of(q)) == pytest.approx(d, abs=1e-6)


def test_kl_length_mismatch():
    with pytest.raises(LengthMismatch):
        kl_divergence(ProbabilityVector.of([1]), ProbabilityVector.of(["1/2", "1/2"]))


def test_probability_vector_invariants():
    with pytest.raises(NumentError):
        ProbabilityVector.of(["1/2", "1/3"])
    with pytest.raises(NumentError):
        ProbabilityVector.of([])
    with pytest.raises(NumentError):
        ProbabilityVector.of([0, 1])


vectors = st.lists(st.integers(min_value=1, max_value=50), min_size=1, max_size=6).map(
    lambda ws: ProbabilityVector.of(Fraction(w, sum(ws)) for w in ws))


@given(vectors, vectors)
@settings(max_examples=200, deadline=None)
def test_shannon_additivity(p, q):
    joint = shannon_entropy(p.product(q))
    assert joint == pytest.approx(shannon_entropy(p) + shannon_entropy(q), abs=1e-12)


@given(vectors)
@settings(max_examples=200, deadline=None)
def test_kl_nonnegative(p):
    uniform = ProbabilityVector.of([Fraction(1, len(p))] * len(p))
    assert kl_divergence(p, uniform) >= -1e-15
    assert kl_divergence(p, uniform) == pytest.approx(math.log(len(p)) - shannon_entropy(p), abs=1e-12)


@pytest.mark.parametrize("exps, h", [((1, 4), 0.500402), ((2, 3), 0.673012)])
def test_profile_entropy(exps, h):
    assert entropy_of_profile(ExponentProfile.of(exps)) == pytest.approx(h, abs=1e-6)


def test_profile_rejects_zero():
    with pytest.raises(NumentError):
        ExponentProfile.of([1, 0])
