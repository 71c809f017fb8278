import math

import pytest
from sympy import Poly, symbols

from nument.cubic import (
    Condition,
    CubicField,
    Outcome,
    classify_prime,
    covered_pair_check,
    cross_check,
    dedekind_oracle,
    factor_mod_p,
)
from nument.errors import HypothesisNotMet, NumentError, PrimeTooSmall, ReducibleCubic

X = symbols("x")


def test_reducible_rejected():
    # 1 - 2 + 1 = 0
    with pytest.raises(ReducibleCubic):
        CubicField(2, 1)
    with pytest.raises(ReducibleCubic):
        CubicField(5, 0)
    assert CubicField(1, 1).delta == -23


@pytest.mark.parametrize("a, b, p, cond", [
    (1, 1, 5, Condition.COND_II),
    (1, 1, 23, Condition.COND_II),
    (1, 2, 13, Condition.NONE),
    (10, 25, 5, Condition.COND_I),
    (10, 25, 103, Condition.COND_II),
    (5, 5, 5, Condition.NONE),
])
def test_classify(a, b, p, cond):
    got = classify_prime(CubicField(a, b), p)
    assert got.triggered_condition is cond
    assert (got.outcome is Outcome.PARTIALLY_RAMIFIED_12) == (cond is not Condition.NONE)


@pytest.mark.parametrize("p", [5, 7])
def test_classify_reducible_polynomial(p):
    # the (2, 1) polynomial is reducible; unchecked keeps it usable at polynomial level
    got = classify_prime(CubicField.unchecked(2, 1), p)
    assert got.triggered_condition is Condition.COND_II


def test_classify_small_prime():
    with pytest.raises(PrimeTooSmall):
        classify_prime(CubicField(1, 1), 3)
    with pytest.raises(NumentError):
        classify_prime(CubicField(1, 1), 9)


@pytest.mark.parametrize("a, b", [(1, 1), (3, 7), (-7, 13), (10, 25), (2, 9)])
@pytest.mark.parametrize("p", [5, 7, 11, 23, 31])
def test_factor_mod_p_against_sympy(a, b, p):
    mine = sorted((len(g) - 1, e) for g, e in factor_mod_p([b, -a, 0, 1], p))
    _, facs = Poly(X**3 - a * X + b, X, modulus=p).factor_list()
    theirs = sorted((f.degree(), e) for f, e in facs)
    assert mine == theirs


def root_count(a, b, p):
    return sum(1 for x in range(p) if (x**3 - a * x + b) % p == 0)


def test_oracle_unramified_matches_root_count():
    for a in range(-6, 7):
        for b in range(-6, 7):
            try:
                cubic = CubicField(a, b)
            except ReducibleCubic:
                continue
            for p in (5, 7, 11, 13, 17, 19, 23):
                if cubic.delta % p == 0:
                    continue
                pattern = dedekind_oracle(cubic, p)
                expected = {3: ((1, 1),) * 3, 1: ((1, 1), (1, 2)), 0: ((1, 3),)}[root_count(a, b, p)]
                assert pattern.parts == expected


def test_oracle_examples():
    assert dedekind_oracle(CubicField(1, 1), 7).parts == ((1, 1), (1, 2))
    assert dedekind_oracle(CubicField(1, 1), 23).is_p1_p2_squared
    assert dedekind_oracle(CubicField(10, 25), 5) is None
    assert str(dedekind_oracle(CubicField(1, 1), 23)) == "P1.P2^2"


def test_cross_check_small_box():
    section = cross_check(range(-4, 5), range(-4, 5), range(5, 30))
    keys = [(r.a, r.b, r.p) for r in section.records]
    assert keys == sorted(keys)
    kinds = section.by_kind()
    assert "disagree" not in kinds
    assert all(r.delta_valuation == 0 for r in kinds.get("unramified-condII", []))
    assert section.summary()["records"] == len(section.records)


def test_covered_pair():
    hp, hq, d = covered_pair_check(CubicField(10, 25), 5, 103)
    assert hp == hq == pytest.approx(math.log(3) - 2 * math.log(2) / 3, abs=1e-12)
    assert d == 0.0
    with pytest.raises(HypothesisNotMet):
        covered_pair_check(CubicField(1, 2), 5, 13)
