import math

import pytest
from sympy import Poly, cyclotomic_poly, symbols

from nument.arith import euler_phi, primes_below
from nument.cyclotomic import (
    CyclotomicGeneratorSpec,
    ideal_of_generator,
    is_ramified,
    lambda_shift_gap,
    primes_with_split_counts,
    primitive_root_prime,
    splits_completely,
    splitting_type,
)
from nument.errors import (
    ConductorNotPrime,
    InvalidSplitCount,
    NumentError,
    RationalPartEqualsConductor,
)
from nument.ideals import Lambda, PrimeAbove, RationalInert, ideal_entropy

X = symbols("x")


def sympy_split(p, n):
    """(e, f, g) read off the factorization of the n-th cyclotomic polynomial mod p."""
    v, m = 0, n
    while m % p == 0:
        m //= p
        v += 1
    _, factors = Poly(cyclotomic_poly(m, X), X, modulus=p).factor_list()
    degrees = {f.degree() for f, _ in factors}
    assert len(degrees) == 1 and all(k == 1 for _, k in factors)
    return euler_phi(p**v), degrees.pop(), len(factors)


@pytest.mark.parametrize("p, n", [(2, 5), (3, 7), (11, 5), (2, 12), (3, 9), (5, 60), (7, 45), (13, 24)])
def test_splitting_against_sympy(p, n):
    st = splitting_type(p, n)
    assert (st.e, st.f, st.g) == sympy_split(p, n)


def test_splitting_example():
    assert splitting_type(2, 5).as_dict() == {"e": 1, "f": 4, "g": 1, "phi": 4}


def test_efg_exhaustive_small():
    for p in primes_below(60):
        for n in range(3, 60):
            st = splitting_type(p, n)
            assert st.phi == euler_phi(n)
            assert splits_completely(p, n) == (st.e == 1 and st.f == 1)
            assert is_ramified(p, n) == (st.e > 1)


def test_argument_checks():
    with pytest.raises(NumentError):
        splitting_type(4, 5)
    with pytest.raises(NumentError):
        splitting_type(3, 2)


def test_ideal_of_generator_q5():
    # 10 = 2 * 5 with 2 inert and 5 = (1-xi)^4 up to a unit
    ideal = ideal_of_generator(CyclotomicGeneratorSpec(5, ((2, 1),), 4))
    assert ideal.entries == ((RationalInert(2), 1), (Lambda(), 4))
    assert ideal_entropy(ideal) == pytest.approx(math.log(5) - math.log(256) / 5, abs=1e-12)
    split = ideal_of_generator(CyclotomicGeneratorSpec(5, ((11, 2),)))
    assert split.entries == tuple((PrimeAbove(11, i), 2) for i in range(1, 5))


def test_ideal_of_generator_errors():
    with pytest.raises(ConductorNotPrime):
        ideal_of_generator(CyclotomicGeneratorSpec(9, ((2, 1),)))
    with pytest.raises(RationalPartEqualsConductor):
        ideal_of_generator(CyclotomicGeneratorSpec(5, ((5, 1),)))
    with pytest.raises(NumentError):
        CyclotomicGeneratorSpec(5, ((2, 1), (2, 3)))


def test_primitive_root_and_split_counts():
    assert primitive_root_prime(7) == 3
    assert primitive_root_prime(23) == 5
    ps = primes_with_split_counts(13, [1, 2, 3, 12])
    for p, s in zip(ps, [1, 2, 3, 12]):
        assert splitting_type(p, 13).g == s
    with pytest.raises(InvalidSplitCount):
        primes_with_split_counts(13, [5])


@pytest.mark.parametrize("q", [5, 7, 11, 13, 29])
def test_lambda_shift_gap_bounds(q):
    gap, bound = lambda_shift_gap(q)
    assert 0 <= gap <= bound
    gap2, bound2 = lambda_shift_gap(q, [1, 2])
    assert bound2 == bound and 0 <= gap2 <= bound


def test_lambda_shift_gap_q5_value():
    gap, bound = lambda_shift_gap(5)
    assert gap == pytest.approx(math.log(64 / 27) / 5, abs=1e-12)
    assert bound == pytest.approx(math.log(8192 / 3125) / 5, abs=1e-12)
