import math

import pytest

from nument.errors import DomainError
from nument.search import (
    SystemSolution,
    divergence_zero_scan,
    entropy_gap,
    gap_function,
    grid_csv,
    is_system_solution,
    min_r_negative,
    scan_system,
    sufficient_r,
    witness_gap,
)


@pytest.mark.parametrize("s, r, sign", [(1, 3, -1), (2, 5, 1), (1, 1, 1), (10, 27, -1), (10, 26, 1)])
def test_gap_sign(s, r, sign):
    assert math.copysign(1, entropy_gap(s, r)) == sign


def test_gap_values():
    assert entropy_gap(1, 3) == pytest.approx(-0.002517, abs=1e-6)
    assert entropy_gap(2, 5) == pytest.approx(0.002258, abs=1e-6)


@pytest.mark.parametrize("s, r", [(1, 1), (1, 3), (2, 5), (4, 12), (7, 9)])
def test_gap_matches_explicit_integers(s, r):
    assert entropy_gap(s, r) == pytest.approx(witness_gap(s, r), abs=1e-12)


def test_gap_domain():
    with pytest.raises(DomainError):
        entropy_gap(3, 2)
    with pytest.raises(DomainError):
        entropy_gap(0, 2)


def test_thresholds():
    assert [min_r_negative(s) for s in range(1, 11)] == [3, 6, 9, 11, 14, 16, 19, 21, 24, 27]
    assert min_r_negative(20) == 53 <= sufficient_r(20) == 55
    for s in range(1, 60):
        assert min_r_negative(s) <= sufficient_r(s)


def test_grid_csv_shape():
    lines = grid_csv(3, 4).splitlines()
    assert lines[0] == "s,r,f"
    assert len(lines) == 1 + 4 * 5
    s, r, f = lines[7].split(",")
    assert float(f) == pytest.approx(gap_function(int(s), int(r)), rel=1e-11)


def test_is_system_solution():
    assert is_system_solution(1, 2, 4, -1)
    assert is_system_solution(3, 6, 12, -3)
    assert not is_system_solution(1, 2, 4, 1)
    assert not is_system_solution(2, 3, 2, 3)


def test_scan_negative_family():
    got = [s.as_tuple() for s in scan_system(12, allow_negative_v=True)]
    assert got == [(a, 2 * a, 4 * a, -a) for a in (1, 2, 3)]


@pytest.mark.parametrize("bound", [40, 60])
def test_filter_loses_nothing(bound):
    """The float filter finds exactly what exhaustive exact checking finds."""
    for neg in (False, True):
        assert scan_system(bound, neg) == scan_system(bound, neg, margin=None)


def test_scan_positive_empty():
    assert scan_system(150) == []


def test_scan_threads_do_not_change_result():
    assert scan_system(80, True, workers=1) == scan_system(80, True, workers=4)


def test_divergence_scan_diagonal():
    got = divergence_zero_scan(40)
    assert got == divergence_zero_scan(40, margin=None)
    assert all(a1 == b1 and a2 == b2 for a1, a2, b1, b2 in got)
    assert len(got) == sum(t - 1 for t in range(2, 41))


def test_solution_ordering():
    assert SystemSolution(1, 2, 4, -1) < SystemSolution(2, 4, 8, -2)


@pytest.mark.slow
def test_scan_positive_4000():
    assert scan_system(4000) == []
