import pytest

from nument import _kernels_py, kernels

compiled = pytest.importorskip("nument._kernels")


@pytest.mark.parametrize("x", [1, 2, 7, 30, 99])
@pytest.mark.parametrize("neg", [False, True])
def test_system_row_backends_agree(x, neg):
    a = sorted(compiled.system_row(x, 100, neg, 1e-6))
    b = sorted(_kernels_py.system_row(x, 100, neg, 1e-6))
    assert a == b


@pytest.mark.parametrize("total", [2, 3, 17, 64, 120])
def test_divergence_row_backends_agree(total):
    assert sorted(compiled.divergence_row(total, 1e-6)) == sorted(_kernels_py.divergence_row(total, 1e-6))


def test_filter_keeps_known_solution():
    assert (2, 4) in _kernels_py.system_row(1, 10, True, 1e-6)
    assert (2, 4) in compiled.system_row(1, 10, True, 1e-6)


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("NUMENT_THREADS", "3")
    assert kernels.worker_count() == 3
    monkeypatch.delenv("NUMENT_THREADS")
    assert kernels.worker_count() >= 1
