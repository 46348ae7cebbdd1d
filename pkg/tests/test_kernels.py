import numpy as np
import pytest

from dp2 import kernels
from dp2.galois import _cohomology  # class matrix for the pair kernel
from dp2.picard import enumerate_exceptional


@pytest.fixture
def curves_array():
    return np.array([c.cls.coeffs for c in enumerate_exceptional()], dtype=np.int64)


@pytest.fixture
def class_matrix():
    return np.array(_cohomology().class_matrix, dtype=np.int64)


def test_backend_selection(monkeypatch):
    monkeypatch.setenv("DP2_BACKEND", "numpy")
    assert kernels.active_backend() == "numpy"
    monkeypatch.delenv("DP2_BACKEND")
    assert kernels.active_backend() in ("numba", "numpy")
    monkeypatch.setenv("DP2_BACKEND", "something-else")
    with pytest.raises(RuntimeError):
        kernels.active_backend()


def test_box_scan_finds_the_census(curves_array):
    rows = kernels.box_scan()
    assert rows.shape == (56, 8)
    assert {tuple(r) for r in rows.tolist()} == {tuple(r) for r in curves_array.tolist()}


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba unavailable")
def test_backends_agree_on_box_scan(monkeypatch):
    monkeypatch.setenv("DP2_BACKEND", "numba")
    via_numba = kernels.box_scan()
    monkeypatch.setenv("DP2_BACKEND", "numpy")
    via_numpy = kernels.box_scan()
    assert np.array_equal(via_numba, via_numpy)


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba unavailable")
def test_backends_agree_on_pair_codes(monkeypatch, curves_array, class_matrix):
    monkeypatch.setenv("DP2_BACKEND", "numba")
    via_numba = kernels.pair_class_codes(curves_array, class_matrix)
    monkeypatch.setenv("DP2_BACKEND", "numpy")
    via_numpy = kernels.pair_class_codes(curves_array, class_matrix)
    assert np.array_equal(via_numba, via_numpy)
    assert via_numba.shape == (56, 56)
    assert np.all(np.diag(via_numba) == 0)  # E - E is the trivial class


def test_pair_codes_cover_all_64(curves_array, class_matrix):
    codes = kernels.pair_class_codes(curves_array, class_matrix)
    assert set(np.unique(codes).tolist()) == set(range(64))


def test_first_pair_is_row_major():
    codes = np.array([[0, 3], [3, 1]])
    table = kernels.first_pair_for_each_code(codes)
    assert table == {0: (0, 0), 3: (0, 1), 1: (1, 1)}


def test_box_scan_empty_box():
    rows = kernels.box_scan(dmax=0, mmax=0)
    assert rows.shape == (0, 8)
