"""Hot scan kernels, with numba-compiled and pure-numpy implementations.

Two scans dominate the package's runtime: the exhaustive lattice-box search
for (-1)-curve classes, and the 56x56 sweep that computes the Galois
cohomology class of every difference of two exceptional curves.  Both exist
in two interchangeable flavours:

* a numba ``@njit`` loop (default whenever numba imports), and
* a vectorised pure-numpy fallback.

Set ``DP2_BACKEND=numpy`` or ``DP2_BACKEND=numba`` to force one; the two are
asserted to produce byte-identical outputs in the test suite.  All arithmetic
is on small ints (|entry| <= 10), far inside int64 range, so both paths stay
exact.

``benchmarks/bench_kernels.py`` times the two flavours against each other.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - the fallback is tested by env flag instead
    HAVE_NUMBA = False

_ENV_VAR = "DP2_BACKEND"


def active_backend() -> str:
    """The backend that will actually run: 'numba' or 'numpy'."""
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError(f"{_ENV_VAR}=numba requested but numba is not importable")
        return "numba"
    if choice:
        raise RuntimeError(f"unrecognised {_ENV_VAR}={choice!r}; use 'numba' or 'numpy'")
    return "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# kernel 1: exhaustive box scan for classes with D.D = -1 and D.H = 1
#
# H = 3L - E1 - ... - E7, so D.H = 3d + m1 + ... + m7 on coordinates
# (d; m1..m7), and D.D = d^2 - sum(mi^2).
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _box_scan_numba(dmax, mmax):  # pragma: no cover - exercised via dispatch
        out = np.empty((0, 8), np.int64)
        count = 0
        for pass_fill in range(2):
            if pass_fill:
                out = np.empty((count, 8), np.int64)
            n = 0
            for d in range(-dmax, dmax + 1):
                for m1 in range(-mmax, mmax + 1):
                    for m2 in range(-mmax, mmax + 1):
                        for m3 in range(-mmax, mmax + 1):
                            for m4 in range(-mmax, mmax + 1):
                                for m5 in range(-mmax, mmax + 1):
                                    for m6 in range(-mmax, mmax + 1):
                                        for m7 in range(-mmax, mmax + 1):
                                            sq = d * d - (m1 * m1 + m2 * m2 + m3 * m3
                                                          + m4 * m4 + m5 * m5 + m6 * m6
                                                          + m7 * m7)
                                            deg = 3 * d + (m1 + m2 + m3 + m4 + m5 + m6 + m7)
                                            if sq == -1 and deg == 1:
                                                if pass_fill:
                                                    out[n, 0] = d
                                                    out[n, 1] = m1
                                                    out[n, 2] = m2
                                                    out[n, 3] = m3
                                                    out[n, 4] = m4
                                                    out[n, 5] = m5
                                                    out[n, 6] = m6
                                                    out[n, 7] = m7
                                                n += 1
            if not pass_fill:
                count = n
        return out


def _box_scan_numpy(dmax: int, mmax: int) -> np.ndarray:
    side = np.arange(-mmax, mmax + 1, dtype=np.int64)
    grids = np.meshgrid(*([side] * 7), indexing="ij")
    m = np.stack([g.ravel() for g in grids], axis=1)  # (side^7, 7)
    msum = m.sum(axis=1)
    msq = (m * m).sum(axis=1)
    hits = []
    for d in range(-dmax, dmax + 1):
        mask = (d * d - msq == -1) & (3 * d + msum == 1)
        if mask.any():
            block = m[mask]
            dcol = np.full((block.shape[0], 1), d, dtype=np.int64)
            hits.append(np.hstack([dcol, block]))
    if not hits:
        return np.empty((0, 8), dtype=np.int64)
    return np.vstack(hits)


def box_scan(dmax: int = 4, mmax: int = 3) -> np.ndarray:
    """All lattice points of the box |d| <= dmax, |mi| <= mmax with D.D = -1, D.H = 1.

    Rows are returned in lexicographic order, identically for both backends.
    """
    if active_backend() == "numba":
        rows = _box_scan_numba(dmax, mmax)
    else:
        rows = _box_scan_numpy(dmax, mmax)
    order = np.lexsort(rows.T[::-1])
    return rows[order]


# ---------------------------------------------------------------------------
# kernel 2: cohomology class codes for all differences of exceptional curves
#
# The caller supplies the 56 curve classes as rows and a 6x8 integer matrix
# that computes the class of a cocycle modulo 2.  The kernel returns the
# 56x56 table of 6-bit codes (bit i of the code is coordinate i of the class).
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _pair_codes_numba(curves, clsmat):  # pragma: no cover - exercised via dispatch
        n = curves.shape[0]
        codes = np.zeros((n, n), np.int64)
        for i in range(n):
            for j in range(n):
                code = 0
                for r in range(clsmat.shape[0]):
                    acc = 0
                    for c in range(8):
                        acc += clsmat[r, c] * (curves[i, c] - curves[j, c])
                    if acc % 2 != 0:
                        code |= 1 << r
                codes[i, j] = code
        return codes


def _pair_codes_numpy(curves: np.ndarray, clsmat: np.ndarray) -> np.ndarray:
    diff = curves[:, None, :] - curves[None, :, :]  # (n, n, 8)
    bits = np.tensordot(diff, clsmat, axes=([2], [1])) & 1  # (n, n, 6)
    weights = 1 << np.arange(clsmat.shape[0], dtype=np.int64)
    return (bits * weights).sum(axis=2)


def pair_class_codes(curves: np.ndarray, clsmat: np.ndarray) -> np.ndarray:
    """6-bit class codes of curve[i] - curve[j] for every ordered pair (i, j)."""
    curves = np.ascontiguousarray(curves, dtype=np.int64)
    clsmat = np.ascontiguousarray(clsmat, dtype=np.int64)
    if active_backend() == "numba":
        return _pair_codes_numba(curves, clsmat)
    return _pair_codes_numpy(curves, clsmat)


def first_pair_for_each_code(codes: np.ndarray) -> dict[int, tuple[int, int]]:
    """First (i, j) in row-major order realising each code value."""
    n = codes.shape[0]
    flat = codes.ravel()
    values, first = np.unique(flat, return_index=True)
    return {int(v): (int(ix // n), int(ix % n)) for v, ix in zip(values, first)}
