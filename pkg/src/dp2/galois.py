"""The covering involution on the Picard lattice and its group cohomology.

The double cover Y -> P^2 branched on the quartic has a covering involution
sigma (the Geiser involution of the blown-up plane).  On the Picard lattice it
is the unique isometric involution fixing H and acting as -1 on the orthogonal
complement of H, hence the closed form

    sigma(D) = (D.H) H - D.

This reproduces the classical values sigma(Ei) = Di and sigma(Lij) = Cij.
(The frequently printed expression "L - 3(E1+...+E7)" for sigma(L) is not an
isometry - its square is -62 - and the replay suite carries a permanent
flagged claim recording that discrepancy instead of silently correcting it.)

With G of order two acting through sigma, the first group cohomology is

    H^1(G, Pic Y) = ker(1 + sigma) / im(1 - sigma) = (Z/2)^6,

computed here mechanically by integer kernel/column-space reduction and a
Smith normal form, not copied from the literature.  The module also houses
the cocycle tests, the coordinates of a cocycle in the basis e_i = Ei - Ei+1,
and the representation of every nonzero class as a difference of two
exceptional curves (with a disjoint-pair refinement).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import intlinalg, kernels
from .errors import InternalInconsistency, NotACocycle, TrivialClass
from .picard import (
    RANK,
    ZERO,
    DivClass,
    E,
    ExceptionalCurve,
    H,
    L,
    classify,
    enumerate_exceptional,
    intersect,
)

__all__ = [
    "InvolutionAction",
    "CohClass",
    "GEISER",
    "sigma",
    "printed_sigma_of_line",
    "h_class",
    "e_class",
    "one_plus_sigma_kernel",
    "one_minus_sigma_image",
    "h1_galois",
    "is_coboundary",
    "class_of",
    "represent_as_difference",
    "disjoint_representative",
]


@dataclass(frozen=True)
class InvolutionAction:
    """An involutive lattice isometry given by its matrix on (L, E1..E7)."""

    matrix: tuple[tuple[int, ...], ...]

    def __call__(self, d: DivClass) -> DivClass:
        return DivClass(tuple(sum(row[j] * d.coeffs[j] for j in range(RANK))
                              for row in self.matrix))


def _geiser_matrix() -> tuple[tuple[int, ...], ...]:
    cols = []
    for j in range(RANK):
        basis = DivClass(tuple(1 if i == j else 0 for i in range(RANK)))
        image = intersect(basis, H) * H - basis
        cols.append(image.coeffs)
    return tuple(zip(*cols))


GEISER = InvolutionAction(_geiser_matrix())


def sigma(d: DivClass) -> DivClass:
    """The covering involution: (D.H) H - D."""
    return GEISER(d)


def printed_sigma_of_line() -> DivClass:
    """The erroneous textbook-style expression L - 3(E1+...+E7) for sigma(L).

    Kept only so the replay suite can document that it is not an isometry;
    the implemented involution sends L to 8L - 3(E1+...+E7).
    """
    return L - 3 * sum((E(i) for i in range(1, 8)), ZERO)


def h_class() -> DivClass:
    """h = L - 3*E1, an anti-invariant generator alongside the e_i."""
    return L - 3 * E(1)


def e_class(i: int) -> DivClass:
    """e_i = Ei - Ei+1 for 1 <= i <= 6; their classes generate H^1."""
    if not 1 <= i <= 6:
        raise ValueError(f"index out of range: {i}")
    return E(i) - E(i + 1)


@dataclass(frozen=True)
class CohClass:
    """An element of H^1(G, Pic Y) in coordinates (e1, ..., e6) over F_2."""

    bits: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        if len(self.bits) != 6 or any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"need six bits, got {self.bits!r}")

    @staticmethod
    def zero() -> "CohClass":
        return CohClass((0, 0, 0, 0, 0, 0))

    @staticmethod
    def from_bits(bits) -> "CohClass":
        return CohClass(tuple(int(b) & 1 for b in bits))

    def __xor__(self, other: "CohClass") -> "CohClass":
        return CohClass(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def is_zero(self) -> bool:
        return not any(self.bits)

    @property
    def code(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


# ---------------------------------------------------------------------------
# derived cohomology data, computed once
# ---------------------------------------------------------------------------


def _matrix_rows(action: InvolutionAction) -> intlinalg.Matrix:
    return [list(row) for row in action.matrix]


def _columns(classes: list[DivClass]) -> intlinalg.Matrix:
    return [[d.coeffs[i] for d in classes] for i in range(RANK)]


@dataclass(frozen=True)
class _CohomologyData:
    kernel: tuple[DivClass, ...]
    image: tuple[DivClass, ...]
    divisors: tuple[int, ...]  # full elementary divisor list, units included
    class_matrix: tuple[tuple[int, ...], ...]  # 6x8; class_of(d) = matrix*d mod 2


def _brute_force_class(d: DivClass, one_minus: intlinalg.Matrix) -> CohClass:
    es = [e_class(i) for i in range(1, 7)]
    found = None
    for bits in itertools.product((0, 1), repeat=6):
        shifted = d
        for b, e in zip(bits, es):
            if b:
                shifted = shifted - e
        if intlinalg.solve(one_minus, list(shifted.coeffs)) is not None:
            if found is not None:
                raise InternalInconsistency(f"two classes match {d!r}: {found}, {bits}")
            found = bits
    if found is None:
        raise InternalInconsistency(f"no class matches {d!r}")
    return CohClass(found)


@lru_cache(maxsize=1)
def _cohomology() -> _CohomologyData:
    s = _matrix_rows(GEISER)
    eye = intlinalg.identity(RANK)
    one_plus = [[eye[i][j] + s[i][j] for j in range(RANK)] for i in range(RANK)]
    one_minus = [[eye[i][j] - s[i][j] for j in range(RANK)] for i in range(RANK)]

    kernel = [DivClass(tuple(v)) for v in intlinalg.kernel_basis(one_plus)]
    image = [DivClass(tuple(v)) for v in intlinalg.column_space_basis(one_minus)]
    if len(kernel) != 7:
        raise InternalInconsistency(f"ker(1+sigma) has rank {len(kernel)}, expected 7")

    # elementary divisors of the quotient: image generators in kernel coordinates
    kernel_cols = _columns(kernel)
    coords = []
    for img in image:
        c = intlinalg.solve(kernel_cols, list(img.coeffs))
        if c is None:
            raise InternalInconsistency(f"{img!r} is not inside ker(1+sigma)")
        coords.append(c)
    divisors = intlinalg.smith_elementary_divisors(intlinalg.transpose(coords))

    # a mod-2 matrix computing the class of any cocycle: complete the kernel
    # basis with a unit vector w to a basis of the whole lattice, send w to
    # zero, and send each kernel basis vector to its brute-forced class
    basis_matrix = None
    for j in range(RANK):
        unit = [1 if i == j else 0 for i in range(RANK)]
        candidate = [row[:] + [unit[i]] for i, row in enumerate(kernel_cols)]
        if abs(intlinalg.det(candidate)) == 1:
            basis_matrix = candidate
            break
    if basis_matrix is None:
        raise InternalInconsistency("kernel basis does not complete to a unimodular basis")
    inv_cols = []
    for j in range(RANK):
        unit = [1 if i == j else 0 for i in range(RANK)]
        col = intlinalg.solve(basis_matrix, unit)
        if col is None:
            raise InternalInconsistency("failed to invert a unimodular matrix")
        inv_cols.append(col)
    b_inv = intlinalg.transpose(inv_cols)
    kernel_classes = [_brute_force_class(k, one_minus) for k in kernel]
    c_mat = [[kernel_classes[j].bits[r] for j in range(7)] + [0] for r in range(6)]
    class_matrix = [[v % 2 for v in row] for row in intlinalg.mat_mul(c_mat, b_inv)]

    data = _CohomologyData(
        kernel=tuple(kernel),
        image=tuple(image),
        divisors=tuple(divisors),
        class_matrix=tuple(tuple(row) for row in class_matrix),
    )
    # startup self-check: the matrix must reproduce the basis classes exactly
    for i in range(1, 7):
        expected = tuple(1 if j == i - 1 else 0 for j in range(6))
        if _apply_class_matrix(data, e_class(i)).bits != expected:
            raise InternalInconsistency(f"class matrix misclassifies e_{i}")
    return data


def _apply_class_matrix(data: _CohomologyData, d: DivClass) -> CohClass:
    return CohClass(tuple(sum(row[j] * d.coeffs[j] for j in range(RANK)) % 2
                          for row in data.class_matrix))


def _one_minus_matrix() -> intlinalg.Matrix:
    s = _matrix_rows(GEISER)
    eye = intlinalg.identity(RANK)
    return [[eye[i][j] - s[i][j] for j in range(RANK)] for i in range(RANK)]


def one_plus_sigma_kernel() -> list[DivClass]:
    """An integer basis of ker(1 + sigma); rank 7."""
    return list(_cohomology().kernel)


def one_minus_sigma_image() -> list[DivClass]:
    """An integer basis of im(1 - sigma)."""
    return list(_cohomology().image)


def h1_galois() -> list[int]:
    """Elementary divisors of ker(1 + sigma)/im(1 - sigma), units dropped."""
    return [d for d in _cohomology().divisors if d != 1]


def _require_cocycle(d: DivClass) -> None:
    if (sigma(d) + d) != ZERO:
        raise NotACocycle(f"(1+sigma) does not kill {d!r}")


def is_coboundary(d: DivClass) -> bool:
    """Exact membership test for im(1 - sigma); requires d in ker(1 + sigma)."""
    _require_cocycle(d)
    return intlinalg.solve(_one_minus_matrix(), list(d.coeffs)) is not None


def class_of(d: DivClass) -> CohClass:
    """Coordinates of a cocycle in the basis (e1, ..., e6) of H^1."""
    _require_cocycle(d)
    return _apply_class_matrix(_cohomology(), d)


# ---------------------------------------------------------------------------
# difference representatives
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _pair_table() -> dict[int, tuple[int, int]]:
    curves = enumerate_exceptional()
    arr = np.array([c.cls.coeffs for c in curves], dtype=np.int64)
    clsmat = np.array(_cohomology().class_matrix, dtype=np.int64)
    codes = kernels.pair_class_codes(arr, clsmat)
    return kernels.first_pair_for_each_code(codes)


def represent_as_difference(v: CohClass) -> tuple[ExceptionalCurve, ExceptionalCurve]:
    """The first pair (E, E') in enumeration order with [E - E'] = v."""
    table = _pair_table()
    if v.code not in table:
        raise InternalInconsistency(f"no exceptional difference realises {v}")
    i, j = table[v.code]
    curves = enumerate_exceptional()
    return curves[i], curves[j]


def disjoint_representative(v: CohClass) -> tuple[ExceptionalCurve, ExceptionalCurve]:
    """A pair (E, E') with [E - E'] = v and E.E' = 0.

    A meeting pair (E.E' = 1) is repaired by swapping E' for sigma(E'), which
    changes the difference by the coboundary (1 - sigma)E' and is disjoint
    from E because E.sigma(E') = E.(H - E') = 1 - E.E'.  The trivial class is
    refused: the resulting algebra would be unramified.
    """
    if v.is_zero():
        raise TrivialClass("the trivial class has no disjoint representative here")
    e, eprime = represent_as_difference(v)
    meet = intersect(e.cls, eprime.cls)
    if meet == 0:
        return e, eprime
    if meet == 1:
        swapped = classify(sigma(eprime.cls))
        if swapped is None or intersect(e.cls, swapped.cls) != 0:
            raise InternalInconsistency(f"sigma swap failed for {e}, {eprime}")
        return e, swapped
    raise InternalInconsistency(f"{e} and {eprime} meet in {meet} points with class {v}")
