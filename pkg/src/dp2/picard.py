"""Picard lattice of the degree-2 del Pezzo double plane.

The surface Y is the blow-up of the projective plane at seven points in
general position, equivalently the double cover of the plane branched on a
smooth quartic.  Its Picard group is the free abelian group of rank 8 with
basis (L, E1, ..., E7), where L is the pullback of a line under the blow-down
and the Ei are the exceptional curves of the blow-up.  The intersection form
is diagonal with signature (1, 7):

    (d; m1..m7) . (d'; m1'..m7')  =  d*d' - m1*m1' - ... - m7*m7'

Everything in this module is exact integer arithmetic on that lattice: the
distinguished classes H = -K (the halved anticanonical polarisation, pullback
of a line under the double cover), the 56 classes of (-1)-curves in their
four classical families, and a small text grammar for divisor classes used by
the command line tools.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

__all__ = [
    "DivClass",
    "Family",
    "ExceptionalCurve",
    "ZERO",
    "L",
    "H",
    "K",
    "F",
    "E",
    "line_through",
    "conic_through",
    "cubic_with_node",
    "intersect",
    "canonical_class",
    "enumerate_exceptional",
    "classify",
    "parse_divisor",
    "format_divisor",
]

RANK = 8


@dataclass(frozen=True)
class DivClass:
    """A divisor class d*L + m1*E1 + ... + m7*E7, stored as (d, m1, ..., m7)."""

    coeffs: tuple[int, int, int, int, int, int, int, int]

    def __post_init__(self):
        if len(self.coeffs) != RANK:
            raise ValueError(f"need {RANK} coordinates, got {len(self.coeffs)}")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise TypeError("coordinates must be integers")

    @staticmethod
    def of(*coeffs: int) -> "DivClass":
        return DivClass(tuple(coeffs))

    def __add__(self, other: "DivClass") -> "DivClass":
        return DivClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivClass") -> "DivClass":
        return DivClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivClass":
        return DivClass(tuple(-a for a in self.coeffs))

    def __mul__(self, n: int) -> "DivClass":
        if not isinstance(n, int):
            return NotImplemented
        return DivClass(tuple(n * a for a in self.coeffs))

    __rmul__ = __mul__

    def dot(self, other: "DivClass") -> int:
        """Intersection number in the diagonal form diag(+1, -1, ..., -1)."""
        a, b = self.coeffs, other.coeffs
        return a[0] * b[0] - sum(a[i] * b[i] for i in range(1, RANK))

    @property
    def selfint(self) -> int:
        return self.dot(self)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def __str__(self) -> str:
        # compact symbolic form in the blow-up basis, e.g. "3L-E1-2E3";
        # always re-parseable by parse_divisor
        if self.is_zero():
            return "0"
        parts = []
        names = ["L"] + [f"E{i}" for i in range(1, RANK)]
        for c, name in zip(self.coeffs, names):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            parts.append(f"{sign}{'' if mag == 1 else mag}{name}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"DivClass{self.coeffs}"


ZERO = DivClass.of(0, 0, 0, 0, 0, 0, 0, 0)
L = DivClass.of(1, 0, 0, 0, 0, 0, 0, 0)


def E(i: int) -> DivClass:
    """The i-th exceptional class of the blow-up, 1 <= i <= 7."""
    if not 1 <= i <= 7:
        raise ValueError(f"index out of range: {i}")
    coeffs = [0] * RANK
    coeffs[i] = 1
    return DivClass(tuple(coeffs))


def line_through(i: int, j: int) -> DivClass:
    """Strict transform L - Ei - Ej of the line through the i-th and j-th points."""
    if i == j:
        raise ValueError("indices must be distinct")
    return L - E(i) - E(j)


def conic_through(i: int, j: int) -> DivClass:
    """Strict transform 2L - sum(Ek, k != i, j) of the conic through the other five points."""
    if i == j:
        raise ValueError("indices must be distinct")
    return 2 * L - sum((E(k) for k in range(1, 8) if k not in (i, j)), ZERO)


def cubic_with_node(i: int) -> DivClass:
    """Strict transform 3L - 2Ei - sum(Ek, k != i) of the nodal cubic through all seven points."""
    return 3 * L - 2 * E(i) - sum((E(k) for k in range(1, 8) if k != i), ZERO)


def canonical_class() -> DivClass:
    """K = -3L + E1 + ... + E7; satisfies K.K = 2 and K.E = -1 for every (-1)-curve E."""
    return DivClass.of(-3, 1, 1, 1, 1, 1, 1, 1)


K = canonical_class()
H = -K  # halved anticanonical class; pullback of a line under the double cover; H.H = 2
F = E(1) + line_through(1, 2)  # E1 + L12, the fibre-type class of the standard order model


def intersect(a: DivClass, b: DivClass) -> int:
    """Intersection pairing; symmetric and bilinear."""
    return a.dot(b)


class Family(Enum):
    """The four classical families of (-1)-curves on the 7-point blow-up."""

    E = "E"  # exceptional curves of the blow-up
    L = "L"  # strict transforms of lines through two points
    C = "C"  # strict transforms of conics through five points
    D = "D"  # strict transforms of nodal cubics through all seven points


@dataclass(frozen=True)
class ExceptionalCurve:
    """A (-1)-curve class together with its family tag and point indices."""

    cls: DivClass
    family: Family
    indices: tuple[int, ...]

    def __post_init__(self):
        if self.cls.selfint != -1 or self.cls.dot(H) != 1:
            raise ValueError(f"{self.cls!r} is not a (-1)-curve of degree 1")

    @property
    def name(self) -> str:
        return self.family.value + "".join(str(i) for i in self.indices)

    def __str__(self) -> str:
        return self.name


def _make(family: Family, indices: tuple[int, ...]) -> ExceptionalCurve:
    if family is Family.E:
        cls = E(indices[0])
    elif family is Family.L:
        cls = line_through(*indices)
    elif family is Family.C:
        cls = conic_through(*indices)
    else:
        cls = cubic_with_node(indices[0])
    return ExceptionalCurve(cls, family, indices)


@lru_cache(maxsize=1)
def _exceptional_curves() -> tuple[ExceptionalCurve, ...]:
    curves = [_make(Family.E, (i,)) for i in range(1, 8)]
    curves += [_make(Family.L, ij) for ij in itertools.combinations(range(1, 8), 2)]
    curves += [_make(Family.C, ij) for ij in itertools.combinations(range(1, 8), 2)]
    curves += [_make(Family.D, (i,)) for i in range(1, 8)]
    return tuple(curves)


def enumerate_exceptional() -> list[ExceptionalCurve]:
    """All 56 (-1)-curve classes: E1..E7, then Lij, Cij (lexicographic), then D1..D7."""
    return list(_exceptional_curves())


@lru_cache(maxsize=1)
def _by_class() -> dict[DivClass, ExceptionalCurve]:
    return {c.cls: c for c in _exceptional_curves()}


def classify(d: DivClass) -> ExceptionalCurve | None:
    """Match a class against the four closed-form families; None if not a (-1)-curve."""
    if d.selfint != -1 or d.dot(H) != 1:
        return None
    return _by_class().get(d)


# ---------------------------------------------------------------------------
# text grammar
#
# Either a raw coordinate vector "d,m1,m2,m3,m4,m5,m6,m7" or a signed sum of
# symbolic tokens with optional integer multipliers:
#
#     H K L F E1..E7 L12..L67 C12..C67 D1..D7 0
#
# e.g. "2H-3E1+L23", "F-H", "-H".  Whitespace is ignored; "L21" normalises
# to "L12".
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"([+-]?)(\d*)\*?([A-Za-z][0-9]*|0)")


def _token_class(tok: str) -> DivClass:
    if tok == "0":
        return ZERO
    if tok == "H":
        return H
    if tok == "K":
        return K
    if tok == "L":
        return L
    if tok == "F":
        return F
    m = re.fullmatch(r"([ELCD])([1-7])([1-7])?", tok)
    if not m:
        raise ValueError(f"unknown divisor token {tok!r}")
    kind, si, sj = m.group(1), int(m.group(2)), m.group(3)
    if kind in ("E", "D"):
        if sj is not None:
            raise ValueError(f"unknown divisor token {tok!r}")
        return E(si) if kind == "E" else cubic_with_node(si)
    if sj is None:
        raise ValueError(f"token {tok!r} needs two indices")
    i, j = sorted((si, int(sj)))
    if i == j:
        raise ValueError(f"indices of {tok!r} must be distinct")
    return line_through(i, j) if kind == "L" else conic_through(i, j)


def parse_divisor(text: str) -> DivClass:
    """Parse the divisor-class grammar shared by all command line surfaces."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty divisor expression")
    if "," in s:
        parts = s.split(",")
        if len(parts) != RANK:
            raise ValueError(f"coordinate vector needs {RANK} entries, got {len(parts)}")
        try:
            return DivClass(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"bad coordinate vector {text!r}") from exc
    total = ZERO
    pos = 0
    while pos < len(s):
        m = _TOKEN_RE.match(s, pos)
        if not m or (pos > 0 and m.group(1) == ""):
            raise ValueError(f"cannot parse divisor expression {text!r} at {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        mult = int(m.group(2)) if m.group(2) else 1
        total = total + sign * mult * _token_class(m.group(3))
        pos = m.end()
    return total


@lru_cache(maxsize=1)
def _named_classes() -> dict[DivClass, str]:
    named = {ZERO: "0", H: "H", K: "K", L: "L", F: "F"}
    for c in _exceptional_curves():
        named.setdefault(c.cls, c.name)
    return named


def format_divisor(d: DivClass) -> str:
    """A short name (H, K, L, F, or a curve name) when one exists, else the symbolic sum."""
    return _named_classes().get(d, str(d))
