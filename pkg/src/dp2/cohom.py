"""Exact cohomology dimensions of line bundles on the double plane.

Riemann-Roch on a surface with canonical class -H and chi(O) = 1 reads

    chi(D) = D.(D + H)/2 + 1,

always an integer on this lattice.  Global sections are computed by base-locus
peeling along (-1)-curves: whenever D.C < 0 for an exceptional curve C, the
curve C is in the base locus of |D| and h0(D) = h0(D - C).  The recursion
terminates because D.H drops by one at each step, and it bottoms out at

* D.H < 0: no sections (H is ample),
* D.H = 0: only the trivial class has a section,
* D nef (nonnegative against all 56 curves): h0 = chi(D), because
  D = K + (D + H) writes D as canonical plus ample, so the higher
  cohomology vanishes.

h2 is Serre duality h0(-H - D), and h1 closes the Euler characteristic.  A
separate non-effectivity oracle looks for a witness W with W.W >= 0 and
D.W < 0 among a small pool of irreducible classes; whenever it fires it
cross-checks the peeling route.

The module also contains the exact-sequence dimension solver used to replay
long-exact-sequence squeezes: given the dimensions of an exact sequence with
zero maps at both ends (some entries unknown), it propagates the rank
equations d_i = r_{i-1} + r_i, r_i >= 0 to exact integer intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import Infeasible, InternalInconsistency
from .picard import DivClass, E, H, L, enumerate_exceptional, intersect

__all__ = [
    "CohomDims",
    "chi_line",
    "is_nef",
    "h0",
    "h1",
    "h2",
    "cohom_dims",
    "noneffective_witness",
    "cohom_ideal_twist",
    "Interval",
    "DimSequence",
    "LesResult",
    "les_solve",
]


@dataclass(frozen=True)
class CohomDims:
    """The triple (h0, h1, h2) of a line bundle (or ideal-sheaf twist)."""

    h0: int
    h1: int
    h2: int

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)


def chi_line(d: DivClass) -> int:
    """chi(D) = D.(D + H)/2 + 1, exactly."""
    num = intersect(d, d + H)
    half, rem = divmod(num, 2)
    if rem:
        raise InternalInconsistency(f"D.(D+H) odd for {d!r}")
    return half + 1


def is_nef(d: DivClass) -> bool:
    """Nonnegative degree on H and on all 56 exceptional curves."""
    if intersect(d, H) < 0:
        return False
    return all(intersect(d, c.cls) >= 0 for c in enumerate_exceptional())


@lru_cache(maxsize=None)
def h0(d: DivClass) -> int:
    """Dimension of global sections, by base-locus peeling."""
    deg = intersect(d, H)
    if deg < 0:
        return 0
    if deg == 0:
        return 1 if d.is_zero() else 0
    for curve in enumerate_exceptional():
        if intersect(d, curve.cls) < 0:
            return h0(d - curve.cls)
    return chi_line(d)  # nef: higher cohomology vanishes


def h2(d: DivClass) -> int:
    """Serre duality: h2(D) = h0(-H - D)."""
    return h0(-H - d)


def h1(d: DivClass) -> int:
    """h1 = h0 + h2 - chi; negative values would mean a bug and raise."""
    value = h0(d) + h2(d) - chi_line(d)
    if value < 0:
        raise InternalInconsistency(f"negative h1 for {d!r}")
    return value


def cohom_dims(d: DivClass) -> CohomDims:
    return CohomDims(h0(d), h1(d), h2(d))


@lru_cache(maxsize=1)
def _witness_pool() -> tuple[DivClass, ...]:
    pool = [c.cls for c in enumerate_exceptional()]
    pool += [H, L]
    pool += [L - E(i) for i in range(1, 8)]
    return tuple(pool)


def noneffective_witness(d: DivClass) -> DivClass | None:
    """First pool class W with W.W >= 0 and D.W < 0; a certificate that h0(D) = 0.

    Exceptional members of the pool never qualify (their square is -1); they
    are handled by the peeling rule inside h0 instead.  A returned witness is
    an irreducible class of nonnegative square meeting D negatively, so D
    cannot be effective; this is cross-checked against the peeling oracle.
    """
    for w in _witness_pool():
        if w.selfint >= 0 and intersect(d, w) < 0:
            if h0(d) != 0:
                raise InternalInconsistency(
                    f"witness {w!r} contradicts h0({d!r}) = {h0(d)}")
            return w
    return None


def cohom_ideal_twist(d: DivClass, generic_point: bool = True) -> CohomDims | tuple[CohomDims, CohomDims]:
    """Dimensions of an ideal-sheaf twist I_p(D) for a single point p.

    The restriction sequence 0 -> I_p(D) -> O(D) -> O_p -> 0 forces
    h2(I_p(D)) = h2(D) and determines h0/h1 up to whether the evaluation of
    sections at p is onto (epsilon = 1) or zero (epsilon = 0):

    * h0(D) = 0: evaluation is zero, so (0, h1(D) + 1, h2(D));
    * h0(D) > 0 at a generic point: evaluation is onto, so
      (h0(D) - 1, h1(D), h2(D));
    * h0(D) > 0 at an arbitrary point: both branches are possible and the
      pair (epsilon = 1 branch, epsilon = 0 branch) is returned rather than
      a guess.
    """
    base = cohom_dims(d)
    if base.h0 == 0:
        return CohomDims(0, base.h1 + 1, base.h2)
    onto = CohomDims(base.h0 - 1, base.h1, base.h2)
    if generic_point:
        return onto
    return (onto, CohomDims(base.h0, base.h1 + 1, base.h2))


# ---------------------------------------------------------------------------
# exact-sequence dimension solver
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """Integers lo..hi inclusive; hi = None means unbounded above."""

    lo: int
    hi: int | None

    def is_empty(self) -> bool:
        return self.hi is not None and self.lo > self.hi

    def is_point(self) -> bool:
        return self.hi is not None and self.lo == self.hi

    def meet(self, other: "Interval") -> "Interval":
        lo = max(self.lo, other.lo)
        if self.hi is None:
            hi = other.hi
        elif other.hi is None:
            hi = self.hi
        else:
            hi = min(self.hi, other.hi)
        return Interval(lo, hi)

    def __str__(self) -> str:
        if self.is_point():
            return str(self.lo)
        return f"[{self.lo}..{'inf' if self.hi is None else self.hi}]"


@dataclass(frozen=True)
class DimSequence:
    """Dimensions of an exact sequence, zero maps at both ends; None = unknown."""

    entries: tuple[int | None, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("empty sequence")
        for e in self.entries:
            if e is not None and (not isinstance(e, int) or e < 0):
                raise ValueError(f"entries must be nonnegative ints or None, got {e!r}")

    @staticmethod
    def of(*entries: int | None) -> "DimSequence":
        return DimSequence(tuple(entries))


@dataclass(frozen=True)
class LesResult:
    """Solved entries (int where forced, Interval otherwise) plus rank intervals."""

    entries: tuple[int | Interval, ...]
    ranks: tuple[Interval, ...]

    @property
    def determined(self) -> bool:
        return all(isinstance(e, int) for e in self.entries)

    def entry(self, i: int) -> int:
        e = self.entries[i]
        if not isinstance(e, int):
            raise ValueError(f"entry {i} is underdetermined: {e}")
        return e


def _image(prev: Interval, d: int) -> Interval:
    # r_i = d - r_{i-1} for r_{i-1} in prev, clamped to r_i >= 0
    lo = 0 if prev.hi is None else d - prev.hi
    hi = d - prev.lo
    return Interval(max(lo, 0), hi).meet(Interval(0, None))


def les_solve(seq: DimSequence) -> LesResult:
    """Solve d_i = r_{i-1} + r_i with r_0 = r_n = 0 and all r_i >= 0.

    Forward/backward interval propagation along the chain is exact here, so
    every unknown entry comes back either as a forced integer or as the exact
    interval of its feasible values.  Raises Infeasible when the known entries
    admit no rank assignment at all.
    """
    if isinstance(seq, (list, tuple)):
        seq = DimSequence(tuple(seq))
    d = seq.entries
    n = len(d)
    top = Interval(0, None)

    fwd = [Interval(0, 0)]
    for i in range(1, n + 1):
        nxt = top if d[i - 1] is None else _image(fwd[i - 1], d[i - 1])
        if nxt.is_empty():
            raise Infeasible(f"no rank assignment for {seq}")
        fwd.append(nxt)

    bwd = [top] * (n + 1)
    bwd[n] = Interval(0, 0)
    for i in range(n - 1, -1, -1):
        bwd[i] = top if d[i] is None else _image(bwd[i + 1], d[i])
        if bwd[i].is_empty():
            raise Infeasible(f"no rank assignment for {seq}")

    ranks = []
    for f, b in zip(fwd, bwd):
        r = f.meet(b)
        if r.is_empty():
            raise Infeasible(f"no rank assignment for {seq}")
        ranks.append(r)

    entries: list[int | Interval] = []
    for i, known in enumerate(d):
        if known is not None:
            entries.append(known)
            continue
        left, right = ranks[i], ranks[i + 1]
        hi = None if (left.hi is None or right.hi is None) else left.hi + right.hi
        iv = Interval(left.lo + right.lo, hi)
        entries.append(iv.lo if iv.is_point() else iv)
    return LesResult(tuple(entries), tuple(ranks))
