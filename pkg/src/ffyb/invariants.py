"""Separating conjugation invariants evaluated on the solution orbits.

The map sending an orbit to the signed characteristic-polynomial
coefficients of any member lands on n+1 distinct points of F_q^n: the zero
vector, plus for j = 1..n the point whose i-th coordinate is C(j,i)*a^i.
This module builds those image points, evaluates the invariants on orbit
representatives, and decides which coordinate subsets still separate all
orbits (including the 2^n sweep for inclusion-minimal separating subsets).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import BudgetExceededError
from .gf import FieldElement, int_to_field
from .matfq import char_coeffs
from .orbits import OrbitLabel, representative
from .solutions import EquationInstance

SUBSET_SWEEP_MAX_N = 20


@dataclass(frozen=True)
class ImagePoint:
    """The invariant vector of the rank-j orbit: coordinates C(j,i)*a^i."""

    index: int
    coords: tuple[FieldElement, ...]


@dataclass(frozen=True)
class SeparationReport:
    full_set_separates: bool
    trace_alone_separates: bool
    minimal_separating_subsets: tuple[tuple[int, ...], ...] | None = None

    def to_json_dict(self) -> dict:
        out = {
            "full_set_separates": self.full_set_separates,
            "trace_alone_separates": self.trace_alone_separates,
        }
        if self.minimal_separating_subsets is not None:
            out["minimal_separating_subsets"] = [list(s)
                                                 for s in self.minimal_separating_subsets]
        return out


def orbit_invariants(inst: EquationInstance, label: OrbitLabel) -> tuple[FieldElement, ...]:
    """The invariant vector of an orbit, evaluated on its representative."""
    return char_coeffs(representative(inst, label))


def image_points(inst: EquationInstance) -> list[ImagePoint]:
    """The n+1 image points of the orbits, indexed by representative rank.

    Raises if any two coincide: with a != 0 they are always pairwise
    distinct, so a duplicate signals an implementation bug."""
    inst.require_nonzero_a()
    n, a = inst.n, inst.a
    fld = inst.field
    pts = []
    for j in range(n + 1):
        coords = tuple(int_to_field(fld, comb(j, i)) * a**i for i in range(1, n + 1))
        pts.append(ImagePoint(j, coords))
    if len({p.coords for p in pts}) != n + 1:
        raise ArithmeticError("image points are not pairwise distinct (internal bug)")
    return pts


def subset_separates(inst: EquationInstance, subset) -> bool:
    """True iff projecting the image points onto the 1-based coordinate
    subset stays injective, i.e. those invariants still separate all orbits."""
    idx = sorted(set(subset))
    if not idx:
        raise ValueError("subset must be nonempty")
    if idx[0] < 1 or idx[-1] > inst.n:
        raise ValueError(f"coordinate indices must lie in 1..{inst.n}")
    pts = image_points(inst)
    projections = {tuple(p.coords[i - 1] for i in idx) for p in pts}
    return len(projections) == len(pts)


def trace_separates(inst: EquationInstance) -> bool:
    """Whether the trace (the first invariant) alone separates the orbits.

    Its n+1 orbit values are 0, a, 2a, ..., na, so this holds whenever the
    characteristic exceeds n."""
    return subset_separates(inst, [1])


def minimal_separating_subsets(inst: EquationInstance) -> list[tuple[int, ...]]:
    """All inclusion-minimal separating coordinate subsets, by 2^n sweep.

    Ordered by size then lexicographically.  Refused for n > 20."""
    n = inst.n
    if n > SUBSET_SWEEP_MAX_N:
        raise BudgetExceededError(2**n, 2**SUBSET_SWEEP_MAX_N, "subset sweep")
    minimal: list[tuple[int, ...]] = []
    for size in range(1, n + 1):
        for s in combinations(range(1, n + 1), size):
            if any(set(m) <= set(s) for m in minimal):
                continue
            if subset_separates(inst, s):
                minimal.append(s)
    return minimal


def separation_report(inst: EquationInstance, *,
                      with_minimal_subsets: bool = False) -> SeparationReport:
    full = subset_separates(inst, range(1, inst.n + 1))
    minimal = tuple(minimal_separating_subsets(inst)) if with_minimal_subsets else None
    return SeparationReport(
        full_set_separates=full,
        trace_alone_separates=trace_separates(inst),
        minimal_separating_subsets=minimal,
    )
