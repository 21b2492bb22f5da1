"""The n+1 conjugation orbits of the solution set.

Every solution is conjugate to exactly one block matrix b*I ⊕ (k copies of
Q(a)), Q(a) = [[0,1],[0,a]], with b in {0, a}; the extremes are the zero
matrix and a*I.  Orbits are labeled Zero, ScalarA or Mixed{k,b}, carry the
rank of their representative as a fingerprint, and their sizes follow from
the orbit-stabilizer formula with stabilizer order |GL(n-k,q)|*|GL(k,q)|.
Brute-force oracles (orbit closure under all of GL, and direct centralizer
counts) cross-check the formulas at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError
from .gf import Field, FieldElement, exact_div
from .matfq import Matrix, direct_sum, gl_order, matrix_from_index, matrix_index
from .solutions import (CountReport, EquationInstance, brute_force_solutions,
                        is_solution)

GL_SCAN_BUDGET = 10**6


@dataclass(frozen=True)
class OrbitLabel:
    """Symbolic orbit name: Zero, ScalarA, or Mixed{k,b} with b in {"0","a"}."""

    kind: str  # "zero" | "scalar_a" | "mixed"
    k: int = 0
    b: str = "0"

    def text(self) -> str:
        if self.kind == "zero":
            return "Zero"
        if self.kind == "scalar_a":
            return "ScalarA"
        return f"Mixed{{k={self.k},b={self.b}}}"

    def __str__(self):
        return self.text()


ZERO = OrbitLabel("zero")
SCALAR_A = OrbitLabel("scalar_a")


def mixed_label(n: int, k: int, b: str) -> OrbitLabel:
    """Normalized Mixed label: for even n the middle orbit (k = n/2) is the
    same matrix for either b and is tagged with b = "0"."""
    if b not in ("0", "a"):
        raise ValueError('b must be "0" or "a"')
    if not 1 <= k <= n // 2:
        raise ValueError(f"k = {k} out of range 1..{n // 2}")
    if n == 2 * k:
        b = "0"
    return OrbitLabel("mixed", k, b)


@dataclass(frozen=True)
class OrbitRecord:
    label: OrbitLabel
    representative: Matrix
    rank: int
    stabilizer_order: int
    orbit_size: int

    def to_json_dict(self) -> dict:
        return {
            "label": self.label.text(),
            "representative": self.representative.text(),
            "rank": self.rank,
            "stabilizer_order": str(self.stabilizer_order),
            "orbit_size": str(self.orbit_size),
        }


def block_solution(inst: EquationInstance, k: int, b: FieldElement) -> Matrix:
    """The block matrix b*I of size n-2k ⊕ k copies of Q(a)."""
    if not 0 <= 2 * k <= inst.n:
        raise ValueError(f"k = {k} out of range for n = {inst.n}")
    fld = inst.field
    z, o = fld.zero(), fld.one()
    blocks = []
    if inst.n > 2 * k:
        blocks.append(Matrix.scalar(fld, inst.n - 2 * k, b))
    qa = Matrix(fld, [[z, o], [z, inst.a]])
    blocks.extend([qa] * k)
    out = blocks[0]
    for blk in blocks[1:]:
        out = direct_sum(out, blk)
    return out


def representative(inst: EquationInstance, label: OrbitLabel) -> Matrix:
    inst.require_nonzero_a()
    if label.kind == "zero":
        return Matrix.zeros(inst.field, inst.n)
    if label.kind == "scalar_a":
        return Matrix.scalar(inst.field, inst.n, inst.a)
    b = inst.field.zero() if label.b == "0" else inst.a
    return block_solution(inst, label.k, b)


def label_rank(inst: EquationInstance, label: OrbitLabel) -> int:
    if label.kind == "zero":
        return 0
    if label.kind == "scalar_a":
        return inst.n
    return label.k if label.b == "0" else inst.n - label.k


def stabilizer_order(inst: EquationInstance, label: OrbitLabel) -> int:
    """Order of the centralizer of the orbit representative in GL(n, q)."""
    inst.require_nonzero_a()
    n, q = inst.n, inst.q
    if label.kind in ("zero", "scalar_a"):
        return gl_order(n, q)
    return gl_order(n - label.k, q) * gl_order(label.k, q)


def orbit_size(inst: EquationInstance, label: OrbitLabel) -> int:
    return exact_div(gl_order(inst.n, inst.q), stabilizer_order(inst, label))


def all_labels(n: int) -> list[OrbitLabel]:
    """The n+1 orbit labels in ascending representative rank."""
    labels = [ZERO]
    labels += [mixed_label(n, k, "0") for k in range(1, n // 2 + 1)]
    labels += [mixed_label(n, k, "a") for k in range((n - 1) // 2, 0, -1)]
    labels.append(SCALAR_A)
    return labels


def list_orbits(inst: EquationInstance) -> list[OrbitRecord]:
    """All n+1 orbits, one per rank 0..n, in ascending rank order."""
    inst.require_nonzero_a()
    out = []
    for label in all_labels(inst.n):
        out.append(OrbitRecord(
            label=label,
            representative=representative(inst, label),
            rank=label_rank(inst, label),
            stabilizer_order=stabilizer_order(inst, label),
            orbit_size=orbit_size(inst, label),
        ))
    return out


def classify(inst: EquationInstance, X: Matrix) -> OrbitLabel:
    """Orbit of a solution, read off its rank.

    A solution satisfies X(X - aI) = 0 with x and x-a coprime, so its
    elementary divisors are copies of x and x-a and the multiplicity of x-a
    equals the rank; that multiplicity determines the orbit."""
    if not is_solution(inst, X):
        raise ValueError("matrix is not a solution of X^2 = aX")
    r = X.rank()
    if r == 0:
        return ZERO
    if r == inst.n:
        return SCALAR_A
    if r <= inst.n // 2:
        return mixed_label(inst.n, r, "0")
    return mixed_label(inst.n, inst.n - r, "a")


def orbit_sum_count(inst: EquationInstance) -> CountReport:
    """Total solution count reconstructed as the sum of all orbit sizes."""
    records = list_orbits(inst)
    return CountReport(
        n=inst.n, q=inst.q, a_encoding=inst.a.encoding,
        total=sum(r.orbit_size for r in records),
        method="orbit_sum",
        per_orbit=tuple((r.label.text(), r.orbit_size) for r in records),
    )


# ---------------------------------------------------------------------------
# Brute-force oracles.

def enumerate_gl(field: Field, n: int, *, budget: int = GL_SCAN_BUDGET) -> list[Matrix]:
    """All invertible n x n matrices, by scanning every matrix index."""
    space = field.q ** (n * n)
    if space > budget:
        raise BudgetExceededError(space, budget, "GL enumeration")
    out = []
    for idx in range(space):
        m = matrix_from_index(field, n, idx)
        if not m.det().is_zero():
            out.append(m)
    return out


def brute_force_conjugacy_classes(inst: EquationInstance, *,
                                  budget: int = GL_SCAN_BUDGET) -> list[list[Matrix]]:
    """Partition of the solution set into conjugation orbits.

    Each unvisited solution is closed under conjugation by every element of
    GL(n, q).  Classes are returned in ascending order of their smallest
    member index, members sorted by index."""
    inst.require_nonzero_a()
    sols = brute_force_solutions(inst, budget=budget)
    group = enumerate_gl(inst.field, inst.n, budget=budget)
    pairs = [(p, p.inverse()) for p in group]
    seen: set[Matrix] = set()
    classes = []
    for x in sols:
        if x in seen:
            continue
        orbit = {p * x * pinv for p, pinv in pairs}
        seen |= orbit
        classes.append(sorted(orbit, key=matrix_index))
    return classes


def brute_force_centralizer_order(inst: EquationInstance, X: Matrix, *,
                                  budget: int = GL_SCAN_BUDGET) -> int:
    """Count the P in GL(n, q) commuting with X."""
    if X.field != inst.field or not (X.n_rows == X.n_cols == inst.n):
        raise ValueError(f"expected a {inst.n}x{inst.n} matrix over the instance field")
    return sum(1 for p in enumerate_gl(inst.field, inst.n, budget=budget)
               if p * X == X * p)
