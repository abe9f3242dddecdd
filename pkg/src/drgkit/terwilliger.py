"""Dual idempotents, dual adjacency, and exact generation of T(x).

The algebra is generated from {A, E*_0, ..., E*_D} rather than {A, A*}: the
two generating sets give the same algebra, but integer generators keep the
whole closure over Q, so no surd ever enters the span arithmetic.

Closure strategy: maintain the reduced integer echelon form of the current
span (exactla.ExactSpan) together with its rows reshaped back into matrices.
Only pairs involving a newly inserted element are multiplied in later passes;
pairs between old elements were already reduced against a smaller span and a
span only grows, so re-multiplying them cannot add anything.  Reduced rows
have stripped content, which keeps products comfortably inside int64.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .exactla import ExactMatrix, ExactSpan
from .graph_core import DistanceData, Graph, distances
from .scheme import DrgParameters, EigenData, intersection_matrix

__all__ = [
    "DualIdempotents",
    "DualAdjacency",
    "AlgebraBasis",
    "dual_idempotents",
    "dual_adjacency",
    "algebra_closure",
    "terwilliger_dimension",
    "tridiagonal_primary",
]


@dataclass(frozen=True)
class DualIdempotents:
    """Diagonal 0/1 projections onto the distance classes from the base vertex."""

    base: int
    E_star: tuple  # ExactMatrix, indices 0..D

    def indicator(self, i: int) -> np.ndarray:
        return self.E_star[i].int_array().diagonal().copy()


def dual_idempotents(g: Graph, x: int, dd: Optional[DistanceData] = None) -> DualIdempotents:
    dd = dd or distances(g)
    mats = []
    for i in range(dd.D + 1):
        diag = (dd.dist[x] == i).astype(np.int64)
        mats.append(ExactMatrix.from_int(np.diag(diag)))
    return DualIdempotents(base=int(x), E_star=tuple(mats))


@dataclass(frozen=True)
class DualAdjacency:
    """Dual adjacency matrix A* = A*_1(x) for a chosen Q-polynomial ordering."""

    base: int
    ordering: tuple[int, ...]
    A_star: ExactMatrix
    theta_star: tuple  # dual eigenvalues, one per distance class 0..D


def dual_adjacency(g: Graph, x: int, ed: EigenData, ordering: Sequence[int],
                   dd: Optional[DistanceData] = None) -> DualAdjacency:
    """A* built from E_1 of the ordering: (A*)_yy = |X| * (E_1)_{x,y}.

    The diagonal must be constant on each distance class from x (these
    constants are the dual eigenvalues, mutually distinct); a non-constant
    diagonal means the ordering was not Q-polynomial or upstream data is bad.
    """
    if not ed.exact:
        raise ValueError("dual adjacency needs exact eigen data")
    dd = dd or distances(g)
    order = tuple(int(i) for i in ordering)
    if sorted(order) != list(range(dd.D + 1)) or order[0] != 0:
        raise ValueError(f"not a valid ordering: {order}")
    E1 = ed.E[order[1]]
    n = g.n
    diag = [E1.entry(x, y) * n for y in range(n)]
    theta_star = []
    for i in range(dd.D + 1):
        cls = dd.classes_from(x, i)
        val = diag[cls[0]]
        for y in cls[1:]:
            if diag[y] != val:
                raise ValueError(
                    f"A* diagonal not constant on distance class {i} of vertex {x}"
                )
        theta_star.append(val)
    for i in range(len(theta_star)):
        for j in range(i + 1, len(theta_star)):
            if theta_star[i] == theta_star[j]:
                raise ValueError("dual eigenvalues are not mutually distinct")
    return DualAdjacency(
        base=int(x),
        ordering=order,
        A_star=ExactMatrix.diagonal(diag),
        theta_star=tuple(theta_star),
    )


@dataclass(frozen=True)
class AlgebraBasis:
    """A generated unital matrix algebra: generators, reduced basis, dimension."""

    generators: tuple
    basis: tuple  # ExactMatrix, reduced echelon representatives; basis[0] == I
    dim: int


def _closure_int(gen_arrays: list[np.ndarray], n: int) -> list[np.ndarray]:
    """Span-closure of integer generators under matrix product.

    The multiplication set is append-only (stable indices for the pending-pair
    queue): each successful insert contributes its reduced echelon residue,
    which spans the same space as the raw candidate but with stripped content,
    keeping later products small.  Returns the representatives in insertion
    order; index 0 is the identity.
    """
    from .exactla import _imatmul

    span = ExactSpan(n * n)
    mats: list[np.ndarray] = []
    seen: set[bytes] = set()

    def try_insert(M: np.ndarray) -> bool:
        if M.dtype != object:
            key = M.tobytes()
            if key in seen:
                return False
            seen.add(key)
        if span.insert(M):
            mats.append(span.last_row.va.reshape(n, n))
            return True
        return False

    for M in [np.eye(n, dtype=np.int64)] + gen_arrays:
        try_insert(np.ascontiguousarray(M))
    pending = [(i, j) for i in range(len(mats)) for j in range(len(mats))]
    pos = 0
    while pos < len(pending):
        i, j = pending[pos]
        pos += 1
        prod = _imatmul(mats[i], mats[j])
        if try_insert(np.ascontiguousarray(prod)):
            new = len(mats) - 1
            for t in range(len(mats)):
                pending.append((t, new))
                if t != new:
                    pending.append((new, t))
    return mats


def algebra_closure(generators: Sequence[ExactMatrix]) -> AlgebraBasis:
    """Unital algebra generated by the given exact matrices.

    Seeds the span with {I} and the generators, then multiplies basis pairs
    (new ones only, which is equivalent to full passes) until nothing new
    appears.  Terminates because the dimension is bounded by n^2.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].rows
    for m in gens:
        if m.shape != (n, n):
            raise ValueError("generators must be square and equally sized")
    if all(m.is_integer_matrix() for m in gens):
        reps = _closure_int([np.asarray(m.int_array(), dtype=np.int64) for m in gens], n)
        basis = tuple(ExactMatrix.from_int(r) for r in reps)
        return AlgebraBasis(generators=tuple(gens), basis=basis, dim=len(basis))
    # general exact path (surd generators); same algorithm on ExactMatrix
    d = 0
    for m in gens:
        if m.d:
            if d and m.d != d:
                raise ValueError("generators do not share one quadratic field")
            d = m.d
    span = ExactSpan(n * n, d)
    mats: list[ExactMatrix] = []

    def insert(M: ExactMatrix) -> bool:
        if span.insert(M):
            mats.append(M)
            return True
        return False

    for M in [ExactMatrix.identity(n)] + gens:
        insert(M)
    pending = [(i, j) for i in range(len(mats)) for j in range(len(mats))]
    pos = 0
    while pos < len(pending):
        i, j = pending[pos]
        pos += 1
        if insert(mats[i] @ mats[j]):
            new = len(mats) - 1
            for t in range(len(mats)):
                pending.append((t, new))
                if t != new:
                    pending.append((new, t))
    return AlgebraBasis(generators=tuple(gens), basis=tuple(mats), dim=span.dim)


def terwilliger_dimension(g: Graph, x: int, dd: Optional[DistanceData] = None) -> int:
    """dim T(x) via brute-force closure of {A, E*_0..E*_D}."""
    dd = dd or distances(g)
    gens = [ExactMatrix.from_int(np.asarray(g.adjacency, dtype=np.int64))]
    gens += list(dual_idempotents(g, x, dd).E_star)
    return algebra_closure(gens).dim


def tridiagonal_primary(params: DrgParameters) -> ExactMatrix:
    """Matrix of A on the standard basis of the primary module: row i carries
    (c_i, a_i, b_i) in columns i-1, i, i+1."""
    return ExactMatrix.from_int(intersection_matrix(params))
