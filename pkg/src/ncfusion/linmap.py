"""The linear maps attached to partitions, held exactly.

A map is stored as an integer matrix times a half-integer power of N.  Rows
are indexed by lower multi-indices and columns by upper multi-indices, both
in N-ary order with the first index most significant.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import exact
from . import partition as pc
from .category import CategoryTable
from .errors import DimensionBudgetExceeded, NonMemberPartition, NotProjective
from .partition import Partition, DisjointSet
from .projective import equivalence_classes, is_projective, projective_members, strictly_dominates

BUDGET = 10**7


@dataclass(frozen=True)
class ScaledMatrix:
    """The matrix N**exponent * entries."""

    entries: np.ndarray
    exponent: Fraction
    N: int

    def __matmul__(self, other: "ScaledMatrix") -> "ScaledMatrix":
        return ScaledMatrix(self.entries @ other.entries, self.exponent + other.exponent, self.N)

    def adjoint(self) -> "ScaledMatrix":
        return ScaledMatrix(self.entries.T.copy(), self.exponent, self.N)

    def kron(self, other: "ScaledMatrix") -> "ScaledMatrix":
        return ScaledMatrix(np.kron(self.entries, other.entries), self.exponent + other.exponent, self.N)

    def scaled(self, e: Fraction) -> "ScaledMatrix":
        return ScaledMatrix(self.entries, self.exponent + Fraction(e), self.N)

    def is_zero(self) -> bool:
        return not np.any(self.entries)

    def equals(self, other: "ScaledMatrix") -> bool:
        if self.entries.shape != other.entries.shape or self.N != other.N:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        d = self.exponent - other.exponent
        base = self.N
        if d.denominator != 1:
            root = math.isqrt(base)
            if root * root != base:
                return False
            base, d = root, d * 2
        d = int(d)
        scale = base ** abs(d)
        peak = max(int(np.abs(self.entries).max()), int(np.abs(other.entries).max()))
        if peak * scale < 2**62 and self.entries.dtype.kind == other.entries.dtype.kind == "i":
            if d >= 0:
                return bool(np.array_equal(self.entries * scale, other.entries))
            return bool(np.array_equal(self.entries, other.entries * scale))
        a = self.entries.astype(object)
        b = other.entries.astype(object)
        if d >= 0:
            a = a * base**d
        else:
            b = b * base ** (-d)
        return exact.equal(a, b)

    def to_fractions(self) -> np.ndarray:
        """Exact rational form; requires an integral exponent or a square N."""
        e = self.exponent
        base = self.N
        if e.denominator != 1:
            root = math.isqrt(base)
            if root * root != base:
                raise ValueError("irrational scale factor")
            base, e = root, e * 2
        scale = Fraction(base) ** int(e)
        return exact.fraction_array(self.entries) * scale

    def to_json_obj(self) -> dict:
        return {
            "N": self.N,
            "exponent": str(self.exponent),
            "shape": list(self.entries.shape),
            "entries": self.entries.tolist(),
        }


def _check_budget(p: Partition, N: int) -> None:
    if N ** p.size > BUDGET:
        raise DimensionBudgetExceeded(f"N^{p.size} = {N ** p.size} entries exceed the budget {BUDGET}")


@lru_cache(maxsize=4096)
def t_ring(p: Partition, N: int) -> ScaledMatrix:
    """0/1 matrix of the unnormalized map: entry 1 iff indices agree along every block.

    Results are cached, so the returned entries must not be modified.
    """
    _check_budget(p, N)
    n = p.size
    arr = np.ones((N,) * n, dtype=np.int64) if n else np.ones((), dtype=np.int64)
    eye = np.eye(N, dtype=np.int64)
    for block in p.blocks:
        first = block[0]
        for x in block[1:]:
            shape = [1] * n
            shape[first] = N
            shape[x] = N
            arr = arr * eye.reshape(shape)
    k, l = p.upper, p.lower
    axes = list(range(k, n)) + list(range(k))
    mat = np.transpose(arr, axes).reshape(N**l, N**k)
    mat = np.ascontiguousarray(mat)
    mat.setflags(write=False)
    return ScaledMatrix(mat, Fraction(0), N)


def t_norm(p: Partition, N: int) -> ScaledMatrix:
    """The normalized map N^(-beta/2) times the 0/1 matrix, a partial isometry."""
    return t_ring(p, N).scaled(Fraction(-pc.stats(p).beta, 2))


def is_partial_isometry(m: ScaledMatrix) -> bool:
    return (m @ m.adjoint() @ m).equals(m)


def is_projection(m: ScaledMatrix) -> bool:
    return (m @ m).equals(m) and m.adjoint().equals(m)


def composition_gamma(p: Partition, q: Partition) -> tuple[Fraction, Partition, int]:
    """For T_p after T_q: the exponent gamma, the composite pq and its loop count."""
    pq, loops = pc.compose(p, q)
    bp, bq, bpq = (pc.stats(x).beta for x in (p, q, pq))
    return Fraction(bp + bq - bpq, 2) - loops, pq, loops


@dataclass(frozen=True)
class FunctorialityReport:
    adjoint_ok: bool
    tensor_ok: Optional[bool]
    composition_ok: bool
    composition_inverse_ok: bool
    ring_composition_ok: bool
    gamma: Fraction
    loops: int

    @property
    def ok(self) -> bool:
        return self.adjoint_ok and self.tensor_ok is not False and self.composition_ok


def verify_functoriality(p: Partition, q: Partition, N: int, check_tensor: bool = True) -> FunctorialityReport:
    """Check the adjoint, tensor and composition rules for T_p and T_q.

    ``composition_ok`` tests T_p T_q = N^gamma T_pq; ``composition_inverse_ok``
    tests the same identity with N^(-gamma); ``ring_composition_ok`` tests the
    unnormalized rule with one factor N per removed loop.  With
    ``check_tensor`` off the tensor rule is skipped and reported as None.
    """
    tp, tq = t_norm(p, N), t_norm(q, N)
    adjoint_ok = t_norm(pc.adjoint(p), N).equals(tp.adjoint())
    tensor_ok = t_norm(pc.tensor(p, q), N).equals(tp.kron(tq)) if check_tensor else None
    gamma, pq, loops = composition_gamma(p, q)
    lhs = tp @ tq
    tpq = t_norm(pq, N)
    composition_ok = lhs.equals(tpq.scaled(gamma))
    composition_inverse_ok = lhs.equals(tpq.scaled(-gamma))
    ring = (t_ring(p, N) @ t_ring(q, N)).equals(t_ring(pq, N).scaled(loops))
    return FunctorialityReport(adjoint_ok, tensor_ok, composition_ok, composition_inverse_ok, ring, gamma, loops)


# ---------------------------------------------------------------------------
# Gram matrices


def closed_components(p: Partition, q: Partition) -> int:
    """Number of components after overlaying the blocks of p and q on the same points."""
    ds = DisjointSet(p.size)
    for part in (p, q):
        for block in part.blocks:
            for x in block[1:]:
                ds.union(block[0], x)
    return len({ds.find(x) for x in range(p.size)})


def gram_matrix(ps: Sequence[Partition], N: int) -> np.ndarray:
    """Trace pairings Tr(T_q* T_p) of the 0/1 matrices, computed from the matrices."""
    if not ps:
        return np.zeros((0, 0), dtype=object)
    shapes = {(p.upper_colors, p.lower_colors) for p in ps}
    if len(shapes) != 1:
        raise ValueError("all partitions must share one coloring")
    flat = np.stack([t_ring(p, N).entries.ravel() for p in ps])
    return (flat @ flat.T).astype(object)


def gram_rank(ps: Sequence[Partition], N: int) -> tuple[np.ndarray, int]:
    g = gram_matrix(ps, N)
    return g, exact.integer_rank(g) if len(ps) else 0


# ---------------------------------------------------------------------------
# projections onto irreducible pieces


def _rational(p: Partition, N: int) -> np.ndarray:
    return t_norm(p, N).to_fractions()


def dominees(table: CategoryTable, p: Partition) -> list[Partition]:
    return [q for q in projective_members(table, p.upper_colors) if strictly_dominates(p, q)]


def projection_P(table: CategoryTable, p: Partition, N: int) -> np.ndarray:
    """T_p minus the projection onto the joint range of the dominated T_q."""
    if not is_projective(p):
        raise NotProjective(pc.to_text(p))
    if table.contains(p) is not True:
        raise NonMemberPartition(pc.to_text(p))
    tp = _rational(p, N)
    below = dominees(table, p)
    cols = exact.stack_columns([t_ring(q, N).entries for q in below], tp.shape[0])
    return tp - exact.span_projection(cols)


def rank_P(table: CategoryTable, p: Partition, N: int) -> int:
    return exact.rational_rank(projection_P(table, p, N))


@dataclass(frozen=True)
class CountingReport:
    colors: str
    members: int
    class_sizes: tuple[int, ...]

    @property
    def sum_of_squares(self) -> int:
        return sum(n * n for n in self.class_sizes)

    @property
    def ok(self) -> bool:
        return self.members == self.sum_of_squares


def verify_counting(table: CategoryTable, w: str) -> CountingReport:
    members = table.members_with_coloring(w, w)
    classes = equivalence_classes(table, projective_members(table, w))
    return CountingReport(w, len(members), tuple(len(c) for c in classes))


@dataclass(frozen=True)
class DirectSumReport:
    colors: str
    N: int
    ranks: tuple[int, ...]
    classes_in_direct_sum: bool
    orthogonal: bool

    @property
    def total(self) -> int:
        return sum(self.ranks)

    @property
    def ok(self) -> bool:
        return self.total == self.N ** len(self.colors) and self.classes_in_direct_sum and self.orthogonal


def verify_direct_sum(table: CategoryTable, w: str, N: int) -> DirectSumReport:
    projs = projective_members(table, w)
    mats = {p: projection_P(table, p, N) for p in projs}
    ranks = {p: exact.rational_rank(m) for p, m in mats.items()}
    classes = equivalence_classes(table, projs)
    in_sum = True
    for cls in classes:
        joint = exact.rational_rank(exact.stack_columns([mats[p] for p in cls], N ** len(w)))
        in_sum &= joint == sum(ranks[p] for p in cls)
    orthogonal = True
    for i, a in enumerate(classes):
        for b in classes[i + 1 :]:
            for p in a:
                for q in b:
                    orthogonal &= exact.is_zero(mats[p].dot(mats[q]))
    return DirectSumReport(w, N, tuple(ranks[p] for p in projs), in_sum, orthogonal)


def dump_matrix(p: Partition, N: int, normalized: bool = True) -> dict:
    m = t_norm(p, N) if normalized else t_ring(p, N)
    out = m.to_json_obj()
    out["partition"] = pc.to_text(p)
    return out


def projection_rank_or_none(table: CategoryTable, p: Partition, N: int) -> Optional[int]:
    try:
        return rank_P(table, p, N)
    except DimensionBudgetExceeded:
        return None
