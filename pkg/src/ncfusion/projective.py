"""Projective partitions: building halves, equivalence, domination, capping."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import partition as pc
from .category import CategoryTable, Membership
from .errors import (
    ColorMismatch,
    NotNoncrossing,
    NotProjective,
    NotThroughOne,
    RangeError,
    ThroughBlockMismatch,
)
from .partition import Partition, adjoint, compose, tensor


def is_projective(p: Partition) -> bool:
    if p.upper != p.lower or p.upper_colors != p.lower_colors:
        return False
    return adjoint(p) == p and compose(p, p)[0] == p


def is_building(p: Partition) -> bool:
    if set(p.lower_colors) - {"w"}:
        return False
    lab = p.labels()
    seen = set()
    mins = []
    for j in range(p.lower):
        block = p.blocks[lab[p.upper + j]]
        if block in seen or block[0] >= p.upper:
            return False
        seen.add(block)
        mins.append(block[0])
    return all(a < b for a, b in zip(mins, mins[1:]))


def _half(p: Partition, row: str) -> Partition:
    """Building partition carrying one row of p; through blocks become single white points."""
    if row == "upper":
        points = list(range(p.upper))
        colors = p.upper_colors
    else:
        points = list(range(p.upper, p.size))
        colors = p.lower_colors
    pos = {x: i for i, x in enumerate(points)}
    through = sorted(
        (blk for blk in p.blocks if p.is_through(blk)),
        key=lambda blk: min(x for x in blk if x in pos),
    )
    t = len(through)
    k = len(points)
    labels = [0] * (k + t)
    for i, blk in enumerate(p.blocks):
        for x in blk:
            if x in pos:
                labels[pos[x]] = i
    index = {blk: i for i, blk in enumerate(p.blocks)}
    for j, blk in enumerate(through):
        labels[k + j] = index[blk]
    return pc._from_labels(k, t, colors + "w" * t, labels)


def through_block_decomposition(p: Partition) -> tuple[Partition, Partition]:
    """Return (p_l, p_u) with p = p_l* p_u."""
    if not pc.is_noncrossing(p):
        raise NotNoncrossing(pc.to_text(p))
    return _half(p, "lower"), _half(p, "upper")


def upper_half(p: Partition) -> Partition:
    return _half(p, "upper")


@dataclass(frozen=True)
class ProjectiveData:
    p: Partition
    p_u: Partition
    p_l: Partition
    t: int


def projective_data(p: Partition) -> ProjectiveData:
    if not is_projective(p):
        raise NotProjective(pc.to_text(p))
    p_l, p_u = through_block_decomposition(p)
    return ProjectiveData(p, p_u, p_l, p.t)


def r_partition(p: Partition, q: Partition) -> Partition:
    """The partition q_u* p_u linking the upper halves of p and q."""
    pu, qu = upper_half(p), upper_half(q)
    if pu.lower != qu.lower:
        raise ThroughBlockMismatch(f"t(p)={pu.lower} but t(q)={qu.lower}")
    return compose(adjoint(qu), pu)[0]


def equivalent(table: CategoryTable, p: Partition, q: Partition) -> Membership:
    if p.t != q.t:
        return Membership.NO_WITHIN_BOUND
    return table.member(r_partition(p, q))


def dominates(p: Partition, q: Partition) -> bool:
    """p dominates q when pq = qp = q."""
    if p.upper_colors != q.upper_colors or p.lower_colors != q.lower_colors:
        raise ColorMismatch("domination needs equal colorings")
    return compose(p, q)[0] == q and compose(q, p)[0] == q


def strictly_dominates(p: Partition, q: Partition) -> bool:
    return p != q and dominates(p, q)


# ---------------------------------------------------------------------------
# enumeration of projective partitions


@lru_cache(maxsize=None)
def _building_shapes(k: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """(upper labels, labels of through blocks in order) for all building shapes on k points."""
    out = []
    for labels in pc.noncrossing_set_partitions(k):
        nb = max(labels) + 1 if labels else 0
        span = []
        for b in range(nb):
            pts = [i for i, x in enumerate(labels) if x == b]
            span.append((pts[0], pts[-1]))
        exposed = [
            b for b in range(nb) if not any(span[c][0] < span[b][0] and span[b][1] < span[c][1] for c in range(nb))
        ]
        for r in range(len(exposed) + 1):
            for chosen in itertools.combinations(exposed, r):
                ordered = tuple(sorted(chosen, key=lambda b: span[b][0]))
                out.append((labels, ordered))
    return tuple(out)


def building_partitions(colors: str) -> list[Partition]:
    k = len(colors)
    out = []
    for labels, through in _building_shapes(k):
        out.append(pc._from_labels(k, len(through), colors + "w" * len(through), list(labels) + list(through)))
    return out


@lru_cache(maxsize=4096)
def projectives(colors: str) -> tuple[Partition, ...]:
    """All noncrossing projective partitions with the given coloring on both rows."""
    out = {compose(adjoint(b), b)[0] for b in building_partitions(colors)}
    return tuple(sorted(out, key=lambda p: p.blocks))


def projective_members(table: CategoryTable, colors: str) -> list[Partition]:
    return [p for p in projectives(colors) if table.contains(p)]


# ---------------------------------------------------------------------------
# capping


def cap(p: Partition, row: str, start: int, b: Partition) -> Partition:
    """Collapse m neighbouring points of a row with the one-line partition b in P(m, 0)."""
    if b.lower != 0:
        raise RangeError("the capping partition must have an empty lower row")
    m = b.upper
    if row == "symmetric":
        if not is_projective(p):
            raise NotProjective(pc.to_text(p))
        return cap(cap(p, "lower", start, b), "upper", start, b)
    if row == "lower":
        colors = p.lower_colors
    elif row == "upper":
        colors = p.upper_colors
    else:
        raise ValueError(f"unknown row {row!r}")
    if start < 0 or start + m > len(colors):
        raise RangeError(f"cannot cap points {start}..{start + m - 1} of a row with {len(colors)} points")
    if colors[start : start + m] != b.upper_colors:
        raise ColorMismatch(f"capped colors {colors[start:start + m]!r} differ from {b.upper_colors!r}")
    middle = pc.tensor_all([pc.identity_on(colors[:start]), b, pc.identity_on(colors[start + m :])])
    if row == "lower":
        return compose(middle, p)[0]
    return compose(p, adjoint(middle))[0]


# ---------------------------------------------------------------------------
# factorization


def _restrict(p: Partition, lo: int, hi: int) -> Partition:
    k = p.upper
    pts = list(range(lo, hi)) + list(range(k + lo, k + hi))
    pos = {x: i for i, x in enumerate(pts)}
    blocks = [[pos[x] for x in blk] for blk in p.blocks if blk[0] in pos]
    return pc.make_partition(p.upper_colors[lo:hi], p.lower_colors[lo:hi], blocks)


def cut_points(p: Partition) -> list[int]:
    k = p.upper
    cuts = []
    for c in range(1, k):
        ok = True
        for blk in p.blocks:
            left = [(x if x < k else x - k) < c for x in blk]
            if any(left) and not all(left):
                ok = False
                break
        if ok:
            cuts.append(c)
    return cuts


def factorize(p: Partition) -> list[Partition]:
    """Split p into [B_0, A_1, B_1, ..., A_t, B_t] with t(A_i) = 1 and t(B_i) = 0."""
    if not is_projective(p):
        raise NotProjective(pc.to_text(p))
    if not pc.is_noncrossing(p):
        raise NotNoncrossing(pc.to_text(p))
    edges = [0] + cut_points(p) + [p.upper]
    out = []
    current = pc.EMPTY
    for lo, hi in zip(edges, edges[1:]):
        piece = _restrict(p, lo, hi)
        if piece.t == 0:
            current = tensor(current, piece)
        elif piece.t == 1:
            out.append(current)
            out.append(piece)
            current = pc.EMPTY
        else:
            raise AssertionError("an indecomposable noncrossing projective piece has at most one through block")
    out.append(current)
    return out


def fillers(a: Partition) -> list[Partition]:
    """Upper parts of the non-through blocks lying between consecutive points of a's through block."""
    through = [blk for blk in a.blocks if a.is_through(blk)]
    if len(through) != 1:
        raise NotThroughOne(pc.to_text(a))
    ups = [x for x in through[0] if x < a.upper]
    out = []
    for lo, hi in zip(ups, ups[1:]):
        if hi > lo + 1:
            out.append(_restrict_upper(a, lo + 1, hi))
    return out


def _restrict_upper(p: Partition, lo: int, hi: int) -> Partition:
    pos = {x: x - lo for x in range(lo, hi)}
    blocks = [[pos[x] for x in blk] for blk in p.blocks if blk[0] in pos]
    return pc.make_partition(p.upper_colors[lo:hi], "", blocks)


def through_block_core(a: Partition) -> Partition:
    """The one-block projective partition formed by the through block of a alone."""
    through = [blk for blk in a.blocks if a.is_through(blk)]
    if len(through) != 1:
        raise NotThroughOne(pc.to_text(a))
    up = "".join(a.colors[x] for x in through[0] if x < a.upper)
    return pc.one_block(up, up)


def is_elementary(a: Partition) -> bool:
    return a.t == 1 and len(a.blocks) == 1


def to_elementary(table: CategoryTable, a: Partition, max_points: Optional[int] = None) -> tuple[Partition, Partition]:
    """Find (B, E) with t(B) = 0, E a one-block projective and a ~ B ⊗ E.

    The first candidate pulls every filler out of the through block; if the
    table does not certify it, candidates are searched in increasing size.
    """
    if a.t != 1 or not is_projective(a):
        raise NotThroughOne(pc.to_text(a))
    if is_elementary(a):
        return pc.EMPTY, a
    cands = []
    fill = [compose(adjoint(b), b)[0] for b in fillers(a)]
    outer = [f for f in factorize(a) if f.t == 0]
    b0 = pc.tensor_all(outer + fill)
    cands.append((b0, through_block_core(a)))
    for b, e in cands:
        if equivalent(table, a, tensor(b, e)) is Membership.YES:
            return b, e
    limit = max_points if max_points is not None else table.bound
    for total in range(1, limit // 2 + 1):
        for m in range(1, total + 1):
            for up in pc.color_words(m):
                e = pc.one_block(up, up)
                if table.contains(e) is not True:
                    continue
                for w in pc.color_words(total - m):
                    for b in projective_members(table, w):
                        if b.t != 0:
                            continue
                        if equivalent(table, a, tensor(b, e)) is Membership.YES:
                            return b, e
    raise NotThroughOne(f"no elementary form found within {limit} points for {pc.to_text(a)}")


def find_blockstability_witness(table: CategoryTable) -> Optional[Partition]:
    """A one-line b with b*b in the table but b outside it, scanning by size."""
    for m in range(1, table.bound // 2 + 1):
        for w in pc.color_words(m):
            for p in projectives(w):
                if p.t != 0 or table.contains(p) is not True:
                    continue
                b = upper_half(p)
                if table.contains(b) is False:
                    return b
    return None


def equivalence_classes(table: CategoryTable, parts: list[Partition]) -> list[list[Partition]]:
    """Group projective members into classes; raises if some comparison is undecided."""
    classes: list[list[Partition]] = []
    for p in parts:
        for cls in classes:
            e = equivalent(table, p, cls[0])
            if e is Membership.UNKNOWN:
                raise RuntimeError(f"equivalence of {pc.to_text(p)} undecided within the bound")
            if e is Membership.YES:
                cls.append(p)
                break
        else:
            classes.append([p])
    return classes

