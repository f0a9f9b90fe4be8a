"""Dimensions, character pushforward, length functions and ball growth."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from . import partition as pc
from .category import CategoryTable, Membership
from .errors import HorizonTooSmall, NonMemberPartition, NotProjective
from .fusion import GClass, SClass, compute_G, compute_S
from .partition import Partition
from .projective import dominates, equivalent, is_projective, projectives, strictly_dominates


def chebyshev(k: int, N: int) -> tuple[int, int]:
    """mu_k(sqrt N) as (a, b) meaning a + b*sqrt(N)."""
    prev, cur = (1, 0), (0, 1)
    if k == 0:
        return prev
    for _ in range(k - 1):
        # sqrt(N) * (a + b sqrt N) = b N + a sqrt N
        prev, cur = cur, (cur[1] * N - prev[0], cur[0] - prev[1])
    return cur


def chebyshev_dim(t: int, N: int) -> int:
    if t < 0:
        raise ValueError("t must be nonnegative")
    a, b = chebyshev(2 * t, N)
    assert b == 0
    return a


@dataclass(frozen=True)
class RSet:
    p: Partition
    members: tuple[Partition, ...]


@dataclass(frozen=True)
class IrrepClass:
    representative: Partition
    t: int
    dim: int

    @property
    def one_dim(self) -> bool:
        return self.t == 0 and self.dim == 1


def _check(table: CategoryTable, p: Partition) -> None:
    if not is_projective(p):
        raise NotProjective(pc.to_text(p))
    if table.contains(p) is not True:
        raise NonMemberPartition(pc.to_text(p))


def r_set(table: CategoryTable, p: Partition) -> RSet:
    """Noncrossing projectives q strictly below p and below no member that is itself strictly below p.

    These are the pieces of T_p that the projections of smaller members do
    not already absorb, so q lies outside the table.
    """
    _check(table, p)
    below = [q for q in projectives(p.upper_colors) if strictly_dominates(p, q)]
    inside = []
    for q in below:
        m = table.contains(q)
        if m is None:
            raise HorizonTooSmall(f"membership of {pc.to_text(q)} is undecided")
        if m:
            inside.append(q)
    out = [q for q in below if q not in inside and not any(dominates(r, q) for r in inside)]
    return RSet(p, tuple(out))


def character_pushforward(table: CategoryTable, p: Partition) -> list[int]:
    return sorted([p.t] + [q.t for q in r_set(table, p).members], reverse=True)


def dim_general(table: CategoryTable, p: Partition, N: int) -> int:
    return sum(chebyshev_dim(t, N) for t in character_pushforward(table, p))


def irrep_class(table: CategoryTable, p: Partition, N: int) -> IrrepClass:
    return IrrepClass(p, p.t, dim_general(table, p, N))


def length(p: Partition) -> int:
    return p.t


def length_prime(table: CategoryTable, p: Partition) -> int:
    """Like length, but a one-dimensional class other than the trivial one gets length 1."""
    if p.t >= 1:
        return p.t
    e = equivalent(table, p, pc.EMPTY)
    if e is Membership.UNKNOWN:
        raise HorizonTooSmall(f"cannot compare {pc.to_text(p)} with the empty partition")
    return 0 if e is Membership.YES else 1


def is_proper(table: CategoryTable) -> Membership:
    S = compute_S(table)
    G = compute_G(table, S)
    if S.finite and G.order is not None:
        return Membership.YES
    # an oracle settles every size, so a missing witness is a real absence
    return Membership.NO_WITHIN_BOUND if table.exact else Membership.UNKNOWN


@dataclass(frozen=True)
class BallCount:
    k: int
    count: int
    lower: int
    upper: int

    @property
    def ok(self) -> bool:
        return self.lower <= self.count <= self.upper


def normal_forms(S: SClass, G: GClass, k: int) -> list[Partition]:
    """g_0 x_1 g_1 ... x_k g_k over G-labels g_i and S-labels x_i."""
    gs = [G.representative(m) for m in G.elements()]
    xs = [S.representative(x) for x in S.labels()]
    out = []
    for x in itertools.product(xs, repeat=k):
        for g in itertools.product(gs, repeat=k + 1):
            parts = [g[0]]
            for i in range(k):
                parts += [x[i], g[i + 1]]
            out.append(pc.tensor_all(parts))
    return out


def ball_count(table: CategoryTable, k: int) -> BallCount:
    S = compute_S(table)
    G = compute_G(table, S)
    if not S.finite or G.order is None:
        raise HorizonTooSmall("the label set or the group is not finite within the bound")
    classes: list[Partition] = []
    for p in normal_forms(S, G, k):
        for q in classes:
            e = equivalent(table, p, q)
            if e is Membership.UNKNOWN:
                raise HorizonTooSmall(f"equivalence of {pc.to_text(p)} and {pc.to_text(q)} is undecided")
            if e is Membership.YES:
                break
        else:
            classes.append(p)
    s, g = S.size, G.order
    return BallCount(k, len(classes), g * s**k, s**k * g ** (k + 1))


def dimension_table(table: CategoryTable, N: int, max_row: int) -> list[dict]:
    """One row per projective member with at most max_row points per row."""
    rows = []
    for m in range(max_row + 1):
        for w in pc.color_words(m):
            for p in projectives(w):
                if table.contains(p) is not True:
                    continue
                rows.append(
                    {
                        "partition": pc.to_text(p),
                        "t": p.t,
                        "dim": dim_general(table, p, N),
                        "pushforward": character_pushforward(table, p),
                    }
                )
    return rows


def root_dimension(N: int) -> Optional[int]:
    """Integer square root of N when N is a perfect square."""
    r = int(N**0.5)
    while r * r > N:
        r -= 1
    while (r + 1) ** 2 <= N:
        r += 1
    return r if r * r == N else None
