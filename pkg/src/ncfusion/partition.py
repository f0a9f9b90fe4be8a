"""Two-colored partitions and the category operations on them.

Points are indexed 0..k-1 on the upper row and k..k+l-1 on the lower row,
both read left to right.  Colors are the characters ``w`` and ``b``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    BadIndex,
    BoundExceeded,
    ColorMismatch,
    EmptyRow,
    OverlappingBlocks,
    PartitionError,
    SizeMismatch,
    UncoveredPoint,
)

WHITE = "w"
BLACK = "b"
ENUMERATION_BOUND = 8

_FLIP = str.maketrans("wb", "bw")


def flip(colors: str) -> str:
    return colors.translate(_FLIP)


def _check_colors(colors: str) -> None:
    for c in colors:
        if c not in "wb":
            raise PartitionError(f"invalid color {c!r}")


class DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


@dataclass(frozen=True)
class PartitionStats:
    b: int
    t: int
    beta: int


@dataclass(frozen=True)
class Partition:
    upper: int
    lower: int
    colors: str
    blocks: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return self.upper + self.lower

    @property
    def upper_colors(self) -> str:
        return self.colors[: self.upper]

    @property
    def lower_colors(self) -> str:
        return self.colors[self.upper :]

    def labels(self) -> tuple[int, ...]:
        """Block number of every point, blocks numbered in canonical order."""
        out = [0] * self.size
        for i, block in enumerate(self.blocks):
            for x in block:
                out[x] = i
        return tuple(out)

    def is_through(self, block: Sequence[int]) -> bool:
        return block[0] < self.upper <= block[-1]

    @property
    def t(self) -> int:
        return sum(1 for blk in self.blocks if self.is_through(blk))

    def __str__(self) -> str:
        return to_text(self)


def _from_labels(k: int, l: int, colors: str, labels: Sequence[int]) -> Partition:
    groups: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    blocks = tuple(sorted(tuple(g) for g in groups.values()))
    return Partition(k, l, colors, blocks)


def make_partition(upper_colors: str, lower_colors: str, blocks: Iterable[Iterable[int]]) -> Partition:
    upper_colors = "".join(upper_colors)
    lower_colors = "".join(lower_colors)
    colors = upper_colors + lower_colors
    _check_colors(colors)
    n = len(colors)
    seen = [False] * n
    canon = []
    for block in blocks:
        block = sorted(int(x) for x in block)
        if not block:
            continue
        for x in block:
            if x < 0 or x >= n:
                raise BadIndex(x)
            if seen[x]:
                raise OverlappingBlocks(x)
            seen[x] = True
        canon.append(tuple(block))
    for x in range(n):
        if not seen[x]:
            raise UncoveredPoint(x)
    return Partition(len(upper_colors), len(lower_colors), colors, tuple(sorted(canon)))


def _remap(p: Partition, k: int, l: int, mapping: Sequence[int], colors: str) -> Partition:
    labels = [0] * (k + l)
    for i, block in enumerate(p.blocks):
        for x in block:
            labels[mapping[x]] = i
    return _from_labels(k, l, colors, labels)


# ---------------------------------------------------------------------------
# named partitions


EMPTY = Partition(0, 0, "", ())


def empty() -> Partition:
    return EMPTY


def identity(color: str = WHITE) -> Partition:
    return Partition(1, 1, color + color, ((0, 1),))


def mixed_identity() -> Partition:
    """One string with a white upper end and a black lower end."""
    return Partition(1, 1, "wb", ((0, 1),))


def identity_on(colors: str) -> Partition:
    k = len(colors)
    return Partition(k, k, colors + colors, tuple((i, k + i) for i in range(k)))


def one_block(upper_colors: str, lower_colors: str) -> Partition:
    n = len(upper_colors) + len(lower_colors)
    blocks = (tuple(range(n)),) if n else ()
    return Partition(len(upper_colors), len(lower_colors), upper_colors + lower_colors, blocks)


def pi(k: int) -> Partition:
    """One-block (|k|,|k|) partition, white for k > 0 and black for k < 0."""
    if k == 0:
        raise ValueError("use pi0 for the mixed one-block partitions")
    c = (WHITE if k > 0 else BLACK) * abs(k)
    return one_block(c, c)


def pi0(sign: str = "+") -> Partition:
    c = "wb" if sign == "+" else "bw"
    return one_block(c, c)


def theta(s: int) -> Partition:
    """One upper block of |s| points, white for s > 0 and black for s < 0."""
    c = (WHITE if s > 0 else BLACK) * abs(s)
    return one_block(c, "")


def beta(k: int) -> Partition:
    """The two-block projective partition with an upper and a lower block."""
    if k == 0:
        return EMPTY
    th = theta(k)
    return compose(adjoint(th), th)[0]


def pair_cap(colors: str = "wb") -> Partition:
    return one_block(colors, "")


def pair_cup(colors: str = "wb") -> Partition:
    return one_block("", colors)


def crossing(colors: str = "ww") -> Partition:
    return Partition(2, 2, colors + colors[::-1], ((0, 3), (1, 2)))


def tensor_power(p: Partition, m: int) -> Partition:
    out = EMPTY
    for _ in range(m):
        out = tensor(out, p)
    return out


# ---------------------------------------------------------------------------
# category operations


def tensor(p: Partition, q: Partition) -> Partition:
    k, l = p.upper + q.upper, p.lower + q.lower
    mapping = list(range(p.upper)) + [k + j for j in range(p.lower)]
    mapping += [p.upper + i for i in range(q.upper)] + [k + p.lower + j for j in range(q.lower)]
    labels = [0] * (k + l)
    nb = len(p.blocks)
    for i, block in enumerate(p.blocks):
        for x in block:
            labels[mapping[x]] = i
    for i, block in enumerate(q.blocks):
        for x in block:
            labels[mapping[p.size + x]] = nb + i
    colors = p.upper_colors + q.upper_colors + p.lower_colors + q.lower_colors
    return _from_labels(k, l, colors, labels)


def tensor_all(parts: Iterable[Partition]) -> Partition:
    out = EMPTY
    for p in parts:
        out = tensor(out, p)
    return out


def compose(q: Partition, p: Partition) -> tuple[Partition, int]:
    """Vertical concatenation qp: p on top, q below.  Returns (qp, loops)."""
    if p.lower != q.upper:
        raise SizeMismatch(f"cannot stack a ({q.upper},{q.lower}) partition below a ({p.upper},{p.lower}) one")
    if p.lower_colors != q.upper_colors:
        raise ColorMismatch(f"lower colors {p.lower_colors!r} differ from upper colors {q.upper_colors!r}")
    k, l, m = p.upper, p.lower, q.lower
    ds = DisjointSet(k + l + m)
    for block in p.blocks:
        for x in block[1:]:
            ds.union(block[0], x)
    # q's upper point j sits at k + j, its lower point j at k + l + j
    for block in q.blocks:
        first = k + block[0]
        for x in block[1:]:
            ds.union(first, k + x)
    outer = list(range(k)) + list(range(k + l, k + l + m))
    roots = {}
    labels = []
    for x in outer:
        r = ds.find(x)
        labels.append(roots.setdefault(r, len(roots)))
    middle_roots = {ds.find(x) for x in range(k, k + l)}
    loops = len(middle_roots - roots.keys())
    return _from_labels(k, m, p.upper_colors + q.lower_colors, labels), loops


def adjoint(p: Partition) -> Partition:
    k, l = p.upper, p.lower
    mapping = [l + i for i in range(k)] + list(range(l))
    return _remap(p, l, k, mapping, p.lower_colors + p.upper_colors)


UPPER_LEFT = "upper-left"
UPPER_RIGHT = "upper-right"
LOWER_LEFT = "lower-left"
LOWER_RIGHT = "lower-right"
CORNERS = (UPPER_LEFT, UPPER_RIGHT, LOWER_LEFT, LOWER_RIGHT)


def rotate(p: Partition, corner: str) -> Partition:
    """Move the point at ``corner`` to the same end of the other row, flipping its color."""
    k, l = p.upper, p.lower
    up, low = p.upper_colors, p.lower_colors
    if corner in (UPPER_LEFT, UPPER_RIGHT) and k == 0:
        raise EmptyRow("upper row is empty")
    if corner in (LOWER_LEFT, LOWER_RIGHT) and l == 0:
        raise EmptyRow("lower row is empty")
    if corner == UPPER_LEFT:
        mapping = [k - 1] + list(range(k - 1)) + [k + j for j in range(l)]
        return _remap(p, k - 1, l + 1, mapping, up[1:] + flip(up[0]) + low)
    if corner == UPPER_RIGHT:
        mapping = list(range(k - 1)) + [k - 1 + l] + [k - 1 + j for j in range(l)]
        return _remap(p, k - 1, l + 1, mapping, up[:-1] + low + flip(up[-1]))
    if corner == LOWER_LEFT:
        mapping = [i + 1 for i in range(k)] + [0] + [k + j for j in range(1, l)]
        return _remap(p, k + 1, l - 1, mapping, flip(low[0]) + up + low[1:])
    if corner == LOWER_RIGHT:
        mapping = list(range(k)) + [k + 1 + j for j in range(l - 1)] + [k]
        return _remap(p, k + 1, l - 1, mapping, up + flip(low[-1]) + low[:-1])
    raise ValueError(f"unknown corner {corner!r}")


def rotate_cw(p: Partition) -> Partition:
    """Shift every point one step clockwise along the boundary, keeping the shape."""
    if p.size == 0:
        return p
    if p.upper > 0:
        q = rotate(p, UPPER_RIGHT)
        return rotate(q, LOWER_LEFT)
    q = rotate(p, LOWER_LEFT)
    return rotate(q, UPPER_RIGHT)


def reverse(p: Partition) -> Partition:
    """Half-turn rotation: the lower row becomes the upper row and vice versa."""
    k, l = p.upper, p.lower
    mapping = [l + (k - 1 - i) for i in range(k)] + [l - 1 - j for j in range(l)]
    colors = flip(p.lower_colors[::-1]) + flip(p.upper_colors[::-1])
    return _remap(p, l, k, mapping, colors)


def boundary_order(p: Partition) -> list[int]:
    """Points in disk order: upper row left to right, then lower row right to left."""
    return list(range(p.upper)) + list(range(p.size - 1, p.upper - 1, -1))


def labels_noncrossing(labels: Sequence[int]) -> bool:
    last = {}
    for i, lab in enumerate(labels):
        last[lab] = i
    stack = []
    opened = set()
    for i, lab in enumerate(labels):
        if lab in opened:
            if not stack or stack[-1] != lab:
                return False
        else:
            opened.add(lab)
            stack.append(lab)
        if last[lab] == i:
            stack.pop()
    return True


def is_noncrossing(p: Partition) -> bool:
    lab = p.labels()
    return labels_noncrossing([lab[x] for x in boundary_order(p)])


def stats(p: Partition) -> PartitionStats:
    b = len(p.blocks)
    t = p.t
    return PartitionStats(b, t, b - t)


def blocks_of(p: Partition) -> list[Partition]:
    out = []
    for block in p.blocks:
        up = "".join(p.colors[x] for x in block if x < p.upper)
        low = "".join(p.colors[x] for x in block if x >= p.upper)
        out.append(one_block(up, low))
    return out


# ---------------------------------------------------------------------------
# one-line form


def to_one_line(p: Partition) -> Partition:
    """Rotate every upper point to the lower row (the upper-left point goes first)."""
    mapping = [p.upper - 1 - i for i in range(p.upper)] + [p.upper + j for j in range(p.lower)]
    colors = flip(p.upper_colors[::-1]) + p.lower_colors
    return _remap(p, 0, p.size, mapping, colors)


def rgs(labels: Sequence[int]) -> tuple[int, ...]:
    """Relabel blocks by order of first appearance."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


def one_line_key(p: Partition) -> tuple[str, tuple[int, ...]]:
    q = to_one_line(p)
    return q.colors, rgs(q.labels())


def from_key(key: tuple[str, Sequence[int]], upper: int = 0) -> Partition:
    """Inverse of :func:`one_line_key`, re-raising ``upper`` points to the upper row."""
    colors, labels = key
    n = len(colors)
    lower = n - upper
    # one-line position i < upper came from upper point upper-1-i
    mapping = [upper - 1 - i for i in range(upper)] + [upper + j for j in range(lower)]
    new_labels = [0] * n
    for i, lab in enumerate(labels):
        new_labels[mapping[i]] = lab
    new_colors = flip(colors[:upper][::-1]) + colors[upper:]
    return _from_labels(upper, lower, new_colors, new_labels)


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def set_partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All restricted growth strings of length n."""
    if n == 0:
        return ((),)
    out = []

    def rec(prefix, top):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for x in range(top + 2):
            prefix.append(x)
            rec(prefix, max(top, x))
            prefix.pop()

    rec([0], 0)
    return tuple(out)


@lru_cache(maxsize=None)
def noncrossing_set_partitions(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(s for s in set_partitions(n) if labels_noncrossing(s))


@lru_cache(maxsize=None)
def _shape_labelings(k: int, l: int, noncrossing_only: bool) -> tuple[tuple[int, ...], ...]:
    n = k + l
    order = list(range(k)) + list(range(n - 1, k - 1, -1))
    out = []
    for s in set_partitions(n):
        flat = [0] * n
        for pos, x in enumerate(order):
            flat[x] = s[pos]
        if noncrossing_only and not labels_noncrossing(s):
            continue
        out.append(tuple(flat))
    return tuple(out)


def enumerate_partitions(
    upper_colors: str,
    lower_colors: str,
    noncrossing_only: bool = True,
    bound: int = ENUMERATION_BOUND,
) -> list[Partition]:
    k, l = len(upper_colors), len(lower_colors)
    if k + l > bound:
        raise BoundExceeded(f"{k + l} points exceed the enumeration bound {bound}")
    colors = upper_colors + lower_colors
    _check_colors(colors)
    parts = [_from_labels(k, l, colors, lab) for lab in _shape_labelings(k, l, noncrossing_only)]
    parts.sort(key=lambda p: p.blocks)
    return parts


def color_words(n: int) -> list[str]:
    return ["".join(c) for c in itertools.product("wb", repeat=n)]


def all_partitions(max_points: int, noncrossing_only: bool = True) -> list[Partition]:
    """Every partition with at most ``max_points`` points, all shapes and colorings."""
    out = []
    for n in range(max_points + 1):
        for k in range(n + 1):
            for up in color_words(k):
                for low in color_words(n - k):
                    out.extend(enumerate_partitions(up, low, noncrossing_only, bound=max_points))
    return out


# ---------------------------------------------------------------------------
# serialization


def to_text(p: Partition) -> str:
    blocks = ";".join(" ".join(str(x) for x in b) for b in p.blocks)
    return f"{p.upper},{p.lower}|{p.colors}|{blocks}"


def from_text(s: str) -> Partition:
    try:
        shape, colors, blocks = s.strip().split("|")
        k, l = (int(x) for x in shape.split(","))
    except ValueError as exc:
        raise PartitionError(f"malformed partition text {s!r}") from exc
    if len(colors) != k + l:
        raise SizeMismatch(f"{len(colors)} colors for {k + l} points")
    parsed = [[int(x) for x in b.split()] for b in blocks.split(";")] if blocks else []
    return make_partition(colors[:k], colors[k:], parsed)


def to_json_obj(p: Partition) -> dict:
    return {"upper": p.upper, "lower": p.lower, "colors": p.colors, "blocks": [list(b) for b in p.blocks]}


def from_json_obj(obj: dict) -> Partition:
    k, l, colors = int(obj["upper"]), int(obj["lower"]), obj["colors"]
    if len(colors) != k + l:
        raise SizeMismatch(f"{len(colors)} colors for {k + l} points")
    return make_partition(colors[:k], colors[k:], obj["blocks"])


def render(p: Partition) -> str:
    """Two rows of circles with a letter per block underneath each point."""
    sym = {"w": "○", "b": "●"}
    lab = p.labels()
    letters = "abcdefghijklmnopqrstuvwxyz"

    def name(i):
        block = p.blocks[lab[i]]
        tag = letters[lab[i] % 26]
        return tag.upper() if p.is_through(block) else tag

    top = " ".join(sym[c] for c in p.upper_colors)
    top_l = " ".join(name(i) for i in range(p.upper))
    bot_l = " ".join(name(p.upper + j) for j in range(p.lower))
    bot = " ".join(sym[c] for c in p.lower_colors)
    return "\n".join([top, top_l, bot_l, bot])
