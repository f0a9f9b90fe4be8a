"""Categories of partitions: bounded saturation, family oracles, membership.

Everything here works on one-line forms.  A partition is determined up to
rotation by its one-line form (all points rotated to the lower row), and a
category is closed under rotation, so a category is stored as the set of
one-line keys of its members.  On one-line keys the category operations
become:

* rotation: cyclic shift (colors are unchanged after a full pass),
* adjoint: reversal of the word together with a color swap,
* tensor product: concatenation,
* composition: gluing the tail of one word to the head of another,
  pairing points of opposite colors and merging their blocks.
"""

from __future__ import annotations

import enum
import hashlib
import itertools
import json
import logging
import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

from . import partition as pc
from .errors import BoundExceeded, UnsupportedFamily
from .partition import Partition

log = logging.getLogger(__name__)

HARD_LIMIT = 10
DEFAULT_BOUND = 8
CACHE_VERSION = 1

Key = tuple  # (colors: str, labels: tuple[int, ...])


class Membership(enum.Enum):
    YES = "yes"
    NO_WITHIN_BOUND = "no"
    UNKNOWN = "unknown"

    def __bool__(self) -> bool:
        return self is Membership.YES


def tri(value: Optional[bool]) -> Membership:
    if value is None:
        return Membership.UNKNOWN
    return Membership.YES if value else Membership.NO_WITHIN_BOUND


# ---------------------------------------------------------------------------
# one-line key operations


def key_size(key: Key) -> int:
    return len(key[0])


def key_shift(key: Key, r: int) -> Key:
    colors, labels = key
    return colors[r:] + colors[:r], pc.rgs(labels[r:] + labels[:r])


def key_mirror(key: Key) -> Key:
    colors, labels = key
    return pc.flip(colors[::-1]), pc.rgs(labels[::-1])


def key_orbit(key: Key) -> list[Key]:
    n = key_size(key)
    out = {key_shift(key, r) for r in range(max(n, 1))}
    m = key_mirror(key)
    out |= {key_shift(m, r) for r in range(max(n, 1))}
    return sorted(out)


def key_class(key: Key) -> Key:
    return key_orbit(key)[0]


def glue(a: Key, b: Key, j: int) -> Optional[Key]:
    """Compose by identifying the last j points of a with the first j of b.

    Returns None when some identified pair has equal colors.
    """
    ca, la = a
    cb, lb = b
    na = len(ca)
    for i in range(1, j + 1):
        if ca[na - i] == cb[i - 1]:
            return None
    offset = (max(la) + 1) if la else 0
    parent = list(range(offset + ((max(lb) + 1) if lb else 0)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(1, j + 1):
        ra, rb = find(la[na - i]), find(offset + lb[i - 1])
        if ra != rb:
            parent[rb] = ra
    labels = [find(x) for x in la[: na - j]] + [find(offset + x) for x in lb[j:]]
    return ca[: na - j] + cb[j:], pc.rgs(labels)


def cap_key(a: Key, i: int) -> Optional[Key]:
    """Cap the adjacent points i and i+1 of a one-line key."""
    colors, labels = a
    if colors[i] == colors[i + 1]:
        return None
    x, y = labels[i], labels[i + 1]
    rest = [x if lab == y else lab for lab in labels]
    del rest[i : i + 2]
    return colors[:i] + colors[i + 2 :], pc.rgs(rest)


def key_blocks(key: Key) -> list[Key]:
    colors, labels = key
    groups: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    return [("".join(colors[i] for i in g), (0,) * len(g)) for g in groups.values()]


def key_noncrossing(key: Key) -> bool:
    return pc.labels_noncrossing(key[1])


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class FamilyTag:
    name: str
    s: Optional[int] = None

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise UnsupportedFamily(f"unknown family {self.name!r}")
        if self.name == "cs" and (self.s is None or self.s < 1):
            raise UnsupportedFamily("cs needs a parameter s >= 1")

    def __str__(self) -> str:
        return f"cs:{self.s}" if self.name == "cs" else self.name


FAMILY_NAMES = ("allnc", "pairs", "unitary", "cs", "cinf", "c0plus", "allp")


def parse_family(text: str) -> FamilyTag:
    text = text.strip().lower()
    if text.startswith("cs:"):
        try:
            return FamilyTag("cs", int(text[3:]))
        except ValueError as exc:
            raise UnsupportedFamily(f"bad parameter in {text!r}") from exc
    aliases = {"c0+": "c0plus", "onplus": "pairs", "unplus": "unitary", "snplus": "allnc"}
    return FamilyTag(aliases.get(text, text))


def family_generators(tag: FamilyTag) -> list[Partition]:
    name = tag.name
    if name == "unitary":
        return []
    if name == "pairs":
        return [pc.mixed_identity()]
    if name == "allnc":
        return [pc.pi(2), pc.theta(1)]
    if name == "cs":
        return [pc.pi(2), pc.theta(tag.s)]
    if name == "cinf":
        return [pc.pi(2)]
    if name == "c0plus":
        return [pc.pi0("+")]
    if name == "allp":
        return [pc.pi(2), pc.theta(1), pc.crossing()]
    raise UnsupportedFamily(name)


def _block_ok(tag: FamilyTag, colors: str) -> bool:
    name = tag.name
    m = len(colors)
    balance = colors.count("w") - colors.count("b")
    if name in ("allnc", "allp"):
        return True
    if name == "pairs":
        return m == 2
    if name == "unitary":
        return m == 2 and balance == 0
    if name == "cs":
        return balance % tag.s == 0
    if name == "cinf":
        return balance == 0
    raise UnsupportedFamily(f"no closed-form membership test for {name}")


def has_oracle(tag: Optional[FamilyTag]) -> bool:
    return tag is not None and tag.name != "c0plus"


def oracle_member_key(tag: FamilyTag, key: Key) -> bool:
    if tag.name == "c0plus":
        raise UnsupportedFamily("no closed-form membership test for c0plus")
    if tag.name != "allp" and not key_noncrossing(key):
        return False
    return all(_block_ok(tag, colors) for colors, _ in key_blocks(key))


def oracle_member(tag: FamilyTag, p: Partition) -> bool:
    return oracle_member_key(tag, pc.one_line_key(p))


@lru_cache(maxsize=None)
def _block_colorings(tag: FamilyTag, m: int) -> tuple[str, ...]:
    return tuple(c for c in pc.color_words(m) if _block_ok(tag, c))


def oracle_keys(tag: FamilyTag, n: int) -> Iterator[Key]:
    """All one-line keys with n points accepted by the family oracle."""
    shapes = pc.set_partitions(n) if tag.name == "allp" else pc.noncrossing_set_partitions(n)
    for labels in shapes:
        sizes = [0] * (max(labels) + 1 if labels else 0)
        for lab in labels:
            sizes[lab] += 1
        choices = [_block_colorings(tag, m) for m in sizes]
        for combo in itertools.product(*choices):
            pos = [0] * len(sizes)
            colors = []
            for lab in labels:
                colors.append(combo[lab][pos[lab]])
                pos[lab] += 1
            yield "".join(colors), labels


# ---------------------------------------------------------------------------
# specs and tables


@dataclass(frozen=True)
class CategorySpec:
    generators: tuple[Partition, ...] = ()
    bound: int = DEFAULT_BOUND
    oracle: Optional[FamilyTag] = None
    slack: int = 1
    hard_limit: int = HARD_LIMIT

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.bound > self.hard_limit:
            raise BoundExceeded(f"bound {self.bound} exceeds the hard limit {self.hard_limit}")
        if self.generators and self.bound < max(g.size for g in self.generators):
            raise BoundExceeded("bound is smaller than a generator")

    def cache_name(self) -> str:
        texts = sorted(pc.to_text(g) for g in self.generators)
        digest = hashlib.sha256(json.dumps([texts, self.bound, self.slack]).encode()).hexdigest()[:16]
        return f"closure-{digest}.json"


@dataclass
class CategoryTable:
    """Members of a category up to ``bound`` points.

    Tables built from a family oracle answer membership exactly at every
    size; saturated tables only know partitions up to the bound.
    """

    spec: CategorySpec
    keys: Optional[frozenset] = None
    oracle: Optional[FamilyTag] = None
    label: str = ""
    _classes: dict = field(default_factory=dict, repr=False)

    @property
    def bound(self) -> int:
        return self.spec.bound

    @property
    def complete_upto(self) -> int:
        return self.spec.bound

    @property
    def generators(self) -> tuple[Partition, ...]:
        return self.spec.generators

    @property
    def exact(self) -> bool:
        return has_oracle(self.oracle)

    def has_key(self, key: Key) -> Optional[bool]:
        if self.exact:
            return oracle_member_key(self.oracle, key)
        if key_size(key) > self.bound:
            return None
        return key in self.keys

    def contains(self, p: Partition) -> Optional[bool]:
        return self.has_key(pc.one_line_key(p))

    def __contains__(self, p: Partition) -> bool:
        return self.contains(p) is True

    def member(self, p: Partition) -> Membership:
        return tri(self.contains(p))

    def keys_of_size(self, n: int) -> list[Key]:
        if n > self.bound:
            raise BoundExceeded(f"{n} points exceed the table bound {self.bound}")
        if self.exact:
            return sorted(oracle_keys(self.oracle, n))
        return sorted(k for k in self.keys if key_size(k) == n)

    def classes_of_size(self, n: int) -> list[Key]:
        if n not in self._classes:
            self._classes[n] = sorted({key_class(k) for k in self.keys_of_size(n)})
        return self._classes[n]

    def members_with_coloring(self, upper_colors: str, lower_colors: str) -> list[Partition]:
        cands = pc.enumerate_partitions(
            upper_colors, lower_colors, noncrossing_only=self.noncrossing, bound=max(self.bound, HARD_LIMIT)
        )
        out = []
        for p in cands:
            c = self.contains(p)
            if c is None:
                raise BoundExceeded(f"{p.size} points exceed the table bound {self.bound}")
            if c:
                out.append(p)
        return out

    @property
    def noncrossing(self) -> bool:
        if self.oracle is not None and self.oracle.name == "allp":
            return False
        return all(pc.is_noncrossing(g) for g in self.generators)

    def describe(self) -> str:
        return self.label or (str(self.oracle) if self.oracle else "custom")


# ---------------------------------------------------------------------------
# saturation


def _saturate(generators: Sequence[Partition], bound: int, slack: int) -> frozenset:
    keys: set = set()
    orbits: dict[Key, list[Key]] = {}
    queue: deque = deque()

    def add(key: Key) -> None:
        if key in keys:
            return
        orb = key_orbit(key)
        keys.update(orb)
        rep = orb[0]
        orbits[rep] = orb
        queue.append(rep)

    add(("", ()))
    add(pc.one_line_key(pc.identity()))
    for g in generators:
        add(pc.one_line_key(g))

    work_limit = bound + 2 * slack
    done: list[Key] = []
    while queue:
        x = queue.popleft()
        done.append(x)
        nx = key_size(x)
        for a in orbits[x]:
            for i in range(nx - 1):
                c = cap_key(a, i)
                if c is not None:
                    add(c)
        for y in done:
            ny = key_size(y)
            if nx + ny > work_limit:
                continue
            jmin = max(0, (nx + ny - bound + 1) // 2)
            jmax = min(nx, ny)
            for a in orbits[x]:
                for b in orbits[y]:
                    for j in range(jmax + 1):
                        if j and a[0][nx - j] == b[0][j - 1]:
                            break
                        if j >= jmin:
                            add(glue(a, b, j))
    return frozenset(keys)


def closure(spec: CategorySpec, cache_dir: Optional[str | os.PathLike] = None, label: str = "") -> CategoryTable:
    """Least set of one-line keys closed under the category operations within the bound."""
    if spec.bound > spec.hard_limit:
        raise BoundExceeded(f"bound {spec.bound} exceeds the hard limit {spec.hard_limit}")
    keys = None
    path = None
    if cache_dir is not None:
        path = Path(cache_dir) / spec.cache_name()
        keys = _load_cache(path, spec)
    if keys is None:
        keys = _saturate(spec.generators, spec.bound, spec.slack)
        if path is not None:
            _save_cache(path, spec, keys)
    return CategoryTable(spec=spec, keys=keys, oracle=spec.oracle, label=label)


def family_table(
    tag: FamilyTag | str,
    bound: int = DEFAULT_BOUND,
    use_oracle: bool = True,
    cache_dir: Optional[str | os.PathLike] = None,
    slack: int = 1,
) -> CategoryTable:
    if isinstance(tag, str):
        tag = parse_family(tag)
    spec = CategorySpec(tuple(family_generators(tag)), bound=bound, oracle=tag, slack=slack)
    if use_oracle and has_oracle(tag):
        return CategoryTable(spec=spec, keys=None, oracle=tag, label=str(tag))
    spec = CategorySpec(spec.generators, bound=bound, oracle=None if tag.name != "c0plus" else tag, slack=slack)
    return closure(spec, cache_dir=cache_dir, label=str(tag))


def generated_table(
    generators: Iterable[Partition],
    bound: int = DEFAULT_BOUND,
    cache_dir: Optional[str | os.PathLike] = None,
    label: str = "",
    slack: int = 1,
) -> CategoryTable:
    return closure(CategorySpec(tuple(generators), bound=bound, slack=slack), cache_dir=cache_dir, label=label)


def member(table: CategoryTable, p: Partition) -> Membership:
    return table.member(p)


# ---------------------------------------------------------------------------
# cache


def _save_cache(path: Path, spec: CategorySpec, keys: frozenset) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    members = [pc.to_json_obj(pc.from_key(k)) for k in sorted(keys)]
    doc = {
        "version": CACHE_VERSION,
        "generators": [pc.to_json_obj(g) for g in spec.generators],
        "bound": spec.bound,
        "slack": spec.slack,
        "members": members,
    }
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(doc, sort_keys=True))
    tmp.replace(path)


def _load_cache(path: Path, spec: CategorySpec) -> Optional[frozenset]:
    if not path.exists():
        return None
    try:
        doc = json.loads(path.read_text())
        if doc["version"] != CACHE_VERSION or doc["bound"] != spec.bound or doc.get("slack", 1) != spec.slack:
            return None
        gens = sorted(pc.to_text(pc.from_json_obj(g)) for g in doc["generators"])
        if gens != sorted(pc.to_text(g) for g in spec.generators):
            return None
        return frozenset(pc.one_line_key(pc.from_json_obj(m)) for m in doc["members"])
    except (ValueError, KeyError, TypeError) as exc:
        log.warning("rebuilding corrupt cache file %s (%s)", path, exc)
        return None


# ---------------------------------------------------------------------------
# block stability


@dataclass(frozen=True)
class BlockStability:
    result: Membership
    witness: Optional[tuple[Partition, Partition]] = None
    certified_by: str = ""


def _upper_form(key: Key) -> Partition:
    return pc.from_key(key, upper=key_size(key))


def is_block_stable(table: CategoryTable, scan: bool = False) -> BlockStability:
    """Decide whether every block of every member is a member.

    Family oracles are block-local conditions, so an exact table is
    block-stable without a scan; ``scan=True`` checks the members anyway.
    """
    for g in table.generators:
        for b in pc.blocks_of(g):
            if table.contains(b) is False:
                return BlockStability(Membership.NO_WITHIN_BOUND, (g, b), "generator scan")
    if table.exact and not scan:
        return BlockStability(Membership.YES, None, "oracle")
    for n in range(1, table.bound + 1):
        for rep in table.classes_of_size(n):
            for bkey in key_blocks(rep):
                if not table.has_key(bkey):
                    return BlockStability(
                        Membership.NO_WITHIN_BOUND, (_upper_form(rep), _upper_form(bkey)), f"scan<={table.bound}"
                    )
    return BlockStability(Membership.YES, None, "oracle+scan" if table.exact else f"scan<={table.bound}")


def is_color_blind(table: CategoryTable) -> bool:
    return table.contains(pc.mixed_identity()) is True
