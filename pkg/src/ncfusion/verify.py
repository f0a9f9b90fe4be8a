"""Invariant suites shared by the command line and the test-suite."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import analytics
from . import fusion as fs
from . import linmap
from . import partition as pc
from .category import CategoryTable, family_table, key_noncrossing
from .projective import projective_members

EXACT_FAMILIES = ("allnc", "pairs", "unitary", "cs:1", "cs:2", "cs:3", "cinf")
MAX_FAILURES = 20


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, case) -> None:
        self.checked += 1
        if not cond and len(self.failures) < MAX_FAILURES:
            self.failures.append(case)

    def to_json_obj(self) -> dict:
        return {"suite": self.name, "checked": self.checked, "ok": self.ok, "failures": self.failures}


def _tables(bound: int) -> dict[str, CategoryTable]:
    return {name: family_table(name, bound) for name in EXACT_FAMILIES}


def category_suite(N: int = 4, bound: int = 6, rng: Optional[random.Random] = None) -> SuiteResult:
    rng = rng or random.Random(0)
    res = SuiteResult("category")
    parts = pc.all_partitions(min(bound, 6), noncrossing_only=False)
    for p in parts:
        r = p
        for _ in range(p.size):
            r = pc.rotate_cw(r)
        res.check(pc.adjoint(pc.adjoint(p)) == p and r == p, pc.to_text(p))
    small = [p for p in parts if p.size <= 2]
    for a, b, c in itertools.product(small, repeat=3):
        res.check(pc.tensor(pc.tensor(a, b), c) == pc.tensor(a, pc.tensor(b, c)), [pc.to_text(x) for x in (a, b, c)])
    for _ in range(200):
        a, b, c = (rng.choice(parts) for _ in range(3))
        res.check(pc.tensor(pc.tensor(a, b), c) == pc.tensor(a, pc.tensor(b, c)), [pc.to_text(x) for x in (a, b, c)])
    for name in ("allnc", "cs:2", "cs:3", "c0plus"):
        table = family_table(name, bound, use_oracle=False)
        res.check(all(key_noncrossing(k) for k in table.keys), f"{name} closure is noncrossing")
    return res


def counting_suite(N: int = 4, bound: int = 6, rng=None) -> SuiteResult:
    res = SuiteResult("counting")
    for name in ("allnc", "pairs", "cs:1", "cs:2", "unitary"):
        table = family_table(name, 8)
        for m in range(min(3, bound // 2) + 1):
            for w in pc.color_words(m):
                rep = linmap.verify_counting(table, w)
                res.check(rep.ok, {"family": name, "w": w, "members": rep.members, "classes": rep.class_sizes})
    return res


def gram_suite(N: int = 4, bound: int = 6, rng=None) -> SuiteResult:
    """Full rank of the Gram matrix of every member set; colorings do not change the maps."""
    res = SuiteResult("gram")
    tables = _tables(bound)
    seen: dict = {}
    for n in range(min(bound, 6) + 1):
        for k in range(n + 1):
            for up in pc.color_words(k):
                for low in pc.color_words(n - k):
                    for name, table in tables.items():
                        ps = table.members_with_coloring(up, low)
                        key = (k, n - k, tuple(p.blocks for p in ps))
                        if key not in seen:
                            _, r = linmap.gram_rank(ps, N)
                            seen[key] = r == len(ps)
                        res.check(seen[key], {"family": name, "upper": up, "lower": low, "N": N})
    return res


def shape_pairs(max_row: int = 3):
    """All composable pairs (p, q) of white noncrossing partitions with at most max_row points per row."""
    by_shape = {
        (k, l): pc.enumerate_partitions("w" * k, "w" * l) for k in range(max_row + 1) for l in range(max_row + 1)
    }
    for (k, l), qs in by_shape.items():
        for m in range(max_row + 1):
            for q in qs:
                for p in by_shape[(l, m)]:
                    yield p, q


TENSOR_POINTS = 8


def functoriality_suite(N: int = 4, bound: int = 6, rng=None) -> SuiteResult:
    """Adjoint, tensor and composition rules; composition uses the exponent that holds, N^(-gamma).

    The tensor rule is checked when p and q have at most TENSOR_POINTS points together.
    """
    res = SuiteResult("functoriality")
    for p, q in shape_pairs(min(3, bound // 2)):
        rep = linmap.verify_functoriality(p, q, N, check_tensor=p.size + q.size <= TENSOR_POINTS)
        res.check(
            rep.adjoint_ok and rep.tensor_ok is not False and rep.composition_inverse_ok and rep.ring_composition_ok,
            [pc.to_text(p), pc.to_text(q)],
        )
    return res


def direct_sum_suite(N: int = 4, bound: int = 6, rng=None) -> SuiteResult:
    res = SuiteResult("directsum")
    for name in ("allnc", "pairs"):
        table = family_table(name, 8)
        for m in range(3):
            for w in pc.color_words(m):
                rep = linmap.verify_direct_sum(table, w, N)
                res.check(rep.ok, {"family": name, "w": w, "ranks": rep.ranks})
    return res


def fusion_suite(N: int = 4, bound: int = 6, rng=None) -> SuiteResult:
    """Word products, partition decompositions and dimension counts agree on short words."""
    res = SuiteResult("fusion")
    for name in ("pairs", "allnc", "cs:2", "unitary"):
        table = family_table(name, 8)
        S = fs.compute_S(table)
        for w, w2 in itertools.product(fs.words_upto(S, 2), repeat=2):
            res.check(*fusion_agreement(table, S, w, w2, N))
    return res


def fusion_agreement(table: CategoryTable, S: fs.SClass, w, w2, N: int) -> tuple[bool, dict]:
    words = fs.word_tensor(S, w, w2)
    via = fs.tensor_via_partitions(table, S, w, w2)
    p, q = fs.phi(S, w), fs.phi(S, w2)
    present = [r for r, m in fs.rep_tensor(table, p, q) if m]
    dim_left = analytics.dim_general(table, p, N) * analytics.dim_general(table, q, N)
    dim_right = sum(analytics.dim_general(table, r, N) for r in present)
    ok = via == words and dim_left == dim_right
    case = {"family": table.describe(), "left": list(w), "right": list(w2), "dims": [dim_left, dim_right]}
    return ok, case


def dims_suite(N: int = 4, bound: int = 6, rng=None) -> SuiteResult:
    res = SuiteResult("dims")
    for name in EXACT_FAMILIES:
        table = family_table(name, 8)
        for m in range(3):
            for w in pc.color_words(m):
                for p in projective_members(table, w):
                    d, r = analytics.dim_general(table, p, N), linmap.rank_P(table, p, N)
                    res.check(d == r, {"family": name, "p": pc.to_text(p), "dim": d, "rank": r})
    return res


def classification_suite(N: int = 4, bound: int = 6, rng=None) -> SuiteResult:
    res = SuiteResult("classification")
    expected = {
        "pairs": ("One", None),
        "unitary": ("PlusMinus", None),
        "cs:1": ("Zs", 1),
        "cs:2": ("Zs", 2),
        "cs:3": ("Zs", 3),
        "c0plus": ("CalS", None),
    }
    for name, (kind, s) in expected.items():
        S = fs.compute_S(family_table(name, 8))
        res.check(S.kind == kind and S.s == s, {"family": name, "S": S.to_json_obj()})
    table = family_table("c0plus", 8)
    S = fs.compute_S(table)
    for x, y in itertools.product(S.labels(), repeat=2):
        res.check(S.fuse(x, y) == fs.fuse_direct(table, S, x, y), {"fuse": [S.name(x), S.name(y)]})
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "category": category_suite,
    "counting": counting_suite,
    "gram": gram_suite,
    "functoriality": functoriality_suite,
    "directsum": direct_sum_suite,
    "fusion": fusion_suite,
    "dims": dims_suite,
    "classification": classification_suite,
}

