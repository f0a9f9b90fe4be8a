"""Label sets, the free fusion semiring, and classification of categories."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from . import partition as pc
from .category import CategoryTable, Membership, is_block_stable
from .errors import NotProjective, NotThroughOne
from .partition import Partition, adjoint, compose, tensor
from .projective import (
    equivalent,
    factorize,
    find_blockstability_witness,
    is_projective,
    projective_members,
    projectives,
    to_elementary,
    upper_half,
)

Label = Union[int, str]
Word = tuple
ZERO_PLUS = "0+"
ZERO_MINUS = "0-"

CALS_NAMES = {ZERO_PLUS: "alpha", ZERO_MINUS: "beta", 1: "gamma", -1: "gammabar"}

# fusion of the four-element set, keyed by ordered pairs; missing pairs fuse to nothing
CALS_TABLE = {
    (1, -1): ZERO_PLUS,
    (-1, 1): ZERO_MINUS,
    (ZERO_PLUS, ZERO_PLUS): ZERO_PLUS,
    (ZERO_MINUS, ZERO_MINUS): ZERO_MINUS,
    (1, ZERO_MINUS): 1,
    (ZERO_PLUS, 1): 1,
    (-1, ZERO_PLUS): -1,
    (ZERO_MINUS, -1): -1,
}


# ---------------------------------------------------------------------------
# index sets


def compute_I(table: CategoryTable) -> str:
    return "Zstar" if table.contains(pc.pi(2)) else "PlusMinusOne"


@dataclass(frozen=True)
class SClass:
    kind: str  # One, PlusMinus, Zs, CalS
    s: Optional[int] = None  # modulus for Zs; None means no witness within the horizon
    horizon: int = 0

    @property
    def finite(self) -> bool:
        return self.kind != "Zs" or self.s is not None

    @property
    def size(self) -> Optional[int]:
        return {"One": 1, "PlusMinus": 2, "CalS": 4}.get(self.kind, self.s)

    def labels(self, max_abs: int = 2) -> list[Label]:
        if self.kind == "One":
            return [1]
        if self.kind == "PlusMinus":
            return [-1, 1]
        if self.kind == "CalS":
            return [ZERO_PLUS, ZERO_MINUS, 1, -1]
        if self.s is not None:
            return list(range(1, self.s + 1))
        return [0] + [k for m in range(1, max_abs + 1) for k in (m, -m)]

    def conjugate(self, x: Label) -> Label:
        if x in (ZERO_PLUS, ZERO_MINUS):
            return x
        if self.kind == "One":
            return 1
        if self.kind == "Zs" and self.s is not None:
            return (-x - 1) % self.s + 1
        return -x

    def fuse(self, x: Label, y: Label) -> Optional[Label]:
        if self.kind in ("One", "PlusMinus"):
            return None
        if self.kind == "CalS":
            return CALS_TABLE.get((x, y))
        if self.s is not None:
            return (x + y - 1) % self.s + 1
        return x + y

    def representative(self, x: Label) -> Partition:
        if x == ZERO_PLUS:
            return pc.pi0("+")
        if x == ZERO_MINUS:
            return pc.pi0("-")
        if self.kind == "Zs":
            if self.s is not None and x == self.s:
                return pc.pi(1) if self.s == 1 else pc.pi0("+")
            if x == 0:
                return pc.pi0("+")
        return pc.pi(x)

    def name(self, x: Label) -> str:
        if self.kind == "CalS":
            return CALS_NAMES[x]
        return str(x)

    def to_json_obj(self) -> dict:
        out: dict = {"type": self.kind}
        if self.kind == "Zs":
            out["s"] = self.s if self.s is not None else "inf"
            out["certified_upto"] = self.horizon
        return out


def theta_period(table: CategoryTable) -> Optional[int]:
    for k in range(1, table.bound + 1):
        if table.contains(pc.theta(k)):
            return k
    return None


def compute_S(table: CategoryTable) -> SClass:
    has_zero = table.contains(pc.pi0("+")) is True
    if not has_zero:
        if equivalent(table, pc.pi(1), pc.pi(-1)) is Membership.YES:
            return SClass("One", horizon=table.bound)
        return SClass("PlusMinus", horizon=table.bound)
    if compute_I(table) == "PlusMinusOne":
        return SClass("CalS", horizon=table.bound)
    return SClass("Zs", theta_period(table), horizon=table.bound)


def fuse(S: SClass, x: Label, y: Label) -> Optional[Label]:
    return S.fuse(x, y)


def conjugate_word(S: SClass, w: Sequence[Label]) -> Word:
    return tuple(S.conjugate(x) for x in reversed(w))


# ---------------------------------------------------------------------------
# partitions built from pairs of projectives


def nested_pairs(k: int, fused: bool) -> Partition:
    """All-white (2k,2k) partition joining point i to point 2k-1-i in each row.

    With ``fused`` the outermost upper pair and the outermost lower pair
    form a single through block.
    """
    n = 2 * k
    blocks = []
    for row in (0, n):
        for i in range(k):
            blocks.append([row + i, row + n - 1 - i])
    if fused and k:
        blocks = [blocks[0] + blocks[k]] + blocks[1:k] + blocks[k + 1 :]
    return pc.make_partition("w" * n, "w" * n, blocks)


def box_product(p: Partition, q: Partition, k: int, fused: bool = False) -> Partition:
    """Cap k through blocks of p against k of q; with ``fused`` the outermost pair stays through."""
    pu, qu = upper_half(p), upper_half(q)
    tp, tq = pu.lower, qu.lower
    if not 0 <= k <= min(tp, tq):
        raise ValueError(f"k={k} outside 0..{min(tp, tq)}")
    middle = pc.tensor_all([pc.identity_on("w" * (tp - k)), nested_pairs(k, fused), pc.identity_on("w" * (tq - k))])
    top = tensor(pu, qu)
    return compose(adjoint(top), compose(middle, top)[0])[0]


def rep_tensor(table: CategoryTable, p: Partition, q: Partition) -> list[tuple[Partition, Membership]]:
    """Terms of the decomposition of u_p ⊗ u_q, each with its membership."""
    for x in (p, q):
        if not is_projective(x):
            raise NotProjective(pc.to_text(x))
    out = [(tensor(p, q), table.member(tensor(p, q)))]
    for k in range(1, min(p.t, q.t) + 1):
        for fused in (False, True):
            r = box_product(p, q, k, fused)
            out.append((r, table.member(r)))
    return out


def fuse_direct(table: CategoryTable, S: SClass, x: Label, y: Label) -> Union[Label, None, Membership]:
    """Fusion read off the partitions: the label of rep(x) ⊡ rep(y), or None if absent."""
    r = box_product(S.representative(x), S.representative(y), 1, fused=True)
    m = table.member(r)
    if m is Membership.UNKNOWN:
        return Membership.UNKNOWN
    if m is Membership.NO_WITHIN_BOUND:
        return None
    return identify_label(table, S, r)


def identify_label(
    table: CategoryTable, S: SClass, a: Partition, max_abs: Optional[int] = None
) -> Union[Label, Membership]:
    if max_abs is None:
        max_abs = max(2, table.bound // 2)
    found = []
    unknown = False
    for x in S.labels(max_abs):
        e = equivalent(table, a, S.representative(x))
        if e is Membership.YES:
            found.append(x)
        elif e is Membership.UNKNOWN:
            unknown = True
    if len(found) == 1:
        return found[0]
    if len(found) > 1:
        raise AssertionError(f"labels {found} are not pairwise inequivalent")
    return Membership.UNKNOWN if unknown else Membership.NO_WITHIN_BOUND


# ---------------------------------------------------------------------------
# free fusion semiring on words


def word_tensor(S: SClass, w: Sequence[Label], w2: Sequence[Label]) -> Counter:
    w, w2 = tuple(w), tuple(w2)
    out: Counter = Counter()
    for j in range(min(len(w), len(w2)) + 1):
        a, z = w[: len(w) - j], w[len(w) - j :]
        if conjugate_word(S, z) != w2[:j]:
            continue
        b = w2[j:]
        out[a + b] += 1
        if a and b:
            f = S.fuse(a[-1], b[0])
            if f is not None:
                out[a[:-1] + (f,) + b[1:]] += 1
    return out


def semiring_product(S: SClass, x: Counter, y: Counter) -> Counter:
    out: Counter = Counter()
    for w, m in x.items():
        for w2, n in y.items():
            for term, c in word_tensor(S, w, w2).items():
                out[term] += m * n * c
    return out


def words(S: SClass, length: int, max_abs: int = 2) -> list[Word]:
    return [tuple(w) for w in itertools.product(S.labels(max_abs), repeat=length)]


def words_upto(S: SClass, length: int, max_abs: int = 2) -> list[Word]:
    return [w for n in range(length + 1) for w in words(S, n, max_abs)]


def phi(S: SClass, word: Sequence[Label]) -> Partition:
    return pc.tensor_all(S.representative(x) for x in word)


def word_of(table: CategoryTable, S: SClass, r: Partition) -> Union[Word, Membership, None]:
    """The word whose image is equivalent to r, read off its factorization.

    Returns None when a t=0 factor is a nontrivial one-dimensional class,
    and a Membership when the bound does not decide.
    """
    out = []
    for f in factorize(r):
        if f.t == 0:
            if f.size == 0:
                continue
            e = equivalent(table, f, pc.EMPTY)
            if e is Membership.YES:
                continue
            return None if e is Membership.NO_WITHIN_BOUND else Membership.UNKNOWN
        x = identify_label(table, S, f)
        if isinstance(x, Membership):
            return x if x is Membership.UNKNOWN else None
        out.append(x)
    return tuple(out)


def tensor_via_partitions(
    table: CategoryTable, S: SClass, w: Sequence[Label], w2: Sequence[Label]
) -> Union[Counter, Membership, None]:
    out: Counter = Counter()
    for r, present in rep_tensor(table, phi(S, w), phi(S, w2)):
        if present is Membership.UNKNOWN:
            return Membership.UNKNOWN
        if present is Membership.YES:
            word = word_of(table, S, r)
            if word is None or isinstance(word, Membership):
                return word
            out[word] += 1
    return out


# ---------------------------------------------------------------------------
# one-dimensional representations


def compute_J(table: CategoryTable) -> tuple[list[int], str]:
    ks = [k for k in range(1, table.bound // 2 + 1) if table.contains(pc.beta(k))]
    horizon = table.bound // 2
    if not ks:
        return [], "{0}"
    n = ks[0]
    if ks == list(range(n, horizon + 1, n)):
        return ks, "Z" if n == 1 else f"{n}Z"
    members = sorted({0} | set(ks) | {-k for k in ks})
    return ks, "{" + ",".join(str(k) for k in members) + "}"


@dataclass(frozen=True)
class GClass:
    order: Optional[int]  # None when no witness of finiteness lies within the horizon
    generator: Partition
    branch: int
    horizon: int

    def representative(self, m: int) -> Partition:
        return pc.tensor_power(self.generator, m)

    def elements(self) -> list[int]:
        if self.order is None:
            raise ValueError("infinite or undetermined group")
        return list(range(self.order))

    def to_json_obj(self) -> dict:
        return {"order": self.order if self.order is not None else "inf", "branch": self.branch}


def _min_power_trivial(table: CategoryTable, theta_part: Partition) -> Optional[int]:
    k = 1
    while k * theta_part.size <= table.bound:
        if table.contains(pc.tensor_power(theta_part, k)):
            return k
        k += 1
    return None


def compute_G(table: CategoryTable, S: Optional[SClass] = None) -> GClass:
    S = S or compute_S(table)
    if compute_I(table) == "Zstar":
        ks, _ = compute_J(table)
        if not ks:
            return GClass(1, pc.EMPTY, 1, table.bound)
        n = ks[0]
        s = S.s if S.kind == "Zs" else None
        return GClass(s // n if s is not None else None, pc.beta(n), 1, table.bound)
    if table.contains(pc.beta(1)):
        return GClass(_min_power_trivial(table, pc.theta(1)), pc.beta(1), 2, table.bound)
    if not table.contains(pc.beta(2)):
        return GClass(1, pc.EMPTY, 3, table.bound)
    return GClass(_min_power_trivial(table, pc.theta(2)), pc.beta(2), 3, table.bound)


def is_G_finite(table: CategoryTable) -> Membership:
    G = compute_G(table)
    if G.order == 1:
        return Membership.YES
    for s in range(1, table.bound + 1):
        if _min_power_trivial(table, pc.theta(s)) is not None:
            return Membership.YES
    return Membership.UNKNOWN


def identify_g(table: CategoryTable, G: GClass, b: Partition) -> Union[int, Membership]:
    if G.order is None:
        return Membership.UNKNOWN
    unknown = False
    for m in G.elements():
        e = equivalent(table, b, G.representative(m))
        if e is Membership.YES:
            return m
        unknown |= e is Membership.UNKNOWN
    return Membership.UNKNOWN if unknown else Membership.NO_WITHIN_BOUND


# ---------------------------------------------------------------------------
# injectivity and freeness


@dataclass
class InjectivityReport:
    length_bound: int
    pairs_checked: int = 0
    undecided: int = 0
    collisions: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.collisions and self.undecided == 0


def phi_injectivity_check(table: CategoryTable, length_bound: int = 3, S: Optional[SClass] = None) -> InjectivityReport:
    S = S or compute_S(table)
    rep = InjectivityReport(length_bound)
    for n in range(1, length_bound + 1):
        ws = words(S, n)
        images = [phi(S, w) for w in ws]
        for i in range(len(ws)):
            for j in range(i + 1, len(ws)):
                e = equivalent(table, images[i], images[j])
                rep.pairs_checked += 1
                if e is Membership.YES:
                    rep.collisions.append((ws[i], ws[j]))
                elif e is Membership.UNKNOWN:
                    rep.undecided += 1
    return rep


def one_dim_members(table: CategoryTable) -> list[Partition]:
    out = []
    for m in range(1, table.bound // 2 + 1):
        for w in pc.color_words(m):
            out.extend(p for p in projective_members(table, w) if p.t == 0)
    return out


@dataclass
class FreenessReport:
    result: Membership
    witness: Optional[Partition]
    block_witness: Optional[tuple]
    no_witness: bool
    block_stable: bool
    phi_respects_tensor: bool
    no_invertible_violation: bool
    tensor_checks: int = 0
    tensor_undecided: int = 0
    tensor_mismatches: list = field(default_factory=list)

    @property
    def conditions(self) -> tuple[bool, bool, bool, bool]:
        return (self.no_witness, self.block_stable, self.phi_respects_tensor, self.no_invertible_violation)

    @property
    def concur(self) -> bool:
        return len(set(self.conditions)) == 1


def _phi_tensor_check(table: CategoryTable, S: SClass, total_length: int, rep: FreenessReport) -> None:
    ws = words_upto(S, total_length)
    for w in ws:
        for w2 in ws:
            if len(w) + len(w2) > total_length:
                continue
            got = tensor_via_partitions(table, S, w, w2)
            if got is Membership.UNKNOWN:
                rep.tensor_undecided += 1
                continue
            rep.tensor_checks += 1
            if got is None or got != word_tensor(S, w, w2):
                rep.tensor_mismatches.append((w, w2))
    # every class of length at most one within the horizon must be hit by a word
    for p in one_dim_members(table):
        if equivalent(table, p, pc.EMPTY) is Membership.NO_WITHIN_BOUND:
            rep.tensor_mismatches.append(("not in image", pc.to_text(p)))
            break


def _invertible_violation(table: CategoryTable) -> bool:
    for p in one_dim_members(table):
        inverse_trivial = equivalent(table, tensor(p, pc.reverse(p)), pc.EMPTY) is Membership.YES
        if inverse_trivial and equivalent(table, p, pc.EMPTY) is Membership.NO_WITHIN_BOUND:
            return True
    return False


def is_free(table: CategoryTable, tensor_length: int = 3) -> FreenessReport:
    S = compute_S(table)
    witness = find_blockstability_witness(table)
    bs = is_block_stable(table)
    rep = FreenessReport(
        result=bs.result,
        witness=witness,
        block_witness=bs.witness,
        no_witness=witness is None,
        block_stable=bs.result is Membership.YES,
        phi_respects_tensor=False,
        no_invertible_violation=not _invertible_violation(table),
    )
    _phi_tensor_check(table, S, tensor_length, rep)
    rep.phi_respects_tensor = not rep.tensor_mismatches
    return rep


# ---------------------------------------------------------------------------
# case analysis and generation of the representation ring


def subring_case_report(table: CategoryTable) -> dict:
    S = compute_S(table)
    G = compute_G(table, S)
    _, J = compute_J(table)
    data = {
        "beta1": bool(table.contains(pc.beta(1))),
        "beta2": bool(table.contains(pc.beta(2))),
        "theta2": bool(table.contains(pc.theta(2))),
        "one_equiv_minus_one": equivalent(table, pc.pi(1), pc.pi(-1)) is Membership.YES,
        "S": S.to_json_obj(),
        "J": J,
        "G": G.to_json_obj(),
        "bound": table.bound,
    }
    if G.order == 1:
        case = "1"
    elif data["one_equiv_minus_one"] and data["beta1"] and data["beta2"]:
        case = "2"
    elif J == "{-1,0,1}" and S.kind == "CalS":
        case = "3"
    elif J == "{-1,0,1}" and S.kind == "PlusMinus":
        case = "4"
    else:
        case = "none"
    data["case"] = case
    return data


def ring_generation_verify(table: CategoryTable, t_bound: int = 2) -> dict:
    """Check that every class with at most t_bound through blocks is a product of G-labels and S-labels."""
    S = compute_S(table)
    G = compute_G(table, S)
    reached, total, unreached, undecided = 0, 0, [], 0
    seen_g = set()
    max_row = table.bound // 2
    for m in range(max_row + 1):
        for w in pc.color_words(m):
            for p in projective_members(table, w):
                if p.t > t_bound:
                    continue
                total += 1
                ok = True
                for f in factorize(p):
                    if f.t == 0:
                        g = identify_g(table, G, f)
                        if isinstance(g, Membership):
                            ok = False
                            undecided += g is Membership.UNKNOWN
                            break
                        seen_g.add(g)
                    else:
                        x = identify_label(table, S, f)
                        if isinstance(x, Membership):
                            # a t=1 factor may carry a one-dimensional part
                            try:
                                b, e = to_elementary(table, f)
                            except NotThroughOne:
                                ok = False
                                break
                            g = identify_g(table, G, b)
                            x = identify_label(table, S, e)
                            if isinstance(g, Membership) or isinstance(x, Membership):
                                ok = False
                                break
                            seen_g.add(g)
                if ok:
                    reached += 1
                else:
                    unreached.append(pc.to_text(p))
    return {
        "t_bound": t_bound,
        "classes_total": total,
        "reached": reached,
        "unreached": unreached,
        "undecided": undecided,
        "g_labels_seen": sorted(seen_g),
        "G": G.to_json_obj(),
    }


def classify(table: CategoryTable) -> dict:
    S = compute_S(table)
    G = compute_G(table, S)
    _, J = compute_J(table)
    free = is_block_stable(table).result
    return {
        "I": compute_I(table),
        "S": S.to_json_obj(),
        "J": J,
        "G": G.to_json_obj(),
        "free": free is Membership.YES if free is not Membership.UNKNOWN else "unknown",
        "bound": table.bound,
    }


def beta_normal_form(table: CategoryTable, p: Partition) -> Union[tuple[int, int], Membership]:
    """(l, m) with a t=0 member p equivalent to beta_l^{⊗m}; l may be negative, m = 0 means empty."""
    if p.t != 0:
        raise ValueError("only partitions without through blocks have a beta normal form")
    if equivalent(table, p, pc.EMPTY) is Membership.YES:
        return (0, 0)
    unknown = False
    half = table.bound // 2
    for size in range(1, half + 1):
        for l in range(1, size + 1):
            if size % l:
                continue
            for sl in (l, -l):
                e = equivalent(table, p, pc.tensor_power(pc.beta(sl), size // l))
                if e is Membership.YES:
                    return (sl, size // l)
                unknown |= e is Membership.UNKNOWN
    return Membership.UNKNOWN if unknown else Membership.NO_WITHIN_BOUND
