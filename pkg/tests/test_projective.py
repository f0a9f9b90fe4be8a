import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncfusion import partition as pc
from ncfusion.category import Membership, family_table, generated_table
from ncfusion.errors import NotProjective, ThroughBlockMismatch
from ncfusion.projective import (
    building_partitions,
    cap,
    dominates,
    equivalent,
    factorize,
    find_blockstability_witness,
    is_building,
    is_projective,
    projective_data,
    projective_members,
    projectives,
    r_partition,
    through_block_decomposition,
    to_elementary,
)

NC6 = [p for p in pc.all_partitions(6) if p.size <= 6]
WHITE6 = [p for p in NC6 if set(p.colors) <= {"w"}]
PROJ6 = [p for w in [c for m in range(4) for c in pc.color_words(m)] for p in projectives(w)]


def test_projective_examples():
    assert all(is_projective(pc.pi(k)) for k in (1, 2, 3))
    assert all(is_projective(pc.beta(k)) for k in (1, 2, 3))
    assert not is_projective(pc.pair_cap("wb"))


@pytest.mark.parametrize("w", ["", "w", "wb", "ww", "wbw", "bbw"])
def test_projectives_match_brute_force(w):
    brute = {
        p for p in pc.enumerate_partitions(w, w) if pc.adjoint(p) == p and pc.compose(p, p)[0] == p
    }
    assert set(projectives(w)) == brute


def test_decomposition_examples():
    assert through_block_decomposition(pc.identity()) == (pc.identity(), pc.identity())
    for k in (1, 2):
        p_l, p_u = through_block_decomposition(pc.beta(k))
        assert p_l == p_u == pc.theta(k)


def _recomposes(p):
    p_l, p_u = through_block_decomposition(p)
    return is_building(p_u) and is_building(p_l) and pc.compose(pc.adjoint(p_l), p_u)[0] == p


def test_decomposition_recomposes_on_all_shapes():
    assert all(_recomposes(p) for p in WHITE6)


@given(st.sampled_from(NC6))
def test_decomposition_recomposes_colored(p):
    assert _recomposes(p)


def test_adjoint_of_building_has_white_upper_row():
    for m in range(5):
        for w in pc.color_words(m):
            for b in building_partitions(w):
                assert set(pc.adjoint(b).upper_colors) <= {"w"}


def test_projective_data_rejects_non_projective():
    with pytest.raises(NotProjective):
        projective_data(pc.pair_cap("ww"))


def test_r_partition_examples():
    assert r_partition(pc.pi(2), pc.pi(2)) == pc.pi(2)
    with pytest.raises(ThroughBlockMismatch):
        r_partition(pc.pi(1), pc.beta(1))


@given(st.sampled_from(PROJ6), st.sampled_from(PROJ6))
def test_r_partition_links_p_and_q(p, q):
    if p.t != q.t:
        return
    r = r_partition(p, q)
    assert pc.compose(pc.adjoint(r), r)[0] == p
    assert pc.compose(r, pc.adjoint(r))[0] == q


@pytest.mark.parametrize("s", [2, 3])
def test_equivalence_of_pi_modulo_s(s, tables):
    table = tables[f"cs:{s}"]
    ks = [k for k in range(-4, 5) if k]
    for k in ks:
        for k2 in ks:
            if abs(k) + abs(k2) > 8:
                continue
            expected = Membership.YES if (k - k2) % s == 0 else Membership.NO_WITHIN_BOUND
            assert equivalent(table, pc.pi(k), pc.pi(k2)) is expected, (k, k2)


def test_zero_marks_inequivalent_without_pi2(tables):
    assert equivalent(tables["c0plus"], pc.pi0("+"), pc.pi0("-")) is Membership.NO_WITHIN_BOUND
    assert equivalent(tables["allnc"], pc.pi0("+"), pc.pi0("-")) is Membership.YES


@given(st.sampled_from(PROJ6))
def test_equivalence_reflexive(p):
    assert equivalent(family_table("allnc"), p, p) is Membership.YES


def test_domination_examples():
    assert dominates(pc.pi(2), pc.pi(2))
    assert dominates(pc.identity_on("ww"), pc.pi(2))


@pytest.mark.parametrize("w", ["w", "wb", "ww", "wbw"])
def test_domination_is_partial_order(w):
    ps = projectives(w)
    for p in ps:
        assert dominates(p, p)
        for q in ps:
            if dominates(p, q) and dominates(q, p):
                assert p == q
            for r in ps:
                if dominates(p, q) and dominates(q, r):
                    assert dominates(p, r)


def test_cap_theta_pair_gives_rotated_pi(tables):
    s = 3
    p = pc.tensor(pc.theta(s), pc.theta(-s))
    capped = cap(p, "upper", s - 1, pc.pair_cap("wb"))
    one = pc.to_one_line(capped)
    assert len(one.blocks) == 1 and one.size == 2 * (s - 1)
    assert tables["cs:3"].contains(capped)


def test_cap_cancels_reverse_pairs():
    p = pc.make_partition("wwb", "", [[0, 1], [2]])
    bar = pc.make_partition("wbb", "", [[0], [1, 2]])
    q = pc.tensor(bar, p)
    while q.upper:
        q = cap(q, "upper", q.upper // 2 - 1, pc.pair_cap(q.upper_colors[q.upper // 2 - 1 : q.upper // 2 + 1]))
    assert q == pc.EMPTY


def test_symmetric_cap_keeps_class(tables):
    capped = cap(pc.pi(2), "symmetric", 0, pc.theta(1))
    assert capped == pc.pi(1)
    assert equivalent(tables["cs:1"], capped, pc.pi(2)) is Membership.YES
    assert equivalent(tables["cs:2"], capped, pc.pi(2)) is Membership.NO_WITHIN_BOUND


def test_factorize_examples():
    assert factorize(pc.pi(1)) == [pc.EMPTY, pc.pi(1), pc.EMPTY]
    assert factorize(pc.tensor(pc.beta(1), pc.pi(1))) == [pc.beta(1), pc.pi(1), pc.EMPTY]


def test_factors_are_members(tables):
    table = tables["cs:2"]
    for m in range(5):
        for w in pc.color_words(m):
            for p in projective_members(table, w):
                parts = factorize(p)
                assert pc.tensor_all(parts) == p
                assert all(table.contains(f) for f in parts)
                assert [f.t for f in parts[1::2]] == [1] * p.t


def test_to_elementary_examples():
    table = generated_table([pc.pi(2), pc.theta(1)], 6)
    assert to_elementary(table, pc.pi(1)) == (pc.EMPTY, pc.pi(1))
    a = pc.make_partition("ww", "ww", [[0, 2], [1], [3]])
    b, e = to_elementary(table, a)
    assert b.t == 0 and len(e.blocks) == 1
    assert equivalent(table, a, pc.tensor(b, e)) is Membership.YES


def test_balanced_elementary_matches_zero_mark(tables):
    table = tables["c0plus"]
    a = pc.one_block("wbwb", "wbwb")
    b, e = to_elementary(table, a)
    assert any(equivalent(table, e, pc.pi0(sg)) is Membership.YES for sg in "+-")


def test_blockstability_witness(tables):
    assert find_blockstability_witness(tables["allnc"]) is None
    assert find_blockstability_witness(tables["cs:2"]) is None
    assert find_blockstability_witness(tables["thetasq"]) == pc.theta(1)
