from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncfusion import exact
from ncfusion.category import family_table
from ncfusion import linmap as lm
from ncfusion import partition as pc
from ncfusion.errors import DimensionBudgetExceeded, NonMemberPartition, NotProjective

WHITE = [pc.enumerate_partitions("w" * k, "w" * l) for k in range(4) for l in range(4)]
BY_SHAPE = {(k, l): pc.enumerate_partitions("w" * k, "w" * l) for k in range(4) for l in range(4)}


def overlay_components(p, q):
    """Connected components of the graph whose edges join points sharing a block of p or of q."""
    adj = {x: set() for x in range(p.size)}
    for part in (p, q):
        for b in part.blocks:
            for x in b:
                adj[x].update(b)
    seen, count = set(), 0
    for x in adj:
        if x in seen:
            continue
        count += 1
        stack = [x]
        while stack:
            y = stack.pop()
            if y not in seen:
                seen.add(y)
                stack.extend(adj[y] - seen)
    return count


def test_identity_and_singletons():
    assert np.array_equal(lm.t_ring(pc.identity(), 3).entries, np.eye(3, dtype=int))
    singles = pc.make_partition("w", "w", [[0], [1]])
    assert np.array_equal(lm.t_ring(singles, 3).entries, np.ones((3, 3), dtype=int))


def test_cap_pairs_equal_indices():
    m = lm.t_ring(pc.pair_cap("wb"), 3).entries
    assert m.shape == (1, 9)
    assert list(m[0]) == [int(i == j) for i in range(3) for j in range(3)]


def test_beta_one_is_projection():
    t = lm.t_norm(pc.beta(1), 4)
    assert t.exponent == Fraction(-1)
    assert lm.is_projection(t)
    assert exact.equal(t.to_fractions(), np.full((4, 4), Fraction(1, 4), dtype=object))


def test_cap_is_partial_isometry():
    t = lm.t_norm(pc.pair_cap("wb"), 4)
    assert lm.is_partial_isometry(t)
    assert (t @ t.adjoint()).equals(lm.ScaledMatrix(np.array([[1]]), Fraction(0), 4))


def test_identity_is_projection():
    assert lm.is_projection(lm.t_norm(pc.identity(), 5))


def test_cap_after_cup():
    rep = lm.verify_functoriality(pc.pair_cap("wb"), pc.pair_cup("wb"), 4)
    assert rep.gamma == 0 and rep.loops == 1
    assert rep.ring_composition_ok and rep.composition_ok and rep.composition_inverse_ok


def test_identity_composition():
    rep = lm.verify_functoriality(pc.identity(), pc.identity(), 4)
    assert rep.gamma == 0 and rep.ok


def test_nonzero_gamma_pair():
    p = pc.pair_cap("ww")
    q = pc.make_partition("", "ww", [[0], [1]])
    rep = lm.verify_functoriality(p, q, 4)
    assert rep.gamma == Fraction(1, 2)
    assert rep.composition_inverse_ok
    assert not rep.composition_ok


@given(st.sampled_from(sorted(BY_SHAPE)), st.integers(0, 3), st.data())
def test_composition_rule_with_negative_exponent(shape, m, data):
    k, l = shape
    q = data.draw(st.sampled_from(BY_SHAPE[(k, l)]))
    p = data.draw(st.sampled_from(BY_SHAPE[(l, m)]))
    rep = lm.verify_functoriality(p, q, 4, check_tensor=p.size + q.size <= 8)
    assert rep.adjoint_ok and rep.tensor_ok is not False
    assert rep.composition_inverse_ok and rep.ring_composition_ok


@given(st.sampled_from([p for ps in WHITE for p in ps if p.size <= 4]), st.sampled_from([p for ps in WHITE for p in ps if p.size <= 4]))
def test_tensor_rule(p, q):
    assert lm.t_norm(pc.tensor(p, q), 3).equals(lm.t_norm(p, 3).kron(lm.t_norm(q, 3)))


def test_gram_two_by_two():
    ps = [pc.identity(), pc.make_partition("w", "w", [[0], [1]])]
    g, r = lm.gram_rank(ps, 4)
    assert g.tolist() == [[4, 4], [4, 16]]
    assert r == 2


@pytest.mark.parametrize("k,l", [(1, 1), (2, 1), (2, 2), (3, 1)])
def test_gram_matches_component_count(k, l):
    ps = BY_SHAPE[(k, l)]
    g = lm.gram_matrix(ps, 3)
    expected = [[3 ** overlay_components(p, q) for q in ps] for p in ps]
    assert g.tolist() == expected


def test_gram_degenerates_at_one():
    ps = BY_SHAPE[(2, 2)]
    _, r = lm.gram_rank(ps, 1)
    assert r < len(ps)


def test_gram_single():
    for N in (1, 2, 4):
        assert lm.gram_rank([pc.pi(2)], N)[1] == 1


def test_projection_examples(tables):
    p = lm.projection_P(tables["allnc"], pc.identity(), 4)
    expected = exact.fraction_array(np.eye(4, dtype=int)) - np.full((4, 4), Fraction(1, 4), dtype=object)
    assert exact.equal(p, expected)
    assert lm.rank_P(tables["allnc"], pc.identity(), 4) == 3
    assert lm.rank_P(tables["pairs"], pc.identity(), 4) == 4


def test_projection_errors(tables):
    with pytest.raises(NotProjective):
        lm.projection_P(tables["allnc"], pc.pair_cap("wb"), 4)
    with pytest.raises(NonMemberPartition):
        lm.projection_P(tables["pairs"], pc.pi(2), 4)


def test_counting_examples(tables):
    one = lm.verify_counting(tables["allnc"], "w")
    assert (one.members, one.class_sizes) == (2, (1, 1))
    two = lm.verify_counting(tables["allnc"], "ww")
    assert two.members == 14 and two.ok
    pairs = lm.verify_counting(tables["pairs"], "ww")
    assert (pairs.members, pairs.class_sizes) == (2, (1, 1))


def test_direct_sum_examples(tables):
    one = lm.verify_direct_sum(tables["allnc"], "w", 4)
    assert sorted(one.ranks) == [1, 3] and one.ok
    assert lm.verify_direct_sum(tables["allnc"], "ww", 4).total == 16
    pairs = lm.verify_direct_sum(tables["pairs"], "ww", 4)
    assert pairs.ok and len(pairs.ranks) == 2


def test_budget():
    with pytest.raises(DimensionBudgetExceeded):
        lm.t_ring(pc.identity_on("w" * 6), 5)
    assert lm.projection_rank_or_none(family_table("allnc"), pc.identity_on("w" * 6), 5) is None


def test_half_exponents_compare_exactly():
    a = lm.ScaledMatrix(np.array([[2]]), Fraction(0), 4)
    b = lm.ScaledMatrix(np.array([[1]]), Fraction(1, 2), 4)
    assert a.equals(b)
    c = lm.ScaledMatrix(np.array([[1]]), Fraction(1, 2), 5)
    assert not lm.ScaledMatrix(np.array([[2]]), Fraction(0), 5).equals(c)


def test_dump_matrix_is_json_ready():
    out = lm.dump_matrix(pc.beta(1), 2)
    assert out["exponent"] == "-1" and out["entries"] == [[1, 1], [1, 1]]


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_exact_rank_matches_numpy(rows):
    m = np.array(rows)
    assert exact.integer_rank(m) == exact.rational_rank(m) == np.linalg.matrix_rank(m)
