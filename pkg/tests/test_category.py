import json
import logging

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncfusion import partition as pc
from ncfusion.category import (
    CategorySpec,
    Membership,
    closure,
    family_table,
    generated_table,
    is_block_stable,
    is_color_blind,
    oracle_member,
    parse_family,
)
from ncfusion.errors import BoundExceeded, UnsupportedFamily

NC6 = [p for p in pc.all_partitions(6) if p.size <= 6]


def neutral_pairing(p):
    one = pc.to_one_line(p)
    return all(len(b) == 2 and one.colors[b[0]] != one.colors[b[1]] for b in one.blocks)


def test_identity_only_gives_neutral_pairings():
    table = generated_table([], bound=4)
    for p in pc.all_partitions(4):
        assert (table.contains(p) is True) == neutral_pairing(p), pc.to_text(p)
    assert table.contains(pc.pi0("+")) is False


def test_mixed_four_block_generates_its_reverse():
    table = family_table("c0plus", 8)
    assert table.member(pc.pi0("-")) is Membership.YES
    assert table.member(pc.pi(2)) is Membership.NO_WITHIN_BOUND


def test_free_symmetric_generators_give_everything():
    table = generated_table([pc.pi(2), pc.theta(1)], bound=6)
    assert all(table.contains(p) for p in NC6)


@pytest.mark.parametrize("name", ["allnc", "pairs", "unitary", "cs:2", "cs:3", "cinf"])
def test_saturation_matches_oracle(name):
    tag = parse_family(name)
    built = family_table(tag, 6, use_oracle=False)
    for p in NC6:
        assert built.contains(p) == oracle_member(tag, p), (name, pc.to_text(p))


def test_parity_blocks_single_point():
    table = generated_table([pc.tensor(pc.theta(1), pc.theta(1))], 8)
    assert table.member(pc.theta(1)) is Membership.NO_WITHIN_BOUND
    assert table.member(pc.beta(1)) is Membership.YES


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_theta_s_in_cs(s):
    assert family_table(f"cs:{s}").member(pc.theta(s)) is Membership.YES


def test_oracle_examples():
    cs3 = parse_family("cs:3")
    assert oracle_member(cs3, pc.theta(6))
    assert not oracle_member(cs3, pc.theta(4))
    assert all(oracle_member(cs3, pc.pi(k)) for k in (-3, -1, 1, 2, 5))
    assert not oracle_member(parse_family("pairs"), pc.pi0("+"))
    with pytest.raises(UnsupportedFamily):
        oracle_member(parse_family("c0plus"), pc.pi0("+"))


def test_identity_always_member(tables):
    for table in tables.values():
        assert table.member(pc.identity("w")) is Membership.YES
        assert table.member(pc.identity("b")) is Membership.YES


def test_unknown_beyond_bound():
    table = generated_table([pc.pi0("+")], 6)
    assert table.member(pc.tensor_power(pc.pi0("+"), 2)) is Membership.UNKNOWN
    exact = family_table("cs:2", 6)
    assert exact.member(pc.tensor_power(pc.pi(2), 2)) is Membership.YES


def test_bound_above_hard_limit():
    with pytest.raises(BoundExceeded):
        CategorySpec((pc.pi(2),), bound=11)
    with pytest.raises(BoundExceeded):
        CategorySpec((pc.pi(3),), bound=4)


def test_block_stability(tables):
    assert is_block_stable(tables["allnc"]).result is Membership.YES
    for name in ("cs:2", "cs:3"):
        assert is_block_stable(tables[name], scan=True).result is Membership.YES
    res = is_block_stable(tables["thetasq"])
    assert res.result is Membership.NO_WITHIN_BOUND
    assert res.witness == (pc.tensor(pc.theta(1), pc.theta(1)), pc.theta(1))


def test_color_blind(tables):
    assert is_color_blind(tables["pairs"])
    assert not is_color_blind(tables["unitary"])


def test_cache_round_trip(tmp_path):
    spec = CategorySpec((pc.pi0("+"),), bound=6)
    first = closure(spec, cache_dir=tmp_path)
    files = list(tmp_path.glob("closure-*.json"))
    assert len(files) == 1
    doc = json.loads(files[0].read_text())
    assert doc["bound"] == 6 and doc["version"] == 1
    second = closure(spec, cache_dir=tmp_path)
    assert first.keys == second.keys


def test_corrupt_cache_rebuilds(tmp_path, caplog):
    spec = CategorySpec((pc.pi0("+"),), bound=6)
    good = closure(spec, cache_dir=tmp_path)
    path = next(tmp_path.glob("closure-*.json"))
    path.write_text("{not json")
    with caplog.at_level(logging.WARNING):
        again = closure(spec, cache_dir=tmp_path)
    assert again.keys == good.keys
    assert "corrupt" in caplog.text


def test_slack_zero_misses_members():
    full = closure(CategorySpec((pc.pi0("+"),), bound=8, slack=1))
    tight = closure(CategorySpec((pc.pi0("+"),), bound=8, slack=0))
    assert tight.keys < full.keys


MIXED = family_table("c0plus", 8)
MIXED_MEMBERS = [pc.from_key(k, upper=u) for k in sorted(MIXED.keys) if len(k[0]) <= 4 for u in range(len(k[0]) + 1)]


@given(st.sampled_from(MIXED_MEMBERS), st.sampled_from(MIXED_MEMBERS))
def test_table_closed_under_operations(p, q):
    assert MIXED.contains(pc.adjoint(p))
    assert MIXED.contains(pc.rotate_cw(p))
    assert MIXED.contains(pc.tensor(p, q))
    if p.lower_colors == q.upper_colors:
        assert MIXED.contains(pc.compose(q, p)[0])
