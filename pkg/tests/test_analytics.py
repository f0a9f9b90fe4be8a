import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncfusion import analytics as an
from ncfusion import partition as pc
from ncfusion.category import Membership, family_table
from ncfusion.errors import HorizonTooSmall, NonMemberPartition, NotProjective
from ncfusion.linmap import rank_P
from ncfusion.projective import projective_members


def second_kind(n, y):
    """U_n(y) for y > 1 from the closed form."""
    r = math.sqrt(y * y - 1)
    return ((y + r) ** (n + 1) - (y - r) ** (n + 1)) / (2 * r)


def test_chebyshev_square_case():
    assert [an.chebyshev_dim(t, 4) for t in range(4)] == [1, 3, 5, 7]


def test_chebyshev_examples():
    assert [an.chebyshev_dim(t, 5) for t in range(4)] == [1, 4, 11, 29]
    assert an.chebyshev(1, 7) == (0, 1)
    with pytest.raises(ValueError):
        an.chebyshev_dim(-1, 4)


@given(st.integers(0, 12), st.integers(5, 40))
def test_chebyshev_matches_closed_form(t, N):
    assert math.isclose(an.chebyshev_dim(t, N), second_kind(2 * t, math.sqrt(N) / 2), rel_tol=1e-9)


@given(st.integers(2, 12), st.integers(5, 40))
def test_chebyshev_recurrence(k, N):
    a1, b1 = an.chebyshev(k - 1, N)
    a2, b2 = an.chebyshev(k - 2, N)
    assert an.chebyshev(k, N) == (b1 * N - a2, a1 - b2)


def test_r_set_examples(tables):
    assert an.r_set(tables["allnc"], pc.identity()).members == ()
    assert an.r_set(tables["pairs"], pc.identity()).members == (pc.beta(1),)
    assert an.r_set(tables["allnc"], pc.beta(1)).members == ()


def test_r_set_errors(tables):
    with pytest.raises(NotProjective):
        an.r_set(tables["allnc"], pc.pair_cap("wb"))
    with pytest.raises(NonMemberPartition):
        an.r_set(tables["pairs"], pc.pi(2))


def test_dimension_examples(tables):
    assert an.dim_general(tables["allnc"], pc.identity(), 4) == 3
    assert an.dim_general(tables["pairs"], pc.identity(), 4) == 4
    assert an.character_pushforward(tables["allnc"], pc.identity()) == [1]
    assert an.character_pushforward(tables["pairs"], pc.identity()) == [1, 0]
    cls = an.irrep_class(tables["allnc"], pc.beta(1), 4)
    assert cls.one_dim and cls.dim == 1


@pytest.mark.parametrize("name", ["allnc", "pairs", "unitary", "cs:2", "cs:3", "cinf"])
@pytest.mark.parametrize("N", [4, 5])
def test_dimension_equals_projection_rank(name, N, tables):
    table = tables[name]
    for m in range(3):
        for w in pc.color_words(m):
            for p in projective_members(table, w):
                assert an.dim_general(table, p, N) == rank_P(table, p, N), pc.to_text(p)


@given(st.sampled_from(["allnc", "pairs", "unitary", "cs:2", "cs:3", "cinf"]), st.text("wb", max_size=3), st.integers(4, 7))
def test_dimensions_fill_the_space(name, w, N):
    table = family_table(name)
    assert sum(an.dim_general(table, p, N) for p in projective_members(table, w)) == N ** len(w)


def test_lengths(tables):
    assert an.length(pc.pi(2)) == 1
    assert an.length_prime(tables["allnc"], pc.beta(1)) == 0
    assert an.length_prime(tables["thetasq"], pc.beta(1)) == 1
    assert an.length_prime(tables["thetasq"], pc.EMPTY) == 0


def test_properness(tables):
    for name in ("allnc", "pairs", "unitary", "cs:2", "cs:3", "thetasq"):
        assert an.is_proper(tables[name]) is Membership.YES, name
    assert an.is_proper(tables["cinf"]) is Membership.NO_WITHIN_BOUND


@pytest.mark.parametrize(
    "name,counts",
    [("pairs", [1, 1, 1]), ("unitary", [1, 2, 4]), ("cs:2", [1, 2, 4]), ("cs:3", [1, 3, 9]), ("thetasq", [2, 8])],
)
def test_ball_counts(name, counts, tables):
    for k, expected in enumerate(counts):
        ball = an.ball_count(tables[name], k)
        assert ball.count == expected and ball.ok


def test_ball_count_needs_finite_data(tables):
    with pytest.raises(HorizonTooSmall):
        an.ball_count(tables["cinf"], 1)


def test_dimension_table_rows(tables):
    rows = an.dimension_table(tables["allnc"], 4, 1)
    assert {r["partition"]: r["dim"] for r in rows} == {"0,0||": 1, "1,1|ww|0 1": 3, "1,1|ww|0;1": 1, "1,1|bb|0 1": 3, "1,1|bb|0;1": 1}


def test_root_dimension():
    assert [an.root_dimension(N) for N in (1, 4, 5, 9, 10)] == [1, 2, None, 3, None]
