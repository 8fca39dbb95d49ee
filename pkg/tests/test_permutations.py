import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permpaths import (
    complement,
    ensure_permutation,
    format_permutation,
    has_adjacent_consecutive_factor,
    inverse,
    is_permutation,
    left_to_right_minima,
    ltrm_decompose,
    parse_permutation,
    reduce,
    reduce_multiset,
    reverse,
    run_embedding,
    satisfies_ltrm_conditions,
    symmetry,
)
from permpaths.oracle import all_132_avoiders


@st.composite
def perms(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    return tuple(draw(st.permutations(tuple(range(1, n + 1)))))


def test_reduce_rank_oracle():
    assert reduce((3, 5, 7, 1, 4, 6)) == (2, 4, 6, 1, 3, 5)
    assert reduce(()) == ()
    for n in range(5):
        ident = tuple(range(1, n + 1))
        assert reduce(ident) == ident


def test_reduce_rejects_duplicates():
    with pytest.raises(ValueError):
        reduce((3, 5, 7, 1, 3, 6))


def test_reduce_multiset_shares_ranks():
    assert reduce_multiset((3, 5, 7, 1, 3, 6)) == (2, 3, 5, 1, 2, 4)
    assert reduce_multiset((2, 2, 2)) == (1, 1, 1)


@given(perms())
def test_reduce_idempotent_on_permutations(pi):
    assert reduce(pi) == pi


def test_symmetry_examples():
    assert reverse((1, 2, 3)) == (3, 2, 1)
    assert complement((1, 3, 2)) == (3, 1, 2)
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert symmetry((2, 3, 1), "inverse") == (3, 1, 2)
    with pytest.raises(ValueError):
        symmetry((1, 2), "transpose")


@given(perms())
def test_symmetries_compose_to_identity(pi):
    assert reverse(reverse(pi)) == pi
    assert complement(complement(pi)) == pi
    assert inverse(inverse(pi)) == pi


def test_is_permutation_and_parse():
    assert is_permutation(())
    assert is_permutation((2, 1, 3))
    assert not is_permutation((1, 3))
    assert not is_permutation((1, 1, 2))
    assert parse_permutation("5 4 6 2 1 3 7") == (5, 4, 6, 2, 1, 3, 7)
    assert format_permutation((5, 4)) == "5 4"
    with pytest.raises(ValueError, match="token 3"):
        parse_permutation("1 2 x")
    with pytest.raises(ValueError):
        ensure_permutation((1, 2, 2))


def test_left_to_right_minima():
    assert left_to_right_minima((5, 4, 6, 2, 1, 3, 7)) == (1, 2, 4, 5)
    assert left_to_right_minima(()) == ()
    assert left_to_right_minima((1, 2, 3)) == (1,)


def test_ltrm_decompose_examples():
    d = ltrm_decompose((5, 4, 6, 2, 1, 3, 7))
    assert d.blocks == ((5,), (4, 6), (2,), (1, 3, 7))
    assert d.indices == (1, 2, 4, 5)
    assert ltrm_decompose((3, 2, 1)).blocks == ((3,), (2,), (1,))
    assert ltrm_decompose((1, 2, 3)).blocks == ((1, 2, 3),)
    assert ltrm_decompose(()).blocks == ()


def test_ltrm_decompose_reassembles():
    for n in range(6):
        for pi in itertools.permutations(range(1, n + 1)):
            blocks = ltrm_decompose(pi).blocks
            assert tuple(v for b in blocks for v in b) == pi


def test_ltrm_conditions():
    assert satisfies_ltrm_conditions(ltrm_decompose((5, 4, 6, 2, 1, 3, 7)))
    assert satisfies_ltrm_conditions(ltrm_decompose((2, 3, 1)))
    assert not satisfies_ltrm_conditions(ltrm_decompose((1, 3, 2)))
    # every 132-avoider has decreasing heads and increasing blocks
    for n in range(9):
        assert all(
            satisfies_ltrm_conditions(ltrm_decompose(pi))
            for pi in all_132_avoiders(n)
        )


def test_adjacent_consecutive_factor():
    assert has_adjacent_consecutive_factor((2, 3, 1))
    assert not has_adjacent_consecutive_factor((8, 6, 5, 7, 9, 3, 2, 1, 4, 10))
    assert not has_adjacent_consecutive_factor((4, 3, 2, 1))
    assert not has_adjacent_consecutive_factor(())


def test_run_embedding():
    assert run_embedding((3, 1, 2), 3) == (7, 8, 9, 1, 2, 3, 4, 5, 6)
    assert run_embedding((2, 1), 2) == (3, 4, 1, 2)
    for pi in itertools.permutations(range(1, 5)):
        assert run_embedding(pi, 1) == pi
    with pytest.raises(ValueError):
        run_embedding((1, 2), 0)
