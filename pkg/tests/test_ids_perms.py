import pytest
from hypothesis import given, strategies as st

from catstrict.errors import ArityError, FormatError
from catstrict.ids import decode_id, encode_id, sorted_ids
from catstrict.perms import (act, all_perms, all_reduced_words, block_permutation, block_sum,
                             identity_perm, perm_compose, perm_inverse, reduced_word, transposition,
                             word_to_perm)

atoms = st.one_of(st.integers(min_value=0, max_value=10**6),
                  st.from_regex(r"[A-Za-z_][A-Za-z0-9_]{0,6}", fullmatch=True))
ids = st.recursive(atoms, lambda inner: st.lists(inner, max_size=4).map(tuple), max_leaves=12)


@given(ids)
def test_id_round_trip(v):
    s = encode_id(v)
    assert decode_id(s) == v
    assert set(s) <= set("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_.-")


def test_id_examples():
    assert encode_id((1, 2, 3)) == "-3.1.2.3"
    assert encode_id(((), "a")) == "-2.-0.a"
    assert decode_id("-2.-0.a") == ((), "a")
    assert encode_id("t_a") == "t_a"


@pytest.mark.parametrize("bad", ["", "a b", "-2.a", "a..b", "-x.a", "*"])
def test_bad_tokens(bad):
    with pytest.raises(FormatError):
        decode_id(bad)


@pytest.mark.parametrize("bad", [-1, True, "12", "a-b", 1.5])
def test_unencodable(bad):
    with pytest.raises(FormatError):
        encode_id(bad)


def test_sorted_ids_mixes_types():
    assert sorted_ids(["b", 2, (1,), "a", 0]) == [0, 2, "a", "b", (1,)]


perms4 = st.integers(0, 4).flatmap(lambda n: st.permutations(list(range(1, n + 1))).map(tuple))


@given(st.data())
def test_act_is_left_action(data):
    n = data.draw(st.integers(0, 5))
    s = tuple(data.draw(st.permutations(range(1, n + 1))))
    t = tuple(data.draw(st.permutations(range(1, n + 1))))
    xs = tuple(range(10, 10 + n))
    assert act(s, act(t, xs)) == act(perm_compose(s, t), xs)
    assert act(perm_inverse(s), act(s, xs)) == xs


def test_act_moves_entries_forward():
    # the entry in position 1 goes to position s(1) = 2
    assert act((2, 3, 1), ("x", "y", "z")) == ("z", "x", "y")


@given(perms4)
def test_reduced_words(p):
    n = len(p)
    w = reduced_word(p)
    assert word_to_perm(n, w) == p
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
    assert len(w) == inversions
    for w2 in all_reduced_words(p):
        assert word_to_perm(n, w2) == p and len(w2) == inversions


def test_reduced_word_counts():
    # the longest element of S_3 has two reduced words, of S_4 sixteen
    assert len(all_reduced_words((3, 2, 1))) == 2
    assert len(all_reduced_words((4, 3, 2, 1))) == 16


def test_block_sum_and_block_permutation():
    assert block_sum((2, 1), (1,)) == (2, 1, 3)
    assert block_permutation((2, 1), (1, 2)) == (3, 1, 2)
    assert block_permutation(identity_perm(3), (2, 0, 1)) == (1, 2, 3)


def test_compose_arity_mismatch():
    with pytest.raises(ArityError):
        perm_compose((1, 2), (1,))
    with pytest.raises(ArityError):
        act((1, 2), ("a",))


def test_transposition_and_counts():
    assert transposition(3, 2) == (1, 3, 2)
    assert [len(all_perms(n)) for n in range(5)] == [1, 1, 2, 6, 24]
