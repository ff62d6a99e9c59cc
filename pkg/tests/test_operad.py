from itertools import product

import pytest

from catstrict.errors import ArityError, IncompleteTableError, TruncationError
from catstrict.fincat import cyclic_group, symmetric_group
from catstrict.operad import (Operad, assoc_operad, chaotic_operad, compositions, gamma_assoc,
                              insert_base, iota_hom, permutativity_operad, pg_operad,
                              validate_operad, validate_operad_hom)
from catstrict.perms import act, all_perms, identity_perm


def letter_oracle(s, taus):
    """Where the letters end up: permute inside each block, then move whole blocks by s."""
    blocks = [tuple((r, i) for i in range(1, len(t) + 1)) for r, t in enumerate(taus)]
    flat = tuple(x for b in blocks for x in b)
    moved = act(s, [act(t, b) for t, b in zip(taus, blocks)])
    return flat, tuple(x for b in moved for x in b)


def test_gamma_assoc_matches_letter_oracle():
    count = 0
    for k in range(4):
        for js in product(range(5), repeat=k):
            if sum(js) > 4:
                continue
            for s in all_perms(k):
                for taus in product(*(all_perms(j) for j in js)):
                    flat, want = letter_oracle(s, taus)
                    assert act(gamma_assoc(s, *taus), flat) == want
                    count += 1
    assert count > 600


def test_gamma_assoc_small_values():
    assert gamma_assoc((2, 1), (1,), (1, 2)) == (3, 1, 2)
    assert gamma_assoc((1, 2), (2, 1), (1,)) == (2, 1, 3)
    assert gamma_assoc((), ) == ()
    with pytest.raises(ArityError):
        gamma_assoc((1, 2), (1,))


def test_assoc_level_sizes():
    O = assoc_operad(3)
    assert [len(C.objects) for C in O.levels] == [1, 1, 2, 6]


def test_perm_level_two_has_four_morphisms():
    P = permutativity_operad(2)
    assert len(P.levels[2].morphisms) == 4


def test_pg_level_counts():
    PG = pg_operad(cyclic_group(2), 3)
    assert [len(C.objects) for C in PG.levels] == [1, 1, 4, 36]


@pytest.mark.parametrize("make", [assoc_operad, permutativity_operad])
def test_builtin_operads_validate(make):
    r = validate_operad(make(3))
    assert r.ok, r.render()


def test_pg_operad_validates_with_group_equivariance():
    r = validate_operad(pg_operad(cyclic_group(2), 2))
    assert r.ok
    assert any(k.startswith("G-") for k in r.tally)


def test_iota_is_an_operad_map():
    assert validate_operad_hom(iota_hom(cyclic_group(2), 2)).ok


def test_corrupted_gamma_is_named():
    O = assoc_operad(3)
    key = ((2, 1), ((1, 2), (1,)))
    table = dict(O.gamma_table)
    table[key] = (1, 2, 3)
    bad = Operad("bad", 3, O.levels, O.actions, O.unit, table)
    r = validate_operad(bad)
    assert not r.ok
    assert any(f.witness[:2] == key for f in r.failures)


def test_missing_gamma_entry():
    O = assoc_operad(2)
    table = dict(O.gamma_table)
    del table[((1, 2), ((1,), (1,)))]
    with pytest.raises(IncompleteTableError):
        validate_operad(Operad("bad", 2, O.levels, O.actions, O.unit, table))


def test_free_actions_and_degeneracies():
    P = permutativity_operad(3)
    assert all(P.acts_freely(n) for n in range(4))
    # deleting an input of a permutation keeps the relative order of the rest
    assert P.degeneracy(3, 2, (3, 1, 2)) == (2, 1)
    assert P.degeneracy(1, 1, (1,)) == ()
    with pytest.raises(ArityError):
        P.degeneracy(2, 3, (1, 2))


def test_truncation():
    P = permutativity_operad(2)
    with pytest.raises(TruncationError):
        P.level(3)
    with pytest.raises(TruncationError):
        P.gamma((1, 2), [(1, 2), (1, 2)], [2, 2])


def test_chaotic_operad_on_assoc_is_perm():
    assert chaotic_operad(assoc_operad(2)) == permutativity_operad(2)


def test_helpers():
    assert insert_base(("a", "b"), 2) == ("a", 0, "b")
    with pytest.raises(ArityError):
        insert_base(("a",), 3)
    assert sorted(compositions(2, 2)) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]
