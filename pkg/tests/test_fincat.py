import random
from itertools import product

import pytest

from catgen import random_category
from catstrict.errors import BoundaryMismatchError, DanglingIdError, NotInvertibleError, ResourceGuardError
from catstrict.fincat import (FinCategory, Functor, GroupAction, NatTrans, chaotic_category,
                              compose_functors, conjugation_action, cyclic_group, discrete_category,
                              eg_category, enumerate_functors, enumerate_nat_trans, functor_category,
                              horizontal_compose, horizontal_compose_other, identity_functor,
                              identity_nat, invert_nat_trans, orbits, power_category,
                              product_category, symmetric_group, terminal_category,
                              transpose_chaotic, validate_action, validate_category,
                              validate_functor, validate_group, validate_nat_trans,
                              vertical_compose, whisker_left, whisker_right)
from catstrict.fixtures import a3_category, a3_swap


def test_terminal_category_is_valid():
    assert validate_category(terminal_category()).ok


def test_dangling_morphism_in_composition():
    C = a3_category()
    comp = dict(C.comp)
    comp[("t_a", "t_a")] = "ghost"
    bad = FinCategory(C.objects, C.morphisms, C.src, C.tgt, C.ident, comp)
    with pytest.raises(DanglingIdError) as e:
        validate_category(bad)
    assert e.value.ident == "ghost"


def test_dangling_source_object():
    C = a3_category()
    src = dict(C.src)
    src["t_a"] = "nowhere"
    with pytest.raises(DanglingIdError) as e:
        validate_category(FinCategory(C.objects, C.morphisms, src, C.tgt, C.ident, C.comp))
    assert e.value.ident == "nowhere"


def test_missing_composite_is_reported():
    C = a3_category()
    comp = {k: v for k, v in C.comp.items() if k != ("t_a", "t_a")}
    r = validate_category(FinCategory(C.objects, C.morphisms, C.src, C.tgt, C.ident, comp))
    assert not r.ok and "comp-missing" in r.axioms_failed()


def test_non_associative_table_is_caught():
    # a 3-element "monoid" table that is not associative
    ms = ["e", "p", "q"]
    table = {("e", x): x for x in ms} | {(x, "e"): x for x in ms}
    table |= {("p", "p"): "q", ("p", "q"): "p", ("q", "p"): "q", ("q", "q"): "p"}
    C = FinCategory(["*x"[1]], ms, {m: "x" for m in ms}, {m: "x" for m in ms}, {"x": "e"}, table)
    assert "associativity" in validate_category(C).axioms_failed()


def test_random_categories_are_valid():
    rng = random.Random(3)
    for _ in range(50):
        assert validate_category(random_category(rng)).ok


def test_hom_and_inverse():
    C = a3_category()
    assert set(C.hom("a", "a")) == {"id_a", "t_a"}
    assert C.hom("a", "b") == ()
    assert C.inverse("t_a") == "t_a"
    assert C.compose("t_a", "t_a", "t_a") == "t_a"


def test_functor_validation():
    F = a3_swap()
    assert validate_functor(F).ok
    # sending t_a to the identity would still be a functor; sending id_a to t_b is not
    fine = Functor(F.dom, F.cod, F.obj_map, {**F.mor_map, "t_a": "id_b"})
    assert validate_functor(fine).ok
    bad = Functor(F.dom, F.cod, F.obj_map, {**F.mor_map, "id_a": "t_b"})
    assert "preserves-identity" in validate_functor(bad).axioms_failed()
    with pytest.raises(DanglingIdError):
        validate_functor(Functor(F.dom, F.cod, {**F.obj_map, "a": "z"}, F.mor_map))


def test_swap_is_an_involution():
    F = a3_swap()
    assert compose_functors(F, F) == identity_functor(F.dom)


def test_natural_transformations_of_swap():
    F = a3_swap()
    # components at a and b may each be id or t; at 0 only the identity
    assert len(list(enumerate_nat_trans(F, F))) == 4
    a = NatTrans(F, F, {0: "id_0", "a": "t_b", "b": "id_a"})
    assert validate_nat_trans(a).ok
    assert vertical_compose(a, a) == identity_nat(F)
    assert invert_nat_trans(a) == a


def test_nat_trans_boundary_errors():
    F = a3_swap()
    bad = NatTrans(F, F, {0: "id_0", "a": "t_a", "b": "id_a"})
    assert "component-boundary" in validate_nat_trans(bad).axioms_failed()
    E = identity_functor(discrete_category([1]))
    with pytest.raises(BoundaryMismatchError):
        vertical_compose(identity_nat(F), identity_nat(E))


def test_not_invertible():
    C = FinCategory(["x", "y"], ["ix", "iy", "u"], {"ix": "x", "iy": "y", "u": "x"},
                    {"ix": "x", "iy": "y", "u": "y"}, {"x": "ix", "y": "iy"},
                    {("ix", "ix"): "ix", ("iy", "iy"): "iy", ("u", "ix"): "u", ("iy", "u"): "u"})
    one = terminal_category()
    Fx = Functor(one, C, {"pt": "x"}, {("pt", "pt"): "ix"})
    Fy = Functor(one, C, {"pt": "y"}, {("pt", "pt"): "iy"})
    a = NatTrans(Fx, Fy, {"pt": "u"})
    assert validate_nat_trans(a).ok
    with pytest.raises(NotInvertibleError):
        invert_nat_trans(a)


def test_interchange_law():
    rng = random.Random(11)
    checked = 0
    for _ in range(120):
        A, B, C = (random_category(rng, 3, 5, prefix=p) for p in "xyz")
        fs = list(enumerate_functors(A, B, guard=10**4))
        gs = list(enumerate_functors(B, C, guard=10**4))
        if not fs or not gs:
            continue
        f, f2 = rng.choice(fs), rng.choice(fs)
        g, g2 = rng.choice(gs), rng.choice(gs)
        for a in list(enumerate_nat_trans(f, f2))[:3]:
            for b in list(enumerate_nat_trans(g, g2))[:3]:
                # both legs of the naturality square agree
                assert horizontal_compose(b, a) == horizontal_compose_other(b, a)
                assert horizontal_compose(b, a) == vertical_compose(whisker_left(g2, a), whisker_right(b, f))
                checked += 1
    assert checked > 20


@pytest.mark.parametrize("na,nx", list(product(range(1, 4), range(1, 4))))
def test_chaotic_adjunction_counts(na, nx):
    rng = random.Random(na * 10 + nx)
    A = random_category(rng, max_objects=na, prefix="s")
    while len(A.objects) != na:
        A = random_category(rng, max_objects=na, prefix="s")
    EX = chaotic_category(range(nx))
    fs = list(enumerate_functors(A, EX))
    assert len(fs) == nx ** na
    for F in fs:
        assert F == transpose_chaotic(A, EX, F.obj_map)
    for F in fs:
        for G in fs:
            assert len(list(enumerate_nat_trans(F, G))) == 1


def test_enumeration_guard():
    with pytest.raises(ResourceGuardError):
        list(enumerate_functors(discrete_category(range(8)), discrete_category(range(8)), guard=1000))


def test_products_and_powers():
    C = a3_category()
    P = product_category(C, C)
    assert validate_category(P).ok and len(P.objects) == 9 and len(P.morphisms) == 25
    C2 = power_category(C, 2)
    assert validate_category(C2).ok and len(C2.morphisms) == 25


def test_functor_category_of_chaotic():
    EG, right, left = eg_category(cyclic_group(2))
    FC = functor_category(EG, chaotic_category(range(3)))
    assert len(FC.objects) == 9 and len(FC.morphisms) == 81
    assert validate_category(FC).ok


def test_groups_and_actions():
    for G in (cyclic_group(3), symmetric_group(3)):
        assert validate_group(G).ok
    G = symmetric_group(3)
    EG, right, left = eg_category(G)
    assert validate_action(right).ok and validate_action(left).ok
    assert len(orbits(left)) == 1


def test_bad_action_side_is_caught():
    G = symmetric_group(3)
    EG, right, _ = eg_category(G)
    flipped = GroupAction(G, EG, right.obj_act, right.mor_act, "left")
    assert "compatibility" in validate_action(flipped).axioms_failed()


def test_conjugation_action():
    G = cyclic_group(2)
    C = chaotic_category(range(2))
    flip = GroupAction(G, C, {(g, x): (x + g) % 2 for g in G.elements for x in C.objects},
                       {(g, (y, x)): ((y + g) % 2, (x + g) % 2) for g in G.elements for (y, x) in C.morphisms})
    assert validate_action(flip).ok
    FC, act = conjugation_action(flip)
    assert validate_action(act).ok
    assert len(FC.objects) == 4
