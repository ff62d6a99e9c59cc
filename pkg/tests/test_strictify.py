import pytest

from catstrict.errors import BoundaryMismatchError, HypothesisError, TruncationError
from catstrict.fincat import NatTrans, identity_functor, validate_category
from catstrict.fixtures import a2_algebra, a2_twisted, terminal_algebra, z2_algebra
from catstrict.operad import permutativity_operad
from catstrict.pseudoalg import (AlgebraTwoCell, conjugate_pseudomorphism,
                                 identity_pseudomorphism, product_pseudoalgebra,
                                 validate_algebra_2cell, validate_pseudoalgebra)
from catstrict.strictify import (flexibility_section, product_comparison, strictify,
                                 strictify_2cell, strictify_morphism, unit_equivalence,
                                 universal_property, validate_strict_map, verify_strictification)

N = 3


@pytest.fixture(scope="module")
def twisted():
    return a2_twisted(N)


@pytest.fixture(scope="module")
def st_twisted(twisted):
    return strictify(twisted[0], 3)


@pytest.fixture(scope="module")
def st_a2():
    return strictify(a2_algebra(N), 3)


def test_strictification_of_twisted_fixture(st_twisted):
    S = st_twisted
    assert validate_category(S.category).ok
    assert S.St.is_strict()
    r = verify_strictification(S)
    assert r.ok, r.render()


def test_counit_strict_for_strict_input(st_a2):
    r = unit_equivalence(st_a2)
    assert r.ok and "m_θ strict for strict input" in r.tally
    assert st_a2.m_phi.is_strict()


def test_counit_not_strict_for_twisted_input(st_twisted):
    assert not st_twisted.m_phi.is_strict()


def test_upsilon_is_identity(st_twisted):
    S = st_twisted
    X = S.A.A
    assert all(S.upsilon[x] == X.ident[x] for x in X.objects)


def test_hom_resolver_outside_window(st_twisted):
    S = st_twisted
    O = S.A.operad
    t = S.TA.canonical((1, 2, 3, 4) if O.max_arity >= 4 else (1, 2, 3), ("a",) * min(O.max_arity, 4))
    assert S.hom(t, t)
    m = S.hom(t, t)[0]
    assert S.compose(m, m)[0] == t


def test_window_bounds(twisted):
    with pytest.raises(TruncationError):
        strictify(twisted[0], 4)


def test_invalid_input_rejected_when_checking(twisted):
    Q = twisted[0]
    key = next(iter(Q.phi))
    bad = Q.with_tables(phi={**Q.phi, key: "id_a"})
    with pytest.raises(HypothesisError):
        strictify(bad, 2, check=True)


def test_flexibility_section():
    A2 = a2_algebra(N)
    SZ = strictify(A2, 2)
    Seta, r = flexibility_section(A2, SZ)
    assert r.ok, r.render()


def test_product_comparison():
    A2 = a2_algebra(2)
    SA = strictify(A2, 2)
    SAB = strictify(product_pseudoalgebra(A2, A2), 2)
    (g1, g2), r = product_comparison(SA, SA, SAB)
    assert r.ok, r.render()
    # γ is not injective on objects: distinct interleavings of the two factors collapse
    pairs = [(g1.obj(t), g2.obj(t)) for t in SAB.category.objects]
    assert len(set(pairs)) < len(pairs)


def test_strictified_morphisms(twisted, st_twisted, st_a2):
    Q, pm = twisted
    F = strictify_morphism(pm, st_twisted, st_a2)
    assert validate_strict_map(F).ok
    with pytest.raises(BoundaryMismatchError):
        strictify_morphism(pm, st_a2, st_a2)


def test_universal_property(twisted, st_twisted, st_a2):
    Q, pm = twisted
    r = universal_property(pm, st_twisted, st_a2)
    assert r.ok, r.render()


def test_universal_property_needs_strict_target(twisted, st_twisted):
    Q, pm = twisted
    with pytest.raises(HypothesisError):
        universal_property(identity_pseudomorphism(Q), st_twisted, st_twisted)


def test_strictified_two_cells(twisted, st_twisted, st_a2):
    Q, pm = twisted
    lam = NatTrans(pm.f, pm.f, {0: "id_0", "a": "t_a"})
    g, cell = conjugate_pseudomorphism(pm, lam)
    St_sigma = strictify_2cell(cell, st_twisted, st_a2)
    assert validate_algebra_2cell(St_sigma).ok
    ident = AlgebraTwoCell(pm, pm, NatTrans(pm.f, pm.f, {0: "id_0", "a": "id_a"}))
    St_id = strictify_2cell(ident, st_twisted, st_a2)
    C = st_a2.category
    assert all(St_id.lam[t] == C.ident[St_id.lam.src_f.obj(t)] for t in st_twisted.category.objects)


def test_discrete_algebras():
    P = permutativity_operad(N)
    for A in (z2_algebra(P, N), terminal_algebra(P, N)):
        S = strictify(A, N)
        assert verify_strictification(S).ok
