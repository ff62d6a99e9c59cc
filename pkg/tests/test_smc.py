from itertools import product

import pytest

from catstrict.errors import HypothesisError, TruncationError, WellDefinednessError
from catstrict.fixtures import (a2_strict_smc, a3_algebras, a3_category, a3_strict_smc, a3_swap,
                                a3_twisted_smc)
from catstrict.perms import all_perms, all_reduced_words
from catstrict.pseudoalg import validate_pseudoalgebra
from catstrict.smc import (BiasedSMC, from_symmetric_monoidal, to_symmetric_monoidal,
                           transport_smc, validate_biased_smc)


@pytest.mark.parametrize("make", [a3_strict_smc, a3_twisted_smc, a2_strict_smc])
def test_fixtures_validate(make):
    r = validate_biased_smc(make())
    assert r.ok, r.render()
    for axiom in ("pentagon", "hexagon 1", "hexagon 2"):
        assert any(k.startswith(axiom) for k in r.tally), axiom


def test_strictness():
    assert a3_strict_smc().is_strict()
    assert not a3_twisted_smc().is_strict()


def test_twisted_structure_is_nontrivial():
    M = a3_twisted_smc()
    A = M.A
    assert any(v != A.ident[A.src[v]] for v in M.alpha.values())
    assert any(v != A.ident[A.src[v]] for v in M.sym.values())


def test_pentagon_componentwise_on_all_quadruples():
    M = a3_twisted_smc()
    A = M.A
    for w, x, y, z in product(A.objects, repeat=4):
        lhs = A.compose(M.alpha[(w, x, M.t(y, z))], M.alpha[(M.t(w, x), y, z)])
        rhs = A.compose(M.tm(A.ident[w], M.alpha[(x, y, z)]), M.alpha[(w, M.t(x, y), z)],
                        M.tm(M.alpha[(w, x, y)], A.ident[z]))
        assert lhs == rhs


def test_coherence_maps_are_well_defined():
    M = a3_twisted_smc()
    A = M.A
    for n in range(4):
        for w in product(A.objects, repeat=n):
            for pi in all_perms(n):
                g = M.T(pi, w)
                words = all_reduced_words(pi)
                assert all(M.T_word(word, w) == g for word in words)


def test_corrupted_associator_fails_pentagon():
    M = a3_twisted_smc()
    A = M.A
    key = ("a", "a", "a")
    alpha = dict(M.alpha)
    v = alpha[key]
    alpha[key] = next(m for m in A.hom(A.src[v], A.tgt[v]) if m != v)
    bad = BiasedSMC(M.carrier, M.tensor_obj, M.tensor_mor, alpha, M.sym, "bad")
    assert not validate_biased_smc(bad).ok


def test_symmetry_must_be_an_involution():
    M = a3_strict_smc()
    sym = dict(M.sym)
    sym[("a", "a")] = "t_b"
    bad = BiasedSMC(M.carrier, M.tensor_obj, M.tensor_mor, M.alpha, sym, "bad")
    assert not validate_biased_smc(bad).ok


@pytest.mark.parametrize("make", [a2_strict_smc])
def test_round_trip(make):
    # the three-object fixtures are covered by the acceptance run
    M = make()
    P = from_symmetric_monoidal(M, 4)
    assert validate_pseudoalgebra(P).ok
    assert to_symmetric_monoidal(P) == M


def test_strict_input_gives_strict_algebra():
    P0, P1 = a3_algebras(4)
    assert P0.is_strict() and not P1.is_strict()


def test_to_smc_needs_arity_four():
    with pytest.raises(TruncationError):
        to_symmetric_monoidal(from_symmetric_monoidal(a2_strict_smc(), 3))


def test_invalid_input_is_rejected():
    M = a3_strict_smc()
    sym = dict(M.sym)
    sym[("a", "a")] = "t_b"
    with pytest.raises(HypothesisError):
        from_symmetric_monoidal(BiasedSMC(M.carrier, M.tensor_obj, M.tensor_mor, M.alpha, sym), 2)


def test_transport_is_valid_and_relabels():
    M = a3_strict_smc()
    h = a3_swap()
    M2 = transport_smc(M, h, name="relabelled")
    assert validate_biased_smc(M2).ok
    # a ⊗ a = b in M, so in the relabelled copy b ⊗ b = a
    assert M2.t("b", "b") == "a"
