import random

import pytest

from catgen import exhaustive_lifts, random_category, random_functor, random_square
from catstrict.efs import (check_square_lift, classify, epsilon_replacement, factorize,
                           image_compose_comparison, image_product_comparison, is_bo, is_ff,
                           lift_2cell, lift_square, rigid_inverse, triangle_identities)
from catstrict.errors import ClassViolationError
from catstrict.fincat import (Functor, NatTrans, chaotic_category, compose_functors,
                              discrete_category, enumerate_functors, identity_functor, identity_nat,
                              validate_category, validate_functor, validate_nat_trans)
from catstrict.fixtures import a3_category, a3_swap


def test_classification_examples():
    C = a3_category()
    assert classify(identity_functor(C)) == (True, True)
    # the inclusion of the discrete category on Ob C is BO but not FF
    D = discrete_category(C.objects)
    inc = Functor(D, C, {x: x for x in D.objects}, {x: C.ident[x] for x in D.objects})
    assert is_bo(inc) and not is_ff(inc)
    # the unique functor to the terminal chaotic category on one object
    E = chaotic_category(["pt"])
    bang = Functor(C, E, {x: "pt" for x in C.objects}, {m: ("pt", "pt") for m in C.morphisms})
    assert not is_bo(bang) and not is_ff(bang)


def test_factorize_fixture():
    F = factorize(a3_swap())
    assert is_bo(F.e) and is_ff(F.m)
    assert compose_functors(F.m, F.e) == F.f
    assert validate_category(F.image).ok


def test_factorize_random():
    rng = random.Random(5)
    done = 0
    while done < 60:
        A, B = random_category(rng, prefix="p"), random_category(rng, prefix="q")
        f = random_functor(rng, A, B, enumerate_functors)
        if f is None:
            continue
        F = factorize(f)
        assert validate_category(F.image).ok
        assert validate_functor(F.e).ok and validate_functor(F.m).ok
        assert is_bo(F.e) and is_ff(F.m)
        assert compose_functors(F.m, F.e) == f
        done += 1


def test_lift_square_matches_exhaustive_search():
    rng = random.Random(9)
    for _ in range(40):
        e, m, v, u, phi = random_square(rng)
        lift = lift_square(e, m, v, u, phi)
        assert check_square_lift(e, m, v, u, phi, lift).ok
        sols = exhaustive_lifts(e, m, v, u, phi)
        assert len(sols) == 1
        assert sols[0][0] == lift.w and sols[0][1].component == lift.phi_tilde.component


def test_lift_square_accepts_reverse_direction():
    rng = random.Random(2)
    e, m, v, u, phi = random_square(rng)
    from catstrict.fincat import invert_nat_trans
    assert lift_square(e, m, v, u, invert_nat_trans(phi)).w == lift_square(e, m, v, u, phi).w


def test_lift_square_class_checks():
    C = a3_category()
    D = discrete_category(C.objects)
    inc = Functor(D, C, {x: x for x in D.objects}, {x: C.ident[x] for x in D.objects})
    idD = identity_functor(D)
    with pytest.raises(ClassViolationError):
        # inc is not FF
        lift_square(idD, inc, idD, inc, identity_nat(inc))
    E = chaotic_category(["pt"])
    bang = Functor(C, E, {x: "pt" for x in C.objects}, {m: ("pt", "pt") for m in C.morphisms})
    with pytest.raises(ClassViolationError):
        lift_square(bang, identity_functor(E), bang, identity_functor(E), identity_nat(bang))


def test_lift_2cell_on_identity_square():
    rng = random.Random(4)
    for _ in range(15):
        e, m, v, u, phi = random_square(rng)
        lift = lift_square(e, m, v, u, phi)
        w = lift.w
        # make the square commute strictly: replace u by m∘w
        u2 = compose_functors(m, w)
        v = compose_functors(w, e)
        sigma = identity_nat(v)
        tau = identity_nat(u2)
        rho = lift_2cell(e, m, v, v, u2, u2, sigma, tau)
        assert rho == identity_nat(w)


def test_rigid_inverse_and_epsilon_replacement():
    # f = swap is an equivalence with inverse m = swap; iota: id ⇒ m f is the identity
    f = a3_swap()
    C = f.dom
    iota = NatTrans(identity_functor(C), compose_functors(f, f), {x: C.ident[x] for x in C.objects})
    nu = rigid_inverse(f, f, iota)
    assert validate_nat_trans(nu).ok
    # a non-adjoint counit: twist ν by the automorphism t at a and b
    twisted = NatTrans(nu.src_f, nu.tgt_f, {0: "id_0", "a": "t_a", "b": "t_b"})
    assert validate_nat_trans(twisted).ok
    assert not triangle_identities(f, f, iota, twisted).ok
    eps = epsilon_replacement(f, f, iota, twisted)
    assert validate_nat_trans(eps).ok
    assert triangle_identities(f, f, iota, eps).ok


def test_image_comparisons():
    rng = random.Random(12)
    done = 0
    while done < 20:
        A, B, C = (random_category(rng, 3, 6, prefix=p) for p in "uvw")
        f = random_functor(rng, A, B, enumerate_functors)
        g = random_functor(rng, B, C, enumerate_functors)
        if f is None or g is None:
            continue
        c = image_compose_comparison(f, g)
        assert validate_functor(c).ok
        p, pinv = image_product_comparison(f, g)
        assert compose_functors(pinv, p) == identity_functor(p.dom)
        assert compose_functors(p, pinv) == identity_functor(p.cod)
        done += 1
