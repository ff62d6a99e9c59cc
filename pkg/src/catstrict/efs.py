"""The (bijective-on-objects, full-and-faithful) factorization system on finite categories."""
from collections import namedtuple
from dataclasses import dataclass

from .errors import BoundaryMismatchError, ClassViolationError, HypothesisError
from .fincat import (FinCategory, Functor, NatTrans, compose_functors, identity_functor,
                     identity_nat, invert_nat_trans, product_category, product_functor,
                     validate_nat_trans, whisker_left, whisker_right)
from .report import Report

Classification = namedtuple("Classification", "in_BO in_FF")


def classify(f):
    X, Y = f.dom, f.cod
    in_bo = (len(set(f.obj_map.values())) == len(X.objects) == len(Y.objects))
    # FF: Mor X → {(x, x', g) : g ∈ Y(f x, f x')} must be a bijection
    image = set()
    for m in X.morphisms:
        image.add((X.src[m], X.tgt[m], f.mor(m)))
    pullback_size = sum(len(Y.hom(f.obj(x), f.obj(x2))) for x in X.objects for x2 in X.objects)
    in_ff = len(image) == len(X.morphisms) == pullback_size
    return Classification(in_bo, in_ff)


def is_bo(f):
    return classify(f).in_BO


def is_ff(f):
    return classify(f).in_FF


@dataclass
class Factorization:
    f: Functor
    image: FinCategory
    e: Functor
    m: Functor


def image_category(f):
    X, Y = f.dom, f.cod
    mors, src, tgt = [], {}, {}
    for x in X.objects:
        for x2 in X.objects:
            for g in Y.hom(f.obj(x), f.obj(x2)):
                t = (x, x2, g)
                mors.append(t)
                src[t], tgt[t] = x, x2
    ident = {x: (x, x, Y.ident[f.obj(x)]) for x in X.objects}
    comp = {}
    for (x, x2, g) in mors:
        for x3 in X.objects:
            for g2 in Y.hom(f.obj(x2), f.obj(x3)):
                comp[((x2, x3, g2), (x, x2, g))] = (x, x3, Y.comp[(g2, g)])
    return FinCategory(X.objects, mors, src, tgt, ident, comp, name=f"I({f.name})" if f.name else "")


def factorize(f):
    X, Y = f.dom, f.cod
    If = image_category(f)
    e = Functor(X, If, {x: x for x in X.objects},
                {h: (X.src[h], X.tgt[h], f.mor(h)) for h in X.morphisms})
    m = Functor(If, Y, {x: f.obj(x) for x in X.objects}, {t: t[2] for t in If.morphisms})
    return Factorization(f, If, e, m)


def _ff_lookup(m):
    """(b, b', g) ↦ the unique k: b → b' with m(k) = g."""
    B = m.dom
    return {(B.src[k], B.tgt[k], m.mor(k)): k for k in B.morphisms}


def _bo_inverse(e):
    return {y: x for x, y in e.obj_map.items()}


@dataclass
class SquareLift:
    w: Functor
    phi_tilde: NatTrans


def lift_square(e, m, v, u, phi):
    """The unique (w, φ̃) with w∘e = v and φ̃∘e = φ, for invertible φ: u∘e ⇒ m∘v.

    A transformation in the opposite direction m∘v ⇒ u∘e is accepted and
    inverted first.
    """
    if not is_bo(e):
        raise ClassViolationError("lift_square: e is not bijective on objects")
    if not is_ff(m):
        raise ClassViolationError("lift_square: m is not full and faithful")
    A, X = e.dom, e.cod
    B, Y = m.dom, m.cod
    if v.dom != A or v.cod != B or u.dom != X or u.cod != Y:
        raise BoundaryMismatchError("lift_square: functors do not form a square")
    ue, mv = compose_functors(u, e), compose_functors(m, v)
    if phi.src_f == ue and phi.tgt_f == mv:
        pass
    elif phi.src_f == mv and phi.tgt_f == ue:
        phi = invert_nat_trans(phi)
    else:
        raise BoundaryMismatchError("lift_square: φ does not fill the square")
    phi_inv = invert_nat_trans(phi)
    einv = _bo_inverse(e)
    lookup = _ff_lookup(m)
    obj_map = {x: v.obj(einv[x]) for x in X.objects}
    mor_map = {}
    for h in X.morphisms:
        a, a2 = einv[X.src[h]], einv[X.tgt[h]]
        g = Y.compose(phi[a2], u.mor(h), phi_inv[a])
        mor_map[h] = lookup[(obj_map[X.src[h]], obj_map[X.tgt[h]], g)]
    w = Functor(X, B, obj_map, mor_map)
    phi_tilde = NatTrans(u, compose_functors(m, w), {x: phi[einv[x]] for x in X.objects})
    if compose_functors(w, e) != v or whisker_right(phi_tilde, e).component != phi.component:
        raise HypothesisError("lift_square: lifted data fails its defining equations")
    return SquareLift(w, phi_tilde)


def lift_2cell(e, m, v, v2, u, u2, sigma, tau):
    """ρ: w ⇒ w' with ρ∘e = σ and m∘ρ = τ, where m∘v = u∘e and m∘v' = u'∘e."""
    if not is_bo(e):
        raise ClassViolationError("lift_2cell: e is not bijective on objects")
    if not is_ff(m):
        raise ClassViolationError("lift_2cell: m is not full and faithful")
    if compose_functors(m, v) != compose_functors(u, e):
        raise HypothesisError("lift_2cell: m∘v ≠ u∘e")
    if compose_functors(m, v2) != compose_functors(u2, e):
        raise HypothesisError("lift_2cell: m∘v' ≠ u'∘e")
    if sigma.src_f != v or sigma.tgt_f != v2:
        raise HypothesisError("lift_2cell: σ is not a transformation v ⇒ v'")
    if tau.src_f != u or tau.tgt_f != u2:
        raise HypothesisError("lift_2cell: τ is not a transformation u ⇒ u'")
    if whisker_right(tau, e).component != whisker_left(m, sigma).component:
        raise HypothesisError("lift_2cell: τ∘e ≠ m∘σ")
    w = lift_square(e, m, v, u, identity_nat(compose_functors(u, e))).w
    w2 = lift_square(e, m, v2, u2, identity_nat(compose_functors(u2, e))).w
    einv = _bo_inverse(e)
    rho = NatTrans(w, w2, {x: sigma[einv[x]] for x in e.cod.objects})
    if whisker_left(m, rho).component != tau.component:
        raise HypothesisError("lift_2cell: m∘ρ ≠ τ")
    return rho


def rigid_inverse(f, m, iota):
    """ν: f∘m ⇒ id_Y with m(ν_y) = ι⁻¹ at m(y), for m full and faithful."""
    if not is_ff(m):
        raise ClassViolationError("rigid_inverse: m is not full and faithful")
    X, Y = f.dom, f.cod
    if m.dom != Y or m.cod != X:
        raise BoundaryMismatchError("rigid_inverse: m must go back from the codomain of f")
    iota_inv = invert_nat_trans(iota)
    lookup = _ff_lookup(m)
    fm = compose_functors(f, m)
    comps = {y: lookup[(fm.obj(y), y, iota_inv[m.obj(y)])] for y in Y.objects}
    return NatTrans(fm, identity_functor(Y), comps)


def epsilon_replacement(f, m, eta, eps):
    """ε' = ε ∗ (f η⁻¹ m) ∗ (ε⁻¹ f m), which makes (η, ε') an adjoint equivalence."""
    Y = f.cod
    eta_inv = invert_nat_trans(eta)
    eps_inv = invert_nat_trans(eps)
    comps = {}
    for y in Y.objects:
        my = m.obj(y)
        comps[y] = Y.compose(eps[y], f.mor(eta_inv[my]), eps_inv[f.obj(my)])
    return NatTrans(eps.src_f, eps.tgt_f, comps)


def triangle_identities(f, m, eta, eps):
    """Check (ε f)∗(f η) = id_f and (m ε)∗(η m) = id_m componentwise."""
    X, Y = f.dom, f.cod
    r = Report("triangle identities")
    for x in X.objects:
        r.check(Y.compose(eps[f.obj(x)], f.mor(eta[x])) == Y.ident[f.obj(x)], "triangle-f", x)
    for y in Y.objects:
        r.check(X.compose(m.mor(eps[y]), eta[m.obj(y)]) == X.ident[m.obj(y)], "triangle-m", y)
    return r


def image_compose_comparison(f, g):
    """c: I(g∘f) → I(g) with c∘e_{gf} = e_g∘f and m_g∘c = m_{gf}."""
    gf = compose_functors(g, f)
    F_gf, F_g = factorize(gf), factorize(g)
    c = Functor(F_gf.image, F_g.image, {x: f.obj(x) for x in F_gf.image.objects},
                {(x, x2, h): (f.obj(x), f.obj(x2), h) for (x, x2, h) in F_gf.image.morphisms})
    if compose_functors(c, F_gf.e) != compose_functors(F_g.e, f):
        raise HypothesisError("composition comparison: c∘e ≠ e∘f")
    if compose_functors(F_g.m, c) != F_gf.m:
        raise HypothesisError("composition comparison: m∘c ≠ m")
    return c


def image_product_comparison(f, f2):
    """The mutually inverse comparisons I(f×f') ⇄ I(f)×I(f')."""
    ff = product_functor(f, f2)
    F, F1, F2 = factorize(ff), factorize(f), factorize(f2)
    P = product_category(F1.image, F2.image)
    obj = {x: x for x in F.image.objects}
    p = Functor(F.image, P, obj,
                {((x, x2), (y, y2), (g, g2)): ((x, y, g), (x2, y2, g2))
                 for ((x, x2), (y, y2), (g, g2)) in F.image.morphisms})
    pinv = Functor(P, F.image, obj,
                   {((x, y, g), (x2, y2, g2)): ((x, x2), (y, y2), (g, g2))
                    for ((x, y, g), (x2, y2, g2)) in P.morphisms})
    if compose_functors(p, F.e) != product_functor(F1.e, F2.e):
        raise HypothesisError("product comparison: e square fails")
    if compose_functors(product_functor(F1.m, F2.m), p) != F.m:
        raise HypothesisError("product comparison: m square fails")
    return p, pinv


def check_square_lift(e, m, v, u, phi, lift):
    """Report on the defining equations of a square lift (used by tests and the CLI)."""
    r = Report("square lift")
    r.check(compose_functors(lift.w, e) == v, "w∘e = v")
    r.check(whisker_right(lift.phi_tilde, e).component == phi.component, "φ̃∘e = φ")
    r.absorb(validate_nat_trans(lift.phi_tilde))
    return r


__all__ = ["classify", "is_bo", "is_ff", "Factorization", "factorize", "image_category",
           "SquareLift", "lift_square", "lift_2cell", "rigid_inverse", "epsilon_replacement",
           "triangle_identities", "image_compose_comparison", "image_product_comparison",
           "check_square_lift"]
