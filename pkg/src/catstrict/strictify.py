"""Strictification of pseudoalgebras by factoring the action as bijective-on-objects then full-and-faithful.

St A has the canonical forms t = (c; xs) of O(A) as objects (within a length
window L) and a morphism t → t' for each morphism θ(t) → θ(t') of A, stored as
the triple (t, t', g).  The action on objects is the flattening of the free
algebra, on morphisms it is θ conjugated by φ, and every coherence cell is an
identity.
"""
from itertools import product

from .efs import epsilon_replacement, is_bo, is_ff, triangle_identities
from .errors import (BoundaryMismatchError, HypothesisError, TheoremCheckError,
                     TruncationError)
from .fincat import (FinCategory, Functor, NatTrans, compose_functors, enumerate_functors,
                     identity_functor, invert_nat_trans, vertical_compose, whisker_left,
                     whisker_right)
from .freemonad import BasedCategory, FreeAlgebraCategory
from .pseudoalg import (AlgebraTwoCell, Pseudomorphism, assemble_on_free, build_pseudoalgebra,
                        build_pseudomorphism, compose_pseudomorphisms, identity_pseudomorphism,
                        validate_algebra_2cell, validate_pseudoalgebra, validate_pseudomorphism)
from .report import Report


class StrictificationResult:
    """St A on a window of length L, with the comparison maps.

    Attributes: ``A`` (input), ``TA`` (free window), ``category``, ``St``
    (the strict algebra), ``e`` and ``m`` (the factorization of θ),
    ``m_phi`` = (m_θ, φ̃), ``k``, ``k_omega`` = (k, ω), ``upsilon``, ``nu``.
    """

    def __init__(self, A, L):
        self.A = A
        self.L = L

    def theta(self, t):
        return self.A.obj(*t)

    def hom(self, t, t2):
        """Morphisms t → t2 for any canonical forms, inside the window or not."""
        C = self.A.A
        return tuple((t, t2, g) for g in C.hom(self.theta(t), self.theta(t2)))

    def compose(self, m2, m1):
        if m1[1] != m2[0]:
            raise BoundaryMismatchError(f"{m2!r}∘{m1!r} is not defined")
        return (m1[0], m2[1], self.A.A.comp[(m2[2], m1[2])])


def _st_category(P, TA):
    A = P.A
    objs = TA.category.objects
    theta = {t: P.obj(*t) for t in objs}
    mors, src, tgt = [], {}, {}
    by_obj = {}
    for t in objs:
        by_obj.setdefault(theta[t], []).append(t)
    for t in objs:
        for t2 in objs:
            for g in A.hom(theta[t], theta[t2]):
                m = (t, t2, g)
                mors.append(m)
                src[m], tgt[m] = t, t2
    ident = {t: (t, t, A.ident[theta[t]]) for t in objs}
    comp = {}
    for m1 in mors:
        for t3 in objs:
            for g2 in A.hom(theta[m1[1]], theta[t3]):
                comp[((m1[1], t3, g2), m1)] = (m1[0], t3, A.comp[(g2, m1[2])])
    return FinCategory(objs, mors, src, tgt, ident, comp, name="St")


def strictify(A, L, check=False):
    """St A on the window of forms of total weight ≤ L."""
    O = A.operad
    if L > A.N:
        raise TruncationError(f"L = {L} exceeds the truncation N = {A.N} of the input")
    if check:
        rep = validate_pseudoalgebra(A)
        if not rep.ok:
            raise HypothesisError("strictify needs a valid pseudoalgebra:\n" + rep.render())
    S = StrictificationResult(A, L)
    TA = FreeAlgebraCategory(O, A.carrier, L, weight=A.weight, name="O(A)")
    S.TA = TA
    C = _st_category(A, TA)
    S.category = C
    X = A.A
    carrier = BasedCategory(C, TA.empty)
    canon = TA.canon

    def mu(c, ts):
        g = O.gamma(c, [t[0] for t in ts], [len(t[1]) for t in ts])
        return canon.canonical(g, tuple(x for t in ts for x in t[1]))

    def op_fn(f, ts):
        On = O.levels[len(ts)]
        c, c2 = On.src[f], On.tgt[f]
        thetas = tuple(A.obj(*t) for t in ts)
        g = X.compose(A.phi_at(c2, ts), A.op(f, thetas), X.inverse(A.phi_at(c, ts)))
        return (mu(c, ts), mu(c2, ts), g)

    def car_fn(c, ms):
        s = tuple(m[0] for m in ms)
        t = tuple(m[1] for m in ms)
        g = X.compose(A.phi_at(c, t), A.car(c, tuple(m[2] for m in ms)), X.inverse(A.phi_at(c, s)))
        return (mu(c, s), mu(c, t), g)

    S.St = build_pseudoalgebra(O, carrier, mu, op_fn, car_fn, None, N=min(A.N, L),
                               weight=TA.total_weight, bound=L, name=f"St {A.name}".strip())
    # e_θ: O(A) → St A and m_θ: St A → A
    TC = TA.category
    S.e = Functor(TC, C, {t: t for t in TC.objects},
                  {m: (TC.src[m], TC.tgt[m], A.mor(*m)) for m in TC.morphisms}, "e")
    S.m = Functor(C, X, {t: A.obj(*t) for t in C.objects}, {m: m[2] for m in C.morphisms}, "m")
    S.m_phi = build_pseudomorphism(S.St, A, S.m, lambda c, ts: A.phi_at(c, ts), name="(m,φ~)")
    # k: A → St A, υ: id ⇒ m k, ν: k m ⇒ id
    u = O.unit
    kobj = {x: canon.canonical(u, (x,)) for x in X.objects}
    S.k = Functor(X, C, kobj, {g: (kobj[X.src[g]], kobj[X.tgt[g]], g) for g in X.morphisms}, "k")
    mk = compose_functors(S.m, S.k)
    S.upsilon = NatTrans(identity_functor(X), mk, {x: X.ident[x] for x in X.objects}, "υ")
    km = compose_functors(S.k, S.m)
    S.nu = NatTrans(km, identity_functor(C),
                    {t: (kobj[A.obj(*t)], t, X.ident[A.obj(*t)]) for t in C.objects}, "ν")
    S.k_omega = _k_omega(S)
    return S


def _k_omega(S):
    """ω(c; x) = k θ(c; υ⁻¹) ∘ k φ~⁻¹(c; kx) ∘ ν⁻¹ at St θ(c; kx)."""
    A, St, X, C = S.A, S.St, S.A.A, S.category
    nu_inv = invert_nat_trans(S.nu)
    ups_inv = invert_nat_trans(S.upsilon)

    def omega(c, xs):
        kx = tuple(S.k.obj(x) for x in xs)
        a = nu_inv[St.obj(c, kx)]
        b = S.k.mor(X.inverse(S.m_phi.zeta_at(c, kx)))
        cc = S.k.mor(A.car(c, tuple(ups_inv[x] for x in xs)))
        return C.compose(cc, b, a)
    return build_pseudomorphism(A, St, S.k, omega, name="(k,ω)")


def unit_equivalence(S, raise_on_failure=True):
    """Check that (k, ω) ⊣ (m_θ, φ~) is an adjoint equivalence of pseudoalgebras."""
    r = Report(f"adjoint equivalence for St {S.A.name}".strip())
    r.absorb(validate_pseudomorphism(S.k_omega), "(k,ω) ")
    r.absorb(validate_pseudomorphism(S.m_phi), "(m,φ~) ")
    X, C = S.A.A, S.category
    r.check(all(S.upsilon[x] == X.ident[x] for x in X.objects), "υ = id")
    mk = compose_pseudomorphisms(S.m_phi, S.k_omega)
    km = compose_pseudomorphisms(S.k_omega, S.m_phi)
    r.absorb(validate_algebra_2cell(AlgebraTwoCell(identity_pseudomorphism(S.A), mk, S.upsilon)), "υ ")
    r.absorb(validate_algebra_2cell(AlgebraTwoCell(km, identity_pseudomorphism(S.St), S.nu)), "ν ")
    eps = epsilon_replacement(S.k, S.m, S.upsilon, S.nu)
    S.nu_adjoint = eps
    r.absorb(validate_algebra_2cell(AlgebraTwoCell(km, identity_pseudomorphism(S.St), eps)), "ε' ")
    r.absorb(triangle_identities(S.k, S.m, S.upsilon, eps))
    r.check(is_bo(S.e), "e_θ bijective on objects")
    r.check(is_ff(S.m), "m_θ full and faithful")
    r.check(compose_functors(S.m, S.e) == assemble_on_free(S.A, S.TA), "m_θ∘e_θ = θ")
    if S.A.is_strict():
        r.check(S.m_phi.is_strict(), "m_θ strict for strict input")
    if raise_on_failure and not r.ok:
        raise TheoremCheckError(r.render())
    return r


def verify_strictification(S):
    """Strictness of St A and the equivalence checks in one report."""
    r = Report(f"strictification of {S.A.name or '?'}, L={S.L}")
    rep = validate_pseudoalgebra(S.St)
    r.absorb(rep, "St A ")
    r.check(S.St.is_strict(), "St A strict")
    r.absorb(unit_equivalence(S, raise_on_failure=False))
    return r


# -------------------------------------------------------------------- 1-cells

class StrictMap:
    def __init__(self, source, target, functor, name=""):
        self.source = source
        self.target = target
        self.functor = functor
        self.name = name

    def as_pseudomorphism(self):
        return Pseudomorphism(self.source, self.target, self.functor, {}, name=self.name)


def validate_strict_map(F, max_failures=200):
    X, Y, f = F.source, F.target, F.functor
    r = Report(f"strict map {F.name}", max_failures=max_failures)
    O = X.operad
    N = min(X.N, Y.N)
    for n in range(N + 1):
        On = O.levels[n]
        nonid = [g for g in On.morphisms if On.ident[On.src[g]] != g]
        for xs in X.obj_tuples(n):
            fx = tuple(f.obj(x) for x in xs)
            if not Y.fits(fx):
                continue
            for c in On.objects:
                r.check(f.obj(X.obj(c, xs)) == Y.obj(c, fx), "action square (objects)", c, xs)
            for g in nonid:
                r.check(f.mor(X.op(g, xs)) == Y.op(g, fx), "action square (operations)", g, xs)
        for gs in X.mor_tuples(n):
            fg = tuple(f.mor(g) for g in gs)
            if not (Y.fits(tuple(Y.A.src[g] for g in fg)) and Y.fits(tuple(Y.A.tgt[g] for g in fg))):
                continue
            for c in On.objects:
                r.check(f.mor(X.car(c, gs)) == Y.car(c, fg), "action square (morphisms)", c, gs)
    return r


def strictify_morphism(pm, SA, SB):
    """St f: entrywise f on forms; on morphisms conjugation by ζ."""
    if pm.source is not SA.A or pm.target is not SB.A:
        raise BoundaryMismatchError("pseudomorphism does not go between the strictified algebras")
    f = pm.f
    Y = SB.A.A
    canon = SB.TA.canon

    def fo(t):
        return canon.canonical(t[0], tuple(f.obj(x) for x in t[1]))

    C = SA.category
    obj = {t: fo(t) for t in C.objects}
    mor = {}
    for m in C.morphisms:
        t, t2, g = m
        mor[m] = (obj[t], obj[t2], Y.compose(Y.inverse(pm.zeta_at(*t2)), f.mor(g), pm.zeta_at(*t)))
    F = Functor(C, SB.category, obj, mor, "St f")
    return StrictMap(SA.St, SB.St, F, name=f"St {pm.name}".strip())


def universal_map(pm, SA, SZ):
    """f~ = m_θ∘St f for a pseudomorphism into a strict algebra."""
    F = strictify_morphism(pm, SA, SZ)
    return StrictMap(SA.St, SZ.A, compose_functors(SZ.m, F.functor), name="f~")


def factors_through_unit(F, SA, pm):
    """Whether (F, id)∘(k, ω) = (f, ζ) on every component in range."""
    f = F.functor
    if compose_functors(f, SA.k) != pm.f:
        return False
    for c, xs in pm.keys(reps=False):
        if not SA.k_omega.in_range(xs):
            continue
        if f.mor(SA.k_omega.zeta_at(c, xs)) != pm.zeta_at(c, xs):
            return False
    return True


def universal_property(pm, SA, SZ, guard=10**6):
    """Enumerate every functor St A → Z and keep the strict ones factoring (f, ζ) through (k, ω)."""
    Z = pm.target
    if not Z.is_strict():
        raise HypothesisError("the target must be a strict algebra")
    r = Report(f"universal property for {pm.name}")
    ft = universal_map(pm, SA, SZ)
    r.check(validate_strict_map(ft).ok, "f~ strict")
    r.check(factors_through_unit(ft, SA, pm), "(f~, id)∘(k, ω) = (f, ζ)")
    hits = []
    count = 0
    for F in enumerate_functors(SA.category, Z.A, guard=guard):
        count += 1
        cand = StrictMap(SA.St, Z, F)
        if factors_through_unit(cand, SA, pm) and validate_strict_map(cand).ok:
            hits.append(F)
    r.note(f"{count} functors enumerated, {len(hits)} satisfy both conditions")
    r.check(len(hits) == 1, "uniqueness", len(hits))
    r.check(bool(hits) and hits[0] == ft.functor, "the unique map is f~")
    return r


# -------------------------------------------------------------------- 2-cells

def strictify_2cell(sigma, SA, SB):
    """St σ = St f'(ν) ∘ k σ m ∘ St f(ν⁻¹), evaluated by whiskering."""
    Sf = strictify_morphism(sigma.source, SA, SB)
    Sg = strictify_morphism(sigma.target, SA, SB)
    a1 = whisker_left(Sf.functor, invert_nat_trans(SA.nu))
    a2 = whisker_left(SB.k, whisker_right(sigma.lam, SA.m))
    a3 = whisker_left(Sg.functor, SA.nu)
    # St f∘k = k∘f holds on the nose, so the three cells compose
    a1 = NatTrans(Sf.functor, a2.src_f, a1.component)
    a3 = NatTrans(a2.tgt_f, Sg.functor, a3.component)
    lam = vertical_compose(a3, vertical_compose(a2, a1))
    return AlgebraTwoCell(Sf.as_pseudomorphism(), Sg.as_pseudomorphism(), lam, name="St σ")


# ---------------------------------------------------------------- flexibility

def flexibility_section(Z, SZ, SSZ=None):
    """St of the unit (k, ω): St Z → St St Z, checked to be a section of m_θ."""
    if SSZ is None:
        SSZ = strictify(SZ.St, SZ.L)
    eta = SZ.k_omega
    Seta = strictify_morphism(eta, SZ, SSZ)
    r = Report(f"flexibility section for {Z.name or '?'}")
    r.absorb(validate_strict_map(Seta), "St η ")
    comp = compose_functors(SSZ.m, Seta.functor)
    r.check(comp == identity_functor(SZ.category), "m_θ∘St η = id")
    return Seta, r


# --------------------------------------------------------------------- products

def product_comparison(SA, SB, SAB):
    """γ: St(A×B) → St A × St B as its two components, with both triangles checked.

    The product categories are never built; each triangle is checked one
    factor at a time against the projections of the carrier A×B.
    """
    TAB = SAB.TA
    if not (SA.L == SB.L == SAB.L):
        raise TruncationError("the three windows must share L")
    C, T, X = SAB.category, TAB.category, SAB.A.A
    r = Report("product comparison")
    parts = []
    for i, S in enumerate((SA, SB)):
        TA = S.TA

        def split(t, i=i, TA=TA):
            c, xs = t
            return TA.canonical(c, tuple(x[i] for x in xs))

        obj = {t: split(t) for t in C.objects}
        mor = {m: (obj[m[0]], obj[m[1]], m[2][i]) for m in C.morphisms}
        g = Functor(C, S.category, obj, mor, f"γ{i + 1}")
        pi = Functor(T, TA.category, {t: split(t) for t in T.objects},
                     {m: TA.canonical_mor(m[0], tuple(h[i] for h in m[1])) for m in T.morphisms})
        proj = Functor(X, S.A.A, {x: x[i] for x in X.objects}, {h: h[i] for h in X.morphisms})
        r.check(compose_functors(g, SAB.e) == compose_functors(S.e, pi), f"γ∘e = (e×e)∘π, factor {i + 1}")
        r.check(compose_functors(S.m, g) == compose_functors(proj, SAB.m), f"(m×m)∘γ = m, factor {i + 1}")
        parts.append(g)
    image = {(parts[0].obj(t), parts[1].obj(t)) for t in C.objects}
    r.note(f"γ hits {len(image)} of {len(SA.category.objects) * len(SB.category.objects)} "
           f"objects from {len(C.objects)}")
    return tuple(parts), r
