"""The free algebra O(A) on a based finite category, truncated by length.

An object of O(A) is a pair (c, xs) with c an object of O(n) and xs an n-tuple
of objects of A, taken up to (c·σ, xs) ~ (c, σ·xs) and up to deleting base
entries through the degeneracies of O.  Morphisms are treated the same way.
Canonical representatives drop base entries first and then pick the least
element of the Σ_n orbit.
"""
from collections import Counter
from dataclasses import dataclass

from .errors import (BoundaryMismatchError, HypothesisError, TruncationError,
                     WellDefinednessError)
from .fincat import FinCategory, Functor, NatTrans
from .ids import sort_key
from .perms import act, all_perms, perm_inverse
from .report import Report


@dataclass(frozen=True)
class BasedCategory:
    category: FinCategory
    base: object

    @property
    def objects(self):
        return self.category.objects


def check_rigid_base(A):
    """The quotient is computed levelwise, which needs an isolated base with no non-identity endomorphisms."""
    C, b = A.category, A.base
    if b not in C.object_set:
        raise HypothesisError(f"base object {b!r} is not an object")
    touching = [m for m in C.morphisms if C.src[m] == b or C.tgt[m] == b]
    if touching != [C.ident[b]]:
        raise HypothesisError("the base object must be isolated with only its identity")


class Canonicalizer:
    """Canonical representatives of (c; xs) and (f; gs) without building any window."""

    def __init__(self, operad, carrier):
        check_rigid_base(carrier)
        self.operad = operad
        self.carrier = carrier
        self._base_id = carrier.category.ident[carrier.base]
        self._obj_cache = {}
        self._mor_cache = {}

    def canonical(self, c, xs):
        xs = tuple(xs)
        key = (c, xs)
        hit = self._obj_cache.get(key)
        if hit is not None:
            return hit
        O, base = self.operad, self.carrier.base
        n = len(xs)
        c2, xs2 = c, xs
        while base in xs2:
            r = xs2.index(base) + 1
            c2 = O.degeneracy(n, r, c2)
            xs2 = xs2[:r - 1] + xs2[r:]
            n -= 1
        _, winners = O.orbit_minimizers(n, c2)
        best = None
        for s in winners:
            cand = (O.act(n, c2, s), act(perm_inverse(s), xs2))
            k = sort_key(cand[1])
            if best is None or k < best[0]:
                best = (k, cand)
        out = best[1]
        self._obj_cache[key] = out
        return out

    def canonical_mor(self, f, gs):
        gs = tuple(gs)
        key = (f, gs)
        hit = self._mor_cache.get(key)
        if hit is not None:
            return hit
        O = self.operad
        n = len(gs)
        while self._base_id in gs:
            r = gs.index(self._base_id) + 1
            f = O.degeneracy_mor(n, r, f)
            gs = gs[:r - 1] + gs[r:]
            n -= 1
        best = None
        for s in all_perms(n):
            fs = O.act_mor(n, f, s)
            cand = (fs, act(perm_inverse(s), gs))
            k = (sort_key(fs), sort_key(cand[1]))
            if best is None or k < best[0]:
                best = (k, cand)
        out = best[1]
        self._mor_cache[key] = out
        return out


def _bounded_tuples(items, n, sizes, L):
    """Nondecreasing n-tuples from ``items`` whose total under each size function is ≤ L.

    Every Σ_n orbit of (operation, tuple) pairs meets a sorted tuple, so these
    are enough to reach all canonical forms.
    """
    ws = [tuple(size(x) for size in sizes) for x in items]

    def rec(start, left, budget):
        if left == 0:
            yield ()
            return
        for i in range(start, len(items)):
            w = ws[i]
            if any(b - a < 0 for a, b in zip(w, budget)):
                continue
            rest = tuple(b - a for a, b in zip(w, budget))
            for tail in rec(i, left - 1, rest):
                yield (items[i],) + tail

    return rec(0, n, (L,) * len(sizes))


class FreeAlgebraCategory:
    """The window of O(A) consisting of canonical forms of total weight ≤ L.

    ``weight`` assigns each non-base object of A a positive size (1 by
    default); for iterated constructions it is the length of an inner form.
    """

    def __init__(self, operad, carrier, L, weight=None, name=""):
        if L > operad.max_arity:
            raise TruncationError(f"length bound {L} exceeds the operad truncation {operad.max_arity}")
        self.canon = Canonicalizer(operad, carrier)
        self.operad = operad
        self.carrier = carrier
        self.L = L
        self.weight = weight or (lambda x: 1)
        self.name = name
        A = carrier.category
        self._nonbase = [x for x in A.objects if x != carrier.base]
        self._nonbase_mor = [m for m in A.morphisms
                             if A.src[m] != carrier.base]
        self.skipped_objects = self._count_oversized()
        self.category = self._build()

    def canonical(self, c, xs):
        return self.canon.canonical(c, xs)

    def canonical_mor(self, f, gs):
        return self.canon.canonical_mor(f, gs)

    @property
    def nonfree_levels(self):
        """Arities where Σ_n fixes some operation, so orbits have several least representatives."""
        return [n for n in range(self.L + 1) if not self.operad.acts_freely(n)]

    def length(self, t):
        return len(t[1])

    def total_weight(self, t):
        return sum(self.weight(x) for x in t[1])

    def _count_oversized(self):
        """Ordered tuples of length ≤ L whose total weight exceeds L."""
        L = self.L
        ws = Counter(self.weight(x) for x in self._nonbase)
        ways = {0: 1}
        skipped = 0
        for _ in range(L):
            nxt = Counter()
            for total, k in ways.items():
                for w, c in ws.items():
                    nxt[total + w] += k * c
            skipped += sum(k for total, k in nxt.items() if total > L)
            ways = {t: k for t, k in nxt.items() if t <= L}
        return skipped

    # ---- the window category
    def _build(self):
        O, A = self.operad, self.carrier.category
        L = self.L
        objs = set()
        for n in range(L + 1):
            for xs in _bounded_tuples(self._nonbase, n, (self.weight,), L):
                for c in O.levels[n].objects:
                    objs.add(self.canonical(c, xs))
        self.empty = self.canonical(O.point, ())
        mors, src, tgt = set(), {}, {}
        for n in range(L + 1):
            On = O.levels[n]
            sizes = (lambda g: self.weight(A.src[g]), lambda g: self.weight(A.tgt[g]))
            for gs in _bounded_tuples(self._nonbase_mor, n, sizes, L):
                for f in On.morphisms:
                    m = self.canonical_mor(f, gs)
                    if m in mors:
                        continue
                    mors.add(m)
        for m in mors:
            f, gs = m
            n = len(gs)
            On = O.levels[n]
            src[m] = self.canonical(On.src[f], tuple(A.src[g] for g in gs))
            tgt[m] = self.canonical(On.tgt[f], tuple(A.tgt[g] for g in gs))
        ident = {}
        for t in objs:
            c, xs = t
            n = len(xs)
            ident[t] = self.canonical_mor(O.levels[n].ident[c], tuple(A.ident[x] for x in xs))
        outgoing = {}
        for m in mors:
            outgoing.setdefault(src[m], []).append(m)
        comp = {}
        for m1 in mors:
            for m2 in outgoing.get(tgt[m1], ()):
                comp[(m2, m1)] = self._compose(m2, m1)
        return FinCategory(objs, mors, src, tgt, ident, comp, name=self.name or "O(A)")

    def _compose(self, m2, m1):
        O, A = self.operad, self.carrier.category
        f1, g1 = m1
        f2, g2 = m2
        n = len(g1)
        On = O.levels[n]
        want = (On.src[f2], tuple(A.src[g] for g in g2))
        for s in all_perms(n):
            f1s = O.act_mor(n, f1, s)
            g1s = act(perm_inverse(s), g1)
            if (On.tgt[f1s], tuple(A.tgt[g] for g in g1s)) == want:
                f = On.comp[(f2, f1s)]
                gs = tuple(A.comp[(b, a)] for b, a in zip(g2, g1s))
                return self.canonical_mor(f, gs)
        raise WellDefinednessError(f"cannot align {m1!r} with {m2!r}")

    # ---- structure maps
    def form_of(self, c, xs):
        """Canonical form, refusing ones outside the window."""
        t = self.canonical(c, xs)
        if self.total_weight(t) > self.L:
            raise TruncationError(f"form {t!r} is outside the window L={self.L}")
        return t

    def based(self):
        return BasedCategory(self.category, self.empty)


def free_monad(operad, A, L, name=""):
    return FreeAlgebraCategory(operad, A, L, name=name)


def iterate(TA):
    """O(O(A)) over the window of TA, weighted by inner lengths so the total stays ≤ L."""
    inner_weight = TA.total_weight
    return FreeAlgebraCategory(TA.operad, TA.based(), TA.L, weight=inner_weight,
                               name="O(" + (TA.name or "O(A)") + ")")


def _window(O, A, L):
    if isinstance(A, FreeAlgebraCategory):
        return A
    return free_monad(O, A, L)


def monad_unit(O, A, L=1):
    """ι: A → O(A); ``A`` may also be an already built window."""
    TA = _window(O, A, L)
    O, A = TA.operad, TA.carrier.category
    if TA.L < 1:
        raise TruncationError("the unit needs L ≥ 1")
    u = O.unit
    iu = O.levels[1].ident[u]
    return Functor(A, TA.category, {x: TA.canonical(u, (x,)) for x in A.objects},
                   {g: TA.canonical_mor(iu, (g,)) for g in A.morphisms}, "unit")


def mult_object(TA, c, ts):
    """μ[c; t_1..t_n] = [γ(c; c_1..c_n); xs_1..xs_n]."""
    O = TA.operad
    js = [len(t[1]) for t in ts]
    if sum(js) > TA.operad.max_arity:
        raise TruncationError("flattened form exceeds the operad truncation")
    g = O.gamma(c, [t[0] for t in ts], js)
    xs = tuple(x for t in ts for x in t[1])
    return TA.form_of(g, xs)


def mult_morphism(TA, f, ms):
    O = TA.operad
    js = [len(m[1]) for m in ms]
    k = len(ms)
    g = O.gamma_mor(f, [m[0] for m in ms], k, js)
    gs = tuple(x for m in ms for x in m[1])
    t = TA.canonical_mor(g, gs)
    return t


def monad_mult(O, A, L):
    """μ: O(O(A)) → O(A) on the doubly nested window (partial beyond it)."""
    TA = _window(O, A, L)
    return mult_functor(iterate(TA), TA)


def mult_functor(TTA, TA):
    if TTA.carrier.category != TA.category:
        raise BoundaryMismatchError("outer free algebra is not built on the inner one")
    C = TTA.category
    obj = {t: mult_object(TA, t[0], t[1]) for t in C.objects}
    mor = {m: mult_morphism(TA, m[0], m[1]) for m in C.morphisms}
    return Functor(C, TA.category, obj, mor, "mult")


def free_monad_on_functor(f, TA, TB):
    """O(f): entrywise application followed by canonicalization, between built windows."""
    a0, b0 = TA.carrier.base, TB.carrier.base
    if f.obj(a0) != b0:
        raise HypothesisError("functor does not preserve the base object")
    if TA.operad is not TB.operad and TA.operad != TB.operad:
        raise BoundaryMismatchError("free algebras over different operads")
    obj = {t: TB.canonical(t[0], tuple(f.obj(x) for x in t[1])) for t in TA.category.objects}
    mor = {m: TB.canonical_mor(m[0], tuple(f.mor(g) for g in m[1])) for m in TA.category.morphisms}
    return Functor(TA.category, TB.category, obj, mor)


def free_monad_on_nat(alpha, TA, TB):
    O = TA.operad
    F = free_monad_on_functor(alpha.src_f, TA, TB)
    G = free_monad_on_functor(alpha.tgt_f, TA, TB)
    comps = {}
    for t in TA.category.objects:
        c, xs = t
        n = len(xs)
        comps[t] = TB.canonical_mor(O.levels[n].ident[c], tuple(alpha[x] for x in xs))
    return NatTrans(F, G, comps)


def validate_monad_laws(O, A, L=None):
    """Unit and associativity laws of μ on every in-window instance."""
    TA = _window(O, A, L)
    r = Report(f"monad laws for {TA.operad.name}, L={TA.L}")
    if TA.L == 0:
        r.note("L = 0: laws hold vacuously")
        return r
    O = TA.operad
    TTA = iterate(TA)
    T3A = iterate(TTA)
    mu = mult_functor(TTA, TA)
    if TA.nonfree_levels:
        r.note(f"Σ acts non-freely at arities {TA.nonfree_levels}; "
               "canonical forms use the lexicographically least representative")
    r.skip("objects beyond the doubly nested window", TTA.skipped_objects)
    r.skip("objects beyond the triply nested window", T3A.skipped_objects)
    eta_T = monad_unit(O, TTA)          # O(A) → O(O(A))
    u, iu = O.unit, O.levels[1].ident[O.unit]
    for t in TA.category.objects:
        r.check(mu.obj(eta_T.obj(t)) == t, "μ∘ιO = id", t)
        c, xs = t
        inner = tuple(TA.canonical(u, (x,)) for x in xs)
        r.check(mu.obj(TTA.canonical(c, inner)) == t, "μ∘Oι = id", t)
    A = TA.carrier.category
    for m in TA.category.morphisms:
        r.check(mu.mor(eta_T.mor(m)) == m, "μ∘ιO = id (morphisms)", m)
        f, gs = m
        inner = tuple(TA.canonical_mor(iu, (g,)) for g in gs)
        r.check(mu.mor(TTA.canonical_mor(f, inner)) == m, "μ∘Oι = id (morphisms)", m)
    for t in T3A.category.objects:
        c, ts = t
        # μ_O first: flatten the two outer layers
        lhs = mu.obj(mult_object(TTA, c, ts))
        rhs = mult_object(TA, c, tuple(mu.obj(s) for s in ts))
        r.check(lhs == rhs, "μ∘μO = μ∘Oμ", t)
    for m in T3A.category.morphisms:
        f, ms = m
        lhs = mu.mor(mult_morphism(TTA, f, ms))
        rhs = mult_morphism(TA, f, tuple(mu.mor(s) for s in ms))
        r.check(lhs == rhs, "μ∘μO = μ∘Oμ (morphisms)", m)
    return r


def count_p_objects(n_objects, L):
    """Σ_{n ≤ L} (|Ob A| − 1)^n."""
    return sum((n_objects - 1) ** n for n in range(L + 1))
