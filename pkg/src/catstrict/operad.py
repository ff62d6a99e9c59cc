"""Truncated operads in finite categories.

Levels are finite categories O(0), ..., O(N) carrying right Σ_n actions.  The
composition γ is stored on objects.  Every level here is either discrete or
chaotic, and in both cases a functor out of a product of levels into a level is
determined by its object part, so the morphism part of γ (and of the actions)
is recovered from the object table rather than stored.
"""
from functools import lru_cache
from itertools import product

from .errors import ArityError, IncompleteTableError, TruncationError
from .fincat import (FinCategory, Functor, GroupAction, chaotic_category, discrete_category,
                     functor_category, is_chaotic, symmetric_group, validate_action,
                     validate_category, validate_functor, eg_category)
from .perms import (act, all_perms, block_permutation, block_sum, identity_perm,
                    perm_compose, perm_inverse)
from .report import Report


def gamma_assoc(s, *taus):
    """σ(j_1,…,j_k)(τ_1⊕…⊕τ_k)."""
    if len(s) != len(taus):
        raise ArityError(f"{len(taus)} inputs for an operation of arity {len(s)}")
    js = tuple(len(t) for t in taus)
    return perm_compose(block_permutation(s, js), block_sum(*taus))


def insert_base(xs, r, base=0):
    """Insert the base object so that it becomes entry r (1-indexed)."""
    xs = tuple(xs)
    if not 1 <= r <= len(xs) + 1:
        raise ArityError(f"cannot insert at position {r} into a tuple of length {len(xs)}")
    return xs[:r - 1] + (base,) + xs[r - 1:]


@lru_cache(maxsize=None)
def _sym(n):
    return symmetric_group(n)


def compositions(total_max, k):
    """All k-tuples of non-negative ints with sum ≤ total_max."""
    if k == 0:
        yield ()
        return
    for first in range(total_max + 1):
        for rest in compositions(total_max - first, k - 1):
            yield (first,) + rest


class Operad:
    """A reduced operad truncated at ``max_arity``.

    ``gamma[(c, ds)]`` is the object γ(c; d_1, …, d_k) and ``actions[n]`` the
    right Σ_n action on level n.  ``group_actions``, when present, is a left
    action of a finite group on every level.
    """

    def __init__(self, name, max_arity, levels, actions, unit, gamma, group_actions=None,
                 group=None):
        self.name = name
        self.max_arity = max_arity
        self.levels = tuple(levels)
        self.actions = tuple(actions)
        self.unit = unit
        self.gamma_table = dict(gamma)
        self.group_actions = tuple(group_actions) if group_actions else None
        self.group = group
        self._kinds = tuple(_level_kind(C) for C in self.levels)
        self._orbit_cache = {}

    def __repr__(self):
        return f"<Operad {self.name} N={self.max_arity}>"

    def __eq__(self, other):
        return (isinstance(other, Operad) and self.max_arity == other.max_arity
                and self.levels == other.levels and self.actions == other.actions
                and self.unit == other.unit and self.gamma_table == other.gamma_table)

    def __hash__(self):
        return hash((self.name, self.max_arity))

    def level(self, n):
        if n > self.max_arity:
            raise TruncationError(f"arity {n} exceeds the truncation {self.max_arity}")
        return self.levels[n]

    @property
    def point(self):
        """The unique object of O(0)."""
        return self.levels[0].objects[0]

    def level_kind(self, n):
        return self._kinds[n]

    # ---- actions
    def act(self, n, c, s):
        return self.actions[n].obj_act[(s, c)]

    def act_mor(self, n, f, s):
        return self.actions[n].mor_act[(s, f)]

    # ---- composition
    def gamma(self, c, ds, arities=None):
        try:
            return self.gamma_table[(c, tuple(ds))]
        except KeyError:
            pass
        if arities is not None and sum(arities) > self.max_arity:
            raise TruncationError(f"output arity {sum(arities)} exceeds {self.max_arity}")
        raise IncompleteTableError(f"γ has no entry for {(c, tuple(ds))!r}")

    def gamma_mor(self, f, gs, k, js):
        """γ on morphisms, recovered from the object table."""
        j = sum(js)
        Ok = self.level(k)
        src = self.gamma(Ok.src[f], [self.levels[jr].src[g] for g, jr in zip(gs, js)], js)
        tgt = self.gamma(Ok.tgt[f], [self.levels[jr].tgt[g] for g, jr in zip(gs, js)], js)
        return self._mor_between(j, src, tgt)

    def _mor_between(self, j, src, tgt):
        C = self.levels[j]
        hom = C.hom(src, tgt)
        if self._kinds[j] == "chaotic" or (src == tgt and self._kinds[j] == "discrete"):
            return hom[0]
        raise IncompleteTableError(f"level {j} has no unique morphism {src!r} → {tgt!r}")

    def unit_arities(self):
        return (1,)

    # ---- degeneracies
    def degeneracy(self, n, r, c):
        """σ_r(c) = γ(c; 1, …, *, …, 1) with the point of O(0) in slot r."""
        if not 1 <= r <= n:
            raise ArityError(f"degeneracy σ_{r} on level {n}")
        ds = [self.unit] * n
        ds[r - 1] = self.point
        js = [1] * n
        js[r - 1] = 0
        return self.gamma(c, ds, js)

    def degeneracy_mor(self, n, r, f):
        On = self.level(n)
        return self._mor_between(n - 1, self.degeneracy(n, r, On.src[f]),
                                 self.degeneracy(n, r, On.tgt[f]))

    def degeneracy_functor(self, n, r):
        On = self.level(n)
        return Functor(On, self.level(n - 1), {c: self.degeneracy(n, r, c) for c in On.objects},
                       {f: self.degeneracy_mor(n, r, f) for f in On.morphisms})

    # ---- orbit representatives
    def orbit_minimizers(self, n, c):
        """The permutations σ for which c·σ is least in the id order, with that least element."""
        key = (n, c)
        hit = self._orbit_cache.get(key)
        if hit is not None:
            return hit
        from .ids import sort_key
        best, best_key, winners = None, None, []
        for s in all_perms(n):
            d = self.act(n, c, s)
            k = sort_key(d)
            if best_key is None or k < best_key:
                best, best_key, winners = d, k, [s]
            elif k == best_key:
                winners.append(s)
        hit = (best, tuple(winners))
        self._orbit_cache[key] = hit
        return hit

    def acts_freely(self, n):
        On = self.level(n)
        return all(len(self.orbit_minimizers(n, c)[1]) == 1 for c in On.objects)


def _level_kind(C):
    if all(C.src[m] == C.tgt[m] for m in C.morphisms) and len(C.morphisms) == len(C.objects):
        return "discrete"
    if is_chaotic(C):
        return "chaotic"
    return "general"


def _perm_action(n, C, obj_rule, chaotic):
    S = _sym(n)
    obj_act = {(s, c): obj_rule(c, s) for s in S.elements for c in C.objects}
    if chaotic:
        mor_act = {(s, (y, x)): (obj_act[(s, y)], obj_act[(s, x)]) for s in S.elements for (y, x) in C.morphisms}
    else:
        mor_act = {(s, m): obj_act[(s, m)] for s in S.elements for m in C.morphisms}
    return GroupAction(S, C, obj_act, mor_act, "right")


def _gamma_keys(O_objects, N):
    """Every (k, c, js, ds) with Σ js ≤ N, where O_objects[n] lists the objects of level n."""
    for k in range(N + 1):
        for js in compositions(N, k):
            for c in O_objects[k]:
                for ds in product(*(O_objects[j] for j in js)):
                    yield k, c, js, ds


def assoc_operad(N=4):
    levels = [discrete_category(all_perms(n), name=f"Σ{n}") for n in range(N + 1)]
    actions = [_perm_action(n, levels[n], lambda c, s: perm_compose(c, s), False) for n in range(N + 1)]
    objs = [lv.objects for lv in levels]
    gamma = {(c, ds): gamma_assoc(c, *ds) for _, c, _, ds in _gamma_keys(objs, N)}
    return Operad("Assoc", N, levels, actions, (1,), gamma)


def chaotic_operad(O, N=None):
    """E applied levelwise to an operad with discrete levels."""
    N = O.max_arity if N is None else N
    levels = [chaotic_category(O.levels[n].objects, name=f"E{O.levels[n].name}") for n in range(N + 1)]
    actions = []
    for n in range(N + 1):
        act_n = O.actions[n]
        actions.append(_perm_action(n, levels[n], lambda c, s, a=act_n: a.obj_act[(s, c)], True))
    gamma = {k: v for k, v in O.gamma_table.items()}
    return Operad(f"E({O.name})", N, levels, actions, O.unit, gamma)


def permutativity_operad(N=4):
    P = chaotic_operad(assoc_operad(N))
    P.name = "P"
    return P


def pg_operad(G, N=3, guard=10**6):
    """Levels Cat(EG, EΣ_j), with functors recorded by their object tables over G."""
    EG, _, _ = eg_category(G)
    gs = EG.objects
    gpos = {g: i for i, g in enumerate(gs)}
    levels = []
    for n in range(N + 1):
        FC = functor_category(EG, chaotic_category(all_perms(n)), guard=guard)
        FC.name = f"Cat(E{G.name},EΣ{n})"
        levels.append(FC)
    actions = [_perm_action(n, levels[n], lambda F, s: tuple(perm_compose(p, s) for p in F), True)
               for n in range(N + 1)]
    group_actions = []
    for n in range(N + 1):
        C = levels[n]
        obj_act = {}
        for g in G.elements:
            gi = G.inverse[g]
            for F in C.objects:
                obj_act[(g, F)] = tuple(F[gpos[G.mul(gi, x)]] for x in gs)
        mor_act = {(g, (y, x)): (obj_act[(g, y)], obj_act[(g, x)]) for g in G.elements for (y, x) in C.morphisms}
        group_actions.append(GroupAction(G, C, obj_act, mor_act, "left"))
    objs = [lv.objects for lv in levels]
    gamma = {}
    for _, c, _, ds in _gamma_keys(objs, N):
        gamma[(c, ds)] = tuple(gamma_assoc(c[i], *(d[i] for d in ds)) for i in range(len(gs)))
    unit = tuple((1,) for _ in gs)
    return Operad(f"P_{G.name}", N, levels, actions, unit, gamma, group_actions, G)


class OperadHom:
    def __init__(self, source, target, functors):
        self.source = source
        self.target = target
        self.functors = tuple(functors)


def iota_hom(G, N=3):
    """P → P_G, precomposition with EG → *."""
    P = permutativity_operad(N)
    PG = pg_operad(G, N)
    k = len(G.elements)
    fs = []
    for n in range(N + 1):
        obj = {c: (c,) * k for c in P.levels[n].objects}
        fs.append(Functor(P.levels[n], PG.levels[n], obj,
                          {(y, x): (obj[y], obj[x]) for (y, x) in P.levels[n].morphisms}))
    return OperadHom(P, PG, fs)


def validate_operad_hom(h):
    A, B = h.source, h.target
    r = Report(f"operad map {A.name} → {B.name}")
    N = min(A.max_arity, B.max_arity)
    for n in range(N + 1):
        F = h.functors[n]
        r.absorb(validate_functor(F), f"level {n} ")
        for s in all_perms(n):
            for c in A.levels[n].objects:
                r.check(F.obj(A.act(n, c, s)) == B.act(n, F.obj(c), s), "equivariance", n, c, s)
    r.check(h.functors[1].obj(A.unit) == B.unit, "unit")
    objs = [A.levels[n].objects for n in range(N + 1)]
    for k, c, js, ds in _gamma_keys(objs, N):
        lhs = h.functors[sum(js)].obj(A.gamma(c, ds, js))
        rhs = B.gamma(h.functors[k].obj(c), [h.functors[j].obj(d) for j, d in zip(js, ds)], js)
        r.check(lhs == rhs, "composition", c, ds)
    return r


def validate_operad(O):
    N = O.max_arity
    r = Report(f"operad {O.name} (N={N})")
    if len(O.levels) != N + 1 or len(O.actions) != N + 1:
        raise IncompleteTableError("one level and one action per arity 0..N are required")
    O0 = O.levels[0]
    r.check(len(O0.objects) == 1 and len(O0.morphisms) == 1, "reduced")
    for n, C in enumerate(O.levels):
        r.absorb(validate_category(C), f"level {n} ")
        a = O.actions[n]
        if a.target != C or a.side != "right" or len(a.group.elements) != len(all_perms(n)):
            r.fail("action-shape", n)
            continue
        r.absorb(validate_action(a), f"level {n} ")
    if O.unit not in O.levels[1].object_set:
        raise IncompleteTableError(f"unit {O.unit!r} is not an object of level 1")
    kinds = {O.level_kind(n) for n in range(N + 1)}
    if "general" in kinds:
        r.fail("level-kind", "levels must be discrete or chaotic")
        return r
    r.note("morphism-level composition is determined by the object tables (levels are discrete or chaotic)")
    objs = [C.objects for C in O.levels]
    for k, c, js, ds in _gamma_keys(objs, N):
        if (c, ds) not in O.gamma_table:
            raise IncompleteTableError(f"γ has no entry for {(c, ds)!r}")
        v = O.gamma_table[(c, ds)]
        r.check(v in O.levels[sum(js)].object_set, "composition-lands-in-level", c, ds)
    if not r.ok:
        return r
    g = O.gamma_table
    u = O.unit
    # unit laws
    for j in range(N + 1):
        for c in objs[j]:
            r.check(g[(u, (c,))] == c, "left-unit", c)
            r.check(g[(c, (u,) * j)] == c, "right-unit", c)
    # equivariance
    for k, c, js, ds in _gamma_keys(objs, N):
        base = g[(c, ds)]
        j = sum(js)
        for s in all_perms(k):
            if k < 2 and s == identity_perm(k):
                continue
            lhs = g[(O.act(k, c, s), ds)]
            sinv = perm_inverse(s)
            ds2 = tuple(ds[sinv[i] - 1] for i in range(k))
            rhs = O.act(j, g[(c, ds2)], block_permutation(s, js))
            r.check(lhs == rhs, "equivariance-outer", c, s, ds)
        for ts in product(*(all_perms(jr) for jr in js)):
            if all(t == identity_perm(len(t)) for t in ts):
                continue
            ds2 = tuple(O.act(jr, d, t) for jr, d, t in zip(js, ds, ts))
            r.check(g[(c, ds2)] == O.act(j, base, block_sum(*ts)), "equivariance-inner", c, ds, ts)
    # associativity
    n_assoc = 0
    comps = [list(compositions(N, j)) for j in range(N + 1)]
    for k, c, js, ds in _gamma_keys(objs, N):
        outer = g[(c, ds)]
        cuts, pos = [], 0
        for jr in js:
            cuts.append((pos, pos + jr))
            pos += jr
        pairs = list(zip(ds, cuts))
        for flat_is in comps[pos]:
            for es in product(*(objs[x] for x in flat_is)):
                n_assoc += 1
                rhs = g[(c, tuple(g[(d, es[a:b])] for d, (a, b) in pairs))]
                if g[(outer, es)] != rhs:
                    r.fail("associativity", c, ds, es)
    r.count("associativity", n_assoc)
    if O.group_actions is not None:
        G = O.group
        for n in range(N + 1):
            ga = O.group_actions[n]
            r.absorb(validate_action(ga), f"G on level {n} ")
            for gel in G.elements:
                for c in objs[n]:
                    for s in all_perms(n):
                        r.check(ga.on_obj(gel, O.act(n, c, s)) == O.act(n, ga.on_obj(gel, c), s),
                                "G-commutes-with-Σ", gel, c, s)
        for gel in G.elements:
            r.check(O.group_actions[1].on_obj(gel, u) == u, "G-fixes-unit", gel)
            for k, c, js, ds in _gamma_keys(objs, N):
                lhs = O.group_actions[sum(js)].on_obj(gel, g[(c, ds)])
                rhs = g[(O.group_actions[k].on_obj(gel, c),
                         tuple(O.group_actions[jr].on_obj(gel, d) for jr, d in zip(js, ds)))]
                r.check(lhs == rhs, "G-equivariant-composition", gel, c, ds)
    return r
