"""Pseudoalgebras over operads, their pseudomorphisms and algebra 2-cells.

Tables
------
``theta[(c, xs)]``      the object θ_n(c; xs)
``theta_op[(f, xs)]``   θ_n(f; id_xs) for a non-identity morphism f of O(n)
``theta_car[(c, gs)]``  θ_n(id_c; gs) for a tuple gs with some non-identity entry
``phi[(c, blocks)]``    the component of φ(n; m_1..m_n) at (c; (d_1, x_1), …, (d_n, x_n))

with θ_n(f; gs) = θ_n(id; gs) ∘ θ_n(f; id).  φ is normally listed only at keys
whose operations are least in their Σ orbits; the remaining components are the
ones forced by equivariance.  Missing components are identities, which is only
legal when source and target agree.

A pseudoalgebra may be a window: with ``bound`` set, only tuples whose total
``weight`` is at most the bound are in range, and every check skips the rest.
"""
from itertools import product

from .errors import (BoundaryMismatchError, HypothesisError, IncompleteTableError,
                     NotInvertibleError, TruncationError)
from .fincat import Functor, NatTrans, compose_functors, identity_functor, product_category, \
    validate_functor, validate_nat_trans
from .freemonad import BasedCategory, Canonicalizer
from .operad import compositions, insert_base
from .perms import act, perm_inverse, transposition
from .report import Report


class Pseudoalgebra:
    def __init__(self, operad, carrier, theta, theta_op, theta_car, phi, N=None,
                 weight=None, bound=None, name=""):
        self.operad = operad
        self.carrier = carrier
        self.A = carrier.category
        self.N = operad.max_arity if N is None else N
        if self.N > operad.max_arity:
            raise TruncationError(f"N = {self.N} exceeds the operad truncation {operad.max_arity}")
        for n in range(self.N + 1):
            kind = operad.level_kind(n)
            if kind not in ("discrete", "chaotic"):
                raise HypothesisError(f"level {n} of {operad.name} is neither discrete nor chaotic")
            if not operad.acts_freely(n):
                raise HypothesisError(f"Σ_{n} does not act freely on level {n} of {operad.name}")
        self.theta = dict(theta)
        self.theta_op = dict(theta_op)
        self.theta_car = dict(theta_car)
        self.phi = dict(phi)
        self.weight = weight
        self.bound = bound
        self.name = name
        self._idset = frozenset(self.A.ident.values())
        self._phi_cache = {}

    def __repr__(self):
        return f"<Pseudoalgebra {self.name or '?'} over {self.operad.name}, N={self.N}>"

    @property
    def base(self):
        return self.carrier.base

    # ---- windows
    def w(self, x):
        return 0 if self.weight is None else self.weight(x)

    def fits(self, xs):
        return self.bound is None or sum(self.w(x) for x in xs) <= self.bound

    def obj_tuples(self, n, budget=None):
        if budget is None:
            budget = self.bound
        items = self.A.objects
        if budget is None:
            yield from product(items, repeat=n)
            return
        ws = [(x, self.w(x)) for x in items]

        def rec(i, left):
            if i == n:
                yield ()
                return
            for x, wx in ws:
                if wx <= left:
                    for rest in rec(i + 1, left - wx):
                        yield (x,) + rest
        yield from rec(0, budget)

    def mor_tuples(self, n):
        A = self.A
        if self.bound is None:
            yield from product(A.morphisms, repeat=n)
            return
        ws = [(g, self.w(A.src[g]), self.w(A.tgt[g])) for g in A.morphisms]

        def rec(i, ls, lt):
            if i == n:
                yield ()
                return
            for g, a, b in ws:
                if a <= ls and b <= lt:
                    for rest in rec(i + 1, ls - a, lt - b):
                        yield (g,) + rest
        yield from rec(0, self.bound, self.bound)

    def block_tuples(self, ms, budget=None):
        if budget is None:
            budget = self.bound
        if not ms:
            yield ()
            return
        for x in self.obj_tuples(ms[0], budget):
            left = None if budget is None else budget - sum(self.w(v) for v in x)
            for rest in self.block_tuples(ms[1:], left):
                yield (x,) + rest

    # ---- the action
    def is_id(self, g):
        return g in self._idset

    def obj(self, c, xs):
        try:
            return self.theta[(c, xs)]
        except KeyError:
            pass
        if len(xs) > self.N or not self.fits(xs):
            raise TruncationError(f"θ at {(c, xs)!r} is outside the truncation")
        raise IncompleteTableError(f"θ has no entry for {(c, xs)!r}")

    def op(self, f, xs):
        On = self.operad.levels[len(xs)]
        if On.src[f] == On.tgt[f] and On.ident[On.src[f]] == f:
            return self.A.ident[self.obj(On.src[f], xs)]
        try:
            return self.theta_op[(f, xs)]
        except KeyError:
            raise IncompleteTableError(f"θ has no entry for the operation morphism {(f, xs)!r}") from None

    def car(self, c, gs):
        A = self.A
        if all(g in self._idset for g in gs):
            return A.ident[self.obj(c, tuple(A.src[g] for g in gs))]
        try:
            return self.theta_car[(c, gs)]
        except KeyError:
            pass
        if len(gs) > self.N or not self.fits(tuple(A.src[g] for g in gs)) \
                or not self.fits(tuple(A.tgt[g] for g in gs)):
            raise TruncationError(f"θ at {(c, gs)!r} is outside the truncation")
        raise IncompleteTableError(f"θ has no entry for {(c, gs)!r}")

    def mor(self, f, gs):
        A = self.A
        On = self.operad.levels[len(gs)]
        a = self.op(f, tuple(A.src[g] for g in gs))
        b = self.car(On.tgt[f], gs)
        return A.comp[(b, a)]

    # ---- φ
    def gamma_of(self, c, blocks):
        return self.operad.gamma(c, [d for d, _ in blocks], [len(x) for _, x in blocks])

    def phi_src(self, c, blocks):
        return self.obj(c, tuple(self.obj(d, x) for d, x in blocks))

    def phi_tgt(self, c, blocks):
        return self.obj(self.gamma_of(c, blocks), tuple(v for _, x in blocks for v in x))

    def rep_key(self, c, blocks):
        return phi_rep_key(self.operad, c, blocks)

    def phi_at(self, c, blocks):
        key = (c, blocks)
        v = self.phi.get(key)
        if v is not None:
            return v
        v = self._phi_cache.get(key)
        if v is None:
            v = self._resolve_phi(c, blocks)
            self._phi_cache[key] = v
        return v

    def _resolve_phi(self, c, blocks):
        rk = self.rep_key(c, blocks)
        if rk != (c, blocks):
            v = self.phi.get(rk)
            if v is not None:
                return v
        s = self.phi_src(c, blocks)
        if s != self.phi_tgt(c, blocks):
            raise IncompleteTableError(f"φ has no component at {(c, blocks)!r}")
        return self.A.ident[s]

    def is_strict(self):
        return all(self.is_id(v) for v in self.phi.values())

    def with_tables(self, **changes):
        """A copy with some tables replaced (used for corruption tests)."""
        kw = dict(theta=self.theta, theta_op=self.theta_op, theta_car=self.theta_car, phi=self.phi)
        kw.update(changes)
        return Pseudoalgebra(self.operad, self.carrier, N=self.N, weight=self.weight,
                             bound=self.bound, name=self.name, **kw)


def restrict_arity(P, N):
    """P with every table cut down to arities ≤ N."""
    if N >= P.N:
        return P

    def cut(table):
        return {k: v for k, v in table.items() if len(k[1]) <= N}
    phi = {k: v for k, v in P.phi.items() if sum(len(x) for _, x in k[1]) <= N}
    return Pseudoalgebra(P.operad, P.carrier, cut(P.theta), cut(P.theta_op), cut(P.theta_car), phi,
                         N=N, weight=P.weight, bound=P.bound, name=P.name)


def phi_rep_key(O, c, blocks):
    nb = []
    for d, x in blocks:
        d2, (tau,) = O.orbit_minimizers(len(x), d)
        nb.append((d, x) if d2 == d else (d2, act(perm_inverse(tau), x)))
    c2, (rho,) = O.orbit_minimizers(len(blocks), c)
    if c2 == c:
        return (c, tuple(nb))
    return (c2, act(perm_inverse(rho), tuple(nb)))


def rep_key(O, c, xs):
    c2, (rho,) = O.orbit_minimizers(len(xs), c)
    if c2 == c:
        return (c, xs)
    return (c2, act(perm_inverse(rho), xs))


def orbit_reps(O, n):
    """Objects of O(n) that are least in their Σ_n orbit, in level order."""
    cache = O.__dict__.setdefault("_reps_cache", {})
    if n not in cache:
        cache[n] = tuple(c for c in O.levels[n].objects if O.orbit_minimizers(n, c)[0] == c)
    return cache[n]


def _out_generators(C, c):
    """Morphisms out of c that, with their inverses, generate a discrete or chaotic level."""
    return [m for m in C.out_of(c) if C.tgt[m] != c]


# ------------------------------------------------------------------- building

def phi_rep_keys(P, N=None):
    """Every φ key whose operations are orbit representatives, within the window."""
    O = P.operad
    N = P.N if N is None else N
    for n in range(N + 1):
        for ms in compositions(N, n):
            for c in orbit_reps(O, n):
                for ds in product(*(orbit_reps(O, m) for m in ms)):
                    for xs in P.block_tuples(ms):
                        yield (c, tuple(zip(ds, xs)))


def build_pseudoalgebra(operad, carrier, obj_fn, op_fn, car_fn, phi_fn, N=None, weight=None,
                        bound=None, name=""):
    """Tabulate a pseudoalgebra from callables (obj_fn(c, xs), op_fn(f, xs), car_fn(c, gs), phi_fn(c, blocks))."""
    A = carrier.category
    P = Pseudoalgebra(operad, carrier, {}, {}, {}, {}, N=N, weight=weight, bound=bound, name=name)
    O = operad
    for n in range(P.N + 1):
        On = O.levels[n]
        for xs in P.obj_tuples(n):
            for c in On.objects:
                P.theta[(c, xs)] = obj_fn(c, xs)
    for n in range(P.N + 1):
        On = O.levels[n]
        nonid = [f for f in On.morphisms if On.ident[On.src[f]] != f]
        if nonid:
            for xs in P.obj_tuples(n):
                for f in nonid:
                    P.theta_op[(f, xs)] = op_fn(f, xs)
        for gs in P.mor_tuples(n):
            if all(g in P._idset for g in gs):
                continue
            for c in On.objects:
                P.theta_car[(c, gs)] = car_fn(c, gs)
    if phi_fn is not None:
        for key in phi_rep_keys(P):
            v = phi_fn(*key)
            if not P.is_id(v):
                P.phi[key] = v
    return P


def strict_algebra(operad, carrier, obj_fn, mor_fn, N=None, name=""):
    """A strict algebra from θ on objects and on (f, gs); φ is the identity."""
    A = carrier.category
    return build_pseudoalgebra(
        operad, carrier, obj_fn,
        lambda f, xs: mor_fn(f, tuple(A.ident[x] for x in xs)),
        lambda c, gs: mor_fn(operad.levels[len(gs)].ident[c], gs),
        None, N=N, name=name)


# ------------------------------------------------------------------ validation

def validate_pseudoalgebra(P, max_failures=200):
    """Check tables and every axiom instance within truncation.

    A missing θ entry raises IncompleteTableError; everything else, including
    a φ component that cannot be resolved, is reported as a failure.
    """
    r = Report(f"pseudoalgebra {P.name or '?'} over {P.operad.name}, N={P.N}",
               max_failures=max_failures)
    _check_tables(P, r)
    if not r.ok:
        return r
    for label, stage in _STAGES:
        _run_stage(P, r, label, stage)
    r.note("φ components off orbit representatives are determined by equivariance; "
           "listed ones are compared against their representatives")
    return r


def _run_stage(obj, r, label, stage):
    try:
        stage(obj, r)
    except (IncompleteTableError, BoundaryMismatchError, NotInvertibleError, KeyError) as e:
        r.fail(label, type(e).__name__, str(e))


def _check_tables(P, r):
    A, O = P.A, P.operad
    for (c, xs), v in P.theta.items():
        n = len(xs)
        ok = (n <= P.N and c in O.levels[n].object_set and all(x in A.object_set for x in xs)
              and v in A.object_set)
        r.check(ok, "table: θ entry", c, xs)
    for n in range(P.N + 1):
        On = O.levels[n]
        for xs in P.obj_tuples(n):
            for c in On.objects:
                if (c, xs) not in P.theta:
                    raise IncompleteTableError(f"θ has no entry for {(c, xs)!r}")
    if not r.ok:
        return
    for (f, xs), v in P.theta_op.items():
        On = O.levels[len(xs)]
        ok = (v in A.morphism_set and A.src[v] == P.obj(On.src[f], xs)
              and A.tgt[v] == P.obj(On.tgt[f], xs))
        r.check(ok, "functoriality: θ boundary", f, xs)
    for (c, gs), v in P.theta_car.items():
        ok = (v in A.morphism_set
              and A.src[v] == P.obj(c, tuple(A.src[g] for g in gs))
              and A.tgt[v] == P.obj(c, tuple(A.tgt[g] for g in gs)))
        r.check(ok, "functoriality: θ boundary", c, gs)
    for key, v in P.phi.items():
        c, blocks = key
        try:
            ok = (v in A.morphism_set and A.src[v] == P.phi_src(c, blocks)
                  and A.tgt[v] == P.phi_tgt(c, blocks) and A.is_iso(v))
        except (IncompleteTableError, TruncationError, KeyError):
            ok = False
        r.check(ok, "φ boundary", key)


def _check_functoriality(P, r):
    A, O = P.A, P.operad
    comp = A.comp
    for n in range(P.N + 1):
        On = O.levels[n]
        if O.level_kind(n) == "chaotic" and len(On.objects) > 1:
            e = On.objects[0]
            for xs in P.obj_tuples(n):
                for y in On.objects:
                    if y == e:
                        continue
                    out, back = On.hom(e, y)[0], On.hom(y, e)[0]
                    a, b = P.op(out, xs), P.op(back, xs)
                    r.check(comp.get((b, a)) == A.ident[P.obj(e, xs)], "functoriality: θ on O(n)", n, back, out, xs)
                    r.check(comp.get((a, b)) == A.ident[P.obj(y, xs)], "functoriality: θ on O(n)", n, out, back, xs)
                    for x in On.objects:
                        if x == e or x == y:
                            continue
                        f = On.hom(x, y)[0]
                        via = comp.get((a, P.op(On.hom(x, e)[0], xs)))
                        r.check(P.op(f, xs) == via, "functoriality: θ on O(n)", n, f, xs)
        # carrier slot, at orbit representatives of c (equivariance covers the rest)
        for c in orbit_reps(O, n):
            for gs1 in P.mor_tuples(n):
                tg = tuple(A.tgt[g] for g in gs1)
                for gs2 in product(*(A.out_of(t) for t in tg)):
                    if not P.fits(tuple(A.tgt[g] for g in gs2)):
                        continue
                    both = tuple(comp[(g2, g1)] for g2, g1 in zip(gs2, gs1))
                    r.check(P.car(c, both) == comp[(P.car(c, gs2), P.car(c, gs1))],
                            "functoriality: θ on A^n", c, gs2, gs1)
        # interchange between the two slots
        if O.level_kind(n) != "chaotic":
            continue
        for c in orbit_reps(O, n):
            gens = _out_generators(On, c)
            if not gens:
                continue
            for xs in P.obj_tuples(n):
                for i in range(n):
                    for g in A.out_of(xs[i]):
                        if g in P._idset:
                            continue
                        gs = tuple(g if j == i else A.ident[x] for j, x in enumerate(xs))
                        ys = tuple(A.tgt[h] for h in gs)
                        if not P.fits(ys):
                            continue
                        for f in gens:
                            lhs = comp[(P.op(f, ys), P.car(c, gs))]
                            rhs = comp[(P.car(On.tgt[f], gs), P.op(f, xs))]
                            r.check(lhs == rhs, "functoriality: interchange", f, gs)


def _check_equivariance(P, r):
    A, O = P.A, P.operad
    for n in range(2, P.N + 1):
        On = O.levels[n]
        gens = [transposition(n, i) for i in range(1, n)]
        nonid = [f for f in On.morphisms if On.ident[On.src[f]] != f]
        for xs in P.obj_tuples(n):
            for s in gens:
                sx = act(s, xs)
                for c in On.objects:
                    r.check(P.obj(O.act(n, c, s), xs) == P.obj(c, sx), "equivariance", c, s, xs)
                for f in nonid:
                    r.check(P.op(O.act_mor(n, f, s), xs) == P.op(f, sx), "equivariance", f, s, xs)
        for gs in P.mor_tuples(n):
            if all(g in P._idset for g in gs):
                continue
            for s in gens:
                sg = act(s, gs)
                for c in On.objects:
                    r.check(P.car(O.act(n, c, s), gs) == P.car(c, sg), "equivariance", c, s, gs)


def _check_unit_object(P, r):
    A, O = P.A, P.operad
    base = P.base
    r.check(P.obj(O.point, ()) == base, "unit object", O.point)
    idb = A.ident[base]
    for n in range(1, P.N + 1):
        On = O.levels[n]
        nonid = [f for f in On.morphisms if On.ident[On.src[f]] != f]
        for rr in range(1, n + 1):
            for xs in P.obj_tuples(n - 1):
                ins = insert_base(xs, rr, base)
                for c in On.objects:
                    r.check(P.obj(c, ins) == P.obj(O.degeneracy(n, rr, c), xs),
                            "unit object", n, rr, c, xs)
                for f in nonid:
                    r.check(P.op(f, ins) == P.op(O.degeneracy_mor(n, rr, f), xs),
                            "unit object", n, rr, f, xs)
            for gs in P.mor_tuples(n - 1):
                if all(g in P._idset for g in gs):
                    continue
                ins = insert_base(gs, rr, idb)
                for c in On.objects:
                    r.check(P.car(c, ins) == P.car(O.degeneracy(n, rr, c), gs),
                            "unit object", n, rr, c, gs)
            # φ(n; 1, …, 0, …, 1) is the identity at the degenerate tuples
            for c in On.objects:
                for xs in P.obj_tuples(n - 1):
                    blocks = [(O.unit, (x,)) for x in xs]
                    blocks.insert(rr - 1, (O.point, ()))
                    blocks = tuple(blocks)
                    v = P.phi_at(c, blocks)
                    r.check(P.is_id(v), "unit object: φ", n, rr, c, blocks)


def _check_operadic_identity(P, r):
    A, O = P.A, P.operad
    if P.N < 1:
        return
    u = O.unit
    for x in A.objects:
        if P.fits((x,)):
            r.check(P.obj(u, (x,)) == x, "operadic identity", x)
    for g in A.morphisms:
        if P.fits((A.src[g],)) and P.fits((A.tgt[g],)):
            r.check(P.car(u, (g,)) == g, "operadic identity", g)


def _check_phi_components(P, r):
    """Boundaries of every representative component and equivariance of listed ones."""
    A, O = P.A, P.operad
    for key in phi_rep_keys(P):
        c, blocks = key
        v = P.phi.get(key)
        if v is None:
            r.check(P.phi_src(c, blocks) == P.phi_tgt(c, blocks), "φ boundary", key)
    for key, v in P.phi.items():
        c, blocks = key
        rk = P.rep_key(c, blocks)
        if rk != key:
            rv = P.phi.get(rk)
            if rv is None:
                rv = A.ident.get(P.phi_src(*rk))
            r.check(v == rv, "φ-equivariance", key, rk)


def _check_phi_identity(P, r):
    O = P.operad
    u = O.unit
    for n in range(P.N + 1):
        On = O.levels[n]
        for xs in P.obj_tuples(n):
            for d in On.objects:
                if P.N >= 1:
                    v = P.phi_at(u, ((d, xs),))
                    r.check(P.is_id(v), "φ-identity", "φ(1;n)", d, xs)
                v = P.phi_at(d, tuple((u, (x,)) for x in xs))
                r.check(P.is_id(v), "φ-identity", "φ(n;1,…,1)", d, xs)


def _check_phi_naturality(P, r):
    A, O = P.A, P.operad
    comp = A.comp
    for key in phi_rep_keys(P):
        c, blocks = key
        n = len(blocks)
        ms = [len(x) for _, x in blocks]
        ds = [d for d, _ in blocks]
        flat = tuple(v for _, x in blocks for v in x)
        ys = tuple(P.obj(d, x) for d, x in blocks)
        g0 = P.gamma_of(c, blocks)
        here = P.phi_at(c, blocks)
        # operation slot
        On = O.levels[n]
        for f in _out_generators(On, c):
            there = P.phi_at(On.tgt[f], blocks)
            gf = O.gamma_mor(f, [O.levels[m].ident[d] for d, m in zip(ds, ms)], n, ms)
            lhs = comp[(there, P.op(f, ys))]
            rhs = comp[(P.op(gf, flat), here)]
            r.check(lhs == rhs, "φ naturality", key, f)
        # inner operation slots
        for i, (d, x) in enumerate(blocks):
            Om = O.levels[ms[i]]
            for g in _out_generators(Om, d):
                nb = blocks[:i] + ((Om.tgt[g], x),) + blocks[i + 1:]
                there = P.phi_at(c, nb)
                src_m = P.car(c, tuple(P.op(g, x) if j == i else A.ident[ys[j]] for j in range(n)))
                gmors = [O.levels[m].ident[dd] for dd, m in zip(ds, ms)]
                gmors[i] = g
                gf = O.gamma_mor(On.ident[c], gmors, n, ms)
                lhs = comp[(there, src_m)]
                rhs = comp[(P.op(gf, flat), here)]
                r.check(lhs == rhs, "φ naturality", key, i, g)
        # carrier slots
        pos = 0
        for i, (d, x) in enumerate(blocks):
            for k, v in enumerate(x):
                for h in A.out_of(v):
                    if h in P._idset:
                        continue
                    x2 = x[:k] + (A.tgt[h],) + x[k + 1:]
                    nb = blocks[:i] + ((d, x2),) + blocks[i + 1:]
                    flat2 = flat[:pos + k] + (A.tgt[h],) + flat[pos + k + 1:]
                    if not P.fits(flat2):
                        continue
                    there = P.phi_at(c, nb)
                    inner = P.car(d, tuple(h if j == k else A.ident[xx] for j, xx in enumerate(x)))
                    src_m = P.car(c, tuple(inner if j == i else A.ident[ys[j]] for j in range(n)))
                    tgt_m = P.car(g0, tuple(h if j == pos + k else A.ident[xx] for j, xx in enumerate(flat)))
                    r.check(comp[(there, src_m)] == comp[(tgt_m, here)], "φ naturality", key, i, k, h)
            pos += len(x)


def composition_instances(P):
    """Every nesting (c; (d_r; (e_rs; x_rs))) at orbit representatives, within truncation."""
    O, N = P.operad, P.N
    for n in range(N + 1):
        for ms in compositions(N, n):
            m = sum(ms)
            for ps in compositions(N, m):
                groups, pos = [], 0
                for mr in ms:
                    groups.append(ps[pos:pos + mr])
                    pos += mr
                for c in orbit_reps(O, n):
                    for ds in product(*(orbit_reps(O, k) for k in ms)):
                        for es in product(*(orbit_reps(O, k) for k in ps)):
                            for xs in P.block_tuples(ps):
                                yield c, ds, groups, es, xs


def _check_composition(P, r):
    A, O = P.A, P.operad
    comp = A.comp
    for c, ds, groups, es, xs in composition_instances(P):
        inner = tuple(zip(es, xs))
        zs = tuple(P.obj(e, x) for e, x in inner)
        outer, pos = [], 0
        per_r = []
        for d, grp in zip(ds, groups):
            k = len(grp)
            outer.append((d, zs[pos:pos + k]))
            per_r.append((d, inner[pos:pos + k]))
            pos += k
        outer = tuple(outer)
        g1 = P.gamma_of(c, outer)
        a = P.phi_at(c, outer)
        b = P.phi_at(g1, inner)
        lhs = comp.get((b, a))
        phis = tuple(P.phi_at(d, blk) for d, blk in per_r)
        mid = P.car(c, phis)
        right_blocks = tuple((P.gamma_of(d, blk), tuple(v for _, x in blk for v in x)) for d, blk in per_r)
        last = P.phi_at(c, right_blocks)
        rhs = comp.get((last, mid))
        r.check(lhs is not None and lhs == rhs, "operadic composition", c, ds, es, xs)


_STAGES = (
    ("functoriality", _check_functoriality),
    ("equivariance", _check_equivariance),
    ("unit object", _check_unit_object),
    ("operadic identity", _check_operadic_identity),
    ("φ-equivariance", _check_phi_components),
    ("φ-identity", _check_phi_identity),
    ("φ naturality", _check_phi_naturality),
    ("operadic composition", _check_composition),
)


# ------------------------------------------------------------ pseudomorphisms

class Pseudomorphism:
    """(f, ζ) with ζ_n(c; xs): ξ_n(c; f xs) → f θ_n(c; xs), listed at orbit representatives."""

    def __init__(self, source, target, functor, zeta, name=""):
        if source.operad != target.operad:
            raise BoundaryMismatchError("pseudomorphism between algebras over different operads")
        if functor.dom != source.A or functor.cod != target.A:
            raise BoundaryMismatchError("pseudomorphism functor does not match the carriers")
        self.source = source
        self.target = target
        self.f = functor
        self.zeta = dict(zeta)
        self.name = name
        self.N = min(source.N, target.N)

    def __repr__(self):
        return f"<Pseudomorphism {self.name or '?'}>"

    def in_range(self, xs):
        return (len(xs) <= self.N and self.source.fits(xs)
                and self.target.fits(tuple(self.f.obj(x) for x in xs)))

    def zeta_src(self, c, xs):
        return self.target.obj(c, tuple(self.f.obj(x) for x in xs))

    def zeta_tgt(self, c, xs):
        return self.f.obj(self.source.obj(c, xs))

    def zeta_at(self, c, xs):
        v = self.zeta.get((c, xs))
        if v is not None:
            return v
        v = self.zeta.get(rep_key(self.source.operad, c, xs))
        if v is not None:
            return v
        s = self.zeta_src(c, xs)
        if s != self.zeta_tgt(c, xs):
            raise IncompleteTableError(f"ζ has no component at {(c, xs)!r}")
        return self.target.A.ident[s]

    def keys(self, reps=True):
        O = self.source.operad
        for n in range(self.N + 1):
            cs = orbit_reps(O, n) if reps else O.levels[n].objects
            for xs in self.source.obj_tuples(n):
                if not self.in_range(xs):
                    continue
                for c in cs:
                    yield c, xs

    def is_strict(self):
        B = self.target
        return all(B.is_id(self.zeta_at(c, xs)) for c, xs in self.keys())


def build_pseudomorphism(source, target, functor, zeta_fn, name=""):
    pm = Pseudomorphism(source, target, functor, {}, name=name)
    for c, xs in pm.keys():
        v = zeta_fn(c, xs)
        if not target.is_id(v):
            pm.zeta[(c, xs)] = v
    return pm


def identity_pseudomorphism(P):
    return Pseudomorphism(P, P, identity_functor(P.A), {}, name="id")


def compose_pseudomorphisms(g, f):
    """(g, κ)∘(f, ζ) = (gf, g(ζ) ∘ κ f)."""
    if f.target is not g.source and f.target.A != g.source.A:
        raise BoundaryMismatchError("pseudomorphisms are not composable")
    gf = compose_functors(g.f, f.f)
    C = g.target.A

    def zeta(c, xs):
        fx = tuple(f.f.obj(x) for x in xs)
        return C.comp[(g.f.mor(f.zeta_at(c, xs)), g.zeta_at(c, fx))]
    pm = Pseudomorphism(f.source, g.target, gf, {}, name=f"{g.name}∘{f.name}")
    pm.N = min(f.N, g.N)
    for c, xs in pm.keys():
        if not f.target.fits(tuple(f.f.obj(x) for x in xs)):
            continue
        v = zeta(c, xs)
        if not g.target.is_id(v):
            pm.zeta[(c, xs)] = v
    return pm


def validate_pseudomorphism(pm, max_failures=200):
    X, Y, f = pm.source, pm.target, pm.f
    A, B, O = X.A, Y.A, X.operad
    r = Report(f"pseudomorphism {pm.name}", max_failures=max_failures)
    r.absorb(validate_functor(f))
    if not r.ok:
        return r
    r.check(f.obj(X.base) == Y.base, "preserves base", X.base)
    comp = B.comp
    # ζ_0 and ζ_1 at the unit
    r.check(Y.is_id(pm.zeta_at(O.point, ())), "unit: ζ_0", O.point)
    if pm.N >= 1:
        for x in A.objects:
            if pm.in_range((x,)):
                r.check(Y.is_id(pm.zeta_at(O.unit, (x,))), "unit: ζ_1", x)
    # boundaries at representatives; listed entries agree with their representatives
    for c, xs in pm.keys():
        v = pm.zeta_at(c, xs)
        ok = (v in B.morphism_set and B.src[v] == pm.zeta_src(c, xs)
              and B.tgt[v] == pm.zeta_tgt(c, xs) and B.is_iso(v))
        r.check(ok, "ζ boundary", c, xs)
    for (c, xs), v in pm.zeta.items():
        rk = rep_key(O, c, xs)
        if rk != (c, xs):
            r.check(v == pm.zeta_at(*rk), "Σ-invariance", c, xs)
    if not r.ok:
        return r
    # naturality on generators
    for c, xs in pm.keys():
        n = len(xs)
        On = O.levels[n]
        here = pm.zeta_at(c, xs)
        fx = tuple(f.obj(x) for x in xs)
        for g in _out_generators(On, c):
            there = pm.zeta_at(On.tgt[g], xs)
            lhs = comp[(f.mor(X.op(g, xs)), here)]
            rhs = comp[(there, Y.op(g, fx))]
            r.check(lhs == rhs, "ζ naturality", c, g, xs)
        for i, x in enumerate(xs):
            for h in A.out_of(x):
                if h in X._idset:
                    continue
                gs = tuple(h if j == i else A.ident[v] for j, v in enumerate(xs))
                x2 = tuple(A.tgt[g] for g in gs)
                if not pm.in_range(x2):
                    continue
                there = pm.zeta_at(c, x2)
                lhs = comp[(f.mor(X.car(c, gs)), here)]
                rhs = comp[(there, Y.car(c, tuple(f.mor(g) for g in gs)))]
                r.check(lhs == rhs, "ζ naturality", c, gs)
    # the pasting equality
    for n in range(pm.N + 1):
        for ms in compositions(pm.N, n):
            for c in orbit_reps(O, n):
                for ds in product(*(orbit_reps(O, m) for m in ms)):
                    for xs in X.block_tuples(ms):
                        flat = tuple(v for x in xs for v in x)
                        if not pm.in_range(flat):
                            continue
                        blocks = tuple(zip(ds, xs))
                        fblocks = tuple((d, tuple(f.obj(v) for v in x)) for d, x in blocks)
                        ys = tuple(X.obj(d, x) for d, x in blocks)
                        inner = Y.car(c, tuple(pm.zeta_at(d, x) for d, x in blocks))
                        lhs = B.compose(f.mor(X.phi_at(c, blocks)), pm.zeta_at(c, ys), inner)
                        rhs = comp[(pm.zeta_at(X.gamma_of(c, blocks), flat), Y.phi_at(c, fblocks))]
                        r.check(lhs == rhs, "pasting", c, blocks)
    return r


class AlgebraTwoCell:
    def __init__(self, source, target, lam, name=""):
        if source.source is not target.source and source.source.A != target.source.A:
            raise BoundaryMismatchError("algebra 2-cell between pseudomorphisms with different sources")
        if source.target is not target.target and source.target.A != target.target.A:
            raise BoundaryMismatchError("algebra 2-cell between pseudomorphisms with different targets")
        if not isinstance(lam, NatTrans):
            lam = NatTrans(source.f, target.f, dict(lam))
        self.source = source
        self.target = target
        self.lam = lam
        self.name = name


def validate_algebra_2cell(t, max_failures=200):
    pf, pg = t.source, t.target
    X, Y = pf.source, pf.target
    B = Y.A
    lam = t.lam
    r = Report(f"algebra 2-cell {t.name}", max_failures=max_failures)
    if lam.src_f != pf.f or lam.tgt_f != pg.f:
        raise BoundaryMismatchError("λ does not go between the underlying functors")
    r.absorb(validate_nat_trans(lam))
    if not r.ok:
        return r
    N = min(pf.N, pg.N)
    for n in range(N + 1):
        for xs in X.obj_tuples(n):
            if not (pf.in_range(xs) and pg.in_range(xs)):
                continue
            lx = tuple(lam[x] for x in xs)
            for c in X.operad.levels[n].objects:
                lhs = B.comp[(pg.zeta_at(c, xs), Y.car(c, lx))]
                rhs = B.comp[(lam[X.obj(c, xs)], pf.zeta_at(c, xs))]
                r.check(lhs == rhs, "2-cell pasting", n, c, xs)
    return r


def conjugate_pseudomorphism(pm, lam):
    """(g, κ) with κ = λθ ∘ ζ ∘ ξ(id; λ)⁻¹, so that λ: (f, ζ) ⇒ (g, κ) is an algebra 2-cell."""
    if lam.src_f != pm.f:
        raise BoundaryMismatchError("λ does not start at the pseudomorphism's functor")
    X, Y = pm.source, pm.target
    B = Y.A

    def kappa(c, xs):
        lx = tuple(lam[x] for x in xs)
        return B.compose(lam[X.obj(c, xs)], pm.zeta_at(c, xs), B.inverse(Y.car(c, lx)))
    g = build_pseudomorphism(X, Y, lam.tgt_f, kappa, name=f"{pm.name}^λ")
    return g, AlgebraTwoCell(pm, g, lam, name="λ")


# ----------------------------------------------------------- transport, twist

def _inverse_functor(h):
    X, Y = h.dom, h.cod
    om = {}
    for x in X.objects:
        om[h.obj(x)] = x
    mm = {}
    for m in X.morphisms:
        mm[h.mor(m)] = m
    if len(om) != len(Y.objects) or len(mm) != len(Y.morphisms):
        raise HypothesisError("transport needs an isomorphism of categories")
    return Functor(Y, X, om, mm)


def transport_pseudoalgebra(P, h, carrier=None, twist=None, name=""):
    """Move P along an isomorphism h: B → A (fixing the base) and optionally twist by u.

    Returns (P', (h, ζ)) with (h, ζ): P' → P a pseudomorphism.  The twist u is
    a dict from canonical forms of O(B) to automorphisms of θ'(form); it must
    be trivial on forms of length ≤ 1.  Without a twist a strict P stays strict.
    """
    A = P.A
    if h.cod != A:
        raise BoundaryMismatchError("h must land in the carrier")
    if not validate_functor(h).ok:
        raise HypothesisError("h is not a functor")
    hinv = _inverse_functor(h)
    B = h.dom
    if carrier is None:
        carrier = BasedCategory(B, hinv.obj(P.base))
    if h.obj(carrier.base) != P.base:
        raise HypothesisError("h must send the base object to the base object")
    O = P.operad
    canon = Canonicalizer(O, carrier)
    u = dict(twist or {})
    for form, g in u.items():
        if len(form[1]) <= 1 and not g == B.ident[B.src[g]]:
            raise HypothesisError(f"twist must be trivial on forms of length ≤ 1, not at {form!r}")

    def hx(xs):
        return tuple(h.obj(x) for x in xs)

    def base_obj(c, xs):
        return hinv.obj(P.obj(c, hx(xs)))

    def uat(c, xs):
        g = u.get(canon.canonical(c, xs))
        if g is None:
            return B.ident[base_obj(c, xs)]
        o = base_obj(c, xs)
        if B.src[g] != o or B.tgt[g] != o or not B.is_iso(g):
            raise HypothesisError(f"twist at {(c, xs)!r} is not an automorphism of {o!r}")
        return g

    def op_fn(f, xs):
        On = O.levels[len(xs)]
        core = hinv.mor(P.op(f, hx(xs)))
        return B.compose(uat(On.tgt[f], xs), core, B.inverse(uat(On.src[f], xs)))

    def car_fn(c, gs):
        core = hinv.mor(P.car(c, tuple(h.mor(g) for g in gs)))
        return B.compose(uat(c, tuple(B.tgt[g] for g in gs)), core,
                         B.inverse(uat(c, tuple(B.src[g] for g in gs))))

    def plain_car(c, gs):
        return hinv.mor(P.car(c, tuple(h.mor(g) for g in gs)))

    def phi_fn(c, blocks):
        core = hinv.mor(P.phi_at(c, tuple((d, hx(x)) for d, x in blocks)))
        ys = tuple(base_obj(d, x) for d, x in blocks)
        inner = plain_car(c, tuple(B.inverse(uat(d, x)) for d, x in blocks))
        g = P.gamma_of(c, blocks)
        flat = tuple(v for _, x in blocks for v in x)
        return B.compose(uat(g, flat), core, inner, B.inverse(uat(c, ys)))

    Q = build_pseudoalgebra(O, carrier, base_obj, op_fn, car_fn, phi_fn, N=P.N,
                            name=name or f"{P.name}'")
    pm = build_pseudomorphism(Q, P, h, lambda c, xs: h.mor(uat(c, xs)), name="transport")
    return Q, pm


def product_pseudoalgebra(P, Q, name=""):
    if P.operad != Q.operad:
        raise BoundaryMismatchError("product of algebras over different operads")
    if P.bound is not None or Q.bound is not None:
        raise HypothesisError("products are only formed for untruncated carriers")
    C = product_category(P.A, Q.A)
    carrier = BasedCategory(C, (P.base, Q.base))
    N = min(P.N, Q.N)

    def split(xs):
        return tuple(x[0] for x in xs), tuple(x[1] for x in xs)

    def obj_fn(c, xs):
        a, b = split(xs)
        return (P.obj(c, a), Q.obj(c, b))

    def op_fn(f, xs):
        a, b = split(xs)
        return (P.op(f, a), Q.op(f, b))

    def car_fn(c, gs):
        a, b = split(gs)
        return (P.car(c, a), Q.car(c, b))

    def phi_fn(c, blocks):
        ba = tuple((d, split(x)[0]) for d, x in blocks)
        bb = tuple((d, split(x)[1]) for d, x in blocks)
        return (P.phi_at(c, ba), Q.phi_at(c, bb))

    return build_pseudoalgebra(P.operad, carrier, obj_fn, op_fn, car_fn, phi_fn, N=N,
                               name=name or f"{P.name}×{Q.name}")


def assemble_on_free(P, TA):
    """θ as a single functor O(A) → A on the window TA, checking every representative agrees."""
    from .errors import WellDefinednessError
    O, A = P.operad, P.A
    canon = TA.canon
    for n in range(min(TA.L, P.N) + 1):
        On = O.levels[n]
        for xs in P.obj_tuples(n):
            for c in On.objects:
                t = canon.canonical(c, xs)
                if TA.total_weight(t) > TA.L:
                    continue
                if P.obj(c, xs) != P.obj(*t):
                    raise WellDefinednessError(f"θ differs on {(c, xs)!r} and its canonical form {t!r}")
        for gs in P.mor_tuples(n):
            for f in On.morphisms:
                m = canon.canonical_mor(f, gs)
                if m not in TA.category.morphism_set:
                    continue
                if P.mor(f, gs) != P.mor(*m):
                    raise WellDefinednessError(f"θ differs on {(f, gs)!r} and its canonical form {m!r}")
    obj = {t: P.obj(*t) for t in TA.category.objects}
    mor = {m: P.mor(*m) for m in TA.category.morphisms}
    return Functor(TA.category, A, obj, mor, "θ")
