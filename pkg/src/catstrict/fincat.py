"""Finite categories, functors and natural transformations as explicit tables."""
from functools import cached_property
from itertools import product

from .errors import (BoundaryMismatchError, DanglingIdError, NotInvertibleError,
                     ResourceGuardError)
from .ids import sort_key, sorted_ids
from .perms import all_perms, identity_perm, perm_compose, perm_inverse
from .report import Report


class FinCategory:
    """A finite category given by its source, target, identity and composition tables.

    ``comp`` maps a pair ``(g, f)`` to ``g∘f`` and should be defined exactly on
    composable pairs.  Nothing is validated on construction; use
    :func:`validate_category`.
    """

    def __init__(self, objects, morphisms, src, tgt, ident, comp, name=""):
        self.objects = tuple(sorted_ids(set(objects)))
        self.morphisms = tuple(sorted_ids(set(morphisms)))
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.ident = dict(ident)
        self.comp = dict(comp)
        self.name = name
        self.meta = {}

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<FinCategory{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    @cached_property
    def comp_items(self):
        """The composition table as ((g, f), g∘f) pairs in id order."""
        return tuple(sorted(self.comp.items(), key=sort_key))

    @cached_property
    def _key(self):
        return (self.objects, self.morphisms,
                tuple((m, self.src[m], self.tgt[m]) for m in self.morphisms),
                tuple((x, self.ident[x]) for x in self.objects),
                self.comp_items)

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, FinCategory) and self._key == other._key

    def __hash__(self):
        return hash((self.objects, self.morphisms))

    @cached_property
    def object_set(self):
        return frozenset(self.objects)

    @cached_property
    def morphism_set(self):
        return frozenset(self.morphisms)

    @cached_property
    def _homs(self):
        homs = {}
        for m in self.morphisms:
            homs.setdefault((self.src[m], self.tgt[m]), []).append(m)
        return {k: tuple(v) for k, v in homs.items()}

    def hom(self, x, y):
        return self._homs.get((x, y), ())

    @cached_property
    def _out(self):
        out = {x: [] for x in self.objects}
        for m in self.morphisms:
            out[self.src[m]].append(m)
        return {k: tuple(v) for k, v in out.items()}

    def out_of(self, x):
        return self._out.get(x, ())

    @cached_property
    def _in(self):
        inn = {x: [] for x in self.objects}
        for m in self.morphisms:
            inn[self.tgt[m]].append(m)
        return {k: tuple(v) for k, v in inn.items()}

    def into(self, x):
        return self._in.get(x, ())

    def compose(self, *ms):
        """compose(h, g, f) = h∘g∘f."""
        out = ms[-1]
        for g in reversed(ms[:-1]):
            try:
                out = self.comp[(g, out)]
            except KeyError:
                raise BoundaryMismatchError(f"{g!r}∘{out!r} is not defined") from None
        return out

    def is_identity(self, m):
        return self.ident.get(self.src[m]) == m

    @cached_property
    def _inverses(self):
        inv = {}
        for m in self.morphisms:
            x, y = self.src[m], self.tgt[m]
            for n in self.hom(y, x):
                if self.comp.get((n, m)) == self.ident[x] and self.comp.get((m, n)) == self.ident[y]:
                    inv[m] = n
                    break
        return inv

    def inverse(self, m):
        try:
            return self._inverses[m]
        except KeyError:
            raise NotInvertibleError(self.src.get(m), m) from None

    def is_iso(self, m):
        return m in self._inverses

    @cached_property
    def non_identity_morphisms(self):
        ids = set(self.ident.values())
        return tuple(m for m in self.morphisms if m not in ids)


class Functor:
    def __init__(self, dom, cod, obj_map, mor_map, name=""):
        self.dom = dom
        self.cod = cod
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)
        self.name = name

    def __repr__(self):
        return f"<Functor {self.name or ''} {self.dom!r} -> {self.cod!r}>"

    def obj(self, x):
        return self.obj_map[x]

    def mor(self, m):
        return self.mor_map[m]

    def key(self):
        """Positional tables relative to the sorted ids of the domain."""
        return (tuple(self.obj_map[x] for x in self.dom.objects),
                tuple(self.mor_map[m] for m in self.dom.morphisms))

    def __eq__(self, other):
        return (isinstance(other, Functor) and self.dom == other.dom
                and self.cod == other.cod and self.obj_map == other.obj_map
                and self.mor_map == other.mor_map)

    def __hash__(self):
        return hash(self.key())


class NatTrans:
    """A transformation src_f ⇒ tgt_f with one component per object of the domain."""

    def __init__(self, src_f, tgt_f, component, name=""):
        self.src_f = src_f
        self.tgt_f = tgt_f
        self.component = dict(component)
        self.name = name

    @property
    def dom(self):
        return self.src_f.dom

    @property
    def cod(self):
        return self.src_f.cod

    def __getitem__(self, x):
        return self.component[x]

    def __repr__(self):
        return f"<NatTrans {self.name or ''} on {self.dom!r}>"

    def __eq__(self, other):
        return (isinstance(other, NatTrans) and self.src_f == other.src_f
                and self.tgt_f == other.tgt_f and self.component == other.component)

    def __hash__(self):
        return hash(tuple(self.component[x] for x in self.dom.objects))


# ---------------------------------------------------------------- validators

def _check_ids(C):
    obs, ms = C.object_set, C.morphism_set
    for m in C.morphisms:
        for table, label in ((C.src, "src"), (C.tgt, "tgt")):
            if m not in table:
                raise DanglingIdError(f"{label} table has no entry for morphism", m)
            if table[m] not in obs:
                raise DanglingIdError(f"{label}({m!r})", table[m])
    for x in C.objects:
        if x not in C.ident:
            raise DanglingIdError("ident table has no entry for object", x)
        if C.ident[x] not in ms:
            raise DanglingIdError(f"ident({x!r})", C.ident[x])
    for extra in set(C.src) - ms:
        raise DanglingIdError("src table", extra)
    for extra in set(C.tgt) - ms:
        raise DanglingIdError("tgt table", extra)
    for extra in set(C.ident) - obs:
        raise DanglingIdError("ident table", extra)
    for (g, f), h in C.comp.items():
        for v in (g, f, h):
            if v not in ms:
                raise DanglingIdError("comp table", v)


def validate_category(C):
    _check_ids(C)
    r = Report(f"category {C.name}".rstrip())
    src, tgt, ident, comp = C.src, C.tgt, C.ident, C.comp
    for x in C.objects:
        i = ident[x]
        r.check(src[i] == x and tgt[i] == x, "identity-boundary", x, i)
    for (g, f), _ in C.comp_items:
        r.check(src[g] == tgt[f], "comp-defined-only-on-composable", g, f)
    for f in C.morphisms:
        for g in C.out_of(tgt[f]):
            if (g, f) not in comp:
                r.fail("comp-missing", g, f)
                continue
            h = comp[(g, f)]
            r.check(src[h] == src[f] and tgt[h] == tgt[g], "comp-boundary", g, f)
        r.check(comp.get((ident[tgt[f]], f)) == f, "left-unit", f)
        r.check(comp.get((f, ident[src[f]])) == f, "right-unit", f)
    for f in C.morphisms:
        for g in C.out_of(tgt[f]):
            gf = comp.get((g, f))
            if gf is None:
                continue
            for h in C.out_of(tgt[g]):
                hg = comp.get((h, g))
                if hg is None:
                    continue
                a, b = comp.get((h, gf)), comp.get((hg, f))
                r.check(a is not None and a == b, "associativity", h, g, f)
    return r


def validate_functor(F):
    A, B = F.dom, F.cod
    for x in A.objects:
        if x not in F.obj_map:
            raise DanglingIdError("functor object map has no entry for", x)
        if F.obj_map[x] not in B.object_set:
            raise DanglingIdError(f"functor object map at {x!r}", F.obj_map[x])
    for m in A.morphisms:
        if m not in F.mor_map:
            raise DanglingIdError("functor morphism map has no entry for", m)
        if F.mor_map[m] not in B.morphism_set:
            raise DanglingIdError(f"functor morphism map at {m!r}", F.mor_map[m])
    r = Report(f"functor {F.name}".rstrip())
    om, mm = F.obj_map, F.mor_map
    for m in A.morphisms:
        r.check(B.src[mm[m]] == om[A.src[m]], "preserves-src", m)
        r.check(B.tgt[mm[m]] == om[A.tgt[m]], "preserves-tgt", m)
    for x in A.objects:
        r.check(mm[A.ident[x]] == B.ident[om[x]], "preserves-identity", x)
    for (g, f), h in A.comp_items:
        r.check(B.comp.get((mm[g], mm[f])) == mm[h], "preserves-composition", g, f)
    return r


def validate_nat_trans(a):
    F, G = a.src_f, a.tgt_f
    if F.dom != G.dom or F.cod != G.cod:
        raise BoundaryMismatchError("transformation between functors with different boundaries")
    A, B = F.dom, F.cod
    for x in A.objects:
        if x not in a.component:
            raise DanglingIdError("transformation has no component at", x)
        if a.component[x] not in B.morphism_set:
            raise DanglingIdError(f"component at {x!r}", a.component[x])
    r = Report(f"transformation {a.name}".rstrip())
    c = a.component
    for x in A.objects:
        r.check(B.src[c[x]] == F.obj(x) and B.tgt[c[x]] == G.obj(x), "component-boundary", x)
    for f in A.morphisms:
        x, y = A.src[f], A.tgt[f]
        lhs = B.comp.get((G.mor(f), c[x]))
        rhs = B.comp.get((c[y], F.mor(f)))
        r.check(lhs is not None and lhs == rhs, "naturality", f)
    return r


# --------------------------------------------------------------- 2-cell calculus

def identity_functor(C):
    return Functor(C, C, {x: x for x in C.objects}, {m: m for m in C.morphisms}, "id")


def compose_functors(G, F):
    """G∘F."""
    if F.cod != G.dom:
        raise BoundaryMismatchError("cod F differs from dom G")
    return Functor(F.dom, G.cod,
                   {x: G.obj_map[F.obj_map[x]] for x in F.dom.objects},
                   {m: G.mor_map[F.mor_map[m]] for m in F.dom.morphisms})


def identity_nat(F):
    return NatTrans(F, F, {x: F.cod.ident[F.obj(x)] for x in F.dom.objects}, "id")


def vertical_compose(b, a):
    """b∗a: first a, then b."""
    if a.tgt_f != b.src_f:
        raise BoundaryMismatchError("target of the first transformation is not the source of the second")
    B = a.cod
    return NatTrans(a.src_f, b.tgt_f,
                    {x: B.compose(b[x], a[x]) for x in a.dom.objects})


def horizontal_compose(b, a):
    """b∘a for a: f ⇒ g (A→B) and b: f' ⇒ g' (B→C); component g'(a_x)∘b_{f x}."""
    if a.cod != b.dom:
        raise BoundaryMismatchError("codomain of the inner transformation is not the domain of the outer")
    f, g = a.src_f, a.tgt_f
    f2, g2 = b.src_f, b.tgt_f
    C = b.cod
    comps = {x: C.compose(g2.mor(a[x]), b[f.obj(x)]) for x in a.dom.objects}
    return NatTrans(compose_functors(f2, f), compose_functors(g2, g), comps)


def horizontal_compose_other(b, a):
    """The other leg of the same square: b_{g x}∘f'(a_x)."""
    if a.cod != b.dom:
        raise BoundaryMismatchError("codomain of the inner transformation is not the domain of the outer")
    f, g = a.src_f, a.tgt_f
    f2, g2 = b.src_f, b.tgt_f
    C = b.cod
    comps = {x: C.compose(b[g.obj(x)], f2.mor(a[x])) for x in a.dom.objects}
    return NatTrans(compose_functors(f2, f), compose_functors(g2, g), comps)


def whisker_left(G, a):
    """G∘a, computed by applying G to each component."""
    if a.cod != G.dom:
        raise BoundaryMismatchError("whiskering functor does not start where the transformation ends")
    return NatTrans(compose_functors(G, a.src_f), compose_functors(G, a.tgt_f),
                    {x: G.mor(a[x]) for x in a.dom.objects})


def whisker_right(b, F):
    """b∘F, components read off at F(x)."""
    if F.cod != b.dom:
        raise BoundaryMismatchError("whiskering functor does not land in the transformation's domain")
    return NatTrans(compose_functors(b.src_f, F), compose_functors(b.tgt_f, F),
                    {x: b[F.obj(x)] for x in F.dom.objects})


def invert_nat_trans(a):
    B = a.cod
    comps = {}
    for x in a.dom.objects:
        if not B.is_iso(a[x]):
            raise NotInvertibleError(x, a[x])
        comps[x] = B.inverse(a[x])
    return NatTrans(a.tgt_f, a.src_f, comps)


def is_invertible(a):
    return all(a.cod.is_iso(a[x]) for x in a.dom.objects)


# --------------------------------------------------------------- constructions

def terminal_category():
    return chaotic_category(["pt"], name="1")


def discrete_category(X, name=""):
    X = list(X)
    return FinCategory(X, X, {x: x for x in X}, {x: x for x in X}, {x: x for x in X},
                       {(x, x): x for x in X}, name)


def chaotic_category(X, name=""):
    """Objects X, one morphism (y, x): x → y for every ordered pair."""
    X = list(X)
    mors = [(y, x) for y in X for x in X]
    comp = {((z, y), (y, x)): (z, x) for z in X for y in X for x in X}
    return FinCategory(X, mors, {m: m[1] for m in mors}, {m: m[0] for m in mors},
                       {x: (x, x) for x in X}, comp, name)


def is_chaotic(C):
    pairs = {(C.tgt[m], C.src[m]) for m in C.morphisms}
    return len(pairs) == len(C.morphisms) == len(C.objects) ** 2


def product_category(A, B, name=""):
    obs = [(x, y) for x in A.objects for y in B.objects]
    ms = [(f, g) for f in A.morphisms for g in B.morphisms]
    comp = {}
    for (f2, f1), f in A.comp.items():
        for (g2, g1), g in B.comp.items():
            comp[((f2, g2), (f1, g1))] = (f, g)
    return FinCategory(obs, ms,
                       {(f, g): (A.src[f], B.src[g]) for f, g in ms},
                       {(f, g): (A.tgt[f], B.tgt[g]) for f, g in ms},
                       {(x, y): (A.ident[x], B.ident[y]) for x, y in obs}, comp, name)


def power_category(C, n, name=""):
    """C^n with objects and morphisms as n-tuples."""
    obs = list(product(C.objects, repeat=n))
    ms = list(product(C.morphisms, repeat=n))
    comp = {}
    pairs = list(C.comp.items())
    for combo in product(pairs, repeat=n):
        g = tuple(p[0][0] for p in combo)
        f = tuple(p[0][1] for p in combo)
        comp[(g, f)] = tuple(p[1] for p in combo)
    return FinCategory(obs, ms,
                       {m: tuple(C.src[x] for x in m) for m in ms},
                       {m: tuple(C.tgt[x] for x in m) for m in ms},
                       {x: tuple(C.ident[y] for y in x) for x in obs}, comp, name)


def product_functor(F, G):
    dom = product_category(F.dom, G.dom)
    cod = product_category(F.cod, G.cod)
    return Functor(dom, cod, {(x, y): (F.obj(x), G.obj(y)) for x, y in dom.objects},
                   {(f, g): (F.mor(f), G.mor(g)) for f, g in dom.morphisms})


def transpose_chaotic(A, EX, f):
    """The functor A → EX with object part f; a morphism m goes to (f(tgt m), f(src m))."""
    return Functor(A, EX, {x: f[x] for x in A.objects},
                   {m: (f[A.tgt[m]], f[A.src[m]]) for m in A.morphisms})


# --------------------------------------------------------------- enumeration

def _composition_constraints(A, order):
    """For each position in ``order``, the (g, f, h) triples first decidable there."""
    pos = {m: i for i, m in enumerate(order)}
    buckets = [[] for _ in order]
    for (g, f), h in A.comp.items():
        last = max(pos.get(g, -1), pos.get(f, -1), pos.get(h, -1))
        if last >= 0:
            buckets[last].append((g, f, h))
    return buckets


def enumerate_functors(A, B, obj_map=None, guard=10**6):
    """All functors A → B in a deterministic order (optionally with a fixed object map)."""
    if obj_map is None:
        if len(B.objects) ** len(A.objects) > guard:
            raise ResourceGuardError(
                f"{len(B.objects)}^{len(A.objects)} object maps exceed the guard {guard}")
        obj_maps = (dict(zip(A.objects, vals))
                    for vals in product(B.objects, repeat=len(A.objects)))
    else:
        obj_maps = [dict(obj_map)]
    idents = {A.ident[x]: x for x in A.objects}
    order = [m for m in A.morphisms if m not in idents]
    buckets = _composition_constraints(A, order)
    for om in obj_maps:
        mm = {i: B.ident[om[x]] for i, x in idents.items()}
        yield from _extend(A, B, om, mm, order, buckets, 0)


def _extend(A, B, om, mm, order, buckets, i):
    if i == len(order):
        yield Functor(A, B, om, mm)
        return
    m = order[i]
    for cand in B.hom(om[A.src[m]], om[A.tgt[m]]):
        mm[m] = cand
        if all(B.comp.get((mm[g], mm[f])) == mm[h] for g, f, h in buckets[i]):
            yield from _extend(A, B, om, mm, order, buckets, i + 1)
        del mm[m]


def enumerate_nat_trans(F, G):
    A, B = F.dom, F.cod
    obs = list(A.objects)
    pos = {x: i for i, x in enumerate(obs)}
    buckets = [[] for _ in obs]
    for f in A.morphisms:
        buckets[max(pos[A.src[f]], pos[A.tgt[f]])].append(f)
    comps = {}

    def walk(i):
        if i == len(obs):
            yield NatTrans(F, G, dict(comps))
            return
        x = obs[i]
        for cand in B.hom(F.obj(x), G.obj(x)):
            comps[x] = cand
            if all(B.comp.get((G.mor(f), comps[A.src[f]])) == B.comp.get((comps[A.tgt[f]], F.mor(f)))
                   for f in buckets[i]):
                yield from walk(i + 1)
            del comps[x]

    yield from walk(0)


def functor_category(A, B, guard=10**6):
    """All functors A → B and all transformations between them, composed vertically.

    When B is chaotic a functor is determined by its object part, so the object
    ids are the positional object tables and the category is itself chaotic.
    """
    functors = list(enumerate_functors(A, B, guard=guard))
    compact = is_chaotic(B)
    fid = (lambda F: F.key()[0]) if compact else (lambda F: F.key())
    by_id = {fid(F): F for F in functors}
    elements = dict(by_id)
    mors, src, tgt, ident = [], {}, {}, {}
    trans = {}
    for F in functors:
        for G in functors:
            for a in enumerate_nat_trans(F, G):
                aid = (fid(G), fid(F)) if compact else (fid(G), fid(F), tuple(a[x] for x in A.objects))
                mors.append(aid)
                src[aid], tgt[aid] = fid(F), fid(G)
                trans[aid] = a
    for F in functors:
        i = identity_nat(F)
        ident[fid(F)] = (fid(F), fid(F)) if compact else (fid(F), fid(F), tuple(i[x] for x in A.objects))
    comp = {}
    outgoing = {}
    for aid in mors:
        outgoing.setdefault(src[aid], []).append(aid)
    lookup = {}
    for aid, a in trans.items():
        lookup[(src[aid], tgt[aid], tuple(a[x] for x in A.objects))] = aid
    for aid in mors:
        for bid in outgoing.get(tgt[aid], []):
            c = vertical_compose(trans[bid], trans[aid])
            comp[(bid, aid)] = lookup[(src[aid], tgt[bid], tuple(c[x] for x in A.objects))]
    C = FinCategory(list(by_id), mors, src, tgt, ident, comp)
    elements.update(trans)
    C.meta["elements"] = elements
    return C


# --------------------------------------------------------------- groups and actions

class FinGroup:
    def __init__(self, elements, mult, identity, inverse=None, name=""):
        self.elements = tuple(sorted_ids(elements))
        self.mult = dict(mult)
        self.identity = identity
        if inverse is None:
            inverse = {g: h for g in self.elements for h in self.elements
                       if self.mult.get((g, h)) == identity}
        self.inverse = dict(inverse)
        self.name = name

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"<FinGroup {self.name} of order {len(self.elements)}>"

    def __eq__(self, other):
        return (isinstance(other, FinGroup) and self.elements == other.elements
                and self.mult == other.mult and self.identity == other.identity)

    def __hash__(self):
        return hash(self.elements)

    def mul(self, g, h):
        return self.mult[(g, h)]


def validate_group(G):
    els = set(G.elements)
    for (g, h), v in G.mult.items():
        for u in (g, h, v):
            if u not in els:
                raise DanglingIdError("multiplication table", u)
    if G.identity not in els:
        raise DanglingIdError("group identity", G.identity)
    r = Report(f"group {G.name}".rstrip())
    for g in G.elements:
        for h in G.elements:
            r.check((g, h) in G.mult, "closure", g, h)
    if not r.ok:
        return r
    e = G.identity
    for g in G.elements:
        r.check(G.mult[(e, g)] == g and G.mult[(g, e)] == g, "identity", g)
        inv = G.inverse.get(g)
        r.check(inv in els and G.mult[(g, inv)] == e and G.mult[(inv, g)] == e, "inverse", g)
    for g in G.elements:
        for h in G.elements:
            gh = G.mult[(g, h)]
            for k in G.elements:
                r.check(G.mult[(gh, k)] == G.mult[(g, G.mult[(h, k)])], "associativity", g, h, k)
    return r


def cyclic_group(n):
    els = list(range(n))
    return FinGroup(els, {(a, b): (a + b) % n for a in els for b in els}, 0,
                    {a: (-a) % n for a in els}, f"C{n}")


def trivial_group():
    return cyclic_group(1)


def symmetric_group(n):
    els = all_perms(n)
    return FinGroup(els, {(a, b): perm_compose(a, b) for a in els for b in els},
                    identity_perm(n), {a: perm_inverse(a) for a in els}, f"S{n}")


class GroupAction:
    """A group acting on a finite category by automorphisms.

    ``obj_act[(g, x)]`` and ``mor_act[(g, m)]`` give the action of g; ``side``
    is "left" (g·(h·x) = (gh)·x) or "right" ((x·g)·h = x·(gh)).
    """

    def __init__(self, group, target, obj_act, mor_act, side="left"):
        self.group = group
        self.target = target
        self.obj_act = dict(obj_act)
        self.mor_act = dict(mor_act)
        self.side = side

    def on_obj(self, g, x):
        return self.obj_act[(g, x)]

    def on_mor(self, g, m):
        return self.mor_act[(g, m)]

    def as_functor(self, g):
        C = self.target
        return Functor(C, C, {x: self.obj_act[(g, x)] for x in C.objects},
                       {m: self.mor_act[(g, m)] for m in C.morphisms})

    def __eq__(self, other):
        return (isinstance(other, GroupAction) and self.group == other.group
                and self.target == other.target and self.obj_act == other.obj_act
                and self.mor_act == other.mor_act and self.side == other.side)

    def __hash__(self):
        return hash((self.group, self.target))


def validate_action(act):
    G, C = act.group, act.target
    for g in G.elements:
        for x in C.objects:
            if (g, x) not in act.obj_act:
                raise DanglingIdError(f"action of {g!r} on object", x)
        for m in C.morphisms:
            if (g, m) not in act.mor_act:
                raise DanglingIdError(f"action of {g!r} on morphism", m)
    r = Report(f"{act.side} action of {G.name}".rstrip())
    for g in G.elements:
        Fg = act.as_functor(g)
        fr = validate_functor(Fg)
        r.absorb(fr, f"element {g!r} ")
        r.check(len(set(Fg.obj_map.values())) == len(C.objects)
                and len(set(Fg.mor_map.values())) == len(C.morphisms), "bijective", g)
    e = G.identity
    for x in C.objects:
        r.check(act.obj_act[(e, x)] == x, "identity-acts-trivially", x)
    for m in C.morphisms:
        r.check(act.mor_act[(e, m)] == m, "identity-acts-trivially", m)
    for g in G.elements:
        for h in G.elements:
            gh = G.mult[(g, h)]
            for table, items in ((act.obj_act, C.objects), (act.mor_act, C.morphisms)):
                for x in items:
                    if act.side == "left":
                        ok = table[(g, table[(h, x)])] == table[(gh, x)]
                    else:
                        ok = table[(h, table[(g, x)])] == table[(gh, x)]
                    r.check(ok, "compatibility", g, h, x)
    return r


def validate_equivariance(act_A, act_B, F):
    if act_A.group != act_B.group:
        raise BoundaryMismatchError("actions by different groups")
    r = Report("equivariance")
    for g in act_A.group.elements:
        for x in F.dom.objects:
            r.check(F.obj(act_A.on_obj(g, x)) == act_B.on_obj(g, F.obj(x)), "equivariant-objects", g, x)
        for m in F.dom.morphisms:
            r.check(F.mor(act_A.on_mor(g, m)) == act_B.on_mor(g, F.mor(m)), "equivariant-morphisms", g, m)
    return r


def orbits(act):
    seen, out = set(), []
    for x in act.target.objects:
        if x in seen:
            continue
        orb = sorted_ids({act.on_obj(g, x) for g in act.group.elements})
        seen.update(orb)
        out.append(tuple(orb))
    return out


def eg_category(G):
    """EG with right multiplication and left multiplication actions."""
    C = chaotic_category(G.elements, name=f"E{G.name}")
    right = GroupAction(G, C,
                        {(g, x): G.mul(x, g) for g in G.elements for x in C.objects},
                        {(g, (y, x)): (G.mul(y, g), G.mul(x, g)) for g in G.elements for (y, x) in C.morphisms},
                        "right")
    left = GroupAction(G, C,
                       {(g, x): G.mul(g, x) for g in G.elements for x in C.objects},
                       {(g, (y, x)): (G.mul(g, y), G.mul(g, x)) for g in G.elements for (y, x) in C.morphisms},
                       "left")
    return C, right, left


def trivial_action(G, C):
    return GroupAction(G, C, {(g, x): x for g in G.elements for x in C.objects},
                       {(g, m): m for g in G.elements for m in C.morphisms}, "left")


def conjugation_action(act_B, guard=10**6):
    """The left action (g·F) = g∘F∘g⁻¹ on Cat(EG, B); returns (Cat(EG, B), action)."""
    G, B = act_B.group, act_B.target
    EG, _, left = eg_category(G)
    FC = functor_category(EG, B, guard=guard)
    elements = FC.meta["elements"]
    ids_by_table = {}
    for fid in FC.objects:
        ids_by_table[elements[fid].key()] = fid
    mor_lookup = {}
    for aid in FC.morphisms:
        a = elements[aid]
        mor_lookup[(FC.src[aid], FC.tgt[aid], tuple(a[x] for x in EG.objects))] = aid
    obj_act, mor_act = {}, {}
    for g in G.elements:
        gi = G.inverse[g]
        pre = left.as_functor(gi)
        post = act_B.as_functor(g)
        for fid in FC.objects:
            H = compose_functors(post, compose_functors(elements[fid], pre))
            obj_act[(g, fid)] = ids_by_table[H.key()]
        for aid in FC.morphisms:
            a = elements[aid]
            comps = tuple(post.mor(a[pre.obj(x)]) for x in EG.objects)
            mor_act[(g, aid)] = mor_lookup[(obj_act[(g, FC.src[aid])], obj_act[(g, FC.tgt[aid])], comps)]
    return FC, GroupAction(G, FC, obj_act, mor_act, "left")
