"""Random small categories: disjoint unions of preorders, cyclic groups and parallel pairs."""
import random

from catstrict.fincat import FinCategory


def preorder(n, rng, tag, density=0.4):
    rel = {(i, i) for i in range(n)}
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < density / (1 + (j < i) * 2):
                rel.add((i, j))
    changed = True
    while changed:
        changed = False
        for (i, j) in list(rel):
            for (j2, k) in list(rel):
                if j == j2 and (i, k) not in rel:
                    rel.add((i, k))
                    changed = True
    objs = [f"{tag}{i}" for i in range(n)]
    mor = {(i, j): f"{tag}{i}_{j}" for (i, j) in rel}
    src = {m: objs[i] for (i, j), m in mor.items()}
    tgt = {m: objs[j] for (i, j), m in mor.items()}
    ident = {objs[i]: mor[(i, i)] for i in range(n)}
    comp = {}
    for (i, j), f in mor.items():
        for (j2, k), g in mor.items():
            if j == j2:
                comp[(g, f)] = mor[(i, k)]
    return FinCategory(objs, list(mor.values()), src, tgt, ident, comp)


def cyclic(k, tag):
    x = f"{tag}"
    ms = [f"{tag}g{i}" for i in range(k)]
    comp = {(ms[i], ms[j]): ms[(i + j) % k] for i in range(k) for j in range(k)}
    return FinCategory([x], ms, {m: x for m in ms}, {m: x for m in ms}, {x: ms[0]}, comp)


def parallel(tag):
    p, q = f"{tag}p", f"{tag}q"
    ms = [f"{tag}ip", f"{tag}iq", f"{tag}u", f"{tag}v"]
    src = dict(zip(ms, [p, q, p, p]))
    tgt = dict(zip(ms, [p, q, q, q]))
    ident = {p: ms[0], q: ms[1]}
    comp = {}
    for m in ms:
        comp[(ident[tgt[m]], m)] = m
        comp[(m, ident[src[m]])] = m
    return FinCategory([p, q], ms, src, tgt, ident, comp)


def disjoint_union(parts, name=""):
    objs, ms, src, tgt, ident, comp = [], [], {}, {}, {}, {}
    for C in parts:
        objs += list(C.objects)
        ms += list(C.morphisms)
        src.update(C.src)
        tgt.update(C.tgt)
        ident.update(C.ident)
        comp.update(C.comp)
    return FinCategory(objs, ms, src, tgt, ident, comp, name)


def nonidentity_count(C):
    return len(C.morphisms) - len(C.objects)


def random_category(rng, max_objects=5, max_nonid=15, prefix="c"):
    while True:
        budget = rng.randint(1, max_objects)
        parts, used, i = [], 0, 0
        while used < budget:
            kind = rng.choice(("preorder", "preorder", "cyclic", "parallel"))
            tag = f"{prefix}{i}"
            i += 1
            if kind == "preorder":
                n = rng.randint(1, budget - used)
                parts.append(preorder(n, rng, tag))
                used += n
            elif kind == "cyclic":
                parts.append(cyclic(rng.randint(1, 3), tag))
                used += 1
            elif budget - used >= 2:
                parts.append(parallel(tag))
                used += 2
        C = disjoint_union(parts)
        if len(C.objects) <= max_objects and nonidentity_count(C) <= max_nonid:
            return C


def random_functor(rng, A, B, enumerate_functors, guard=10**5):
    """A uniformly chosen functor A → B, or None if there is none."""
    fs = list(enumerate_functors(A, B, guard=guard))
    return rng.choice(fs) if fs else None


def random_square(rng, max_objects=3, max_nonid=6):
    """(e, m, v, u, φ) with e bijective on objects, m fully faithful and φ: u∘e ≅ m∘v.

    Built from a hidden diagonal w, with u conjugated by random automorphisms so φ
    is usually not an identity.
    """
    from catstrict.efs import factorize
    from catstrict.fincat import Functor, NatTrans, compose_functors, enumerate_functors
    while True:
        A = random_category(rng, max_objects, max_nonid, "a")
        X0 = random_category(rng, max_objects, max_nonid, "x")
        B0 = random_category(rng, max_objects, max_nonid, "b")
        Y = random_category(rng, max_objects, max_nonid, "y")
        f = random_functor(rng, A, X0, enumerate_functors)
        g = random_functor(rng, B0, Y, enumerate_functors)
        if f is None or g is None:
            continue
        e, m = factorize(f).e, factorize(g).m
        X, B = e.cod, m.dom
        w = random_functor(rng, X, B, enumerate_functors)
        if w is None or not any(len(Y.hom(y, y)) > 1 for y in map(m.obj, B.objects)):
            continue
        v = compose_functors(w, e)
        u0 = compose_functors(m, w)
        psi = {}
        for x in X.objects:
            y = u0.obj(x)
            autos = [h for h in Y.hom(y, y) if Y.is_iso(h) and h != Y.ident[y]]
            psi[x] = rng.choice(autos) if autos and rng.random() < 0.8 else Y.ident[y]
        u = Functor(X, Y, dict(u0.obj_map),
                    {h: Y.compose(psi[X.tgt[h]], u0.mor(h), Y.inverse(psi[X.src[h]])) for h in X.morphisms})
        ue = compose_functors(u, e)
        phi = NatTrans(ue, compose_functors(m, v),
                       {a: Y.inverse(psi[e.obj(a)]) for a in A.objects})
        return e, m, v, u, phi


def exhaustive_lifts(e, m, v, u, phi):
    """Every (w, φ~) solving the square, found by enumerating all functors X → B."""
    from catstrict.fincat import NatTrans, compose_functors, enumerate_functors, validate_nat_trans
    einv = {y: x for x, y in e.obj_map.items()}
    out = []
    for W in enumerate_functors(e.cod, m.dom):
        if compose_functors(W, e) != v:
            continue
        cand = NatTrans(u, compose_functors(m, W), {x: phi[einv[x]] for x in e.cod.objects})
        if validate_nat_trans(cand).ok:
            out.append((W, cand))
    return out
