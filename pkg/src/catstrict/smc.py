"""Symmetric monoidal categories with a strict unit, and their passage to and from P-pseudoalgebras.

Products are bracketed to the right: ten(x1, x2, x3) = x1⊗(x2⊗x3).  A
permutation π acts on a bracketed product through a reduced word in adjacent
transpositions; each letter becomes a symmetry conjugated by associators.
Every reduced word is tried and they must all agree.
"""
from itertools import product

from .errors import (BoundaryMismatchError, HypothesisError, TruncationError,
                     WellDefinednessError)
from .fincat import Functor, product_category, validate_functor
from .freemonad import BasedCategory
from .operad import permutativity_operad
from .perms import act, all_perms, all_reduced_words, perm_compose, perm_inverse, transposition
from .pseudoalg import Pseudoalgebra, build_pseudoalgebra
from .report import Report


class BiasedSMC:
    """tensor on object and morphism pairs, α_{x,y,z}: (x⊗y)⊗z → x⊗(y⊗z), s_{x,y}: x⊗y → y⊗x."""

    def __init__(self, carrier, tensor_obj, tensor_mor, alpha, sym, name=""):
        self.carrier = carrier
        self.A = carrier.category
        self.tensor_obj = dict(tensor_obj)
        self.tensor_mor = dict(tensor_mor)
        self.alpha = dict(alpha)
        self.sym = dict(sym)
        self.name = name

    def __repr__(self):
        return f"<BiasedSMC {self.name or '?'} on {self.A.name or self.A!r}>"

    def __eq__(self, other):
        return (isinstance(other, BiasedSMC) and self.carrier == other.carrier
                and self.tensor_obj == other.tensor_obj and self.tensor_mor == other.tensor_mor
                and self.alpha == other.alpha and self.sym == other.sym)

    @property
    def unit(self):
        return self.carrier.base

    def t(self, x, y):
        return self.tensor_obj[(x, y)]

    def tm(self, f, g):
        return self.tensor_mor[(f, g)]

    def tensor_functor(self):
        A = self.A
        AA = product_category(A, A)
        return Functor(AA, A, self.tensor_obj, self.tensor_mor, "⊗")

    def is_strict(self):
        ids = set(self.A.ident.values())
        return all(v in ids for v in self.alpha.values()) and all(v in ids for v in self.sym.values())

    # ---- bracketed products
    def ten(self, xs):
        if not xs:
            return self.unit
        out = xs[-1]
        for x in reversed(xs[:-1]):
            out = self.t(x, out)
        return out

    def tenm(self, gs):
        if not gs:
            return self.A.ident[self.unit]
        out = gs[-1]
        for g in reversed(gs[:-1]):
            out = self.tm(g, out)
        return out

    def swap_at(self, u, i):
        """ten(u) → ten(u with entries i, i+1 exchanged), 1-indexed."""
        A = self.A
        x, y, rest = u[i - 1], u[i], u[i + 1:]
        if not rest:
            core = self.sym[(x, y)]
        else:
            R = self.ten(rest)
            core = A.compose(self.alpha[(y, x, R)],
                             self.tm(self.sym[(x, y)], A.ident[R]),
                             A.inverse(self.alpha[(x, y, R)]))
        for p in reversed(u[:i - 1]):
            core = self.tm(A.ident[p], core)
        return core

    def T_word(self, word, w):
        A = self.A
        out = A.ident[self.ten(w)]
        cur = tuple(w)
        for i in reversed(word):
            out = A.comp[(self.swap_at(cur, i), out)]
            cur = act(transposition(len(cur), i), cur)
        return out

    def T(self, pi, w):
        """The coherence map ten(w) → ten(π·w)."""
        key = (pi, tuple(w))
        cache = self.__dict__.setdefault("_T_cache", {})
        hit = cache.get(key)
        if hit is not None:
            return hit
        words = all_reduced_words(pi)
        vals = {self.T_word(word, w) for word in words}
        if len(vals) != 1:
            raise WellDefinednessError(
                f"transposition factorizations of {pi} disagree at {tuple(w)!r}: {sorted(map(repr, vals))}")
        out = vals.pop()
        cache[key] = out
        return out

    def join(self, u, v):
        """ten(u)⊗ten(v) → ten(u + v)."""
        A = self.A
        if len(u) <= 1 or not v:
            return A.ident[self.t(self.ten(u), self.ten(v))] if u else A.ident[self.ten(v)]
        first, rest = u[0], u[1:]
        return A.comp[(self.tm(A.ident[first], self.join(rest, v)),
                       self.alpha[(first, self.ten(rest), self.ten(v))])]

    def flatten(self, blocks):
        """ten(ten(b1), …, ten(bn)) → ten(b1 + … + bn), dropping empty blocks first."""
        A = self.A
        blocks = [b for b in blocks if b]
        if not blocks:
            return A.ident[self.unit]
        if len(blocks) == 1:
            return A.ident[self.ten(blocks[0])]
        rest = blocks[1:]
        flat_rest = tuple(v for b in rest for v in b)
        return A.comp[(self.join(blocks[0], flat_rest),
                       self.tm(A.ident[self.ten(blocks[0])], self.flatten(rest)))]


def validate_biased_smc(M, max_failures=200):
    A = M.A
    comp, ident = A.comp, A.ident
    r = Report(f"symmetric monoidal {M.name or '?'}", max_failures=max_failures)
    e = M.unit
    obs, ms = A.objects, A.morphisms
    for x, y in product(obs, repeat=2):
        r.check(M.tensor_obj.get((x, y)) in A.object_set, "tensor table", x, y)
    for f, g in product(ms, repeat=2):
        v = M.tensor_mor.get((f, g))
        ok = (v in A.morphism_set and A.src[v] == M.tensor_obj.get((A.src[f], A.src[g]))
              and A.tgt[v] == M.tensor_obj.get((A.tgt[f], A.tgt[g])))
        r.check(ok, "tensor table", f, g)
    for x, y, z in product(obs, repeat=3):
        v = M.alpha.get((x, y, z))
        ok = (v in A.morphism_set and A.src[v] == M.t(M.t(x, y), z)
              and A.tgt[v] == M.t(x, M.t(y, z)) and A.is_iso(v))
        r.check(ok, "associator boundary", x, y, z)
    for x, y in product(obs, repeat=2):
        v = M.sym.get((x, y))
        ok = v in A.morphism_set and A.src[v] == M.t(x, y) and A.tgt[v] == M.t(y, x)
        r.check(ok, "symmetry boundary", x, y)
    if not r.ok:
        return r
    # functoriality of ⊗
    for x, y in product(obs, repeat=2):
        r.check(M.tm(ident[x], ident[y]) == ident[M.t(x, y)], "tensor identities", x, y)
    pairs = list(comp.items())
    for ((f2, f1), f), ((g2, g1), g) in product(pairs, repeat=2):
        r.check(M.tm(f, g) == comp[(M.tm(f2, g2), M.tm(f1, g1))], "tensor composition", f2, f1, g2, g1)
    # strict unit
    for x in obs:
        r.check(M.t(e, x) == x and M.t(x, e) == x, "strict unit", x)
    for g in ms:
        r.check(M.tm(ident[e], g) == g and M.tm(g, ident[e]) == g, "strict unit", g)
    for x, y, z in product(obs, repeat=3):
        if e in (x, y, z):
            r.check(M.alpha[(x, y, z)] == ident[M.t(M.t(x, y), z)], "unit: associator", x, y, z)
    for x in obs:
        r.check(M.sym[(x, e)] == ident[x] and M.sym[(e, x)] == ident[x], "unit: symmetry", x)
    # naturality
    for f, g, h in product(ms, repeat=3):
        s = (A.src[f], A.src[g], A.src[h])
        t = (A.tgt[f], A.tgt[g], A.tgt[h])
        lhs = comp[(M.alpha[t], M.tm(M.tm(f, g), h))]
        rhs = comp[(M.tm(f, M.tm(g, h)), M.alpha[s])]
        r.check(lhs == rhs, "associator naturality", f, g, h)
    for f, g in product(ms, repeat=2):
        lhs = comp[(M.sym[(A.tgt[f], A.tgt[g])], M.tm(f, g))]
        rhs = comp[(M.tm(g, f), M.sym[(A.src[f], A.src[g])])]
        r.check(lhs == rhs, "symmetry naturality", f, g)
    # pentagon
    for w, x, y, z in product(obs, repeat=4):
        lhs = comp[(M.alpha[(w, x, M.t(y, z))], M.alpha[(M.t(w, x), y, z)])]
        rhs = A.compose(M.tm(ident[w], M.alpha[(x, y, z)]), M.alpha[(w, M.t(x, y), z)],
                        M.tm(M.alpha[(w, x, y)], ident[z]))
        r.check(lhs == rhs, "pentagon", w, x, y, z)
    # hexagons
    for x, y, z in product(obs, repeat=3):
        lhs = A.compose(M.alpha[(y, z, x)], M.sym[(x, M.t(y, z))], M.alpha[(x, y, z)])
        rhs = A.compose(M.tm(ident[y], M.sym[(x, z)]), M.alpha[(y, x, z)],
                        M.tm(M.sym[(x, y)], ident[z]))
        r.check(lhs == rhs, "hexagon 1", x, y, z)
        inv = A.inverse
        lhs = A.compose(inv(M.alpha[(z, x, y)]), M.sym[(M.t(x, y), z)], inv(M.alpha[(x, y, z)]))
        rhs = A.compose(M.tm(M.sym[(x, z)], ident[y]), inv(M.alpha[(x, z, y)]),
                        M.tm(ident[x], M.sym[(y, z)]))
        r.check(lhs == rhs, "hexagon 2", x, y, z)
    for x, y in product(obs, repeat=2):
        r.check(comp[(M.sym[(y, x)], M.sym[(x, y)])] == ident[M.t(x, y)], "symmetry involution", x, y)
    return r


def from_symmetric_monoidal(M, N=4, operad=None, check=True):
    """The P-pseudoalgebra with θ_n(c; xs) = ten(c·xs)."""
    if check:
        rep = validate_biased_smc(M)
        if not rep.ok:
            raise HypothesisError("the symmetric monoidal input is invalid:\n" + rep.render())
    O = operad if operad is not None else permutativity_operad(N)
    if O.max_arity < N:
        raise TruncationError(f"operad truncated at {O.max_arity} < {N}")
    A = M.A

    def obj_fn(c, xs):
        return M.ten(act(c, xs))

    def op_fn(f, xs):
        rho, sigma = f
        return M.T(perm_compose(rho, perm_inverse(sigma)), act(sigma, xs))

    def car_fn(c, gs):
        return M.tenm(act(c, gs))

    def phi_fn(c, blocks):
        ds = [d for d, _ in blocks]
        xs = [x for _, x in blocks]
        ys = tuple(M.ten(act(d, x)) for d, x in blocks)
        g = O.gamma(c, ds, [len(x) for x in xs])
        flat = tuple(v for x in xs for v in x)
        steps = [M.T(perm_inverse(c), act(c, ys)),
                 M.tenm(tuple(M.T(perm_inverse(d), act(d, x)) for d, x in blocks)),
                 M.flatten(xs),
                 M.T(g, flat)]
        out = steps[0]
        for s in steps[1:]:
            out = A.comp[(s, out)]
        return out

    return build_pseudoalgebra(O, M.carrier, obj_fn, op_fn, car_fn, phi_fn, N=N,
                               name=M.name)


def to_symmetric_monoidal(P, name=""):
    """Read off ⊗ = θ_2 at the identity, α from φ(2;2,1) and φ(2;1,2), and s from θ_2 on the swap."""
    if P.N < 4:
        raise TruncationError(f"the correspondence is read at arity ≤ 4, got N = {P.N}")
    if P.operad != permutativity_operad(P.operad.max_arity):
        raise HypothesisError("to_symmetric_monoidal needs an algebra over the permutativity operad")
    if P.bound is not None:
        raise HypothesisError("to_symmetric_monoidal needs an untruncated carrier")
    A = P.A
    e2, e1 = (1, 2), (1,)
    obs, ms = A.objects, A.morphisms
    tensor_obj = {(x, y): P.obj(e2, (x, y)) for x, y in product(obs, repeat=2)}
    tensor_mor = {(f, g): P.mor(((1, 2), (1, 2)), (f, g)) for f, g in product(ms, repeat=2)}
    alpha = {}
    for x, y, z in product(obs, repeat=3):
        left = P.phi_at(e2, ((e2, (x, y)), (e1, (z,))))
        right = P.phi_at(e2, ((e1, (x,)), (e2, (y, z))))
        alpha[(x, y, z)] = A.comp[(A.inverse(right), left)]
    sym = {(x, y): P.op(((2, 1), (1, 2)), (x, y)) for x, y in product(obs, repeat=2)}
    return BiasedSMC(P.carrier, tensor_obj, tensor_mor, alpha, sym, name=name or P.name)


def transport_smc(M, h, J=None, name=""):
    """Relabel M along an isomorphism h: B → A and twist by J_{x,y} ∈ Aut(x⊗y).

    The identity functor with structure maps J is then a monoidal isomorphism
    from the result to the relabelled M.  J must be trivial when either entry
    is the unit.
    """
    from .pseudoalg import _inverse_functor
    if h.cod != M.A:
        raise BoundaryMismatchError("h must land in the carrier of M")
    if not validate_functor(h).ok:
        raise HypothesisError("h is not a functor")
    hinv = _inverse_functor(h)
    B = h.dom
    base = hinv.obj(M.unit)
    carrier = BasedCategory(B, base)
    obs, ms = B.objects, B.morphisms
    t0 = {(x, y): hinv.obj(M.t(h.obj(x), h.obj(y))) for x, y in product(obs, repeat=2)}
    tm0 = {(f, g): hinv.mor(M.tm(h.mor(f), h.mor(g))) for f, g in product(ms, repeat=2)}
    a0 = {(x, y, z): hinv.mor(M.alpha[(h.obj(x), h.obj(y), h.obj(z))]) for x, y, z in product(obs, repeat=3)}
    s0 = {(x, y): hinv.mor(M.sym[(h.obj(x), h.obj(y))]) for x, y in product(obs, repeat=2)}
    J = dict(J or {})

    def j(x, y):
        g = J.get((x, y))
        if g is None:
            return B.ident[t0[(x, y)]]
        if base in (x, y) and g != B.ident[t0[(x, y)]]:
            raise HypothesisError(f"twist must be trivial at the unit, not at {(x, y)!r}")
        if B.src[g] != t0[(x, y)] or B.tgt[g] != t0[(x, y)] or not B.is_iso(g):
            raise HypothesisError(f"twist at {(x, y)!r} is not an automorphism of {t0[(x, y)]!r}")
        return g

    inv = B.inverse
    tm = {}
    for (f, g), v in tm0.items():
        tm[(f, g)] = B.compose(j(B.tgt[f], B.tgt[g]), v, inv(j(B.src[f], B.src[g])))
    alpha = {}
    for (x, y, z), v in a0.items():
        xy, yz = t0[(x, y)], t0[(y, z)]
        alpha[(x, y, z)] = B.compose(j(x, yz), tm0[(B.ident[x], j(y, z))], v,
                                     inv(tm0[(j(x, y), B.ident[z])]), inv(j(xy, z)))
    sym = {(x, y): B.compose(j(y, x), v, inv(j(x, y))) for (x, y), v in s0.items()}
    return BiasedSMC(carrier, t0, tm, alpha, sym, name=name or f"{M.name}'")


def smc_from_functions(carrier, tensor, tensor_mor, alpha=None, sym=None, name=""):
    A = carrier.category
    obs, ms = A.objects, A.morphisms
    t = {(x, y): tensor(x, y) for x, y in product(obs, repeat=2)}
    tm = {(f, g): tensor_mor(f, g) for f, g in product(ms, repeat=2)}
    if alpha is None:
        a = {(x, y, z): A.ident[t[(t[(x, y)], z)]] for x, y, z in product(obs, repeat=3)}
    else:
        a = {(x, y, z): alpha(x, y, z) for x, y, z in product(obs, repeat=3)}
    if sym is None:
        s = {(x, y): A.ident[t[(x, y)]] for x, y in product(obs, repeat=2)}
    else:
        s = {(x, y): sym(x, y) for x, y in product(obs, repeat=2)}
    return BiasedSMC(carrier, t, tm, a, s, name=name)
