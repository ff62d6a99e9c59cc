"""Small algebras used by the tests, the acceptance run and the CLI corpus.

Objects are 0 (the unit) and lowercase letters; an automorphism of x is
``id_x`` or ``t_x`` and they form Z/2.
"""
from functools import lru_cache

from .fincat import FinCategory, Functor, discrete_category
from .freemonad import BasedCategory
from .operad import permutativity_operad
from .perms import act
from .pseudoalg import build_pseudoalgebra, strict_algebra, transport_pseudoalgebra
from .smc import from_symmetric_monoidal, smc_from_functions, transport_smc


def _mid(x, bit):
    return f"{'t' if bit else 'id'}_{x}"


def z2_automorphism_category(letters, name=""):
    """0 with only its identity; every letter with automorphism group Z/2."""
    objects = [0] + list(letters)
    morphisms, src, tgt, ident, comp = [], {}, {}, {}, {}
    for x in objects:
        bits = (0,) if x == 0 else (0, 1)
        for b in bits:
            m = _mid(x, b)
            morphisms.append(m)
            src[m] = tgt[m] = x
        ident[x] = _mid(x, 0)
        for b1 in bits:
            for b2 in bits:
                comp[(_mid(x, b2), _mid(x, b1))] = _mid(x, (b1 + b2) % 2)
    return FinCategory(objects, morphisms, src, tgt, ident, comp, name)


def parse_mid(C, m):
    """(object, bit) for a morphism of a z2_automorphism_category."""
    x = C.src[m]
    return x, 0 if m == C.ident[x] else 1


def _additive_smc(C, mult, name):
    def tensor_mor(f, g):
        x, b1 = parse_mid(C, f)
        y, b2 = parse_mid(C, g)
        z = mult(x, y)
        return _mid(z, 0 if z == 0 else (b1 + b2) % 2)
    return smc_from_functions(BasedCategory(C, 0), mult, tensor_mor, name=name)


# ---- three objects

def a3_category():
    return z2_automorphism_category(["a", "b"], name="A3")


_RANK = {0: 0, "a": 1, "b": 2}
_UNRANK = {0: 0, 1: "a", 2: "b"}


def a3_mult(x, y):
    """Addition truncated at 2, with a = 1 and b = 2."""
    return _UNRANK[min(_RANK[x] + _RANK[y], 2)]


def a3_strict_smc():
    return _additive_smc(a3_category(), a3_mult, "M0")


def a3_swap():
    C = a3_category()
    ob = {0: 0, "a": "b", "b": "a"}
    mor = {m: _mid(ob[C.src[m]], parse_mid(C, m)[1]) for m in C.morphisms}
    return Functor(C, C, ob, mor, "swap")


def a3_twisted_smc():
    """M0 relabelled along a ↔ b and twisted at (a, a) and (a, b); α and s become non-trivial."""
    M = a3_strict_smc()
    h = a3_swap()
    C = M.A
    t = {(x, y): a3_mult(h.obj(x), h.obj(y)) for x in C.objects for y in C.objects}
    J = {("a", "a"): _mid(h.obj(t[("a", "a")]), 1), ("a", "b"): _mid(h.obj(t[("a", "b")]), 1)}
    return transport_smc(M, h, J, name="M1")


@lru_cache(maxsize=None)
def a3_algebras(N=4):
    """(strict, twisted) P-pseudoalgebras on A3."""
    O = permutativity_operad(N)
    P0 = from_symmetric_monoidal(a3_strict_smc(), N, operad=O)
    P0.name = "A3"
    P1 = from_symmetric_monoidal(a3_twisted_smc(), N, operad=O)
    P1.name = "A3'"
    return P0, P1


# ---- two objects

def a2_category():
    return z2_automorphism_category(["a"], name="A2")


def a2_strict_smc():
    return _additive_smc(a2_category(), lambda x, y: y if x == 0 else x, "A2")


@lru_cache(maxsize=None)
def a2_algebra(N=4):
    P = from_symmetric_monoidal(a2_strict_smc(), N, operad=permutativity_operad(N))
    P.name = "A2"
    return P


@lru_cache(maxsize=None)
def a2_twisted(N=4):
    """A2 twisted at (1,2,3; a, a, a), with the comparison pseudomorphism A2' → A2."""
    P = a2_algebra(N)
    C = P.A
    ident = Functor(C, C, {x: x for x in C.objects}, {m: m for m in C.morphisms}, "id")
    u = {((1, 2, 3), ("a", "a", "a")): "t_a"}
    Q, pm = transport_pseudoalgebra(P, ident, twist=u, name="A2'")
    return Q, pm


# ---- discrete monoids

def z2_algebra(operad, N=None):
    """The discrete category on Z/2 with θ the iterated sum; strict."""
    C = discrete_category([0, 1], name="Z2")
    return strict_algebra(operad, BasedCategory(C, 0), lambda c, xs: sum(xs) % 2,
                          lambda f, gs: sum(gs) % 2, N=N, name="Z2")


def left_zero_monoid_algebra(operad, N=None):
    """{0, a, b} with x·y = x for x, y ≠ 0: a non-commutative monoid, as a strict algebra."""
    C = discrete_category([0, "a", "b"], name="LZ")

    def mult(xs):
        for x in xs:
            if x != 0:
                return x
        return 0
    return strict_algebra(operad, BasedCategory(C, 0), lambda c, xs: mult(act(c, xs)),
                          lambda f, gs: mult(act(operad.levels[len(gs)].src[f], gs)),
                          N=N, name="LZ")


def terminal_algebra(operad, N=None):
    C = discrete_category([0], name="1")
    return strict_algebra(operad, BasedCategory(C, 0), lambda c, xs: 0, lambda f, gs: 0, N=N,
                          name="1")
