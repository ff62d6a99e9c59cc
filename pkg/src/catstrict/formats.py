"""Canonical text format: key-sorted JSON with a format/version header.

Every id is written as a single token (see ``ids``); tables are lists of
rows sorted by their encoded form, so equal values always produce equal bytes.
"""
import json

from .errors import CatStrictError, FormatError
from .fincat import FinCategory, FinGroup, Functor, GroupAction, NatTrans
from .freemonad import BasedCategory
from .ids import decode_id, encode_id

FORMAT = "catstrict"
VERSION = 1
KINDS = ("category", "functor", "nat-trans", "group", "action", "operad", "based-category",
         "pseudoalgebra", "pseudomorphism", "two-cell", "biased-smc", "factorization",
         "strictification")


def E(v):
    return encode_id(v)


def D(s):
    return decode_id(s)


def _rows(rows):
    return sorted(rows, key=lambda r: json.dumps(r, ensure_ascii=False))


def dumps(kind, payload):
    if kind not in KINDS:
        raise FormatError(f"unknown kind {kind!r}")
    doc = {"format": FORMAT, "version": VERSION, "kind": kind, "payload": payload}
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"


def loads(text):
    """(kind, payload) from a document, checking the header."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"line {e.lineno}: {e.msg}") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise FormatError("missing or wrong format header")
    if doc.get("version") != VERSION:
        raise FormatError(f"unsupported format version {doc.get('version')!r}")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise FormatError(f"unknown kind {kind!r}")
    if "payload" not in doc:
        raise FormatError("document has no payload")
    return kind, doc["payload"]


def emit(value):
    kind, enc = _encoder_for(value)
    return dumps(kind, enc(value))


def parse(text, expect=None):
    kind, payload = loads(text)
    if expect is not None and kind != expect:
        raise FormatError(f"expected a {expect} document, found {kind}")
    return kind, decode(kind, payload)


def decode(kind, payload):
    try:
        return _DECODERS[kind](payload)
    except CatStrictError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError, IndexError) as e:
        raise FormatError(f"malformed {kind} payload: {type(e).__name__}: {e}") from None


# ------------------------------------------------------------------ categories

def enc_category(C):
    return {
        "name": C.name,
        "objects": sorted(E(x) for x in C.objects),
        "morphisms": _rows([E(m), E(C.src[m]), E(C.tgt[m])] for m in C.morphisms if m in C.src and m in C.tgt),
        "identities": _rows([E(x), E(C.ident[x])] for x in C.objects if x in C.ident),
        "composition": _rows([E(g), E(f), E(h)] for (g, f), h in C.comp.items()),
    }


def dec_category(p):
    objs = [D(x) for x in p["objects"]]
    mors, src, tgt = [], {}, {}
    for m, s, t in p["morphisms"]:
        m = D(m)
        mors.append(m)
        src[m], tgt[m] = D(s), D(t)
    ident = {D(x): D(m) for x, m in p["identities"]}
    comp = {(D(g), D(f)): D(h) for g, f, h in p["composition"]}
    return FinCategory(objs, mors, src, tgt, ident, comp, p.get("name", ""))


def enc_based(B):
    return {"category": enc_category(B.category), "base": E(B.base)}


def dec_based(p):
    return BasedCategory(dec_category(p["category"]), D(p["base"]))


def enc_functor(F, embed=True):
    out = {"name": F.name,
           "objects": _rows([E(x), E(y)] for x, y in F.obj_map.items()),
           "morphisms": _rows([E(m), E(n)] for m, n in F.mor_map.items())}
    if embed:
        out["domain"] = enc_category(F.dom)
        out["codomain"] = enc_category(F.cod)
    return out


def dec_functor(p, dom=None, cod=None):
    dom = dom if dom is not None else dec_category(p["domain"])
    cod = cod if cod is not None else dec_category(p["codomain"])
    return Functor(dom, cod, {D(x): D(y) for x, y in p["objects"]},
                   {D(m): D(n) for m, n in p["morphisms"]}, p.get("name", ""))


def enc_nat(a):
    return {"name": a.name, "source": enc_functor(a.src_f), "target": enc_functor(a.tgt_f),
            "components": _rows([E(x), E(m)] for x, m in a.component.items())}


def dec_nat(p):
    return NatTrans(dec_functor(p["source"]), dec_functor(p["target"]),
                    {D(x): D(m) for x, m in p["components"]}, p.get("name", ""))


def enc_group(G):
    return {"name": G.name, "elements": sorted(E(g) for g in G.elements), "identity": E(G.identity),
            "table": _rows([E(g), E(h), E(v)] for (g, h), v in G.mult.items())}


def dec_group(p):
    return FinGroup([D(g) for g in p["elements"]], {(D(g), D(h)): D(v) for g, h, v in p["table"]},
                    D(p["identity"]), name=p.get("name", ""))


def enc_action(a):
    return {"group": enc_group(a.group), "category": enc_category(a.target), "side": a.side,
            "objects": _rows([E(g), E(x), E(y)] for (g, x), y in a.obj_act.items()),
            "morphisms": _rows([E(g), E(m), E(n)] for (g, m), n in a.mor_act.items())}


def dec_action(p):
    return GroupAction(dec_group(p["group"]), dec_category(p["category"]),
                       {(D(g), D(x)): D(y) for g, x, y in p["objects"]},
                       {(D(g), D(m)): D(n) for g, m, n in p["morphisms"]}, p["side"])


# ---------------------------------------------------------------------- operads

def builtin_operad(kind, N, group=None):
    from .operad import assoc_operad, permutativity_operad, pg_operad
    if kind == "assoc":
        return assoc_operad(N)
    if kind == "perm":
        return permutativity_operad(N)
    if kind == "perm-g":
        if group is None:
            raise FormatError("perm-g needs a group")
        return pg_operad(group, N)
    raise FormatError(f"unknown operad kind {kind!r}")


def _builtin_tag(O):
    from .operad import assoc_operad, permutativity_operad
    N = O.max_arity
    if O.group is None:
        for kind, make in (("perm", permutativity_operad), ("assoc", assoc_operad)):
            if O.name in ("P", "Assoc") and O == make(N):
                return {"kind": kind, "max_arity": N}
    return None


def enc_operad(O, inline=True):
    if not inline:
        tag = _builtin_tag(O)
        if tag is not None:
            return {"builtin": tag}
    out = {
        "name": O.name,
        "max_arity": O.max_arity,
        "unit": E(O.unit),
        "levels": [enc_category(C) for C in O.levels],
        "actions": [_rows([E(s), E(c), E(v)] for (s, c), v in a.obj_act.items()) for a in O.actions],
        "gamma": _rows([E(c), [E(d) for d in ds], E(v)] for (c, ds), v in O.gamma_table.items()),
    }
    if O.group is not None:
        out["group"] = enc_group(O.group)
        out["group_actions"] = [_rows([E(g), E(c), E(v)] for (g, c), v in a.obj_act.items())
                                for a in O.group_actions]
    return out


def dec_operad(p):
    from .operad import Operad, _sym
    if "builtin" in p:
        b = p["builtin"]
        group = dec_group(b["group"]) if "group" in b else None
        return builtin_operad(b["kind"], int(b["max_arity"]), group)
    N = int(p["max_arity"])
    levels = [dec_category(c) for c in p["levels"]]
    if len(levels) != N + 1 or len(p["actions"]) != N + 1:
        raise FormatError("an operad file needs one level and one action per arity 0..N")
    actions = []
    for n, (C, rows) in enumerate(zip(levels, p["actions"])):
        obj_act = {(D(s), D(c)): D(v) for s, c, v in rows}
        actions.append(GroupAction(_sym(n), C, obj_act, _derived_mor_act(C, obj_act), "right"))
    group = dec_group(p["group"]) if "group" in p else None
    gactions = None
    if group is not None:
        gactions = []
        for C, rows in zip(levels, p["group_actions"]):
            obj_act = {(D(g), D(c)): D(v) for g, c, v in rows}
            gactions.append(GroupAction(group, C, obj_act, _derived_mor_act(C, obj_act), "left"))
    gamma = {(D(c), tuple(D(d) for d in ds)): D(v) for c, ds, v in p["gamma"]}
    return Operad(p.get("name", ""), N, levels, actions, D(p["unit"]), gamma, gactions, group)


def _derived_mor_act(C, obj_act):
    """Discrete and chaotic levels: each hom has at most one element, so objects force morphisms."""
    from .operad import _level_kind
    if _level_kind(C) == "general":
        raise FormatError("operad levels must be discrete or chaotic to be read from object tables")
    out = {}
    for s in {s for s, _ in obj_act}:
        for m in C.morphisms:
            x, y = C.src[m], C.tgt[m]
            if (s, x) in obj_act and (s, y) in obj_act:
                hom = C.hom(obj_act[(s, x)], obj_act[(s, y)])
                if hom:
                    out[(s, m)] = hom[0]
    return out


# ------------------------------------------------------------------ algebras

def _key_row(k, v):
    c, xs = k
    return [E(c), [E(x) for x in xs], E(v)]


def enc_pseudoalgebra(P, inline_operad=False):
    out = {
        "name": P.name,
        "N": P.N,
        "operad": enc_operad(P.operad, inline=inline_operad),
        "carrier": enc_based(P.carrier),
        "theta": _rows(_key_row(k, v) for k, v in P.theta.items()),
        "theta_op": _rows(_key_row(k, v) for k, v in P.theta_op.items()),
        "theta_car": _rows(_key_row(k, v) for k, v in P.theta_car.items()),
        "phi": _rows([E(c), [[E(d), [E(x) for x in xs]] for d, xs in blocks], E(v)]
                     for (c, blocks), v in P.phi.items()),
    }
    if P.bound is not None:
        out["window"] = {"bound": P.bound,
                         "weights": _rows([E(x), P.w(x)] for x in P.A.objects)}
    return out


def dec_pseudoalgebra(p):
    from .pseudoalg import Pseudoalgebra

    def rows(name):
        return {(D(c), tuple(D(x) for x in xs)): D(v) for c, xs, v in p[name]}
    phi = {}
    for c, blocks, v in p["phi"]:
        phi[(D(c), tuple((D(d), tuple(D(x) for x in xs)) for d, xs in blocks))] = D(v)
    weight, bound = None, None
    if p.get("window"):
        table = {D(x): int(w) for x, w in p["window"]["weights"]}
        weight, bound = table.__getitem__, int(p["window"]["bound"])
    return Pseudoalgebra(dec_operad(p["operad"]), dec_based(p["carrier"]), rows("theta"),
                         rows("theta_op"), rows("theta_car"), phi, N=int(p["N"]),
                         weight=weight, bound=bound, name=p.get("name", ""))


def enc_pseudomorphism(pm):
    return {"name": pm.name, "source": enc_pseudoalgebra(pm.source),
            "target": enc_pseudoalgebra(pm.target),
            "functor": enc_functor(pm.f, embed=False),
            "zeta": _rows(_key_row(k, v) for k, v in pm.zeta.items())}


def dec_pseudomorphism(p):
    from .pseudoalg import Pseudomorphism
    X = dec_pseudoalgebra(p["source"])
    Y = dec_pseudoalgebra(p["target"])
    f = dec_functor(p["functor"], X.A, Y.A)
    zeta = {(D(c), tuple(D(x) for x in xs)): D(v) for c, xs, v in p["zeta"]}
    return Pseudomorphism(X, Y, f, zeta, name=p.get("name", ""))


def enc_two_cell(t):
    return {"name": t.name, "source": enc_pseudomorphism(t.source),
            "target": enc_pseudomorphism(t.target),
            "components": _rows([E(x), E(m)] for x, m in t.lam.component.items())}


def dec_two_cell(p):
    from .pseudoalg import AlgebraTwoCell
    f = dec_pseudomorphism(p["source"])
    g = dec_pseudomorphism(p["target"])
    lam = NatTrans(f.f, g.f, {D(x): D(m) for x, m in p["components"]})
    return AlgebraTwoCell(f, g, lam, name=p.get("name", ""))


def enc_smc(M):
    return {"name": M.name, "carrier": enc_based(M.carrier),
            "tensor": _rows([E(x), E(y), E(v)] for (x, y), v in M.tensor_obj.items()),
            "tensor_mor": _rows([E(f), E(g), E(v)] for (f, g), v in M.tensor_mor.items()),
            "associator": _rows([E(x), E(y), E(z), E(v)] for (x, y, z), v in M.alpha.items()),
            "symmetry": _rows([E(x), E(y), E(v)] for (x, y), v in M.sym.items())}


def dec_smc(p):
    from .smc import BiasedSMC
    return BiasedSMC(dec_based(p["carrier"]),
                     {(D(x), D(y)): D(v) for x, y, v in p["tensor"]},
                     {(D(f), D(g)): D(v) for f, g, v in p["tensor_mor"]},
                     {(D(x), D(y), D(z)): D(v) for x, y, z, v in p["associator"]},
                     {(D(x), D(y)): D(v) for x, y, v in p["symmetry"]}, name=p.get("name", ""))


def enc_factorization(fz):
    return {"f": enc_functor(fz.f), "image": enc_category(fz.image),
            "e": enc_functor(fz.e, embed=False), "m": enc_functor(fz.m, embed=False)}


def dec_factorization(p):
    from .efs import Factorization
    f = dec_functor(p["f"])
    im = dec_category(p["image"])
    return Factorization(f, im, dec_functor(p["e"], f.dom, im), dec_functor(p["m"], im, f.cod))


def _enc_map(pm):
    return {"name": pm.name, "functor": enc_functor(pm.f, embed=False),
            "zeta": _rows(_key_row(k, v) for k, v in pm.zeta.items())}


def _dec_map(p, X, Y):
    from .pseudoalg import Pseudomorphism
    f = dec_functor(p["functor"], X.A, Y.A)
    zeta = {(D(c), tuple(D(x) for x in xs)): D(v) for c, xs, v in p["zeta"]}
    return Pseudomorphism(X, Y, f, zeta, name=p.get("name", ""))


def enc_strictification(S, report=None):
    """St A with the unit and counit maps and both comparison 2-cells."""
    out = {"input": enc_pseudoalgebra(S.A), "algebra": enc_pseudoalgebra(S.St), "L": S.L,
           "unit": _enc_map(S.k_omega), "counit": _enc_map(S.m_phi),
           "upsilon": _rows([E(x), E(m)] for x, m in S.upsilon.component.items()),
           "nu": _rows([E(x), E(m)] for x, m in S.nu.component.items())}
    if report is not None:
        out["report"] = report.render().splitlines()
    return out


def dec_strictification(p):
    from .pseudoalg import AlgebraTwoCell, compose_pseudomorphisms, identity_pseudomorphism
    A = dec_pseudoalgebra(p["input"])
    St = dec_pseudoalgebra(p["algebra"])
    unit = _dec_map(p["unit"], A, St)
    counit = _dec_map(p["counit"], St, A)
    mk = compose_pseudomorphisms(counit, unit)
    km = compose_pseudomorphisms(unit, counit)
    ups = NatTrans(identity_pseudomorphism(A).f, mk.f, {D(x): D(m) for x, m in p["upsilon"]}, "υ")
    nu = NatTrans(km.f, identity_pseudomorphism(St).f, {D(x): D(m) for x, m in p["nu"]}, "ν")
    return {"input": A, "algebra": St, "L": int(p["L"]), "unit": unit, "counit": counit,
            "upsilon": AlgebraTwoCell(identity_pseudomorphism(A), mk, ups),
            "nu": AlgebraTwoCell(km, identity_pseudomorphism(St), nu),
            "report": list(p.get("report", []))}


_DECODERS = {
    "category": dec_category, "functor": dec_functor, "nat-trans": dec_nat, "group": dec_group,
    "action": dec_action, "operad": dec_operad, "based-category": dec_based,
    "pseudoalgebra": dec_pseudoalgebra, "pseudomorphism": dec_pseudomorphism,
    "two-cell": dec_two_cell, "biased-smc": dec_smc, "factorization": dec_factorization,
    "strictification": dec_strictification,
}


def _encoder_for(value):
    from .efs import Factorization
    from .operad import Operad
    from .pseudoalg import AlgebraTwoCell, Pseudoalgebra, Pseudomorphism
    from .smc import BiasedSMC
    table = [
        (FinCategory, "category", enc_category), (Functor, "functor", enc_functor),
        (NatTrans, "nat-trans", enc_nat), (FinGroup, "group", enc_group),
        (GroupAction, "action", enc_action), (Operad, "operad", enc_operad),
        (BasedCategory, "based-category", enc_based), (Pseudoalgebra, "pseudoalgebra", enc_pseudoalgebra),
        (Pseudomorphism, "pseudomorphism", enc_pseudomorphism),
        (AlgebraTwoCell, "two-cell", enc_two_cell), (BiasedSMC, "biased-smc", enc_smc),
        (Factorization, "factorization", enc_factorization),
    ]
    for cls, kind, enc in table:
        if isinstance(value, cls):
            return kind, enc
    raise FormatError(f"no text format for {type(value).__name__}")
