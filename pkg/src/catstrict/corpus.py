"""Write the example file corpus: ``python -m catstrict.corpus DIR``.

Every file written here passes ``catstrict validate``.
"""
import sys
from pathlib import Path

from . import fixtures, formats
from .fincat import (GroupAction, cyclic_group, identity_nat, terminal_category)
from .freemonad import BasedCategory
from .pseudoalg import AlgebraTwoCell


def corpus_items(N=3):
    """(file name, value) pairs, in a fixed order."""
    C = fixtures.a3_category()
    swap = fixtures.a3_swap()
    G = cyclic_group(2)
    ident = G.identity
    flip = next(g for g in G.elements if g != ident)
    obj_act = {(g, x): (swap.obj(x) if g == flip else x) for g in G.elements for x in C.objects}
    mor_act = {(g, m): (swap.mor(m) if g == flip else m) for g in G.elements for m in C.morphisms}
    A2, A2t = fixtures.a2_algebra(N), fixtures.a2_twisted(N)
    Q, pm = A2t
    return [
        ("terminal.category.json", terminal_category()),
        ("a3.category.json", C),
        ("a3.based.json", BasedCategory(C, 0)),
        ("a2.based.json", BasedCategory(fixtures.a2_category(), 0)),
        ("a3-swap.functor.json", swap),
        ("a3-swap-id.nat.json", identity_nat(swap)),
        ("c2.group.json", G),
        ("c2-on-a3.action.json", GroupAction(G, C, obj_act, mor_act, "left")),
        ("assoc3.operad.json", formats.builtin_operad("assoc", N)),
        ("perm3.operad.json", formats.builtin_operad("perm", N)),
        ("m0.smc.json", fixtures.a3_strict_smc()),
        ("m1.smc.json", fixtures.a3_twisted_smc()),
        ("a2.smc.json", fixtures.a2_strict_smc()),
        ("a2.alg.json", A2),
        ("a2-twisted.alg.json", Q),
        ("a2-twisted.pm.json", pm),
        ("a2-twisted-id.cell.json", AlgebraTwoCell(pm, pm, identity_nat(pm.f), name="id")),
    ]


def write_corpus(directory, N=3):
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    names = []
    for name, value in corpus_items(N):
        (d / name).write_text(formats.emit(value), encoding="utf-8")
        names.append(name)
    return names


if __name__ == "__main__":
    for n in write_corpus(sys.argv[1] if len(sys.argv) > 1 else "corpus"):
        print(n)
