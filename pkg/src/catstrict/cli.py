"""Command-line entry point: ``catstrict <subcommand>``.

Exit codes: 0 when the checked property holds, 1 when it fails, 2 on an
operational error (unreadable or malformed input, truncation, guards).
"""
import sys
from pathlib import Path

import click

from . import formats
from .errors import (CatStrictError, FormatError, ResourceGuardError, TruncationError)
from .report import Report

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2
_OPERATIONAL = (FormatError, TruncationError, ResourceGuardError)


class Failed(Exception):
    """Raised inside a command to leave with exit code 1 after printing."""


def _read(path, expect=None):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"{path}: {e.strerror}") from None
    try:
        return formats.parse(text, expect)
    except FormatError as e:
        raise FormatError(f"{path}: {e}") from None


def _write(text, out):
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _finish(report):
    click.echo(report.render(), nl=False)
    if not report.ok:
        raise Failed()


def _error_report(subject, exc):
    r = Report(subject)
    if hasattr(exc, "ident"):
        r.fail(f"dangling id ({exc.where})", exc.ident)
    else:
        r.fail(f"{type(exc).__name__}: {exc}")
    return r


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except Failed:
            ctx.exit(EXIT_FALSE)
        except _OPERATIONAL as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(EXIT_ERROR)
        except CatStrictError as e:
            click.echo(f"error: {type(e).__name__}: {e}", err=True)
            ctx.exit(EXIT_FALSE)


@click.group(cls=_Group)
def main():
    """Finite operads, pseudoalgebras and their strictification."""


# ------------------------------------------------------------------ validate

def _validate_value(kind, v):
    from .efs import is_bo, is_ff
    from .fincat import (compose_functors, validate_action, validate_category, validate_functor,
                         validate_group, validate_nat_trans)
    from .freemonad import check_rigid_base
    from .operad import validate_operad
    from .pseudoalg import validate_algebra_2cell, validate_pseudoalgebra, validate_pseudomorphism
    from .smc import validate_biased_smc

    if kind == "category":
        return validate_category(v)
    if kind == "functor":
        r = Report(f"functor {v.name}".rstrip())
        r.absorb(validate_category(v.dom), "domain ")
        r.absorb(validate_category(v.cod), "codomain ")
        r.absorb(validate_functor(v))
        return r
    if kind == "nat-trans":
        r = Report(f"transformation {v.name}".rstrip())
        for F in (v.src_f, v.tgt_f):
            r.absorb(_validate_value("functor", F))
        r.absorb(validate_nat_trans(v))
        return r
    if kind == "group":
        return validate_group(v)
    if kind == "action":
        r = Report("action")
        r.absorb(validate_group(v.group), "group ")
        r.absorb(validate_category(v.target), "category ")
        r.absorb(validate_action(v))
        return r
    if kind == "operad":
        return validate_operad(v)
    if kind == "based-category":
        r = Report(f"based category {v.category.name}".rstrip())
        r.absorb(validate_category(v.category))
        check_rigid_base(v)
        return r
    if kind == "pseudoalgebra":
        r = Report(f"algebra {v.name}".rstrip())
        r.absorb(_validate_value("based-category", v.carrier), "carrier ")
        r.absorb(validate_pseudoalgebra(v))
        return r
    if kind == "pseudomorphism":
        r = Report(f"morphism {v.name}".rstrip())
        r.absorb(_validate_value("pseudoalgebra", v.source), "source ")
        r.absorb(_validate_value("pseudoalgebra", v.target), "target ")
        r.absorb(validate_pseudomorphism(v))
        return r
    if kind == "two-cell":
        r = Report(f"2-cell {v.name}".rstrip())
        r.absorb(_validate_value("pseudomorphism", v.source), "source ")
        r.absorb(_validate_value("pseudomorphism", v.target), "target ")
        r.absorb(validate_algebra_2cell(v))
        return r
    if kind == "biased-smc":
        r = Report(f"biased {v.name}".rstrip())
        r.absorb(_validate_value("based-category", v.carrier), "carrier ")
        r.absorb(validate_biased_smc(v))
        return r
    if kind == "factorization":
        r = Report("factorization")
        for label, F in (("f ", v.f), ("e ", v.e), ("m ", v.m)):
            r.absorb(_validate_value("functor", F), label)
        if r.ok:
            r.check(is_bo(v.e), "e bijective on objects")
            r.check(is_ff(v.m), "m full and faithful")
            r.check(compose_functors(v.m, v.e) == v.f, "m∘e = f")
        return r
    if kind == "strictification":
        r = Report(f"strictification of {v['input'].name}".rstrip())
        r.absorb(_validate_value("pseudoalgebra", v["algebra"]), "St ")
        r.check(v["algebra"].is_strict(), "St strict")
        for label in ("unit", "counit"):
            r.absorb(validate_pseudomorphism(v[label]), label + " ")
        for label in ("upsilon", "nu"):
            r.absorb(validate_algebra_2cell(v[label]), label + " ")
        return r
    raise FormatError(f"no validator for {kind}")


@main.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--kind", default="auto", show_default=True,
              type=click.Choice(("auto",) + formats.KINDS), help="Expected kind of the file.")
def validate(path, kind):
    """Check a file against the axioms of its kind."""
    k, v = _read(path, None if kind == "auto" else kind)
    try:
        r = _validate_value(k, v)
    except _OPERATIONAL:
        raise
    except CatStrictError as e:
        r = _error_report(k, e)
    _finish(r)


# ---------------------------------------------------------------- generators

@main.command("gen-operad")
@click.option("--kind", "okind", required=True, type=click.Choice(("assoc", "perm", "perm-g")))
@click.option("--group", "group_path", type=click.Path(dir_okay=False),
              help="Group file (perm-g only).")
@click.option("--max-arity", "N", required=True, type=click.IntRange(0))
@click.option("--out", type=click.Path(dir_okay=False))
def gen_operad(okind, group_path, N, out):
    """Tabulate Assoc, P or P_G up to arity N."""
    group = None
    if okind == "perm-g":
        if group_path is None:
            raise FormatError("perm-g needs --group")
        _, group = _read(group_path, "group")
    _write(formats.dumps("operad", formats.enc_operad(formats.builtin_operad(okind, N, group))), out)


@main.command("free-monad")
@click.option("--operad", "operad_path", required=True, type=click.Path(dir_okay=False))
@click.option("--category", "category_path", required=True, type=click.Path(dir_okay=False),
              help="A based-category file.")
@click.option("--max-length", "L", required=True, type=click.IntRange(0))
@click.option("--out", type=click.Path(dir_okay=False))
def free_monad_cmd(operad_path, category_path, L, out):
    """The window of O(A) on forms of length at most L, as a based category."""
    from .freemonad import free_monad
    _, O = _read(operad_path, "operad")
    _, A = _read(category_path, "based-category")
    TA = free_monad(O, A, L)
    _write(formats.dumps("based-category", formats.enc_based(TA.based())), out)
    if out is not None:
        C = TA.category
        click.echo(f"O(A) window L={L}: {len(C.objects)} objects, {len(C.morphisms)} morphisms")
    if TA.nonfree_levels:
        click.echo(f"note: Σ acts non-freely at arities {TA.nonfree_levels}; "
                   "canonical forms use the lexicographically least representative", err=True)


@main.command()
@click.option("--algebra", "algebra_path", required=True, type=click.Path(dir_okay=False))
@click.option("--max-arity", "N", type=click.IntRange(0), help="Only check arities up to N.")
def coherence(algebra_path, N):
    """Check the pseudoalgebra axioms, optionally only up to arity N."""
    from .pseudoalg import restrict_arity, validate_pseudoalgebra
    _, P = _read(algebra_path, "pseudoalgebra")
    if N is not None:
        P = restrict_arity(P, N)
    _finish(validate_pseudoalgebra(P))


@main.command("from-smc")
@click.option("--smc", "smc_path", required=True, type=click.Path(dir_okay=False))
@click.option("--max-arity", "N", default=4, show_default=True, type=click.IntRange(0))
@click.option("--out", type=click.Path(dir_okay=False))
def from_smc(smc_path, N, out):
    """The P-pseudoalgebra of a biased symmetric monoidal category."""
    from .smc import from_symmetric_monoidal
    _, M = _read(smc_path, "biased-smc")
    _write(formats.emit(from_symmetric_monoidal(M, N)), out)


@main.command("to-smc")
@click.option("--algebra", "algebra_path", required=True, type=click.Path(dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False))
def to_smc(algebra_path, out):
    """Read off tensor, associator and symmetry from a P-pseudoalgebra."""
    from .smc import to_symmetric_monoidal
    _, P = _read(algebra_path, "pseudoalgebra")
    _write(formats.emit(to_symmetric_monoidal(P)), out)


@main.command()
@click.option("--functor", "functor_path", required=True, type=click.Path(dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False))
def factorize(functor_path, out):
    """Split a functor as a bijective-on-objects part followed by a fully faithful one."""
    from .efs import classify, factorize as fact
    _, f = _read(functor_path, "functor")
    fz = fact(f)
    if out is not None:
        _write(formats.emit(fz), out)
    cl = classify(f)
    click.echo(f"functor {f.name or '?'}: BO={cl.in_BO} FF={cl.in_FF}; "
               f"image has {len(fz.image.objects)} objects, {len(fz.image.morphisms)} morphisms")
    _finish(_validate_value("factorization", fz))


@main.command()
@click.option("--algebra", "algebra_path", required=True, type=click.Path(dir_okay=False))
@click.option("--max-length", "L", required=True, type=click.IntRange(0))
@click.option("--verify-equivalence", is_flag=True, help="Also check the adjoint equivalence.")
@click.option("--out", type=click.Path(dir_okay=False))
def strictify(algebra_path, L, verify_equivalence, out):
    """Build St A on forms of length at most L and check it."""
    from .pseudoalg import validate_pseudoalgebra
    from .strictify import strictify as build, verify_strictification
    _, A = _read(algebra_path, "pseudoalgebra")
    S = build(A, L)
    if verify_equivalence:
        r = verify_strictification(S)
    else:
        r = Report(f"strictification of {A.name or '?'}, L={L}")
        r.absorb(validate_pseudoalgebra(S.St), "St A ")
        r.check(S.St.is_strict(), "St A strict")
    if out is not None:
        _write(formats.dumps("strictification", formats.enc_strictification(S, r)), out)
    _finish(r)


if __name__ == "__main__":
    sys.exit(main())
