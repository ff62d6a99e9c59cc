import json
import subprocess
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner

from catstrict import formats
from catstrict.cli import main
from catstrict.corpus import corpus_items, write_corpus
from catstrict.fincat import cyclic_group

REPO_CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def run(*args):
    return CliRunner().invoke(main, [str(a) for a in args], catch_exceptions=False)


@pytest.fixture(scope="module")
def corpus(tmp_path_factory):
    d = tmp_path_factory.mktemp("corpus")
    write_corpus(d)
    return d


def _edit(src, dst, fn):
    doc = json.loads(Path(src).read_text())
    fn(doc["payload"])
    Path(dst).write_text(json.dumps(doc))
    return dst


def test_checked_in_corpus_is_current():
    for name, value in corpus_items():
        assert (REPO_CORPUS / name).read_text() == formats.emit(value), name


@pytest.mark.parametrize("name", sorted(p.name for p in REPO_CORPUS.glob("*.json")))
def test_corpus_file_validates(name):
    res = run("validate", REPO_CORPUS / name)
    assert res.exit_code == 0, res.output
    assert "PASS" in res.output or "ok" in res.output.lower()


def test_dangling_morphism(corpus, tmp_path):
    def dangle(p):
        p["composition"][0][2] = "ghost"
    bad = _edit(corpus / "a3.category.json", tmp_path / "bad.json", dangle)
    res = run("validate", bad)
    assert res.exit_code == 1
    assert "ghost" in res.output


def test_corrupted_gamma_names_tuple(corpus, tmp_path):
    def corrupt(p):
        row = next(r for r in p["gamma"] if r[0] == "-2.1.2" and len(r[1]) == 2 and r[1] == ["-1.1", "-1.1"])
        row[2] = "-2.2.1"
    bad = _edit(corpus / "assoc3.operad.json", tmp_path / "bad.json", corrupt)
    res = run("validate", bad)
    assert res.exit_code == 1
    assert "FAIL" in res.output and "(1 2" in res.output.replace(",", "")


def test_parse_error_exits_2(tmp_path):
    p = tmp_path / "junk.json"
    p.write_text("{not json")
    res = run("validate", p)
    assert res.exit_code == 2
    assert "junk.json" in res.output


def test_missing_file_exits_2(tmp_path):
    assert run("validate", tmp_path / "nope.json").exit_code == 2


def test_unknown_kind_exits_2(corpus, tmp_path):
    doc = json.loads((corpus / "a3.category.json").read_text())
    doc["kind"] = "widget"
    p = tmp_path / "w.json"
    p.write_text(json.dumps(doc))
    assert run("validate", p).exit_code == 2


def test_kind_mismatch_exits_2(corpus):
    assert run("validate", corpus / "a3.category.json", "--kind", "functor").exit_code == 2


@pytest.mark.parametrize("kind,N,sizes", [("assoc", 3, [1, 1, 2, 6]), ("perm", 2, [1, 1, 2])])
def test_gen_operad_levels(kind, N, sizes):
    res = run("gen-operad", "--kind", kind, "--max-arity", N)
    assert res.exit_code == 0
    _, O = formats.parse(res.output, "operad")
    assert [len(O.level(n).objects) for n in range(N + 1)] == sizes
    if kind == "perm":
        assert len(O.level(2).morphisms) == 4


def test_gen_operad_with_group(corpus):
    res = run("gen-operad", "--kind", "perm-g", "--group", corpus / "c2.group.json", "--max-arity", 2)
    assert res.exit_code == 0
    _, O = formats.parse(res.output, "operad")
    assert len(O.level(1).objects) == 1 and len(O.level(2).objects) == 4
    assert run("gen-operad", "--kind", "perm-g", "--max-arity", 2).exit_code == 2


def test_gen_operad_output_validates(tmp_path):
    out = tmp_path / "p.json"
    assert run("gen-operad", "--kind", "perm", "--max-arity", 3, "--out", out).exit_code == 0
    assert run("validate", out).exit_code == 0


def test_free_monad(corpus, tmp_path):
    out = tmp_path / "t.json"
    res = run("free-monad", "--operad", corpus / "perm3.operad.json",
              "--category", corpus / "a2.based.json", "--max-length", 2, "--out", out)
    assert res.exit_code == 0, res.output
    assert run("validate", out).exit_code == 0
    too_long = run("free-monad", "--operad", corpus / "perm3.operad.json",
                   "--category", corpus / "a2.based.json", "--max-length", 4)
    assert too_long.exit_code == 2


def test_coherence(corpus):
    assert run("coherence", "--algebra", corpus / "a2-twisted.alg.json").exit_code == 0
    assert run("coherence", "--algebra", corpus / "a2-twisted.alg.json", "--max-arity", 2).exit_code == 0


def test_coherence_failure(corpus, tmp_path):
    def twist(p):
        row = p["phi"][0]
        row[-1] = "t_a" if row[-1] != "t_a" else "id_a"
    bad = _edit(corpus / "a2-twisted.alg.json", tmp_path / "bad.json", twist)
    res = run("coherence", "--algebra", bad)
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_smc_round_trip_is_byte_identical(corpus, tmp_path):
    alg, back = tmp_path / "m1.alg.json", tmp_path / "m1.smc.json"
    assert run("from-smc", "--smc", corpus / "m1.smc.json", "--out", alg).exit_code == 0
    assert run("to-smc", "--algebra", alg, "--out", back).exit_code == 0
    assert back.read_bytes() == (corpus / "m1.smc.json").read_bytes()


def test_factorize(corpus, tmp_path):
    out = tmp_path / "f.json"
    res = run("factorize", "--functor", corpus / "a3-swap.functor.json", "--out", out)
    assert res.exit_code == 0
    assert "BO=True FF=True" in res.output
    assert run("validate", out).exit_code == 0


def test_strictify(corpus, tmp_path):
    out = tmp_path / "s.json"
    res = run("strictify", "--algebra", corpus / "a2-twisted.alg.json", "--max-length", 3,
              "--verify-equivalence", "--out", out)
    assert res.exit_code == 0, res.output
    assert run("validate", out).exit_code == 0


def _commands(d, out):
    return [
        ("validate", d / "m1.smc.json"),
        ("gen-operad", "--kind", "perm", "--max-arity", 3),
        ("gen-operad", "--kind", "perm-g", "--group", d / "c2.group.json", "--max-arity", 2),
        ("free-monad", "--operad", d / "assoc3.operad.json", "--category", d / "a3.based.json",
         "--max-length", 2),
        ("coherence", "--algebra", d / "a2-twisted.alg.json"),
        ("from-smc", "--smc", d / "a2.smc.json", "--max-arity", 3),
        ("to-smc", "--algebra", d / "a2.alg.json"),
        ("factorize", "--functor", d / "a3-swap.functor.json", "--out", out),
        ("strictify", "--algebra", d / "a2-twisted.alg.json", "--max-length", 2, "--out", out),
    ]


def test_every_subcommand_is_deterministic(corpus, tmp_path):
    out = tmp_path / "o.json"
    for cmd in _commands(corpus, out):
        runs = []
        for _ in range(2):
            res = run(*cmd)
            runs.append((res.exit_code, res.output, out.read_bytes() if out.exists() else b""))
        assert runs[0] == runs[1], cmd[0]


def test_console_script(corpus):
    proc = subprocess.run([sys.executable, "-m", "catstrict.cli", "validate", str(corpus / "c2.group.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
