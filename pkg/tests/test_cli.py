import json
import random

import pytest

from glrelevance.cli import main
from glrelevance.dsl import print_parameter
from glrelevance.report import decode_report

from conftest import SYMBOL_POOL, random_parameter


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_relevant(capsys):
    code, out, _ = run(capsys, "check", "L(a) x S2", "L(a) x S1")
    assert code == 0
    verdict, _, body = out.partition("\n")
    assert verdict == "relevant"
    assert decode_report(json.loads(body)).relevant


def test_check_irrelevant(capsys):
    code, out, _ = run(capsys, "check", "L(a) x S2", "L(b) x S1")
    assert code == 1
    assert out.startswith("irrelevant\n")
    assert "witness" not in json.loads(out.partition("\n")[2])


def test_type(capsys):
    code, out, _ = run(capsys, "type", "L(a,k=2) x S3")
    assert code == 0
    assert out.splitlines() == [
        "sl2_type: (3,3)",
        "associated_partition: (2,2,2)",
        "nt: 2",
        "dim: 6",
        "generic: false",
        "arthur_type: true",
    ]


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "L(a) x S3 + L(a) x S1", "2*L(a) x S2")
    assert code == 0
    assert out.splitlines() == ["#0  L(a) x S1  ->  I", "#1  L(a) x S3  ->  J", "psi0 = 0"]
    code, out, _ = run(capsys, "witness", "--json", "L(a,s=1/3) x S2", "L(a,s=1/6) x S2")
    assert json.loads(out) == {"I": [], "J": [], "K": [0], "psi0": "0"}
    code, out, _ = run(capsys, "witness", "L(a) x S2", "L(b) x S1")
    assert code == 1


def test_lambda(capsys):
    code, out, _ = run(capsys, "lambda", "L(a) x S2", "L(b) x S1", "--eta", "L(a)", "--a", "1")
    assert code == 0
    assert out.splitlines()[1] == "Lambda(L(a), 1; sigma, pi) = -1"
    code, out, _ = run(capsys, "lambda", "L(a) x S2", "L(b) x S1")
    lines = out.splitlines()
    assert lines[0] == "a_max = 2"
    assert "L(a)\t1\t0\t-1" in lines


def test_close(capsys):
    assert run(capsys, "close", "L(a) x S3", "L(a) x S2")[1].strip() == "(3) (2) close"
    assert run(capsys, "close", "L(a) x S3", "L(a) x S1")[1].strip() == "(3) (1) not close"


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "L(a", "0"],
        ["check", "L(a,k=2) x S1", "0", "--corank-one"],
        ["check", "L(a,k=3) x S1", "0", "--field", "real"],
        ["lambda", "0", "0", "--eta", "L(a)"],
        ["lambda", "0", "0", "--eta", "L(", "--a", "1"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_corank_one_accepted(capsys):
    assert run(capsys, "check", "L(a,k=2) x S1", "L(b) x S1", "--corank-one")[0] == 0


def test_figures(tmp_path, capsys):
    pair = tmp_path / "pair.png"
    kind = tmp_path / "type.png"
    assert run(capsys, "check", "L(a) x S3", "L(a) x S2", "--figure", str(pair))[0] == 0
    assert run(capsys, "type", "L(a,k=2) x S3", "--figure", str(kind))[0] == 0
    for path in (pair, kind):
        assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def _spec_file(tmp_path, **extra):
    doc = {"label_pool": ["L(a)", "L(c,s=1/3)"], "max_d": 2, "max_mult": 1, "max_dim": 4}
    doc.update(extra)
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(doc))
    return str(path)


def test_enumerate(tmp_path, capsys):
    code, out, _ = run(capsys, "enumerate", "--spec", _spec_file(tmp_path))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0" and len(lines) == len(set(lines))


def test_enumerate_resource_limit(tmp_path, capsys):
    code, _, err = run(capsys, "enumerate", "--spec", _spec_file(tmp_path, cardinality_cap=2))
    assert code == 3 and "resource limit" in err


def test_selftest_deterministic(tmp_path, capsys):
    spec = _spec_file(tmp_path)
    fig = tmp_path / "selftest.png"
    code, first, _ = run(capsys, "selftest", "--spec", spec, "--figure", str(fig))
    assert code == 0 and json.loads(first)["ok"]
    assert fig.exists()
    assert run(capsys, "selftest", "--spec", spec)[1] == first


def test_selftest_violation_exit(tmp_path, capsys, monkeypatch):
    import glrelevance.corpus as corpus

    monkeypatch.setattr(corpus, "is_relevant_criterion", lambda p, q: False)
    code, _, err = run(capsys, "selftest", "--spec", _spec_file(tmp_path), "--workers", "1")
    assert code == 1 and "counterexample: pi = " in err


def test_bad_spec_file(tmp_path, capsys):
    assert run(capsys, "selftest", "--spec", str(tmp_path / "missing.json"))[0] == 2


def test_check_and_witness_agree(capsys):
    rng = random.Random(19)
    for _ in range(40):
        p = print_parameter(random_parameter(rng, SYMBOL_POOL, max_blocks=2, max_d=3, max_mult=2))
        q = print_parameter(random_parameter(rng, SYMBOL_POOL, max_blocks=2, max_d=3, max_mult=2))
        check = run(capsys, "check", p, q)[0]
        witness = run(capsys, "witness", p, q)[0]
        assert check == witness
