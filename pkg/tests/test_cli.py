import io
import json
import os
import shutil
import subprocess
from fractions import Fraction

import pytest

from hopfkit import cli
from hopfkit import examples as ex

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")

STRUCTURE_PAIRS = [
    ("quasi", "smash-bicomodule-kZ2", 2),
    ("quasi", "smash-bicomodule-sweedler", 2),
    ("weak", "groupoid-3-regular", 3),
    ("braided", "plain-regular-bicomodule", 1),
    ("braided", "braided-smash-bicomodule", 2),
]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = cli.main(list(argv), out, err)
    return rc, out.getvalue(), err.getvalue()


def data(name):
    return os.path.join(DATA, name)


def write(path, doc):
    with open(path, "w") as fh:
        json.dump(doc, fh)
    return str(path)


def load(path):
    with open(path) as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# verify

def test_verify_group_algebra():
    rc, out, err = run("verify", data("group-z2.json"))
    assert rc == 0
    ids = [e["id"] for e in json.loads(out)["identities"]]
    assert {"q1", "q2", "q3", "q4", "q5", "q6"} <= set(ids)
    assert "all identities hold" in err


def test_verify_twisted_reports_every_quasi_axiom():
    rc, out, _ = run("verify", data("quasi-kZ2-twisted.json"))
    rep = json.loads(out)
    assert rc == 0 and rep["ok"]
    assert len(rep["identities"]) == 14


def test_bad_associator_inverse_is_named():
    rc, out, err = run("verify", data("bad-phi-inverse.json"))
    assert rc == 2
    failed = [e for e in json.loads(out)["identities"] if not e["ok"]]
    assert "phi-inverse" in [e["id"] for e in failed]
    assert all(e["witness"] is not None for e in failed)
    assert "FAIL phi-inverse" in err


@pytest.mark.parametrize("fname", sorted(f for f in os.listdir(DATA) if f != "bad-phi-inverse.json"))
def test_shipped_data_verifies(fname):
    assert run("verify", data(fname))[0] == 0


def test_text_format():
    rc, out, _ = run("--format", "text", "verify", data("sweedler.json"))
    assert rc == 0 and out.startswith("PASS ")
    rc2, out2, _ = run("verify", data("sweedler.json"), "--format", "text")
    assert out2 == out


def test_kind_mismatch_is_usage_error():
    rc, _, err = run("verify", data("sweedler.json"), "--kind", "weak-hopf")
    assert rc == 1 and "quasi-hopf" in err


def test_field_override():
    assert run("--field", "5", "verify", data("group-z2.json"))[0] == 0
    assert run("--field", "3", "verify", data("sweedler.json"))[0] == 0
    assert run("--field", "6", "verify", data("sweedler.json"))[0] == 1


def test_max_dim(monkeypatch):
    monkeypatch.setenv("HOPFKIT_MAX_DIM", "3")
    rc, _, err = run("verify", data("sweedler.json"))
    assert rc == 1 and "HOPFKIT_MAX_DIM" in err
    assert run("verify", data("group-z2.json"))[0] == 0
    monkeypatch.setenv("HOPFKIT_MAX_DIM", "lots")
    assert run("verify", data("group-z2.json"))[0] == 1


def test_over_file(tmp_path):
    doc = load(data("graded-yd-algebra.json"))
    H = doc.pop("over")
    path = write(tmp_path / "A.json", doc)
    hpath = write(tmp_path / "H.json", H)
    rc, _, err = run("verify", path)
    assert rc == 1 and "over" in err
    assert run("verify", path, "--over", hpath)[0] == 0
    assert run("verify", path, "--over", data("groupoid-3.json"))[0] == 1
    assert run("verify", path, "--over", data("graded-yd-algebra.json"))[0] == 1


# ---------------------------------------------------------------------------
# parse errors

def test_missing_file():
    rc, _, err = run("verify", "/nonexistent/file.json")
    assert rc == 1 and "file.json" in err


def test_bad_json_reports_position(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"format": 1,\n  "kind": }')
    rc, _, err = run("verify", str(p))
    assert rc == 1 and "line 2" in err


@pytest.mark.parametrize("edit,needle", [
    (lambda d: d["tensors"]["mu"][0][0].__setitem__(0, "1/x"), "tensors.mu[0][0][0]"),
    (lambda d: d["tensors"].pop("S"), "S"),
    (lambda d: d["tensors"].__setitem__("extra", [1]), "extra"),
    (lambda d: d.__setitem__("kind", "mystery"), "mystery"),
    (lambda d: d.__setitem__("format", 99), "format"),
    (lambda d: d["tensors"].__setitem__("unit", ["1", "0", "0"]), "shape"),
    (lambda d: d.__setitem__("field", {"kind": "prime", "p": 9}), "field"),
])
def test_malformed_files_exit_1(tmp_path, edit, needle):
    doc = load(data("group-z2.json"))
    edit(doc)
    rc, out, err = run("verify", write(tmp_path / "bad.json", doc))
    assert rc == 1 and out == ""
    assert needle in err


def test_usage_errors():
    assert run()[0] == 1
    assert run("frobnicate")[0] == 1
    assert run("examples", "emit")[0] == 1
    rc, _, err = run("examples", "emit", "nope")
    assert rc == 1 and "nope" in err
    assert run("examples", "emit", "group-algebra", "--param", "n")[0] == 1
    assert run("examples", "emit", "group-algebra", "--param", "size=3")[0] == 1


# ---------------------------------------------------------------------------
# examples

def test_list():
    rc, out, _ = run("examples", "list")
    rows = json.loads(out)
    assert rc == 0 and len(rows) >= 8
    assert [r["name"] for r in rows] == list(ex.CATALOG)
    rc, out, _ = run("--format", "text", "examples", "list")
    assert "[fails: eqyd]" in out


@pytest.mark.parametrize("name", sorted(ex.CATALOG))
def test_emit_then_verify(tmp_path, name):
    path = str(tmp_path / f"{name}.json")
    assert run("examples", "emit", name, "--out", path)[0] == 0
    rc, out, _ = run("verify", path)
    failed = [e["id"] for e in json.loads(out)["identities"] if not e["ok"]]
    assert failed == ex.expected_failures(name)
    assert rc == (0 if not failed else 2)


@pytest.mark.parametrize("name", sorted(ex.CATALOG))
def test_dump_load_dump_is_identity(name):
    doc = cli.dump_doc(ex.build_example(name))
    again = cli.dump_doc(cli.load_doc(json.loads(cli.dumps(doc))))
    assert cli.dumps(again) == cli.dumps(doc)


def test_emit_params_and_stdout():
    rc, out, _ = run("examples", "emit", "group-algebra", "--param", "n=3", "--param", "p=5")
    doc = json.loads(out)
    assert rc == 0 and doc["field"] == {"kind": "prime", "p": 5} and len(doc["labels"]) == 3


def test_shipped_sample_matches_catalog():
    rc, out, _ = run("examples", "emit", "group-algebra")
    with open(data("group-z2.json")) as fh:
        assert fh.read() == out


# ---------------------------------------------------------------------------
# structure theorem

@pytest.mark.parametrize("variant,stem,dimA", STRUCTURE_PAIRS)
def test_structure_theorem(tmp_path, variant, stem, dimA):
    rc, _, err = run("structure-theorem", data(f"{stem}-H.json"), data(f"{stem}.json"),
                     "--variant", variant, "--out", str(tmp_path))
    assert rc == 0, err
    A = load(tmp_path / "A.json")
    assert len(A["labels"]) == dimA and A["kind"] == "module-algebra"
    iso = load(tmp_path / "iso.json")
    n = iso["shape"][0]
    M = [[Fraction(x) for x in row] for row in iso["matrix"]]
    Minv = [[Fraction(x) for x in row] for row in iso["inverse"]]
    prod = [[sum(M[i][k] * Minv[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert prod == [[int(i == j) for j in range(n)] for i in range(n)]
    assert load(tmp_path / "report.json")["ok"]
    assert run("verify", str(tmp_path / "A.json"))[0] == 0


def test_structure_theorem_reruns_are_byte_identical(tmp_path):
    outs = []
    for k in range(2):
        d = tmp_path / f"run{k}"
        run("structure-theorem", data("smash-bicomodule-sweedler-H.json"),
            data("smash-bicomodule-sweedler.json"), "--variant", "quasi", "--out", str(d))
        outs.append({f: (d / f).read_bytes() for f in sorted(os.listdir(d))})
    assert outs[0] == outs[1] and len(outs[0]) == 3


def test_structure_theorem_without_v(tmp_path):
    doc = load(data("smash-bicomodule-kZ2.json"))
    doc["tensors"].pop("v")
    rc, _, err = run("structure-theorem", data("smash-bicomodule-kZ2-H.json"),
                     write(tmp_path / "B.json", doc), "--variant", "quasi",
                     "--out", str(tmp_path / "out"))
    assert rc == 1 and "v" in err


def test_structure_theorem_with_bad_v(tmp_path):
    doc = load(data("smash-bicomodule-kZ2.json"))
    doc["tensors"]["v"][1][1] = "5"
    out = tmp_path / "out"
    rc, _, _ = run("structure-theorem", data("smash-bicomodule-kZ2-H.json"),
                   write(tmp_path / "B.json", doc), "--variant", "quasi", "--out", str(out))
    assert rc == 2
    rep = load(out / "report.json")
    assert not rep["ok"] and any(not e["ok"] for e in rep["identities"])
    assert not (out / "A.json").exists()


def test_structure_theorem_variant_mismatch(tmp_path):
    rc, _, _ = run("structure-theorem", data("groupoid-3-regular-H.json"),
                   data("groupoid-3-regular.json"), "--variant", "quasi", "--out", str(tmp_path))
    assert rc == 1


@pytest.mark.skipif(shutil.which("hopfkit") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["hopfkit", "verify", data("group-z2.json")], capture_output=True,
                         text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["ok"]
