import io
import json
from importlib import resources

import jsonschema
import pytest

from centred_sums.cli import SEQUENCES, main

SCHEMA = json.loads(resources.files("centred_sums").joinpath("report.schema.json").read_text())


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_compute_text():
    assert run("compute", "--r", "2", "--n", "1") == (0, "1/2\n")
    assert run("compute", "--r", "0", "--n", "-5")[1].strip() == "0"


def test_compute_all_methods_agree():
    code, out = run("compute", "--r", "3", "--n", "4", "--method", "all", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert {row["actual"] for row in doc["results"]} == {"24"}
    assert len(doc["results"]) >= 5


def test_compute_kind_s():
    assert run("compute", "--r", "4", "--n", "6", "--kind", "S")[1].strip() == \
        run("compute", "--r", "4", "--n", "12")[1].strip()


def test_compute_csv():
    code, out = run("compute", "--r", "3", "--n", "5", "--format", "csv")
    assert code == 0 and out.splitlines() == ["method,kind,r,n,value", "direct,U,3,5,135/2"]


@pytest.mark.parametrize("argv", [
    ("compute", "--r", "-1", "--n", "3"),
    ("compute", "--r", "1", "--n", "0", "--method", "carlitz"),
    ("compute", "--r", "1", "--n", "3", "--format", "bfile"),
    ("oeis", "--name", "nope"),
    ("poly", "--family", "F", "--r", "0"),
    ("table", "--r", "3..1", "--n", "0..2"),
    ("frobnicate",),
])
def test_usage_and_domain_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_poly():
    code, out = run("poly", "--family", "F", "--r", "2")
    assert code == 0 and "x*y + x*z + y*z" in out
    code, out = run("poly", "--family", "Q", "--r", "3", "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)


def test_oeis_bfile_deterministic():
    a = run("oeis", "--name", "secant", "--count", "4", "--format", "bfile")
    b = run("oeis", "--name", "secant", "--count", "4", "--format", "bfile")
    assert a == b == (0, "0 1\n1 1\n2 5\n3 61\n")


def test_oeis_offsets():
    code, out = run("oeis", "--name", "reduced-tangent", "--count", "3", "--format", "bfile")
    assert out.splitlines()[0] == "1 1"


@pytest.mark.parametrize("name", sorted(SEQUENCES))
def test_every_sequence_emits(name):
    code, out = run("oeis", "--name", name, "--count", "6", "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), SCHEMA)


def test_triangles_positive():
    # the Pbar and Qbar families carry genuinely mixed signs; only P and Q rows are positive
    for name in ("p-triangle", "q-triangle"):
        assert all(v > 0 for v in SEQUENCES[name][2](20))


def test_verify_json_schema():
    code, out = run("verify", "--suite", "tables", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert all(r["status"] == "pass" for r in doc["results"])


def test_table_csv():
    code, out = run("table", "--r", "0..2", "--n", "0..3")
    lines = out.strip().splitlines()
    assert lines[0] == "r,n,numerator,denominator_log2"
    assert len(lines) == 1 + 3 * 4
    assert "2,1,1,1" in lines


def test_moment():
    code, out = run("moment", "--r", "2", "--n", "4", "--samples", "20000", "--seed", "3", "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), SCHEMA)
