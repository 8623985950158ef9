import io
import json
import subprocess
import sys

import pytest

from mediangle.cli import FAILED, NOT_APPLICABLE, OK, USAGE, main
from mediangle.io import parse_graph, parse_system
from mediangle.mediangle import revalidate_cycle_witness
from mediangle.order import ApexResult, revalidate_apex_witness


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def generate(tmp_path, name, *argv):
    code, text, _ = run("generate", *argv)
    assert code == OK
    path = tmp_path / name
    path.write_text(text)
    return str(path)


@pytest.fixture
def files(tmp_path):
    return {
        "c6": generate(tmp_path, "c6.graph", "even-cycle", "6"),
        "q3": generate(tmp_path, "q3.graph", "hypercube", "3"),
        "a3": generate(tmp_path, "a3.graph", "coxeter", "A3"),
        "c5": generate(tmp_path, "c5.graph", "cycle", "5"),
        "k23": generate(tmp_path, "k23.graph", "complete-bipartite", "2", "3"),
        "u4": generate(tmp_path, "uniform4-topes.graph", "uniform4-topes"),
        "u4sv": generate(tmp_path, "uniform4.sv", "uniform4"),
    }


def test_generate_formats(files):
    with open(files["c6"]) as fh:
        assert parse_graph(fh.read()).n == 6
    with open(files["u4sv"]) as fh:
        assert len(parse_system(fh.read())) == 51


def test_generate_arrangement():
    code, text, _ = run("generate", "arrangement", "--normals", "1,0,0;0,1,0;0,0,1")
    assert code == OK and len(parse_system(text)) == 27


def test_check_mediangle_c6(files):
    code, out, _ = run("check", "mediangle", files["c6"])
    assert code == OK
    assert json.loads(out) == {"is_mediangle": True}


def test_check_mediangle_uniform4_witness(files):
    code, out, _ = run("check", "mediangle", files["u4"])
    assert code == FAILED
    doc = json.loads(out)
    with open(files["u4"]) as fh:
        g = parse_graph(fh.read())
    assert revalidate_cycle_witness(g, tuple(doc["witness"]))


def test_check_apiculate_uniform4_witness(files):
    code, out, _ = run("check", "apiculate", files["u4"])
    assert code == FAILED
    w = json.loads(out)["witness"]
    with open(files["u4"]) as fh:
        g = parse_graph(fh.read())
    assert revalidate_apex_witness(g, ApexResult(w["u"], w["x"], w["y"], frozenset(w["apices"])))


def test_check_partial_cube(files):
    assert run("check", "partial-cube", files["q3"])[0] == OK
    code, out, _ = run("check", "partial-cube", files["c5"])
    assert code == FAILED and json.loads(out)["kind"] == "NotBipartite"
    code, out, _ = run("check", "partial-cube", files["k23"])
    assert code == FAILED and json.loads(out)["kind"] == "NotPartialCube"


def test_check_om_missing_zero(tmp_path):
    bad = tmp_path / "bad.sv"
    bad.write_text("ground 1\n+\n-\n")
    code, out, _ = run("check", "om", str(bad))
    assert code == FAILED
    doc = json.loads(out)
    assert doc["is_OM"] is False and doc["missing"] == "0"


def test_check_simplicial(files, tmp_path):
    assert run("check", "simplicial", files["u4sv"])[0] == FAILED
    bad = tmp_path / "bad.sv"
    bad.write_text("ground 1\n0\n+\n")
    assert run("check", "simplicial", str(bad))[0] == NOT_APPLICABLE


def test_cells_q3(files):
    code, out, _ = run("cells", files["q3"])
    assert code == OK
    assert json.loads(out) == {"cells": 27, "by_rank": {"0": 8, "1": 12, "2": 6, "3": 1}, "euler": 1}


def test_reconstruct(files):
    code, out, _ = run("reconstruct", files["c6"])
    assert code == OK and len(parse_system(out)) == 13


def test_verify_theorem2_uniform4(files):
    code, out, _ = run("verify", "theorem2", files["u4"])
    assert code == OK
    data = json.loads(out)
    assert {k: data[k] for k in ("P1", "P2", "P3", "equivalent")} == {
        "P1": False, "P2": False, "P3": False, "equivalent": True,
    }


def test_verify_theorem1(files):
    assert run("verify", "theorem1", files["a3"])[0] == OK
    assert run("verify", "theorem1", files["u4"])[0] == NOT_APPLICABLE


def test_verify_lemmas(files):
    assert run("verify", "lemmas", files["c6"], "--seed", "3")[0] == OK


def test_zone(files):
    code, out, _ = run("zone", files["q3"], "--class", "1")
    assert code == OK
    z = parse_graph(out)
    assert (z.n, z.edge_count) == (4, 4)
    assert run("zone", files["q3"], "--class", "9")[0] == USAGE


def test_explore_downward(files):
    code, out, _ = run("explore", "downward", files["q3"], "--z", "0", "--u", "7", "--s", "1,2")
    assert code == OK
    doc = json.loads(out)
    assert doc["found"] and doc["cell"] == [0, 1, 2, 3]
    code, out, _ = run("explore", "downward", files["a3"], "--samples", "5")
    assert code == OK and len(json.loads(out)["rows"]) == 5


def test_explore_zone(files):
    code, out, _ = run("explore", "zone", files["q3"], "--class", "0")
    assert code == OK and json.loads(out)["zone_mediangle"] is True


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["generate", "hypercube"],
        ["generate", "hypercube", "x"],
        ["generate", "nope", "1"],
        ["generate", "coxeter", "Z9"],
        ["generate", "arrangement"],
        ["check", "mediangle", "/nonexistent/file"],
        ["explore", "zone", "/nonexistent/file"],
    ],
)
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == USAGE and err.startswith("error:") and out == ""


def test_malformed_graph_file(tmp_path):
    p = tmp_path / "x.graph"
    p.write_text('{"n":2,"edges":[[0,0]]}')
    code, _, err = run("check", "mediangle", str(p))
    assert code == USAGE and "self-loop" in err


def test_byte_identical(files):
    a = run("explore", "downward", files["a3"], "--samples", "8", "--seed", "11")
    b = run("explore", "downward", files["a3"], "--samples", "8", "--seed", "11")
    assert a == b
    assert run("generate", "tree", "9", "--seed", "4") == run("--seed", "4", "generate", "tree", "9")
    assert run("verify", "theorem1", files["q3"]) == run("verify", "theorem1", files["q3"])


def test_timing_flag(files):
    _, out, _ = run("verify", "theorem1", files["q3"], "--timing")
    assert "elapsed" in json.loads(out)
    _, out, _ = run("verify", "theorem1", files["q3"])
    assert "elapsed" not in json.loads(out)


def test_console_entry(files):
    res = subprocess.run([sys.executable, "-m", "mediangle.cli", "check", "mediangle", files["c6"]],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout) == {"is_mediangle": True}
