import io
import json
import subprocess
import sys

import pytest

from homolab.cli import main

HYPER = "field 7\nring x y\nideal x*y\nmodule M\n gens e0:0\n rels x*e0\nmodule K\n  gens e0:0\n  rels x*e0, y*e0\n"


@pytest.fixture
def hyper(tmp_path):
    f = tmp_path / "hyper.inst"
    f.write_text(HYPER, encoding="utf-8")
    return str(f)


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_invariant_pd_json(hyper):
    code, out = run(["invariant", hyper, "--module", "M", "--which", "pd", "--json"])
    assert code == 0
    assert json.loads(out) == {"pd": {"status": "infinite", "certificate": "ab-termination"}}


def test_invariant_all_text(hyper):
    code, out = run(["invariant", hyper, "--module", "K", "--which",
                     "pd,id,gdim,gid,depth,dim,grade,type,betti", "--length", "2"])
    assert code == 0
    keys = [line.split(":")[0] for line in out.splitlines()]
    assert keys == ["pd", "id", "gdim", "gid", "depth", "dim", "grade", "type", "betti"]


def test_json_is_key_sorted(hyper):
    _, out = run(["invariant", hyper, "--module", "M", "--json"])
    data = json.loads(out)
    assert out.strip() == json.dumps(data, indent=2, sort_keys=True)


def test_ext(hyper):
    code, out = run(["ext", hyper, "-M", "M", "-N", "M", "--max-i", "3", "--json"])
    assert code == 0
    gens = [r["generators"] for r in json.loads(out)["ext"]]
    assert gens == [1, 0, 1, 0]


def test_resolve(hyper):
    code, out = run(["resolve", hyper, "--module", "K", "--length", "3"])
    assert code == 0 and "total: 1 2 2 2" in " ".join(out.split())


def test_deficiency_and_spherical(hyper):
    code, out = run(["deficiency", hyper, "--module", "K", "--json"])
    assert code == 0
    rows = json.loads(out)["deficiency"]
    assert [r["zero"] for r in rows] == [False, True, True]
    code, out = run(["construct-spherical", hyper, "--module", "K", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["report"]["naturalMap"]["isIsomorphism"]
    assert data["instance"].startswith("field 7")


@pytest.mark.parametrize("argv", [
    ["invariant", "x.inst", "--bogus"],
    ["frobnicate"],
    [],
    ["verify", "--suite", "P99"],
])
def test_usage_errors_exit_1(argv, capsys):
    code, _ = run(argv)
    assert code == 1
    assert "usage" in capsys.readouterr().err or argv[-1] == "P99"


def test_input_errors_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.inst"
    bad.write_text("field 9\nring x\n", encoding="utf-8")
    assert run(["invariant", str(bad), "--module", "M"])[0] == 1
    assert "line 1, column 7" in capsys.readouterr().err
    assert run(["invariant", str(tmp_path / "missing.inst"), "--module", "M"])[0] == 1


def test_verify_on_directory(tmp_path, hyper):
    out_json = tmp_path / "report.json"
    d = tmp_path
    code, out = run(["verify", "--suite", "P2,P4", "--instances", str(d), "--json", str(out_json)])
    assert code == 0
    rep = json.loads(out_json.read_text())
    assert [c["probe"] for c in rep["cells"]] == ["P2", "P4"]
    assert rep["cells"][0]["outcome"] == "Verified"


def test_verify_exit_2_on_refuted(monkeypatch, tmp_path):
    from homolab.verify import probes as probes_mod
    from homolab.verify.core import Case

    def always_false(ctx, inst):
        c = Case("x")
        c.conclude("false", False)
        return [c]
    fake = probes_mod.Probe("P4", "fake", "", always_false)
    monkeypatch.setattr(probes_mod, "_CATALOG", (fake,))
    (tmp_path / "a.inst").write_text(HYPER, encoding="utf-8")
    code, out = run(["verify", "--suite", "all", "--instances", str(tmp_path)])
    assert code == 2 and "REFUTED P4" in out


def test_console_entry_point_module():
    proc = subprocess.run([sys.executable, "-m", "homolab.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("homolab")
