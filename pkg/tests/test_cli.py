import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from hopfinv.cli import Report, parse_field, parse_report, render_report, run

GOLDEN = Path(__file__).parent / "golden"


def call(*argv, env=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("defs")
    for model, extra in [("sweedler", []), ("example31", []), ("sign", [])]:
        assert call("demo", "dump", model, "--out", str(root / model), *extra)[0] == 0
    sw = json.loads((root / "sweedler" / "hopf.json").read_text())
    sw["antipode"][2] = ["0", "0", "0", "1"]
    (root / "broken.json").write_text(json.dumps(sw))
    short = json.loads((root / "sweedler" / "hopf.json").read_text())
    short["mult"][0] = short["mult"][0][:3]
    (root / "short.json").write_text(json.dumps(short))
    (root / "garbage.json").write_text("{not json")
    return root


def ex(files, name="example31"):
    d = files / name
    return [str(d / "hopf.json"), str(d / "algebra.json"), str(d / "action.json")]


def test_exit_code_matrix(files, monkeypatch):
    sw = str(files / "sweedler" / "hopf.json")
    assert call("hopf", "verify", sw)[0] == 0
    code, out, _ = call("hopf", "verify", str(files / "broken.json"))
    assert code == 1 and "[FAIL] antipode" in out and "witness" in out
    code, _, err = call("hopf", "verify", str(files / "short.json"))
    assert code == 2 and "mult[0]" in err
    assert call("hopf", "verify", str(files / "garbage.json"))[0] == 2
    assert call("hopf", "verify", str(files / "missing.json"))[0] == 2
    assert call("act", "integrality", *ex(files), "--element", "y", "--over", "H")[0] == 1
    assert call("act", "integrality", *ex(files), "--element", "y +", "--over", "H")[0] == 2
    monkeypatch.setenv("HOPFINV_WITNESS_BUDGET", "2")
    assert call("act", "integrality", *ex(files), "--element", "y", "--over", "H")[0] == 3


def test_gb_budget_exit_code(files, monkeypatch):
    d = files / "big"
    assert call("demo", "dump", "taft", "--N", "3", "--out", str(d))[0] == 0
    monkeypatch.setenv("HOPFINV_GB_BUDGET", "5")
    assert call("hopf", "analyze", str(d / "hopf.json"))[0] == 3


def test_hopf_analyze_sweedler_text(files):
    code, out, _ = call("hopf", "analyze", str(files / "sweedler" / "hopf.json"))
    assert code == 0
    assert "semisimple: false" in out and "integral: x + g*x" in out and "pointed: true" in out


def test_golden_analyze_is_byte_identical():
    code, out, _ = call("--json", "hopf", "analyze", str(GOLDEN / "sweedler.json"))
    assert code == 0
    assert out == (GOLDEN / "analyze_sweedler.json").read_text()
    assert call("--json", "hopf", "analyze", str(GOLDEN / "sweedler.json"))[1] == out


def test_machine_output_roundtrips(files):
    _, out, _ = call("--json", "act", "invariants", *ex(files), "--sub", "G", "--degree", "4")
    rep = parse_report(out)
    assert render_report(rep, "machine") == out
    assert rep.results["basis"] == ["1", "y", "y^2", "y^3", "y^4"]


def test_empty_report_is_header_only():
    assert render_report(Report("nothing")) == "== nothing ==\n"


def test_act_commands(files):
    code, out, _ = call("act", "verify", *ex(files), "--degree", "5")
    assert code == 0 and "[PASS] multiplicative" in out
    _, out, _ = call("--json", "act", "invariants", *ex(files), "--sub", "H", "--degree", "4")
    assert json.loads(out)["results"]["basis"] == ["1"]
    code, out, _ = call("--json", "act", "integrality", *ex(files), "--element", "y", "--over", "gens", "--gens", "y")
    assert code == 0 and json.loads(out)["results"]["witness"]["polynomial"] == "T - y"
    code, out, _ = call("--json", "act", "integrality", *ex(files, "sign"), "--element", "y", "--over", "G", "--degree", "4")
    assert code == 0 and json.loads(out)["results"]["witness"]["polynomial"] == "T^2 - y^2"


def test_hopf_quotient(files, tmp_path):
    emit = tmp_path / "q.json"
    code, out, _ = call("--json", "hopf", "quotient", str(files / "sweedler" / "hopf.json"), "--gens", "g - 1", "--emit", str(emit))
    res = json.loads(out)["results"]
    assert code == 0 and res["ideal_dim"] == 3 and res["quotient_basis"] == ["1"]
    assert call("hopf", "verify", str(emit))[0] == 0


def test_demo_counterexample():
    code, out, _ = call("--json", "demo", "counterexample", "--N", "2", "--degree", "8")
    res = json.loads(out)["results"]
    assert code == 0
    assert res["A^H"] == ["1"]
    assert res["A^G"] == ["1"] + ["y"] + [f"y^{k}" for k in range(2, 9)]
    assert res["y over A^H"]["result"] == "none up to (8, 8)"


def test_demo_charp():
    code, out, _ = call("--json", "demo", "charp", "--p", "3", "--N", "2", "--degree", "9")
    res = json.loads(out)["results"]
    assert code == 0
    assert res["A^H"] == ["1", "y^3", "y^6", "y^9"]
    assert res["chain_levels"] == [["y"], ["y^3"]]


def test_dump_reload_is_identical(files, tmp_path):
    for model in ("sweedler", "example31", "sign"):
        for name in ("hopf.json", "algebra.json", "action.json"):
            src = files / model / name
            if not src.exists():
                continue
            if name == "hopf.json":
                from hopfinv.findim import HopfAlgebraData

                obj = HopfAlgebraData.from_json(json.loads(src.read_text())).to_json()
                assert json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n" == src.read_text()


def test_parse_field_option():
    assert parse_field("Q").kind == "rational"
    assert parse_field("F_5").p == 5 and parse_field("F3").p == 3
    assert parse_field("Q(zeta_3)").N == 3
    with pytest.raises(ValueError):
        parse_field("R")


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "hopfinv.cli", "demo", "counterexample", "--N", "2", "--degree", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and "[PASS] A^H = k" in proc.stdout
