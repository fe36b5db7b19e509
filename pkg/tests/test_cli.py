import json
import re
from fractions import Fraction as F
from pathlib import Path

import pytest

from trizeta.cli import RunReport, SuiteResult, emit_report, from_json, main, run_plan, strip_timing, to_json
from trizeta.plan import PlanError, parse_plan
from trizeta.zeta.report import VerificationReport

ROOT = Path(__file__).resolve().parents[1]

RANKIN = """
[plan]
seed = 42

[rankin]
family = rankin
r = 3
ell = 0..2
N = 8
"""


def write(tmp_path, text, name="plan.ini"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_empty_plan(tmp_path, capsys):
    rep = run_plan(write(tmp_path, "[plan]\nseed = 1\n"))
    assert rep.suites == [] and rep.ok
    assert main([write(tmp_path, "")]) == 0
    d = json.loads(emit_report(rep, "json"))
    assert d["suites"] == [] and d["totals"] == {"pass": 0, "fail": 0, "skipped": 0}


def test_rankin_plan_three_passes(tmp_path):
    rep = run_plan(write(tmp_path, RANKIN))
    (suite,) = rep.suites
    assert [r.status for r in suite.reports] == ["pass"] * 3
    assert rep.totals == {"pass": 3, "fail": 0, "skipped": 0}


def test_fault_plan_exit_code(tmp_path, capsys):
    path = write(tmp_path, RANKIN + "points = 1\nperturb = true\n")
    out = tmp_path / "r.json"
    assert main([path, "--format", "json", "--out", str(out)]) == 1
    d = json.loads(out.read_text())
    for rep in d["suites"][0]["reports"]:
        assert rep["status"] == "fail" and rep["witness"]
        w = rep["witness"]
        assert all(isinstance(w[k], str) for k in ("expected", "actual") if k in w)
    assert "FAIL" in capsys.readouterr().out


@pytest.mark.parametrize("text, line, msg", [
    ("[plan]\nseed = 1\n[x]\nfamily = nope\n", 4, "unknown family"),
    ("[plan]\nseed = 1\n[x]\nfamily = rankin\nr = 2\n", 5, "r"),
    ("[plan]\nseed = 1\n[x]\nfamily = rankin\nell = a..b\n", 5, "ell"),
    ("[plan]\nseed = 1\n[x]\nfamily = rankin\nbogus = 1\n", 5, "bogus"),
    ("[x]\nfamily = rankin\n", None, "seed"),
    ("seed = 1\n", 1, "section"),
    ("[plan]\nseed = 1\n[x\n", None, "parse"),
    ("[plan]\nseed = 1\n[x]\nfamily = theorem\nq = 6\n", 5, "q"),
])
def test_plan_errors(tmp_path, capsys, text, line, msg):
    with pytest.raises(PlanError) as err:
        parse_plan(text)
    assert msg in str(err.value)
    if line is not None:
        assert err.value.line == line and f"line {line}" in str(err.value)
    assert main([write(tmp_path, text)]) == 2
    assert "plan error" in capsys.readouterr().err


def test_errors_reported_before_any_suite_runs(tmp_path, capsys):
    text = RANKIN + "\n[later]\nfamily = symfunc\nN = -1\n"
    assert main([write(tmp_path, text)]) == 2
    assert capsys.readouterr().out == ""


def test_missing_file_and_bad_jobs(tmp_path):
    assert main([str(tmp_path / "absent.ini")]) == 2
    assert main([write(tmp_path, RANKIN), "--jobs", "0"]) == 2


def test_json_round_trip_and_determinism(tmp_path):
    path = write(tmp_path, RANKIN)
    a, b = run_plan(path), run_plan(path)
    text = to_json(a)
    assert to_json(from_json(text)) == text
    assert to_json(a, timing=False) == to_json(b, timing=False)
    assert "wall_time" not in to_json(a, timing=False)


def test_totals_checked_on_load():
    d = json.loads(to_json(RunReport("x" * 64)))
    d["totals"]["pass"] = 3
    with pytest.raises(ValueError):
        RunReport.from_dict(d)


def test_jobs_and_filter(tmp_path):
    text = RANKIN + "\n[sym]\nfamily = symfunc\nr = 3\nN = 3\npoints = 1\n" \
                    "\n[geo]\nfamily = geometry\ntable = 2\naction = 2\npairing = 2\nfibers = 2\n"
    path = write(tmp_path, text)
    serial, parallel = run_plan(path), run_plan(path, jobs=3)
    assert to_json(serial, timing=False) == to_json(parallel, timing=False)
    assert [s.name for s in parallel.suites] == ["rankin", "sym", "geo"]
    only = run_plan(path, filters=["sym"])
    assert [s.name for s in only.suites] == ["sym"] and only.totals["skipped"] == 2
    assert [s.name for s in run_plan(path, filters=["geometry"]).suites] == ["geo"]
    with pytest.raises(PlanError):
        run_plan(path, filters=["missing"])


def test_text_format(tmp_path):
    rep = run_plan(write(tmp_path, RANKIN))
    lines = emit_report(rep, "text").decode().splitlines()
    assert len(lines) == 4
    assert all(line.startswith("PASS") for line in lines[:3])
    assert re.match(r"totals: 3 pass, 0 fail, 0 skipped in [\d.]+s \(plan [0-9a-f]{12}, trizeta ", lines[3])


def test_failing_witness_serialized_as_fraction_strings():
    bad = VerificationReport("x", "fail", 1, {"expected": F(31, 30), "actual": F(1, 3), "z": 0.5 + 1j})
    d = json.loads(to_json(RunReport("0" * 64, [SuiteResult("s", "symfunc", {}, [bad])])))
    w = d["suites"][0]["reports"][0]["witness"]
    assert w == {"expected": "31/30", "actual": "1/3", "z": [0.5, 1.0]}


def test_golden_schema_document():
    doc = (ROOT / "docs" / "report-schema.md").read_text()
    golden = re.search(r"```json\n(.*?)```", doc, re.S).group(1)
    ok = VerificationReport("rankin r=3 l=0", "pass", checked=5, wall_time=0.25)
    bad = VerificationReport("symfunc r=3", "fail", checked=1, wall_time=0.5,
                             witness={"index": (2, 1, 0), "expected": F(31, 30), "actual": F(1, 3)},
                             flags=["perturbed"])
    rep = RunReport("0" * 64, [SuiteResult("rankin", "rankin", {"r": ["3"]}, [ok], 0.3),
                               SuiteResult("symfunc", "symfunc", {"r": ["3"]}, [bad], 0.6)], 1, 1.0, "0.1.0")
    assert to_json(rep) == golden
    d = json.loads(golden)
    assert set(d) == {"schema", "version", "plan_digest", "suites", "totals", "wall_time"}
    assert set(d["suites"][0]) == {"name", "family", "params", "reports", "wall_time"}
    assert set(d["suites"][0]["reports"][0]) == {"name", "status", "checked", "witness", "flags",
                                                 "details", "wall_time"}
    assert strip_timing(d)["totals"] == {"pass": 1, "fail": 1, "skipped": 1}


def test_shipped_plans_parse():
    for path in (ROOT / "plans").glob("*.ini"):
        plan = parse_plan(path.read_text(), str(path))
        assert plan.suites
