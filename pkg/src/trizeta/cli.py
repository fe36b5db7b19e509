"""`verify <plan>`: run a test plan and emit a report.

Exit status is 0 when every report passes, 1 when any fails and 2 for plan or
configuration errors, which are all raised before a suite starts.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .plan import PlanError, SuiteSpec, TestPlan, load_plan
from .suites import FAMILIES
from .zeta.report import VerificationReport, error_report

SCHEMA_VERSION = 1
TIMING_KEYS = frozenset({"wall_time"})


@dataclass
class SuiteResult:
    name: str
    family: str
    params: dict
    reports: list
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        return {"name": self.name, "family": self.family, "params": self.params,
                "reports": [r.to_dict() for r in self.reports], "wall_time": self.wall_time}

    @classmethod
    def from_dict(cls, d: dict) -> "SuiteResult":
        return cls(d["name"], d["family"], dict(d["params"]),
                   [VerificationReport.from_dict(r) for r in d["reports"]], d.get("wall_time", 0.0))


@dataclass
class RunReport:
    plan_digest: str
    suites: list = field(default_factory=list)
    skipped: int = 0
    wall_time: float = 0.0
    version: str = __version__

    @property
    def totals(self) -> dict:
        reports = [r for s in self.suites for r in s.reports]
        passed = sum(r.passed for r in reports)
        return {"pass": passed, "fail": len(reports) - passed, "skipped": self.skipped}

    @property
    def ok(self) -> bool:
        return self.totals["fail"] == 0

    def to_dict(self) -> dict:
        return {"schema": SCHEMA_VERSION, "version": self.version, "plan_digest": self.plan_digest,
                "suites": [s.to_dict() for s in self.suites], "totals": self.totals,
                "wall_time": self.wall_time}

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        rep = cls(d["plan_digest"], [SuiteResult.from_dict(s) for s in d["suites"]],
                  d["totals"].get("skipped", 0), d.get("wall_time", 0.0), d.get("version", __version__))
        if rep.totals != d["totals"]:
            raise ValueError(f"totals {d['totals']} do not match the reports {rep.totals}")
        return rep


def run_suite(spec: SuiteSpec) -> SuiteResult:
    t0 = time.perf_counter()
    try:
        reports = FAMILIES[spec.family](spec.params)
    except Exception as exc:  # a crashing suite is a failing suite, not a crashed run
        reports = [error_report(spec.name, exc, t0)]
    return SuiteResult(spec.name, spec.family, spec.describe()["params"], reports, time.perf_counter() - t0)


def select(plan: TestPlan, filters) -> tuple[list, int]:
    if not filters:
        return list(plan.suites), 0
    known = {s.name for s in plan.suites} | {s.family for s in plan.suites}
    missing = [f for f in filters if f not in known]
    if missing:
        raise PlanError(f"--filter {missing[0]!r} matches no suite name or family in the plan")
    chosen = [s for s in plan.suites if s.name in filters or s.family in filters]
    return chosen, len(plan.suites) - len(chosen)


def run_plan(plan: TestPlan | str, jobs: int = 1, filters=None) -> RunReport:
    """Run every selected suite; results keep plan order whatever the job count."""
    if not isinstance(plan, TestPlan):
        plan = load_plan(plan)
    chosen, skipped = select(plan, filters)
    t0 = time.perf_counter()
    if jobs > 1 and len(chosen) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_suite, chosen))
    else:
        results = [run_suite(s) for s in chosen]
    return RunReport(plan.digest, results, skipped, time.perf_counter() - t0)


def strip_timing(obj):
    """Drop wall-time fields so two runs can be compared byte for byte."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k not in TIMING_KEYS}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def to_json(report: RunReport, timing: bool = True) -> str:
    d = report.to_dict()
    if not timing:
        d = strip_timing(d)
    return json.dumps(d, sort_keys=True, indent=2) + "\n"


def from_json(text: str) -> RunReport:
    return RunReport.from_dict(json.loads(text))


def to_text(report: RunReport) -> str:
    lines = [r.line() for s in report.suites for r in s.reports]
    t = report.totals
    lines.append(f"totals: {t['pass']} pass, {t['fail']} fail, {t['skipped']} skipped "
                 f"in {report.wall_time:.2f}s (plan {report.plan_digest[:12]}, trizeta {report.version})")
    return "\n".join(lines) + "\n"


def emit_report(report: RunReport, fmt: str = "text") -> bytes:
    if fmt == "json":
        return to_json(report).encode()
    if fmt == "text":
        return to_text(report).encode()
    raise ValueError(f"unknown format {fmt!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="verify", description="Run a trizeta test plan.")
    ap.add_argument("plan", help="path to an INI test plan")
    ap.add_argument("--format", choices=("json", "text"), default="text")
    ap.add_argument("--out", help="write the report here instead of stdout")
    ap.add_argument("--jobs", type=int, default=1, help="run suites in this many processes")
    ap.add_argument("--filter", action="append", metavar="SUITE",
                    help="run only suites with this name or family (repeatable)")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        report = run_plan(load_plan(args.plan), jobs=args.jobs, filters=args.filter)
    except PlanError as exc:
        print(f"plan error: {exc}", file=sys.stderr)
        return 2
    data = emit_report(report, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        if args.format == "json":
            sys.stdout.write(to_text(report))
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
