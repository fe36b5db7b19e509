"""Suite families run by the plan runner.

Each family takes a validated parameter dict and returns a list of
VerificationReports.  Randomness comes only from random.Random(seed), so a
suite is a pure function of its parameters.
"""
from __future__ import annotations

import random
import time

from .geometry import run_geometry
from .symfunc import (SatakePoint, monomial_expansion_schur, partitions_up_to, schur_jacobi_trudi,
                      schur_value)
from .zeta import (cauchy_check, cofactor_check, cofactor_check_symbolic, compare_direct_closed,
                   random_exact_params, random_tempered_params, sample_cone_point, tempered_scan,
                   verify_rankin, verify_rationality)
from .zeta.params import random_exact_point
from .zeta.report import VerificationReport, error_report, mismatch


def _combine(name: str, reports: list[VerificationReport], label: str, started: float) -> VerificationReport:
    """One report for several samples: the first failure, or a pass counting everything."""
    checked = sum(r.checked for r in reports)
    for k, r in enumerate(reports):
        if not r.passed:
            witness = dict(r.witness or {})
            witness[label] = k
            return VerificationReport(name, r.status, checked, witness, time.perf_counter() - started,
                                      r.flags, r.details)
    flags = sorted({f for r in reports for f in r.flags})
    return VerificationReport(name, "pass", checked, None, time.perf_counter() - started, flags)


def _rankin_point(rng: random.Random, r: int):
    alpha = random_exact_point(rng, r)
    alpha_p = random_exact_point(rng, r - 2)
    return alpha, alpha_p


def run_rankin(p: dict) -> list[VerificationReport]:
    out = []
    perturb = p["perturb"]
    if "lemma" in p["checks"]:
        for r in p["r"]:
            for ell in p["ell"]:
                rng = random.Random(f"{p['seed']}:{r}:{ell}")
                t0 = time.perf_counter()
                reps = [verify_rankin(r, ell, *_rankin_point(rng, r), p["N"], perturb=perturb)
                        for _ in range(p["points"])]
                out.append(_combine(f"rankin r={r} l={ell} N={p['N']}", reps, "point", t0))
    if "cofactor" in p["checks"]:
        for r in p["r"]:
            for ell in p["cofactor_ell"]:
                rng = random.Random(f"{p['seed']}:cofactor:{r}:{ell}")
                t0 = time.perf_counter()
                reps = [cofactor_check_symbolic(r, ell, perturb=perturb)]
                reps += [cofactor_check(r, ell, *_rankin_point(rng, r), perturb=perturb)
                         for _ in range(p["points"])]
                out.append(_combine(f"cofactor r={r} l={ell}", reps, "sample", t0))
    if "cauchy" in p["checks"]:
        rng = random.Random(f"{p['seed']}:cauchy")
        m = p["cauchy_m"]
        for k in range(p["cauchy_sets"]):
            x, xp = random_exact_point(rng, m + 1), random_exact_point(rng, m)
            rep = cauchy_check(m, x, xp, p["cauchy_N"], perturb=perturb)
            rep.name = f"cauchy m={m} N={p['cauchy_N']} set={k}"
            out.append(rep)
    return out


def run_theorem(p: dict) -> list[VerificationReport]:
    out = []
    for r in p["r"]:
        for q in p["q"]:
            rng = random.Random(f"{p['seed']}:{r}:{q}")
            t0 = time.perf_counter()
            reps = []
            for _ in range(p["trials"]):
                s_vec, s = sample_cone_point(rng, r, p["margin"])
                params = random_tempered_params(rng, r, float(q), s_vec, s)
                try:
                    reps.append(compare_direct_closed(params, tol=p["tol"], margin=p["margin"],
                                                      perturb=p["perturb"]))
                except (ArithmeticError, ValueError) as exc:
                    reps.append(error_report("theorem", exc, t0))
            out.append(_combine(f"theorem r={r} q={q}", reps, "trial", t0))
    return out


def run_rationality(p: dict) -> list[VerificationReport]:
    out = []
    for r in p["r"]:
        rng = random.Random(f"{p['seed']}:{r}")
        for k in range(p["points"]):
            params = random_exact_params(rng, r, q=p["q"], compatible=p["compatible"])
            out.append(verify_rationality(params, p["N"], perturb=p["perturb"],
                                          name=f"rationality r={r} N={p['N']} set={k}"))
    return out


def run_tempered(p: dict) -> list[VerificationReport]:
    out = []
    for r in p["r"]:
        t0 = time.perf_counter()
        try:
            out.append(tempered_scan(r, p["q"], p["eps"], p["trials"], seed=p["seed"], constant=p["constant"],
                                     perturb=p["perturb"]))
        except (ArithmeticError, ValueError) as exc:
            out.append(error_report(f"tempered r={r}", exc, t0))
    return out


def run_geometry_suite(p: dict) -> list[VerificationReport]:
    samples = {k: p[k] for k in ("table", "pl_comp", "pli2", "action", "pairing", "fibers", "stabilizers",
                                 "borel") if k in p}
    return run_geometry(seed=p["seed"], samples=samples, beta=p["beta"], perturb=p["perturb"],
                        only=p.get("checks"))


def schur_oracles(r: int, N: int, x: SatakePoint, perturb: bool = False) -> VerificationReport:
    """Bialternant, Jacobi-Trudi and tableau sums agree for every partition of size <= N,
    and shifting by the determinant matches division by det(x)."""
    t0 = time.perf_counter()
    name = f"schur oracles r={r} N={N}"
    det = x.product()
    n = 0
    for lam in partitions_up_to(N, r):
        full = lam.padded(r)
        a = schur_value(full, x)
        if perturb and n == 0:
            a = a + 1
        for label, b in (("jacobi-trudi", schur_jacobi_trudi(lam, x)),
                         ("tableaux", monomial_expansion_schur(full, x)),
                         ("det shift", schur_value(tuple(v - 1 for v in full), x) * det)):
            n += 1
            if a != b:
                return VerificationReport(name, "fail", n, mismatch({"lambda": list(full), "oracle": label}, b, a),
                                          time.perf_counter() - t0)
    return VerificationReport(name, "pass", n, None, time.perf_counter() - t0)


def run_symfunc(p: dict) -> list[VerificationReport]:
    out = []
    for r in p["r"]:
        rng = random.Random(f"{p['seed']}:{r}")
        t0 = time.perf_counter()
        reps = [schur_oracles(r, p["N"], random_exact_point(rng, r), p["perturb"]) for _ in range(p["points"])]
        out.append(_combine(f"schur oracles r={r} N={p['N']}", reps, "point", t0))
    return out


FAMILIES = {
    "rankin": run_rankin,
    "theorem": run_theorem,
    "rationality": run_rationality,
    "tempered": run_tempered,
    "geometry": run_geometry_suite,
    "symfunc": run_symfunc,
}

__all__ = ["FAMILIES", "schur_oracles"] + [f.__name__ for f in FAMILIES.values()]
