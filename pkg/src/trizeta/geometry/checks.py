"""Verification suites for the orbit geometry, one report per claim.

Every suite compares an independently computed value against the claimed
one, sample by sample.  With perturb=True the first computed value is
nudged before comparison, so a passing suite proves its comparator can fail.
"""
from __future__ import annotations

import random
import time
from fractions import Fraction
from typing import Callable, Iterable

from ..exactalg import MatrixQ, kernel_basis, rank_exact
from ..zeta.report import VerificationReport, mismatch
from .groups import (GAMMA0, TripleSL2, borel_element, embed, n0_element, random_H, random_rational,
                     random_sl2_triple, similitude, torus_TH)
from .v3 import (MODEL_FIBER, V0, LineTriple, V3Vector, fiber_basis, gram_P, gram_sym, in_J, j_blocks,
                 j_image, lagrangian_gram, orbit_point, pairing_sym, pli2_formula, pli2_from_blocks, pl_P,
                 row_space_equal, stabilizer_membership, table_value, v3_act, v3_act_wedge, v_coordinates)
from .wedge import contraction, contraction_matrix, pairing_P, vp_basis, vp_coordinates

# the anti-diagonal sign matrix of the symplectic pairing on V_3
GRAM_P_EXPECTED = MatrixQ.from_rows([
    [0, 0, 0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 0, 0, -1, 0], [0, 0, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0], [0, 0, 0, -1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0], [-1, 0, 0, 0, 0, 0, 0, 0]])
PAIRING_V0_V0_BETA1 = Fraction(3)


def _nudge(x):
    if isinstance(x, bool):
        return not x
    if isinstance(x, (int, Fraction)):
        return x + 1
    if isinstance(x, tuple):
        return (_nudge(x[0]),) + x[1:] if x else (1,)
    if isinstance(x, MatrixQ):
        return MatrixQ(x.rows, x.cols, (x.entries[0] + 1,) + x.entries[1:])
    if isinstance(x, V3Vector):
        return x + V3Vector.basis("e123")
    return ("perturbed", x)


def _show(x):
    if isinstance(x, MatrixQ):
        return x.to_rows()
    if isinstance(x, V3Vector):
        return list(x.coords)
    return x


def run_items(name: str, items: Iterable[tuple], perturb: bool = False) -> VerificationReport:
    """items yields (index, expected, actual); the first mismatch is the witness."""
    t0 = time.perf_counter()
    n = 0
    for index, expected, actual in items:
        if perturb and n == 0:
            actual = _nudge(actual)
        n += 1
        if expected != actual:
            return VerificationReport(name, "fail", n, mismatch(index, _show(expected), _show(actual)),
                                      time.perf_counter() - t0)
    return VerificationReport(name, "pass", n, None, time.perf_counter() - t0)


def _lines(rng: random.Random) -> LineTriple:
    out = []
    for _ in range(3):
        while True:
            a, b = random_rational(rng), random_rational(rng)
            if a or b:
                out.append((a, b))
                break
    return LineTriple(tuple(out))


# ---------------------------------------------------------------- suites

def check_gram(perturb=False) -> VerificationReport:
    return run_items("geometry gram P on V3", [("gram", GRAM_P_EXPECTED, gram_P())], perturb)


def check_vp_structure(perturb=False) -> VerificationReport:
    def items():
        kernel = kernel_basis(contraction_matrix().transpose())
        yield "kernel dimension", 14, len(kernel)
        for k, b in enumerate(vp_basis()):
            yield f"basis {k} contracted", {}, contraction(b)
        basis = vp_basis()
        for i in range(8):
            for j in range(8, 14):
                yield f"<V3[{i}], e'{j - 7}>", 0, pairing_P(basis[i], basis[j])
        yield "v3_project(e'_1)", (0,) * 8, vp_coordinates(basis[8])[0]
        yield "v3_project(e123)", (1,) + (0,) * 7, vp_coordinates(basis[0])[0]
        yield "v3_project(Pl gamma0)", V0.coords, vp_coordinates(pl_P(GAMMA0))[0]
    return run_items("geometry V_P structure", items(), perturb)


def check_table(samples=50, seed=0, perturb=False) -> VerificationReport:
    def items():
        rng = random.Random(seed)
        yield "identity", (0, 0, 0, 1, 0, -1, 1, 0, 0, 0, 0, 1, 1, -1), sum(
            vp_coordinates(orbit_point(TripleSL2.identity())), ())
        for k in range(samples):
            h = random_sl2_triple(rng)
            v3, vp = vp_coordinates(orbit_point(h))
            yield k, table_value(h), v3 + vp
    return run_items(f"geometry pluecker table ({samples} samples)", items(), perturb)


def check_pl_comp(samples=50, seed=1, perturb=False) -> VerificationReport:
    """Pl_P of the torus-Borel element and the (c, t) image in V."""
    def items():
        rng = random.Random(seed)
        for k in range(samples):
            a = [random_rational(rng, nonzero=True) for _ in range(3)]
            t = [random_rational(rng) for _ in range(3)]
            pa = a[0] * a[1] * a[2]
            expected = (0, 0, 0, pa / a[0] ** 2, 0, -pa / a[1] ** 2, pa / a[2] ** 2, sum(t),
                        0, 0, 0, a[1], a[0], -a[2])
            v3, vp = vp_coordinates(orbit_point(borel_element(a, t)))
            yield k, expected, v3 + vp
    return run_items(f"geometry torus-Borel pluecker ({samples} samples)", items(), perturb)


def check_pli2(samples=50, seed=2, perturb=False) -> VerificationReport:
    """Pl_i (x) Pl_i of the Borel element equals ([c]/c_i) e_2 (x) e_2 for its image (c, t),
    and is unchanged by left multiplication with E N_0."""
    def items():
        rng = random.Random(seed)
        eps = TripleSL2.scalar([-1, -1, 1])
        for k in range(samples):
            a = [random_rational(rng, nonzero=True) for _ in range(3)]
            t = [random_rational(rng) for _ in range(3)]
            b = borel_element(a, t)
            v = v3_act(V0, b)
            got = pli2_from_blocks(b)
            yield k, pli2_formula(v), got
            s = random_rational(rng)
            n = eps * n0_element([s, -s, 0])
            yield f"{k} descends", got, pli2_from_blocks(n * b)
    return run_items(f"geometry Pl_i tensor square ({samples} samples)", items(), perturb)


def check_action(samples=50, seed=3, perturb=False) -> VerificationReport:
    """2 (x) 2 (x) 2 action against the wedge-cube action, and the Pluecker equivariance."""
    def items():
        rng = random.Random(seed)
        yield "identity", V0, v3_act(V0, TripleSL2.identity())
        yield "epsilon", V0, v3_act(V0, TripleSL2.scalar([-1, -1, 1]))
        for k in range(samples):
            h = random_H(rng)
            v = V3Vector([random_rational(rng) for _ in range(8)])
            yield k, v3_act_wedge(v, h), v3_act(v, h)
            yield f"{k} GSp6", True, similitude(embed(h)) == h.nu()
            g = random_sl2_triple(rng)
            yield f"{k} orbit", V3Vector(vp_coordinates(orbit_point(g))[0]), v3_act(V0, g)
    return run_items(f"geometry V3 action ({samples} samples)", items(), perturb)


def check_pairing(samples=200, seed=4, beta=1, perturb=False) -> VerificationReport:
    def items():
        rng = random.Random(seed)
        if beta == 1:
            yield "<v0, v0>", PAIRING_V0_V0_BETA1, pairing_sym(V0, V0, 1)
            yield "gram sym", MatrixQ.identity(8), gram_sym(1)
        for k in range(samples):
            v = V3Vector([random_rational(rng) for _ in range(8)])
            w = V3Vector([random_rational(rng) for _ in range(8)])
            yield f"{k} symmetric", pairing_sym(w, v, beta), pairing_sym(v, w, beta)
            h = random_H(rng)
            yield (f"{k} equivariant", pairing_sym(v3_act(v, h.iota(beta)), w, beta),
                   pairing_sym(v, v3_act(w, h.inverse()), beta))
    return run_items(f"geometry symmetric pairing beta={beta} ({samples} samples)", items(), perturb)


def check_fibers(samples=100, seed=5, beta=1, perturb=False) -> VerificationReport:
    def items():
        rng = random.Random(seed)
        model = MatrixQ.from_rows([v.coords for v in MODEL_FIBER])
        yield "model fiber", True, row_space_equal(model, fiber_basis(LineTriple(((1, 0),) * 3), beta))
        far = MatrixQ.from_rows([V3Vector.basis(n).coords for n in ("e123", "e126", "e135", "e234")])
        yield "fiber at (0,1)", True, row_space_equal(far, fiber_basis(LineTriple(((0, 1),) * 3), beta))
        for k in range(samples):
            lines = _lines(rng)
            b = fiber_basis(lines, beta)
            yield f"{k} lagrangian", MatrixQ.zeros(4, 4), lagrangian_gram(b, "P")
            shear = [random_rational(rng) for _ in range(3)]
            yield f"{k} choice-free", True, row_space_equal(b, fiber_basis(lines, beta, shear))
            other = _lines(rng)
            if not any(lines.same_line(i, other) for i in range(3)):
                stacked = MatrixQ.from_rows(b.to_rows() + fiber_basis(other, beta).to_rows())
                yield f"{k} transverse", 8, rank_exact(stacked)
            if lines.anisotropic(beta):
                yield f"{k} sym nondegenerate", 4, rank_exact(lagrangian_gram(b, "sym", beta))
    return run_items(f"geometry fibers beta={beta} ({samples} samples)", items(), perturb)


def _case_element(rng: random.Random, case: int) -> TripleSL2:
    """Random stabilizer candidates outside the Borel: cases 1-3 of the rejection argument."""
    def lower(c, tt):
        d = random_rational(rng)
        # [[c t, b], [c, d]] with determinant one
        b = (c * tt * d - 1) / c
        return [[c * tt, b], [c, d]]

    tt = random_rational(rng)
    blocks = []
    for i in range(3):
        if i < 4 - case:
            blocks.append(lower(random_rational(rng, nonzero=True), tt))
        else:
            a = random_rational(rng, nonzero=True)
            blocks.append([[a, 0], [0, 1 / a]])
    return TripleSL2(tuple(MatrixQ.from_rows(b) for b in blocks))


def check_stabilizers(samples=50, seed=6, perturb=False) -> VerificationReport:
    def items():
        rng = random.Random(seed)
        eps = TripleSL2.scalar([-1, -1, 1])
        yield "epsilon fixes v0", True, stabilizer_membership("v0", eps)
        yield "epsilon moves gamma0", False, stabilizer_membership("gamma0", eps)
        for k in range(samples):
            lam = random_rational(rng, nonzero=True)
            t1, t2 = random_rational(rng), random_rational(rng)
            n0 = n0_element([t1, t2, -t1 - t2])
            yield f"{k} T_H N_0 fixes gamma0", True, stabilizer_membership("gamma0", torus_TH(lam) * n0)
            yield f"{k} E N_0 fixes v0", True, stabilizer_membership("v0", eps * n0)
            off = random_rational(rng, nonzero=True)
            bad = n0_element([t1, t2, -t1 - t2 + off])
            yield f"{k} N with sum != 0", False, stabilizer_membership("gamma0", bad)
            yield f"{k} N with sum != 0 on v0", False, stabilizer_membership("v0", bad)
            for case in (1, 2, 3):
                yield f"{k} case{case}", False, stabilizer_membership("v0", _case_element(rng, case))
    return run_items(f"geometry stabilizers ({samples} samples)", items(), perturb)


def check_borel_parametrization(samples=50, seed=7, perturb=False) -> VerificationReport:
    """The orbit of (I, v_0) under the Borel lands in J, and every J point is reached."""
    def items():
        yield "x=c=1", (1, 1, 1, 0), v_coordinates(j_image((1, 1, 1), (1, 1, 1), (0, 0, 0)))
        yield "c=(2,3,5)", (2, 3, 5, 0), v_coordinates(j_image((1, 1, 1), (2, 3, 5), (0, 0, 0)))
        yield "c=(2,3,5) blocks", (15, 10, 6), tuple(b[1, 1] for b in j_blocks((1, 1, 1), (2, 3, 5), (0, 0, 0)).blocks)
        yield "y sums to zero", 0, v_coordinates(j_image((1, 1, 1), (1, 1, 1), (1, -2, 1)))[3]
        rng = random.Random(seed)
        for k in range(samples):
            a = [random_rational(rng, nonzero=True) for _ in range(3)]
            t = [random_rational(rng) for _ in range(3)]
            z = [random_rational(rng, nonzero=True) for _ in range(3)]
            b = borel_element(a, t)
            blocks = TripleSL2.scalar(z) * b
            yield f"{k} image in J", True, in_J(blocks, v3_act(V0, b))
            x = [random_rational(rng, nonzero=True) for _ in range(3)]
            c = [random_rational(rng, nonzero=True) for _ in range(3)]
            y = [random_rational(rng) for _ in range(3)]
            v = j_image(x, c, y)
            pc = c[0] * c[1] * c[2]
            yield f"{k} J point", (c[0], c[1], c[2], pc * sum(y)), v_coordinates(v)
            yield f"{k} J equations", True, in_J(j_blocks(x, c, y), v)
    return run_items(f"geometry Borel parametrization ({samples} samples)", items(), perturb)


SUITES: dict[str, Callable] = {
    "gram": check_gram,
    "vp": check_vp_structure,
    "table": check_table,
    "pl_comp": check_pl_comp,
    "pli2": check_pli2,
    "action": check_action,
    "pairing": check_pairing,
    "fibers": check_fibers,
    "stabilizers": check_stabilizers,
    "borel": check_borel_parametrization,
}


def run_geometry(seed: int = 0, samples: dict | None = None, beta=1, perturb: bool = False,
                 only: Iterable[str] | None = None) -> list[VerificationReport]:
    """All geometry suites with per-suite sample counts; seeds are offset per suite."""
    samples = samples or {}
    out = []
    for offset, (key, fn) in enumerate(SUITES.items()):
        if only is not None and key not in only:
            continue
        kwargs = {"perturb": perturb}
        if key not in ("gram", "vp"):
            kwargs["seed"] = seed + offset
            if key in samples:
                kwargs["samples"] = samples[key]
        if key in ("pairing", "fibers"):
            kwargs["beta"] = beta
        out.append(fn(**kwargs))
    return out


__all__ = ["GRAM_P_EXPECTED", "PAIRING_V0_V0_BETA1", "run_items", "SUITES", "run_geometry"] + \
          [f"check_{k}" for k in ("gram", "vp_structure", "table", "pl_comp", "pli2", "action", "pairing",
                                  "fibers", "stabilizers", "borel_parametrization")]
