"""V_3 = 2 (x) 2 (x) 2 inside V_P: actions, pairings, orbit points and fibers.

Basis order (e123, e126, e135, e156, e234, e246, e345, e456).  Writing the
tensor index of factor i as 0 for e_i and 1 for e_{i+3}, these are the pure
tensors in binary order up to the signs (+, +, -, +, +, -, +, +); the signs
come from reordering e_1 ^ e_5 ^ e_3 and e_2 ^ e_4 ^ e_6.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..exactalg import MatrixQ, rank_exact
from .groups import GAMMA0, TripleSL2, dot, embed, j_xi_inverse
from .wedge import V3_BASIS, WedgeVector, pairing_P, vp_coordinates, wedge3, wedge_act

TENSOR_SIGNS = (1, 1, -1, 1, 1, -1, 1, 1)
V_BASIS_NAMES = ("e123", "e126", "e135", "e156", "e234", "e246", "e345", "e456")


@dataclass(frozen=True)
class V3Vector:
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 8:
            raise ValueError("V_3 vectors have 8 coordinates")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def basis(cls, name: str) -> "V3Vector":
        return cls(tuple(int(n == name) for n in V_BASIS_NAMES))

    @classmethod
    def zero(cls) -> "V3Vector":
        return cls((0,) * 8)

    def __add__(self, other):
        return V3Vector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return V3Vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return V3Vector(tuple(-a for a in self.coords))

    def __mul__(self, c):
        return V3Vector(tuple(a * c for a in self.coords))

    __rmul__ = __mul__

    def __getitem__(self, name: str) -> Fraction:
        return self.coords[V_BASIS_NAMES.index(name)]

    def to_wedge(self) -> WedgeVector:
        return WedgeVector.from_dict({t: c for t, c in zip(V3_BASIS, self.coords) if c})

    def is_zero(self) -> bool:
        return not any(self.coords)


V0 = V3Vector((0, 0, 0, 1, 0, -1, 1, 0))


def v3_project(w: WedgeVector) -> V3Vector:
    """Canonical projection V_P -> V_3 (NotInVPError off V_P)."""
    v3, _ = vp_coordinates(w)
    return V3Vector(v3)


def vp_prime_part(w: WedgeVector) -> tuple:
    return vp_coordinates(w)[1]


# --------------------------------------------------------------- actions

def _kron3(h: TripleSL2) -> list:
    b = h.blocks
    out = []
    for i in range(8):
        i1, i2, i3 = (i >> 2) & 1, (i >> 1) & 1, i & 1
        row = []
        for j in range(8):
            j1, j2, j3 = (j >> 2) & 1, (j >> 1) & 1, j & 1
            row.append(b[0][i1, j1] * b[1][i2, j2] * b[2][i3, j3])
        out.append(row)
    return out


def tensor_matrix(h: TripleSL2) -> MatrixQ:
    """h1 (x) h2 (x) h3 in the signed V_3 basis, without the det twist."""
    k = _kron3(h)
    s = TENSOR_SIGNS
    return MatrixQ.from_rows([[s[i] * k[i][j] * s[j] for j in range(8)] for i in range(8)])


def v3_matrix(h: TripleSL2) -> MatrixQ:
    """Matrix of v -> v.h = det(h_1)^{-1} v (h1 (x) h2 (x) h3) on row vectors."""
    return tensor_matrix(h).scale(1 / h.nu())


def _apply(v: V3Vector, m: MatrixQ) -> V3Vector:
    return V3Vector(tuple(sum((v.coords[i] * m[i, j] for i in range(8)), Fraction(0)) for j in range(8)))


def v3_act(v: V3Vector, h: TripleSL2) -> V3Vector:
    if not h.in_H():
        raise ValueError(f"block determinants {h.dets()} differ")
    return _apply(v, v3_matrix(h))


def v3_act_wedge(v: V3Vector, h: TripleSL2) -> V3Vector:
    """The same action computed through wedge^3 of the GSp_6 embedding."""
    w = wedge_act(v.to_wedge(), embed(h))
    return v3_project(w) * (1 / h.nu())


def tensor_apply(v: V3Vector, b: TripleSL2, scale=1) -> V3Vector:
    """v (b1 (x) b2 (x) b3) / scale for arbitrary invertible blocks."""
    return _apply(v, tensor_matrix(b)) * (1 / Fraction(scale))


# --------------------------------------------------------------- pairings

@lru_cache(maxsize=None)
def _gram_rows() -> tuple:
    ws = [V3Vector.basis(n).to_wedge() for n in V_BASIS_NAMES]
    return tuple(tuple(pairing_P(a, b) for b in ws) for a in ws)


def gram_P() -> MatrixQ:
    """Gram matrix of the symplectic pairing on the ordered V_3 basis."""
    return MatrixQ.from_rows(_gram_rows())


def pairing_P_v3(v: V3Vector, w: V3Vector) -> Fraction:
    g = _gram_rows()
    return sum((v.coords[i] * g[i][j] * w.coords[j] for i in range(8) for j in range(8)
                if v.coords[i] and w.coords[j]), Fraction(0))


def pairing_sym(v: V3Vector, w: V3Vector, beta=1) -> Fraction:
    """<v, w.(J xi^{-1})>_P."""
    if beta == 0:
        raise ValueError("beta must be nonzero")
    return pairing_P_v3(v, v3_act(w, j_xi_inverse(beta)))


def gram_sym(beta=1) -> MatrixQ:
    basis = [V3Vector.basis(n) for n in V_BASIS_NAMES]
    return MatrixQ.from_rows([[pairing_sym(a, b, beta) for b in basis] for a in basis])


# ------------------------------------------------------------ orbit points

def pl_P(x: MatrixQ) -> WedgeVector:
    """Wedge of the bottom three rows."""
    return wedge3(x.row(3), x.row(4), x.row(5))


def orbit_point(h: TripleSL2) -> WedgeVector:
    """Pl_P(gamma_0 iota(h)) for h in SL_2^3."""
    if not h.in_SL2():
        raise ValueError(f"orbit_point needs determinant-one blocks, got {h.dets()}")
    return pl_P(GAMMA0 @ embed(h))


def table_value(h: TripleSL2) -> tuple:
    """The 14 coordinates (V_3 then e'_1..e'_6) as polynomials in the entries of h."""
    (a1, b1), (c1, d1) = h.blocks[0].to_rows()
    (a2, b2), (c2, d2) = h.blocks[1].to_rows()
    (a3, b3), (c3, d3) = h.blocks[2].to_rows()
    return (
        a1 * c2 * c3 + c1 * a2 * c3 + c1 * c2 * a3,
        a1 * c2 * d3 + c1 * c2 * b3 + c1 * a2 * d3,
        -(a1 * d2 * c3 + c1 * b2 * c3 + c1 * d2 * a3),
        c1 * d2 * b3 + a1 * d2 * d3 + c1 * b2 * d3,
        d1 * a2 * c3 + d1 * c2 * a3 + b1 * c2 * c3,
        -(d1 * a2 * d3 + b1 * c2 * d3 + d1 * c2 * b3),
        b1 * d2 * c3 + d1 * b2 * c3 + d1 * d2 * a3,
        b1 * d2 * d3 + d1 * d2 * b3 + d1 * b2 * d3,
        -c2, -c1, c3, d2, d1, -d3,
    )


def point_gamma0_orbit(g: TripleSL2) -> WedgeVector:
    """Pl_P(gamma_0 . g) for g in H, using the twisted dot action."""
    return pl_P(dot(GAMMA0, g))


def stabilizer_membership(kind: str, g: TripleSL2) -> bool:
    """Does g fix the Pluecker point of gamma_0 ('gamma0') or the vector v_0 ('v0')?"""
    if kind == "gamma0":
        if not g.in_H():
            return False
        return point_gamma0_orbit(g) == pl_P(GAMMA0)
    if kind == "v0":
        if not g.in_H():
            return False
        return v3_act(V0, g) == V0
    raise ValueError(f"unknown stabilizer kind {kind!r}")


# ------------------------------------------------------------------ fibers

@dataclass(frozen=True)
class LineTriple:
    lines: tuple

    def __post_init__(self):
        if len(self.lines) != 3:
            raise ValueError("need three lines")
        lines = tuple((Fraction(a), Fraction(b)) for a, b in self.lines)
        if any(a == 0 and b == 0 for a, b in lines):
            raise ValueError("(0, 0) does not span a line")
        object.__setattr__(self, "lines", lines)

    def anisotropic(self, beta=1) -> bool:
        return all(a * a + beta * b * b != 0 for a, b in self.lines)

    def same_line(self, i: int, other: "LineTriple") -> bool:
        (a, b), (c, d) = self.lines[i], other.lines[i]
        return a * d - b * c == 0


MODEL_FIBER = tuple(V3Vector.basis(n) for n in ("e156", "e246", "e345", "e456"))


def _with_first_row(a: Fraction, b: Fraction, shear: Fraction) -> MatrixQ:
    """A determinant-one matrix with first row (a, b)."""
    if a != 0:
        g = MatrixQ.from_rows([[a, b], [0, 1 / a]])
    else:
        g = MatrixQ.from_rows([[0, b], [-1 / b, 0]])
    return MatrixQ.from_rows([[1, 0], [shear, 1]]) @ g


def mover(lines: LineTriple, beta=1, shear: Sequence = (0, 0, 0)) -> TripleSL2:
    """h in SL_2^3 with the first row of h_i^iota on the line l_i."""
    xi = MatrixQ.diag([1, Fraction(beta)])
    xi_inv = MatrixQ.diag([1, 1 / Fraction(beta)])
    blocks = []
    for (a, b), s in zip(lines.lines, shear):
        g = _with_first_row(a, b, Fraction(s))
        blocks.append((xi_inv @ g @ xi).transpose())
    h = TripleSL2(tuple(blocks)).inverse()
    return h


def fiber_basis(lines: LineTriple, beta=1, shear: Sequence = (0, 0, 0)) -> MatrixQ:
    """4x8 basis of Y_l: the model fiber moved by v3_act."""
    h = mover(lines, beta, shear)
    return MatrixQ.from_rows([v3_act(v, h).coords for v in MODEL_FIBER])


def lagrangian_gram(basis: MatrixQ, pairing: str = "P", beta=1) -> MatrixQ:
    vecs = [V3Vector(basis.row(i)) for i in range(basis.rows)]
    if pairing == "P":
        f = pairing_P_v3
    elif pairing == "sym":
        def f(v, w):
            return pairing_sym(v, w, beta)
    else:
        raise ValueError(f"unknown pairing {pairing!r}")
    return MatrixQ.from_rows([[f(v, w) for w in vecs] for v in vecs])


def row_space_equal(a: MatrixQ, b: MatrixQ) -> bool:
    stacked = MatrixQ.from_rows(a.to_rows() + b.to_rows())
    r = rank_exact(stacked)
    return r == rank_exact(a) == rank_exact(b)


# ------------------------------------------------- Borel parametrization

def v_coordinates(v: V3Vector) -> tuple:
    """(c1, c2, c3, t) for v = c1 e156 - c2 e246 + c3 e345 + t e456."""
    if any(v[n] for n in ("e123", "e126", "e135", "e234")):
        raise ValueError("vector is not in V")
    return v["e156"], -v["e246"], v["e345"], v["e456"]


def pli2_from_blocks(h: TripleSL2) -> tuple:
    """Pl_i (x) Pl_i: the tensor square of each bottom row, as 2x2 arrays."""
    out = []
    for c, d in h.bottom_rows():
        out.append(((c * c, c * d), (d * c, d * d)))
    return tuple(out)


def pli2_formula(v: V3Vector) -> tuple:
    """([c]/c_i) e_2 (x) e_2 for v = (c1, c2, c3, t) in V."""
    c1, c2, c3, _ = v_coordinates(v)
    pc = c1 * c2 * c3
    return tuple(((0, 0), (0, pc / ci)) for ci in (c1, c2, c3))


def j_blocks(x: Sequence, c: Sequence, y: Sequence) -> TripleSL2:
    """(1 y; 0 1) diag(x_i, x_i c_{i+1} c_{i+2}) blockwise."""
    blocks = []
    for i in range(3):
        w = Fraction(x[i]) * c[(i + 1) % 3] * c[(i + 2) % 3]
        blocks.append(MatrixQ.from_rows([[x[i], Fraction(y[i]) * w], [0, w]]))
    return TripleSL2(tuple(blocks))


def j_image(x: Sequence, c: Sequence, y: Sequence) -> V3Vector:
    """v_0 moved by the H^e element over the J-blocks: the centre acts trivially,
    so v_0 . p_2 = v_0 (b1 (x) b2 (x) b3) / ([x][c])."""
    if any(Fraction(v) == 0 for v in tuple(x) + tuple(c)):
        raise ValueError("x and c must be units")
    px = Fraction(x[0]) * x[1] * x[2]
    pc = Fraction(c[0]) * c[1] * c[2]
    return tensor_apply(V0, j_blocks(x, c, y), px * pc)


def in_J(blocks: TripleSL2, v: V3Vector) -> bool:
    """The defining equations of J for (upper-triangular blocks, v in V)."""
    try:
        c = v_coordinates(v)
    except ValueError:
        return False
    cc, t = c[:3], c[3]
    if any(x == 0 for x in cc):
        return False
    pc = cc[0] * cc[1] * cc[2]
    total = Fraction(0)
    for i, b in enumerate(blocks.blocks):
        if b[1, 0] != 0 or b[0, 0] == 0 or b[1, 1] == 0:
            return False
        x, y, w = b[0, 0], b[0, 1], b[1, 1]
        if x / w * cc[(i + 1) % 3] * cc[(i + 2) % 3] != 1:
            return False
        total += y / w * pc
    return total == t


__all__ = ["V3Vector", "V0", "V_BASIS_NAMES", "TENSOR_SIGNS", "v3_project", "vp_prime_part", "tensor_matrix",
           "v3_matrix", "v3_act", "v3_act_wedge", "tensor_apply", "gram_P", "pairing_P_v3", "pairing_sym",
           "gram_sym", "pl_P", "orbit_point", "table_value", "point_gamma0_orbit", "stabilizer_membership",
           "LineTriple", "MODEL_FIBER", "mover", "fiber_basis", "lagrangian_gram", "row_space_equal",
           "v_coordinates", "pli2_from_blocks", "pli2_formula", "j_blocks", "j_image", "in_J"]
