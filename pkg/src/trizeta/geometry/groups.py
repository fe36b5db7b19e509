"""Triples of 2x2 matrices, their embedding in GSp_6, and the orbit point gamma_0."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exactalg import MatrixQ, det_exact

GAMMA0 = MatrixQ.from_rows([
    [0, 0, 0, -1, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [1, 1, 1, 0, 0, 0],
    [0, 0, 0, -1, 1, 0],
    [0, 0, 0, -1, 0, 1],
])

SYMPLECTIC_FORM = MatrixQ.from_rows([[int(j == i + 3) - int(i == j + 3) for j in range(6)] for i in range(6)])


def _m2(x) -> MatrixQ:
    m = x if isinstance(x, MatrixQ) else MatrixQ.from_rows(x)
    if (m.rows, m.cols) != (2, 2):
        raise ValueError("blocks are 2x2")
    return m


def _inv2(m: MatrixQ) -> MatrixQ:
    d = det_exact(m)
    if d == 0:
        raise ZeroDivisionError("singular 2x2 block")
    return MatrixQ.from_rows([[m[1, 1] / d, -m[0, 1] / d], [-m[1, 0] / d, m[0, 0] / d]])


@dataclass(frozen=True)
class TripleSL2:
    """(h1, h2, h3) in GL_2^3; elements of H have equal determinants."""
    blocks: tuple

    def __post_init__(self):
        if len(self.blocks) != 3:
            raise ValueError("need three blocks")
        object.__setattr__(self, "blocks", tuple(_m2(b) for b in self.blocks))

    @classmethod
    def from_entries(cls, *abcd) -> "TripleSL2":
        """from_entries((a1, b1, c1, d1), (a2, ...), (a3, ...))."""
        return cls(tuple(MatrixQ.from_rows([[a, b], [c, d]]) for a, b, c, d in abcd))

    @classmethod
    def identity(cls) -> "TripleSL2":
        return cls((MatrixQ.identity(2),) * 3)

    @classmethod
    def scalar(cls, e: Sequence) -> "TripleSL2":
        return cls(tuple(MatrixQ.diag([x, x]) for x in e))

    def dets(self) -> tuple:
        return tuple(det_exact(b) for b in self.blocks)

    def in_H(self) -> bool:
        d = self.dets()
        return d[0] == d[1] == d[2] != 0

    def in_SL2(self) -> bool:
        return all(x == 1 for x in self.dets())

    def nu(self) -> Fraction:
        if not self.in_H():
            raise ValueError(f"block determinants {self.dets()} are not equal")
        return self.dets()[0]

    def __mul__(self, other: "TripleSL2") -> "TripleSL2":
        return TripleSL2(tuple(a @ b for a, b in zip(self.blocks, other.blocks)))

    def inverse(self) -> "TripleSL2":
        return TripleSL2(tuple(_inv2(b) for b in self.blocks))

    def transpose(self) -> "TripleSL2":
        return TripleSL2(tuple(b.transpose() for b in self.blocks))

    def iota(self, beta=1) -> "TripleSL2":
        """h^iota = xi h^{-t} xi^{-1} with xi = diag(1, beta) blockwise."""
        xi, xi_inv = xi_triple(beta), xi_triple(Fraction(1) / Fraction(beta))
        return xi * self.inverse().transpose() * xi_inv

    def bottom_rows(self) -> tuple:
        return tuple(b.row(1) for b in self.blocks)

    def __repr__(self):
        return "TripleSL2(" + ", ".join(str(b.to_rows()) for b in self.blocks) + ")"


def xi_triple(beta) -> TripleSL2:
    return TripleSL2.scalar([1, 1, 1]) if beta == 1 else TripleSL2(
        (MatrixQ.diag([1, Fraction(beta)]),) * 3)


def J_triple() -> TripleSL2:
    return TripleSL2.from_entries(*[(0, 1, -1, 0)] * 3)


def j_xi_inverse(beta) -> TripleSL2:
    """J xi^{-1}, an element of H with nu = 1/beta."""
    if beta == 0:
        raise ValueError("beta must be nonzero")
    return J_triple() * xi_triple(Fraction(1) / Fraction(beta))


def embed(h: TripleSL2) -> MatrixQ:
    """The block embedding of H in GSp_6."""
    rows = [[Fraction(0)] * 6 for _ in range(6)]
    for i, b in enumerate(h.blocks):
        rows[i][i], rows[i][i + 3] = b[0, 0], b[0, 1]
        rows[i + 3][i], rows[i + 3][i + 3] = b[1, 0], b[1, 1]
    return MatrixQ.from_rows(rows)


def similitude(g: MatrixQ) -> Fraction:
    """lambda with g^t Omega g = lambda Omega, or ValueError."""
    lhs = g.transpose() @ SYMPLECTIC_FORM @ g
    lam = lhs[0, 3]
    if lhs != SYMPLECTIC_FORM.scale(lam) or lam == 0:
        raise ValueError("not a symplectic similitude")
    return lam


def twist(nu) -> MatrixQ:
    """m(g) = diag(1, nu^{-1} I_3, I_2)."""
    inv = Fraction(1) / Fraction(nu)
    return MatrixQ.diag([1, inv, inv, inv, 1, 1])


def dot(x: MatrixQ, h: TripleSL2) -> MatrixQ:
    """x.h = m(h) x h for h in H."""
    return twist(h.nu()) @ x @ embed(h)


# ------------------------------------------------------------ random elements

def random_rational(rng: random.Random, height: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if x or not nonzero:
            return x


def random_sl2(rng: random.Random, height: int = 9) -> MatrixQ:
    a = random_rational(rng, height, nonzero=True)
    b, c = random_rational(rng, height), random_rational(rng, height)
    m = MatrixQ.from_rows([[a, b], [c, (1 + b * c) / a]])
    if rng.random() < 0.5:
        m = MatrixQ.from_rows([[0, 1], [-1, 0]]) @ m
    return m


def random_sl2_triple(rng: random.Random, height: int = 9) -> TripleSL2:
    return TripleSL2(tuple(random_sl2(rng, height) for _ in range(3)))


def random_H(rng: random.Random, height: int = 9) -> TripleSL2:
    """An element of H: SL_2 blocks times diag(nu, 1)."""
    nu = random_rational(rng, height, nonzero=True)
    d = MatrixQ.diag([nu, 1])
    return TripleSL2(tuple(random_sl2(rng, height) @ d for _ in range(3)))


def borel_element(a: Sequence, t: Sequence) -> TripleSL2:
    """Blocks [[1/a_i, a_i t_i / [a]], [0, a_i]] of the torus-Borel parametrization."""
    pa = Fraction(a[0]) * a[1] * a[2]
    return TripleSL2(tuple(MatrixQ.from_rows([[1 / Fraction(a[i]), Fraction(a[i]) * t[i] / pa], [0, a[i]]])
                           for i in range(3)))


def n0_element(t: Sequence) -> TripleSL2:
    return TripleSL2.from_entries(*[(1, x, 0, 1) for x in t])


def torus_TH(lam) -> TripleSL2:
    """(diag(lam, 1),) * 3, an element of T_H."""
    return TripleSL2((MatrixQ.diag([lam, 1]),) * 3)


__all__ = ["GAMMA0", "SYMPLECTIC_FORM", "TripleSL2", "xi_triple", "J_triple", "j_xi_inverse", "embed",
           "similitude", "twist", "dot", "random_rational", "random_sl2", "random_sl2_triple", "random_H",
           "borel_element", "n0_element", "torus_TH"]
