"""The exterior cube of Q^6 and its symplectic pieces V_P = V_3 + V_P'."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from ..exactalg import MatrixQ, det_exact

TRIPLES = tuple(combinations(range(1, 7), 3))
_INDEX = {t: n for n, t in enumerate(TRIPLES)}

V3_BASIS = ((1, 2, 3), (1, 2, 6), (1, 3, 5), (1, 5, 6), (2, 3, 4), (2, 4, 6), (3, 4, 5), (4, 5, 6))
# e'_k as signed sums of basis triples; the first triple is the coordinate read off
PRIME_BASIS = (
    (((1, 2, 4), 1), ((2, 3, 6), 1)),
    (((1, 2, 5), 1), ((1, 3, 6), -1)),
    (((1, 3, 4), 1), ((2, 3, 5), -1)),
    (((1, 4, 5), 1), ((3, 5, 6), 1)),
    (((2, 4, 5), 1), ((3, 4, 6), -1)),
    (((1, 4, 6), 1), ((2, 5, 6), -1)),
)


class NotInVPError(ValueError):
    """The 3-vector has a nonzero contraction with the symplectic form."""


def _perm_sign(seq: Sequence[int]) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
            elif seq[i] == seq[j]:
                return 0
    return sign


class WedgeVector:
    """An element of wedge^3 Q^6 in the lexicographic basis e_ijk, i < j < k."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence = None):
        if coords is None:
            coords = (Fraction(0),) * 20
        if len(coords) != 20:
            raise ValueError("a 3-vector in dimension 6 has 20 coordinates")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError("WedgeVector is immutable")

    @classmethod
    def basis(cls, i: int, j: int, k: int) -> "WedgeVector":
        """e_i ^ e_j ^ e_k for any ordering of distinct indices."""
        sign = _perm_sign((i, j, k))
        c = [Fraction(0)] * 20
        if sign:
            c[_INDEX[tuple(sorted((i, j, k)))]] = Fraction(sign)
        return cls(c)

    @classmethod
    def from_dict(cls, d: dict) -> "WedgeVector":
        w = cls()
        for t, c in d.items():
            w = w + cls.basis(*t) * c
        return w

    def __getitem__(self, ijk) -> Fraction:
        sign = _perm_sign(ijk)
        if not sign:
            return Fraction(0)
        return sign * self.coords[_INDEX[tuple(sorted(ijk))]]

    def __add__(self, other):
        return WedgeVector([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return WedgeVector([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return WedgeVector([-a for a in self.coords])

    def __mul__(self, c):
        return WedgeVector([a * c for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, WedgeVector) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> dict:
        return {t: c for t, c in zip(TRIPLES, self.coords) if c}

    def __repr__(self):
        terms = [f"{c}*e{''.join(map(str, t))}" for t, c in self.support().items()]
        return " + ".join(terms) if terms else "0"


def wedge3(v1: Sequence, v2: Sequence, v3: Sequence) -> WedgeVector:
    """v1 ^ v2 ^ v3; the coordinates are the 3x3 minors."""
    rows = [[Fraction(x) for x in v] for v in (v1, v2, v3)]
    out = []
    for t in TRIPLES:
        cols = [k - 1 for k in t]
        out.append(det_exact(MatrixQ.from_rows([[r[c] for c in cols] for r in rows])))
    return WedgeVector(out)


def wedge3_matrix(g: MatrixQ) -> MatrixQ:
    """The 20x20 matrix of w -> w g (rows act, image of e_ijk is row_i ^ row_j ^ row_k)."""
    if (g.rows, g.cols) != (6, 6):
        raise ValueError("need a 6x6 matrix")
    rows = [wedge3(g.row(i - 1), g.row(j - 1), g.row(k - 1)).coords for (i, j, k) in TRIPLES]
    return MatrixQ.from_rows(rows)


def wedge_act(w: WedgeVector, g: MatrixQ) -> WedgeVector:
    m = wedge3_matrix(g)
    out = [Fraction(0)] * 20
    for a, c in enumerate(w.coords):
        if c:
            row = m.row(a)
            for b in range(20):
                if row[b]:
                    out[b] += c * row[b]
    return WedgeVector(out)


def pairing_P(v: WedgeVector, w: WedgeVector) -> Fraction:
    """v ^ w, read against e_123456 = 1."""
    total = Fraction(0)
    for t, c in v.support().items():
        comp = tuple(k for k in range(1, 7) if k not in t)
        d = w[comp]
        if d:
            total += _perm_sign(t + comp) * c * d
    return total


def contraction(w: WedgeVector) -> dict:
    """w ^ (e14 + e25 + e36) as a map from 5-subsets to coefficients."""
    out: dict = {}
    for t, c in w.support().items():
        for pair in ((1, 4), (2, 5), (3, 6)):
            if set(pair) & set(t):
                continue
            seq = t + pair
            key = tuple(sorted(seq))
            out[key] = out.get(key, 0) + _perm_sign(seq) * c
    return {k: v for k, v in out.items() if v}


def prime_vector(k: int) -> WedgeVector:
    """e'_k for k = 1..6."""
    return WedgeVector.from_dict({t: s for t, s in PRIME_BASIS[k - 1]})


@lru_cache(maxsize=None)
def vp_basis() -> tuple:
    """The 14 listed basis vectors of V_P: V_3 first, then e'_1..e'_6."""
    return tuple(WedgeVector.basis(*t) for t in V3_BASIS) + tuple(prime_vector(k) for k in range(1, 7))


def vp_coordinates(w: WedgeVector) -> tuple[tuple, tuple]:
    """(V_3 coordinates, V_P' coordinates) of a vector of V_P."""
    if contraction(w):
        raise NotInVPError(f"{w!r} is not killed by contraction with the symplectic form")
    v3 = tuple(w[t] for t in V3_BASIS)
    vp = tuple(w[spec[0][0]] for spec in PRIME_BASIS)
    rebuilt = WedgeVector()
    for c, b in zip(v3 + vp, vp_basis()):
        rebuilt = rebuilt + b * c
    if rebuilt != w:
        raise NotInVPError(f"{w!r} is not in the span of the V_P basis")
    return v3, vp


def contraction_matrix() -> MatrixQ:
    """Rows: basis 3-vectors; columns: the 5-subsets; entries of the contraction."""
    fives = list(combinations(range(1, 7), 5))
    rows = []
    for t in TRIPLES:
        c = contraction(WedgeVector.basis(*t))
        rows.append([c.get(f, 0) for f in fives])
    return MatrixQ.from_rows(rows)


__all__ = ["TRIPLES", "V3_BASIS", "PRIME_BASIS", "NotInVPError", "WedgeVector", "wedge3", "wedge3_matrix",
           "wedge_act", "pairing_P", "contraction", "prime_vector", "vp_basis", "vp_coordinates",
           "contraction_matrix"]
