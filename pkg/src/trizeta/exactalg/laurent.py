"""Sparse multivariate Laurent polynomials with exact coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .guard import check_exponent


def _coef(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class SparseLaurent:
    """Finite sum of c * x^e with e in Z^n.

    Coefficients are Fractions or any exact field element (QuadExt).  Zero
    coefficients are never stored, so equality is plain dict equality.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable names in {variables}")
        n = len(variables)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match {n} variables")
            for x in e:
                check_exponent(x)
            if c != 0:
                clean[e] = _coef(c)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("SparseLaurent is immutable")

    # constructors
    @classmethod
    def constant(cls, variables: Sequence[str], c) -> "SparseLaurent":
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Sequence[int], c=1) -> "SparseLaurent":
        return cls(variables, {tuple(exps): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str, power: int = 1) -> "SparseLaurent":
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = power
        return cls(variables, {tuple(e): 1})

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "SparseLaurent":
        obj = object.__new__(cls)
        object.__setattr__(obj, "variables", variables)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    # ring structure
    def _lift(self, other) -> "SparseLaurent | None":
        if isinstance(other, SparseLaurent):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)) or hasattr(other, "norm"):
            return SparseLaurent.constant(self.variables, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e, 0) + c
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
        return SparseLaurent._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return SparseLaurent._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if len(o.terms) == 1 and all(x == 0 for x in next(iter(o.terms))):
            c = next(iter(o.terms.values()))
            return SparseLaurent._raw(self.variables, {e: v * c for e, v in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v == 0:
                    out.pop(e, None)
                else:
                    out[e] = v
        for e in out:
            for x in e:
                check_exponent(x)
        return SparseLaurent._raw(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible in a Laurent ring")
            (e, c), = self.terms.items()
            return SparseLaurent._raw(self.variables, {tuple(-x for x in e): 1 / c}) ** (-n)
        result = SparseLaurent.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, SparseLaurent):
            return self * other ** -1
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return SparseLaurent._raw(self.variables, {e: c / other for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, SparseLaurent):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)) or hasattr(other, "norm"):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * len(self.variables): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.variables, frozenset(self.terms.items()))))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), Fraction(0))

    def total_degree_range(self) -> tuple[int, int]:
        degs = [sum(e) for e in self.terms]
        return (min(degs), max(degs)) if degs else (0, 0)

    def min_exponents(self) -> tuple:
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.variables)))

    def leading_term(self) -> tuple[tuple, object]:
        """Largest exponent in lexicographic order."""
        e = max(self.terms)
        return e, self.terms[e]

    def shift(self, exps: Sequence[int]) -> "SparseLaurent":
        """Multiply by the monomial x^exps."""
        return SparseLaurent._raw(self.variables, {
            tuple(check_exponent(a + b) for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    def truncate(self, max_total_degree: int) -> "SparseLaurent":
        return SparseLaurent._raw(self.variables, {
            e: c for e, c in self.terms.items() if sum(e) <= max_total_degree})

    def map_coefficients(self, f) -> "SparseLaurent":
        return SparseLaurent(self.variables, {e: f(c) for e, c in self.terms.items()})

    def evaluate(self, point: Mapping[str, object] | Sequence):
        if isinstance(point, Mapping):
            vals = [point[v] for v in self.variables]
        else:
            vals = list(point)
        acc = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t = t * x ** k
            acc = acc + t
        return acc

    def substitute_monomials(self, images: Sequence[tuple], new_variables: Sequence[str],
                             weights: Sequence | None = None) -> "SparseLaurent":
        """Substitute x_i -> w_i * y^{images[i]} (a monomial change of variables)."""
        new_variables = tuple(new_variables)
        m = len(new_variables)
        out: dict = {}
        for e, c in self.terms.items():
            ne = [0] * m
            coef = c
            for i, k in enumerate(e):
                if k:
                    img = images[i]
                    for j in range(m):
                        ne[j] += k * img[j]
                    if weights is not None:
                        coef = coef * weights[i] ** k
            ne = tuple(check_exponent(x) for x in ne)
            v = out.get(ne, 0) + coef
            if v == 0:
                out.pop(ne, None)
            else:
                out[ne] = v
        return SparseLaurent._raw(new_variables, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"{v}^{k}" if k != 1 else v for v, k in zip(self.variables, e) if k)
            c = self.terms[e]
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def truncated_product(factors: Iterable[SparseLaurent], max_total_degree: int) -> SparseLaurent:
    """Product of polynomials with nonnegative exponents, dropping total degree > bound."""
    it = iter(factors)
    acc = next(it).truncate(max_total_degree)
    for f in it:
        f = f.truncate(max_total_degree)
        out: dict = {}
        for e1, c1 in acc.terms.items():
            d1 = sum(e1)
            for e2, c2 in f.terms.items():
                if d1 + sum(e2) > max_total_degree:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v == 0:
                    out.pop(e, None)
                else:
                    out[e] = v
        acc = SparseLaurent._raw(acc.variables, out)
    return acc


def poly_divmod(a: SparseLaurent, b: SparseLaurent) -> tuple[SparseLaurent, SparseLaurent]:
    """Multivariate division with remainder, lexicographic order.

    Both inputs must have nonnegative exponents.  The remainder is zero
    exactly when b divides a for univariate input, and is a sufficient
    divisibility certificate in general.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lb, cb = b.leading_term()
    q_terms: dict = {}
    r_terms: dict = {}
    p = a
    while not p.is_zero():
        lp, cp = p.leading_term()
        if all(x >= y for x, y in zip(lp, lb)):
            e = tuple(x - y for x, y in zip(lp, lb))
            t = SparseLaurent._raw(a.variables, {e: cp / cb})
            q_terms[e] = q_terms.get(e, 0) + cp / cb
            p = p - t * b
        else:
            r_terms[lp] = cp
            p = p - SparseLaurent._raw(a.variables, {lp: cp})
    return SparseLaurent(a.variables, q_terms), SparseLaurent(a.variables, r_terms)
