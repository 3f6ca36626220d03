"""Sparse exact multivariate polynomials for the norm oracles.

Terms live in a dict from exponent tuples to Fractions; zero coefficients
are dropped eagerly so equality of term dicts is equality of polynomials.
Only what the oracles and the graded pullbacks need: ring operations,
truncated products, substitution, exact and float evaluation, gradients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .rationals import Q0, Q1

Expvec = tuple[int, ...]


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[dict[Expvec, Fraction]] = None):
        self.nvars = nvars
        self.terms: dict[Expvec, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} is not {nvars}-long")
                if c != 0:
                    self.terms[e] = Fraction(c)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial(nvars)

    @staticmethod
    def constant(nvars: int, c) -> "Polynomial":
        return Polynomial(nvars, {(0,) * nvars: Fraction(c)})

    @staticmethod
    def linear(nvars: int, coeffs: Sequence) -> "Polynomial":
        terms = {}
        for i, c in enumerate(coeffs):
            if c != 0:
                e = [0] * nvars
                e[i] = 1
                terms[tuple(e)] = Fraction(c)
        return Polynomial(nvars, terms)

    @staticmethod
    def monomial(nvars: int, exps: Expvec, c=1) -> "Polynomial":
        return Polynomial(nvars, {tuple(exps): Fraction(c)})

    # -- ring --------------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, Q0) + c
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
        return Polynomial(self.nvars, out)

    def scale(self, c) -> "Polynomial":
        cq = Fraction(c)
        if cq == 0:
            return Polynomial(self.nvars)
        return Polynomial(self.nvars, {e: cq * v for e, v in self.terms.items()})

    def mul(self, other: "Polynomial", max_degree: Optional[int] = None) -> "Polynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out: dict[Expvec, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if max_degree is not None and sum(e) > max_degree:
                    continue
                v = out.get(e, Q0) + c1 * c2
                if v == 0:
                    out.pop(e, None)
                else:
                    out[e] = v
        return Polynomial(self.nvars, out)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return self.mul(other)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        bits = [f"{c}*t^{e}" for e, c in sorted(self.terms.items())]
        return "Polynomial(" + " + ".join(bits) + ")"

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Q0)

    def negative_term(self) -> Optional[tuple[Expvec, Fraction]]:
        for e, c in sorted(self.terms.items()):
            if c < 0:
                return (e, c)
        return None

    def shift_vars(self, offset: int, nvars: int) -> "Polynomial":
        """Re-home into a larger variable list starting at `offset`."""
        if offset + self.nvars > nvars:
            raise ValueError("shift leaves the variable range")
        pre, post = (0,) * offset, (0,) * (nvars - offset - self.nvars)
        return Polynomial(nvars, {pre + e + post: c for e, c in self.terms.items()})

    def substitute(
        self, values: Sequence["Polynomial"], max_degree: Optional[int] = None
    ) -> "Polynomial":
        """Plug a polynomial in for every variable."""
        if len(values) != self.nvars:
            raise ValueError("substitution needs one polynomial per variable")
        nv = values[0].nvars if values else 0
        out = Polynomial.zero(nv)
        for e, c in self.terms.items():
            term = Polynomial.constant(nv, c)
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term.mul(values[i], max_degree)
                    if term.is_zero():
                        break
            out = out + term
        return out

    # -- evaluation --------------------------------------------------------

    def eval_exact(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        total = Q0
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                for _ in range(k):
                    v *= point[i]
            total += v
        return total

    def eval_float(self, point: Sequence[float]) -> float:
        total = 0.0
        for e, c in self.terms.items():
            v = float(c)
            for i, k in enumerate(e):
                if k:
                    v *= point[i] ** k
            total += v
        return total

    def grad_float(self, point: Sequence[float]) -> list[float]:
        g = [0.0] * self.nvars
        for e, c in self.terms.items():
            for i, k in enumerate(e):
                if k == 0:
                    continue
                v = float(c) * k
                for j, kj in enumerate(e):
                    p = kj - 1 if j == i else kj
                    if p:
                        v *= point[j] ** p
                g[i] += v
        return g


def poly_sum(polys: Iterable[Polynomial], nvars: int) -> Polynomial:
    out = Polynomial.zero(nvars)
    for p in polys:
        out = out + p
    return out


def poly_product(polys: Iterable[Polynomial], nvars: int) -> Polynomial:
    out = Polynomial.constant(nvars, Q1)
    for p in polys:
        out = out * p
    return out
