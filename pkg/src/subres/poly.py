"""Sparse multivariate polynomials over exact rationals.

Monomials are exponent vectors of fixed arity; the canonical listing
order everywhere in the package is graded lexicographic with
x1 > x2 > ..., grades ascending (1, x1, x2, x1^2, x1*x2, x2^2, ...).
Polynomials carry a *declared* formal degree: a specialized polynomial
whose top coefficient happens to vanish still occupies the degree-d
slots of every matrix built from it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ArityMismatch


@dataclass(frozen=True)
class Monomial:
    """Exponent vector x1^e1 * ... * xn^en."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError("negative exponent")

    @property
    def n_vars(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def sort_key(self) -> tuple:
        # grade first, then lexicographically largest variable first
        return (self.degree, tuple(-e for e in self.exps))

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.exps) != len(other.exps):
            raise ArityMismatch("monomial arities differ")
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def value_at(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != len(self.exps):
            raise ArityMismatch("point arity does not match monomial")
        out = Fraction(1)
        for p, e in zip(point, self.exps):
            if e:
                out *= Fraction(p) ** e
        return out

    def __repr__(self):
        return f"Monomial{self.exps}"


def mono(*exps: int) -> Monomial:
    return Monomial(tuple(exps))


def monomials_of_degree(n_vars: int, degree: int) -> list[Monomial]:
    """All degree-``degree`` monomials in ``n_vars`` variables, canonical order."""
    if degree < 0:
        return []
    if n_vars == 0:
        return [Monomial(())] if degree == 0 else []
    out = []
    for head in range(degree, -1, -1):
        for tail in monomials_of_degree(n_vars - 1, degree - head):
            out.append(Monomial((head,) + tail.exps))
    return out


def monomials_up_to(n_vars: int, degree: int) -> list[Monomial]:
    """All monomials of total degree <= ``degree``, canonical order."""
    out = []
    for d in range(degree + 1):
        out.extend(monomials_of_degree(n_vars, d))
    return out


@dataclass
class Polynomial:
    """Finite monomial-to-coefficient map with a declared formal degree."""

    n_vars: int
    degree: int
    terms: dict[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for m, c in self.terms.items():
            c = Fraction(c)
            if len(m.exps) != self.n_vars:
                raise ArityMismatch(f"term {m} has wrong arity for {self.n_vars} vars")
            if m.degree > self.degree:
                raise ValueError(f"term {m} exceeds declared degree {self.degree}")
            if c:
                clean[m] = c
        self.terms = clean

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.n_vars != other.n_vars:
            raise ArityMismatch("cannot add polynomials of different arity")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Polynomial(self.n_vars, max(self.degree, other.degree), out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n_vars, self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.n_vars != other.n_vars:
            raise ArityMismatch("cannot multiply polynomials of different arity")
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Polynomial(self.n_vars, self.degree + other.degree, out)

    def scaled(self, factor: Fraction) -> "Polynomial":
        factor = Fraction(factor)
        return Polynomial(self.n_vars, self.degree, {m: c * factor for m, c in self.terms.items()})

    def to_json(self) -> dict:
        from .exactmath import rational_to_string

        items = sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())
        return {
            "n_vars": self.n_vars,
            "degree": self.degree,
            "terms": [{"exp": list(m.exps), "coef": rational_to_string(c)} for m, c in items],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Polynomial":
        from .exactmath import rational_from_string

        terms = {
            Monomial(tuple(item["exp"])): rational_from_string(item["coef"])
            for item in data["terms"]
        }
        return cls(int(data["n_vars"]), int(data["degree"]), terms)


def zero(n_vars: int, degree: int = 0) -> Polynomial:
    return Polynomial(n_vars, degree, {})


def constant(n_vars: int, value: Fraction, degree: int = 0) -> Polynomial:
    return Polynomial(n_vars, degree, {Monomial((0,) * n_vars): Fraction(value)})


def variable(n_vars: int, index: int) -> Polynomial:
    exps = [0] * n_vars
    exps[index] = 1
    return Polynomial(n_vars, 1, {Monomial(tuple(exps)): Fraction(1)})


def evaluate(p: Polynomial, point: Sequence[Fraction]) -> Fraction:
    """Exact value of ``p`` at a rational point."""
    if len(point) != p.n_vars:
        raise ArityMismatch(f"expected {p.n_vars} coordinates, got {len(point)}")
    pt = [Fraction(x) for x in point]
    total = Fraction(0)
    for m, c in p.terms.items():
        total += c * m.value_at(pt)
    return total


def leading_form(p: Polynomial) -> Polynomial:
    """Homogeneous component at the declared degree (possibly zero)."""
    keep = {m: c for m, c in p.terms.items() if m.degree == p.degree}
    return Polynomial(p.n_vars, p.degree, keep)


def homogenize(p: Polynomial) -> Polynomial:
    """Make ``p`` homogeneous of its declared degree with one extra variable."""
    out = {}
    for m, c in p.terms.items():
        out[Monomial(m.exps + (p.degree - m.degree,))] = c
    return Polynomial(p.n_vars + 1, p.degree, out)


def dehomogenize(p: Polynomial) -> Polynomial:
    """Set the last variable to 1, dropping it."""
    out: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        key = Monomial(m.exps[:-1])
        out[key] = out.get(key, Fraction(0)) + c
    return Polynomial(p.n_vars - 1, p.degree, out)


def random_polynomial(n_vars: int, degree: int, seed: int, coeff_bound: int = 9) -> Polynomial:
    """Dense polynomial with every monomial of degree <= ``degree`` present.

    Coefficients are nonzero integers uniform on [-coeff_bound, coeff_bound],
    drawn deterministically from ``seed``; the degree-``degree`` terms are
    therefore always present, so the leading form never vanishes.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be at least 1")
    rng = random.Random(seed)
    terms = {}
    for m in monomials_up_to(n_vars, degree):
        c = 0
        while c == 0:
            c = rng.randint(-coeff_bound, coeff_bound)
        terms[m] = Fraction(c)
    return Polynomial(n_vars, degree, terms)


def univariate(coeffs: Sequence[Fraction], degree: int | None = None) -> Polynomial:
    """One-variable polynomial from ascending coefficients (c0, c1, ...)."""
    if degree is None:
        degree = len(coeffs) - 1
    terms = {Monomial((i,)): Fraction(c) for i, c in enumerate(coeffs)}
    return Polynomial(1, degree, terms)


def univariate_coeffs(p: Polynomial) -> list[Fraction]:
    """Ascending coefficient list of a one-variable polynomial."""
    if p.n_vars != 1:
        raise ArityMismatch("not univariate")
    out = [Fraction(0)] * (p.degree + 1)
    for m, c in p.terms.items():
        out[m.exps[0]] = c
    return out
