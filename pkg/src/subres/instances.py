"""Polynomial systems with exactly known rational roots.

Every root-formula identity in the package is checked on instances
built here: a univariate polynomial expanded from chosen roots, or a
grid system f_i = lead_i * prod_j (x_i - c_ij) whose common roots are
the full Cartesian grid, optionally densified by an exact invertible
linear change of variables.  No root finding happens anywhere.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DuplicateAxisValue,
    ShapeMismatch,
    SingularTransform,
    ZeroLeadingCoefficient,
)
from .exactmath import LabeledMatrix, determinant, matrix, rational_to_string
from .poly import Monomial, Polynomial, constant, leading_form, univariate, variable

Point = tuple[Fraction, ...]


@dataclass
class RootInstance:
    """Polynomials together with the exact list of their common roots.

    ``leads`` holds per-polynomial leading data: the leading coefficient
    for a univariate instance, the leading form for multivariate ones.
    """

    polys: tuple[Polynomial, ...]
    roots: tuple[Point, ...]
    leads: tuple

    @property
    def scalar_roots(self) -> list[Fraction]:
        """Roots of a one-variable instance as plain rationals."""
        return [pt[0] for pt in self.roots]

    def to_json(self) -> dict:
        def lead_json(lead):
            return rational_to_string(lead) if isinstance(lead, Fraction) else lead.to_json()

        return {
            "polys": [p.to_json() for p in self.polys],
            "roots": [[rational_to_string(x) for x in pt] for pt in self.roots],
            "leads": [lead_json(lead) for lead in self.leads],
        }


def univariate_from_roots(roots: Sequence[Fraction], lead: Fraction) -> RootInstance:
    """Expand lead * prod (x - xi_j) exactly."""
    lead = Fraction(lead)
    if lead == 0:
        raise ZeroLeadingCoefficient("leading coefficient must be nonzero")
    if not roots:
        raise ZeroLeadingCoefficient("need at least one root (degree >= 1)")
    pts = [Fraction(r) for r in roots]
    if len(set(pts)) != len(pts):
        raise DuplicateAxisValue("repeated root")
    g = constant(1, lead)
    x = variable(1, 0)
    for r in pts:
        g = g * (x - constant(1, r))
    return RootInstance(polys=(g,), roots=tuple((r,) for r in pts), leads=(lead,))


def grid_system(
    axes: Sequence[Sequence[Fraction]],
    leads: Sequence[Fraction],
) -> RootInstance:
    """System f_i = lead_i * prod_j (x_i - c_ij) with grid roots.

    The common roots are the Cartesian product of the axes (in
    ``itertools.product`` order) and the leading form of f_i is
    lead_i * x_i^(len(axis_i)), so the default quotient-basis
    Vandermonde factors as a Kronecker product and cannot vanish.
    """
    n = len(axes)
    if len(leads) != n:
        raise ShapeMismatch("one leading coefficient per axis")
    polys = []
    for i, (axis, lead) in enumerate(zip(axes, leads)):
        lead = Fraction(lead)
        if lead == 0:
            raise ZeroLeadingCoefficient(f"axis {i} has zero leading coefficient")
        vals = [Fraction(c) for c in axis]
        if not vals:
            raise DuplicateAxisValue(f"axis {i} is empty")
        if len(set(vals)) != len(vals):
            raise DuplicateAxisValue(f"axis {i} repeats a value")
        f = constant(n, lead)
        xi = variable(n, i)
        for c in vals:
            f = f * (xi - constant(n, c))
        polys.append(f)
    roots = tuple(tuple(pt) for pt in itertools.product(*[[Fraction(c) for c in ax] for ax in axes]))
    return RootInstance(
        polys=tuple(polys),
        roots=roots,
        leads=tuple(leading_form(f) for f in polys),
    )


def _substitute_linear(p: Polynomial, a: Sequence[Sequence[Fraction]]) -> Polynomial:
    """Exact composition p(A x)."""
    n = p.n_vars
    images = []
    for i in range(n):
        form = Polynomial(n, 1, {})
        for j in range(n):
            form = form + variable(n, j).scaled(Fraction(a[i][j]))
        images.append(form)
    out = Polynomial(n, p.degree, {})
    for m, c in p.terms.items():
        term = constant(n, c)
        for i, e in enumerate(m.exps):
            for _ in range(e):
                term = term * images[i]
        # product bookkeeping inflates the declared degree; clamp it back
        out = out + Polynomial(n, p.degree, term.terms)
    return out


def _solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction]:
    """Solve A y = b by Gaussian elimination over the rationals."""
    n = len(b)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(n)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col]), None)
        if pivot is None:
            raise SingularTransform("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def transform_system(inst: RootInstance, a: Sequence[Sequence[Fraction]]) -> RootInstance:
    """Replace each f_i by f_i(A x) and each root xi by A^(-1) xi.

    Degrees are preserved (A is required to be invertible, so leading
    forms transform invertibly) and every new polynomial vanishes at
    every new root.
    """
    n = inst.polys[0].n_vars
    amat = matrix([[Fraction(x) for x in row] for row in a])
    if amat.rows != n or amat.cols != n:
        raise ShapeMismatch(f"transform must be {n}x{n}")
    if determinant(amat) == 0:
        raise SingularTransform("transform must be invertible")
    new_polys = tuple(_substitute_linear(p, a) for p in inst.polys)
    new_roots = tuple(tuple(_solve(a, pt)) for pt in inst.roots)
    return RootInstance(
        polys=new_polys,
        roots=new_roots,
        leads=tuple(leading_form(p) for p in new_polys),
    )


def random_unimodular(n: int, rng: random.Random, shears: int = 4) -> list[list[Fraction]]:
    """Integer matrix of determinant +-1 built from random shears."""
    a = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    if n == 1:
        a[0][0] = Fraction(rng.choice([-1, 1]))
        return a
    for _ in range(shears):
        i, j = rng.sample(range(n), 2)
        c = Fraction(rng.choice([-2, -1, 1, 2]))
        for col in range(n):
            a[i][col] += c * a[j][col]
    return a


def power_matrix(monomials: Sequence[Monomial], points: Sequence[Point]) -> LabeledMatrix:
    """Matrix of root powers: entry (i, j) = points[j] ** monomials[i]."""
    pts = [tuple(Fraction(x) for x in pt) for pt in points]
    return matrix(
        [[m.value_at(pt) for pt in pts] for m in monomials],
        row_labels=[("pow", m) for m in monomials],
        cols=len(pts),
    )


def vandermonde(T: Sequence[Monomial], points: Sequence[Point]) -> LabeledMatrix:
    """Square generalized Vandermonde matrix of the monomial set T."""
    if len(T) != len(points):
        raise ShapeMismatch(f"{len(T)} monomials vs {len(points)} points")
    return power_matrix(T, points)
