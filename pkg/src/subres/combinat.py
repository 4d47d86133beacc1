"""Hilbert-function counts and monomial-set machinery.

A :class:`DegreeSystem` fixes n affine variables, degrees d1..d(n+1)
and a target order t.  From it we derive the multiplier sets R_i that
index matrix rows, the quotient basis T that indexes the generalized
Vandermonde over the roots of the first n polynomials, and the counts
k, r, s tying them together.  All counts are obtained by direct
enumeration; the closed-form route lives in :mod:`subres.oracle` only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import (
    DegreeTooHigh,
    DuplicateMonomial,
    InvalidSelection,
    WrongCardinality,
)
from .poly import Monomial, monomials_of_degree, monomials_up_to


@dataclass(frozen=True)
class DegreeSystem:
    """n affine variables, degrees (d1, ..., d(n+1)), target order t."""

    n: int
    degrees: tuple[int, ...]
    t: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one affine variable")
        if len(self.degrees) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} degrees, got {len(self.degrees)}")
        if any(d < 1 for d in self.degrees):
            raise ValueError("degrees must be positive")
        if self.t < 0:
            raise ValueError("target order must be non-negative")

    @property
    def rho(self) -> int:
        return sum(d - 1 for d in self.degrees[: self.n])

    @property
    def t_star(self) -> int:
        return max(self.rho, self.t)

    @property
    def bezout(self) -> int:
        out = 1
        for d in self.degrees[: self.n]:
            out *= d
        return out

    @property
    def last_degree(self) -> int:
        return self.degrees[self.n]


@dataclass(frozen=True)
class MonomialSets:
    """Validated selection S together with all derived monomial data."""

    S: tuple[Monomial, ...]
    R: tuple[tuple[Monomial, ...], ...]
    T: tuple[Monomial, ...]
    s: int
    r: int
    k: int


def hilbert_count(degrees: Sequence[int], n_vars: int, t: int) -> int:
    """Complete-intersection Hilbert function value, by enumeration.

    Counts exponent vectors in ``n_vars`` affine variables with
    |alpha| <= t, alpha_i < degrees[i] coordinatewise for all but the
    last listed degree, and t - |alpha| < degrees[-1] for the last one
    (the slack constraint of the homogeneous count).
    """
    if not degrees:
        raise ValueError("empty degree list")
    coord = list(degrees[:-1])
    slack = degrees[-1]
    if len(coord) > n_vars:
        raise ValueError("more coordinate degrees than variables")
    if t < 0:
        return 0
    count = 0
    for m in monomials_up_to(n_vars, t):
        if all(m.exps[i] < coord[i] for i in range(len(coord))) and t - m.degree < slack:
            count += 1
    return count


def hilbert_graded(degrees: Sequence[int], j: int) -> int:
    """Number of degree-j monomials reduced in every coordinate."""
    if j < 0:
        return 0
    return sum(
        1
        for m in monomials_of_degree(len(degrees), j)
        if all(e < d for e, d in zip(m.exps, degrees))
    )


def multiplier_sets(sys: DegreeSystem) -> tuple[tuple[Monomial, ...], ...]:
    """The row-index sets R_1..R_(n+1), each in canonical order.

    R_i collects the monomials of degree <= t - d_i that are reduced in
    every coordinate before i; R_i is empty when t < d_i.
    """
    out = []
    for i in range(sys.n + 1):
        bound = sys.t - sys.degrees[i]
        members = [
            m
            for m in monomials_up_to(sys.n, max(bound, -1))
            if all(m.exps[j] < sys.degrees[j] for j in range(i))
        ] if bound >= 0 else []
        out.append(tuple(members))
    return tuple(out)


def free_choice_floor(sys: DegreeSystem) -> int:
    """Smallest degree at which the quotient-basis slice may be overridden."""
    return max(0, sys.t - sys.last_degree + 1)


def quotient_basis(
    sys: DegreeSystem,
    overrides: Optional[Mapping[int, Sequence[Monomial]]] = None,
) -> tuple[tuple[Monomial, ...], int]:
    """The monomial basis T of the quotient by the first n polynomials.

    By default every degree-j slice T_j is the full reduced set
    {|alpha| = j, alpha_i < d_i}, which makes the root Vandermonde of a
    grid instance a Kronecker product and hence nonsingular.  Slices at
    degree >= ``free_choice_floor`` may be overridden by any set of the
    right cardinality.  Entries of degree in (t, t*] are placed first;
    that prefix is T*, of size s.
    """
    overrides = dict(overrides or {})
    floor = free_choice_floor(sys)
    slice_degrees = sys.degrees[: sys.n]
    slices: dict[int, tuple[Monomial, ...]] = {}
    for j in range(sys.rho + 1):
        default = tuple(
            m
            for m in monomials_of_degree(sys.n, j)
            if all(e < d for e, d in zip(m.exps, slice_degrees))
        )
        if j in overrides:
            if j < floor:
                raise InvalidSelection(
                    f"slice at degree {j} is below the free-choice floor {floor}"
                )
            chosen = tuple(overrides.pop(j))
            if len(set(chosen)) != len(chosen):
                raise DuplicateMonomial(f"duplicate monomial in slice {j}")
            if any(m.degree != j for m in chosen):
                raise InvalidSelection(f"override for degree {j} has wrong degrees")
            if len(chosen) != len(default):
                raise WrongCardinality(
                    f"slice {j} needs {len(default)} monomials, got {len(chosen)}"
                )
            slices[j] = chosen
        else:
            slices[j] = default
    if overrides:
        raise InvalidSelection(f"override degrees out of range: {sorted(overrides)}")

    members = [m for j in sorted(slices) for m in slices[j]]
    star = sorted((m for m in members if sys.t < m.degree <= sys.t_star), key=Monomial.sort_key)
    rest = sorted((m for m in members if not sys.t < m.degree <= sys.t_star), key=Monomial.sort_key)
    basis = tuple(star + rest)
    assert len(basis) == sys.bezout, "quotient basis must have Bezout-many monomials"
    return basis, len(star)


def arrangement_sign(target: Sequence[int]) -> int:
    """Parity of the permutation written as an arrangement of 0..len-1."""
    inversions = sum(
        1
        for i in range(len(target))
        for j in range(i + 1, len(target))
        if target[i] > target[j]
    )
    return -1 if inversions % 2 else 1


def selection_sign(
    S: Sequence[Monomial],
    t: int,
    t_star: int,
    ambient: Sequence[Monomial],
) -> int:
    """Sign of the permutation sending the ambient univariate basis
    (1, x, ..., x^t*) to (S, x^(t+1)..x^t*, complement ascending).

    The selection is treated as a set; its exponents are arranged in
    ascending order before counting transpositions.
    """
    ambient_exps = [m.exps[0] for m in ambient]
    if ambient_exps != list(range(t_star + 1)):
        raise InvalidSelection("ambient basis must be 1, x, ..., x^t*")
    sel = sorted(m.exps[0] for m in S)
    if len(set(sel)) != len(sel):
        raise DuplicateMonomial("repeated monomial in selection")
    if any(e > t for e in sel):
        raise InvalidSelection("selection must lie inside degree t")
    chosen = set(sel)
    target = sel + list(range(t + 1, t_star + 1)) + [e for e in range(t + 1) if e not in chosen]
    return arrangement_sign(target)


def validate_selection(
    sys: DegreeSystem,
    S: Sequence[Monomial],
    overrides: Optional[Mapping[int, Sequence[Monomial]]] = None,
) -> MonomialSets:
    """Check a selection against the system and assemble all derived sets.

    Verifies |S| = k (the Hilbert count at t), that members are distinct
    monomials of degree <= t, and that the two counting identities
    C(t+n, n) = k + sum |R_i| and k + |R_(n+1)| = #reduced monomials
    hold for the assembled data.
    """
    S = tuple(S)
    k = hilbert_count(sys.degrees, sys.n, sys.t)
    if len(set(S)) != len(S):
        raise DuplicateMonomial("selection contains repeats")
    for m in S:
        if m.n_vars != sys.n:
            raise InvalidSelection(f"{m} has wrong arity")
        if m.degree > sys.t:
            raise DegreeTooHigh(f"{m} exceeds order {sys.t}")
    if len(S) != k:
        raise WrongCardinality(f"selection needs {k} monomials, got {len(S)}")

    R = multiplier_sets(sys)
    T, s = quotient_basis(sys, overrides)
    r = len(R[sys.n])

    total = math.comb(sys.t + sys.n, sys.n)
    assert total == k + sum(len(block) for block in R), "row/column count identity failed"
    reduced = sum(
        1
        for m in monomials_up_to(sys.n, sys.t)
        if all(e < d for e, d in zip(m.exps, sys.degrees))
    )
    assert k + r == reduced, "reduced-monomial count identity failed"

    return MonomialSets(S=S, R=R, T=T, s=s, r=r, k=k)
