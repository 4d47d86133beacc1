"""Macaulay-Chardin subresultants of n+1 polynomials in n variables.

The coefficient route stacks the multiplication matrices of all n+1
polynomials over an ordered monomial basis (quotient-basis monomials
first), deletes the columns of the selection S and of the high-degree
prefix T*, and divides the determinant by the extraneous factor.  The
root route evaluates a block root-power determinant on the common roots
of the first n polynomials, divides by the generalized Vandermonde of
the quotient basis, and multiplies by the graded subresultants of the
leading forms.  The two routes agree up to a sign that depends on the
row and column orderings; identities are therefore asserted on absolute
values, with the observed sign recorded per instance by the callers
that care.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .combinat import (
    DegreeSystem,
    MonomialSets,
    hilbert_count,
    hilbert_graded,
    multiplier_sets,
    validate_selection,
)
from .errors import (
    ArityMismatch,
    DegreeTooHigh,
    DuplicateMonomial,
    ExtraneousFactorVanishes,
    NotHomogeneous,
    ShapeMismatch,
    SingularVandermonde,
    WrongCardinality,
)
from .exactmath import (
    LabeledMatrix,
    delete_columns,
    determinant,
    matrix,
    select_columns,
    select_rows,
    vertical_stack,
)
from .instances import Point, power_matrix, vandermonde
from .poly import Monomial, Polynomial, evaluate, monomials_of_degree, monomials_up_to

ONE = Fraction(1)


@dataclass
class MultiProblem:
    """A degree system, its n+1 polynomials, and a validated selection."""

    sys: DegreeSystem
    polys: tuple[Polynomial, ...]
    sets: MonomialSets


def make_problem(
    degrees: Sequence[int],
    t: int,
    polys: Sequence[Polynomial],
    S: Sequence[Monomial],
    overrides: Optional[Mapping[int, Sequence[Monomial]]] = None,
) -> MultiProblem:
    n = len(degrees) - 1
    sys = DegreeSystem(n=n, degrees=tuple(degrees), t=t)
    if len(polys) != n + 1:
        raise ShapeMismatch(f"need {n + 1} polynomials")
    for p, d in zip(polys, degrees):
        if p.n_vars != n:
            raise ArityMismatch(f"{p} should have {n} variables")
        if p.degree != d:
            raise ShapeMismatch(f"declared degree {p.degree} does not match {d}")
    sets = validate_selection(sys, S, overrides)
    return MultiProblem(sys=sys, polys=tuple(polys), sets=sets)


@dataclass(frozen=True)
class ExtendedBasis:
    """Ordered monomial basis: quotient-basis monomials first, then the
    remaining monomials of degree <= t in canonical order."""

    monomials: tuple[Monomial, ...]
    n_star: int

    def index(self, m: Monomial) -> int:
        return self.monomials.index(m)


def extended_basis(sys: DegreeSystem, sets: MonomialSets) -> ExtendedBasis:
    in_T = set(sets.T)
    rest = tuple(m for m in monomials_up_to(sys.n, sys.t) if m not in in_T)
    monos = tuple(sets.T) + rest
    expected = math.comb(sys.t + sys.n, sys.n) + sets.s
    assert len(monos) == expected, "extended basis has the wrong dimension"
    return ExtendedBasis(monomials=monos, n_star=expected)


def multiplication_matrix(
    sys: DegreeSystem,
    f: Polynomial,
    i: int,
    basis: ExtendedBasis,
) -> LabeledMatrix:
    """Rows x^a f_i over the extended basis, a running over R_i (i is 1-based)."""
    if not 1 <= i <= sys.n + 1:
        raise ShapeMismatch(f"block index {i} out of range")
    multipliers = multiplier_sets(sys)[i - 1]
    index = {m: pos for pos, m in enumerate(basis.monomials)}
    rows = []
    for alpha in multipliers:
        row = [Fraction(0)] * basis.n_star
        for m, c in f.terms.items():
            row[index[alpha * m]] = c
        rows.append(row)
    return matrix(
        rows,
        row_labels=[(i, alpha) for alpha in multipliers],
        col_labels=basis.monomials,
    )


def coefficient_stack(
    sys: DegreeSystem,
    polys: Sequence[Polynomial],
    basis: ExtendedBasis,
    blocks: Optional[int] = None,
) -> LabeledMatrix:
    """Stack of the first ``blocks`` multiplication matrices (default all n+1)."""
    count = blocks if blocks is not None else sys.n + 1
    return vertical_stack(
        [multiplication_matrix(sys, polys[i], i + 1, basis) for i in range(count)]
    )


def macaulay_chardin_matrix(p: MultiProblem) -> LabeledMatrix:
    """The (N-k)-square stack of all blocks minus the S and T* columns."""
    basis = extended_basis(p.sys, p.sets)
    stacked = coefficient_stack(p.sys, p.polys, basis)
    drop = list(p.sets.S) + list(p.sets.T[: p.sets.s])
    trimmed = delete_columns(stacked, drop)
    assert trimmed.rows == trimmed.cols, "Macaulay-Chardin matrix must be square"
    return trimmed


def _is_extraneous_row(sys: DegreeSystem, i: int, alpha: Monomial) -> bool:
    # i is the 1-based block; rows from the last block never qualify
    if i > sys.n:
        return False
    if sys.t - sys.degrees[i - 1] - alpha.degree >= sys.last_degree:
        return True
    return any(alpha.exps[j] >= sys.degrees[j] for j in range(i, sys.n))


def _is_extraneous_column(sys: DegreeSystem, m: Monomial) -> bool:
    oversized = [j for j in range(sys.n) if m.exps[j] >= sys.degrees[j]]
    if len(oversized) >= 2:
        return True
    return bool(oversized) and sys.t - m.degree >= sys.last_degree


def extraneous_factor(
    sys: DegreeSystem,
    polys: Sequence[Polynomial],
    basis: ExtendedBasis,
) -> Fraction:
    """Determinant of the Macaulay minor that splits off the extraneous
    content: rows x^a f_i (i <= n) with t - d_i - |a| >= d_(n+1) or some
    later-indexed exponent out of range; columns with degree slack
    >= d_(n+1) and one out-of-range exponent, or two out-of-range
    exponents.  The empty minor has determinant 1, and the value never
    involves the last polynomial or the selection."""
    stacked = coefficient_stack(sys, polys, basis, blocks=sys.n)
    row_idx = [
        pos
        for pos, (i, alpha) in enumerate(stacked.row_labels)
        if _is_extraneous_row(sys, i, alpha)
    ]
    cols = [m for m in basis.monomials if _is_extraneous_column(sys, m)]
    minor = select_columns(select_rows(stacked, row_idx), cols)
    assert minor.rows == minor.cols, "extraneous minor must be square"
    return determinant(minor)


def order_subresultant(p: MultiProblem) -> Fraction:
    """det(Macaulay-Chardin matrix) / extraneous factor.

    Raises ExtraneousFactorVanishes on non-generic specializations where
    the division is 0/0; callers should re-randomize the instance.  The
    sign is the one induced by the fixed row and column orderings.
    """
    basis = extended_basis(p.sys, p.sets)
    extraneous = extraneous_factor(p.sys, p.polys, basis)
    if extraneous == 0:
        raise ExtraneousFactorVanishes("specialization killed the extraneous minor")
    return determinant(macaulay_chardin_matrix(p)) / extraneous


def subsystem_matrix(
    sys: DegreeSystem,
    polys: Sequence[Polynomial],
    sets: MonomialSets,
    basis: ExtendedBasis,
) -> LabeledMatrix:
    """Square stack of the first n blocks on the columns outside the
    quotient basis (the matrix whose determinant carries the leading-form
    subresultants and the extraneous block)."""
    stacked = coefficient_stack(sys, polys, basis, blocks=sys.n)
    in_T = set(sets.T)
    cols = [m for m in basis.monomials if m.degree <= sys.t and m not in in_T]
    trimmed = select_columns(stacked, cols)
    assert trimmed.rows == trimmed.cols, "subsystem matrix must be square"
    return trimmed


def low_degree_block(
    sys: DegreeSystem,
    polys: Sequence[Polynomial],
    sets: MonomialSets,
    basis: ExtendedBasis,
) -> LabeledMatrix:
    """Bottom diagonal block of the subsystem matrix under the graded
    descending reordering: rows x^a f_i with |a| <= t - d_i - d_(n+1),
    columns outside the quotient basis of degree <= t - d_(n+1)."""
    stacked = coefficient_stack(sys, polys, basis, blocks=sys.n)
    row_idx = [
        pos
        for pos, (i, alpha) in enumerate(stacked.row_labels)
        if alpha.degree <= sys.t - sys.degrees[i - 1] - sys.last_degree
    ]
    in_T = set(sets.T)
    cols = [
        m
        for m in basis.monomials
        if m.degree <= sys.t - sys.last_degree and m not in in_T
    ]
    block = select_columns(select_rows(stacked, row_idx), cols)
    assert block.rows == block.cols, "low-degree block must be square"
    return block


def _check_forms(fbars: Sequence[Polynomial]) -> tuple[int, ...]:
    n = len(fbars)
    for f in fbars:
        if f.n_vars != n:
            raise ArityMismatch("forms must live in as many variables as there are forms")
        if any(m.degree != f.degree for m in f.terms):
            raise NotHomogeneous(f"{f} is not homogeneous of degree {f.degree}")
    return tuple(f.degree for f in fbars)


def _graded_rows(degrees: Sequence[int], j: int) -> list[tuple[int, Monomial]]:
    """Row index set of the degree-j construction: (i, a) with |a| = j - d_i
    and a reduced in every coordinate before i (1-based blocks)."""
    n = len(degrees)
    rows = []
    for i in range(1, n + 1):
        target = j - degrees[i - 1]
        if target < 0:
            continue
        for alpha in monomials_of_degree(n, target):
            if all(alpha.exps[l] < degrees[l] for l in range(i - 1)):
                rows.append((i, alpha))
    return rows


def leading_form_matrix(
    fbars: Sequence[Polynomial],
    j: int,
    T_j: Sequence[Monomial],
) -> LabeledMatrix:
    """Degree-j Macaulay matrix of n forms in n variables, minus the
    columns of T_j (which must hold exactly the graded Hilbert count)."""
    degrees = _check_forms(fbars)
    n = len(fbars)
    if len(set(T_j)) != len(T_j):
        raise DuplicateMonomial("repeated monomial in the degree slice")
    if any(m.degree != j for m in T_j):
        raise ShapeMismatch(f"slice monomials must have degree {j}")
    if len(T_j) != hilbert_graded(degrees, j):
        raise WrongCardinality(
            f"slice needs {hilbert_graded(degrees, j)} monomials, got {len(T_j)}"
        )
    skip = set(T_j)
    cols = [m for m in monomials_of_degree(n, j) if m not in skip]
    index = {m: pos for pos, m in enumerate(cols)}
    rows = []
    labels = []
    for i, alpha in _graded_rows(degrees, j):
        row = [Fraction(0)] * len(cols)
        for m, c in fbars[i - 1].terms.items():
            pos = index.get(alpha * m)
            if pos is not None:
                row[pos] = c
        rows.append(row)
        labels.append((i, alpha))
    out = matrix(rows, row_labels=labels, col_labels=cols, cols=len(cols))
    assert out.rows == out.cols, "graded matrix must be square"
    return out


def leading_form_extraneous(fbars: Sequence[Polynomial], j: int) -> Fraction:
    """Extraneous factor of the degree-j construction: the minor on rows
    with a later-indexed out-of-range exponent and columns divisible by
    two distinct x_i^(d_i).  Depends only on j, not on the slice choice."""
    degrees = _check_forms(fbars)
    n = len(fbars)
    all_cols = monomials_of_degree(n, j)
    cols = [
        m
        for m in all_cols
        if sum(1 for l in range(n) if m.exps[l] >= degrees[l]) >= 2
    ]
    index = {m: pos for pos, m in enumerate(cols)}
    rows = []
    for i, alpha in _graded_rows(degrees, j):
        if any(alpha.exps[l] >= degrees[l] for l in range(i, n)):
            row = [Fraction(0)] * len(cols)
            for m, c in fbars[i - 1].terms.items():
                pos = index.get(alpha * m)
                if pos is not None:
                    row[pos] = c
            rows.append(row)
    minor = matrix(rows, cols=len(cols))
    assert minor.rows == minor.cols, "graded extraneous minor must be square"
    return determinant(minor)


def leading_form_subresultant(
    fbars: Sequence[Polynomial],
    j: int,
    T_j: Sequence[Monomial],
) -> Fraction:
    """Order-j subresultant of the leading forms with respect to T_j:
    det of the graded matrix divided by the graded extraneous factor."""
    extraneous = leading_form_extraneous(fbars, j)
    if extraneous == 0:
        raise ExtraneousFactorVanishes(f"degree-{j} extraneous factor vanished")
    return determinant(leading_form_matrix(fbars, j, T_j)) / extraneous


def _check_points(roots: Sequence[Point], expected: int) -> list[Point]:
    pts = [tuple(Fraction(x) for x in pt) for pt in roots]
    if len(pts) != expected:
        raise ShapeMismatch(f"need {expected} roots, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise SingularVandermonde("roots must be pairwise distinct")
    return pts


def _slice(sets: MonomialSets, j: int) -> list[Monomial]:
    return [m for m in sets.T if m.degree == j]


def leading_product(
    sys: DegreeSystem,
    sets: MonomialSets,
    fbars: Sequence[Polynomial],
) -> Fraction:
    """Product of the graded subresultants over degrees
    t - d_(n+1) + 1 .. t (empty range gives 1)."""
    value = ONE
    for j in range(max(0, sys.t - sys.last_degree + 1), sys.t + 1):
        value *= leading_form_subresultant(fbars, j, _slice(sets, j))
    return value


def root_block_matrix(
    sys: DegreeSystem,
    sets: MonomialSets,
    roots: Sequence[Point],
    f_last: Polynomial,
) -> LabeledMatrix:
    """Square root-power matrix with blocks (xi^gamma for the selection,
    xi^alpha for T*, xi^beta * f_(n+1)(xi) for R_(n+1))."""
    pts = _check_points(roots, sys.bezout)
    star = sets.T[: sets.s]
    evals = [evaluate(f_last, pt) for pt in pts]
    top = power_matrix(list(sets.S) + list(star), pts)
    bottom_rows = [
        [v * m.value_at(pt) for pt, v in zip(pts, evals)] for m in sets.R[sys.n]
    ]
    combined = list(top.entries) + bottom_rows
    out = matrix(combined, cols=len(pts))
    assert out.rows == out.cols, "root block matrix must be square"
    return out


def subresultant_from_roots(
    sys: DegreeSystem,
    sets: MonomialSets,
    roots: Sequence[Point],
    f_last: Polynomial,
    fbars: Sequence[Polynomial],
) -> Fraction:
    """Root-side value of the order-t subresultant: the product of
    graded leading-form subresultants times det(root blocks) divided by
    the generalized Vandermonde of the quotient basis.  Agrees with the
    coefficient route up to a sign fixed by the orderings."""
    pts = _check_points(roots, sys.bezout)
    vdm = determinant(vandermonde(sets.T, pts))
    if vdm == 0:
        raise SingularVandermonde("quotient-basis Vandermonde vanished")
    numerator = determinant(root_block_matrix(sys, sets, pts, f_last))
    return leading_product(sys, sets, fbars) * numerator / vdm


def determinant_identity(p: MultiProblem, roots: Sequence[Point]) -> tuple[Fraction, Fraction]:
    """Both sides of the root-product identity, division free:
    (det(Macaulay-Chardin) * det(Vandermonde),
     det(subsystem matrix) * det(root blocks)).
    The two agree in absolute value; the identity survives even when the
    extraneous factor vanishes."""
    pts = _check_points(roots, p.sys.bezout)
    basis = extended_basis(p.sys, p.sets)
    vdm = determinant(vandermonde(p.sets.T, pts))
    if vdm == 0:
        raise SingularVandermonde("quotient-basis Vandermonde vanished")
    lhs = determinant(macaulay_chardin_matrix(p)) * vdm
    rhs = determinant(subsystem_matrix(p.sys, p.polys, p.sets, basis)) * determinant(
        root_block_matrix(p.sys, p.sets, pts, p.polys[p.sys.n])
    )
    return lhs, rhs


_PAIR_BASIS = [
    Monomial((0, 0)),
    Monomial((1, 0)),
    Monomial((0, 1)),
    Monomial((1, 1)),
    Monomial((2, 0)),
    Monomial((0, 2)),
]


def vandermonde_minor_ratios(
    f1: Polynomial,
    f2: Polynomial,
    roots: Sequence[Point],
) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """For two quadratics in two variables with four known common roots,
    the ratios (-1)^(i+j) det(V with rows i, j deleted) / (a_i b_j - a_j b_i)
    over all index pairs, in the coefficient order (1, x1, x2, x1x2,
    x1^2, x2^2).  All well-defined ratios coincide; pairs whose
    denominator vanishes are skipped and reported separately."""
    if f1.n_vars != 2 or f2.n_vars != 2 or f1.degree != 2 or f2.degree != 2:
        raise ShapeMismatch("expects two bivariate quadratics")
    pts = _check_points(roots, 4)
    a = [f1.coefficient(m) for m in _PAIR_BASIS]
    b = [f2.coefficient(m) for m in _PAIR_BASIS]
    full = power_matrix(_PAIR_BASIS, pts)
    ratios = []
    skipped = []
    for i in range(6):
        for j in range(i + 1, 6):
            denom = a[i] * b[j] - a[j] * b[i]
            if denom == 0:
                skipped.append((i, j))
                continue
            keep = [r for r in range(6) if r not in (i, j)]
            minor = determinant(select_rows(full, keep))
            ratios.append(Fraction((-1) ** (i + j)) * minor / denom)
    return ratios, skipped


def _plus_one_selection(sys: DegreeSystem, S_plus: Sequence[Monomial]) -> list[Monomial]:
    members = sorted(S_plus, key=Monomial.sort_key)
    if len(set(members)) != len(members):
        raise DuplicateMonomial("selection repeats a monomial")
    k = hilbert_count(sys.degrees, sys.n, sys.t)
    if len(members) != k + 1:
        raise WrongCardinality(f"selection needs {k + 1} monomials, got {len(members)}")
    for m in members:
        if m.degree > sys.t:
            raise DegreeTooHigh(f"{m} exceeds order {sys.t}")
    return members


def generalized_subresultant_polynomial(
    sys: DegreeSystem,
    polys: Sequence[Polynomial],
    S_plus: Sequence[Monomial],
    overrides: Optional[Mapping[int, Sequence[Monomial]]] = None,
) -> Polynomial:
    """s(x) = sum_j Delta_(S_plus minus gamma_j) x^(gamma_j); lies in the
    ideal of the polynomials, so it vanishes at every common root."""
    members = _plus_one_selection(sys, S_plus)
    terms = {}
    for j, gamma in enumerate(members):
        rest = [m for idx, m in enumerate(members) if idx != j]
        problem = MultiProblem(
            sys=sys, polys=tuple(polys), sets=validate_selection(sys, rest, overrides)
        )
        terms[gamma] = order_subresultant(problem)
    degree = max(m.degree for m in members)
    return Polynomial(sys.n, degree, terms)


def generalized_from_roots(
    sys: DegreeSystem,
    roots: Sequence[Point],
    f_last: Polynomial,
    fbars: Sequence[Polynomial],
    S_plus: Sequence[Monomial],
    overrides: Optional[Mapping[int, Sequence[Monomial]]] = None,
) -> Polynomial:
    """Root-side determinant form of the generalized subresultant: the
    bordered root-power determinant whose first column holds the
    monomials x^gamma, expanded exactly along that column, scaled by the
    leading-form product over the Vandermonde."""
    members = _plus_one_selection(sys, S_plus)
    pts = _check_points(roots, sys.bezout)
    base_sets = validate_selection(sys, members[1:], overrides)
    vdm = determinant(vandermonde(base_sets.T, pts))
    if vdm == 0:
        raise SingularVandermonde("quotient-basis Vandermonde vanished")
    scale = leading_product(sys, base_sets, fbars) / vdm
    terms: dict[Monomial, Fraction] = {}
    for j, gamma in enumerate(members):
        rest = [m for idx, m in enumerate(members) if idx != j]
        sets_j = validate_selection(sys, rest, overrides)
        minor = determinant(root_block_matrix(sys, sets_j, pts, f_last))
        terms[gamma] = Fraction((-1) ** j) * scale * minor
    degree = max(m.degree for m in members)
    return Polynomial(sys.n, degree, terms)
