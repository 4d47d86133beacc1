"""Exact rational scalars and dense labeled matrices.

Scalars are ``fractions.Fraction`` (aliased ``Rational``): arbitrary
precision, always in canonical form (positive denominator, reduced).
Matrices are small dense grids of rationals whose rows and columns may
carry labels; every determinant in the package goes through
:func:`determinant`, a fraction-free Bareiss elimination on the integer
matrix obtained by clearing each row's denominators.

All values are treated as immutable; functions return new matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Optional, Sequence

from .errors import ColumnMismatch, NonSquareMatrix, UnknownColumnLabel

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rational_from_string(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a canonical rational."""
    return Fraction(text)


def rational_to_string(value: Fraction) -> str:
    """Serialize canonically: ``"p/q"``, or just ``"p"`` when q = 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class LabeledMatrix:
    """Dense rational matrix with optional row and column labels.

    ``entries`` is a tuple of row tuples.  Row labels are arbitrary
    hashable tags (the package uses ``(block, monomial)`` pairs), column
    labels are monomials; both must be pairwise distinct when present.
    """

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]
    row_labels: Optional[tuple[Hashable, ...]] = None
    col_labels: Optional[tuple[Hashable, ...]] = None

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("entry grid does not match declared row count")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged row in matrix entries")
        for labels, count, what in (
            (self.row_labels, self.rows, "row"),
            (self.col_labels, self.cols, "column"),
        ):
            if labels is not None:
                if len(labels) != count:
                    raise ValueError(f"{what} labels do not match dimension")
                if len(set(labels)) != count:
                    raise ValueError(f"duplicate {what} label")

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def column_index(self, label) -> int:
        if self.col_labels is None:
            raise UnknownColumnLabel("matrix has no column labels")
        try:
            return self.col_labels.index(label)
        except ValueError:
            raise UnknownColumnLabel(f"no column labeled {label!r}") from None


def matrix(
    entries: Iterable[Iterable[Fraction]],
    row_labels: Optional[Sequence] = None,
    col_labels: Optional[Sequence] = None,
    cols: Optional[int] = None,
) -> LabeledMatrix:
    """Build a LabeledMatrix from any nested iterable of rationals.

    ``cols`` must be given when ``entries`` has no rows (the width of an
    empty matrix is not inferable).
    """
    grid = tuple(tuple(Fraction(x) for x in row) for row in entries)
    if grid:
        width = len(grid[0])
    elif col_labels is not None:
        width = len(col_labels)
    elif cols is not None:
        width = cols
    else:
        width = 0
    return LabeledMatrix(
        rows=len(grid),
        cols=width,
        entries=grid,
        row_labels=tuple(row_labels) if row_labels is not None else None,
        col_labels=tuple(col_labels) if col_labels is not None else None,
    )


def identity(n: int) -> LabeledMatrix:
    return matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])


def determinant(m: LabeledMatrix) -> Fraction:
    """Exact determinant by fraction-free Bareiss elimination.

    Each row's denominators are cleared up front and the cleared factors
    multiplied back at the end, so the elimination runs entirely over
    integers.  The pivot row is the candidate of smallest total
    bit-length (ties broken by lowest index), which keeps intermediate
    swell bounded and the result deterministic.  The empty 0x0 matrix
    has determinant 1.
    """
    if m.rows != m.cols:
        raise NonSquareMatrix(f"{m.rows}x{m.cols} matrix has no determinant")
    n = m.rows
    if n == 0:
        return ONE

    scale = ONE
    a: list[list[int]] = []
    for row in m.entries:
        common = 1
        for x in row:
            common = common * x.denominator // math.gcd(common, x.denominator)
        scale /= common
        a.append([int(x * common) for x in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = -1
        best_cost = -1
        for i in range(k, n):
            if a[i][k]:
                cost = sum(abs(x).bit_length() for x in a[i][k:])
                if pivot_row < 0 or cost < best_cost:
                    pivot_row, best_cost = i, cost
        if pivot_row < 0:
            return ZERO
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return scale * sign * a[n - 1][n - 1]


def delete_columns(m: LabeledMatrix, drop: Iterable) -> LabeledMatrix:
    """Remove the columns labeled by ``drop``, keeping the rest in order."""
    targets = set(drop)
    if not targets:
        return m
    if m.col_labels is None:
        raise UnknownColumnLabel("matrix has no column labels")
    missing = targets - set(m.col_labels)
    if missing:
        raise UnknownColumnLabel(f"labels not present: {sorted(map(repr, missing))}")
    keep = [j for j, lab in enumerate(m.col_labels) if lab not in targets]
    return LabeledMatrix(
        rows=m.rows,
        cols=len(keep),
        entries=tuple(tuple(row[j] for j in keep) for row in m.entries),
        row_labels=m.row_labels,
        col_labels=tuple(m.col_labels[j] for j in keep),
    )


def select_columns(m: LabeledMatrix, keep: Sequence) -> LabeledMatrix:
    """Restrict to the columns labeled by ``keep``, in the given order."""
    indices = [m.column_index(lab) for lab in keep]
    return LabeledMatrix(
        rows=m.rows,
        cols=len(indices),
        entries=tuple(tuple(row[j] for j in indices) for row in m.entries),
        row_labels=m.row_labels,
        col_labels=tuple(keep),
    )


def select_rows(m: LabeledMatrix, indices: Sequence[int]) -> LabeledMatrix:
    return LabeledMatrix(
        rows=len(indices),
        cols=m.cols,
        entries=tuple(m.entries[i] for i in indices),
        row_labels=tuple(m.row_labels[i] for i in indices) if m.row_labels else None,
        col_labels=m.col_labels,
    )


def vertical_stack(blocks: Sequence[LabeledMatrix]) -> LabeledMatrix:
    """Concatenate blocks top to bottom.

    All blocks must agree on their column-label sequence (or, when all
    are unlabeled, on their width).  Row labels are concatenated when
    every block carries them.
    """
    if not blocks:
        raise ColumnMismatch("nothing to stack")
    first = blocks[0]
    for b in blocks[1:]:
        if b.cols != first.cols or b.col_labels != first.col_labels:
            raise ColumnMismatch("blocks disagree on columns")
    entries = tuple(row for b in blocks for row in b.entries)
    if all(b.row_labels is not None for b in blocks):
        row_labels: Optional[tuple] = tuple(lab for b in blocks for lab in b.row_labels)
    else:
        row_labels = None
    return LabeledMatrix(
        rows=sum(b.rows for b in blocks),
        cols=first.cols,
        entries=entries,
        row_labels=row_labels,
        col_labels=first.col_labels,
    )
