"""Independent brute-force counterparts used only for cross-validation.

These are deliberately slow and structurally different from the main
pipelines (cofactor expansion vs. Bareiss, closed form vs. enumeration,
root product vs. determinant), so agreement between the two routes is
evidence rather than tautology.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import NonSquareMatrix, TooLarge
from .exactmath import LabeledMatrix

MAX_COFACTOR_SIZE = 8


def det_cofactor(m: LabeledMatrix) -> Fraction:
    """Determinant by recursive first-row cofactor expansion (size <= 8)."""
    if m.rows != m.cols:
        raise NonSquareMatrix(f"{m.rows}x{m.cols}")
    if m.rows > MAX_COFACTOR_SIZE:
        raise TooLarge(f"cofactor expansion capped at {MAX_COFACTOR_SIZE}")
    return _expand([list(row) for row in m.entries])


def _expand(grid: list[list[Fraction]]) -> Fraction:
    n = len(grid)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return grid[0][0]
    total = Fraction(0)
    sign = 1
    for j in range(n):
        c = grid[0][j]
        if c:
            minor = [row[:j] + row[j + 1 :] for row in grid[1:]]
            total += sign * c * _expand(minor)
        sign = -sign
    return total


def hilbert_ie(degrees: Sequence[int], n_vars: int, t: int) -> int:
    """Hilbert function of a complete intersection by inclusion-exclusion.

    Koszul count: sum over subsets I of the degree list of
    (-1)^|I| * C(t - sum(I) + n_vars, n_vars), where binomials with a
    negative top shift contribute 0.
    """
    total = 0
    degs = list(degrees)
    for size in range(len(degs) + 1):
        for subset in combinations(degs, size):
            shift = t - sum(subset)
            if shift >= 0:
                total += (-1) ** size * math.comb(shift + n_vars, n_vars)
    return total


def res_product(
    f_roots: Sequence[Fraction],
    f_lead: Fraction,
    g_roots: Sequence[Fraction],
    g_lead: Fraction,
) -> Fraction:
    """Root-product resultant a^d2 * b^d1 * prod (alpha_i - beta_j)."""
    f_lead = Fraction(f_lead)
    g_lead = Fraction(g_lead)
    value = f_lead ** len(g_roots) * g_lead ** len(f_roots)
    for a in f_roots:
        for b in g_roots:
            value *= Fraction(a) - Fraction(b)
    return value
