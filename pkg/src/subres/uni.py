"""Univariate subresultants from coefficient matrices and from roots.

Two routes are implemented for every quantity.  The coefficient route
builds banded multiplication matrices over the monomial basis
(1, x, ..., x^t*) and takes exact determinants; the root route evaluates
discrete-Wronskian determinants over the roots of g and divides by the
Vandermonde determinant.  The package-wide sign conventions:

* ``resultant`` is the classical Sylvester determinant (rows
  x^(d2-1) f ... f, x^(d1-1) g ... g over the descending basis), so
  resultant(x - a, x - b) = a - b;
* order-t subresultants stack the f rows above the g rows over the
  ascending basis, rows indexed by increasing multiplier degree.

With these choices the scalar/order-t relations
Delta_empty = (-1)^(d1 d2) resultant and
Delta_(S_j) = (-1)^((d1-k)(d2-k)) S_k^(j) are literal equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinat import selection_sign
from .errors import (
    BadOrderRange,
    DegreeTooHigh,
    DuplicateMonomial,
    IndexOutOfRange,
    SingularVandermonde,
    WrongCardinality,
    ZeroLeadingCoefficient,
)
from .exactmath import LabeledMatrix, delete_columns, determinant, matrix, vertical_stack
from .poly import Monomial, Polynomial, evaluate, univariate

ZERO = Fraction(0)


def order_count(d1: int, d2: int, t: int) -> int:
    """Selection size k = t+1 - max(0, t-d1+1) - max(0, t-d2+1)."""
    return t + 1 - max(0, t - d1 + 1) - max(0, t - d2 + 1)


def _coeff(p: Polynomial, i: int) -> Fraction:
    if i < 0 or i > p.degree:
        return ZERO
    return p.coefficient(Monomial((i,)))


def _selection_exps(S: Sequence[Monomial], t: int) -> list[int]:
    exps = sorted(m.exps[0] for m in S)
    if len(set(exps)) != len(exps):
        raise DuplicateMonomial("selection repeats a monomial")
    if exps and exps[-1] > t:
        raise DegreeTooHigh(f"selection exponent {exps[-1]} exceeds order {t}")
    return exps


def _check_roots(roots: Sequence[Fraction]) -> list[Fraction]:
    pts = [Fraction(r) for r in roots]
    if len(set(pts)) != len(pts):
        raise SingularVandermonde("roots must be pairwise distinct")
    return pts


@dataclass
class UniProblem:
    """A pair (f, g) with a target order t and a monomial selection S."""

    f: Polynomial
    g: Polynomial
    t: int
    S: tuple[Monomial, ...]

    def __post_init__(self):
        d1, d2 = self.f.degree, self.g.degree
        if not 0 <= self.t <= d1 + d2 - 1:
            raise BadOrderRange(f"t must lie in [0, {d1 + d2 - 1}]")
        k = order_count(d1, d2, self.t)
        _selection_exps(self.S, self.t)
        if len(self.S) != k:
            raise WrongCardinality(f"selection needs {k} monomials, got {len(self.S)}")

    @property
    def t_star(self) -> int:
        return max(self.g.degree - 1, self.t)


def multiplication_matrices(f: Polynomial, g: Polynomial, t: int) -> tuple[LabeledMatrix, LabeledMatrix]:
    """Banded matrices of p -> x^a p over the basis (1, x, ..., x^t*).

    The f block has max(0, t - d1 + 1) rows (empty when t < d1) and the
    g block max(0, t - d2 + 1); row a holds the coefficients of x^a
    times the polynomial.
    """
    t_star = max(g.degree - 1, t)
    cols = [Monomial((c,)) for c in range(t_star + 1)]

    def block(p: Polynomial, tag: str) -> LabeledMatrix:
        n_rows = max(0, t - p.degree + 1)
        entries = [[_coeff(p, c - a) for c in range(t_star + 1)] for a in range(n_rows)]
        labels = [(tag, Monomial((a,))) for a in range(n_rows)]
        return matrix(entries, row_labels=labels, col_labels=cols)

    return block(f, "f"), block(g, "g")


def coefficient_stack(f: Polynomial, g: Polynomial, t: int) -> LabeledMatrix:
    m_f, m_g = multiplication_matrices(f, g, t)
    return vertical_stack([m_f, m_g])


def order_subresultant(f: Polynomial, g: Polynomial, t: int, S: Sequence[Monomial]) -> Fraction:
    """Order-t subresultant: stack the f and g blocks, delete the columns
    of S and of x^(t+1)..x^t*, and take the determinant."""
    d1, d2 = f.degree, g.degree
    if not 0 <= t <= d1 + d2 - 1:
        raise BadOrderRange(f"t must lie in [0, {d1 + d2 - 1}]")
    exps = _selection_exps(S, t)
    k = order_count(d1, d2, t)
    if len(exps) != k:
        raise WrongCardinality(f"selection needs {k} monomials, got {len(exps)}")
    t_star = max(d2 - 1, t)
    stacked = coefficient_stack(f, g, t)
    drop = [Monomial((e,)) for e in exps] + [Monomial((c,)) for c in range(t + 1, t_star + 1)]
    return determinant(delete_columns(stacked, drop))


def selection_stack(f: Polynomial, g: Polynomial, t: int, S: Sequence[Monomial]) -> LabeledMatrix:
    """Square stack of indicator rows for S and x^(t+1)..x^t* above the
    f and g blocks; its determinant is selection_sign(S) times the
    order-t subresultant."""
    exps = _selection_exps(S, t)
    t_star = max(g.degree - 1, t)
    stacked = coefficient_stack(f, g, t)
    kept = exps + list(range(t + 1, t_star + 1))
    rows = []
    for e in kept:
        rows.append([Fraction(1) if c == e else ZERO for c in range(t_star + 1)])
    indicator = matrix(
        rows,
        row_labels=[("sel", Monomial((e,))) for e in kept],
        col_labels=stacked.col_labels,
    )
    return vertical_stack([indicator, stacked])


def scalar_subresultant(f: Polynomial, g: Polynomial, k: int, j: int) -> Fraction:
    """Classical scalar subresultant S_k^(j) of size d1 + d2 - 2k.

    Rows are x^m f (m = d2-k-1 .. 0) then x^m g (m = d1-k-1 .. 0) over
    the descending column degrees d1+d2-k-1 .. k+1 plus a final column
    holding the degree-j coefficients.
    """
    d1, d2 = f.degree, g.degree
    if not 0 <= j <= k <= min(d1, d2):
        raise IndexOutOfRange(f"need 0 <= j <= k <= {min(d1, d2)}")
    if d1 + d2 - 2 * k == 0:
        return Fraction(1)
    col_degrees = list(range(d1 + d2 - k - 1, k, -1)) + [j]

    rows = []
    for m in range(d2 - k - 1, -1, -1):
        rows.append([_coeff(f, c - m) for c in col_degrees])
    for m in range(d1 - k - 1, -1, -1):
        rows.append([_coeff(g, c - m) for c in col_degrees])
    return determinant(matrix(rows, cols=len(col_degrees)))


def subresultant_polynomial(f: Polynomial, g: Polynomial, k: int) -> Polynomial:
    """sres_k = sum_j S_k^(j) x^j."""
    coeffs = [scalar_subresultant(f, g, k, j) for j in range(k + 1)]
    return univariate(coeffs, degree=k)


def resultant(f: Polynomial, g: Polynomial) -> Fraction:
    """Classical Sylvester resultant; resultant(x - a, x - b) = a - b."""
    d1, d2 = f.degree, g.degree
    if d1 < 1 or d2 < 1:
        raise BadOrderRange("resultant needs positive formal degrees")
    col_degrees = list(range(d1 + d2 - 1, -1, -1))
    rows = []
    for m in range(d2 - 1, -1, -1):
        rows.append([_coeff(f, c - m) for c in col_degrees])
    for m in range(d1 - 1, -1, -1):
        rows.append([_coeff(g, c - m) for c in col_degrees])
    return determinant(matrix(rows, cols=d1 + d2))


def root_power_matrix(
    exps_rows: Sequence[int],
    roots: Sequence[Fraction],
    weights: Sequence[Fraction] | None = None,
) -> LabeledMatrix:
    """Rows of root powers xi_j^e, each column optionally scaled."""
    weights = list(weights) if weights is not None else [Fraction(1)] * len(roots)
    rows = [[w * Fraction(r) ** e for r, w in zip(roots, weights)] for e in exps_rows]
    return matrix(rows, cols=len(roots))


def subresultant_from_roots(
    f: Polynomial,
    g_roots: Sequence[Fraction],
    g_lead: Fraction,
    t: int,
    S: Sequence[Monomial],
) -> Fraction:
    """Order-t subresultant evaluated on the roots of g.

    Builds the square root-power matrix with blocks (xi^gamma for the
    selection, xi^(t+1..t*), xi^(0..t-d1) f(xi)) and returns
    sign(S) * g_lead^(t*-d2+1) * det / Vandermonde(roots).
    """
    roots = _check_roots(g_roots)
    g_lead = Fraction(g_lead)
    if g_lead == 0:
        raise ZeroLeadingCoefficient("g needs a nonzero leading coefficient")
    d1, d2 = f.degree, len(roots)
    t_star = max(d2 - 1, t)
    exps = _selection_exps(S, t)
    if len(exps) != order_count(d1, d2, t):
        raise WrongCardinality("selection has the wrong cardinality")

    f_vals = [evaluate(f, (r,)) for r in roots]
    top = root_power_matrix(exps + list(range(t + 1, t_star + 1)), roots)
    bottom = root_power_matrix(list(range(0, t - d1 + 1)), roots, weights=f_vals)
    numerator = determinant(matrix(list(top.entries) + list(bottom.entries), cols=d2))
    vandermonde_det = determinant(root_power_matrix(list(range(d2)), roots))
    sign = selection_sign(
        [Monomial((e,)) for e in exps], t, t_star, [Monomial((c,)) for c in range(t_star + 1)]
    )
    return sign * g_lead ** (t_star - d2 + 1) * numerator / vandermonde_det


def _interpolate(samples: Sequence[tuple[Fraction, Fraction]], degree: int) -> Polynomial:
    """Exact Lagrange interpolation through the given (x, value) pairs."""
    from .poly import constant, variable

    x = variable(1, 0)
    total = Polynomial(1, degree, {})
    for i, (xi, yi) in enumerate(samples):
        if yi == 0:
            continue
        basis = constant(1, Fraction(1))
        denom = Fraction(1)
        for j, (xj, _) in enumerate(samples):
            if i != j:
                basis = basis * (x - constant(1, xj))
                denom *= xi - xj
        total = total + Polynomial(1, degree, basis.scaled(yi / denom).terms)
    return total


def sres_from_roots(
    f: Polynomial,
    g_roots: Sequence[Fraction],
    g_lead: Fraction,
    k: int,
) -> Polynomial:
    """Subresultant polynomial sres_k evaluated on the roots of g.

    The discrete-Wronskian determinant with rows (x - xi_j) xi_j^(i-1)
    (i = 1..k) and xi_j^i f(xi_j) (i = 0..d2-k-1) is a degree <= k
    polynomial in x; it is sampled at k+1 points and interpolated, then
    scaled by (-1)^((d1-k)(d2-k)) g_lead^(d1-k) / Vandermonde.
    """
    roots = _check_roots(g_roots)
    g_lead = Fraction(g_lead)
    if g_lead == 0:
        raise ZeroLeadingCoefficient("g needs a nonzero leading coefficient")
    d1, d2 = f.degree, len(roots)
    if not 0 <= k <= min(d1, d2):
        raise IndexOutOfRange(f"need 0 <= k <= {min(d1, d2)}")

    f_vals = [evaluate(f, (r,)) for r in roots]

    def wronskian_at(x0: Fraction) -> Fraction:
        rows = []
        for i in range(k):
            rows.append([(x0 - r) * r**i for r in roots])
        for i in range(d2 - k):
            rows.append([v * r**i for r, v in zip(roots, f_vals)])
        return determinant(matrix(rows, cols=d2))

    samples = [(Fraction(v), wronskian_at(Fraction(v))) for v in range(k + 1)]
    w = _interpolate(samples, degree=k)
    vdm = determinant(root_power_matrix(list(range(d2)), roots))
    scale = Fraction((-1) ** ((d1 - k) * (d2 - k))) * g_lead ** (d1 - k) / vdm
    return Polynomial(1, k, w.scaled(scale).terms)


def _generalized_exps(S_plus: Sequence[Monomial], d1: int, d2: int, t: int) -> list[int]:
    if not d2 <= t <= d1 + d2 - 1:
        raise BadOrderRange(f"order must lie in [{d2}, {d1 + d2 - 1}]")
    exps = sorted(m.exps[0] for m in S_plus)
    if len(set(exps)) != len(exps):
        raise DuplicateMonomial("selection repeats a monomial")
    if exps[-1] > t:
        raise DegreeTooHigh(f"exponent {exps[-1]} exceeds order {t}")
    k = d2 - max(0, t - d1 + 1)
    if len(exps) != k + 1:
        raise WrongCardinality(f"selection needs {k + 1} monomials, got {len(exps)}")
    return exps


def generalized_subresultant(
    f: Polynomial,
    g: Polynomial,
    t: int,
    S_plus: Sequence[Monomial],
) -> Polynomial:
    """s(x) = sum_j Delta_(S_plus minus gamma_j) x^(gamma_j).

    S_plus holds k+1 monomials where k = d2 - max(0, t-d1+1); each term
    drops one of them and takes the order-t subresultant of the rest.
    """
    exps = _generalized_exps(S_plus, f.degree, g.degree, t)
    terms = {}
    for j, gamma in enumerate(exps):
        rest = [Monomial((e,)) for idx, e in enumerate(exps) if idx != j]
        terms[Monomial((gamma,))] = order_subresultant(f, g, t, rest)
    return Polynomial(1, exps[-1], terms)


def generalized_from_roots(
    f: Polynomial,
    g_roots: Sequence[Fraction],
    g_lead: Fraction,
    t: int,
    S_plus: Sequence[Monomial],
) -> Polynomial:
    """Root-side determinant form of the generalized subresultant.

    Computes g_lead^(t-d2+1) / Vandermonde * x^(gamma_0) * det of the
    telescoping-difference matrix with rows
    (x^(gamma_i - gamma_(i-1)) - xi^(gamma_i - gamma_(i-1))) xi^(gamma_(i-1))
    and xi^i f(xi); the determinant is expanded by sampling and exact
    interpolation.  The closed form matches the coefficient-side sum
    exactly exactly when the exponents gamma_j all share the parity of
    their index (up to one global flip); see the generalized-identity
    tests for the sign bookkeeping on mixed-parity selections.
    """
    roots = _check_roots(g_roots)
    g_lead = Fraction(g_lead)
    if g_lead == 0:
        raise ZeroLeadingCoefficient("g needs a nonzero leading coefficient")
    d1, d2 = f.degree, len(roots)
    exps = _generalized_exps(S_plus, d1, d2, t)
    k = len(exps) - 1
    f_vals = [evaluate(f, (r,)) for r in roots]

    def telescoping_at(x0: Fraction) -> Fraction:
        rows = []
        for i in range(1, k + 1):
            delta = exps[i] - exps[i - 1]
            rows.append([(x0**delta - r**delta) * r ** exps[i - 1] for r in roots])
        for i in range(d2 - k):
            rows.append([v * r**i for r, v in zip(roots, f_vals)])
        return determinant(matrix(rows, cols=d2))

    span = exps[-1] - exps[0]
    samples = [(Fraction(v), telescoping_at(Fraction(v))) for v in range(span + 1)]
    inner = _interpolate(samples, degree=span)
    vdm = determinant(root_power_matrix(list(range(d2)), roots))
    scaled = inner.scaled(g_lead ** (t - d2 + 1) / vdm)
    shift = Monomial((exps[0],))
    return Polynomial(1, exps[-1], {m * shift: c for m, c in scaled.terms.items()})
