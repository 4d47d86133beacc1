"""Seeded verification sweeps over constructed-root instances.

Each suite generates deterministic instances from a seed, checks one
family of exact identities, and returns a report listing every failure
with enough detail to replay it.  The suites back the ``verify`` CLI
verb and the acceptance tests.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import multi, oracle, uni
from .combinat import DegreeSystem, hilbert_count, validate_selection
from .errors import ExtraneousFactorVanishes, SingularVandermonde
from .exactmath import determinant, matrix, rational_to_string
from .instances import (
    RootInstance,
    grid_system,
    random_unimodular,
    transform_system,
    univariate_from_roots,
    vandermonde,
)
from .poly import (
    Monomial,
    Polynomial,
    dehomogenize,
    evaluate,
    leading_form,
    mono,
    monomials_up_to,
    random_polynomial,
)

DEFAULT_SEED = 1729

DEGREE_TRIPLES = ((2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2), (1, 2, 2), (2, 3, 3))


@dataclass
class SuiteReport:
    suite: str
    seed: int
    instances: int = 0
    passed: int = 0
    failures: list[dict] = field(default_factory=list)
    tally: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures and self.instances == self.passed

    def check(self, condition: bool, **context) -> bool:
        self.instances += 1
        name = context.get("check", "check")
        self.tally[name] = self.tally.get(name, 0) + 1
        if condition:
            self.passed += 1
        else:
            self.failures.append({k: str(v) for k, v in context.items()})
        return condition

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "instances": self.instances,
            "passed": self.passed,
            "failures": self.failures,
        }


def _distinct_ints(rng: random.Random, count: int, bound: int = 9) -> list[Fraction]:
    return [Fraction(v) for v in rng.sample(range(-bound, bound + 1), count)]


def _nonzero(rng: random.Random, bound: int = 9) -> Fraction:
    v = 0
    while v == 0:
        v = rng.randint(-bound, bound)
    return Fraction(v)


def _random_selection(rng: random.Random, n_vars: int, t: int, k: int) -> list[Monomial]:
    return rng.sample(monomials_up_to(n_vars, t), k)


# ---------------------------------------------------------------------------
# counting suites


def suite_counts(seed: int = DEFAULT_SEED, max_degree: int = 4, count: int = 0) -> SuiteReport:
    """Hilbert enumeration vs. inclusion-exclusion, plus the two counting
    identities, swept over all systems with n <= 3 and degrees <= max_degree."""
    report = SuiteReport("counts", seed)
    for n in (1, 2, 3):
        for degrees in itertools.product(range(1, max_degree + 1), repeat=n + 1):
            rho = sum(d - 1 for d in degrees[:n])
            for t in range(rho + degrees[n] + 1):
                by_enum = hilbert_count(degrees, n, t)
                by_ie = oracle.hilbert_ie(degrees, n, t)
                report.check(
                    by_enum == by_ie,
                    check="hilbert enumeration vs inclusion-exclusion",
                    n=n, degrees=degrees, t=t, enum=by_enum, closed=by_ie,
                )
                sys_ = DegreeSystem(n=n, degrees=degrees, t=t)
                S = monomials_up_to(n, t)[:by_enum]
                try:
                    validate_selection(sys_, S)
                    ok = True
                except AssertionError:
                    ok = False
                report.check(ok, check="counting identities", n=n, degrees=degrees, t=t)
    return report


def suite_oracles(seed: int = DEFAULT_SEED, max_degree: int = 5, count: int = 200) -> SuiteReport:
    """Bareiss determinant vs. cofactor expansion, and the Sylvester
    resultant vs. the two-sided root product."""
    report = SuiteReport("oracles", seed)
    rng = random.Random(seed)
    for trial in range(count):
        size = rng.randint(0, 7)
        entries = [
            [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(size)]
            for _ in range(size)
        ]
        m = matrix(entries, cols=size)
        report.check(
            determinant(m) == oracle.det_cofactor(m),
            check="determinant vs cofactor", trial=trial, size=size,
        )
    for trial in range(50):
        d1 = rng.randint(1, max_degree)
        d2 = rng.randint(1, max_degree)
        f_roots = _distinct_ints(rng, d1)
        g_roots = _distinct_ints(rng, d2)
        f_lead = _nonzero(rng)
        g_lead = _nonzero(rng)
        f = univariate_from_roots(f_roots, f_lead).polys[0]
        g = univariate_from_roots(g_roots, g_lead).polys[0]
        lhs = uni.resultant(f, g)
        rhs = oracle.res_product(f_roots, f_lead, g_roots, g_lead)
        report.check(lhs == rhs, check="resultant vs root product", trial=trial,
                     d1=d1, d2=d2, lhs=lhs, rhs=rhs)
    return report


# ---------------------------------------------------------------------------
# univariate suites


def suite_thm1(seed: int = DEFAULT_SEED, max_degree: int = 6, count: int = 3) -> SuiteReport:
    """Coefficient-side vs. root-side order-t subresultants, signed,
    for every degree pair, every order, ``count`` random selections each."""
    report = SuiteReport("thm1", seed)
    rng = random.Random(seed)
    for d1 in range(1, max_degree + 1):
        for d2 in range(1, max_degree + 1):
            f = random_polynomial(1, d1, seed=rng.getrandbits(32))
            roots = _distinct_ints(rng, d2)
            lead = _nonzero(rng)
            g = univariate_from_roots(roots, lead).polys[0]
            for t in range(d1 + d2):
                k = uni.order_count(d1, d2, t)
                for _ in range(count):
                    exps = tuple(sorted(rng.sample(range(t + 1), k)))
                    S = [mono(e) for e in exps]
                    lhs = uni.order_subresultant(f, g, t, S)
                    rhs = uni.subresultant_from_roots(f, roots, lead, t, S)
                    report.check(lhs == rhs, check="order subresultant in roots",
                                 d1=d1, d2=d2, t=t, S=exps, lhs=lhs, rhs=rhs)
    return report


def suite_relations(seed: int = DEFAULT_SEED, max_degree: int = 5, count: int = 0) -> SuiteReport:
    """Signed relations between order-t subresultants, the resultant and
    the scalar subresultants, over all degree pairs up to max_degree."""
    report = SuiteReport("relations", seed)
    rng = random.Random(seed)
    for d1 in range(1, max_degree + 1):
        for d2 in range(1, max_degree + 1):
            f = random_polynomial(1, d1, seed=rng.getrandbits(32))
            g = random_polynomial(1, d2, seed=rng.getrandbits(32))
            lhs = uni.order_subresultant(f, g, d1 + d2 - 1, [])
            rhs = Fraction((-1) ** (d1 * d2)) * uni.resultant(f, g)
            report.check(lhs == rhs, check="empty selection vs resultant",
                         d1=d1, d2=d2, lhs=lhs, rhs=rhs)
            for k in range(min(d1, d2) + 1):
                t = d1 + d2 - k - 1
                for j in range(k + 1):
                    top = k - 1 if j == k else k
                    if top > t:
                        continue  # selection would leave the degree-t window
                    S_j = [mono(e) for e in range(k + 1) if e != j]
                    lhs = uni.order_subresultant(f, g, t, S_j)
                    rhs = Fraction((-1) ** ((d1 - k) * (d2 - k))) * uni.scalar_subresultant(f, g, k, j)
                    report.check(lhs == rhs, check="selection vs scalar subresultant",
                                 d1=d1, d2=d2, k=k, j=j, lhs=lhs, rhs=rhs)
    return report


def suite_hong(seed: int = DEFAULT_SEED, max_degree: int = 5, count: int = 30) -> SuiteReport:
    """Subresultant polynomials from scalar determinants vs. from the
    discrete-Wronskian root form, exact, all orders k.

    The corner k = d1 = d2 is skipped: there the scalar determinants are
    all empty (value 1) while the root form degenerates to g over its
    leading coefficient, so the identity's domain excludes it.
    """
    report = SuiteReport("hong", seed)
    rng = random.Random(seed)
    for trial in range(count):
        d1 = rng.randint(1, max_degree)
        d2 = rng.randint(1, max_degree)
        f = random_polynomial(1, d1, seed=rng.getrandbits(32))
        roots = _distinct_ints(rng, d2)
        lead = _nonzero(rng)
        g = univariate_from_roots(roots, lead).polys[0]
        for k in range(min(d1, d2) + 1):
            if k == d1 == d2:
                continue
            lhs = uni.subresultant_polynomial(f, g, k)
            rhs = uni.sres_from_roots(f, roots, lead, k)
            report.check(lhs.terms == rhs.terms, check="subresultant polynomial in roots",
                         trial=trial, d1=d1, d2=d2, k=k)
            if k == 0:
                res = uni.resultant(f, g)
                report.check(
                    lhs.terms == ({mono(0): res} if res else {}),
                    check="order-0 polynomial equals resultant", trial=trial, d1=d1, d2=d2,
                )
    return report


def _parity_aligned_exponents(rng: random.Random, k: int, t: int) -> tuple[list[int], int]:
    """k+1 strictly increasing exponents <= t with gamma_j = j + c (mod 2)."""
    c = rng.choice([0, 1]) if k + 1 <= t else 0
    room = (t - k - c) // 2
    bumps = sorted(rng.randint(0, room) for _ in range(k + 1))
    return [j + c + 2 * b for j, b in zip(range(k + 1), bumps)], c


def suite_koko(seed: int = DEFAULT_SEED, max_degree: int = 5, count: int = 30) -> SuiteReport:
    """Generalized subresultant polynomials: coefficient-side sum vs. the
    telescoping root-side determinant.

    Selections are drawn parity-aligned (gamma_j = j + c mod 2 for a
    fixed c), where the closed form holds with the recorded global sign
    (-1)^(k*c); the per-term law for mixed parities is covered by the
    unit tests.
    """
    report = SuiteReport("koko", seed)
    rng = random.Random(seed)
    for trial in range(count):
        d1 = rng.randint(1, max_degree)
        d2 = rng.randint(1, max_degree)
        f = random_polynomial(1, d1, seed=rng.getrandbits(32))
        roots = _distinct_ints(rng, d2)
        lead = _nonzero(rng)
        g = univariate_from_roots(roots, lead).polys[0]
        t = rng.randint(d2, d1 + d2 - 1)
        k = d2 - max(0, t - d1 + 1)
        exps, c = _parity_aligned_exponents(rng, k, t)
        S_plus = [mono(e) for e in exps]
        lhs = uni.generalized_subresultant(f, g, t, S_plus)
        rhs = uni.generalized_from_roots(f, roots, lead, t, S_plus)
        expected = rhs.scaled(Fraction((-1) ** (k * c)))
        report.check(lhs.terms == expected.terms,
                     check="generalized subresultant in roots",
                     trial=trial, d1=d1, d2=d2, t=t, S=exps, parity=c)
    return report


def suite_poisson_uni(seed: int = DEFAULT_SEED, max_degree: int = 5, count: int = 20) -> SuiteReport:
    """Signed product formula: Res(f, g) = (-1)^(d1 d2) b^d1 prod f(xi)."""
    report = SuiteReport("poisson-uni", seed)
    rng = random.Random(seed)
    for trial in range(count):
        d1 = rng.randint(1, max_degree)
        d2 = rng.randint(1, max_degree)
        f = random_polynomial(1, d1, seed=rng.getrandbits(32))
        roots = _distinct_ints(rng, d2)
        lead = _nonzero(rng)
        g = univariate_from_roots(roots, lead).polys[0]
        prod = Fraction(1)
        for r in roots:
            prod *= evaluate(f, (r,))
        rhs = Fraction((-1) ** (d1 * d2)) * lead**d1 * prod
        lhs = uni.resultant(f, g)
        report.check(lhs == rhs, check="univariate product formula",
                     trial=trial, d1=d1, d2=d2, lhs=lhs, rhs=rhs)
    return report


# ---------------------------------------------------------------------------
# multivariate suites


def _reduced_monomials(d1: int, d2: int) -> list[Monomial]:
    return [
        m
        for m in monomials_up_to(2, (d1 - 1) + (d2 - 1))
        if m.exps[0] < d1 and m.exps[1] < d2
    ]


def _transformed_copy(base: RootInstance, rng: random.Random, d1: int, d2: int) -> RootInstance:
    """Transform the grid by a random unimodular map, rejecting the rare
    draws that align the roots so the default quotient-basis Vandermonde
    degenerates (e.g. a shear sending distinct grid rows to one line)."""
    quotient = _reduced_monomials(d1, d2)
    for _ in range(32):
        candidate = transform_system(base, random_unimodular(2, rng))
        if determinant(vandermonde(quotient, candidate.roots)) != 0:
            return candidate
    raise SingularVandermonde("could not find a transform with nonsingular Vandermonde")


def _pair_instances(rng: random.Random, d1: int, d2: int) -> list[RootInstance]:
    """A grid instance for the first two polynomials plus two transformed copies."""
    axes = [_distinct_ints(rng, d1), _distinct_ints(rng, d2)]
    leads = [_nonzero(rng), _nonzero(rng)]
    base = grid_system(axes, leads)
    return [
        base,
        _transformed_copy(base, rng, d1, d2),
        _transformed_copy(base, rng, d1, d2),
    ]


def _iter_thm2_instances(rng: random.Random, triples: Sequence[tuple[int, int, int]]):
    for d1, d2, d3 in triples:
        for inst in _pair_instances(rng, d1, d2):
            f3 = random_polynomial(2, d3, seed=rng.getrandbits(32))
            yield (d1, d2, d3), inst, f3


def suite_thm2(
    seed: int = DEFAULT_SEED,
    max_degree: int = 0,
    count: int = 2,
    triples: Sequence[tuple[int, int, int]] = DEGREE_TRIPLES,
) -> SuiteReport:
    """Root-product identity for the Macaulay-Chardin determinant, in its
    division-free form |M_S| |V_T| = |M'| |O_S| and, whenever every
    extraneous factor is nonzero, in the full quotient form."""
    report = SuiteReport("thm2", seed)
    rng = random.Random(seed)
    if max_degree:
        triples = [tr for tr in triples if max(tr) <= max_degree]
    for (d1, d2, d3), inst, f3 in _iter_thm2_instances(rng, triples):
        sys_t0 = DegreeSystem(n=2, degrees=(d1, d2, d3), t=0)
        fbars = [leading_form(p) for p in inst.polys]
        polys = list(inst.polys) + [f3]
        for t in range(sys_t0.rho + d3 + 1):
            sys_ = DegreeSystem(n=2, degrees=(d1, d2, d3), t=t)
            k = hilbert_count(sys_.degrees, 2, t)
            for _ in range(count):
                S = _random_selection(rng, 2, t, k)
                key = tuple(sorted(m.exps for m in S))
                problem = multi.MultiProblem(
                    sys=sys_, polys=tuple(polys), sets=validate_selection(sys_, S)
                )
                lhs, rhs = multi.determinant_identity(problem, inst.roots)
                report.check(abs(lhs) == abs(rhs), check="determinant identity",
                             degrees=(d1, d2, d3), t=t, S=key, lhs=lhs, rhs=rhs)
                try:
                    coeff_side = multi.order_subresultant(problem)
                    root_side = multi.subresultant_from_roots(
                        sys_, problem.sets, inst.roots, f3, fbars
                    )
                except ExtraneousFactorVanishes:
                    continue
                report.check(abs(coeff_side) == abs(root_side), check="quotient identity",
                             degrees=(d1, d2, d3), t=t, S=key,
                             coeff=coeff_side, root=root_side)
    return report


def suite_rar(
    seed: int = DEFAULT_SEED,
    max_degree: int = 0,
    count: int = 0,
    triples: Sequence[tuple[int, int, int]] = DEGREE_TRIPLES,
) -> SuiteReport:
    """Tripwire for the graded extraneous-factor rule: the extraneous
    minor must factor (up to sign) as the low-degree block times the
    graded extraneous factors, and the subsystem determinant as the
    low-degree block times the graded matrix determinants.  The sweep
    stops at the first failure; a failure here invalidates the graded
    minor rule itself.  The extraneous factor is also re-checked for
    independence from the last polynomial."""
    report = SuiteReport("rar", seed)
    rng = random.Random(seed)
    if max_degree:
        triples = [tr for tr in triples if max(tr) <= max_degree]
    for (d1, d2, d3), inst, f3 in _iter_thm2_instances(rng, triples):
        fbars = [leading_form(p) for p in inst.polys]
        polys = list(inst.polys) + [f3]
        for t in range(sum((d1 - 1, d2 - 1)) + d3 + 1):
            sys_ = DegreeSystem(n=2, degrees=(d1, d2, d3), t=t)
            sets = validate_selection(
                sys_, monomials_up_to(2, t)[: hilbert_count(sys_.degrees, 2, t)]
            )
            basis = multi.extended_basis(sys_, sets)
            extraneous = multi.extraneous_factor(sys_, polys, basis)
            low = determinant(multi.low_degree_block(sys_, polys, sets, basis))
            graded_extraneous = Fraction(1)
            graded_dets = Fraction(1)
            for j in range(max(0, t - d3 + 1), t + 1):
                graded_extraneous *= multi.leading_form_extraneous(fbars, j)
                slice_j = [m for m in sets.T if m.degree == j]
                graded_dets *= determinant(multi.leading_form_matrix(fbars, j, slice_j))
            ok = report.check(
                abs(extraneous) == abs(low * graded_extraneous),
                check="extraneous factorization",
                degrees=(d1, d2, d3), t=t, extraneous=extraneous,
                product=low * graded_extraneous,
            )
            if not ok:
                return report
            sub = determinant(multi.subsystem_matrix(sys_, polys, sets, basis))
            ok = report.check(
                abs(sub) == abs(low * graded_dets),
                check="subsystem block triangularity",
                degrees=(d1, d2, d3), t=t, subsystem=sub, product=low * graded_dets,
            )
            if not ok:
                return report
            other = random_polynomial(2, d3, seed=rng.getrandbits(32))
            repeat = multi.extraneous_factor(sys_, polys[:2] + [other], basis)
            ok = report.check(
                repeat == extraneous,
                check="extraneous factor ignores the last polynomial",
                degrees=(d1, d2, d3), t=t,
            )
            if not ok:
                return report
    return report


def _binary_form_resultant(fbars: Sequence[Polynomial]) -> Fraction:
    p1, p2 = (dehomogenize(fb) for fb in fbars)
    return uni.resultant(p1, p2)


def suite_poisson_multi(seed: int = DEFAULT_SEED, max_degree: int = 0, count: int = 10) -> SuiteReport:
    """At t = rho + d3 with empty selection, the subresultant is the
    resultant of the leading forms to the d3-th power times the product
    of the last polynomial over the grid roots (up to sign)."""
    report = SuiteReport("poisson-multi", seed)
    rng = random.Random(seed)
    produced = 0
    for triple in itertools.cycle(DEGREE_TRIPLES):
        if produced >= count:
            break
        d1, d2, d3 = triple
        inst = _pair_instances(rng, d1, d2)[produced % 2]
        f3 = random_polynomial(2, d3, seed=rng.getrandbits(32))
        t = (d1 - 1) + (d2 - 1) + d3
        sys_ = DegreeSystem(n=2, degrees=(d1, d2, d3), t=t)
        problem = multi.MultiProblem(
            sys=sys_,
            polys=tuple(list(inst.polys) + [f3]),
            sets=validate_selection(sys_, []),
        )
        fbars = [leading_form(p) for p in inst.polys]
        prod = Fraction(1)
        for pt in inst.roots:
            prod *= evaluate(f3, pt)
        rhs = _binary_form_resultant(fbars) ** d3 * prod
        try:
            lhs = multi.order_subresultant(problem)
        except ExtraneousFactorVanishes:
            continue
        report.check(abs(lhs) == abs(rhs), check="multivariate product formula",
                     degrees=triple, lhs=lhs, rhs=rhs)
        produced += 1
    return report


def suite_minor_ratio(seed: int = DEFAULT_SEED, max_degree: int = 0, count: int = 10) -> SuiteReport:
    """All signed Vandermonde-minor ratios of a transformed pair of
    bivariate quadratics coincide."""
    report = SuiteReport("minor-ratio", seed)
    rng = random.Random(seed)
    for trial in range(count):
        base = grid_system(
            [_distinct_ints(rng, 2), _distinct_ints(rng, 2)],
            [_nonzero(rng), _nonzero(rng)],
        )
        inst = transform_system(base, random_unimodular(2, rng))
        ratios, skipped = multi.vandermonde_minor_ratios(
            inst.polys[0], inst.polys[1], inst.roots
        )
        report.check(len(set(ratios)) == 1 and len(ratios) + len(skipped) == 15,
                     check="minor ratios coincide", trial=trial,
                     distinct=len(set(ratios)), skipped=len(skipped))
    return report


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "counts": suite_counts,
    "oracles": suite_oracles,
    "thm1": suite_thm1,
    "relations": suite_relations,
    "hong": suite_hong,
    "koko": suite_koko,
    "poisson-uni": suite_poisson_uni,
    "thm2": suite_thm2,
    "rar": suite_rar,
    "poisson-multi": suite_poisson_multi,
    "minor-ratio": suite_minor_ratio,
}


def run_suite(
    name: str,
    seed: int = DEFAULT_SEED,
    max_degree: Optional[int] = None,
    count: Optional[int] = None,
) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    kwargs: dict = {"seed": seed}
    if max_degree is not None:
        kwargs["max_degree"] = max_degree
    if count is not None:
        kwargs["count"] = count
    return SUITES[name](**kwargs)
