import random
from fractions import Fraction as F

import pytest

from subres import uni
from subres.combinat import selection_sign
from subres.errors import (
    BadOrderRange,
    DegreeTooHigh,
    IndexOutOfRange,
    SingularVandermonde,
    WrongCardinality,
)
from subres.exactmath import determinant
from subres.instances import univariate_from_roots
from subres.poly import Polynomial, evaluate, mono, random_polynomial, univariate

# the two running instances: (d1=5, d2=2, t=4) and (d1=2, d2=5, t=3)
F5 = univariate([1, 1, 1, 1, 1, 1])
G2 = univariate([1, 3, 2])
F2 = univariate([1, 1, 3])
G5 = univariate([2, -1, 0, 1, 1, 4])


def rand_g(rng, d2):
    roots = [F(v) for v in rng.sample(range(-9, 10), d2)]
    lead = F(rng.choice([i for i in range(-9, 10) if i]))
    return univariate_from_roots(roots, lead), roots, lead


def test_multiplication_matrices_shapes_low_order():
    m_f, m_g = uni.multiplication_matrices(F5, G2, 4)
    assert (m_f.rows, m_f.cols) == (0, 5)
    assert (m_g.rows, m_g.cols) == (3, 5)
    assert m_g.entries[0] == (F(1), F(3), F(2), F(0), F(0))
    assert m_g.entries[2] == (F(0), F(0), F(1), F(3), F(2))


def test_multiplication_matrices_shapes_high_degree_g():
    m_f, m_g = uni.multiplication_matrices(F2, G5, 3)
    assert (m_f.rows, m_f.cols) == (2, 5)
    assert (m_g.rows, m_g.cols) == (0, 5)


def test_multiplication_matrix_row_sums_evaluate_at_one():
    rng = random.Random(15)
    f = random_polynomial(1, 4, seed=3)
    g = random_polynomial(1, 3, seed=4)
    m_f, m_g = uni.multiplication_matrices(f, g, 5)
    for row in m_f.entries:
        assert sum(row) == evaluate(f, (F(1),))
    for row in m_g.entries:
        assert sum(row) == evaluate(g, (F(1),))


def test_order_subresultant_example_one():
    assert uni.order_subresultant(F5, G2, 4, [mono(1), mono(4)]) == 7


def test_order_subresultant_example_one_closed_form():
    rng = random.Random(21)
    for _ in range(20):
        b = [F(rng.randint(-9, 9)) for _ in range(2)] + [F(rng.choice([1, 2, 3, -1, -2]))]
        g = univariate(b)
        f = random_polynomial(1, 5, seed=rng.getrandbits(32))
        value = uni.order_subresultant(f, g, 4, [mono(1), mono(4)])
        assert value == b[0] * b[1] ** 2 - b[0] ** 2 * b[2]


def test_order_subresultant_example_two_closed_form():
    rng = random.Random(22)
    for _ in range(20):
        a = [F(rng.randint(-9, 9)) for _ in range(2)] + [F(rng.choice([1, 2, -3, 4]))]
        f = univariate(a)
        g = random_polynomial(1, 5, seed=rng.getrandbits(32))
        assert uni.order_subresultant(f, g, 3, [mono(0), mono(1)]) == a[2] ** 2


def test_order_subresultant_empty_selection_is_signed_resultant():
    rng = random.Random(23)
    for _ in range(20):
        d1, d2 = rng.randint(1, 4), rng.randint(1, 4)
        f = random_polynomial(1, d1, seed=rng.getrandbits(32))
        g = random_polynomial(1, d2, seed=rng.getrandbits(32))
        lhs = uni.order_subresultant(f, g, d1 + d2 - 1, [])
        assert lhs == F((-1) ** (d1 * d2)) * uni.resultant(f, g)


def test_order_subresultant_validation():
    with pytest.raises(WrongCardinality):
        uni.order_subresultant(F5, G2, 4, [mono(1)])
    with pytest.raises(DegreeTooHigh):
        uni.order_subresultant(F5, G2, 4, [mono(1), mono(5)])
    with pytest.raises(BadOrderRange):
        uni.order_subresultant(F5, G2, 9, [])


def test_scalar_subresultant_example_values():
    f = univariate([2, 5, 3])
    g = univariate([1, 0, 0, 0, 0, 1])
    assert uni.scalar_subresultant(f, g, 2, 2) == 27
    assert uni.scalar_subresultant(f, g, 2, 1) == 45
    assert uni.scalar_subresultant(f, g, 2, 0) == 18


def test_scalar_subresultant_order_zero_is_resultant():
    rng = random.Random(24)
    for _ in range(10):
        f = random_polynomial(1, rng.randint(1, 4), seed=rng.getrandbits(32))
        g = random_polynomial(1, rng.randint(1, 4), seed=rng.getrandbits(32))
        assert uni.scalar_subresultant(f, g, 0, 0) == uni.resultant(f, g)


def test_scalar_subresultant_cross_check_with_order_form():
    rng = random.Random(25)
    for _ in range(10):
        d1, d2 = rng.randint(1, 5), rng.randint(1, 5)
        f = random_polynomial(1, d1, seed=rng.getrandbits(32))
        g = random_polynomial(1, d2, seed=rng.getrandbits(32))
        for k in range(min(d1, d2) + 1):
            t = d1 + d2 - k - 1
            for j in range(k + 1):
                if (k if j < k else k - 1) > t:
                    continue
                S_j = [mono(e) for e in range(k + 1) if e != j]
                assert uni.order_subresultant(f, g, t, S_j) == F(
                    (-1) ** ((d1 - k) * (d2 - k))
                ) * uni.scalar_subresultant(f, g, k, j)


def test_scalar_subresultant_range_check():
    with pytest.raises(IndexOutOfRange):
        uni.scalar_subresultant(F5, G2, 3, 0)
    with pytest.raises(IndexOutOfRange):
        uni.scalar_subresultant(F5, G2, 1, 2)


def test_subresultant_polynomial_example():
    f = univariate([2, 5, 3])
    g = univariate([1, 0, 0, 0, 0, 1])
    sres2 = uni.subresultant_polynomial(f, g, 2)
    assert sres2.terms == {mono(0): F(18), mono(1): F(45), mono(2): F(27)}


def test_subresultant_polynomial_order_zero_constant():
    f = univariate([1, 2, 1])
    g = univariate([3, 1])
    p = uni.subresultant_polynomial(f, g, 0)
    assert p.terms == {mono(0): uni.resultant(f, g)}


def test_subresultant_polynomial_gcd_witness():
    # f = (x-1) u, g = (x-1) v with coprime u, v: the order-1 polynomial
    # is proportional to x - 1 and the resultant vanishes
    u = univariate_from_roots([F(2), F(3)], F(2)).polys[0]
    v = univariate_from_roots([F(4), F(5), F(6)], F(1)).polys[0]
    x_minus_1 = univariate([-1, 1])
    f = x_minus_1 * u
    g = x_minus_1 * v
    assert uni.scalar_subresultant(f, g, 0, 0) == 0
    s1 = uni.subresultant_polynomial(f, g, 1)
    lead = s1.terms[mono(1)]
    assert lead != 0
    assert s1.terms[mono(0)] == -lead  # s1 = lead * (x - 1)


def test_resultant_linear_convention():
    f = univariate([-5, 1])
    g = univariate([-7, 1])
    assert abs(uni.resultant(f, g)) == 2
    assert uni.resultant(f, g) == -2  # classical: a - b for x-a, x-b


def test_resultant_matches_root_product():
    from subres import oracle

    rng = random.Random(26)
    for _ in range(15):
        d1, d2 = rng.randint(1, 5), rng.randint(1, 5)
        fr = [F(v) for v in rng.sample(range(-9, 10), d1)]
        gr = [F(v) for v in rng.sample(range(-9, 10), d2)]
        fl, gl = F(rng.randint(1, 5)), F(rng.randint(1, 5))
        f = univariate_from_roots(fr, fl).polys[0]
        g = univariate_from_roots(gr, gl).polys[0]
        assert uni.resultant(f, g) == oracle.res_product(fr, fl, gr, gl)


def test_resultant_poisson_product():
    rng = random.Random(27)
    for _ in range(15):
        d1, d2 = rng.randint(1, 5), rng.randint(1, 5)
        f = random_polynomial(1, d1, seed=rng.getrandbits(32))
        inst, roots, lead = rand_g(rng, d2)
        prod = F(1)
        for r in roots:
            prod *= evaluate(f, (r,))
        assert uni.resultant(f, inst.polys[0]) == F((-1) ** (d1 * d2)) * lead**d1 * prod


def test_root_formula_linear_g_gives_evaluation():
    f = random_polynomial(1, 3, seed=5)
    c = F(4)
    value = uni.subresultant_from_roots(f, [c], F(1), 3, [])
    assert value == evaluate(f, (c,))
    g = univariate([-c, 1])
    assert uni.order_subresultant(f, g, 3, []) == F((-1) ** 3) * uni.resultant(f, g)


def test_root_formula_example_instance():
    inst = univariate_from_roots([F(1), F(3)], F(2))
    S = [mono(1), mono(4)]
    lhs = uni.order_subresultant(F5, inst.polys[0], 4, S)
    rhs = uni.subresultant_from_roots(F5, inst.scalar_roots, F(2), 4, S)
    assert lhs == rhs == 312


def test_root_formula_lead_exponent_below_degree():
    # t < d2 case: the lead exponent t* - d2 + 1 is zero
    rng = random.Random(28)
    inst, roots, lead = rand_g(rng, 5)
    f = random_polynomial(1, 2, seed=6)
    S = [mono(0), mono(1)]
    lhs = uni.order_subresultant(f, inst.polys[0], 3, S)
    rhs = uni.subresultant_from_roots(f, roots, lead, 3, S)
    assert lhs == rhs
    # changing the lead leaves the value unchanged since its exponent is 0
    other = uni.subresultant_from_roots(f, roots, lead * 7, 3, S)
    assert other == rhs


def test_root_formula_signed_sweep():
    rng = random.Random(29)
    for d1 in range(1, 5):
        for d2 in range(1, 5):
            f = random_polynomial(1, d1, seed=rng.getrandbits(32))
            inst, roots, lead = rand_g(rng, d2)
            for t in range(d1 + d2):
                k = uni.order_count(d1, d2, t)
                S = [mono(e) for e in sorted(rng.sample(range(t + 1), k))]
                lhs = uni.order_subresultant(f, inst.polys[0], t, S)
                rhs = uni.subresultant_from_roots(f, roots, lead, t, S)
                assert lhs == rhs, (d1, d2, t, S)


def test_root_formula_rejects_repeated_roots():
    f = random_polynomial(1, 2, seed=7)
    with pytest.raises(SingularVandermonde):
        uni.subresultant_from_roots(f, [F(1), F(1)], F(1), 1, [mono(0)])


def test_selection_stack_identity():
    rng = random.Random(30)
    for _ in range(15):
        d1, d2 = rng.randint(1, 4), rng.randint(1, 4)
        f = random_polynomial(1, d1, seed=rng.getrandbits(32))
        g = random_polynomial(1, d2, seed=rng.getrandbits(32))
        t = rng.randint(0, d1 + d2 - 1)
        k = uni.order_count(d1, d2, t)
        exps = sorted(rng.sample(range(t + 1), k))
        S = [mono(e) for e in exps]
        t_star = max(d2 - 1, t)
        stacked = uni.selection_stack(f, g, t, S)
        sign = selection_sign(S, t, t_star, [mono(c) for c in range(t_star + 1)])
        assert determinant(stacked) == sign * uni.order_subresultant(f, g, t, S)


def test_degree_homogeneity_in_each_argument():
    rng = random.Random(32)
    for _ in range(10):
        d1, d2 = rng.randint(1, 4), rng.randint(1, 4)
        t = rng.randint(0, d1 + d2 - 1)
        f = random_polynomial(1, d1, seed=rng.getrandbits(32))
        g = random_polynomial(1, d2, seed=rng.getrandbits(32))
        k = uni.order_count(d1, d2, t)
        S = [mono(e) for e in sorted(rng.sample(range(t + 1), k))]
        base = uni.order_subresultant(f, g, t, S)
        lam = F(3)
        scaled_f = uni.order_subresultant(f.scaled(lam), g, t, S)
        assert scaled_f == lam ** max(0, t - d1 + 1) * base
        scaled_g = uni.order_subresultant(f, g.scaled(lam), t, S)
        assert scaled_g == lam ** max(0, t - d2 + 1) * base


# ---------------------------------------------------------------------------
# root forms of the subresultant polynomials


def test_sres_from_roots_matches_determinant_route():
    rng = random.Random(33)
    for _ in range(12):
        d1, d2 = rng.randint(1, 5), rng.randint(1, 5)
        f = random_polynomial(1, d1, seed=rng.getrandbits(32))
        inst, roots, lead = rand_g(rng, d2)
        for k in range(min(d1, d2) + 1):
            if k == d1 == d2:
                continue  # degenerate: all scalar minors are empty
            lhs = uni.subresultant_polynomial(f, inst.polys[0], k)
            rhs = uni.sres_from_roots(f, roots, lead, k)
            assert lhs.terms == rhs.terms, (d1, d2, k)


def test_sres_from_roots_k_zero_is_poisson_constant():
    rng = random.Random(34)
    f = random_polynomial(1, 3, seed=8)
    inst, roots, lead = rand_g(rng, 4)
    p = uni.sres_from_roots(f, roots, lead, 0)
    assert p.terms == {mono(0): uni.resultant(f, inst.polys[0])}


def test_sres_from_roots_top_order_proportional_to_g():
    # k = d2 < d1: the root form collapses to lead^(d1-d2-1) * g
    rng = random.Random(35)
    inst, roots, lead = rand_g(rng, 2)
    f = random_polynomial(1, 4, seed=9)
    p = uni.sres_from_roots(f, roots, lead, 2)
    expected = inst.polys[0].scaled(lead ** (4 - 2 - 1))
    assert p.terms == expected.terms
    assert p.terms == uni.subresultant_polynomial(f, inst.polys[0], 2).terms


def test_generalized_subresultant_termwise_scalar_relation():
    # contiguous selection 1, x, ..., x^k at t = d1+d2-k-1 recovers the
    # subresultant polynomial up to the block-swap sign
    rng = random.Random(36)
    for _ in range(10):
        d1 = rng.randint(2, 5)
        d2 = rng.randint(1, d1 - 1)  # keep t >= d2 and k < d2 + 1
        k = rng.randint(max(0, d2 - (d1 - 1)), d2 - 1)
        t = d1 + d2 - k - 1
        if not (d2 <= t and k + 1 <= t + 1):
            continue
        f = random_polynomial(1, d1, seed=rng.getrandbits(32))
        g = random_polynomial(1, d2, seed=rng.getrandbits(32))
        S_plus = [mono(e) for e in range(k + 1)]
        s = uni.generalized_subresultant(f, g, t, S_plus)
        sres = uni.subresultant_polynomial(f, g, k)
        sign = F((-1) ** ((d1 - k) * (d2 - k)))
        assert s.terms == sres.scaled(sign).terms


def shared_root_pair(rng, shared):
    u = univariate_from_roots([F(v) for v in rng.sample(range(3, 10), 2)], F(1)).polys[0]
    v = univariate_from_roots([F(w) for w in rng.sample(range(-9, 0), 3)], F(2)).polys[0]
    lin = univariate([-shared, 1])
    return lin * u, lin * v


def test_generalized_subresultant_vanishes_at_shared_root():
    # the plain sum lies in the ideal exactly when the selected exponents
    # are parity-aligned with their index; sample that family
    rng = random.Random(37)
    shared = F(2)
    for _ in range(8):
        f, g = shared_root_pair(rng, shared)
        d1, d2 = f.degree, g.degree
        t = rng.randint(d2, d1 + d2 - 1)
        k = d2 - max(0, t - d1 + 1)
        c = rng.choice([0, 1]) if k + 1 <= t else 0
        room = (t - k - c) // 2
        bumps = sorted(rng.randint(0, room) for _ in range(k + 1))
        S_plus = [mono(j + c + 2 * b) for j, b in zip(range(k + 1), bumps)]
        s = uni.generalized_subresultant(f, g, t, S_plus)
        assert evaluate(s, (shared,)) == 0


def test_generalized_signed_combination_is_ideal_member():
    # for arbitrary selections the combination weighted by
    # (-1)^(gamma_j - j) vanishes at every common root
    rng = random.Random(42)
    shared = F(-3)
    for _ in range(8):
        f, g = shared_root_pair(rng, shared)
        d1, d2 = f.degree, g.degree
        t = rng.randint(d2, d1 + d2 - 1)
        k = d2 - max(0, t - d1 + 1)
        exps = sorted(rng.sample(range(t + 1), k + 1))
        total = F(0)
        for j, e in enumerate(exps):
            S_j = [mono(x) for i, x in enumerate(exps) if i != j]
            total += F((-1) ** (e - j)) * uni.order_subresultant(f, g, t, S_j) * shared**e
        assert total == 0, exps


def test_generalized_subresultant_k_zero_single_term():
    f = random_polynomial(1, 2, seed=10)
    g = random_polynomial(1, 3, seed=11)
    t = 4  # k = d2 - (t - d1 + 1) = 0
    s = uni.generalized_subresultant(f, g, t, [mono(3)])
    assert set(s.terms) <= {mono(3)}
    assert s.terms[mono(3)] == uni.order_subresultant(f, g, t, [])


def test_generalized_subresultant_order_window():
    f = random_polynomial(1, 2, seed=12)
    g = random_polynomial(1, 3, seed=13)
    with pytest.raises(BadOrderRange):
        uni.generalized_subresultant(f, g, 2, [mono(0)])
    with pytest.raises(WrongCardinality):
        uni.generalized_subresultant(f, g, 3, [mono(0)])


def test_generalized_from_roots_matches_on_aligned_selections():
    rng = random.Random(38)
    for _ in range(12):
        d1, d2 = rng.randint(1, 5), rng.randint(1, 5)
        f = random_polynomial(1, d1, seed=rng.getrandbits(32))
        inst, roots, lead = rand_g(rng, d2)
        t = rng.randint(d2, d1 + d2 - 1)
        k = d2 - max(0, t - d1 + 1)
        c = rng.choice([0, 1]) if k + 1 <= t else 0
        room = (t - k - c) // 2
        bumps = sorted(rng.randint(0, room) for _ in range(k + 1))
        exps = [j + c + 2 * b for j, b in zip(range(k + 1), bumps)]
        S_plus = [mono(e) for e in exps]
        s = uni.generalized_subresultant(f, inst.polys[0], t, S_plus)
        r = uni.generalized_from_roots(f, roots, lead, t, S_plus)
        assert s.terms == r.scaled(F((-1) ** (k * c))).terms, (d1, d2, t, exps)


def test_generalized_from_roots_per_term_sign_law():
    # mixed-parity selections: term j of the closed form differs from
    # Delta_(S_j) by (-1)^(C + gamma_j + j) with C = sum(gamma_i - i)
    rng = random.Random(39)
    for _ in range(10):
        d1, d2 = rng.randint(2, 5), rng.randint(2, 5)
        f = random_polynomial(1, d1, seed=rng.getrandbits(32))
        inst, roots, lead = rand_g(rng, d2)
        t = rng.randint(d2, d1 + d2 - 1)
        k = d2 - max(0, t - d1 + 1)
        exps = sorted(rng.sample(range(t + 1), k + 1))
        S_plus = [mono(e) for e in exps]
        s = uni.generalized_subresultant(f, inst.polys[0], t, S_plus)
        r = uni.generalized_from_roots(f, roots, lead, t, S_plus)
        big_c = sum(e - i for i, e in enumerate(exps))
        for j, e in enumerate(exps):
            lhs = s.terms.get(mono(e), F(0))
            rhs = r.terms.get(mono(e), F(0))
            assert lhs == F((-1) ** (big_c + e + j)) * rhs, (exps, j)


def test_generalized_from_roots_reduces_to_wronskian_form():
    rng = random.Random(40)
    inst, roots, lead = rand_g(rng, 3)
    f = random_polynomial(1, 4, seed=14)
    t = 5
    k = 3 - max(0, t - 4 + 1)  # = 1
    S_plus = [mono(0), mono(1)]
    koko = uni.generalized_from_roots(f, roots, lead, t, S_plus)
    # with contiguous exponents the telescoping rows match the
    # discrete-Wronskian rows; compare against the scalar route
    s = uni.generalized_subresultant(f, inst.polys[0], t, S_plus)
    assert koko.terms == s.terms


def test_generalized_from_roots_divisible_by_leading_gap():
    rng = random.Random(41)
    inst, roots, lead = rand_g(rng, 2)
    f = random_polynomial(1, 3, seed=16)
    t = 3
    k = 2 - max(0, t - 3 + 1)  # = 1
    S_plus = [mono(2), mono(3)]
    p = uni.generalized_from_roots(f, roots, lead, t, S_plus)
    assert all(m.exps[0] >= 2 for m in p.terms)


def test_uniproblem_validation():
    with pytest.raises(WrongCardinality):
        uni.UniProblem(f=F5, g=G2, t=4, S=(mono(0),))
    with pytest.raises(BadOrderRange):
        uni.UniProblem(f=F5, g=G2, t=7, S=())
    prob = uni.UniProblem(f=F5, g=G2, t=4, S=(mono(1), mono(4)))
    assert prob.t_star == 4
