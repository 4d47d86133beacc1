import random
from fractions import Fraction as F

import pytest

from subres import oracle, uni
from subres.errors import NonSquareMatrix, TooLarge
from subres.exactmath import determinant, identity, matrix
from subres.instances import univariate_from_roots


def test_cofactor_identity():
    assert oracle.det_cofactor(identity(4)) == 1


def test_cofactor_singular_repeated_row():
    m = matrix([[F(1), F(2)], [F(1), F(2)]])
    assert oracle.det_cofactor(m) == 0


def test_cofactor_rejects_nonsquare_and_large():
    with pytest.raises(NonSquareMatrix):
        oracle.det_cofactor(matrix([[F(1), F(2)]], cols=2))
    with pytest.raises(TooLarge):
        oracle.det_cofactor(identity(9))


def test_cofactor_agrees_with_bareiss_on_200_matrices():
    rng = random.Random(314)
    for trial in range(200):
        size = rng.randint(0, 7)
        m = matrix(
            [[F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(size)] for _ in range(size)],
            cols=size,
        )
        assert determinant(m) == oracle.det_cofactor(m), f"trial {trial}"


def test_hilbert_ie_values():
    assert oracle.hilbert_ie((2, 2, 2), 2, 2) == 3
    assert oracle.hilbert_ie((5, 2), 1, 4) == 2


def test_hilbert_ie_socle_vanishing():
    # past the socle degree the count stays zero
    degrees = (2, 3, 2)
    socle = sum(degrees) - 2  # n_vars = 2
    for t in range(socle + 1, socle + 5):
        assert oracle.hilbert_ie(degrees, 2, t) == 0


def test_res_product_linear():
    assert oracle.res_product([F(5)], F(1), [F(7)], F(1)) == -2


def test_res_product_shared_root_vanishes():
    assert oracle.res_product([F(1), F(2)], F(3), [F(2), F(5)], F(4)) == 0


def test_res_product_matches_sylvester_on_50_pairs():
    rng = random.Random(1001)
    for trial in range(50):
        d1, d2 = rng.randint(1, 5), rng.randint(1, 5)
        f_roots = [F(v) for v in rng.sample(range(-9, 10), d1)]
        g_roots = [F(v) for v in rng.sample(range(-9, 10), d2)]
        f_lead, g_lead = F(rng.randint(1, 9)), F(rng.randint(-9, -1))
        f = univariate_from_roots(f_roots, f_lead).polys[0]
        g = univariate_from_roots(g_roots, g_lead).polys[0]
        assert uni.resultant(f, g) == oracle.res_product(f_roots, f_lead, g_roots, g_lead), (
            f"trial {trial}"
        )
