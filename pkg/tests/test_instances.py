import random
from fractions import Fraction as F

import pytest

from subres import uni
from subres.errors import (
    DuplicateAxisValue,
    ShapeMismatch,
    SingularTransform,
    ZeroLeadingCoefficient,
)
from subres.exactmath import determinant
from subres.instances import (
    grid_system,
    power_matrix,
    random_unimodular,
    transform_system,
    univariate_from_roots,
    vandermonde,
)
from subres.poly import dehomogenize, evaluate, leading_form, mono


def test_univariate_expansion():
    inst = univariate_from_roots([F(1), F(3)], F(2))
    assert inst.polys[0].terms == {mono(0): F(6), mono(1): F(-8), mono(2): F(2)}
    assert inst.leads == (F(2),)


def test_univariate_rejects_degenerate_input():
    with pytest.raises(ZeroLeadingCoefficient):
        univariate_from_roots([F(1)], F(0))
    with pytest.raises(ZeroLeadingCoefficient):
        univariate_from_roots([], F(3))
    with pytest.raises(DuplicateAxisValue):
        univariate_from_roots([F(1), F(1)], F(2))


def test_univariate_vanishes_at_all_roots():
    rng = random.Random(31)
    for _ in range(10):
        roots = [F(v) for v in rng.sample(range(-9, 10), rng.randint(1, 6))]
        inst = univariate_from_roots(roots, F(rng.randint(1, 9)))
        assert all(evaluate(inst.polys[0], (r,)) == 0 for r in roots)


def test_grid_cartesian_roots():
    inst = grid_system([[F(1), F(2)], [F(1), F(3)]], [F(1), F(1)])
    assert set(inst.roots) == {(F(1), F(1)), (F(1), F(3)), (F(2), F(1)), (F(2), F(3))}


def test_grid_leading_forms_are_pure_powers():
    inst = grid_system([[F(1), F(2)], [F(1), F(3)]], [F(3), F(-2)])
    assert inst.leads[0].terms == {mono(2, 0): F(3)}
    assert inst.leads[1].terms == {mono(0, 2): F(-2)}
    # the two pure-power forms are coprime: binary resultant is the
    # product of lead powers
    res = uni.resultant(dehomogenize(inst.leads[0]), dehomogenize(inst.leads[1]))
    assert abs(res) == abs(F(3) ** 2 * F(-2) ** 2)


def test_grid_polynomials_vanish_on_grid():
    rng = random.Random(77)
    axes = [[F(v) for v in rng.sample(range(-9, 10), 3)], [F(v) for v in rng.sample(range(-9, 10), 2)]]
    inst = grid_system(axes, [F(2), F(5)])
    assert len(inst.roots) == 6
    for p in inst.polys:
        assert all(evaluate(p, pt) == 0 for pt in inst.roots)


def test_grid_rejects_bad_axes():
    with pytest.raises(DuplicateAxisValue):
        grid_system([[F(1), F(1)]], [F(1)])
    with pytest.raises(ZeroLeadingCoefficient):
        grid_system([[F(1)]], [F(0)])


def test_transform_identity_is_noop():
    inst = grid_system([[F(1), F(2)], [F(0), F(3)]], [F(1), F(1)])
    same = transform_system(inst, [[F(1), F(0)], [F(0), F(1)]])
    assert [p.terms for p in same.polys] == [p.terms for p in inst.polys]
    assert same.roots == inst.roots


def test_transform_preserves_vanishing_and_count():
    rng = random.Random(13)
    inst = grid_system([[F(1), F(4)], [F(-2), F(3)]], [F(2), F(1)])
    out = transform_system(inst, random_unimodular(2, rng))
    assert len(set(out.roots)) == len(inst.roots)
    for p in out.polys:
        assert all(evaluate(p, pt) == 0 for pt in out.roots)
    # leading forms transform as the forms themselves
    assert out.leads[0].terms == leading_form(out.polys[0]).terms


def test_transform_round_trip():
    inst = grid_system([[F(1), F(2)], [F(0), F(3)]], [F(1), F(-1)])
    a = [[F(1), F(2)], [F(0), F(1)]]
    a_inv = [[F(1), F(-2)], [F(0), F(1)]]
    back = transform_system(transform_system(inst, a), a_inv)
    assert [p.terms for p in back.polys] == [p.terms for p in inst.polys]
    assert back.roots == inst.roots


def test_transform_rejects_singular():
    inst = grid_system([[F(1), F(2)], [F(0), F(3)]], [F(1), F(1)])
    with pytest.raises(SingularTransform):
        transform_system(inst, [[F(1), F(1)], [F(2), F(2)]])


def test_random_unimodular_has_unit_determinant():
    rng = random.Random(6)
    from subres.exactmath import matrix

    for _ in range(20):
        a = random_unimodular(rng.choice([1, 2, 3]), rng)
        assert abs(determinant(matrix(a))) == 1


def test_vandermonde_single_point():
    v = vandermonde([mono(0)], [(F(5),)])
    assert v.entries == ((F(1),),)
    assert determinant(v) == 1


def test_vandermonde_classical_product_formula():
    pts = [F(1), F(2), F(-3), F(5)]
    v = vandermonde([mono(i) for i in range(4)], [(p,) for p in pts])
    expected = F(1)
    for i in range(4):
        for j in range(i + 1, 4):
            expected *= pts[j] - pts[i]
    assert determinant(v) == expected


def test_vandermonde_grid_kronecker_magnitude():
    inst = grid_system([[F(1), F(2)], [F(1), F(3)]], [F(1), F(1)])
    T = [mono(0, 0), mono(1, 0), mono(0, 1), mono(1, 1)]
    det = determinant(vandermonde(T, inst.roots))
    assert abs(det) == 4  # |axis-1 Vandermonde|^2 * |axis-2 Vandermonde|^2 = 1 * 4
    assert det != 0


def test_vandermonde_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        vandermonde([mono(0), mono(1)], [(F(1),)])


def test_power_matrix_entries():
    m = power_matrix([mono(1, 2)], [(F(2), F(3)), (F(-1), F(1))])
    assert m.entries == ((F(18), F(-1)),)


def test_instance_json_roundtrip_shape():
    inst = grid_system([[F(1), F(2)], [F(1, 2), F(3)]], [F(2), F(1)])
    blob = inst.to_json()
    assert blob["roots"][1] == ["1", "3"]
    assert {"polys", "roots", "leads"} <= set(blob)
