import random

import pytest

from lcdmds import FieldMismatch, ParameterError, Poly, field, interpolate, linear_product

F5 = field(5)
F7 = field(7)


def test_eval_examples():
    assert Poly(F5, [1, 0, 1]).eval(2) == 0  # X^2 + 1 at 2
    assert Poly(F5).eval(3) == 0
    assert Poly(F7, [0, 1, 3]).eval(1) == 4  # 3X^2 + X at 1


def test_coeff_examples():
    f = Poly(F7, [0, 1, 3])
    assert f.coeff(2) == 3
    assert f.coeff(0) == 0
    assert f.coeff(9) == 0
    with pytest.raises(ParameterError):
        f.coeff(-1)


def test_degree_and_normalization():
    assert Poly(F5, [1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly(F5, [0, 0]).coeffs == ()
    zero = Poly(F5)
    assert zero.is_zero()
    assert zero.degree == float("-inf")
    # the sentinel sits below every integer bound
    assert zero.degree <= -1 and zero.degree <= 0 and zero.degree <= 10


def test_linear_product_examples():
    assert linear_product(F5, [1, 2]).coeffs == (2, 2, 1)  # X^2 + 2X + 2
    assert linear_product(F5, []).coeffs == (1,)
    assert linear_product(F7, [0, 0]).coeffs == (0, 0, 1)  # X^2


def test_linear_product_vanishes_exactly_on_roots():
    for F in (F5, F7, field(3, 2)):
        roots = [1, 3] if F.q > 3 else [1]
        f = linear_product(F, roots)
        for x in F.elements():
            if x in roots:
                assert f.eval(x) == 0
            else:
                assert f.eval(x) != 0


def test_interpolate_examples():
    assert interpolate(F5, [(0, 1), (1, 2), (2, 3)]).coeffs == (1, 1)  # X + 1
    assert interpolate(F5, [(0, 0)]).is_zero()
    # oracle: X^2 over GF(7) passes through (1,1), (2,4), (3,2)
    square = Poly(F7, [0, 0, 1])
    points = [(x, square.eval(x)) for x in (1, 2, 3)]
    assert [y for _, y in points] == [1, 4, 2]
    assert interpolate(F7, points) == square


def test_interpolate_rejects_duplicate_nodes():
    with pytest.raises(ParameterError, match="duplicate"):
        interpolate(F5, [(1, 1), (1, 2)])
    with pytest.raises(ParameterError, match="one point"):
        interpolate(F5, [])


def test_interpolate_roundtrip_random():
    rng = random.Random(123)
    for F in (field(5), field(7), field(3, 2), field(3, 3)):
        for _ in range(25):
            m = rng.randint(1, F.q)
            xs = rng.sample(range(F.q), m)
            ys = [rng.randrange(F.q) for _ in xs]
            g = interpolate(F, list(zip(xs, ys)))
            assert g.degree < m
            for x, y in zip(xs, ys):
                assert g.eval(x) == y


def test_interpolate_degree_bound():
    # coefficient of X^j vanishes for every j >= number of points
    rng = random.Random(5)
    F = field(11)
    xs = rng.sample(range(11), 4)
    g = interpolate(F, [(x, rng.randrange(11)) for x in xs])
    for j in range(4, 12):
        assert g.coeff(j) == 0


def test_arith_examples():
    assert (Poly(F5, [1, 1]) + Poly(F5, [4, 4])).is_zero()
    f3 = field(3)
    assert (Poly(f3, [0, 1]) * Poly(f3, [0, 1])).coeffs == (0, 0, 1)
    assert Poly(F5, [1, 0, 1]).scale(0).is_zero()
    assert (Poly(F5, [3, 1]) - Poly(F5, [4])).coeffs == (4, 1)


def test_mul_degree_is_additive():
    rng = random.Random(9)
    F = field(7)
    for _ in range(40):
        f = Poly(F, [rng.randrange(7) for _ in range(rng.randint(1, 5))] + [rng.randrange(1, 7)])
        g = Poly(F, [rng.randrange(7) for _ in range(rng.randint(1, 5))] + [rng.randrange(1, 7)])
        assert (f * g).degree == f.degree + g.degree


def test_field_mismatch_rejected():
    with pytest.raises(FieldMismatch):
        Poly(F5, [1]) + Poly(F7, [1])
    with pytest.raises(FieldMismatch):
        Poly(F5, [1]) * Poly(F7, [1])


def test_poly_is_immutable_value():
    f = Poly(F5, [1, 2])
    with pytest.raises(AttributeError):
        f.coeffs = (0,)
    assert f == Poly(F5, [1, 2, 0])
    assert hash(f) == hash(Poly(F5, [1, 2]))
