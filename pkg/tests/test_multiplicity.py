import random
from fractions import Fraction

import pytest

from residua.exceptions import InfiniteMultiplicityError
from residua.rationals import GaussRational
from residua.polynomials import MultiPoly
from residua.multiplicity import (
    kernel_basis,
    local_intersection_multiplicity,
    mat_mul,
    mat_pow,
    mat_rank,
    subspace_intersection_dim,
)

X = MultiPoly.var("x")
Y = MultiPoly.var("y")


def G(re, im=0):
    return GaussRational(Fraction(re), Fraction(im))


def test_mat_rank_and_kernel():
    m = [[G(1), G(2), G(3)], [G(2), G(4), G(6)], [G(0), G(1), G(1)]]
    assert mat_rank(m) == 2
    ker = kernel_basis(m)
    assert len(ker) == 1
    v = ker[0]
    for row in m:
        acc = G(0)
        for c, x in zip(row, v):
            acc = acc + c * x
        assert acc.is_zero()


def test_mat_pow():
    m = [[G(0), G(1)], [G(0), G(0)]]
    assert mat_pow(m, 2) == [[G(0), G(0)], [G(0), G(0)]]
    assert mat_pow(m, 0) == [[G(1), G(0)], [G(0), G(1)]]
    assert mat_mul(m, m) == mat_pow(m, 2)


def test_subspace_intersection_dim():
    u = [[G(1), G(0), G(0)], [G(0), G(1), G(0)]]
    w = [[G(0), G(1), G(0)], [G(0), G(0), G(1)]]
    assert subspace_intersection_dim(u, w) == 1
    assert subspace_intersection_dim(u, []) == 0


def test_transverse_lines():
    assert local_intersection_multiplicity(X, Y) == 1


def test_tangent_line_and_parabola():
    assert local_intersection_multiplicity(Y - X ** 2, Y) == 2


def test_two_parabolas():
    assert local_intersection_multiplicity(Y - X ** 2, Y + X ** 2) == 2


def test_coordinate_powers():
    assert local_intersection_multiplicity(X ** 2, Y ** 2) == 4
    assert local_intersection_multiplicity(X ** 3, Y ** 2) == 6


def test_extra_zero_away_from_origin():
    # y = x^2 and y = x also meet at (1,1); only the origin counts
    assert local_intersection_multiplicity(Y - X ** 2, Y - X) == 1


def test_multiplicity_at_shifted_point():
    point = {"x": G(1), "y": G(1)}
    assert local_intersection_multiplicity(Y - X ** 2, Y - X, point) == 1
    assert local_intersection_multiplicity(Y - X ** 2, Y - 1, point) == 1


def test_nonvanishing_gives_zero():
    assert local_intersection_multiplicity(X + 1, Y) == 0


def test_unit_common_factor_divided_out():
    f = (X + 1) * Y
    g = (X + 1) * (Y - X ** 2)
    assert local_intersection_multiplicity(f, g) == 2


def test_shared_component_through_origin():
    with pytest.raises(InfiniteMultiplicityError):
        local_intersection_multiplicity(X * Y, X * (Y + X))


def test_zero_curve_rejected():
    with pytest.raises(InfiniteMultiplicityError):
        local_intersection_multiplicity(MultiPoly.const(0), X)


def test_symmetry():
    pairs = [(Y - X ** 2, Y - X), (X ** 2, Y ** 3), (Y - X ** 2, Y + X ** 2)]
    for f, g in pairs:
        assert (local_intersection_multiplicity(f, g)
                == local_intersection_multiplicity(g, f))


def test_linear_change_of_coordinates_invariance():
    rng = random.Random(17)
    cases = [(X ** 2, Y ** 2), (Y - X ** 2, Y), (Y - X ** 2, Y + X ** 2)]
    for f, g in cases:
        base = local_intersection_multiplicity(f, g)
        for _ in range(5):
            # unimodular substitution keeps the origin and the multiplicity
            a = rng.randint(-2, 2)
            b = rng.randint(-2, 2)
            sub = {"x": X + a * Y, "y": Y + b * (X + a * Y)}
            ft = f.substitute_poly(sub)
            gt = g.substitute_poly(sub)
            assert local_intersection_multiplicity(ft, gt) == base


def test_bezout_total_over_all_points():
    # y - x^2 meets y - x at two simple points; multiplicities sum to
    # the product of degrees
    m0 = local_intersection_multiplicity(Y - X ** 2, Y - X)
    m1 = local_intersection_multiplicity(Y - X ** 2, Y - X, {"x": G(1), "y": G(1)})
    assert m0 + m1 == 2


def test_worked_example_dimension_seven():
    assert local_intersection_multiplicity(X * Y ** 2, Y ** 3 - X ** 2) == 7
