import random
from fractions import Fraction

import pytest

from residua.rationals import ZERO, ONE, GaussRational
from residua.polynomials import MultiPoly
from residua.univariate import (
    RootFindingError,
    coeff_list,
    derivative,
    durand_kerner,
    eval_at,
    from_coeffs,
    order_at_zero,
    rational_roots,
    series_inverse,
    squarefree_part,
    univar_divmod,
    univar_gcd,
)

X = MultiPoly.var("x")
Y = MultiPoly.var("y")


def G(re, im=0):
    return GaussRational(Fraction(re), Fraction(im))


def test_coeff_list_roundtrip():
    p = X ** 3 - 2 * X + 5
    cs = coeff_list(p, "x")
    assert cs == [G(5), G(-2), G(0), G(1)]
    assert from_coeffs(cs, "x") == p


def test_coeff_list_rejects_multivariate():
    with pytest.raises(ValueError):
        coeff_list(X * Y, "x")


def test_coeff_list_constant_in_other_var():
    assert coeff_list(MultiPoly.const(3), "y") == [G(3)]


def test_divmod_and_gcd():
    f = coeff_list(X ** 3 - 1, "x")
    g = coeff_list(X - 1, "x")
    q, r = univar_divmod(f, g)
    assert r == []
    assert q == coeff_list(X ** 2 + X + 1, "x")
    assert univar_gcd(coeff_list(X ** 2 - 1, "x"), f) == g


def test_gcd_is_monic():
    f = coeff_list(2 * (X - 1) * (X - 2), "x")
    g = coeff_list(3 * (X - 1), "x")
    assert univar_gcd(f, g) == coeff_list(X - 1, "x")


def test_squarefree_part():
    f = coeff_list((X - 1) ** 2 * (X - 2), "x")
    assert squarefree_part(f) == coeff_list((X - 1) * (X - 2), "x")
    assert squarefree_part(coeff_list(X ** 3, "x")) == coeff_list(X, "x")


def test_derivative_and_order():
    f = coeff_list(X ** 4 + 3 * X ** 2, "x")
    assert derivative(f) == coeff_list(4 * X ** 3 + 6 * X, "x")
    assert order_at_zero(f) == 2
    with pytest.raises(ValueError):
        order_at_zero([])


def test_series_inverse_geometric():
    # 1/(1 - w) = 1 + w + w^2 + ...
    unit = [ONE, -ONE]
    inv = series_inverse(unit, 5)
    assert inv == [ONE] * 6


def test_series_inverse_is_inverse():
    rng = random.Random(7)
    for _ in range(30):
        unit = [G(rng.randint(1, 5), rng.randint(-2, 2))]
        unit += [G(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(4)]
        inv = series_inverse(unit, 6)
        # convolution must give 1, 0, 0, ...
        for k in range(7):
            acc = ZERO
            for j in range(k + 1):
                if j < len(unit) and k - j < len(inv):
                    acc = acc + unit[j] * inv[k - j]
            assert acc == (ONE if k == 0 else ZERO)


def test_rational_roots_cubic():
    roots, rem = rational_roots(X ** 3 - 1, "x")
    assert roots == [(G(1), 1)]
    # x^2 + x + 1 has no root in Q(i): discriminant -3 is not a square
    assert rem == X ** 2 + X + 1


def test_rational_roots_gaussian():
    roots, rem = rational_roots(X ** 2 + 1, "x")
    assert rem.is_constant()
    assert sorted(roots, key=lambda rk: (rk[0].im,)) == [(G(0, -1), 1), (G(0, 1), 1)]


def test_rational_roots_multiplicity():
    p = (X - MultiPoly.const(Fraction(1, 2))) ** 2 * (X + MultiPoly.const(G(0, 1))) ** 3
    roots, rem = rational_roots(p, "x")
    assert rem.is_constant()
    assert dict(roots) == {G(Fraction(1, 2)): 2, G(0, -1): 3}


def test_rational_roots_zero_root():
    roots, rem = rational_roots(X ** 2 * (X - 3), "x")
    assert dict(roots) == {ZERO: 2, G(3): 1}
    assert rem.is_constant()


def test_rational_roots_sieve_quintic():
    p = (X - 2) * (X - 3) * (X + 5) * (X ** 2 + X + 1)
    roots, rem = rational_roots(p, "x")
    assert dict(roots) == {G(2): 1, G(3): 1, G(-5): 1}
    assert rem == X ** 2 + X + 1


def test_rational_roots_sieve_gaussian_quintic():
    p = (X - MultiPoly.const(G(1, 1))) * (X - 2) * (X ** 3 + X + 7)
    roots, rem = rational_roots(p, "x")
    assert dict(roots) == {G(1, 1): 1, G(2): 1}
    assert rem == X ** 3 + X + 7


def test_rational_roots_nonmonic_denominators():
    # 6x^2 - 5x + 1 = (2x - 1)(3x - 1)
    p = 6 * X ** 2 - 5 * X + 1
    roots, rem = rational_roots(p, "x")
    assert rem.is_constant()
    assert dict(roots) == {G(Fraction(1, 2)): 1, G(Fraction(1, 3)): 1}


def test_durand_kerner_quadratic():
    zs = durand_kerner(X ** 2 + 1, "x")
    assert len(zs) == 2
    for z in zs:
        assert abs(z * z + 1) < 1e-9
    assert zs == durand_kerner(X ** 2 + 1, "x")  # deterministic


def test_durand_kerner_strips_multiplicity():
    zs = durand_kerner((X - 1) ** 2 * (X - 2), "x")
    assert len(zs) == 2
    assert sorted(round(z.real) for z in zs) == [1, 2]


def test_durand_kerner_cube_roots():
    zs = durand_kerner(X ** 3 - 1, "x")
    assert len(zs) == 3
    for z in zs:
        assert abs(z ** 3 - 1) < 1e-9


def test_durand_kerner_matches_exact_roots():
    rng = random.Random(11)
    for _ in range(20):
        rts = rng.sample(range(-6, 7), 3)
        p = (X - rts[0]) * (X - rts[1]) * (X - rts[2])
        zs = durand_kerner(p, "x")
        got = sorted(round(z.real) for z in zs)
        assert got == sorted(rts)
        assert all(abs(z.imag) < 1e-8 for z in zs)


def test_eval_at():
    f = coeff_list(X ** 2 - 2, "x")
    assert eval_at(f, G(3)) == G(7)
