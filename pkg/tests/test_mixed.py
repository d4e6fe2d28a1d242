import random
from fractions import Fraction

import pytest

from residua.rationals import GaussRational
from residua.polynomials import MultiPoly
from residua.mixed import (
    MixedPoly,
    defining_equation,
    levi_flat_from_rational,
)

X = MultiPoly.var("x")
Y = MultiPoly.var("y")
Z1 = MultiPoly.var("Z1")
Z2 = MultiPoly.var("Z2")
Z3 = MultiPoly.var("Z3")


def G(re, im=0):
    return GaussRational(Fraction(re), Fraction(im))


def random_poly(rng, vars=(X, Y)):
    out = MultiPoly.const(0)
    for _ in range(rng.randint(

1, 4)):
        term = MultiPoly.const(G(rng.randint(-4, 4), rng.randint(-2, 2)))
        for v in vars:
            term = term * v ** rng.randint(0, 2)
        out = out + term
    return out


def test_embed_is_a_ring_map():
    rng = random.Random(20263)
    for _ in range(40):
        p = random_poly(rng)
        q = random_poly(rng)
        assert MixedPoly.embed(p + q) == MixedPoly.embed(p) + MixedPoly.embed(q)
        assert MixedPoly.embed(p * q) == MixedPoly.embed(p) * MixedPoly.embed(q)


def test_swap_conjugate_involution_and_multiplicativity():
    rng = random.Random(20264)
    for _ in range(30):
        a = MixedPoly.embed(random_poly(rng)) + MixedPoly.conj_embed(
            random_poly(rng)
        )
        b = MixedPoly.embed(random_poly(rng)) * MixedPoly.level()
        assert a.swap_conjugate().swap_conjugate() == a
        assert (a * b).swap_conjugate() == a.swap_conjugate() * b.swap_conjugate()
        assert (a + b).swap_conjugate() == a.swap_conjugate() + b.swap_conjugate()


def test_hermitian_combinations():
    rng = random.Random(20265)
    for _ in range(20):
        p = random_poly(rng)
        e = MixedPoly.embed(p)
        c = MixedPoly.conj_embed(p)
        assert (e + c).is_real()
        assert (e - c).is_imaginary()
        assert (e * c).is_real()
    assert MixedPoly.level().is_real()


def test_level_parameter_is_self_conjugate():
    c = MixedPoly.level()
    assert c.swap_conjugate() == c
    assert str(c) == "c"
    assert str(c * c) == "c^2"


def test_mixed_rejects_raw_polynomials():
    with pytest.raises(TypeError):
        MixedPoly.embed(X) + X


def test_degree_and_constants():
    assert MixedPoly.const(3).is_constant()
    assert MixedPoly.const(0).is_zero()
    m = MixedPoly.embed(X) * MixedPoly.conj_embed(X) * MixedPoly.level()
    assert m.degree() == 3
    assert not m.is_constant()


def test_defining_polynomial_frozen_strings():
    rho = levi_flat_from_rational(Z1, Z3)
    assert defining_equation(rho) == "Z1*conj(Z3) - conj(Z1)*Z3"
    flat = levi_flat_from_rational(X, MultiPoly.const(1))
    assert defining_equation(flat) == "x - conj(x)"
    quad = levi_flat_from_rational(Z1 * Z2, Z3 ** 2)
    assert defining_equation(quad) == "Z1*Z2*conj(Z3)^2 - conj(Z1)*conj(Z2)*Z3^2"


def test_defining_polynomial_reality():
    cases = [
        (Z1, Z3),
        (X, MultiPoly.const(1)),
        (X ** 2 - Y, X + Y),
        ((1 + G(0, 1)) * X, MultiPoly.const(1)),
        (Z1 * Z2, Z3 ** 2),
    ]
    for p, q in cases:
        rho = levi_flat_from_rational(p, q)
        assert rho.is_real()
        two_i = G(0, 2)
        assert (rho * two_i).is_imaginary()


def test_defining_polynomial_scale_invariance():
    a = levi_flat_from_rational(X, MultiPoly.const(1))
    b = levi_flat_from_rational(3 * X, MultiPoly.const(6))
    # the two quotients differ by a real constant, same hypersurface
    assert defining_equation(a) == defining_equation(b)


def test_defining_polynomial_validation():
    with pytest.raises(ValueError):
        levi_flat_from_rational(X, MultiPoly.const(0))
    with pytest.raises(ValueError):
        levi_flat_from_rational(X ** 2, X)
    with pytest.raises(ValueError):
        levi_flat_from_rational(X * Y, Y)


def test_real_quotient_gives_zero():
    rho = levi_flat_from_rational(MultiPoly.const(2), MultiPoly.const(1))
    assert rho.is_zero()
    assert defining_equation(rho) == "0"


def test_levels_are_leaves():
    # replacing the numerator by c times the denominator kills the
    # defining polynomial for a symbolic real c
    c = MixedPoly.level()
    for q in (Z3, Z1 * Z2, X ** 2 + Y):
        e = MixedPoly.embed(q)
        conj = MixedPoly.conj_embed(q)
        sub = (c * e) * conj - (c * conj) * e
        assert sub.is_zero()
        assert not ((c * e) * conj).is_zero()


def test_imaginary_part_evaluates_like_the_quotient():
    # rho at a numeric point equals Im(p/q) there, up to the positive
    # scale the constructor divides out; check with p = x, q = 1 at
    # x = 3 + 2i by substituting exponents directly
    rho = levi_flat_from_rational(X, MultiPoly.const(1))
    z = complex(3, 2)
    total = 0j
    for (za, zb, ck), coeff in rho.terms.items():
        val = complex(coeff.re) + 1j * complex(coeff.im)
        val *= z ** za[0] if za else 1
        val *= z.conjugate() ** zb[0] if zb else 1
        assert ck == 0
        total += val
    assert abs(total - 2) < 1e-12
