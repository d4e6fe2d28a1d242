"""First integrals built from rational functions and an exponential.

A candidate integral is a finite product prod f_i^(l_i) * exp(e) with
rational f_i and e.  Its logarithmic differential is a rational one-form
with polynomial numerator pair; the candidate is a first integral of a
foliation exactly when that pair is proportional to the foliation's
coefficients, which is a polynomial identity checked exactly.
"""

from __future__ import annotations

from .rationals import ZERO, GaussRational
from .polynomials import (
    MultiPoly,
    RatFunc,
    exact_divide,
    gaussian_content,
    poly_gcd,
)
from .foliation import Foliation


class DarbouxSpec:
    """prod factors[i][0] ** factors[i][1] * exp(exp_part)."""

    __slots__ = ("factors", "exp_part")

    def __init__(self, factors, exp_part=None):
        clean = []
        for f, ell in factors:
            f = RatFunc.coerce(f)
            ell = GaussRational.coerce(ell)
            if f.is_zero():
                raise ValueError("zero base in a power")
            clean.append((f, ell))
        self.factors = tuple(clean)
        self.exp_part = RatFunc.coerce(exp_part) if exp_part is not None else None

    def __repr__(self):
        parts = [f"({f})^({ell})" for f, ell in self.factors]
        if self.exp_part is not None:
            parts.append(f"exp({self.exp_part})")
        return " * ".join(parts) if parts else "1"


def poly_lcm(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    g = poly_gcd(p, q)
    return exact_divide(p * q, g).monic()


def logarithmic_differential(spec: DarbouxSpec, vars=("x", "y")):
    """d(log H) as (P, Q, D) with dH/H = (P d vx + Q d vy) / D."""
    vx, vy = vars
    tx = RatFunc.coerce(0)
    ty = RatFunc.coerce(0)
    for f, ell in spec.factors:
        if f.num.is_constant() and f.den.is_constant():
            continue
        tx = tx + f.diff(vx) / f * ell
        ty = ty + f.diff(vy) / f * ell
    if spec.exp_part is not None:
        tx = tx + spec.exp_part.diff(vx)
        ty = ty + spec.exp_part.diff(vy)
    if tx.is_zero() and ty.is_zero():
        return MultiPoly.const(0), MultiPoly.const(0), MultiPoly.const(1)
    den = poly_lcm(tx.den, ty.den)
    p = tx.num * exact_divide(den, tx.den)
    q = ty.num * exact_divide(den, ty.den)
    return p, q, den


def check_first_integral(fol: Foliation, spec: DarbouxSpec) -> bool:
    """Exact test that the candidate is constant on the leaves."""
    p, q, _ = logarithmic_differential(spec, fol.vars())
    if p.is_zero() and q.is_zero():
        return False
    wedge = fol.a * q - fol.b * p
    return wedge.is_zero()


def one_form_from_factored(factors, vars=("x", "y")) -> Foliation:
    """The foliation with first integral prod g_i^(l_i), as a polynomial
    one-form with common factors and scalar content removed."""
    vx, vy = vars
    clean = []
    for g, ell in factors:
        g = MultiPoly.coerce(g)
        ell = GaussRational.coerce(ell)
        if g.is_constant():
            raise ValueError("constant factor in the product")
        if ell.is_zero():
            raise ValueError("zero exponent in the product")
        clean.append((g, ell))
    if not clean:
        raise ValueError("empty factor list")
    a = MultiPoly.const(0)
    b = MultiPoly.const(0)
    for i, (gi, li) in enumerate(clean):
        rest = MultiPoly.const(1)
        for j, (gj, _) in enumerate(clean):
            if j != i:
                rest = rest * gj
        a = a + rest * gi.diff(vx) * li
        b = b + rest * gi.diff(vy) * li
    if a.is_zero() and b.is_zero():
        raise ValueError("the product is constant along both directions")
    common = poly_gcd(a, b)
    if not common.is_constant():
        a = exact_divide(a, common)
        b = exact_divide(b, common)
    unit = gaussian_content([a, b]).inverse()
    return Foliation(a * unit, b * unit, vars)
