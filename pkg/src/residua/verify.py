"""Global index identities checked against their predicted totals.

Over the projective plane the Baum-Bott residues of a degree d
foliation add up to (d+2)^2, and the Camacho-Sad indices along an
invariant line add up to 1 (the line's self-intersection).  These
routines enumerate the singular points involved, compute each local
index, and compare the sum with the target, exactly when every point is
rational and within a tolerance when numeric points contribute.
"""

from __future__ import annotations

from .exceptions import (
    DegenerateFoliationError,
    UnsupportedInputError,
)
from .rationals import ZERO, ONE, GaussRational
from .polynomials import MultiPoly, exact_divide
from .foliation import Foliation
from .projective import ProjectiveFoliation, ProjectivePoint
from .indices import bb_numeric, bb_residue, cs_smooth_branch
from .univariate import rational_roots


class Contribution:
    """One singular point's share of a verified total."""

    __slots__ = ("point", "value", "exact")

    def __init__(self, point, value, exact: bool):
        self.point = point
        self.value = value
        self.exact = exact

    def __repr__(self):
        return f"Contribution({self.point!r}, {self.value}, exact={self.exact})"


class VerificationReport:
    """Sum of local indices against the global target."""

    __slots__ = ("kind", "target", "total", "contributions", "exact", "ok", "tol")

    def __init__(self, kind, target, total, contributions, exact, ok, tol):
        self.kind = kind
        self.target = target
        self.total = total
        self.contributions = tuple(contributions)
        self.exact = exact
        self.ok = ok
        self.tol = tol

    def __repr__(self):
        return (f"VerificationReport({self.kind}: total {self.total} vs "
                f"target {self.target}, ok={self.ok})")


def verify_baum_bott(pfol: ProjectiveFoliation, tol: float = 1e-6) -> VerificationReport:
    """Sum the residues at every singular point against (d+2)^2."""
    d = pfol.degree()
    target = GaussRational((d + 2) ** 2)
    contribs = []
    for p in pfol.singular_points():
        chart = pfol.chart(p.chart)
        if p.exact:
            val = bb_residue(chart, p.chart_coords)
            contribs.append(Contribution(p, val, True))
        else:
            val = bb_numeric(chart, p.chart_coords)
            contribs.append(Contribution(p, val, False))
    exact = all(c.exact for c in contribs)
    if exact:
        total = ZERO
        for c in contribs:
            total = total + c.value
        ok = total == target
    else:
        total = 0j
        for c in contribs:
            total += c.value.to_complex() if c.exact else c.value
        ok = abs(total - target.to_complex()) <= tol
    return VerificationReport("baum_bott", target, total, contribs, exact, ok, tol)


def _inv3(m):
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det.is_zero():
        raise ValueError("singular matrix")
    inv_det = det.inverse()
    return [
        [(e * i - f * h) * inv_det, (c * h - b * i) * inv_det, (b * f - c * e) * inv_det],
        [(f * g - d * i) * inv_det, (a * i - c * g) * inv_det, (c * d - a * f) * inv_det],
        [(d * h - e * g) * inv_det, (b * g - a * h) * inv_det, (a * e - b * d) * inv_det],
    ]


def transform(pfol: ProjectiveFoliation, m) -> ProjectiveFoliation:
    """Pull the form back through the coordinate change Z = m Z'."""
    zs = [MultiPoly.var(v) for v in ("Z1", "Z2", "Z3")]
    images = []
    for i in range(3):
        acc = MultiPoly.const(0)
        for j in range(3):
            acc = acc + zs[j] * m[i][j]
        images.append(acc)
    sub = {"Z1": images[0], "Z2": images[1], "Z3": images[2]}
    old = [pfol.l, pfol.m, pfol.n]
    new = []
    for j in range(3):
        acc = MultiPoly.const(0)
        for i in range(3):
            acc = acc + old[i].substitute_poly(sub) * m[i][j]
        new.append(acc)
    return ProjectiveFoliation(*new)


def _line_to_first_coordinate(line):
    """Invertible change with the given line becoming Z1' = 0; returns
    the matrix m with Z = m Z' to substitute."""
    coeffs = [GaussRational.coerce(c) for c in line]
    if all(c.is_zero() for c in coeffs):
        raise ValueError("zero line coefficients")
    k = next(i for i, c in enumerate(coeffs) if not c.is_zero())
    rows = [coeffs]
    for j in range(3):
        if j != k:
            rows.append([ONE if i == j else ZERO for i in range(3)])
    return _inv3(rows)


def is_invariant_line(pfol: ProjectiveFoliation, line) -> bool:
    """Whether the projective line with these coefficients is a union
    of leaves and singular points."""
    coeffs = [GaussRational.coerce(c) for c in line]
    if all(c.is_zero() for c in coeffs):
        raise ValueError("zero line coefficients")
    k = next(i for i, c in enumerate(coeffs) if not c.is_zero())
    names = ("Z1", "Z2", "Z3")
    inv = coeffs[k].inverse()
    image = MultiPoly.const(0)
    for i in range(3):
        if i != k:
            image = image - MultiPoly.var(names[i]) * (coeffs[i] * inv)
    sub = {names[k]: image}
    sides = [pfol.l, pfol.m, pfol.n]
    for i in range(3):
        for j in range(i + 1, 3):
            wedge = sides[i] * coeffs[j] - sides[j] * coeffs[i]
            if not wedge.substitute_poly(sub).is_zero():
                return False
    return True


def verify_camacho_sad(pfol: ProjectiveFoliation, line,
                       tol: float = 1e-6) -> VerificationReport:
    """Sum the indices along an invariant line against its
    self-intersection number 1."""
    if not is_invariant_line(pfol, line):
        raise ValueError("the line is not invariant")
    moved = transform(pfol, _line_to_first_coordinate(line))
    target = ONE
    contribs = []
    chart3 = moved.chart("Z3")
    a0 = chart3.a.substitute_poly({"x": MultiPoly.const(0)}).trim()
    if a0.is_zero():
        raise DegenerateFoliationError("the line consists of singular points")
    if not a0.is_constant():
        roots, rem = rational_roots(a0, "y")
        if rem.degree() > 0:
            raise UnsupportedInputError(
                "singular point on the line with non-rational coordinates")
        for y0, _ in roots:
            val = cs_smooth_branch(chart3, "x", (ZERO, y0))
            pt = ProjectivePoint((ZERO, y0, ONE), True, "Z3", (ZERO, y0))
            contribs.append(Contribution(pt, val, True))
    chart2 = moved.chart("Z2")
    if chart2.is_singular_at((ZERO, ZERO)):
        val = cs_smooth_branch(chart2, "u", (ZERO, ZERO))
        pt = ProjectivePoint((ZERO, ONE, ZERO), True, "Z2", (ZERO, ZERO))
        contribs.append(Contribution(pt, val, True))
    total = ZERO
    for c in contribs:
        total = total + c.value
    ok = total == target
    return VerificationReport("camacho_sad", target, total, contribs, True, ok, tol)


def is_invariant_curve(fol: Foliation, curve: MultiPoly) -> bool:
    """Whether the affine curve is a union of leaves and singular
    points of the chart foliation."""
    curve = MultiPoly.coerce(curve)
    if curve.is_constant():
        raise ValueError("constant defining polynomial")
    stray = [v for v in curve.active_vars() if v not in fol.vars()]
    if stray:
        raise ValueError(f"curve uses variables {stray} outside the chart")
    f, g = fol.dual_vector_field()
    tangency = f * curve.diff(fol.vx) + g * curve.diff(fol.vy)
    if tangency.is_zero():
        return True
    return exact_divide(tangency, curve) is not None
