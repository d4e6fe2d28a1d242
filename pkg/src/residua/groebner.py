"""Buchberger's algorithm with cofactor tracking, and quotient-ring data.

Every basis element carries cofactors expressing it as a combination of
the original generators, so callers can turn membership certificates
into identities (the elimination routine relies on this).  Orders are
lexicographic; elimination works by putting the kept variable last.
"""

from __future__ import annotations

from .rationals import ZERO, GaussRational
from .polynomials import (
    GLOBAL_VARS,
    MultiPoly,
    TermOrder,
    default_order,
    sort_vars,
)


def _ambient(gens):
    used = set()
    for g in gens:
        used.update(g.active_vars())
    return sort_vars(used)


def _mono(vars, exp, coeff) -> MultiPoly:
    return MultiPoly(vars, {tuple(exp): coeff})


def _divides_exp(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _divide(p: MultiPoly, reducers, order: TermOrder):
    """Full division: p = sum q_k * reducers[k] + rem, no term of rem
    divisible by any reducer's leading term.  Returns (rem, quotients)."""
    vars = p.vars
    quots = [MultiPoly(vars, {}) for _ in reducers]
    rem = MultiPoly(vars, {})
    lts = [(g.leading_exponent(order), g.leading_coeff(order)) for g in reducers]
    work = p
    while not work.is_zero():
        e = work.leading_exponent(order)
        c = work.terms[e]
        for k, (ge, gc) in enumerate(lts):
            if _divides_exp(ge, e):
                t = _mono(vars, [a - b for a, b in zip(e, ge)], c / gc)
                work = work - t * reducers[k]
                quots[k] = quots[k] + t
                break
        else:
            t = _mono(vars, e, c)
            rem = rem + t
            work = work - t
    return rem, quots


class IdealBasis:
    """Reduced monic lex basis plus cofactors over the original generators.

    basis[k] == sum(cofactors[k][j] * generators[j] for j).
    """

    __slots__ = ("generators", "order", "basis", "cofactors")

    def __init__(self, generators, order, basis, cofactors):
        self.generators = tuple(generators)
        self.order = order
        self.basis = tuple(basis)
        self.cofactors = tuple(tuple(row) for row in cofactors)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def contains_one(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.basis)


def _vec_add(a, b):
    return [x + y for x, y in zip(a, b)]


def _vec_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def _vec_mul(v, p):
    return [x * p for x in v]


def groebner_basis(gens, order: TermOrder | None = None) -> IdealBasis:
    gens = [MultiPoly.coerce(g) for g in gens]
    nz = [g for g in gens if not g.is_zero()]
    if not nz:
        raise ValueError("all generators are zero")
    vars = _ambient(gens)
    if order is None:
        order = default_order(vars if vars else ("x",))
    else:
        missing = [v for v in vars if v not in order.precedence]
        if missing:
            raise ValueError(f"order does not cover variables {missing}")
    if not vars:
        vars = (order.precedence[-1],)
    # keep vars in global sorted order: arithmetic re-aligns to it, so all
    # exponent tuples stay positionally comparable; precedence lives in order
    gens = [g.align_to(vars) for g in gens]

    n = len(gens)
    items: list[tuple[MultiPoly, list[MultiPoly]]] = []
    for j, g in enumerate(gens):
        if g.is_zero():
            continue
        cof = [MultiPoly(vars, {}) for _ in range(n)]
        cof[j] = MultiPoly(vars, {(0,) * len(vars): GaussRational(1)})
        items.append((g, cof))

    def lcm_exp(i, j):
        ei = items[i][0].leading_exponent(order)
        ej = items[j][0].leading_exponent(order)
        return tuple(max(a, b) for a, b in zip(ei, ej))

    pairs = {(i, j) for i in range(len(items)) for j in range(i + 1, len(items))}
    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(lcm_exp(*ij)),
                                          order.key(vars, lcm_exp(*ij))))
        pairs.discard((i, j))
        gi, ci = items[i]
        gj, cj = items[j]
        ei = gi.leading_exponent(order)
        ej = gj.leading_exponent(order)
        lcm = tuple(max(a, b) for a, b in zip(ei, ej))
        if lcm == tuple(a + b for a, b in zip(ei, ej)):
            continue  # coprime leading terms, S-polynomial reduces to zero
        ti = _mono(vars, [a - b for a, b in zip(lcm, ei)],
                   gi.leading_coeff(order).inverse())
        tj = _mono(vars, [a - b for a, b in zip(lcm, ej)],
                   gj.leading_coeff(order).inverse())
        s = ti * gi - tj * gj
        scof = _vec_sub(_vec_mul(ci, ti), _vec_mul(cj, tj))
        rem, quots = _divide(s, [it[0] for it in items], order)
        for k, q in enumerate(quots):
            if not q.is_zero():
                scof = _vec_sub(scof, _vec_mul(items[k][1], q))
        if not rem.is_zero():
            items.append((rem, scof))
            new = len(items) - 1
            pairs.update((k, new) for k in range(new))

    # minimalize: drop elements whose leading term another element divides
    keep = []
    for k, (g, _) in enumerate(items):
        e = g.leading_exponent(order)
        drop = False
        for m, (h, _) in enumerate(items):
            if m == k:
                continue
            he = h.leading_exponent(order)
            if _divides_exp(he, e) and (he != e or m < k):
                drop = True
                break
        if not drop:
            keep.append(k)

    # inter-reduce the survivors, keeping cofactors in step
    reduced: list[tuple[MultiPoly, list[MultiPoly]]] = []
    for k in keep:
        g, c = items[k]
        others = [items[m][0] for m in keep if m != k]
        rem, quots = _divide(g, others, order) if others else (g, [])
        rc = list(c)
        pos = 0
        for m in keep:
            if m == k:
                continue
            if not quots[pos].is_zero():
                rc = _vec_sub(rc, _vec_mul(items[m][1], quots[pos]))
            pos += 1
        inv = rem.leading_coeff(order).inverse()
        reduced.append((rem * inv, _vec_mul(rc, inv)))

    reduced.sort(key=lambda it: order.key(vars, it[0].leading_exponent(order)),
                 reverse=True)
    return IdealBasis(gens, order, [g for g, _ in reduced],
                      [c for _, c in reduced])


def normal_form(p, ideal: IdealBasis) -> MultiPoly:
    p = MultiPoly.coerce(p)
    vars = ideal.basis[0].vars
    extra = [v for v in p.active_vars() if v not in vars]
    if extra:
        raise ValueError(f"polynomial uses variables {extra} outside the ideal ring")
    rem, _ = _divide(p.align_to(vars), list(ideal.basis), ideal.order)
    return rem


class StandardMonomialSet:
    """Monomial basis of the quotient ring, with coordinate extraction."""

    __slots__ = ("ideal", "vars", "exponents", "index")

    def __init__(self, ideal: IdealBasis, exponents):
        self.ideal = ideal
        self.vars = ideal.basis[0].vars
        order = ideal.order
        self.exponents = tuple(sorted(
            exponents, key=lambda e: order.graded_key(self.vars, e)))
        self.index = {e: k for k, e in enumerate(self.exponents)}

    def __len__(self):
        return len(self.exponents)

    def coords(self, p) -> list[GaussRational]:
        """Coordinates of p mod the ideal in this monomial basis."""
        rem = normal_form(p, self.ideal)
        vec = [ZERO] * len(self.exponents)
        for e, c in rem.terms.items():
            vec[self.index[e]] = c
        return vec

    def monomial(self, k) -> MultiPoly:
        return MultiPoly(self.vars, {self.exponents[k]: GaussRational(1)})


def standard_monomials(ideal: IdealBasis) -> StandardMonomialSet | None:
    """None when the quotient is infinite dimensional."""
    vars = ideal.basis[0].vars
    lts = [g.leading_exponent(ideal.order) for g in ideal.basis]
    if ideal.contains_one():
        return StandardMonomialSet(ideal, [])
    bounds = []
    for i in range(len(vars)):
        pure = [e[i] for e in lts if all(e[j] == 0 for j in range(len(vars)) if j != i)]
        if not pure:
            return None
        bounds.append(min(pure))
    exps = []
    current = [0] * len(vars)

    def walk(i):
        if i == len(vars):
            e = tuple(current)
            if not any(_divides_exp(lt, e) for lt in lts):
                exps.append(e)
            return
        for k in range(bounds[i]):
            current[i] = k
            walk(i + 1)
        current[i] = 0

    walk(0)
    return StandardMonomialSet(ideal, exps)


def quotient_dimension(gens, order: TermOrder | None = None) -> int | None:
    """Dimension of polynomial ring mod ideal; None when infinite."""
    std = standard_monomials(groebner_basis(gens, order))
    return None if std is None else len(std)


def elimination_order(keep: str, vars) -> TermOrder:
    """Lex order eliminating everything except keep (keep is smallest)."""
    rest = [v for v in sort_vars(set(vars) | {keep}) if v != keep]
    return TermOrder(tuple(rest) + (keep,))


def elimination_generator(gens, keep: str):
    """Lowest-degree polynomial in keep alone inside the ideal.

    Returns (poly, cofactors) with poly == sum(cofactors[j] * gens[j]).
    Raises ValueError when the ideal meets the univariate ring only in 0.
    """
    gens = [MultiPoly.coerce(g) for g in gens]
    vars = _ambient(gens)
    ideal = groebner_basis(gens, elimination_order(keep, vars))
    found = None
    for k, g in enumerate(ideal.basis):
        active = g.active_vars()
        if active == () or active == (keep,):
            if found is None or g.degree_in(keep) < ideal.basis[found].degree_in(keep):
                found = k
    if found is None:
        raise ValueError(f"no univariate element in {keep}")
    return ideal.basis[found], ideal.cofactors[found]
