"""Ideals of affine rings: intersection, quotient, saturation, dimension,
trimming, equality and radical membership.

An ideal of R = k[x]/Q is stored by lifted generators; every computation
works in the ambient polynomial ring with Q added.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations

from .groebner import buchberger, eliminate
from .polyring import AffineRing, AlgebraError, MonomialOrder, Polynomial, RingElement

__all__ = [
    "IdealHandle",
    "ideal",
    "intersect",
    "intersect_all",
    "quotient",
    "quotient_by_element",
    "saturate",
    "krull_dimension",
    "independent_set",
    "trim",
    "ideals_equal",
    "is_subset",
    "radical_membership",
    "divide_exact",
    "ideal_sum",
    "ideal_product",
]


class IdealHandle:
    """An ideal of an :class:`AffineRing` given by lifted generators."""

    def __init__(self, ring: AffineRing, gens=()):
        self.ring = ring
        out = []
        seen = set()
        for g in gens:
            if isinstance(g, RingElement):
                if g.ring != ring:
                    raise AlgebraError("generator belongs to a different ring")
                f = g.rep
            elif isinstance(g, str):
                f = ring.reduce(ring.poly(g))
            elif isinstance(g, Polynomial):
                f = ring.reduce(g)
            else:
                f = ring.reduce(Polynomial.constant(ring.field, ring.nvars, g))
            if f and f not in seen:
                seen.add(f)
                out.append(f)
        self.gens = tuple(out)

    def ambient_generators(self):
        return list(self.gens) + list(self.ring.gb.elements)

    @cached_property
    def gb(self):
        R = self.ring
        return buchberger(self.ambient_generators(), field=R.field, nvars=R.nvars)

    def elements(self):
        return [RingElement(self.ring, g, _normal=True) for g in self.gens]

    def contains(self, f) -> bool:
        if isinstance(f, RingElement):
            f = f.rep
        elif isinstance(f, str):
            f = self.ring.poly(f)
        return self.gb.contains(f)

    def is_unit(self) -> bool:
        return self.gb.is_unit()

    def is_zero(self) -> bool:
        return all(self.ring.gb.contains(g) for g in self.gens)

    def quotient_ring(self, names=None) -> AffineRing:
        R = self.ring
        return AffineRing(R.field, names or R.vars, list(self.gb.elements))

    def reduced_generators(self):
        """The reduced Groebner basis modulo the ring's own relations."""
        R = self.ring
        return [g for g in self.gb.elements if not R.gb.contains(g)]

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __eq__(self, other):
        return isinstance(other, IdealHandle) and ideals_equal(self, other)

    def __hash__(self):
        return hash((self.ring, self.gb.elements))

    def to_strings(self):
        return [g.to_str(self.ring.vars) for g in self.gens]

    def __repr__(self):
        return f"ideal({', '.join(self.to_strings())})"


def ideal(ring: AffineRing, *gens) -> IdealHandle:
    if len(gens) == 1 and isinstance(gens[0], (list, tuple)):
        gens = gens[0]
    return IdealHandle(ring, gens)


def _same_ring(I, J):
    if I.ring != J.ring:
        raise AlgebraError("ideals live in different rings")


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """``f / g`` when g divides f exactly (multivariate division)."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    field = f.field
    lm_g, lc_g = g.leading_term()
    inv = field.inv(lc_g)
    p = field.p
    q = {}
    r = f
    while r:
        lm, lc = r.leading_term()
        if any(a < b for a, b in zip(lm, lm_g)):
            raise AlgebraError("division is not exact")
        mono = tuple(a - b for a, b in zip(lm, lm_g))
        c = lc * inv % p if p else lc * inv
        q[mono] = c
        r = r - g.mul_monomial(mono, c)
    return Polynomial(field, f.nvars, q, _clean=True)


def _intersect_polys(F, G, field, n):
    if not F or not G:
        return []
    t = Polynomial.variable(field, n + 1, 0)
    one = Polynomial.constant(field, n + 1, 1)
    gens = [t * f.shift(n + 1, 1) for f in F] + [(one - t) * g.shift(n + 1, 1) for g in G]
    res = eliminate(gens, [0], field=field, nvars=n + 1)
    return [r.project(list(range(1, n + 1))) for r in res]


def intersect(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """I ∩ J via a tag variable: eliminate t from t*I + (1 - t)*J."""
    _same_ring(I, J)
    R = I.ring
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    F = I.ambient_generators()
    G = J.ambient_generators()
    res = _intersect_polys(F, G, R.field, R.nvars)
    return IdealHandle(R, res)


def intersect_all(ideals) -> IdealHandle:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def quotient_by_element(I: IdealHandle, g) -> IdealHandle:
    R = I.ring
    if isinstance(g, RingElement):
        g = g.rep
    elif isinstance(g, str):
        g = R.poly(g)
    g = R.reduce(g)
    if not g:
        return IdealHandle(R, [1])
    F = I.ambient_generators()
    if not F:
        return IdealHandle(R, [])
    inter = _intersect_polys(F, [g], R.field, R.nvars)
    return IdealHandle(R, [divide_exact(h, g) for h in inter])


def quotient(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """(I : J) as the intersection of (I : g) over generators g of J.

    For J = 0 the quotient is the whole ring.
    """
    _same_ring(I, J)
    R = I.ring
    gens = [g for g in J.gens if g]
    if not gens:
        return IdealHandle(R, [1])
    return intersect_all(quotient_by_element(I, g) for g in gens)


def saturate(I: IdealHandle, f) -> IdealHandle:
    """(I : f^∞) by the Rabinowitsch trick."""
    R = I.ring
    if isinstance(f, RingElement):
        f = f.rep
    elif isinstance(f, str):
        f = R.poly(f)
    f = R.reduce(f)
    if not f:
        raise AlgebraError("saturation at the zero element is undefined")
    n = R.nvars
    t = Polynomial.variable(R.field, n + 1, 0)
    gens = [g.shift(n + 1, 1) for g in I.ambient_generators()]
    gens.append(t * f.shift(n + 1, 1) - 1)
    res = eliminate(gens, [0], field=R.field, nvars=n + 1)
    return IdealHandle(R, [r.project(list(range(1, n + 1))) for r in res])


def independent_set(leading_monomials, nvars):
    """A maximum subset of variables containing no leading monomial's support.

    Returns None when 1 is a leading monomial (unit ideal).
    """
    supports = []
    for m in leading_monomials:
        s = frozenset(i for i, e in enumerate(m) if e)
        if not s:
            return None
        supports.append(s)
    # every monomial support must meet the complement of the chosen set
    for size in range(nvars, -1, -1):
        for cand in combinations(range(nvars), size):
            cs = set(cand)
            if all(not s <= cs for s in supports):
                return list(cand)
    return []


def krull_dimension(R) -> int:
    """Krull dimension of a ring (or of R/I for an ideal handle); -1 for the zero ring."""
    if isinstance(R, IdealHandle):
        gb, n = R.gb, R.ring.nvars
    else:
        gb, n = R.gb, R.nvars
    s = independent_set(gb.leading_monomials(), n)
    return -1 if s is None else len(s)


def trim(I: IdealHandle) -> IdealHandle:
    """Greedily drop generators lying in the ideal of the others.

    Scans the generators from last to first; the result depends on the input
    order and is not certified minimal for inhomogeneous input.
    """
    R = I.ring
    kept = [g for g in I.gens if not R.gb.contains(g)]
    i = len(kept) - 1
    while i >= 0:
        others = kept[:i] + kept[i + 1 :]
        gb = buchberger(others + list(R.gb.elements), field=R.field, nvars=R.nvars)
        if gb.contains(kept[i]):
            kept = others
        i -= 1
    return IdealHandle(R, kept)


def ideals_equal(I: IdealHandle, J: IdealHandle) -> bool:
    _same_ring(I, J)
    return I.gb.elements == J.gb.elements


def is_subset(I: IdealHandle, J: IdealHandle) -> bool:
    _same_ring(I, J)
    return all(J.gb.contains(g) for g in I.gens)


def ideal_sum(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    _same_ring(I, J)
    return IdealHandle(I.ring, list(I.gens) + list(J.gens))


def ideal_product(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    _same_ring(I, J)
    return IdealHandle(I.ring, [f * g for f in I.gens for g in J.gens])


def radical_membership(f, I: IdealHandle) -> bool:
    """Is f in the radical of I?  Tests 1 ∈ I + (t*f - 1)."""
    R = I.ring
    if isinstance(f, RingElement):
        f = f.rep
    elif isinstance(f, str):
        f = R.poly(f)
    n = R.nvars
    t = Polynomial.variable(R.field, n + 1, 0)
    gens = [g.shift(n + 1, 1) for g in I.ambient_generators()]
    gens.append(t * f.shift(n + 1, 1) - 1)
    gb = buchberger(gens, MonomialOrder.grevlex(n + 1), field=R.field, nvars=n + 1)
    return gb.is_unit()
