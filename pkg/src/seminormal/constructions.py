"""Ring products, fiber products, subalgebras and minimal presentations."""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import buchberger
from .polyring import AffineRing, AlgebraError, MonomialOrder, Polynomial, RingElement
from .ringmaps import NotSurjective, RingMap, compose, linear_relations, pushforward

__all__ = [
    "RingProductResult",
    "PullbackResult",
    "ring_product",
    "pullback",
    "minimize_presentation",
    "subalgebra_presentation",
    "rename_ring",
]


@dataclass
class RingProductResult:
    product: AffineRing
    idempotents: list
    var_images: list  # per factor, the product elements standing for its variables
    factors: list

    def projection(self, i: int) -> RingMap:
        """The projection onto factor i."""
        F = self.factors[i]
        images = []
        for j, R in enumerate(self.factors):
            if j == i:
                images += F.gens()
            else:
                images += [F.zero()] * R.nvars
        images += [F.one() if j == i else F.zero() for j in range(len(self.factors))]
        return RingMap(self.product, F, images)

    def embed_element(self, i: int, x) -> RingElement:
        """e_i times the image of a factor-i element."""
        R = self.factors[i]
        f = x.rep if isinstance(x, RingElement) else x
        offset = sum(F.nvars for F in self.factors[:i])
        P = self.product
        g = f.shift(P.nvars, offset)
        return P.element(g) * self.idempotents[i]

    def tuple_element(self, parts) -> RingElement:
        """The product element with the given component in each factor."""
        total = self.product.zero()
        for i, x in enumerate(parts):
            total = total + self.embed_element(i, x)
        return total


def ring_product(factors) -> RingProductResult:
    factors = list(factors)
    if not factors:
        raise AlgebraError("need at least one factor")
    field = factors[0].field
    if any(R.field != field for R in factors):
        raise AlgebraError("factors live over different fields")
    k = len(factors)
    names = []
    offsets = []
    for i, R in enumerate(factors):
        offsets.append(len(names))
        names += [f"w{i}_{j}" for j in range(R.nvars)]
    nfac = len(names)
    names += [f"e{i}" for i in range(k)]
    n = len(names)

    def var(i):
        return Polynomial.variable(field, n, i)

    e = [var(nfac + i) for i in range(k)]
    one = Polynomial.constant(field, n, 1)
    rels = []
    for i, R in enumerate(factors):
        for r in R.gb.elements:
            rels.append(e[i] * r.shift(n, offsets[i]))
    for i in range(k):
        for j in range(i + 1, k):
            rels.append(e[i] * e[j])
    total = Polynomial.zero(field, n)
    for x in e:
        total = total + x
    rels.append(total - one)
    for i, R in enumerate(factors):
        for j in range(R.nvars):
            x = var(offsets[i] + j)
            rels.append((one - e[i]) * x)
    P = AffineRing(field, names, rels)
    idem = [P.element(x) for x in e]
    var_images = [[P.var(offsets[i] + j) for j in range(R.nvars)] for i, R in enumerate(factors)]
    return RingProductResult(P, idem, var_images, factors)


def subalgebra_presentation(elements, ring: AffineRing | None = None, names=None):
    """Presentation k[T]/ker of the subalgebra generated by ``elements``.

    Returns (D, inclusion D -> ring).
    """
    elements = list(elements)
    if ring is None:
        if not elements:
            raise AlgebraError("ring is required for an empty element list")
        ring = elements[0].ring
    names = list(names) if names is not None else [f"T{i}" for i in range(len(elements))]
    free = AffineRing(ring.field, names)
    f = RingMap(free, ring, elements, check=False)
    D = AffineRing(ring.field, names, list(f.kernel.gens))
    return D, RingMap(D, ring, elements, check=False)


def rename_ring(R: AffineRing, names):
    """Copy of R with new variable names, plus the two identification maps."""
    S = AffineRing(R.field, names, list(R.gb.elements))
    return S, RingMap(R, S, S.gens(), check=False), RingMap(S, R, R.gens(), check=False)


def _linear_solution(g: Polynomial, v: int):
    """If g = c*v + h with h free of v and c constant, return -h/c."""
    if g.degree(v) != 1:
        return None
    hits = [m for m in g.terms if m[v]]
    if len(hits) != 1 or sum(hits[0]) != 1:
        return None
    field = g.field
    c = g.terms[hits[0]]
    h = g - Polynomial.monomial(field, hits[0], c)
    return h.scale(field.neg(field.inv(c)))


def minimize_presentation(R: AffineRing):
    """Drop variables that are polynomial in the others.

    A variable v is removable when the ideal contains v - g with g free of v;
    this is detected by a basis under an order that puts v on top.
    Variables are tried from last to first.  Returns (S, iso R -> S, inverse).
    """
    field, n = R.field, R.nvars
    rels = list(R.gb.elements)
    values = {}  # eliminated variable -> polynomial in remaining variables
    active = list(range(n))
    for v in reversed(range(n)):
        if not rels:
            break
        sol = None
        for g in rels:
            sol = _linear_solution(g, v)
            if sol is not None:
                break
        if sol is None:
            if not any(g.degree(v) > 0 for g in rels):
                continue
            gb = buchberger(rels, MonomialOrder.eliminating(n, [v]), field=field, nvars=n)
            for g in gb.elements:
                lm = g.leading_term(MonomialOrder.eliminating(n, [v]))[0]
                if lm[v] == 1 and sum(lm) == 1:
                    sol = _linear_solution(g, v)
                    if sol is not None:
                        break
        if sol is None:
            continue
        images = [Polynomial.variable(field, n, i) for i in range(n)]
        images[v] = sol
        rels = [g.substitute(images, n) for g in rels]
        rels = [g for g in buchberger(rels, field=field, nvars=n).elements]
        for w in list(values):
            values[w] = values[w].substitute(images, n)
        values[v] = sol
        active.remove(v)
    if len(active) == n:
        S = R
        ident = RingMap(R, R, R.gens(), check=False)
        return S, ident, ident
    names = [R.vars[i] for i in active]
    keep = active
    S = AffineRing(field, names, [g.project(keep) for g in rels])
    images = []
    for i in range(n):
        if i in values:
            images.append(values[i].project(keep))
        else:
            images.append(Polynomial.variable(field, len(keep), keep.index(i)))
    iso = RingMap(R, S, images, check=False)
    inverse = RingMap(S, R, [R.var(i) for i in keep], check=False)
    return S, iso, inverse


@dataclass
class PullbackResult:
    ring: AffineRing
    to_A: RingMap
    to_B: RingMap


def pullback(phi: RingMap, psi: RingMap, base_A: RingMap, base_B: RingMap, names=None) -> PullbackResult:
    """The fiber product A x_C B for phi: A ->> C and psi: B -> C.

    ``base_A: R -> A`` and ``base_B: R -> B`` make A and B finite over R.
    The R-module kernel of A + B -> C, (a, b) -> phi(a) - psi(b), is computed
    from pushforward bases; its generators (with the images of R) generate the
    fiber product as an algebra.
    """
    A, B, C = phi.source, psi.source, phi.target
    if psi.target != C:
        raise AlgebraError("phi and psi must share a target")
    if base_A.target != A or base_B.target != B or base_A.source != base_B.source:
        raise AlgebraError("base maps do not match the pullback diagram")
    if not phi.is_surjective():
        raise NotSurjective("phi must be surjective")
    R = base_A.source
    PA = pushforward(base_A)
    PB = pushforward(base_B)
    base_C = compose(phi, base_A)
    elems = [phi(a) for a in PA.basis] + [-psi(b) for b in PB.basis]
    rels = linear_relations(base_C, elems)
    sA, sB = len(PA.basis), len(PB.basis)
    kernel_pairs = []
    for col in rels:
        a = A.zero()
        for r, x in zip(col[:sA], PA.basis):
            a = a + base_A(r) * x
        b = B.zero()
        for r, x in zip(col[sA:], PB.basis):
            b = b + base_B(r) * x
        kernel_pairs.append((a, b))
    kernel_pairs.sort(key=lambda ab: (len(ab[0].rep.terms) + len(ab[1].rep.terms), ab[0].rep.total_degree()))
    base_pairs = [(base_A(x), base_B(x)) for x in R.gens()]
    pairs = []
    seen = set()
    for a, b in kernel_pairs + base_pairs:
        if a.rep.is_constant() and b.rep.is_constant():
            continue
        key = (a.rep, b.rep)
        if key in seen:
            continue
        seen.add(key)
        pairs.append((a, b))
    names = list(names) if names is not None else [f"T{i}" for i in range(len(pairs))]
    if psi.is_injective():
        D, to_A = subalgebra_presentation([a for a, _ in pairs], A, names)
    else:
        prod = ring_product([A, B])
        elements = [prod.tuple_element([a, b]) for a, b in pairs]
        D, _ = subalgebra_presentation(elements, prod.product, names)
        to_A = RingMap(D, A, [a for a, _ in pairs])
    to_B = RingMap(D, B, [b for _, b in pairs])
    return PullbackResult(D, to_A, to_B)
