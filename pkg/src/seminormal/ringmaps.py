"""Homomorphisms of affine rings.

Almost everything goes through the graph ideal of a map f: A -> B, living in
k[Y, X] with the target variables Y first and the source variables X after:

    (relations of B in Y) + (x_i - f(x_i)(Y))

Eliminating Y gives the kernel; a block order with Y on top exposes
finiteness (pure powers of each y), surjectivity (y - g(X) in the basis)
and the pushforward module structure (normal forms grouped by Y-part).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .groebner import ModuleOrder, ModulePresentation, buchberger, module_groebner, module_kernel
from .ideals import IdealHandle, intersect_all
from .polyring import AffineRing, AlgebraError, MonomialOrder, Polynomial, RingElement

__all__ = [
    "RingMap",
    "FiniteMapData",
    "ModulePresentation",
    "NotFinite",
    "NotSurjective",
    "compose",
    "identity_map",
    "kernel",
    "preimage",
    "is_finite",
    "is_surjective",
    "pushforward",
    "linear_relations",
    "annihilator",
]


class NotFinite(AlgebraError):
    """The target is not a finitely generated module over the source."""


class NotSurjective(AlgebraError):
    """An element of the target has no preimage."""


def _as_target_poly(target: AffineRing, x) -> Polynomial:
    if isinstance(x, RingElement):
        if x.ring != target:
            raise AlgebraError("image lies in a different ring")
        return x.rep
    if isinstance(x, str):
        return target.reduce(target.poly(x))
    if isinstance(x, Polynomial):
        if x.nvars != target.nvars or x.field != target.field:
            raise AlgebraError("image polynomial has the wrong shape")
        return target.reduce(x)
    return target.reduce(Polynomial.constant(target.field, target.nvars, x))


class RingMap:
    """A k-algebra homomorphism source -> target given on the source variables."""

    def __init__(self, source: AffineRing, target: AffineRing, images, *, check=True):
        if source.field != target.field:
            raise AlgebraError("maps between rings over different fields are not supported")
        images = list(images)
        if len(images) != source.nvars:
            raise AlgebraError(f"expected {source.nvars} images, got {len(images)}")
        self.source = source
        self.target = target
        self.image_polys = tuple(_as_target_poly(target, x) for x in images)
        if check:
            for rel in source.gb.elements:
                if self.apply_poly(rel):
                    raise AlgebraError(f"map is not well defined: {rel.to_str(source.vars)} does not map to 0")

    @property
    def images(self):
        return [RingElement(self.target, f, _normal=True) for f in self.image_polys]

    def apply_poly(self, f: Polynomial) -> Polynomial:
        """Image of a source-ambient polynomial, as a target normal form."""
        if not self.image_polys:
            return self.target.reduce(Polynomial.constant(self.target.field, self.target.nvars, f.constant_coeff()))
        return self.target.reduce(f.substitute(list(self.image_polys), self.target.nvars))

    def __call__(self, x) -> RingElement:
        if isinstance(x, RingElement):
            if x.ring != self.source:
                raise AlgebraError("element does not belong to the source")
            x = x.rep
        elif isinstance(x, str):
            x = self.source.poly(x)
        elif not isinstance(x, Polynomial):
            x = Polynomial.constant(self.source.field, self.source.nvars, x)
        return RingElement(self.target, self.apply_poly(x), _normal=True)

    def __eq__(self, other):
        return (
            isinstance(other, RingMap)
            and self.source == other.source
            and self.target == other.target
            and self.image_polys == other.image_polys
        )

    def __hash__(self):
        return hash((self.source, self.target, self.image_polys))

    def __repr__(self):
        pairs = ", ".join(f"{v} -> {f.to_str(self.target.vars)}" for v, f in zip(self.source.vars, self.image_polys))
        return f"RingMap({pairs})"

    def to_strings(self):
        return [f.to_str(self.target.vars) for f in self.image_polys]

    # -- graph ideal -----------------------------------------------------------

    @property
    def _ny(self):
        return self.target.nvars

    @property
    def _nx(self):
        return self.source.nvars

    def _graph_gens(self, extra=()):
        ny, nx = self._ny, self._nx
        n = ny + nx
        gens = [g.shift(n, 0) for g in self.target.gb.elements]
        gens += [g.shift(n, 0) for g in extra]
        for i, f in enumerate(self.image_polys):
            gens.append(Polynomial.variable(self.target.field, n, ny + i) - f.shift(n, 0))
        return gens

    @cached_property
    def graph_gb(self):
        """Graph ideal basis under the block order with Y on top."""
        n = self._ny + self._nx
        order = MonomialOrder.block(n, self._ny)
        return buchberger(self._graph_gens(), order, field=self.target.field, nvars=n)

    def _x_part(self, g: Polynomial) -> Polynomial:
        return g.project(list(range(self._ny, self._ny + self._nx)))

    def _is_x_only(self, g: Polynomial) -> bool:
        return all(not any(m[: self._ny]) for m in g.terms)

    # -- structure ---------------------------------------------------------------

    @cached_property
    def kernel(self) -> IdealHandle:
        gens = [self._x_part(g) for g in self.graph_gb.elements if self._is_x_only(g)]
        return IdealHandle(self.source, gens)

    def preimage(self, J: IdealHandle) -> IdealHandle:
        if J.ring != self.target:
            raise AlgebraError("ideal does not live in the target")
        n = self._ny + self._nx
        order = MonomialOrder.block(n, self._ny)
        gb = buchberger(self._graph_gens(J.gens), order, field=self.target.field, nvars=n)
        return IdealHandle(self.source, [self._x_part(g) for g in gb.elements if self._is_x_only(g)])

    def is_injective(self) -> bool:
        return self.kernel.is_zero()

    def is_finite(self) -> bool:
        if self.graph_gb.is_unit():
            return True
        ny = self._ny
        pure = [m for m in self.graph_gb.leading_monomials() if not any(m[ny:])]
        for i in range(ny):
            if not any(m[i] and sum(m[:ny]) == m[i] for m in pure):
                return False
        return True

    def lift(self, y) -> RingElement | None:
        """A preimage of a target element, or None when there is none."""
        f = _as_target_poly(self.target, y)
        n = self._ny + self._nx
        r = self.graph_gb.reduce(f.shift(n, 0))
        if not self._is_x_only(r):
            return None
        return self.source.element(self._x_part(r))

    def is_surjective(self) -> bool:
        return all(self.lift(v) is not None for v in self.target.gens())

    def is_isomorphism(self) -> bool:
        return self.is_surjective() and self.is_injective()

    def inverse(self) -> "RingMap":
        if not self.is_isomorphism():
            raise AlgebraError("map is not an isomorphism")
        return RingMap(self.target, self.source, [self.lift(v) for v in self.target.gens()])


def identity_map(R: AffineRing) -> RingMap:
    return RingMap(R, R, R.gens(), check=False)


def compose(g: RingMap, f: RingMap) -> RingMap:
    """g after f."""
    if f.target != g.source:
        raise AlgebraError("cannot compose: target of the first map is not the source of the second")
    return RingMap(f.source, g.target, [g.apply_poly(x) for x in f.image_polys], check=False)


def kernel(f: RingMap) -> IdealHandle:
    return f.kernel


def preimage(f: RingMap, J: IdealHandle) -> IdealHandle:
    return f.preimage(J)


def is_finite(f: RingMap) -> bool:
    return f.is_finite()


def is_surjective(f: RingMap) -> bool:
    return f.is_surjective()


@dataclass
class FiniteMapData:
    """The target of a finite map as a module over the source.

    ``basis`` generates the target over the source; ``write`` returns source
    coefficients c with sum f(c_i) * basis_i equal to the given element.
    """

    map: RingMap
    basis: list
    monomials: list

    def write(self, y) -> list:
        f = self.map
        ny, nx = f._ny, f._nx
        n = ny + nx
        r = f.graph_gb.reduce(_as_target_poly(f.target, y).shift(n, 0))
        index = {m: i for i, m in enumerate(self.monomials)}
        parts = r.coefficients_in(range(ny))
        coords = [Polynomial.zero(f.source.field, nx) for _ in self.monomials]
        for ym, c in parts.items():
            coords[index[ym]] = f._x_part(c)
        return [f.source.element(c) for c in coords]

    writer = write

    def recombine(self, coords) -> RingElement:
        total = self.map.target.zero()
        for c, b in zip(coords, self.basis):
            total = total + self.map(c) * b
        return total

    @cached_property
    def relations(self) -> list:
        """Source-linear relations among the basis elements."""
        return linear_relations(self.map, self.basis)

    def presentation(self) -> ModulePresentation:
        return ModulePresentation(self.map.source, len(self.basis), self.relations)

    def cokernel_presentation(self) -> ModulePresentation:
        """Presentation of target / f(source) as a source-module."""
        src = self.map.source
        unit = [src.zero() for _ in self.basis]
        one_index = self.monomials.index(tuple([0] * self.map._ny)) if self.basis else None
        rels = list(self.relations)
        if one_index is not None:
            unit[one_index] = src.one()
            rels.append(unit)
        return ModulePresentation(src, len(self.basis), rels)


def pushforward(f: RingMap) -> FiniteMapData:
    if not f.is_finite():
        raise NotFinite("target is not finite over the source")
    ny = f._ny
    if f.graph_gb.is_unit():
        return FiniteMapData(f, [], [])
    pure = [m[:ny] for m in f.graph_gb.leading_monomials() if not any(m[ny:])]
    from .decomposition import _standard_monomials

    monos = _standard_monomials(pure, ny, range(ny))
    T = f.target
    basis = [RingElement(T, T.reduce(Polynomial.monomial(T.field, m)), _normal=True) for m in monos]
    return FiniteMapData(f, basis, monos)


def linear_relations(f: RingMap, elements) -> list:
    """Generators of {(a_1..a_r) in A^r : sum f(a_i) * e_i = 0} for target elements e_i."""
    elements = [_as_target_poly(f.target, e) for e in elements]
    r = len(elements)
    if r == 0:
        return []
    ny, nx = f._ny, f._nx
    n = ny + nx
    field = f.target.field
    zero = Polynomial.zero(field, n)
    one = Polynomial.constant(field, n, 1)
    vectors = []
    for i, e in enumerate(elements):
        v = [zero] * (r + 1)
        v[0] = e.shift(n, 0)
        v[i + 1] = one
        vectors.append(v)
    for g in f.graph_gb.elements:
        vectors.append([g] + [zero] * r)
    order = ModuleOrder(n, r + 1, "elim", top=range(ny))
    mgb = module_groebner(vectors, order, field=field, nvars=n)
    out = []
    for vec, pos in zip(mgb.elements, mgb.leading_positions()):
        if pos == 0:
            continue
        if vec[0] or not all(f._is_x_only(c) for c in vec[1:]):
            continue
        col = [f.source.element(f._x_part(c)) for c in vec[1:]]
        if any(not c.is_zero() for c in col):
            out.append(col)
    return out


def annihilator(M: ModulePresentation) -> IdealHandle:
    """Ann(M) as the intersection of the annihilators of the generators."""
    R = M.ring
    if M.rank == 0:
        return IdealHandle(R, [1])
    anns = []
    for i in range(M.rank):
        unit = [R.one() if j == i else R.zero() for j in range(M.rank)]
        cols = [unit] + [[R.element(x) for x in col] for col in M.relations]
        matrix = [[cols[j][k] for j in range(len(cols))] for k in range(M.rank)]
        K = module_kernel(matrix, R, with_relations=False)
        anns.append(IdealHandle(R, [col[0] for col in K.generators]))
    return intersect_all(anns)
