"""Seminormalization by recursion on the conductor.

For a reduced ring R with normalization phi: R -> N and conductor c, R^SN
is the fiber product of N -> N/sqrt(cN) and D -> N/sqrt(cN), where D is the
intersection of (R/sqrt(c))^SN with N/sqrt(cN) inside a common overring.
The recursive call on R/sqrt(c) drops the Krull dimension, so the recursion
ends at normal or zero-dimensional rings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field, replace

from .constructions import pullback, subalgebra_presentation
from .decomposition import DEFAULT_MAX_DEGREE, minimal_primes, radical
from .ideals import IdealHandle, intersect_all, krull_dimension
from .normalization import NormalizationResult, conductor, is_normal, normalize_reduced
from .polyring import AffineRing, AlgebraError, Polynomial
from .ringmaps import RingMap, compose, identity_map, linear_relations, pushforward

__all__ = [
    "RecursionContext",
    "SeminormalizationResult",
    "NameCollision",
    "InjectivityFailure",
    "InvariantViolation",
    "seminormalize",
    "is_seminormal",
    "find_overring",
    "intersect_seminormalization_and_extension",
    "rename_variables",
]

_SYMBOL = re.compile(r"^[A-Za-z][A-Za-z0-9]*$")


class NameCollision(AlgebraError):
    """The requested output symbol clashes with an existing variable."""


class InjectivityFailure(AlgebraError):
    """An inclusion into the overring has a nonzero kernel."""


class InvariantViolation(AlgebraError):
    """An internal consistency check failed."""


@dataclass(frozen=True)
class RecursionContext:
    counter: int = 0
    variable_symbol: str = "Yy"
    rng_seed: int = 0
    max_degree: int = DEFAULT_MAX_DEGREE

    def child(self) -> "RecursionContext":
        return replace(self, counter=self.counter + 2)

    def names(self, count, offset=0, stem="v"):
        return [f"{stem}{self.counter + offset}_{i}" for i in range(count)]


@dataclass
class SeminormalizationResult:
    sn_ring: AffineRing
    map_in: RingMap
    map_to_norm: RingMap
    normalization: NormalizationResult
    certified: bool = True
    notes: list = dc_field(default_factory=list)


def _quotient_ring(R: AffineRing, I: IdealHandle, names=None) -> tuple:
    Q = AffineRing(R.field, names or R.vars, list(I.gb.elements))
    return Q, RingMap(R, Q, Q.gens(), check=False)


def rename_variables(R: AffineRing, symbol: str, start_index: int = 0, forbidden=()):
    """Copy of R with variables symbol_i; returns (ring, R -> copy, copy -> R)."""
    if not _SYMBOL.match(symbol):
        raise NameCollision(f"invalid variable symbol {symbol!r}")
    names = [f"{symbol}_{start_index + i}" for i in range(R.nvars)]
    taken = set(forbidden)
    if symbol in taken or taken & set(names):
        raise NameCollision(f"symbol {symbol!r} overlaps an existing variable")
    S = AffineRing(R.field, names, list(R.gb.elements))
    return S, RingMap(R, S, S.gens(), check=False), RingMap(S, R, R.gens(), check=False)


# -- overring and intersection ---------------------------------------------------


def find_overring(A: AffineRing, to_S: RingMap, to_B: RingMap, ctx: RecursionContext | None = None):
    """A reduced ring O receiving both S and B over A.

    O is the reduced tensor product S (x)_A B cut down to one component over
    each minimal prime of B; among such choices, one whose components also
    lie over every minimal prime of S is preferred, so that S still embeds.
    """
    ctx = ctx or RecursionContext()
    S, B = to_S.target, to_B.target
    field = A.field
    ns, nb = S.nvars, B.nvars
    n = ns + nb
    names = ctx.names(ns, 1, "s") + ctx.names(nb, 1, "b")
    rels = [g.shift(n, 0) for g in S.gb.elements] + [g.shift(n, ns) for g in B.gb.elements]
    for fs, fb in zip(to_S.image_polys, to_B.image_polys):
        rels.append(fs.shift(n, 0) - fb.shift(n, ns))
    T = AffineRing(field, names, rels)
    zero = IdealHandle(T, [])
    mpT = minimal_primes(zero, seed=ctx.rng_seed, max_degree=ctx.max_degree, strict=True)
    mpB = minimal_primes(IdealHandle(B, []), seed=ctx.rng_seed, max_degree=ctx.max_degree, strict=True)
    mpS = minimal_primes(IdealHandle(S, []), seed=ctx.rng_seed, max_degree=ctx.max_degree, strict=True)

    def lies_over(P):
        """(index of the minimal prime of B, of S) under P, or None."""
        Q, q = _quotient_ring(T, P)
        kb = RingMap(B, Q, [q(T.var(ns + j)) for j in range(nb)], check=False).kernel
        ks = RingMap(S, Q, [q(T.var(i)) for i in range(ns)], check=False).kernel
        ib = next((k for k, Pb in enumerate(mpB) if kb == Pb), None)
        js = next((k for k, Ps in enumerate(mpS) if ks == Ps), None)
        return None if ib is None or js is None else (ib, js)

    over = [(P, lies_over(P)) for P in mpT]
    choices = [[(P, o[1]) for P, o in over if o and o[0] == k] for k in range(len(mpB))]
    if any(not c for c in choices):
        raise InjectivityFailure("some minimal prime of B has no component of the tensor product over it")
    kept = _covering_choice(choices, len(mpS))
    I = kept[0] if len(kept) == 1 else intersect_all(kept)
    O, _ = _quotient_ring(T, I)
    incl_S = RingMap(S, O, [O.var(i) for i in range(ns)])
    incl_B = RingMap(B, O, [O.var(ns + j) for j in range(nb)])
    if not incl_S.is_injective() or not incl_B.is_injective():
        raise InjectivityFailure("dropping components broke an inclusion into the overring")
    return O, incl_S, incl_B


def _covering_choice(choices, n_s):
    """One component per prime of B, preferring picks that cover every prime of S."""
    best = None

    def walk(k, picked, covered):
        nonlocal best
        if best is not None:
            return
        if k == len(choices):
            if len(covered) == n_s:
                best = list(picked)
            return
        for P, js in choices[k]:
            walk(k + 1, picked + [P], covered | {js})

    walk(0, [], frozenset())
    return best if best is not None else [c[0][0] for c in choices]


def intersect_seminormalization_and_extension(A: AffineRing, to_S: RingMap, to_B: RingMap, ctx: RecursionContext | None = None):
    """D = S ∩ B inside the overring, with D -> B and A -> D.

    Returns (D, psi: D -> B, from_A: A -> D).
    """
    ctx = ctx or RecursionContext()
    B = to_B.target
    names_stem = "d"
    if to_S.is_isomorphism():
        gens = [to_B(x) for x in A.gens()]
        D, psi = subalgebra_presentation(gens, B, ctx.names(len(gens), 1, names_stem))
        from_A = RingMap(A, D, D.gens())
        return D, psi, from_A
    O, incl_S, incl_B = find_overring(A, to_S, to_B, ctx)
    PS = pushforward(to_S)
    PB = pushforward(to_B)
    to_O = compose(incl_B, to_B)
    elems = [incl_S(s) for s in PS.basis] + [-incl_B(b) for b in PB.basis]
    rels = linear_relations(to_O, elems)
    k = len(PS.basis)
    gens = []
    seen = set()
    for col in rels:
        b = B.zero()
        for r, x in zip(col[k:], PB.basis):
            b = b + to_B(r) * x
        if b.rep.is_constant() or b.rep in seen:
            continue
        seen.add(b.rep)
        gens.append(b)
    base = [to_B(x) for x in A.gens()]
    for b in base:
        if not b.rep.is_constant() and b.rep not in seen:
            seen.add(b.rep)
            gens.append(b)
    D, psi = subalgebra_presentation(gens, B, ctx.names(len(gens), 1, names_stem))
    from_A = RingMap(A, D, [psi.lift(b) for b in base])
    return D, psi, from_A


# -- driver ------------------------------------------------------------------------


def _trivial(R: AffineRing) -> SeminormalizationResult:
    ident = identity_map(R)
    return SeminormalizationResult(R, ident, ident, NormalizationResult(R, ident, [R.one()]))


def _split_along_idempotents(to_N: RingMap, idempotents) -> list:
    """Generators of the image of to_N, split into e_i-components when possible.

    A generator g is replaced by its nonzero pieces e_i * g whenever every
    piece already lies in the subring; the subring is unchanged.
    """
    images = to_N.images
    if len(idempotents) <= 1:
        return images
    out, seen = [], set()

    def add(x):
        key = x.rep.monic() if x.rep else x.rep
        if not x.rep.is_constant() and key not in seen:
            seen.add(key)
            out.append(x)

    for g in images:
        pieces = [e * g for e in idempotents]
        pieces = [p for p in pieces if not p.is_zero()]
        if len(pieces) > 1 and all(to_N.lift(p) is not None for p in pieces):
            for p in pieces:
                add(p)
        else:
            add(g)
    return out


def _seminormalize(R: AffineRing, ctx: RecursionContext) -> SeminormalizationResult:
    dim = krull_dimension(R)
    if dim <= 0 or is_normal(R, assume_reduced=True, seed=ctx.rng_seed, max_degree=ctx.max_degree):
        return _trivial(R)
    norm = normalize_reduced(R, seed=ctx.rng_seed, max_degree=ctx.max_degree)
    phi = norm.map
    N = norm.normal_ring
    c = conductor(norm)
    rc = radical(c, seed=ctx.rng_seed, max_degree=ctx.max_degree)
    cN = IdealHandle(N, [phi.apply_poly(g) for g in c.gens])
    rcN = radical(cN, seed=ctx.rng_seed, max_degree=ctx.max_degree)
    A, to_A = _quotient_ring(R, rc)
    B, to_B_from_N = _quotient_ring(N, rcN)
    if krull_dimension(A) >= dim:
        raise InvariantViolation("recursion did not lower the Krull dimension")
    inner = _seminormalize(A, ctx.child())
    a_B = RingMap(A, B, [to_B_from_N(phi(x)) for x in R.gens()])
    D, psi, from_A = intersect_seminormalization_and_extension(A, inner.map_in, a_B, ctx)
    base_D = compose(from_A, to_A)
    pb = pullback(to_B_from_N, psi, phi, base_D, names=None)
    gens = _split_along_idempotents(pb.to_A, norm.idempotents)
    C, to_N = subalgebra_presentation(gens, N, ctx.names(len(gens)))
    map_in = RingMap(R, C, [to_N.lift(phi(x)) for x in R.gens()])
    certified = norm.certified and inner.certified
    return SeminormalizationResult(C, map_in, to_N, norm, certified)


def seminormalize(R: AffineRing, ctx: RecursionContext | None = None) -> SeminormalizationResult:
    """Seminormalization of a reduced ring; output variables are symbol_0, symbol_1, ..."""
    ctx = ctx or RecursionContext()
    if not _SYMBOL.match(ctx.variable_symbol):
        raise NameCollision(f"invalid variable symbol {ctx.variable_symbol!r}")
    taken = set(R.vars)
    sym = ctx.variable_symbol
    if sym in taken or any(re.fullmatch(re.escape(sym) + r"_\d+", v) for v in taken):
        raise NameCollision(f"symbol {sym!r} overlaps an existing variable")
    res = _seminormalize(R, ctx)
    out, fwd, back = rename_variables(res.sn_ring, sym)
    map_in = compose(fwd, res.map_in)
    map_to_norm = compose(res.map_to_norm, back)
    return SeminormalizationResult(out, map_in, map_to_norm, res.normalization, res.certified)


def is_seminormal(R: AffineRing, ctx: RecursionContext | None = None) -> bool:
    """True iff the seminormalization map R -> R^SN is an isomorphism.

    The output ring is never shown, so the final renaming (and its name
    collision check) is skipped.
    """
    res = _seminormalize(R, ctx or RecursionContext())
    return res.map_in.is_isomorphism()
