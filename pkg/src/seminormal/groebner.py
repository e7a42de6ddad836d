"""Buchberger's algorithm for ideals and submodules of free modules.

Internally a term (position, monomial) is packed into one Python int::

    key = (order digits) << LOW  |  pos << (16n + 16)  |  deg << 16n  |  exponents

with 16-bit exponent fields.  The order digits are a signed-digit number
built from the weight rows of the term order, so integer comparison of keys
is the term order and multiplying by a monomial is integer addition.
"""

from __future__ import annotations

import contextvars
import heapq
from dataclasses import dataclass, field as dc_field

from .polyring import AlgebraError, Field, MonomialOrder, Polynomial

__all__ = [
    "GroebnerBasis",
    "ModuleOrder",
    "ModuleGroebnerBasis",
    "ModulePresentation",
    "Limits",
    "ResourceLimitExceeded",
    "buchberger",
    "normal_form",
    "eliminate",
    "elimination_ideal",
    "module_groebner",
    "module_kernel",
    "spair_audit",
    "limits",
]

_W = 16
_FIELD = (1 << _W) - 1
_DIGIT = 1 << 24


class ResourceLimitExceeded(AlgebraError):
    """A Groebner computation exceeded the configured size or degree ceiling."""


@dataclass(frozen=True)
class Limits:
    max_elements: int = 10000
    max_degree: int = 64


_limits: contextvars.ContextVar[Limits] = contextvars.ContextVar("gb_limits", default=Limits())


class limits:
    """Context manager setting the Groebner resource ceiling."""

    def __init__(self, max_elements=10000, max_degree=64):
        self.value = Limits(max_elements, max_degree)

    def __enter__(self):
        self.token = _limits.set(self.value)
        return self.value

    def __exit__(self, *exc):
        _limits.reset(self.token)


def current_limits() -> Limits:
    return _limits.get()


class ModuleOrder:
    """Term order on a free module of rank ``rank`` over k[x_1..x_n].

    ``kind="pot"``: position over term, position 0 largest.
    ``kind="elim"``: position 0 above everything; among the other positions
    any term involving a variable of ``top`` beats every term free of them.
    """

    def __init__(self, nvars, rank, kind="pot", top=()):
        self.nvars = nvars
        self.rank = rank
        self.kind = kind
        self.top = tuple(top)
        if kind == "pot":
            mono = MonomialOrder.grevlex(nvars)
            self.rows = [lambda p: -p] + list(mono.rows)
        elif kind == "elim":
            top = list(self.top)
            rest = [i for i in range(nvars) if i not in set(top)]
            rows = [lambda p: 1 if p == 0 else 0]
            rows += _grevlex_rows(nvars, top)
            rows.append(lambda p: -p)
            rows += _grevlex_rows(nvars, rest)
            self.rows = rows
        else:
            raise ValueError(f"unknown module order {kind!r}")

    def __repr__(self):
        return f"ModuleOrder({self.kind}, n={self.nvars}, rank={self.rank})"


def _grevlex_rows(nvars, block):
    rows = []
    if not block:
        return rows
    rows.append(tuple(1 if i in set(block) else 0 for i in range(nvars)))
    for i in reversed(block[1:]):
        r = [0] * nvars
        r[i] = -1
        rows.append(tuple(r))
    return rows


class _Encoding:
    def __init__(self, nvars, rows):
        self.n = nvars
        self.pshift = _W * nvars
        self.posshift = self.pshift + _W
        self.low = self.posshift + _W
        self.pmask = (1 << self.pshift) - 1
        self.gmask = sum(1 << (_W * i + _W - 1) for i in range(nvars))
        R = len(rows)
        self.pos_rows = [(R - 1 - r, f) for r, f in enumerate(rows) if callable(f)]
        wrows = [(R - 1 - r, w) for r, w in enumerate(rows) if not callable(w)]
        var_keys = []
        for i in range(nvars):
            od = sum(w[i] * _DIGIT**s for s, w in wrows)
            var_keys.append((od << self.low) | (1 << (_W * i)) | (1 << self.pshift))
        self.var_keys = var_keys
        self._pos_cache = {}

    def pos_key(self, pos):
        k = self._pos_cache.get(pos)
        if k is None:
            od = sum(f(pos) * _DIGIT**s for s, f in self.pos_rows)
            k = (od << self.low) | (pos << self.posshift)
            self._pos_cache[pos] = k
        return k

    def key(self, exps, pos=0):
        k = self.pos_key(pos) if pos or self.pos_rows else 0
        vk = self.var_keys
        for i, e in enumerate(exps):
            if e:
                k += e * vk[i]
        return k

    def exps(self, k):
        P = k & self.pmask
        return tuple((P >> (_W * i)) & _FIELD for i in range(self.n))

    def deg(self, k):
        return (k >> self.pshift) & _FIELD

    def pos(self, k):
        return (k >> self.posshift) & _FIELD

    def lcm(self, ka, kb):
        ea, eb = self.exps(ka), self.exps(kb)
        k = ka
        vk = self.var_keys
        for i in range(self.n):
            d = eb[i] - ea[i]
            if d > 0:
                k += d * vk[i]
        return k

    def divides(self, ka, kb):
        """Does the term ``ka`` divide ``kb`` (same position)?"""
        if ((ka >> self.posshift) ^ (kb >> self.posshift)) & _FIELD:
            return False
        g = self.gmask
        return ((kb & self.pmask | g) - (ka & self.pmask)) & g == g

    # conversions
    def from_poly(self, f: Polynomial, pos=0):
        pk = self.pos_key(pos) if pos or self.pos_rows else 0
        vk = self.var_keys
        out = {}
        for m, c in f.terms.items():
            k = pk
            for i, e in enumerate(m):
                if e:
                    k += e * vk[i]
            out[k] = c
        return out

    def from_vector(self, vec):
        out = {}
        for pos, f in enumerate(vec):
            if f:
                out.update(self.from_poly(f, pos))
        return out

    def to_poly(self, d, field):
        return Polynomial(field, self.n, {self.exps(k): c for k, c in d.items()}, _clean=True)

    def to_vector(self, d, field, rank):
        parts = [dict() for _ in range(rank)]
        for k, c in d.items():
            parts[self.pos(k)][self.exps(k)] = c
        return [Polynomial(field, self.n, t, _clean=True) for t in parts]


def _encoding_for(order, nvars):
    if isinstance(order, MonomialOrder):
        return _Encoding(nvars, list(order.rows))
    return _Encoding(nvars, list(order.rows))


# ---------------------------------------------------------------------------
# core routines on packed dictionaries


def _reduce(f, groups, p, enc, module):
    """Full normal form of the dict ``f`` (consumed) w.r.t. monic reducers."""
    if not f:
        return {}
    heap = [-k for k in f]
    heapq.heapify(heap)
    pop, push = heapq.heappop, heapq.heappush
    res = {}
    pmask, gmask, posshift = enc.pmask, enc.gmask, enc.posshift
    default = groups.get(0, ())
    while heap:
        k = -pop(heap)
        c = f.pop(k, None)
        if c is None:
            continue
        grp = groups.get((k >> posshift) & _FIELD, ()) if module else default
        P = (k & pmask) | gmask
        for Pa, Ka, tail in grp:
            if (P - Pa) & gmask == gmask:
                mu = k - Ka
                if p:
                    for kt, ct in tail:
                        kk = kt + mu
                        v = f.get(kk)
                        if v is None:
                            f[kk] = (-c * ct) % p
                            push(heap, -kk)
                        else:
                            v = (v - c * ct) % p
                            if v:
                                f[kk] = v
                            else:
                                del f[kk]
                else:
                    for kt, ct in tail:
                        kk = kt + mu
                        v = f.get(kk)
                        if v is None:
                            f[kk] = -c * ct
                            push(heap, -kk)
                        else:
                            v = v - c * ct
                            if v:
                                f[kk] = v
                            else:
                                del f[kk]
                break
        else:
            res[k] = c
    return res


def _monic(d, p):
    lm = max(d)
    c = d[lm]
    if p:
        if c == 1:
            return d
        inv = pow(c, -1, p)
        return {k: v * inv % p for k, v in d.items()}
    if c == 1:
        return d
    return {k: v / c for k, v in d.items()}


def _record(d, enc):
    lm = max(d)
    tail = [(k, c) for k, c in d.items() if k != lm]
    return (lm & enc.pmask, lm, tail)


def _groups(records, enc, module):
    groups = {}
    for rec in records:
        pos = enc.pos(rec[1]) if module else 0
        groups.setdefault(pos, []).append(rec)
    return groups


def _sugar(d, enc):
    return max(enc.deg(k) for k in d)


def _groebner(polys, enc, p, module):
    lim = _limits.get()
    basis = []  # (dict, record, sugar)
    active = []
    pairs = []  # [sugar, lcm, i, j]
    divides = enc.divides

    def reducers():
        return _groups([basis[i][1] for i in active], enc, module)

    groups = reducers()

    def add(h, sugar):
        nonlocal groups, active, pairs
        h = _monic(h, p)
        rec = _record(h, enc)
        lm = rec[1]
        if enc.deg(lm) > lim.max_degree:
            raise ResourceLimitExceeded(f"Groebner basis degree exceeds {lim.max_degree}")
        idx = len(basis)
        basis.append((h, rec, sugar))
        if len(active) + 1 > lim.max_elements:
            raise ResourceLimitExceeded(f"Groebner basis exceeds {lim.max_elements} elements")
        hpos = enc.pos(lm)
        cand = []
        for g in active:
            lg = basis[g][1][1]
            if module and enc.pos(lg) != hpos:
                continue
            L = enc.lcm(lg, lm)
            coprime = (not module) and L == lg + lm
            cand.append((g, L, coprime))
        kept = []
        for t, (g, L, coprime) in enumerate(cand):
            if coprime:
                kept.append((g, L, True))
                continue
            redundant = False
            for g2, L2, _ in cand[t + 1 :]:
                if divides(L2, L):
                    redundant = True
                    break
            if not redundant:
                for g2, L2, _ in kept:
                    if divides(L2, L):
                        redundant = True
                        break
            if not redundant:
                kept.append((g, L, False))
        new_pairs = []
        for s, L, i, j in pairs:
            if divides(lm, L):
                li, lj = basis[i][1][1], basis[j][1][1]
                if enc.lcm(li, lm) != L and enc.lcm(lj, lm) != L:
                    continue
            new_pairs.append([s, L, i, j])
        dl = enc.deg(lm)
        for g, L, coprime in kept:
            if coprime:
                continue
            lg = basis[g][1][1]
            dL = enc.deg(L)
            s = max(basis[g][2] + dL - enc.deg(lg), sugar + dL - dl)
            new_pairs.append([s, L, g, idx])
        pairs = new_pairs
        active = [g for g in active if not divides(lm, basis[g][1][1])] + [idx]
        groups = reducers()

    for f in sorted(polys, key=lambda d: max(d)):
        s = _sugar(f, enc)
        h = _reduce(dict(f), groups, p, enc, module)
        if h:
            add(h, s)

    while pairs:
        best = min(range(len(pairs)), key=lambda t: (pairs[t][0], pairs[t][1]))
        s, L, i, j = pairs.pop(best)
        fi, fj = basis[i][0], basis[j][0]
        li, lj = basis[i][1][1], basis[j][1][1]
        mi, mj = L - li, L - lj
        spoly = {}
        for k, c in fi.items():
            spoly[k + mi] = c
        if p:
            for k, c in fj.items():
                kk = k + mj
                v = spoly.get(kk)
                if v is None:
                    spoly[kk] = (-c) % p
                else:
                    v = (v - c) % p
                    if v:
                        spoly[kk] = v
                    else:
                        del spoly[kk]
        else:
            for k, c in fj.items():
                kk = k + mj
                v = spoly.get(kk)
                if v is None:
                    spoly[kk] = -c
                else:
                    v = v - c
                    if v:
                        spoly[kk] = v
                    else:
                        del spoly[kk]
        h = _reduce(spoly, groups, p, enc, module)
        if h:
            add(h, s)

    # inter-reduce to the reduced basis
    elems = [basis[i][0] for i in active]
    out = []
    for t, g in enumerate(elems):
        others = [_record(e, enc) for u, e in enumerate(elems) if u != t]
        lm = max(g)
        tail = {k: c for k, c in g.items() if k != lm}
        red = _reduce(tail, _groups(others, enc, module), p, enc, module)
        red[lm] = g[lm]
        out.append(red)
    out.sort(key=max, reverse=True)
    return out


# ---------------------------------------------------------------------------
# public API


class GroebnerBasis:
    """Reduced Groebner basis of an ideal of k[x_1..x_n]."""

    def __init__(self, field: Field, nvars: int, order: MonomialOrder, packed):
        self.field = field
        self.nvars = nvars
        self.order = order
        self._enc = _encoding_for(order, nvars)
        self._packed = packed
        self._groups = _groups([_record(d, self._enc) for d in packed], self._enc, False)
        self.elements = tuple(self._enc.to_poly(d, field) for d in packed)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_unit(self):
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def leading_monomials(self):
        return [self._enc.exps(max(d)) for d in self._packed]

    def leading_terms(self):
        return [(self._enc.exps(max(d)), d[max(d)]) for d in self._packed]

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.nvars != self.nvars:
            raise AlgebraError("polynomial has the wrong number of variables")
        if not f.terms or not self._packed:
            return f
        d = self._enc.from_poly(f)
        return self._enc.to_poly(_reduce(d, self._groups, self.field.p, self._enc, False), self.field)

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.order == other.order
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.order, self.elements))

    def __repr__(self):
        return f"GroebnerBasis({len(self.elements)} elements, {self.order.kind})"


def buchberger(gens, order: MonomialOrder | None = None, *, field: Field | None = None, nvars=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens]
    if field is None or nvars is None:
        if not gens:
            raise ValueError("field and nvars are required for an empty generator list")
        field, nvars = gens[0].field, gens[0].nvars
    if order is None:
        order = MonomialOrder.grevlex(nvars)
    enc = _encoding_for(order, nvars)
    packed = [enc.from_poly(g) for g in gens if g]
    return GroebnerBasis(field, nvars, order, _groebner(packed, enc, field.p, False))


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.reduce(f)


def eliminate(polys, variables, *, field=None, nvars=None):
    """Generators of ``ideal(polys)`` intersected with the subring free of ``variables``."""
    polys = list(polys)
    if field is None:
        field, nvars = polys[0].field, polys[0].nvars
    variables = sorted(set(variables))
    if not variables:
        return list(buchberger(polys, field=field, nvars=nvars).elements)
    order = MonomialOrder.eliminating(nvars, variables)
    gb = buchberger(polys, order, field=field, nvars=nvars)
    vs = set(variables)
    return [g for g in gb.elements if not (g.support() & vs)]


def elimination_ideal(ideal, k: int):
    """Eliminate the first ``k`` ambient variables of an ideal handle's ring."""
    from .ideals import IdealHandle

    R = ideal.ring
    polys = ideal.ambient_generators()
    if k == 0:
        return ideal
    gens = eliminate(polys, range(k), field=R.field, nvars=R.nvars)
    return IdealHandle(R, gens)


def spair_audit(gb) -> bool:
    """Check that every S-pair of the basis reduces to zero.

    Works for ideal and module bases; module S-pairs only pair leading terms
    in the same position.
    """
    enc = gb._enc
    p = gb.field.p
    els = gb._packed
    module = isinstance(gb, ModuleGroebnerBasis)
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            li, lj = max(els[i]), max(els[j])
            if module and enc.pos(li) != enc.pos(lj):
                continue
            L = enc.lcm(li, lj)
            s = {}
            for k, c in els[i].items():
                s[k + L - li] = c
            for k, c in els[j].items():
                kk = k + L - lj
                v = s.get(kk, 0) - c
                if p:
                    v %= p
                if v:
                    s[kk] = v
                else:
                    s.pop(kk, None)
            if _reduce(s, gb._groups, p, enc, module):
                return False
    return True


# ---------------------------------------------------------------------------
# modules


class ModuleGroebnerBasis:
    """Reduced Groebner basis of a submodule of a free module."""

    def __init__(self, field, nvars, order: ModuleOrder, packed):
        self.field = field
        self.nvars = nvars
        self.order = order
        self.rank = order.rank
        self._enc = _Encoding(nvars, order.rows)
        self._packed = packed
        self._groups = _groups([_record(d, self._enc) for d in packed], self._enc, True)
        self.elements = [self._enc.to_vector(d, field, self.rank) for d in packed]

    def leading_positions(self):
        return [self._enc.pos(max(d)) for d in self._packed]

    def leading_monomials(self):
        return [self._enc.exps(max(d)) for d in self._packed]

    def reduce(self, vec):
        d = self._enc.from_vector(vec)
        return self._enc.to_vector(_reduce(d, self._groups, self.field.p, self._enc, True), self.field, self.rank)

    def contains(self, vec):
        return not any(self.reduce(vec))

    def __len__(self):
        return len(self.elements)


def module_groebner(vectors, order: ModuleOrder, *, field, nvars) -> ModuleGroebnerBasis:
    enc = _Encoding(nvars, order.rows)
    packed = []
    for v in vectors:
        if len(v) != order.rank:
            raise ValueError("vector rank does not match the module order")
        d = enc.from_vector(v)
        if d:
            packed.append(d)
    return ModuleGroebnerBasis(field, nvars, order, _groebner(packed, enc, field.p, True))


@dataclass
class ModulePresentation:
    """A module over ``ring`` with ``rank`` generators and the given relations.

    ``relations`` is a list of columns (each a list of ``rank`` ring elements).
    ``generators``, when set, embeds the generators in an ambient free module.
    """

    ring: object
    rank: int
    relations: list = dc_field(default_factory=list)
    generators: list | None = None

    def relation_matrix(self):
        """Rows x columns view of the relations."""
        return [[col[i] for col in self.relations] for i in range(self.rank)]


def _ring_matrix_columns(matrix):
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    return [[matrix[i][j] for i in range(rows)] for j in range(cols)]


def module_kernel(matrix, ring=None, *, with_relations=True) -> ModulePresentation:
    """Kernel of the map R^n -> R^m given by an m x n matrix of ring elements.

    Returns the kernel generators (as columns in R^n) and, optionally, the
    relations among them.
    """
    if ring is None:
        ring = matrix[0][0].ring
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    field, nv = ring.field, ring.nvars
    zero = Polynomial.zero(field, nv)

    def rep(x):
        return x.rep if hasattr(x, "rep") else x

    vectors = []
    for j in range(n):
        v = [rep(matrix[i][j]) for i in range(m)] + [zero] * n
        v[m + j] = Polynomial.constant(field, nv, 1)
        vectors.append(v)
    for g in ring.gb.elements:
        for i in range(m):
            v = [zero] * (m + n)
            v[i] = g
            vectors.append(v)
    order = ModuleOrder(nv, m + n, "pot")
    mgb = module_groebner(vectors, order, field=field, nvars=nv)
    gens = []
    seen = set()
    for vec, pos in zip(mgb.elements, mgb.leading_positions()):
        if pos < m:
            continue
        col = [ring.element(f) for f in vec[m:]]
        if all(c.is_zero() for c in col):
            continue
        key = tuple(c.rep for c in col)
        if key in seen:
            continue
        seen.add(key)
        gens.append(col)
    relations = []
    if with_relations and gens:
        gm = [[gens[j][i] for j in range(len(gens))] for i in range(n)]
        relations = module_kernel(gm, ring, with_relations=False).generators
    return ModulePresentation(ring, len(gens), relations, gens)
