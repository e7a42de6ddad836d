"""Minimal primes and radicals by recursive factor-splitting.

Every node of the search is an ideal of the ambient polynomial ring.  A node
is either split into finitely many larger ideals whose radicals intersect to
the radical of the node, or recognised as prime (possibly without proof, in
which case the component is flagged as uncertified).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .factor import DEFAULT_MAX_DEGREE, Factorization, UnsupportedDegree, factor
from .groebner import buchberger, eliminate
from .ideals import IdealHandle, independent_set, intersect_all
from .polyring import AlgebraError, MonomialOrder, Polynomial

__all__ = [
    "Factorization",
    "IncompleteDecomposition",
    "MinimalPrimeSet",
    "UnsupportedDegree",
    "factor",
    "minimal_primes",
    "radical",
    "is_prime",
]


class IncompleteDecomposition(AlgebraError):
    """A component could not be certified prime."""


@dataclass(frozen=True)
class MinimalPrimeSet:
    primes: tuple
    certified: tuple

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)

    def __getitem__(self, i):
        return self.primes[i]

    @property
    def all_certified(self) -> bool:
        return all(self.certified)


# outcomes of a single node
_PRIME = "prime"
_UNCERTIFIED = "uncertified"


class _Search:
    def __init__(self, field, nvars, seed, max_degree):
        self.field = field
        self.n = nvars
        self.seed = seed
        self.max_degree = max_degree
        self.rng = random.Random(seed)

    # -- helpers -------------------------------------------------------------

    def gb(self, gens):
        return buchberger(gens, field=self.field, nvars=self.n)

    def factor(self, f):
        try:
            return factor(f, self.seed, self.max_degree)
        except UnsupportedDegree:
            return None

    def coefficient_choices(self):
        p = self.field.p
        hi = 50 if not p else min(p - 1, 50)
        return [self.field(self.rng.randint(1, hi)) for _ in range(self.n)]

    # -- driver ----------------------------------------------------------------

    def run(self, gens):
        found = []  # (GroebnerBasis, certified)
        stack = [list(gens)]
        while stack:
            G = self.gb(stack.pop())
            if G.is_unit():
                continue
            if any(all(G.contains(q) for q in P.elements) for P, _ in found):
                continue
            outcome = self.step(G)
            if isinstance(outcome, list):
                stack.extend(reversed(outcome))
            elif isinstance(outcome, tuple):
                # sub-results already final (variable substitution)
                for P, cert in outcome:
                    found.append((P, cert))
            else:
                found.append((G, outcome == _PRIME))
        return _minimal(found)

    def step(self, G):
        els = list(G.elements)
        if not els:
            return _PRIME
        if all(g.total_degree() <= 1 for g in els):
            return _PRIME
        sub = self.substitute_linear(els)
        if sub is not None:
            return sub
        branches = self.factor_split(els)
        if branches is not None:
            return branches
        if len(els) == 1:
            return _PRIME if self.factor(els[0]) is not None else _UNCERTIFIED
        U = independent_set(G.leading_monomials(), self.n)
        if not U:
            return self.zero_dimensional(G)
        return self.positive_dimensional(G, U)

    def substitute_linear(self, els):
        """Eliminate a variable v from some generator c*v + r(other variables)."""
        for g in sorted(els, key=lambda h: (len(h.terms), h.total_degree())):
            for v in sorted(g.support()):
                if g.degree(v) != 1:
                    continue
                hits = [m for m in g.terms if m[v]]
                if len(hits) != 1 or sum(hits[0]) != 1:
                    continue
                c = g.terms[hits[0]]
                rest = g - Polynomial.monomial(self.field, hits[0], c)
                value = rest.scale(self.field.neg(self.field.inv(c)))
                images = [Polynomial.variable(self.field, self.n, i) for i in range(self.n)]
                images[v] = value
                reduced = [h.substitute(images, self.n) for h in els if h != g]
                inner = _Search(self.field, self.n, self.seed, self.max_degree).run(reduced)
                return tuple((self.gb(list(P.elements) + [g]), cert) for P, cert in inner)
        return None

    def factor_split(self, els):
        for g in sorted(els, key=lambda h: (h.total_degree(), len(h.terms))):
            fac = self.factor(g)
            if fac is None:
                continue
            if len(fac.factors) > 1 or fac.factors[0][1] > 1:
                return [els + [f] for f, _ in fac.factors]
        return None

    # -- zero-dimensional nodes -------------------------------------------------

    def linear_forms(self, variables):
        """Candidate elements for minimal-polynomial tests."""
        one = self.field.one
        X = [Polynomial.variable(self.field, self.n, i) for i in variables]
        yield from X
        for i in range(len(X)):
            for j in range(i + 1, len(X)):
                yield X[i] + X[j]
                yield X[i] - X[j]
        for _ in range(6):
            cs = self.coefficient_choices()
            u = Polynomial.zero(self.field, self.n)
            for c, x in zip(cs, X):
                u = u + x.scale(c)
            yield u
        del one

    def zero_dimensional(self, G):
        basis = _standard_monomials([m for m in G.leading_monomials()], self.n, range(self.n))
        index = {m: i for i, m in enumerate(basis)}
        delta = len(basis)
        for u in self.linear_forms(range(self.n)):
            mp = _minimal_polynomial(u, G, index, self.field)
            out = self.split_by_univariate(G, mp, u)
            if out is not None:
                return out
            if len(mp) - 1 == delta:
                return _PRIME
        return _UNCERTIFIED

    def split_by_univariate(self, G, coeffs, u):
        """Branch on the factors of a univariate annihilator of u, if it splits."""
        T = Polynomial(self.field, 1, {(e,): c for e, c in enumerate(coeffs) if c})
        fac = self.factor(T)
        if fac is None:
            return None
        if len(fac.factors) == 1 and fac.factors[0][1] == 1:
            return None
        els = list(G.elements)
        return [els + [f.substitute([u], self.n)] for f, _ in fac.factors]

    # -- positive-dimensional nodes ---------------------------------------------

    def positive_dimensional(self, G, U):
        n = self.n
        V = [i for i in range(n) if i not in set(U)]
        order = MonomialOrder.eliminating(n, V)
        B = buchberger(G.elements, order, field=self.field, nvars=n)
        h = Polynomial.constant(self.field, n, 1)
        seen = set()
        for g in B.elements:
            parts = g.coefficients_in(V)
            lead = max(parts, key=lambda m: (sum(m), tuple(-e for e in reversed(m))))
            lc = parts[lead].monic()
            if not lc.is_constant() and lc not in seen:
                seen.add(lc)
                h = h * lc
        if not h.is_constant():
            S = self.gb(_saturate(list(G.elements), h, self.field, n))
            if S.elements != G.elements:
                return [list(S.elements), list(G.elements) + [h]]
        vlms = []
        for m in B.leading_monomials():
            vlms.append(tuple(m[i] for i in V))
        delta = len(_standard_monomials(vlms, len(V), range(len(V))))
        if delta == 1:
            return _PRIME
        tried = 0
        for u in self.linear_forms(V):
            tried += 1
            if tried > len(V) + 4:
                break
            F = self.eliminant(G, u, V)
            if F is None:
                continue
            fac = self.factor(F)
            if fac is None:
                continue
            tfac = [(f, m) for f, m in fac.factors if f.degree(n)]
            if len(tfac) > 1 or (tfac and tfac[0][1] > 1):
                images = [Polynomial.variable(self.field, n, i) for i in range(n)] + [u]
                els = list(G.elements)
                return [els + [f.substitute(images, n)] for f, _ in tfac]
            if tfac and tfac[0][0].degree(n) == delta:
                return _PRIME
        return _UNCERTIFIED

    def eliminant(self, G, u, V):
        """Generator of (G + (T - u)) ∩ k[U, T] with T a new last variable."""
        n = self.n
        T = Polynomial.variable(self.field, n + 1, n)
        gens = [g.shift(n + 1, 0) for g in G.elements] + [T - u.shift(n + 1, 0)]
        res = [r for r in eliminate(gens, V, field=self.field, nvars=n + 1) if r.degree(n) > 0]
        if len(res) != 1:
            return None
        return res[0]


def _saturate(gens, h, field, n):
    t = Polynomial.variable(field, n + 1, 0)
    lifted = [g.shift(n + 1, 1) for g in gens] + [t * h.shift(n + 1, 1) - 1]
    return [r.project(list(range(1, n + 1))) for r in eliminate(lifted, [0], field=field, nvars=n + 1)]


def _standard_monomials(lms, n, variables):
    """Monomials in ``variables`` not divisible by any of ``lms`` (finite case)."""
    variables = list(variables)
    out = []
    frontier = [tuple([0] * n)]
    seen = {frontier[0]}
    while frontier:
        m = frontier.pop()
        if any(all(a >= b for a, b in zip(m, l)) for l in lms):
            continue
        out.append(m)
        for i in variables:
            mm = list(m)
            mm[i] += 1
            mm = tuple(mm)
            if mm not in seen:
                seen.add(mm)
                frontier.append(mm)
        if len(out) > 100000:
            raise AlgebraError("quotient is not finite-dimensional")
    out.sort(key=lambda m: (sum(m), tuple(-e for e in reversed(m))))
    return out


def _minimal_polynomial(u, G, index, field):
    """Coefficients (low to high, monic) of the minimal polynomial of u mod G."""
    p = field.p
    rows = []  # (pivot, vector dict, combination dict)
    power = G.reduce(Polynomial.constant(field, u.nvars, 1))
    k = 0
    while True:
        vec = {index[m]: c for m, c in power.terms.items()}
        comb = {k: field.one}
        for piv, rv, rc in rows:
            c = vec.get(piv)
            if c:
                for j, x in rv.items():
                    val = vec.get(j, field.zero) - c * x
                    if p:
                        val %= p
                    if val:
                        vec[j] = val
                    else:
                        vec.pop(j, None)
                for j, x in rc.items():
                    val = comb.get(j, field.zero) - c * x
                    if p:
                        val %= p
                    if val:
                        comb[j] = val
                    else:
                        comb.pop(j, None)
        if not vec:
            coeffs = [field.zero] * (k + 1)
            for j, c in comb.items():
                coeffs[j] = c
            lc = coeffs[-1]
            inv = field.inv(lc)
            return [c * inv % p if p else c * inv for c in coeffs]
        piv = min(vec)
        inv = field.inv(vec[piv])
        vec = {j: (x * inv % p if p else x * inv) for j, x in vec.items()}
        comb = {j: (x * inv % p if p else x * inv) for j, x in comb.items()}
        rows.append((piv, vec, comb))
        k += 1
        power = G.reduce(power * u)


def _minimal(found):
    unique = []
    for P, cert in found:
        if any(Q.elements == P.elements for Q, _ in unique):
            continue
        unique.append((P, cert))
    out = []
    for P, cert in unique:
        contains_other = any(
            Q is not P and all(P.contains(q) for q in Q.elements) for Q, _ in unique
        )
        if not contains_other:
            out.append((P, cert))
    return out


_CACHE: dict = {}


def minimal_primes(I: IdealHandle, *, seed: int = 0, max_degree: int = DEFAULT_MAX_DEGREE, strict: bool = False) -> MinimalPrimeSet:
    """Minimal primes of I, each with a certification flag (empty for the unit ideal).

    With ``strict`` an uncertified component raises IncompleteDecomposition.
    """
    R = I.ring
    if I.is_unit():
        return MinimalPrimeSet((), ())
    key = (R.field, R.nvars, I.gb.elements, seed, max_degree)
    found = _CACHE.get(key)
    if found is None:
        found = _Search(R.field, R.nvars, seed, max_degree).run(I.ambient_generators())
        found.sort(key=lambda t: [str(g) for g in t[0].elements])
        _CACHE[key] = found
    primes = tuple(IdealHandle(R, list(P.elements)) for P, _ in found)
    certified = tuple(c for _, c in found)
    for P in primes:
        if not all(P.contains(g) for g in I.gens):
            raise AssertionError("a computed component does not contain the ideal")
    if strict and not all(certified):
        raise IncompleteDecomposition("could not certify every component as prime")
    return MinimalPrimeSet(primes, certified)


def radical(I: IdealHandle, *, seed: int = 0, max_degree: int = DEFAULT_MAX_DEGREE) -> IdealHandle:
    """Radical of I as the intersection of its minimal primes."""
    if I.is_unit():
        return I
    mp = minimal_primes(I, seed=seed, max_degree=max_degree, strict=True)
    if len(mp) == 1:
        return mp[0]
    return intersect_all(mp.primes)


def is_prime(I: IdealHandle, **kw) -> bool:
    """True when I is a (certified) prime ideal."""
    if I.is_unit():
        return False
    mp = minimal_primes(I, **kw)
    return len(mp) == 1 and mp.all_certified and mp[0].gb.elements == I.gb.elements
