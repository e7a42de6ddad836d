"""Normalization of reduced affine rings and the conductor.

Domains are normalized by de Jong's iteration: with J the radical of a
Jacobian ideal and f a nonzero element of J, the ring Hom(J, J) is
(f*J : J) / f; while it is bigger than the current ring, adjoin the
fractions u/f as new variables and repeat.  A reduced ring is normalized
componentwise over its minimal primes and reassembled as a product.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .constructions import minimize_presentation, ring_product
from .decomposition import DEFAULT_MAX_DEGREE, minimal_primes, radical
from .groebner import ResourceLimitExceeded
from .ideals import IdealHandle, divide_exact, ideal, krull_dimension, quotient, saturate
from .polyring import AffineRing, AlgebraError, Polynomial, partial_derivative
from .ringmaps import RingMap, annihilator, compose, identity_map, pushforward

__all__ = [
    "NormalizationResult",
    "NotReduced",
    "NotADomain",
    "is_reduced",
    "is_normal",
    "normalize_domain",
    "normalize_reduced",
    "conductor",
    "jacobian_ideal",
]

MAX_MINORS = 24
MAX_ITERATIONS = 60


class NotReduced(AlgebraError):
    """The ring has nonzero nilpotents."""


class NotADomain(AlgebraError):
    """A ring expected to be a domain has zero divisors."""


@dataclass
class NormalizationResult:
    normal_ring: AffineRing
    map: RingMap
    idempotents: list
    denominators: list = dc_field(default_factory=list)
    certified: bool = True

    @property
    def source(self):
        return self.map.source


def _zero_ideal(R: AffineRing) -> IdealHandle:
    return IdealHandle(R, [])


def is_reduced(R: AffineRing, *, seed: int = 0, max_degree: int = DEFAULT_MAX_DEGREE) -> bool:
    if R.is_zero_ring():
        return True
    return radical(_zero_ideal(R), seed=seed, max_degree=max_degree).is_zero()


def _determinant(M):
    """Fraction-free (Bareiss) determinant of a square polynomial matrix."""
    n = len(M)
    if n == 0:
        return None
    A = [list(row) for row in M]
    field, nv = A[0][0].field, A[0][0].nvars
    sign = 1
    prev = Polynomial.constant(field, nv, 1)
    for k in range(n - 1):
        if not A[k][k]:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return Polynomial.zero(field, nv)
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = divide_exact(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev)
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return d if sign == 1 else -d


def jacobian_ideal(R: AffineRing, max_minors: int = MAX_MINORS) -> IdealHandle:
    """Ideal of c x c minors of the Jacobian, c the codimension.

    At most ``max_minors`` minors that are nonzero in R are used; any
    nonzero subset still cuts out a set containing the singular locus.
    """
    n = R.nvars
    d = krull_dimension(R)
    c = n - d
    if c == 0:
        return IdealHandle(R, [1])
    rels = list(R.gb.elements)
    jac = [[partial_derivative(g, j) for j in range(n)] for g in rels]
    minors = []
    for rows in combinations(range(len(rels)), c):
        for cols in combinations(range(n), c):
            det = _determinant([[jac[i][j] for j in cols] for i in rows])
            if det and not R.gb.contains(det):
                minors.append(det)
                if len(minors) >= max_minors:
                    return IdealHandle(R, minors)
    if not minors:
        raise AlgebraError("the Jacobian ideal vanishes on this ring (inseparable component)")
    return IdealHandle(R, minors)


def _test_ideal(R: AffineRing, seed: int, max_degree: int) -> IdealHandle:
    J0 = jacobian_ideal(R)
    if J0.is_unit():
        return J0
    return radical(J0, seed=seed, max_degree=max_degree)


def _hom_test(R: AffineRing, seed: int, max_degree: int = DEFAULT_MAX_DEGREE):
    """Return (J, f, U) with U = (f*J : J); the ring is normal iff U = (f)."""
    J = _test_ideal(R, seed, max_degree)
    if J.is_unit():
        return J, None, None
    f = J.gens[0]
    fJ = IdealHandle(R, [f * g for g in J.gens])
    U = quotient(fJ, J)
    return J, f, U


def _domain_is_normal(R: AffineRing, seed: int, max_degree: int) -> bool:
    J, f, U = _hom_test(R, seed, max_degree)
    if f is None:
        return True
    return U == IdealHandle(R, [f])


def is_normal(R: AffineRing, assume_reduced: bool = False, *, seed: int = 0, max_degree: int = DEFAULT_MAX_DEGREE) -> bool:
    """Grauert-Remmert test on each minimal prime component.

    Components must also be pairwise comaximal, otherwise the ring is not a
    product of domains and cannot be normal.  Each component is minimized
    first; redundant variables inflate the Jacobian minors badly.
    """
    if R.is_zero_ring():
        return True
    if not assume_reduced and not is_reduced(R, seed=seed, max_degree=max_degree):
        raise NotReduced("ring is not reduced")
    mp = minimal_primes(_zero_ideal(R), seed=seed, max_degree=max_degree, strict=True)
    primes = list(mp.primes)
    for i in range(len(primes)):
        for j in range(i + 1, len(primes)):
            if not (primes[i] + primes[j]).is_unit():
                return False
    for P in primes:
        comp, _, _ = minimize_presentation(P.quotient_ring())
        if not _domain_is_normal(comp, seed, max_degree):
            return False
    return True


def _fresh_names(taken, count, stem="t"):
    out = []
    k = 0
    taken = set(taken)
    while len(out) < count:
        name = f"{stem}{k}"
        if name not in taken:
            out.append(name)
            taken.add(name)
        k += 1
    return out


def normalize_domain(R: AffineRing, *, assume_domain: bool = False, seed: int = 0, max_degree: int = DEFAULT_MAX_DEGREE) -> NormalizationResult:
    """Normalization of a domain by de Jong's endomorphism-ring iteration."""
    if R.is_zero_ring():
        raise NotADomain("the zero ring is not a domain")
    if not assume_domain:
        mp = minimal_primes(_zero_ideal(R), seed=seed, max_degree=max_degree, strict=True)
        if len(mp) != 1 or not mp[0].is_zero():
            raise NotADomain("ring has zero divisors")
    current, iso, _ = minimize_presentation(R)
    total = iso
    denominators = []
    for _ in range(MAX_ITERATIONS):
        J, f, U = _hom_test(current, seed, max_degree)
        if f is None:
            break
        principal = IdealHandle(current, [f])
        new = [u for u in U.gens if not principal.contains(u)]
        if not new:
            break
        denominators.append(current.element(f))
        n = current.nvars
        names = list(current.vars) + _fresh_names(current.vars, len(new))
        m = len(names)
        field = current.field
        gens = [g.shift(m, 0) for g in current.gb.elements]
        fs = f.shift(m, 0)
        for i, u in enumerate(new):
            gens.append(fs * Polynomial.variable(field, m, n + i) - u.shift(m, 0))
        bigger = AffineRing(field, names)
        sat = saturate(IdealHandle(bigger, gens), fs)
        nxt = AffineRing(field, names, list(sat.gens))
        step = RingMap(current, nxt, nxt.gens()[:n])
        nxt_min, iso, _ = minimize_presentation(nxt)
        total = compose(iso, compose(step, total))
        current = nxt_min
    else:
        raise ResourceLimitExceeded("normalization did not stabilize")
    return NormalizationResult(current, total, [current.one()], denominators)


def normalize_reduced(R: AffineRing, *, assume_reduced: bool = True, seed: int = 0, max_degree: int = DEFAULT_MAX_DEGREE, strategy=None) -> NormalizationResult:
    """Normalize each minimal-prime component and take the product.

    ``strategy`` is reserved; only the default iteration is implemented.
    """
    if strategy not in (None, "dejong"):
        raise ValueError(f"unknown normalization strategy {strategy!r}")
    if not assume_reduced and not is_reduced(R, seed=seed, max_degree=max_degree):
        raise NotReduced("ring is not reduced")
    mp = minimal_primes(_zero_ideal(R), seed=seed, max_degree=max_degree, strict=True)
    if len(mp) == 1 and mp[0].is_zero():
        res = normalize_domain(R, assume_domain=True, seed=seed, max_degree=max_degree)
        res.certified = mp.all_certified
        return res
    comps = []
    for P in mp.primes:
        Ri = AffineRing(R.field, R.vars, list(P.gb.elements))
        quo = RingMap(R, Ri, Ri.gens(), check=False)
        ni = normalize_domain(Ri, assume_domain=True, seed=seed, max_degree=max_degree)
        comps.append((compose(ni.map, quo), ni))
    prod = ring_product([ni.normal_ring for _, ni in comps])
    images = []
    for x in R.gens():
        images.append(prod.tuple_element([mp_i(x) for mp_i, _ in comps]))
    nmap = RingMap(R, prod.product, images)
    denominators = [d for _, ni in comps for d in ni.denominators]
    return NormalizationResult(prod.product, nmap, list(prod.idempotents), denominators, mp.all_certified)


def conductor(n: NormalizationResult) -> IdealHandle:
    """Ann_R(R^N / R) through the pushforward of the normalization map."""
    data = pushforward(n.map)
    return annihilator(data.cokernel_presentation())
