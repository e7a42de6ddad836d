"""Polynomial factorization over QQ and GF(p).

Univariate: square-free decomposition, then Cantor-Zassenhaus over GF(p) or
Zassenhaus (factor mod a good prime, Hensel lift, recombine) over ZZ.
Multivariate: monomial content, then Kronecker substitution to one variable
and recombination of the univariate factors by trial division.

Univariate polynomials are dense coefficient lists, lowest degree first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd, isqrt

from gmpy2 import mpq

from .polyring import AlgebraError, Field, Polynomial

__all__ = [
    "Factorization",
    "UnsupportedDegree",
    "factor",
    "factor_univariate_gf",
    "factor_univariate_zz",
    "is_irreducible",
    "DEFAULT_MAX_DEGREE",
]

DEFAULT_MAX_DEGREE = 12
_MAX_KRONECKER_DEGREE = 4096
_MAX_RECOMBINATIONS = 20000


class UnsupportedDegree(AlgebraError):
    """The polynomial is outside the supported factorization envelope."""


@dataclass(frozen=True)
class Factorization:
    unit: object
    factors: tuple  # ((Polynomial, multiplicity), ...)

    def expand(self, field, nvars):
        out = Polynomial.constant(field, nvars, 1).scale(self.unit)
        for f, m in self.factors:
            out = out * f**m
        return out

    def __len__(self):
        return len(self.factors)


# ---------------------------------------------------------------------------
# dense univariate arithmetic over GF(p)


def _strip(a):
    while a and not a[-1]:
        a.pop()
    return a


def _gf_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _strip(out)


def _gf_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _strip(out)


def _gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip([c % p for c in out])


def _gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(a) - 1 < db:
        return [], _strip(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            c = c * inv % p
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    r = [x % p for x in a[:db]]
    return _strip(q), _strip(r)


def _gf_rem(a, b, p):
    return _gf_divmod(a, b, p)[1]


def _gf_monic(a, p):
    if not a or a[-1] == 1:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _gf_rem(a, b, p)
    return _gf_monic(a, p)


def _gf_gcdex(a, b, p):
    """(g, s, t) with s*a + t*b = g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return [c * inv % p for c in r0], [c * inv % p for c in s0], [c * inv % p for c in t0]


def _gf_powmod(a, e, f, p):
    result = [1]
    base = _gf_rem(a, f, p)
    while e:
        if e & 1:
            result = _gf_rem(_gf_mul(result, base, p), f, p)
        e >>= 1
        if e:
            base = _gf_rem(_gf_mul(base, base, p), f, p)
    return result


def _gf_deriv(a, p):
    return _strip([(i * c) % p for i, c in enumerate(a)][1:])


def _gf_pth_root(a, p):
    return _strip([a[i] for i in range(0, len(a), p)])


def _gf_sqf(f, p):
    """Square-free decomposition of monic f: [(g, multiplicity)]."""
    out = []
    df = _gf_deriv(f, p)
    if not df:
        for g, m in _gf_sqf(_gf_pth_root(f, p), p):
            out.append((g, m * p))
        return out
    c = _gf_gcd(f, df, p)
    w = _gf_divmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = _gf_gcd(w, c, p)
        z = _gf_divmod(w, y, p)[0]
        if len(z) > 1:
            out.append((_gf_monic(z, p), i))
        i += 1
        w = y
        c = _gf_divmod(c, y, p)[0]
    if len(c) > 1:
        for g, m in _gf_sqf(_gf_pth_root(c, p), p):
            out.append((g, m * p))
    return out


def _gf_ddf(f, p):
    out = []
    h = [0, 1]
    x = [0, 1]
    i = 1
    while 2 * i <= len(f) - 1:
        h = _gf_powmod(h, p, f, p)
        g = _gf_gcd(f, _gf_sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, i))
            f = _gf_divmod(f, g, p)[0]
            h = _gf_rem(h, f, p)
        i += 1
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _gf_edf(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _strip([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            t = list(a)
            b = list(a)
            for _ in range(d - 1):
                b = _gf_rem(_gf_mul(b, b, p), f, p)
                t = _gf_add(t, b, p)
        else:
            t = _gf_sub(_gf_powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = _gf_gcd(f, t, p)
        if 1 < len(g) < len(f):
            h = _gf_divmod(f, g, p)[0]
            return _gf_edf(g, d, p, rng) + _gf_edf(_gf_monic(h, p), d, p, rng)


def factor_univariate_gf(f, p, seed=0):
    """Factor a dense univariate polynomial over GF(p): (lc, [(monic g, m)])."""
    f = _strip([c % p for c in f])
    if not f:
        raise ValueError("cannot factor zero")
    lc = f[-1]
    f = _gf_monic(f, p)
    rng = random.Random(seed)
    out = []
    for g, m in _gf_sqf(f, p):
        for h, d in _gf_ddf(g, p):
            for e in _gf_edf(h, d, p, rng):
                out.append((e, m))
    out.sort(key=lambda t: (len(t[0]), t[0], t[1]))
    return lc, out


# ---------------------------------------------------------------------------
# univariate over ZZ


def _zz_content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def _zz_primitive(a):
    g = _zz_content(a)
    if g == 0:
        return a
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _q_to_zz(coeffs):
    """Scale a rational coefficient list to a primitive integer list."""
    den = 1
    for c in coeffs:
        d = int(c.denominator)
        den = den * d // gcd(den, d)
    ints = [int(c * den) for c in coeffs]
    return _zz_primitive(ints)


def _zz_deriv(a):
    return _strip([i * c for i, c in enumerate(a)][1:])


def _zz_gcd(a, b):
    """Primitive gcd in ZZ[x] by modular images and CRT, checked by division."""
    if not a:
        return _zz_primitive(b)
    if not b:
        return _zz_primitive(a)
    a, b = _zz_primitive(a), _zz_primitive(b)
    if len(a) == 1 or len(b) == 1:
        return [1]
    lcg = gcd(a[-1], b[-1])
    best = None
    modulus = 1
    acc = None
    for p in _small_primes():
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        g = _gf_gcd(_mod_poly(a, p), _mod_poly(b, p), p)
        if len(g) == 1:
            return [1]
        g = [c * lcg % p for c in g]
        if best is None or len(g) < best:
            best, modulus, acc = len(g), p, g
        elif len(g) > best:
            continue
        else:
            acc = [_crt(x, modulus, y, p) for x, y in zip(acc, g)]
            modulus *= p
        cand = _zz_primitive(_symmetric(acc, modulus))
        if _zz_divides(a, cand) is not None and _zz_divides(b, cand) is not None:
            return cand


def _crt(x, m, y, p):
    t = (y - x) * pow(m, -1, p) % p
    return x + m * t


def _zz_sqf(f):
    """Yun's square-free decomposition of a primitive f in ZZ[x]."""
    df = _zz_deriv(f)
    a = _zz_gcd(f, df)
    b = _zz_divides(f, a)
    c = _zz_divides(df, a)
    d = _strip(_sub_int(c, _zz_deriv(b)))
    out = []
    i = 1
    while len(b) > 1:
        a = _zz_gcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = _zz_divides(b, a)
        c = _zz_divides(d, a) if d else []
        d = _strip(_sub_int(c, _zz_deriv(b)))
        i += 1
    return out


def _symmetric(a, m):
    h = m // 2
    return [(c % m) - m if (c % m) > h else c % m for c in a]


def _zz_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _zz_divides(a, b):
    """Return a / b over ZZ if exact, else None."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return None
    q = [0] * (len(a) - db)
    lb = b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            if c % lb:
                return None
            c //= lb
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    if any(a[:db]):
        return None
    return q


def _mod_poly(a, m):
    return _strip([c % m for c in a])


def _hensel_step(f, g, h, s, t, p, k):
    """Lift f ≡ g*h (mod p), g monic, to modulus p^k."""
    m = p
    for _ in range(1, k):
        e = [c // m for c in _sub_int(f, _zz_mul(g, h))]
        e = _mod_poly(e, p)
        q, sigma = _gf_divmod(_gf_mul(e, t, p), g, p)
        tau = _gf_add(_gf_mul(e, s, p), _gf_mul(q, h, p), p)
        g = _add_int(g, [c * m for c in sigma])
        h = _add_int(h, [c * m for c in tau])
        m *= p
        g = _mod_poly(g, m)
        h = _mod_poly(h, m)
    return g, h


def _sub_int(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _add_int(a, b):
    n = max(len(a), len(b))
    return _strip([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _multi_hensel(f, factors, p, k):
    """Lift monic modular factors of f (lc(f) arbitrary) to modulus p^k."""
    if len(factors) == 1:
        m = p**k
        inv = pow(f[-1], -1, m)
        return [_mod_poly([c * inv for c in f], m)]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = [1]
    for u in left:
        g = _gf_mul(g, u, p)
    h = [f[-1] % p]
    for u in right:
        h = _gf_mul(h, u, p)
    _, s, t = _gf_gcdex(g, h, p)
    g, h = _hensel_step(f, g, h, s, t, p, k)
    return _multi_hensel(g, left, p, k) + _multi_hensel(h, right, p, k)


def _small_primes():
    n = 3
    while True:
        if all(n % q for q in range(3, isqrt(n) + 1, 2)):
            yield n
        n += 2


def _subset_degrees(degs):
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return sums


def _zz_factor_sqf(f, seed, tries=5):
    """Irreducible factors of a square-free primitive f over ZZ (lc > 0)."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    lc = f[-1]
    allowed = None
    chosen = None
    found = 0
    for p in _small_primes():
        if lc % p == 0:
            continue
        fp = _gf_monic(_mod_poly(f, p), p)
        if len(_gf_gcd(fp, _gf_deriv(fp, p), p)) > 1:
            continue
        _, modfacs = factor_univariate_gf(fp, p, seed)
        facs = [g for g, _ in modfacs]
        sums = _subset_degrees(len(g) - 1 for g in facs)
        allowed = sums if allowed is None else allowed & sums
        if chosen is None or len(facs) < len(chosen[1]):
            chosen = (p, facs)
        found += 1
        if allowed <= {0, n} or found >= tries:
            break
    if allowed <= {0, n}:
        return [f]
    p, facs = chosen
    norm = isqrt(sum(c * c for c in f)) + 1
    bound = 2 * abs(lc) * (2**n) * norm
    k = 1
    while p**k <= bound:
        k += 1
    lifted = _multi_hensel(f, facs, p, k)
    m = p**k
    result = []
    idx = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(idx):
        found = False
        lc = f[-1]
        f0 = lc * f[0]
        for sub in combinations(idx, size):
            deg = sum(len(lifted[i]) - 1 for i in sub)
            if deg not in allowed:
                continue
            if f0:
                c0 = lc
                for i in sub:
                    c0 = c0 * lifted[i][0] % m
                c0 = c0 - m if c0 > m // 2 else c0
                if c0 == 0 or f0 % c0:
                    continue
            g = [lc]
            for i in sub:
                g = _mod_poly(_zz_mul(g, lifted[i]), m)
            g = _zz_primitive(_symmetric(g, m))
            q = _zz_divides(f, g)
            if q is not None:
                result.append(g)
                f = _zz_primitive(q)
                idx = [i for i in idx if i not in sub]
                found = True
                break
        if not found:
            size += 1
    result.append(f)
    return result


def factor_univariate_zz(coeffs, seed=0):
    """Factor a rational univariate polynomial: (unit, [(monic g over QQ, m)])."""
    coeffs = _strip([mpq(c) for c in coeffs])
    if not coeffs:
        raise ValueError("cannot factor zero")
    lc = coeffs[-1]
    out = []
    for g, m in _zz_sqf(_q_to_zz(coeffs)):
        for h in _zz_factor_sqf(g, seed):
            hl = mpq(h[-1])
            out.append(([mpq(c) / hl for c in h], m))
    out.sort(key=lambda t: (len(t[0]), [(c.numerator, c.denominator) for c in t[0]], t[1]))
    return lc, out


# ---------------------------------------------------------------------------
# multivariate


def _kronecker_degrees(f, support):
    return [f.degree(i) for i in support]


def _to_univariate(f, support, weights):
    field = f.field
    p = field.p
    deg = sum(w * d for w, d in zip(weights, _kronecker_degrees(f, support)))
    coeffs = [field.zero] * (deg + 1)
    for m, c in f.terms.items():
        e = sum(w * m[i] for w, i in zip(weights, support))
        coeffs[e] = (coeffs[e] + c) % p if p else coeffs[e] + c
    return coeffs


def _from_univariate(coeffs, field, nvars, support, bases):
    terms = {}
    for e, c in enumerate(coeffs):
        if not c:
            continue
        m = [0] * nvars
        rest = e
        for i, b in zip(support, bases):
            m[i] = rest % b
            rest //= b
        if rest:
            return None
        terms[tuple(m)] = c
    return Polynomial(field, nvars, terms, _clean=True)


def _univariate_factor(coeffs, field, seed):
    p = field.p
    if p:
        lc, facs = factor_univariate_gf([int(c) for c in coeffs], p, seed)
        return lc, facs
    return factor_univariate_zz(coeffs, seed)


def _obviously_irreducible(f):
    if f.total_degree() <= 1:
        return True
    # linear in some variable with a constant coefficient
    for i in f.support():
        if f.degree(i) == 1:
            lin = [m for m in f.terms if m[i] == 1]
            if len(lin) == 1 and sum(lin[0]) == 1:
                return True
    return False


def _factor_nonmonomial(f, seed, max_degree):
    """Factor f without monomial content into [(g, m)] with g monic (grevlex)."""
    field = f.field
    support = sorted(f.support())
    if len(support) == 0:
        return []
    if _obviously_irreducible(f):
        return [(f.monic(), 1)]
    if len(support) == 1:
        i = support[0]
        coeffs = [field.zero] * (f.degree(i) + 1)
        for m, c in f.terms.items():
            coeffs[m[i]] = c
        _, facs = _univariate_factor(coeffs, field, seed)
        out = []
        for g, mult in facs:
            terms = {}
            for e, c in enumerate(g):
                if c:
                    mm = [0] * f.nvars
                    mm[i] = e
                    terms[tuple(mm)] = field(c) if field.p else mpq(c)
            out.append((Polynomial(field, f.nvars, terms).monic(), mult))
        return out
    if f.total_degree() > max_degree:
        raise UnsupportedDegree(f"total degree {f.total_degree()} exceeds factorization bound {max_degree}")
    degs = _kronecker_degrees(f, support)
    bases = [d + 1 for d in degs]
    weights = []
    w = 1
    for b in bases:
        weights.append(w)
        w *= b
    if w - 1 > _MAX_KRONECKER_DEGREE:
        raise UnsupportedDegree("Kronecker substitution degree too large")
    if _irreducible_by_specialization(f, seed):
        return [(f.monic(), 1)]
    u = _to_univariate(f, support, weights)
    _, ufacs = _univariate_factor(u, field, seed)
    pieces = []
    for g, mult in ufacs:
        pieces.extend([g] * mult)
    if len(pieces) <= 1:
        return [(f.monic(), 1)]
    found = []
    rest = f
    rest_u = u
    idx = list(range(len(pieces)))
    size = 1
    trials = 0
    while 2 * size <= len(idx):
        hit = False
        for sub in combinations(idx, size):
            trials += 1
            if trials > _MAX_RECOMBINATIONS:
                raise UnsupportedDegree("too many candidate factor combinations")
            prod = [field.one]
            for i in sub:
                prod = _poly_mul_dense(prod, pieces[i], field)
            cand = _from_univariate(prod, field, f.nvars, support, bases)
            if cand is None or cand.is_constant():
                continue
            cof_u = _dense_quotient(rest_u, prod, field)
            cof = _from_univariate(cof_u, field, f.nvars, support, bases)
            if cof is None or cand * cof != rest:
                continue
            found.append(cand.monic())
            rest = cof
            rest_u = cof_u
            idx = [i for i in idx if i not in sub]
            hit = True
            break
        if not hit:
            size += 1
    if not rest.is_constant():
        found.append(rest.monic())
    out = {}
    for g in found:
        out[g] = out.get(g, 0) + 1
    return list(out.items())


def _dense_quotient(a, b, field):
    """Exact quotient of dense univariate polynomials over the field."""
    p = field.p
    if p:
        return _gf_divmod([int(c) for c in a], [int(c) for c in b], p)[0]
    a = list(a)
    q = [field.zero] * max(len(a) - len(b) + 1, 1)
    inv = field.inv(b[-1])
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv
        if c:
            q[k] = c
            for j, y in enumerate(b):
                a[k + j] -= c * y
    return q


def _irreducible_by_specialization(f, seed, tries=3):
    """Certify irreducibility through an irreducible univariate specialization.

    Needs a variable x such that the content of f in x is visibly 1 (some
    x-coefficient is a nonzero constant); then f(x, c) irreducible of the
    same x-degree forces f irreducible.
    """
    field = f.field
    p = field.p
    rng = random.Random(seed)
    support = sorted(f.support())
    for x in sorted(support, key=lambda i: (-f.degree(i), i)):
        parts = f.coefficients_in([x])
        if not any(c.is_constant() for c in parts.values()):
            continue
        dx = f.degree(x)
        lead = parts[(dx,)]
        for _ in range(tries):
            values = [field.zero] * f.nvars
            for i in support:
                if i != x:
                    values[i] = field(rng.randrange(p) if p else rng.randint(-20, 20))
            if not lead.evaluate(values):
                continue
            coeffs = [field.zero] * (dx + 1)
            for (e,), c in parts.items():
                coeffs[e] = c.evaluate(values)
            try:
                _, facs = _univariate_factor(coeffs, field, seed)
            except UnsupportedDegree:
                return False
            if len(facs) == 1 and facs[0][1] == 1:
                return True
    return False


def _poly_mul_dense(a, b, field):
    p = field.p
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p if p else out[i + j] + x * y
    return out


@lru_cache(maxsize=4096)
def _factor_cached(f: Polynomial, seed: int, max_degree: int):
    field = f.field
    n = f.nvars
    mins = [min(m[i] for m in f.terms) for i in range(n)]
    factors = []
    for i, e in enumerate(mins):
        if e:
            factors.append((Polynomial.variable(field, n, i), e))
    g = f
    if any(mins):
        g = Polynomial(field, n, {tuple(a - b for a, b in zip(m, mins)): c for m, c in f.terms.items()}, _clean=True)
    factors.extend(_factor_nonmonomial(g, seed, max_degree))
    merged = {}
    for h, m in factors:
        merged[h] = merged.get(h, 0) + m
    items = sorted(merged.items(), key=lambda t: (t[0].total_degree(), t[0].sorted_terms()[0][0], str(t[0])))
    prod = Polynomial.constant(field, n, 1)
    for h, m in items:
        prod = prod * h**m
    unit = f.leading_term()[1]
    check = prod.leading_term()[1]
    unit = field.inv(check) * unit % field.p if field.p else unit / check
    return Factorization(unit, tuple(items))


def factor(f: Polynomial, seed: int = 0, max_degree: int = DEFAULT_MAX_DEGREE) -> Factorization:
    """Irreducible factorization of a nonzero polynomial."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if f.is_constant():
        return Factorization(f.constant_coeff(), ())
    return _factor_cached(f, seed, max_degree)


def is_irreducible(f: Polynomial, seed: int = 0, max_degree: int = DEFAULT_MAX_DEGREE) -> bool:
    fac = factor(f, seed, max_degree)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1
