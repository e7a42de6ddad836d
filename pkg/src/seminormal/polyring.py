"""Exact coefficient fields, multivariate polynomials, monomial orders and
affine rings k[x_1..x_n]/I over QQ or GF(p).

Polynomials are immutable dictionaries ``{exponent tuple: coefficient}``.
Rational coefficients are ``gmpy2.mpq``; residues mod p are plain ``int``
values in ``[0, p)``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property

from gmpy2 import mpq

__all__ = [
    "Field",
    "QQ",
    "GF",
    "Polynomial",
    "MonomialOrder",
    "AffineRing",
    "RingElement",
    "make_affine_ring",
    "parse_polynomial",
    "parse_ambient",
    "partial_derivative",
    "ring_arith",
    "AlgebraError",
    "ParseError",
]


class AlgebraError(Exception):
    """Base class for errors raised by the library."""


class ParseError(AlgebraError):
    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (column {position + 1})")
        self.position = position


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, exact for n < 3.3e24
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """QQ (``p == 0``) or the prime field GF(p)."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p:
            if p >= 2**31:
                raise AlgebraError(f"characteristic {p} too large (must be < 2^31)")
            if not _is_prime(p):
                raise AlgebraError(f"{p} is not prime")
        object.__setattr__(self, "p", int(p))

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return self.name

    @property
    def name(self) -> str:
        return f"GF({self.p})" if self.p else "QQ"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return 0 if self.p else mpq(0)

    @property
    def one(self):
        return 1 if self.p else mpq(1)

    def __call__(self, value):
        """Coerce an int, Fraction, mpq or ``"a/b"`` string into the field."""
        p = self.p
        if isinstance(value, str):
            value = Fraction(value)
        if p:
            if isinstance(value, int):
                return value % p
            q = Fraction(value)
            if q.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({p})")
            return q.numerator * pow(q.denominator, -1, p) % p
        if isinstance(value, Fraction):
            return mpq(value.numerator, value.denominator)
        return mpq(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def is_valid(self, a) -> bool:
        if self.p:
            return isinstance(a, int) and 0 <= a < self.p
        return type(a) is type(mpq(0))

    def to_fraction(self, a) -> Fraction:
        if self.p:
            return Fraction(int(a))
        return Fraction(int(a.numerator), int(a.denominator))

    def format(self, a) -> str:
        """Symmetric representative for GF(p), ``a/b`` for QQ."""
        if self.p:
            a = int(a)
            if a > self.p // 2 and self.p > 2:
                a -= self.p
            return str(a)
        if a.denominator == 1:
            return str(int(a.numerator))
        return f"{int(a.numerator)}/{int(a.denominator)}"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """A monomial order given by a stack of integer weight rows.

    ``blocks`` is a list of variable-index groups; each group is compared by
    graded reverse lexicographic order, earlier groups first.  Plain grevlex
    is one group, lex is one group per variable, ``block(k)`` is the
    elimination order for the first ``k`` variables.
    """

    def __init__(self, nvars: int, blocks, kind: str = "custom"):
        seen = sorted(i for b in blocks for i in b)
        if seen != list(range(nvars)):
            raise ValueError("blocks must partition the variables")
        self.nvars = nvars
        self.blocks = tuple(tuple(b) for b in blocks)
        self.kind = kind
        rows = []
        for block in self.blocks:
            deg = [0] * nvars
            for i in block:
                deg[i] = 1
            rows.append(tuple(deg))
            if len(block) > 1:
                for i in reversed(block[1:]):
                    r = [0] * nvars
                    r[i] = -1
                    rows.append(tuple(r))
        self.rows = tuple(rows)

    @classmethod
    def grevlex(cls, n):
        return cls(n, [list(range(n))] if n else [], "grevlex")

    @classmethod
    def lex(cls, n):
        return cls(n, [[i] for i in range(n)], "lex")

    @classmethod
    def block(cls, n, k):
        """Eliminate the first ``k`` variables."""
        blocks = [b for b in (list(range(k)), list(range(k, n))) if b]
        return cls(n, blocks, f"block({k})")

    @classmethod
    def eliminating(cls, n, first):
        """Elimination order with the variables ``first`` in the top block."""
        first = list(first)
        rest = [i for i in range(n) if i not in set(first)]
        return cls(n, [b for b in (first, rest) if b], "elim")

    def key(self, exps):
        return tuple(sum(w * e for w, e in zip(row, exps)) for row in self.rows)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.nvars, self.blocks) == (other.nvars, other.blocks)

    def __hash__(self):
        return hash((self.nvars, self.blocks))

    def __repr__(self):
        return f"MonomialOrder({self.kind}, n={self.nvars})"


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Sparse multivariate polynomial in ``nvars`` positional variables."""

    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: Field, nvars: int, terms=None, *, _clean=False):
        self.field = field
        self.nvars = nvars
        if terms is None:
            terms = {}
        elif not _clean:
            p = field.p
            clean = {}
            for m, c in terms.items():
                if len(m) != nvars:
                    raise ValueError("exponent vector length does not match nvars")
                c = field(c) if not field.is_valid(c) else c
                if c:
                    clean[tuple(m)] = c
            terms = clean
        self.terms = terms
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars, {}, _clean=True)

    @classmethod
    def constant(cls, field, nvars, c):
        c = field(c)
        return cls(field, nvars, {(0,) * nvars: c} if c else {}, _clean=True)

    @classmethod
    def variable(cls, field, nvars, i, power=1):
        m = [0] * nvars
        m[i] = power
        return cls(field, nvars, {tuple(m): field.one}, _clean=True)

    @classmethod
    def monomial(cls, field, exps, c=None):
        c = field.one if c is None else field(c)
        return cls(field, len(exps), {tuple(exps): c} if c else {}, _clean=True)

    # basic queries
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_coeff(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def degree(self, i):
        return max((m[i] for m in self.terms), default=-1)

    def support(self):
        """Indices of variables that occur."""
        out = set()
        for m in self.terms:
            out.update(i for i, e in enumerate(m) if e)
        return out

    def sorted_terms(self, order: MonomialOrder | None = None):
        key = _grevlex_key if order is None else order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder | None = None):
        key = _grevlex_key if order is None else order.key
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self == Polynomial.constant(self.field, self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.nvars, frozenset(self.terms.items())))
        return self._hash

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.field != self.field or other.nvars != self.nvars:
                raise AlgebraError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(mpq(0)):
            return Polynomial.constant(self.field, self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = (v + c) % p if p else v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial(self.field, self.nvars, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return Polynomial(
            self.field, self.nvars, {m: ((-c) % p if p else -c) for m, c in self.terms.items()}, _clean=True
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        out = {}
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                v = out.get(m)
                c = c1 * c2
                if v is None:
                    out[m] = c % p if p else c
                else:
                    out[m] = (v + c) % p if p else v + c
        out = {m: c for m, c in out.items() if c}
        return Polynomial(self.field, self.nvars, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        c = self.field(c) if not self.field.is_valid(c) else c
        if not c:
            return Polynomial.zero(self.field, self.nvars)
        p = self.field.p
        return Polynomial(
            self.field, self.nvars, {m: (v * c % p if p else v * c) for m, v in self.terms.items()}, _clean=True
        )

    def mul_monomial(self, exps, c=None):
        p = self.field.p
        c = self.field.one if c is None else c
        out = {}
        for m, v in self.terms.items():
            out[tuple(x + y for x, y in zip(m, exps))] = v * c % p if p else v * c
        return Polynomial(self.field, self.nvars, out, _clean=True)

    def monic(self, order: MonomialOrder | None = None):
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.field.inv(c))

    def derivative(self, i):
        p = self.field.p
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                v = c * e % p if p else c * e
                if v:
                    mm = list(m)
                    mm[i] -= 1
                    out[tuple(mm)] = v
        return Polynomial(self.field, self.nvars, out, _clean=True)

    def embed(self, nvars, positions):
        """Move variable ``i`` to position ``positions[i]`` in a ring of ``nvars`` variables."""
        out = {}
        for m, c in self.terms.items():
            mm = [0] * nvars
            for i, e in enumerate(m):
                if e:
                    mm[positions[i]] = e
            out[tuple(mm)] = c
        return Polynomial(self.field, nvars, out, _clean=True)

    def shift(self, nvars, offset):
        return self.embed(nvars, [offset + i for i in range(self.nvars)])

    def project(self, keep):
        """Restrict to the variables in ``keep`` (others must not occur)."""
        idx = {j: i for i, j in enumerate(keep)}
        out = {}
        for m, c in self.terms.items():
            mm = [0] * len(keep)
            for j, e in enumerate(m):
                if e:
                    if j not in idx:
                        raise AlgebraError("polynomial involves a dropped variable")
                    mm[idx[j]] = e
            out[tuple(mm)] = c
        return Polynomial(self.field, len(keep), out, _clean=True)

    def substitute(self, images, nvars=None):
        """Compose with ``x_i -> images[i]`` (polynomials in a common ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if nvars is None:
            if images:
                nvars = images[0].nvars
            else:
                nvars = 0
        field = self.field
        result = Polynomial.zero(field, nvars)
        cache = {}

        def power(i, e):
            key = (i, e)
            v = cache.get(key)
            if v is None:
                v = images[i] ** e
                cache[key] = v
            return v

        acc = {}
        p = field.p
        for m, c in self.terms.items():
            t = Polynomial.constant(field, nvars, 1).scale(c)
            for i, e in enumerate(m):
                if e:
                    t = t * power(i, e)
            for mm, v in t.terms.items():
                w = acc.get(mm)
                acc[mm] = v if w is None else ((w + v) % p if p else w + v)
        result = Polynomial(field, nvars, {m: c for m, c in acc.items() if c}, _clean=True)
        return result

    def evaluate(self, values):
        p = self.field.p
        total = self.field.zero
        for m, c in self.terms.items():
            t = c
            for v, e in zip(values, m):
                if e:
                    t = t * pow(v, e, p) % p if p else t * v**e
            total = (total + t) % p if p else total + t
        return total

    def coefficients_in(self, main):
        """Split into ``{exponents of variables in main: coefficient polynomial}``."""
        main = list(main)
        out = {}
        for m, c in self.terms.items():
            key = tuple(m[i] for i in main)
            rest = list(m)
            for i in main:
                rest[i] = 0
            out.setdefault(key, {})[tuple(rest)] = c
        return {k: Polynomial(self.field, self.nvars, v, _clean=True) for k, v in out.items()}

    # printing
    def to_str(self, names) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                (names[i] if e == 1 else f"{names[i]}^{e}") for i, e in enumerate(m) if e
            )
            cs = self.field.format(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            parts.append((neg, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        names = [f"x{i}" for i in range(self.nvars)]
        return f"Polynomial({self.to_str(names)})"


def partial_derivative(f: Polynomial, var: int) -> Polynomial:
    return f.derivative(var)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")
_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("id", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, names, field):
        self.tokens = _tokenize(text)
        self.i = 0
        self.names = {n: k for k, n in enumerate(names)}
        self.nvars = len(names)
        self.field = field

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.take()
        if t[0] != "op" or t[1] != value:
            raise ParseError(f"expected {value!r}", t[2])

    def parse(self):
        f = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected token {t[1]!r}", t[2])
        return f

    def expr(self):
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                g = self.term()
                f = f + g if t[1] == "+" else f - g
            else:
                return f

    def term(self):
        f = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                f = f * self.factor()
            else:
                return f

    def factor(self):
        b = self.base()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "int":
                raise ParseError("malformed exponent", e[2])
            b = b ** e[1]
        return b

    def base(self):
        t = self.take()
        kind, value, pos = t
        if kind == "int":
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                d = self.take()
                if d[0] != "int":
                    raise ParseError("division by a non-integer", d[2])
                if self.field.p:
                    raise ParseError("fractions are only allowed over QQ", nxt[2])
                if d[1] == 0:
                    raise ParseError("division by zero", d[2])
                return Polynomial.constant(self.field, self.nvars, Fraction(value, d[1]))
            return Polynomial.constant(self.field, self.nvars, value)
        if kind == "id":
            if value not in self.names:
                raise ParseError(f"unknown identifier {value!r}", pos)
            return Polynomial.variable(self.field, self.nvars, self.names[value])
        if kind == "op" and value == "(":
            f = self.expr()
            self.expect(")")
            return f
        if kind == "op" and value == "/":
            raise ParseError("division by a non-integer", pos)
        raise ParseError("unexpected " + ("end of input" if kind == "end" else repr(value)), pos)


def parse_ambient(text: str, names, field: Field) -> Polynomial:
    """Parse ``text`` as a polynomial in the variables ``names``."""
    return _Parser(text, list(names), field).parse()


# ---------------------------------------------------------------------------
# affine rings


class AffineRing:
    """k[vars] / ideal(defining_gens), with its reduced grevlex Groebner basis."""

    def __init__(self, field: Field, var_names, defining_gens=()):
        names = tuple(var_names)
        for n in names:
            if not isinstance(n, str) or not _IDENT.match(n):
                raise AlgebraError(f"invalid variable name {n!r}")
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise AlgebraError(f"duplicate variable {dup[0]!r}")
        self.field = field
        self.vars = names
        self.nvars = len(names)
        gens = []
        for g in defining_gens:
            if g.field != field or g.nvars != self.nvars:
                raise AlgebraError("defining polynomial lives in a different ring")
            if g:
                gens.append(g)
        self.defining_gens = tuple(gens)

    @cached_property
    def gb(self):
        from .groebner import buchberger

        return buchberger(self.defining_gens, MonomialOrder.grevlex(self.nvars), field=self.field, nvars=self.nvars)

    @property
    def reduced_gb(self):
        return self.gb.elements

    @property
    def relations(self):
        return self.gb.elements

    def _identity(self):
        return (self.field, self.vars, tuple(self.gb.elements))

    def __eq__(self, other):
        return isinstance(other, AffineRing) and self._identity() == other._identity()

    def __hash__(self):
        return hash(self._identity())

    def is_zero_ring(self):
        return self.gb.is_unit()

    def is_polynomial_ring(self):
        return not self.gb.elements

    def reduce(self, f: Polynomial) -> Polynomial:
        return self.gb.reduce(f)

    # element construction
    def element(self, f) -> "RingElement":
        if isinstance(f, RingElement):
            if f.ring is not self and f.ring != self:
                raise AlgebraError("element belongs to a different ring")
            return f
        if isinstance(f, str):
            f = parse_ambient(f, self.vars, self.field)
        elif not isinstance(f, Polynomial):
            f = Polynomial.constant(self.field, self.nvars, f)
        return RingElement(self, self.reduce(f), _normal=True)

    __call__ = element

    def var(self, name_or_index) -> "RingElement":
        i = self.vars.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return RingElement(self, self.reduce(Polynomial.variable(self.field, self.nvars, i)), _normal=True)

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def zero(self):
        return RingElement(self, Polynomial.zero(self.field, self.nvars), _normal=True)

    def one(self):
        return self.element(1)

    def poly(self, text) -> Polynomial:
        return parse_ambient(text, self.vars, self.field)

    def quotient(self, gens, names=None) -> "AffineRing":
        """This ring modulo extra relations (ambient polynomials or elements)."""
        extra = [g.rep if isinstance(g, RingElement) else g for g in gens]
        return AffineRing(self.field, names or self.vars, list(self.gb.elements) + extra)

    def format_relations(self):
        return [g.to_str(self.vars) for g in self.gb.elements]

    def __repr__(self):
        base = f"{self.field.name}[{', '.join(self.vars)}]"
        if self.gb.elements:
            return base + "/(" + ", ".join(self.format_relations()) + ")"
        return base


class RingElement:
    """An element of an :class:`AffineRing`, stored as its normal form."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: AffineRing, rep: Polynomial, _normal=False):
        self.ring = ring
        self.rep = rep if _normal else ring.reduce(rep)

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise AlgebraError("mixed rings in arithmetic")
            return other.rep
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(self.ring.field, self.ring.nvars, other)

    def __add__(self, other):
        return RingElement(self.ring, self.ring.reduce(self.rep + self._other(other)), _normal=True)

    __radd__ = __add__

    def __sub__(self, other):
        return RingElement(self.ring, self.ring.reduce(self.rep - self._other(other)), _normal=True)

    def __rsub__(self, other):
        return RingElement(self.ring, self.ring.reduce(self._other(other) - self.rep), _normal=True)

    def __neg__(self):
        return RingElement(self.ring, -self.rep, _normal=True)

    def __mul__(self, other):
        return RingElement(self.ring, self.ring.reduce(self.rep * self._other(other)), _normal=True)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.rep == other.rep
        if isinstance(other, (int, Polynomial)):
            return self.rep == self.ring.reduce(self._other(other))
        return NotImplemented

    def __hash__(self):
        return hash(self.rep)

    def __bool__(self):
        return bool(self.rep)

    def is_zero(self):
        return not self.rep

    def __str__(self):
        return self.rep.to_str(self.ring.vars)

    def __repr__(self):
        return f"RingElement({self})"


def make_affine_ring(field: Field, var_names, relations=()) -> AffineRing:
    """Build ``field[var_names]/(relations)`` from relation strings or polynomials."""
    names = list(var_names)
    # validate names before parsing so duplicate names report cleanly
    AffineRing(field, names)
    gens = []
    for r in relations:
        gens.append(parse_ambient(r, names, field) if isinstance(r, str) else r)
    return AffineRing(field, names, gens)


def parse_polynomial(text: str, ring: AffineRing) -> RingElement:
    return ring.element(parse_ambient(text, ring.vars, ring.field))


def ring_arith(a: RingElement, b, op: str) -> RingElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        return a**b
    raise ValueError(f"unknown operation {op!r}")
