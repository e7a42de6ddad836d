import random

import pytest
import sympy

from conftest import FIELDS, random_poly
from seminormal.groebner import (
    ModuleOrder,
    ResourceLimitExceeded,
    buchberger,
    eliminate,
    limits,
    module_groebner,
    spair_audit,
)
from seminormal.polyring import GF, QQ, MonomialOrder, Polynomial, parse_ambient

NAMES = ["x", "y", "z"]


def _sympy_gb(polys, field):
    """Reduced grevlex basis from sympy, normalized to monic polynomials over ``field``."""
    syms = sympy.symbols(NAMES)
    exprs = [sympy.sympify(f.to_str(NAMES).replace("^", "**")) for f in polys]
    kw = {"modulus": field.p} if field.p else {}
    gb = sympy.groebner(exprs, *syms, order="grevlex", **kw)
    out = set()
    for g in gb.exprs:
        terms = {}
        for m, c in sympy.Poly(g, *syms, **kw).terms():
            c = sympy.Rational(int(c)) if field.p else sympy.Rational(c)
            terms[m] = field(int(c)) if field.p else field(c.p) / field(c.q)
        out.add(Polynomial(field, 3, terms).monic())
    return out


@pytest.mark.parametrize("seed", range(24))
def test_reduced_basis_matches_sympy(seed):
    rng = random.Random(seed)
    field = FIELDS[seed % len(FIELDS)]
    polys = [random_poly(rng, field, 3, terms=3, degree=3) for _ in range(3)]
    polys = [f for f in polys if f] or [Polynomial.constant(field, 3, 1)]
    gb = buchberger(polys, field=field, nvars=3)
    assert spair_audit(gb)
    ours = {g.monic() for g in gb.elements}
    assert ours == _sympy_gb(polys, field)


@pytest.mark.parametrize("seed", range(20))
def test_every_basis_passes_spair_audit(seed):
    rng = random.Random(1000 + seed)
    field = FIELDS[seed % len(FIELDS)]
    polys = [random_poly(rng, field, 3, terms=3, degree=3) for _ in range(3)]
    for order in (MonomialOrder.grevlex(3), MonomialOrder.lex(3), MonomialOrder.eliminating(3, [0])):
        gb = buchberger([f for f in polys if f] or [Polynomial.zero(field, 3)], order, field=field, nvars=3)
        assert spair_audit(gb)
        for f in polys:
            assert gb.contains(f)


def test_unit_ideal():
    f = parse_ambient("x*y - 1", NAMES, QQ)
    g = parse_ambient("x", NAMES, QQ)
    assert buchberger([f, g], field=QQ, nvars=3).is_unit()


def test_elimination_of_parametrization():
    # x = t^2, y = t^3 in variables (t, x, y) reusing the names x, y, z as t, x, y
    t, x, y = (Polynomial.variable(QQ, 3, i) for i in range(3))
    out = eliminate([x - t**2, y - t**3], [0], field=QQ, nvars=3)
    assert len(out) == 1
    assert out[0].monic() == (x**3 - y**2).monic()


def test_resource_guard_trips_on_degree():
    x, y, z = (Polynomial.variable(GF(7), 3, i) for i in range(3))
    with limits(max_elements=10000, max_degree=3):
        with pytest.raises(ResourceLimitExceeded):
            buchberger([x**5 - y * z, y**4 - x], field=GF(7), nvars=3)


def test_resource_guard_trips_on_size():
    x, y, z = (Polynomial.variable(QQ, 3, i) for i in range(3))
    with limits(max_elements=2, max_degree=64):
        with pytest.raises(ResourceLimitExceeded):
            buchberger([x**2 - y, y**2 - z, x * z - 1], field=QQ, nvars=3)


def test_module_basis_of_syzygy_vectors():
    x, y, _ = (Polynomial.variable(QQ, 3, i) for i in range(3))
    zero = Polynomial.zero(QQ, 3)
    vecs = [[x, zero], [y, x]]
    mgb = module_groebner(vecs, ModuleOrder(3, 2, "pot"), field=QQ, nvars=3)
    for v in vecs:
        assert mgb.contains(v)
    assert not mgb.contains([zero, y])
