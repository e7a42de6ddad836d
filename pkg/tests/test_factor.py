import random

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import random_poly
from seminormal.factor import UnsupportedDegree, factor, factor_univariate_gf, factor_univariate_zz, is_irreducible
from seminormal.polyring import GF, QQ, Polynomial, parse_ambient

NAMES = ["x", "y", "z"]
SYMS = sympy.symbols(NAMES)


def _to_sympy(f):
    return sympy.sympify(f.to_str(NAMES[: f.nvars]).replace("^", "**"))


def _multiplicities(fac):
    return sorted(m for _, m in fac.factors), sorted(g.total_degree() for g, _ in fac.factors)


@pytest.mark.parametrize("seed", range(30))
def test_multivariate_rational_factorization_matches_sympy(seed):
    rng = random.Random(seed)
    f = Polynomial.constant(QQ, 3, 1)
    for _ in range(rng.randint(1, 3)):
        q = random_poly(rng, QQ, 3, terms=3, degree=3)
        if q:
            f = f * q
    if f.is_constant():
        return
    ours = factor(f)
    assert ours.expand(QQ, 3) == f
    _, theirs = sympy.factor_list(_to_sympy(f), *SYMS)
    assert _multiplicities(ours) == (
        sorted(m for _, m in theirs),
        sorted(sympy.Poly(g, *SYMS).total_degree() for g, _ in theirs),
    )


@pytest.mark.parametrize("p", [2, 3, 11, 101])
@pytest.mark.parametrize("seed", range(8))
def test_univariate_prime_field_factorization_matches_sympy(p, seed):
    rng = random.Random(100 * p + seed)
    F = GF(p)
    f = Polynomial.constant(F, 1, 1)
    for _ in range(rng.randint(1, 3)):
        q = random_poly(rng, F, 1, terms=4, degree=7)
        if q:
            f = f * q
    if f.is_constant():
        return
    ours = factor(f)
    assert ours.expand(F, 1) == f
    _, theirs = sympy.factor_list(_to_sympy(f), SYMS[0], modulus=p)
    assert sorted((g.total_degree(), m) for g, m in ours.factors) == sorted(
        (sympy.degree(g, SYMS[0]), m) for g, m in theirs
    )


def test_cyclotomic_splitting():
    fac = factor(parse_ambient("x^8 - 1", NAMES, QQ))
    assert sorted(g.total_degree() for g, _ in fac.factors) == [1, 1, 2, 4]
    fac = factor(parse_ambient("x^9 - x", NAMES, GF(3)))
    assert sorted(g.total_degree() for g, _ in fac.factors) == [1, 1, 1, 2, 2, 2]


def test_sqrt2_plus_sqrt3_minimal_polynomial_is_irreducible():
    # reducible modulo every prime, so recombination must reject all splits
    assert is_irreducible(parse_ambient("x^4 - 10*x^2 + 1", NAMES, QQ))
    lc, facs = factor_univariate_zz([1, 0, -10, 0, 1])
    assert len(facs) == 1 and facs[0][1] == 1


def test_characteristic_two():
    F = GF(2)
    assert is_irreducible(parse_ambient("x^2 + z*y^2", NAMES, F))
    fac = factor(parse_ambient("x^2 + y^2", NAMES, F))
    assert fac.factors == ((parse_ambient("x + y", NAMES, F), 2),)


def test_monomial_content_is_split_off():
    fac = factor(parse_ambient("x^3*y - x*y^3", NAMES, QQ))
    assert fac.expand(QQ, 3) == parse_ambient("x^3*y - x*y^3", NAMES, QQ)
    assert len(fac.factors) == 4


def test_degree_guard():
    f = parse_ambient("x^30 - y^7", NAMES, QQ)
    with pytest.raises(UnsupportedDegree):
        factor(f, max_degree=12)


def test_gf_univariate_interface():
    lc, facs = factor_univariate_gf([1, 0, 1], 2)  # 1 + x^2 = (1 + x)^2
    assert lc == 1 and facs == [([1, 1], 2)]


@given(st.lists(st.integers(-4, 4), min_size=2, max_size=4), st.lists(st.integers(-4, 4), min_size=2, max_size=4))
def test_product_of_two_polynomials_factors_back(a, b):
    x = Polynomial.variable(QQ, 1, 0)
    f = sum((c * x**i for i, c in enumerate(a)), Polynomial.zero(QQ, 1))
    g = sum((c * x**i for i, c in enumerate(b)), Polynomial.zero(QQ, 1))
    h = f * g
    if h.is_constant():
        return
    fac = factor(h)
    assert fac.expand(QQ, 1) == h
    assert all(is_irreducible(p) for p, _ in fac.factors)
