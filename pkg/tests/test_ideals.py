import random

import pytest

from conftest import FIELDS, random_poly
from seminormal.ideals import (
    IdealHandle,
    divide_exact,
    ideal,
    ideal_product,
    ideal_sum,
    ideals_equal,
    intersect,
    intersect_all,
    is_subset,
    krull_dimension,
    quotient,
    quotient_by_element,
    radical_membership,
    saturate,
    trim,
)
from seminormal.polyring import GF, QQ, AffineRing, make_affine_ring


@pytest.fixture
def S():
    return AffineRing(QQ, ["x", "y", "z"])


def test_intersection_of_monomial_ideals(S):
    I = intersect(ideal(S, "x"), ideal(S, "y"))
    assert I == ideal(S, "x*y")
    J = intersect(ideal(S, "x^2", "y"), ideal(S, "x", "y^2"))
    assert J == ideal(S, "x^2", "x*y", "y^2")


def test_intersect_all_matches_pairwise(S):
    ideals = [ideal(S, "x"), ideal(S, "y"), ideal(S, "z")]
    assert intersect_all(ideals) == ideal(S, "x*y*z")


def test_colon_ideals(S):
    I = ideal(S, "x^2*y", "x*y^2")
    assert quotient_by_element(I, "x") == ideal(S, "x*y", "y^2")
    assert quotient(I, ideal(S, "x", "y")) == ideal(S, "x*y")


def test_saturation_removes_embedded_component(S):
    I = ideal(S, "x^2", "x*y")
    assert saturate(I, "y") == ideal(S, "x")


def test_dimension_counts():
    assert krull_dimension(make_affine_ring(QQ, ["x", "y"], ["y^2 - x^3"])) == 1
    assert krull_dimension(make_affine_ring(QQ, ["x", "y", "z"], [])) == 3
    assert krull_dimension(make_affine_ring(QQ, ["x", "y"], ["x^2", "y - 1"])) == 0
    assert krull_dimension(make_affine_ring(QQ, ["x"], ["1"])) == -1


def test_trim_drops_redundant_generators(S):
    I = ideal(S, "x", "x*y", "y", "x + y")
    T = trim(I)
    assert T == I
    assert len(T.gens) == 2


def test_radical_membership_basic(S):
    I = ideal(S, "x^3", "y^2*z")
    assert radical_membership("x", I)
    assert radical_membership("y*z", I)
    assert not radical_membership("y", I)


def test_divide_exact():
    R = AffineRing(QQ, ["x", "y"])
    f, g = R.poly("x^2 - y^2"), R.poly("x + y")
    assert divide_exact(f, g) == R.poly("x - y")


@pytest.mark.parametrize("seed", range(20))
def test_lattice_identities_on_random_ideals(seed):
    rng = random.Random(seed)
    field = FIELDS[seed % len(FIELDS)]
    S = AffineRing(field, ["x", "y", "z"])
    I = IdealHandle(S, [random_poly(rng, field, 3, terms=2, degree=2) for _ in range(2)])
    J = IdealHandle(S, [random_poly(rng, field, 3, terms=2, degree=2) for _ in range(2)])
    meet = intersect(I, J)
    assert is_subset(meet, I) and is_subset(meet, J)
    assert is_subset(ideal_product(I, J), meet)
    assert is_subset(I, ideal_sum(I, J))
    # (I ∩ J) : J contains I
    if not J.is_zero():
        assert is_subset(I, quotient(meet, J))
    assert ideals_equal(trim(I), I)
