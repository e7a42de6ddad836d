import pytest

from seminormal.ideals import ideal
from seminormal.normalization import (
    NotADomain,
    NotReduced,
    conductor,
    is_normal,
    is_reduced,
    jacobian_ideal,
    normalize_domain,
    normalize_reduced,
)
from seminormal.polyring import GF, QQ, make_affine_ring
from seminormal.ringmaps import identity_map


def _check_normalization(R, n):
    assert is_normal(n.normal_ring, assume_reduced=True)
    assert n.map.is_injective()
    assert n.map.is_finite()


def test_reducedness():
    assert is_reduced(make_affine_ring(QQ, ["x", "y"], ["x*y"]))
    assert not is_reduced(make_affine_ring(QQ, ["x", "y"], ["x^2", "x*y"]))
    with pytest.raises(NotReduced):
        is_normal(make_affine_ring(QQ, ["x"], ["x^2"]))


def test_normality_checks():
    assert is_normal(make_affine_ring(QQ, ["t"]))
    assert not is_normal(make_affine_ring(QQ, ["x", "y"], ["y^2 - x^3"]))
    assert not is_normal(make_affine_ring(GF(2), ["t", "x", "y"], ["x^2 - t*y^2"]))
    # two lines meeting: not a product of domains
    assert not is_normal(make_affine_ring(QQ, ["x", "y"], ["x*y"]))
    # two disjoint lines are normal
    assert is_normal(make_affine_ring(QQ, ["x", "y"], ["x*(x - 1)"]))


def test_cusp_normalization():
    R = make_affine_ring(QQ, ["x", "y"], ["y^2 - x^3"])
    n = normalize_reduced(R)
    _check_normalization(R, n)
    assert n.normal_ring.nvars == 1 and n.normal_ring.gb.elements == ()
    assert n.map.to_strings() == ["t0^2", "t0^3"]


def test_node_normalization():
    R = make_affine_ring(QQ, ["x", "y"], ["y^2 - x^2*(x + 1)"])
    n = normalize_reduced(R)
    _check_normalization(R, n)
    assert n.normal_ring.nvars == 1 and n.normal_ring.gb.elements == ()
    # x -> t^2 - 1 and y -> t(t^2 - 1), possibly up to t -> -t
    assert n.map.to_strings()[0] == "t0^2 - 1"
    assert n.map.to_strings()[1] in ("t0^3 - t0", "-t0^3 + t0")


def test_already_normal_domain_is_kept():
    R = make_affine_ring(QQ, ["x", "y"], ["x*y - 1"])
    n = normalize_domain(R)
    assert n.normal_ring is R or n.map.is_isomorphism()


def test_normalize_domain_rejects_zero_divisors():
    with pytest.raises(NotADomain):
        normalize_domain(make_affine_ring(QQ, ["x", "y"], ["x*y"]))


def test_axes_normalize_to_product():
    R = make_affine_ring(QQ, ["x", "y"], ["x*y"])
    n = normalize_reduced(R)
    _check_normalization(R, n)
    assert len(n.idempotents) == 2
    for e in n.idempotents:
        assert (e * e - e).is_zero()
    assert conductor(n) == ideal(R, "x", "y")


def test_four_lines_normalize_to_four_components():
    R = make_affine_ring(QQ, ["x", "y"], ["x*y*(x^2 - y^2)"])
    n = normalize_reduced(R)
    _check_normalization(R, n)
    assert len(n.idempotents) == 4


def test_characteristic_two_normalization_adjoins_square_root():
    R = make_affine_ring(GF(2), ["t", "x", "y"], ["x^2 - t*y^2"])
    n = normalize_reduced(R)
    _check_normalization(R, n)
    assert n.normal_ring.gb.elements == ()
    assert n.normal_ring.nvars == 2


def test_space_curve_normalization():
    R = make_affine_ring(QQ, ["x", "y", "z"], ["x^3 - y*z", "x^2*y - z^2", "y^2 - x*z"])
    n = normalize_reduced(R)
    _check_normalization(R, n)
    assert n.normal_ring.nvars == 1
    assert conductor(n) == ideal(R, "x", "y", "z")


def test_conductor_examples():
    cusp = make_affine_ring(QQ, ["x", "y"], ["y^2 - x^3"])
    assert conductor(normalize_reduced(cusp)) == ideal(cusp, "x", "y")
    line = make_affine_ring(QQ, ["t"])
    assert conductor(normalize_reduced(line)).is_unit()


def test_jacobian_ideal_of_cusp():
    R = make_affine_ring(QQ, ["x", "y"], ["y^2 - x^3"])
    J = jacobian_ideal(R)
    assert J.contains("x^2") and J.contains("y")
