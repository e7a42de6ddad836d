import sympy
import pytest

from seminormal.ideals import IdealHandle, ideal, intersect
from seminormal.polyring import GF, QQ, AffineRing, AlgebraError, make_affine_ring
from seminormal.ringmaps import (
    NotFinite,
    RingMap,
    annihilator,
    compose,
    identity_map,
    linear_relations,
    pushforward,
)
from seminormal.groebner import ModulePresentation


@pytest.fixture
def cusp_to_line():
    cusp = make_affine_ring(QQ, ["x", "y"], ["y^2 - x^3"])
    line = make_affine_ring(QQ, ["t"])
    return RingMap(cusp, line, ["t^2", "t^3"])


def test_ill_defined_map_rejected():
    cusp = make_affine_ring(QQ, ["x", "y"], ["y^2 - x^3"])
    line = make_affine_ring(QQ, ["t"])
    with pytest.raises(AlgebraError):
        RingMap(cusp, line, ["t", "t"])


def test_composition_with_identity(cusp_to_line):
    f = cusp_to_line
    assert compose(identity_map(f.target), f) == f
    assert compose(f, identity_map(f.source)) == f


def test_composition_substitutes():
    P = make_affine_ring(QQ, ["u", "v"])
    S = make_affine_ring(QQ, ["x", "y"])
    T = make_affine_ring(QQ, ["t"])
    g = RingMap(S, T, ["t^2", "t^3"])
    f = RingMap(P, S, ["x", "y"])
    assert compose(g, f).to_strings() == ["t^2", "t^3"]


def test_kernel_of_parametrization():
    S = make_affine_ring(QQ, ["x", "y"])
    T = make_affine_ring(QQ, ["t"])
    f = RingMap(S, T, ["t^2", "t^3"])
    assert f.kernel == ideal(S, "y^2 - x^3")
    assert identity_map(S).kernel.is_zero()


def _gt_map():
    F = GF(11)
    B = AffineRing(F, "x y u v e f".split())
    I = intersect(ideal(B, "u", "v", "e - 1", "f"), ideal(B, "x", "y", "e", "f - 1"))
    A = I.quotient_ring()
    E = AffineRing(F, ["z1", "z2", "z3", "z4", "z5"])
    return E, A, RingMap(E, A, ["x^3 + u", "x^2 + v", "y", "u^2 - v^3", "x*y"])


def test_greco_traverso_kernel_matches_sympy_elimination():
    E, A, h = _gt_map()
    T, x, y, u, v, e, f = sympy.symbols("T x y u v e f")
    zs = sympy.symbols("z1 z2 z3 z4 z5")
    gens = [T * g for g in (u, v, e - 1, f)] + [(1 - T) * g for g in (x, y, e, f - 1)]
    images = [x**3 + u, x**2 + v, y, u**2 - v**3, x * y]
    graph = gens + [z - im for z, im in zip(zs, images)]
    G = sympy.groebner(graph, T, x, y, u, v, e, f, *zs, order="lex", modulus=11)
    elim = {T, x, y, u, v, e, f}
    oracle = [str(g).replace("**", "^") for g in G.exprs if not (g.free_symbols & elim)]
    assert h.kernel == IdealHandle(E, oracle)


def test_preimage():
    E, A, h = _gt_map()
    JJ = h.preimage(ideal(A, "f"))
    J = h.kernel
    # JJ contains J and adds z4 (the branch where f = 1 forces u = v = 0)
    assert all(JJ.contains(g) for g in J.gens)
    assert JJ.contains("z4") and not J.contains("z4")
    S = make_affine_ring(QQ, ["x"])
    P = make_affine_ring(QQ, ["x", "y"])
    inc = RingMap(S, P, ["x"])
    assert inc.preimage(ideal(P, "x - 1", "y")) == ideal(S, "x - 1")
    assert identity_map(P).preimage(ideal(P, "x*y")) == ideal(P, "x*y")


def test_finiteness(cusp_to_line):
    assert cusp_to_line.is_finite()
    S = make_affine_ring(QQ, ["x"])
    P = make_affine_ring(QQ, ["x", "y"])
    assert not RingMap(S, P, ["x"]).is_finite()
    with pytest.raises(NotFinite):
        pushforward(RingMap(S, P, ["x"]))
    assert identity_map(P).is_finite()


def test_pushforward_basis_and_writer(cusp_to_line):
    data = pushforward(cusp_to_line)
    assert [str(b) for b in data.basis] == ["1", "t"]
    coords = data.write(cusp_to_line.target.poly("t^2"))
    assert [str(c) for c in coords] == ["x", "0"]
    assert [str(c) for c in data.write(cusp_to_line.target.poly("t^5"))] == ["x*y", "0"]
    for expr in ("t^7 + 3*t", "t^4 - t^3 + 1"):
        y = cusp_to_line.target.element(cusp_to_line.target.poly(expr))
        assert data.recombine(data.write(y)) == y
    assert [str(b) for b in pushforward(identity_map(cusp_to_line.source)).basis] == ["1"]


def test_pushforward_in_characteristic_two():
    G = make_affine_ring(GF(2), ["t", "x", "y"], ["x^2 - t*y^2"])
    S = make_affine_ring(GF(2), ["t", "y"])
    data = pushforward(RingMap(S, G, ["t", "y"]))
    assert [str(b) for b in data.basis] == ["1", "x"]


def test_linear_relations_detect_module_syzygies(cusp_to_line):
    T = cusp_to_line.target
    rels = linear_relations(cusp_to_line, [T.poly("t^2"), T.poly("t^3")])
    # y * t^2 - x * t^3 = 0 over the cusp
    for col in rels:
        total = cusp_to_line(col[0]) * T.poly("t^2") + cusp_to_line(col[1]) * T.poly("t^3")
        assert total.is_zero()
    assert rels


def test_annihilators(cusp_to_line):
    R = cusp_to_line.source
    I = ideal(R, "x")
    cyclic = ModulePresentation(R, 1, [[R.element(g)] for g in I.gens])
    assert annihilator(cyclic) == I
    assert annihilator(ModulePresentation(R, 2, [])).is_zero()
    data = pushforward(cusp_to_line)
    assert annihilator(data.cokernel_presentation()) == ideal(R, "x", "y")


def test_lift_and_isomorphism():
    P = make_affine_ring(QQ, ["x", "y"], ["y - x^2"])
    L = make_affine_ring(QQ, ["s"])
    f = RingMap(P, L, ["s", "s^2"])
    assert f.is_isomorphism()
    assert f.inverse().to_strings() == ["x"]
    cusp = make_affine_ring(QQ, ["x", "y"], ["y^2 - x^3"])
    g = RingMap(cusp, L, ["s^2", "s^3"])
    assert g.lift(L.poly("s")) is None
    assert not g.is_surjective()
