import pytest

from hkcount.chow import (
    ChowError,
    Grassmannian,
    Point,
    canonical_class,
    dual,
    line_bundle,
    trivial_bundle,
)
from hkcount.chow import fano


@pytest.fixture(scope="module")
def tower():
    return fano.build_fano_tower()


def test_tower_shape(tower):
    assert tower.G.dim == 8
    assert tower.PK.dim == 11 and tower.PE.dim == 20
    assert tower.PE.size == 600
    assert tower.E.rank == 10 and tower.F.rank == 19
    assert tower.Qt.rank == 3


def test_c1_of_qtilde(tower):
    assert tower.c1_Qt == tower.K.c(1).pullback(tower.PK) + tower.y


def test_off_degree_integrals_vanish(tower):
    assert tower.F.c(18).integral() == 0
    assert (tower.F.c(19) * tower.z * tower.z).integral() == 0


def test_genus(tower):
    assert fano.adjunction_integral(tower) == 1260
    assert fano.sigma_genus(tower) == 631


def test_adjunction_uses_canonical_class(tower):
    K = canonical_class(tower.PE)
    assert (tower.F.c(19) * K).integral() + (tower.F.c(19) * tower.F.c(1)).integral() == 1260


def test_j_degree_both_routes(tower):
    assert fano.sigma_j_degree(tower) == 3780
    assert fano.sigma_j_degree(tower, via_euler=True) == 3780


def test_j_degree_zero_divisor(tower):
    assert (tower.F.c(19) * tower.PE.zero()).integral() == 0


def test_discriminant_routes_agree_on_tower(tower):
    _, closed = fano.discriminant_divisor_class(tower.PK, tower.Qt, pw=tower.PE)
    assert closed == fano.discriminant_divisor_via_euler(tower.PK, tower.Qt, pw=tower.PE)
    assert closed == tower.z * 12 - tower.y.pullback(tower.PE) * 12 - tower.K.c(1).pullback(tower.PE) * 12


def test_discriminant_over_a_point():
    X = Point()
    V = trivial_bundle(X, 3)
    pw, D = fano.discriminant_divisor_class(X, V)
    assert pw.dim == 9
    assert D == pw.z * 12
    # the discriminant of plane cubics has degree 12
    assert (D * pw.z ** 8).integral() == 12
    assert fano.discriminant_divisor_via_euler(X, V, pw=pw) == D


def test_discriminant_routes_agree_on_gr24():
    G = Grassmannian(2, 4)
    V = dual(G.sub_bundle) + line_bundle(G.schubert(1))
    pw, D = fano.discriminant_divisor_class(G, V)
    assert fano.discriminant_divisor_via_euler(G, V, pw=pw) == D


def test_discriminant_argument_checks():
    G = Grassmannian(2, 4)
    with pytest.raises(ChowError):
        fano.discriminant_divisor_class(G, G.sub_bundle)
    with pytest.raises(ChowError):
        fano.discriminant_divisor_via_euler(Point(), trivial_bundle(G, 3))


def test_trivial_bundle_has_no_top_class(tower):
    assert trivial_bundle(tower.PE, 19).c(19).is_zero()


def test_cached_tower_is_reused(tower):
    assert fano.build_fano_tower() is tower
