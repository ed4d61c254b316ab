import random
from fractions import Fraction

import pytest

from hkcount.chow import (
    ChowClass,
    ChowError,
    Grassmannian,
    Point,
    ProjBundle,
    bundle_from_chern,
    canonical_class,
    ch_from_chern,
    chern_from_ch,
    dual,
    line_bundle,
    segre_classes,
    sym,
    tensor,
    trivial_bundle,
)

from oracles import grassmannian_euler_characteristic, sym_power_top_chern


@pytest.fixture(scope="module")
def gr24():
    return Grassmannian(2, 4)


@pytest.fixture(scope="module")
def gr46():
    return Grassmannian(4, 6)


@pytest.fixture(scope="module")
def p3():
    return ProjBundle(trivial_bundle(Point(), 4), "h")


@pytest.fixture(scope="module")
def tower():
    # P(K) over Gr(3, 5) and then P(Sym^2 Q~^*) over it
    G = Grassmannian(3, 5)
    pk = ProjBundle(G.sub_bundle, "y")
    pe = ProjBundle(sym(2, dual(pk.quotient_bundle)), "z")
    return G, pk, pe


def spaces(gr24, gr46, p3, tower):
    return [gr24, gr46, p3, tower[1], tower[2]]


# -- classical oracles ------------------------------------------------------------

def test_sigma1_fourth_power(gr24):
    assert (gr24.schubert(1) ** 4).integral() == 2


def test_lines_on_cubic(gr24):
    value = sym(3, dual(gr24.sub_bundle)).c(4).integral()
    assert value == sym_power_top_chern(2, 4, 3) == 27


def test_lines_on_quintic():
    G = Grassmannian(2, 5)
    value = sym(5, dual(G.sub_bundle)).c(6).integral()
    assert value == sym_power_top_chern(2, 5, 5) == 2875


def test_euler_characteristic_gr46(gr46):
    # Gr(4, 6) is isomorphic to Gr(2, 6)
    assert gr46.tangent_bundle().c(8).integral() == grassmannian_euler_characteristic(2, 6) == 15


def test_euler_characteristic_gr24(gr24):
    assert gr24.tangent_bundle().c(4).integral() == grassmannian_euler_characteristic(2, 4) == 6


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (4, 6), (3, 6)])
def test_first_chern_of_tangent(k, n):
    G = Grassmannian(k, n)
    assert G.tangent_bundle().c(1) == G.schubert(1) * n


# -- structure ----------------------------------------------------------------------

@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (4, 6)])
def test_whitney(k, n):
    G = Grassmannian(k, n)
    assert G.sub_bundle.total_chern() * G.quotient_bundle.total_chern() == G.one()


def test_dimensions(gr46, p3, tower):
    assert gr46.dim == 8 and gr46.size == 15
    assert p3.dim == 3 and p3.size == 4
    G, pk, pe = tower
    assert pk.dim == 8 and pe.dim == 10 and pe.size == 10 * 3 * 3


def test_graded_multiplication(gr24, gr46, p3, tower):
    rng = random.Random(0)
    for X in spaces(gr24, gr46, p3, tower):
        for _ in range(15):
            a, b = rng.choice(X.labels), rng.choice(X.labels)
            A, B = X.basis_class(a), X.basis_class(b)
            prod = A * B
            assert prod == B * A
            target = X.degrees[X.index[a]] + X.degrees[X.index[b]]
            assert all(d == target for d in prod.degrees())


def test_associativity_on_tower(tower):
    rng = random.Random(1)
    pe = tower[2]
    for _ in range(10):
        a, b, c = (pe.basis_class(rng.choice(pe.labels)) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_pushforward_normalization(p3, tower):
    for P in (p3, tower[1], tower[2]):
        z = P.z
        assert P.pushforward(z ** (P.rank - 1)) == P.base.one()
        for j in range(P.rank - 1):
            assert P.pushforward(z ** j).is_zero()


def test_projective_space_integrals(p3):
    h = p3.z
    assert (h ** 3).integral() == 1
    assert (h ** 2).integral() == 0
    assert canonical_class(p3) == h * -4


@pytest.mark.parametrize("j", [0, 1])
def test_projective_bundle_formula(tower, j):
    G, pk, pe = tower
    for P in (pk, pe):
        X = P.base
        s = segre_classes(P.bundle)
        for lab in X.labels:
            alpha = X.basis_class(lab)
            lhs = (P.z ** (P.rank - 1 + j) * alpha.pullback(P)).integral()
            rhs = (s[j] * alpha).integral()
            assert lhs == rhs


def random_bundle(X, rng):
    cs = [X.one()]
    for d in range(1, X.dim + 1):
        c = X.zero()
        for lab in X.basis_in_degree(d):
            c = c + X.basis_class(lab) * rng.randint(-3, 3)
        cs.append(c)
    return rng.randint(-2, 5), cs


@pytest.mark.parametrize("seed", range(6))
def test_ch_c_roundtrip(gr24, gr46, tower, seed):
    rng = random.Random(seed)
    for X in (gr24, gr46, tower[1]):
        rank, cs = random_bundle(X, rng)
        ch = ch_from_chern(rank, cs)
        assert chern_from_ch(ch) == cs
        E = bundle_from_chern(X, rank, cs)
        assert ch_from_chern(rank, E.chern_classes()) == E.ch


@pytest.mark.parametrize("seed", range(4))
def test_bundle_identities(gr46, seed):
    rng = random.Random(seed)
    rank, cs = random_bundle(gr46, rng)
    E = bundle_from_chern(gr46, rank, cs)
    assert dual(dual(E)) == E
    assert sym(1, E) == E
    assert tensor(E, trivial_bundle(gr46, 1)) == E
    assert (E - E).ch.is_zero()


def test_sym_of_line_bundle(gr46):
    L = line_bundle(gr46.schubert(1) + gr46.schubert(2) * 0)
    for d in range(4):
        assert sym(d, L) == line_bundle(gr46.schubert(1) * d)


def test_sym_of_rank_two(gr24):
    E = dual(gr24.sub_bundle)
    S2 = sym(2, E)
    assert S2.rank == 3
    assert S2.c(1) == E.c(1) * 3
    # c_2(Sym^2) = 2 c_1^2 + 4 c_2 in terms of E
    assert S2.c(2) == E.c(1) ** 2 * 2 + E.c(2) * 4


def test_virtual_rank_and_errors(gr24):
    V = trivial_bundle(gr24, 1) - gr24.sub_bundle
    assert V.rank == -1
    with pytest.raises(ChowError):
        ProjBundle(V)
    with pytest.raises(ChowError):
        Grassmannian(3, 3)
    with pytest.raises(ChowError):
        gr24.one() + Grassmannian(2, 5).one()


def test_class_arithmetic(gr24):
    s1 = gr24.schubert(1)
    half = s1 / 2
    assert half.coefficient((1,)) == Fraction(1, 2)
    assert half * 2 == s1
    assert (s1 + 1).degrees() == [0, 1]
    assert (s1 ** 2).part(2) == gr24.schubert(2) + gr24.schubert(1, 1)
    assert ChowClass.from_dict(gr24, {(1,): Fraction(1, 3)}) * 3 == s1
    assert gr24.point_class().integral() == 1
