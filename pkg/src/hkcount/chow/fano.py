"""
The curve of cubic cones on a cubic fourfold, as a zero locus on a tower of
projective bundles over Gr(4, 6).

    G  = Gr(4, 6)             3-planes P in P^5, subbundle K of rank 4
    PK = P(K) -> G            a vertex v in P,  Qt = K / O(-1) of rank 3
    PE = P(E) -> PK           E = Sym^3 Qt^*, a cubic cone with vertex v

On PE the bundle F = Sym^3 K^* - O(-1) has rank 19 and the curve is the
zero locus of a regular section of F, so it has class c_19(F).
"""

from dataclasses import dataclass

from .core import (
    ChowClass,
    ChowError,
    BundleClass,
    Grassmannian,
    ProjBundle,
    canonical_class,
    dual,
    line_bundle,
    sym,
    tensor,
)

__all__ = [
    "FanoTower",
    "OddAdjunctionIntegral",
    "build_fano_tower",
    "adjunction_integral",
    "sigma_genus",
    "discriminant_divisor_class",
    "discriminant_divisor_via_euler",
    "sigma_j_degree",
]


class OddAdjunctionIntegral(ChowError):
    pass


@dataclass
class FanoTower:
    G: Grassmannian
    PK: ProjBundle
    PE: ProjBundle
    K: BundleClass
    Qt: BundleClass
    E: BundleClass
    F: BundleClass
    y: ChowClass
    z: ChowClass

    @property
    def c1_Qt(self):
        """c_1(Qt) = c_1(K) + y, on PK."""
        return self.Qt.c(1)

    def c19_F(self):
        return self.F.c(19)


_tower = None


def build_fano_tower(cached=True):
    """Build (or reuse) the tower G <- PK <- PE and the rank-19 bundle F."""
    global _tower
    if cached and _tower is not None:
        return _tower
    G = Grassmannian(4, 6)
    K = G.sub_bundle
    PK = ProjBundle(K, "y")
    Qt = PK.quotient_bundle
    E = sym(3, dual(Qt))
    PE = ProjBundle(E, "z")
    F = sym(3, dual(K)).pullback(PE) - PE.Om1
    tower = FanoTower(G, PK, PE, K, Qt, E, F, PK.z, PE.z)
    if cached:
        _tower = tower
    return tower


def adjunction_integral(tower=None):
    """Integral over PE of c_19(F) (K_PE + c_1(F)), i.e. 2g - 2."""
    t = tower or build_fano_tower()
    return (t.F.c(19) * (canonical_class(t.PE) + t.F.c(1))).integral()


def sigma_genus(tower=None):
    value = adjunction_integral(tower)
    if value.denominator != 1 or value.numerator % 2:
        raise OddAdjunctionIntegral("adjunction integral %s is not an even integer" % value)
    return int(value) // 2 + 1


def discriminant_divisor_class(X, V, pw=None):
    """
    Class of the divisor of singular cubic curves in P(Sym^3 V^*) over X:
    12 z - 12 c_1(V).  Returns ``(PW, D)``; pass ``pw`` to reuse an
    existing P(Sym^3 V^*).
    """
    if V.rank != 3:
        raise ChowError("V must have rank 3, got %r" % (V.rank,))
    if V.space is not X:
        raise ChowError("V does not live on X")
    if pw is None:
        pw = ProjBundle(sym(3, dual(V)), "z")
    elif pw.base is not X or pw.rank != 10:
        raise ChowError("pw is not a P^9-bundle over X")
    D = pw.z * 12 - V.c(1).pullback(pw) * 12
    return pw, D


def discriminant_divisor_via_euler(X, V, pw=None):
    """
    The same divisor as the pushforward to PW of the Euler class of
    O(1, 2) tensor V^* on PW x_X P(V), the locus of (cubic, singular point).
    """
    if V.rank != 3:
        raise ChowError("V must have rank 3, got %r" % (V.rank,))
    if V.space is not X:
        raise ChowError("V does not live on X")
    if pw is None:
        pw = ProjBundle(sym(3, dual(V)), "z")
    zeta = pw.z
    v_low = V.truncate(3)
    pwv = ProjBundle(v_low.pullback(pw), "w")
    w = pwv.z
    L = line_bundle(w * 2 + zeta.pullback(pwv), prec=3)
    M = tensor(L, dual(v_low.pullback(pwv)))
    return pwv.pushforward(M.c(3))


def sigma_j_degree(tower=None, via_euler=False):
    """D . Sigma = integral over PE of c_19(F) D."""
    t = tower or build_fano_tower()
    if via_euler:
        D = discriminant_divisor_via_euler(t.PK, t.Qt, pw=t.PE)
    else:
        _, D = discriminant_divisor_class(t.PK, t.Qt, pw=t.PE)
    value = (t.F.c(19) * D).integral()
    if value.denominator != 1:
        raise ChowError("D . Sigma = %s is not an integer" % value)
    return int(value)

