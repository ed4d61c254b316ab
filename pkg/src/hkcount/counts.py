"""
Generating series for elliptic curves of minimal degree with fixed general
j-invariant on K3 surfaces and on hyper-Kaehler fourfolds of K3^[2]-type.

The K3 counts come from the rational-curve series 1/Delta:

    sum_h n_{K3,h} q^{h-1} = 1/Delta + q d/dq (1/Delta) = (N - C) / 2

with N = 2 q d/dq (1/Delta) and C = -2/Delta.

The K3^[2] counts are computed twice, from a weak Jacobi form of index 1
in (q, y) and from a quotient of quasi-modular forms for Gamma_0(4); the
two must agree coefficient by coefficient.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import modforms as mf
from .qseries import QSeries, SeriesError, y_coefficient

__all__ = [
    "CountError",
    "BracketValuationMismatch",
    "RepresentativeOutOfRange",
    "JacobiIndexViolation",
    "NonIntegralCount",
    "K3Row",
    "K3TwoRow",
    "CountSeries",
    "k3_gw_series",
    "n_k3_series",
    "jacobi_formula_raw",
    "n_k3two_jacobi",
    "n_k3two_gamma0",
    "representatives",
    "n_k3two",
    "table1",
    "table2",
    "jacobi_order_for",
]


class CountError(SeriesError):
    pass


class BracketValuationMismatch(CountError):
    pass


class RepresentativeOutOfRange(CountError):
    pass


class JacobiIndexViolation(CountError):
    pass


class NonIntegralCount(CountError):
    pass


@dataclass(frozen=True)
class K3Row:
    h: int
    bb_square: int
    count: Fraction


@dataclass(frozen=True)
class K3TwoRow:
    s: int
    representative: tuple
    count: Fraction

    @property
    def bb_square(self):
        return Fraction(self.s, 2)


@dataclass(frozen=True)
class CountSeries:
    kind: str
    series: QSeries


def _integral(value, what):
    value = Fraction(value)
    if value.denominator != 1:
        raise NonIntegralCount("%s = %s is not an integer" % (what, value))
    return value


# -- K3 surfaces -------------------------------------------------------------

def k3_gw_series(N):
    """The series N_K3 = 2 q d/dq (1/Delta) and C_K3 = -2/Delta, to O(q^N)."""
    inv = mf.inv_delta(N)
    return (CountSeries("N_K3", inv.q_derivative() * 2),
            CountSeries("C_K3", inv * -2))


def n_k3_series(N):
    """sum_h n_{K3,h} q^{h-1} to O(q^N), checked against (N - C)/2."""
    if N < 1:
        raise ValueError("order must be at least 1")
    inv = mf.inv_delta(N)
    n = inv + inv.q_derivative()
    big_n, big_c = k3_gw_series(N)
    bridge = (big_n.series - big_c.series) / 2
    if bridge != n:
        raise CountError("n_K3 differs from (N - C)/2")
    return n


def table1(hmax):
    series = n_k3_series(hmax + 2)
    rows = []
    for h in range(hmax + 1):
        count = _integral(series.coefficient(h - 1), "n_K3,%d" % h)
        rows.append(K3Row(h, 2 * h - 2, count))
    return rows


# -- K3^[2]-type: Jacobi form route -----------------------------------------

def jacobi_formula_raw(N):
    """
    Theta^2/Delta * [54 wp E2 - 9/4 E2^2 + 3/4 E4 - 54 wp + 15/2 E2 - 6]
    in the conventions of :mod:`hkcount.modforms`, to O(q^N).

    Rearranged so that every intermediate series has finite y-support:

        (P^2/Delta) * [54 wp~ (E2 - 1) + (y - 2 + 1/y)(-9/4 E2^2 + 3/4 E4 + 15/2 E2 - 6)]

    The scalar part of the bracket vanishes at q^0, which cancels the
    pole of 1/Delta.
    """
    M = N + 1
    e2 = mf.eisenstein(2, M)
    e4 = mf.eisenstein(4, M)
    scalar = e2 * e2 * Fraction(-9, 4) + e4 * Fraction(3, 4) + e2 * Fraction(15, 2) - 6
    bracket = mf.wp_tilde(M) * (e2 - 1).lift() * 54 + scalar.lift() * mf.Y_SHIFT
    if bracket.valuation < 1:
        raise BracketValuationMismatch("Jacobi bracket does not vanish at q^0")
    return (mf.prodpart_sq(M) * mf.inv_delta(N).lift() * bracket).truncate(N)


def n_k3two_jacobi(N):
    """
    sum n_{K3[2],(4n-k^2)/2} q^n y^k to O(q^N).

    The counting variable is y = -p where p is the elliptic variable of
    Theta and wp, and the raw formula carries a factor -2 relative to the
    counts (fixed by the constant term 648).
    """
    raw = jacobi_formula_raw(N)
    return raw.map_coefficients(lambda c: c.negate_y() * Fraction(-1, 2))


def _gamma0_raw(N):
    """Right-hand side of the Gamma_0(4) identity, i.e. n_K3[2](-q), to O(q^N)."""
    M = N + 5
    th = mf.theta4(M)
    f = mf.f_series(M)
    g2 = mf.g_series(2, M)
    g4 = mf.g_series(4, M)
    denom = f * th * mf.delta((M + 3) // 4 + 2).substitute_power(4)
    bracket = ((th ** 4 + f * 4) * (g2 - 1) * Fraction(-9, 4) - g4 * Fraction(3, 8)
               + g2 * g2 * Fraction(9, 8) - g2 * Fraction(15, 4) + 3)
    if bracket.valuation != denom.valuation:
        raise BracketValuationMismatch(
            "bracket has valuation %d, denominator %d" % (bracket.valuation, denom.valuation))
    return (bracket * denom.invert()).truncate(N)


def n_k3two_gamma0(N):
    """n_K3[2](q) = sum_s n_{K3[2],s} q^s to O(q^N)."""
    return _gamma0_raw(N).substitute_negate()


def representatives(s, N):
    """All (n, k) with k >= 0, 4n - k^2 = s and 0 <= n < N, smallest n first."""
    out = []
    k = 0
    while True:
        num = s + k * k
        if num >= 4 * N:
            break
        if num >= 0 and num % 4 == 0:
            out.append((num // 4, k))
        k += 1
    return out


def jacobi_order_for(smax):
    """q-order for the Jacobi route to reach every s <= smax with headroom."""
    return (smax + 3) // 4 + 3


def n_k3two(s, N, series=None):
    """
    n_{K3[2],s} read off the Jacobi expansion at its minimal representative,
    cross-checked against the next representative when it fits under O(q^N).
    Classes with s = 1, 2 mod 4 do not exist and get count 0.
    """
    if s % 4 in (1, 2):
        return Fraction(0)
    if series is None:
        series = n_k3two_jacobi(N)
    reps = representatives(s, min(N, series.order))
    if not reps:
        raise RepresentativeOutOfRange("no (n, k) with 4n - k^2 = %d and n < %d" % (s, N))
    value = y_coefficient(series, *reps[0])
    for n, k in reps[1:2]:
        other = y_coefficient(series, n, k)
        if other != value:
            raise JacobiIndexViolation(
                "coefficients at %r and %r differ: %s != %s" % (reps[0], (n, k), value, other))
    return _integral(value, "n_K3[2],%d" % s)


def table2(smax, method="jacobi"):
    """Rows s = 0, 3, 4, 7, ... <= smax; method is 'jacobi', 'gamma0' or 'both'."""
    if method not in ("jacobi", "gamma0", "both"):
        raise ValueError("unknown method %r" % (method,))
    svals = [s for s in range(smax + 1) if s % 4 in (0, 3)]
    N = jacobi_order_for(smax)
    jac = gam = None
    if method in ("jacobi", "both"):
        series = n_k3two_jacobi(N)
        jac = [K3TwoRow(s, representatives(s, N)[0], n_k3two(s, N, series)) for s in svals]
    if method in ("gamma0", "both"):
        series = n_k3two_gamma0(smax + 1)
        gam = []
        for s in svals:
            rep = representatives(s, N)[0]
            gam.append(K3TwoRow(s, rep, _integral(series.coefficient(s), "n_K3[2],%d" % s)))
    if method == "both" and jac != gam:
        bad = [(a.s, a.count, b.count) for a, b in zip(jac, gam) if a != b]
        raise CountError("Jacobi and Gamma_0(4) routes disagree at %r" % (bad,))
    return jac if jac is not None else gam
