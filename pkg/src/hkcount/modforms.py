"""
q-expansions of the modular and Jacobi forms used by the curve counts.

Every constructor takes the exclusive truncation order ``N`` and returns a
:class:`~hkcount.qseries.QSeries` known exactly to ``O(q^N)``.

Conventions (pinned by tests):

* ``E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n``, so ``E_2 = 1 - 24q - ...``.
* ``Theta = (y^{1/2} - y^{-1/2}) P`` with
  ``P = prod_{m>=1} (1 - q^m y)(1 - q^m y^{-1}) (1 - q^m)^{-2}``.
  Only ``Theta^2 = (y - 2 + y^{-1}) P^2`` is exposed.
* ``wp = 1/12 + y/(1-y)^2 + sum_d (sum_{k|d} k (y^k - 2 + y^{-k})) q^d``.
  Its constant term has infinite y-support, so only
  ``wp_tilde = (y - 2 + y^{-1}) wp`` is exposed.
"""

import enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from .qseries import QSeries, YLaurent, product_expansion

__all__ = [
    "SeriesName",
    "UnsupportedWeight",
    "bernoulli",
    "sigma",
    "delta",
    "inv_delta",
    "eisenstein",
    "theta4",
    "f_series",
    "g_series",
    "prodpart_sq",
    "theta_sq",
    "wp_tilde",
    "Y_SHIFT",
    "named_series",
]


class UnsupportedWeight(ValueError):
    pass


class SeriesName(enum.Enum):
    DELTA = "delta"
    INV_DELTA = "invdelta"
    E2 = "e2"
    E4 = "e4"
    THETA4 = "theta4"
    F = "f"
    G2 = "g2"
    G4 = "g4"
    THETA_SQ = "thetasq"
    WP_TILDE = "wptilde"
    PROD_PART_SQ = "prodpartsq"


#: y - 2 + 1/y
Y_SHIFT = YLaurent({1: 1, 0: -2, -1: 1})


@lru_cache(maxsize=None)
def bernoulli(k):
    """B_k with the B_1 = -1/2 convention (only even k matter here)."""
    if k == 2:
        return Fraction(1, 6)
    if k == 4:
        return Fraction(-1, 30)
    b = [Fraction(1)]
    for m in range(1, k + 1):
        b.append(-sum(comb(m + 1, j) * b[j] for j in range(m)) / (m + 1))
    return b[k]


def sigma(r, n):
    return sum(d ** r for d in range(1, n + 1) if n % d == 0)


def delta(N):
    """Discriminant form q prod (1 - q^m)^24."""
    if N < 2:
        raise ValueError("delta needs order >= 2")
    return QSeries.monomial(1, N) * product_expansion(lambda m: 24, N - 1)


def inv_delta(N):
    """1/Delta to O(q^N); starts at q^{-1}."""
    return delta(N + 2).invert()


def eisenstein(k, N):
    if k <= 0 or k % 2:
        raise UnsupportedWeight("Eisenstein series need even positive weight, got %r" % (k,))
    factor = -Fraction(2 * k) / bernoulli(k)
    coeffs = [Fraction(1)] + [factor * sigma(k - 1, n) for n in range(1, N)]
    return QSeries(coeffs, 0, N)


def theta4(N):
    """sum over all integers n of q^{n^2}."""
    terms = {0: 1}
    n = 1
    while n * n < N:
        terms[n * n] = 2
        n += 1
    return QSeries.from_dict(terms, N)


def f_series(N):
    """sum over odd n of sigma_1(n) q^n."""
    return QSeries.from_dict({n: sigma(1, n) for n in range(1, N, 2)}, N)


def g_series(k, N):
    """E_k(q^4)."""
    if k not in (2, 4):
        raise UnsupportedWeight("G_k is only defined here for k = 2, 4")
    factor = -Fraction(2 * k) / bernoulli(k)
    terms = {0: 1}
    for n in range(1, (N + 3) // 4):
        terms[4 * n] = factor * sigma(k - 1, n)
    return QSeries.from_dict(terms, N)


def prodpart_sq(N):
    """
    P^2 with P = prod (1 - q^m y)(1 - q^m/y)(1 - q^m)^{-2}.

    P is expanded by multiplying the factors one at a time on a dense
    array indexed by q-exponent; each entry is a YLaurent.
    """
    one = YLaurent({0: 1})
    coeffs = [one] + [YLaurent() for _ in range(N - 1)]
    for m in range(1, N):
        for k in (1, -1):
            # multiply by (1 - q^m y^k)
            shift = YLaurent({k: 1})
            for i in range(N - 1, m - 1, -1):
                if coeffs[i - m]:
                    coeffs[i] = coeffs[i] - coeffs[i - m] * shift
        for _ in range(2):
            # divide by (1 - q^m)
            for i in range(m, N):
                if coeffs[i - m]:
                    coeffs[i] = coeffs[i] + coeffs[i - m]
    p = QSeries(coeffs, 0, N, YLaurent)
    return p * p


def theta_sq(N):
    return prodpart_sq(N) * Y_SHIFT


def wp_tilde(N):
    """(y - 2 + 1/y) * wp, a series with finite y-support at every order."""
    terms = {0: YLaurent({0: 1}) + Y_SHIFT * Fraction(1, 12)}
    for d in range(1, N):
        inner = YLaurent()
        for k in range(1, d + 1):
            if d % k == 0:
                inner = inner + YLaurent({k: k, 0: -2 * k, -k: k})
        terms[d] = Y_SHIFT * inner
    return QSeries.from_dict(terms, N, ring=YLaurent)


_CONSTRUCTORS = {
    SeriesName.DELTA: delta,
    SeriesName.INV_DELTA: inv_delta,
    SeriesName.E2: lambda N: eisenstein(2, N),
    SeriesName.E4: lambda N: eisenstein(4, N),
    SeriesName.THETA4: theta4,
    SeriesName.F: f_series,
    SeriesName.G2: lambda N: g_series(2, N),
    SeriesName.G4: lambda N: g_series(4, N),
    SeriesName.THETA_SQ: theta_sq,
    SeriesName.WP_TILDE: wp_tilde,
    SeriesName.PROD_PART_SQ: prodpart_sq,
}


def named_series(name, N):
    """Look up a constructor by :class:`SeriesName` (or its string value)."""
    return _CONSTRUCTORS[SeriesName(name)](N)
