"""
Exact truncated Laurent series in one variable q.

Coefficients live either in the rationals (``fractions.Fraction``) or in
:class:`YLaurent`, finite Laurent polynomials in a second variable y.  A
series knows both its valuation and its truncation order, and every
operation propagates the order honestly: nothing is ever silently extended.

    >>> q = QSeries.monomial(1, order=4)
    >>> (1 - q).invert()
    1 + q + q^2 + q^3 + O(q^4)
"""

from fractions import Fraction
from numbers import Rational as _Rational

__all__ = [
    "Rational",
    "YLaurent",
    "QSeries",
    "SeriesError",
    "NonUnitLeadingCoefficient",
    "OrderExceeded",
    "product_expansion",
    "y_coefficient",
]

Rational = Fraction


class SeriesError(ArithmeticError):
    pass


class NonUnitLeadingCoefficient(SeriesError):
    pass


class OrderExceeded(SeriesError, IndexError):
    pass


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _Rational)):
        return Fraction(x)
    raise TypeError("expected an exact rational, got %r" % (x,))


class YLaurent:
    """
    Finite Laurent polynomial in y with rational coefficients.

    Stored sparsely as a sorted tuple of ``(exponent, coefficient)`` pairs
    without zeros.  Instances are immutable and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        self._terms = tuple(sorted((int(k), _frac(c)) for k, c in terms.items() if c != 0))

    @classmethod
    def _raw(cls, items):
        obj = cls.__new__(cls)
        obj._terms = tuple(sorted((k, c) for k, c in items if c))
        return obj

    @classmethod
    def monomial(cls, k, c=1):
        return cls({k: c})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, YLaurent):
            return x
        return cls({0: _frac(x)})

    # -- access -------------------------------------------------------------

    def terms(self):
        return dict(self._terms)

    def __getitem__(self, k):
        for e, c in self._terms:
            if e == k:
                return c
        return Fraction(0)

    def support(self):
        return [k for k, _ in self._terms]

    def __bool__(self):
        return bool(self._terms)

    def is_unit(self):
        return len(self._terms) == 1

    def evaluate(self, y):
        """Value at a nonzero rational ``y``."""
        y = _frac(y)
        return sum((c * y ** k for k, c in self._terms), Fraction(0))

    def invert_y(self):
        """The substitution y -> 1/y."""
        return YLaurent._raw((-k, c) for k, c in self._terms)

    def negate_y(self):
        """The substitution y -> -y."""
        return YLaurent._raw((k, -c if k % 2 else c) for k, c in self._terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, YLaurent):
            try:
                other = YLaurent.coerce(other)
            except TypeError:
                return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms:
            out[k] = out.get(k, 0) + c
        return YLaurent._raw(out.items())

    __radd__ = __add__

    def __neg__(self):
        return YLaurent._raw((k, -c) for k, c in self._terms)

    def __sub__(self, other):
        if not isinstance(other, YLaurent):
            try:
                other = YLaurent.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, YLaurent):
            try:
                c = _frac(other)
            except TypeError:
                return NotImplemented
            return YLaurent._raw((k, a * c) for k, a in self._terms)
        out = {}
        for k1, c1 in self._terms:
            for k2, c2 in other._terms:
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return YLaurent._raw(out.items())

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, YLaurent):
            return self * other.inverse()
        return self * (1 / _frac(other))

    def inverse(self):
        if not self.is_unit():
            raise NonUnitLeadingCoefficient("%r is not a monomial" % (self,))
        (k, c), = self._terms
        return YLaurent._raw([(-k, 1 / c)])

    def __eq__(self, other):
        if isinstance(other, YLaurent):
            return self._terms == other._terms
        try:
            return self._terms == YLaurent.coerce(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in reversed(self._terms):
            mono = "" if k == 0 else ("y" if k == 1 else "y^%d" % k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (c, mono))
        return " + ".join(parts).replace("+ -", "- ")


def _zero_like(ring):
    return YLaurent() if ring is YLaurent else Fraction(0)


def _coerce_to(ring, c):
    if ring is YLaurent:
        return YLaurent.coerce(c)
    return _frac(c)


class QSeries:
    """
    Truncated Laurent series ``sum_{n=v}^{N-1} a_n q^n + O(q^N)``.

    ``valuation`` is the lowest exponent with a nonzero coefficient (leading
    zeros are stripped on construction, so it equals ``order`` for a series
    that vanishes to its precision).  ``ring`` is ``Fraction`` or
    ``YLaurent``.
    """

    __slots__ = ("valuation", "order", "coeffs", "ring")

    def __init__(self, coeffs, valuation=0, order=None, ring=None):
        coeffs = list(coeffs)
        if ring is None:
            ring = YLaurent if any(isinstance(c, YLaurent) for c in coeffs) else Fraction
        if order is None:
            order = valuation + len(coeffs)
        if len(coeffs) > order - valuation:
            coeffs = coeffs[: max(order - valuation, 0)]
        coeffs = [_coerce_to(ring, c) for c in coeffs]
        coeffs.extend(_zero_like(ring) for _ in range(order - valuation - len(coeffs)))
        start = 0
        while start < len(coeffs) and not coeffs[start]:
            start += 1
        self.valuation = valuation + start if start < len(coeffs) else order
        self.order = order
        self.coeffs = tuple(coeffs[start:])
        self.ring = ring

    # -- construction -------------------------------------------------------

    @classmethod
    def from_dict(cls, terms, order, ring=Fraction):
        if not terms:
            return cls([], valuation=order, order=order, ring=ring)
        v = min(min(terms), order)
        coeffs = [terms.get(n, 0) for n in range(v, order)]
        return cls(coeffs, valuation=v, order=order, ring=ring)

    @classmethod
    def monomial(cls, n, order, c=1, ring=Fraction):
        return cls.from_dict({n: c}, order, ring=ring)

    @classmethod
    def constant(cls, c, order, ring=None):
        if ring is None:
            ring = YLaurent if isinstance(c, YLaurent) else Fraction
        return cls.from_dict({0: c}, order, ring=ring)

    @classmethod
    def zero(cls, order, ring=Fraction):
        return cls([], valuation=order, order=order, ring=ring)

    # -- access -------------------------------------------------------------

    def __getitem__(self, n):
        return self.coefficient(n)

    def coefficient(self, n):
        if n >= self.order:
            raise OrderExceeded("coefficient of q^%d requested but series is O(q^%d)" % (n, self.order))
        if n < self.valuation:
            return _zero_like(self.ring)
        return self.coeffs[n - self.valuation]

    def items(self):
        """(exponent, coefficient) pairs for the nonzero terms."""
        return [(self.valuation + i, c) for i, c in enumerate(self.coeffs) if c]

    def is_zero(self):
        return not self.coeffs

    def truncate(self, order):
        if order > self.order:
            raise OrderExceeded("cannot extend a series known to O(q^%d) to O(q^%d)" % (self.order, order))
        return QSeries(self.coeffs, self.valuation, order, self.ring)

    def lift(self):
        """The same series with coefficients promoted to :class:`YLaurent`."""
        if self.ring is YLaurent:
            return self
        return QSeries([YLaurent.coerce(c) for c in self.coeffs], self.valuation, self.order, YLaurent)

    def map_coefficients(self, f, ring=None):
        return QSeries([f(c) for c in self.coeffs], self.valuation, self.order, ring or self.ring)

    # -- arithmetic ---------------------------------------------------------

    def _check_ring(self, other):
        if self.ring is not other.ring:
            raise TypeError("coefficient rings differ: %s vs %s" % (self.ring.__name__, other.ring.__name__))

    def _scalar(self, c):
        return QSeries([a * c for a in self.coeffs], self.valuation, self.order, self.ring)

    def __add__(self, other):
        if not isinstance(other, QSeries):
            if isinstance(other, (int, Fraction, YLaurent)):
                other = QSeries.constant(_coerce_to(self.ring, other), self.order, self.ring)
            else:
                return NotImplemented
        self._check_ring(other)
        order = min(self.order, other.order)
        v = min(self.valuation, other.valuation, order)
        out = [_zero_like(self.ring)] * (order - v)
        for src in (self, other):
            for i, c in enumerate(src.coeffs):
                n = src.valuation + i
                if n >= order:
                    break
                out[n - v] = out[n - v] + c
        return QSeries(out, v, order, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.valuation, self.order, self.ring)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, YLaurent)):
            return self + (-other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            if isinstance(other, (int, Fraction)):
                return self._scalar(_frac(other))
            if isinstance(other, YLaurent):
                if self.ring is not YLaurent:
                    raise TypeError("lift the series before multiplying by a YLaurent")
                return self._scalar(other)
            return NotImplemented
        self._check_ring(other)
        order = min(self.order + other.valuation, other.order + self.valuation)
        v = self.valuation + other.valuation
        if v >= order:
            return QSeries.zero(order, self.ring)
        length = order - v
        zero = _zero_like(self.ring)
        out = [zero] * length
        a, b = self.coeffs, other.coeffs
        for i in range(min(len(a), length)):
            ai = a[i]
            if not ai:
                continue
            for j in range(min(len(b), length - i)):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return QSeries(out, v, order, self.ring)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.invert()
        if isinstance(other, YLaurent):
            return self * other.inverse()
        return self._scalar(1 / _frac(other))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.invert() ** (-e)
        if e == 0:
            return QSeries.constant(_coerce_to(self.ring, 1), self.order - self.valuation, self.ring)
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert(self):
        """Multiplicative inverse; the leading coefficient must be a unit."""
        if self.is_zero():
            raise NonUnitLeadingCoefficient("series vanishes to its precision O(q^%d)" % self.order)
        lead = self.coeffs[0]
        if isinstance(lead, YLaurent):
            if not lead.is_unit():
                raise NonUnitLeadingCoefficient("leading coefficient %r is not a monomial in y" % (lead,))
            inv0 = lead.inverse()
        else:
            inv0 = 1 / lead
        rel = self.order - self.valuation
        a = self.coeffs
        b = [inv0]
        for n in range(1, rel):
            acc = _zero_like(self.ring)
            for i in range(1, min(n, len(a) - 1) + 1):
                if a[i]:
                    acc = acc + a[i] * b[n - i]
            b.append(-(inv0 * acc))
        v = -self.valuation
        return QSeries(b, v, v + rel, self.ring)

    def q_derivative(self):
        """The operator q d/dq: a_n q^n -> n a_n q^n."""
        return QSeries(
            [c * (self.valuation + i) for i, c in enumerate(self.coeffs)],
            self.valuation, self.order, self.ring,
        )

    def substitute_power(self, m):
        """q -> q^m for a positive integer m."""
        if m < 1:
            raise ValueError("substitution power must be positive")
        zero = _zero_like(self.ring)
        out = []
        for i, c in enumerate(self.coeffs):
            if i:
                out.extend([zero] * (m - 1))
            out.append(c)
        return QSeries(out, self.valuation * m, self.order * m, self.ring)

    def substitute_negate(self):
        """q -> -q."""
        return QSeries(
            [c if (self.valuation + i) % 2 == 0 else -c for i, c in enumerate(self.coeffs)],
            self.valuation, self.order, self.ring,
        )

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QSeries):
            return (self.ring is other.ring and self.order == other.order
                    and self.valuation == other.valuation and self.coeffs == other.coeffs)
        return NotImplemented

    def __hash__(self):
        return hash((self.valuation, self.order, self.coeffs))

    def agrees_with(self, other, order=None):
        """True if both series agree up to ``order`` (default: common precision)."""
        if order is None:
            order = min(self.order, other.order)
        return all(self.coefficient(n) == other.coefficient(n)
                   for n in range(min(self.valuation, other.valuation), order))

    def __repr__(self):
        parts = []
        for n, c in self.items():
            mono = "" if n == 0 else ("q" if n == 1 else "q^%d" % n)
            if isinstance(c, YLaurent):
                cs = "(%r)" % c if len(c.support()) > 1 else repr(c)
            else:
                cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (cs, mono))
        parts.append("O(q^%d)" % self.order)
        return " + ".join(parts).replace("+ -", "- ")


def product_expansion(exponents, order):
    """
    Expand ``prod_{m >= 1} (1 - q^m)^{e_m}`` to ``O(q^order)``.

    ``exponents`` is a mapping ``m -> e_m`` or a callable ``m -> e_m``;
    exponents may be negative.
    """
    get = exponents if callable(exponents) else (lambda m: exponents.get(m, 0))
    n = max(order, 0)
    coeffs = [0] * n
    if n:
        coeffs[0] = 1
    for m in range(1, n):
        e = get(m)
        if e == 0:
            continue
        if e > 0:
            # multiply by (1 - q^m), e times
            for _ in range(e):
                for i in range(n - 1, m - 1, -1):
                    coeffs[i] -= coeffs[i - m]
        else:
            # divide by (1 - q^m): running sum along the residue class
            for _ in range(-e):
                for i in range(m, n):
                    coeffs[i] += coeffs[i - m]
    return QSeries(coeffs, 0, order)


def y_coefficient(series, n, k):
    """Coefficient of q^n y^k in a two-variable series."""
    c = series.coefficient(n)
    if isinstance(c, YLaurent):
        return c[k]
    return c if k == 0 else Fraction(0)
