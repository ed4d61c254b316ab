"""
Chow rings of points, Grassmannians and towers of projective bundles.

A :class:`Space` carries a graded Z-basis and a multiplication on integer
coefficient vectors.  A :class:`ChowClass` is such a vector together with a
single positive denominator, so arithmetic stays exact while the inner
loops run on Python ints.

Conventions:

* Gr(k, n) parametrizes k-dimensional subspaces, with tautological
  subbundle K (rank k) and quotient Q (rank n - k); ``c_i(Q) = sigma_(i)``.
* ``P(E)`` parametrizes lines in E, so ``O(-1)`` is a subbundle of the
  pullback of E and ``z = c_1(O(1))`` satisfies
  ``z^r + c_1(E) z^{r-1} + ... + c_r(E) = 0``.  Pushforward to the base
  takes the coefficient of ``z^{r-1}``.
"""

from fractions import Fraction
from math import factorial, gcd

from .schubert import lr_product, partitions_in_box

__all__ = [
    "ChowError",
    "Space",
    "Point",
    "Grassmannian",
    "ProjBundle",
    "ChowClass",
    "BundleClass",
    "grassmannian",
    "proj_bundle",
    "integral",
    "line_bundle",
    "trivial_bundle",
    "bundle_from_chern",
    "chern_classes",
    "ch_from_chern",
    "chern_from_ch",
    "segre_classes",
    "tangent_bundle",
    "canonical_class",
    "sym",
    "dual",
    "tensor",
]


class ChowError(ValueError):
    pass


def _vec_gcd(vec):
    g = 0
    for x in vec:
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g


def _add_into(out, vec, scale=1):
    for i, x in enumerate(vec):
        if x:
            out[i] += scale * x


# ---------------------------------------------------------------------------
# spaces

class Space:
    """Base class; subclasses fill in the basis and implement ``_mul``."""

    dim = 0
    labels = ()
    degrees = ()
    unit_index = 0

    def __init__(self):
        self.size = len(self.labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self._tangent = None

    # vectors -------------------------------------------------------------

    def zero_vec(self):
        return [0] * self.size

    def _mul(self, a, b, maxdeg):
        raise NotImplementedError

    def _integrate(self, vec):
        raise NotImplementedError

    def _pullback_vec(self, vec, source):
        if source is self:
            return list(vec)
        raise ChowError("%r does not lie over %r" % (self, source))

    def lies_over(self, other):
        return other is self

    # classes -------------------------------------------------------------

    def one(self):
        v = self.zero_vec()
        v[self.unit_index] = 1
        return ChowClass(self, v)

    def zero(self):
        return ChowClass(self, self.zero_vec())

    def basis_class(self, label):
        v = self.zero_vec()
        v[self.index[label]] = 1
        return ChowClass(self, v)

    def basis_in_degree(self, d):
        return [lab for lab, deg in zip(self.labels, self.degrees) if deg == d]

    def point_class(self):
        raise NotImplementedError

    def tangent_bundle(self):
        if self._tangent is None:
            self._tangent = self._make_tangent()
        return self._tangent


class Point(Space):
    def __init__(self):
        self.dim = 0
        self.labels = ((),)
        self.degrees = (0,)
        self.unit_index = 0
        super().__init__()

    def _mul(self, a, b, maxdeg):
        return [a[0] * b[0]] if maxdeg >= 0 else [0]

    def _integrate(self, vec):
        return vec[0]

    def point_class(self):
        return self.one()

    def _make_tangent(self):
        return trivial_bundle(self, 0)

    def __repr__(self):
        return "Point()"


class Grassmannian(Space):
    """Gr(k, n) with the Schubert basis sigma_lambda, lambda in the k x (n-k) box."""

    def __init__(self, k, n):
        if not (0 < k < n):
            raise ChowError("Gr(%r, %r) needs 0 < k < n" % (k, n))
        self.k, self.n = k, n
        self.dim = k * (n - k)
        self.labels = tuple(partitions_in_box(k, n - k))
        self.degrees = tuple(sum(p) for p in self.labels)
        self.unit_index = 0
        super().__init__()
        self._table = [[None] * self.size for _ in range(self.size)]
        for i, lam in enumerate(self.labels):
            for j in range(i, self.size):
                mu = self.labels[j]
                prod = lr_product(lam, mu, k, n - k)
                row = tuple((self.index[nu], c) for nu, c in sorted(prod.items()))
                self._table[i][j] = self._table[j][i] = row
        self._top = self.index[tuple([n - k] * k)]

    def _mul(self, a, b, maxdeg):
        out = [0] * self.size
        deg = self.degrees
        bnz = [(j, bj, deg[j]) for j, bj in enumerate(b) if bj]
        if not bnz:
            return out
        table = self._table
        for i, ai in enumerate(a):
            if not ai:
                continue
            room = maxdeg - deg[i]
            if room < 0:
                continue
            row = table[i]
            for j, bj, dj in bnz:
                if dj <= room:
                    c = ai * bj
                    for kk, m in row[j]:
                        out[kk] += c * m
        return out

    def _integrate(self, vec):
        return vec[self._top]

    def schubert(self, *parts):
        return self.basis_class(tuple(p for p in parts if p))

    def point_class(self):
        return ChowClass(self, [1 if i == self._top else 0 for i in range(self.size)])

    @property
    def quotient_bundle(self):
        """Tautological quotient Q with c_i(Q) = sigma_(i)."""
        if not hasattr(self, "_quotient"):
            cs = [self.one()] + [self.schubert(i) for i in range(1, self.n - self.k + 1)]
            self._quotient = bundle_from_chern(self, self.n - self.k, cs)
        return self._quotient

    @property
    def sub_bundle(self):
        """Tautological subbundle K = C^n - Q."""
        if not hasattr(self, "_sub"):
            self._sub = trivial_bundle(self, self.n) - self.quotient_bundle
        return self._sub

    def _make_tangent(self):
        return tensor(dual(self.sub_bundle), self.quotient_bundle)

    def __repr__(self):
        return "Gr(%d,%d)" % (self.k, self.n)


class ProjBundle(Space):
    """
    P(E) -> X, lines in E.  Basis ``(x, p)`` for x in the basis of X and
    0 <= p < rank E, standing for ``pi^* x * z^p``.
    """

    def __init__(self, bundle, name="z"):
        base = bundle.space
        r = bundle.rank
        if not isinstance(r, int) or r <= 0:
            raise ChowError("projective bundle needs a positive rank, got %r" % (r,))
        if bundle.prec < min(r, base.dim):
            raise ChowError("bundle is only known to degree %d" % bundle.prec)
        self.base, self.bundle, self.rank, self.name = base, bundle, r, name
        self.dim = base.dim + r - 1
        B = base.size
        self.labels = tuple((lab, p) for p in range(r) for lab in base.labels)
        self.degrees = tuple(d + p for p in range(r) for d in base.degrees)
        self.unit_index = base.unit_index
        super().__init__()

        cs = chern_classes(bundle)
        rel = []
        for p in range(r):
            i = r - p
            if i <= base.dim and i < len(cs):
                c = cs[i]
                if c.den != 1:
                    raise ChowError("c_%d of %r is not integral" % (i, bundle))
                rel.append([-x for x in c.num])
            else:
                rel.append([0] * B)
        # reductions of z^m, m = r .. 2r - 2, in the basis 1, z, ..., z^{r-1}
        self._reductions = {r: rel}
        for m in range(r, 2 * r - 2):
            prev = self._reductions[m]
            top = prev[r - 1]
            nxt = []
            for p in range(r):
                v = list(prev[p - 1]) if p else [0] * B
                if any(top):
                    _add_into(v, base._mul(top, rel[p], base.dim))
                nxt.append(v)
            self._reductions[m + 1] = nxt

    def _slices(self, vec):
        B = self.base.size
        return [vec[p * B:(p + 1) * B] for p in range(self.rank)]

    def _mul(self, a, b, maxdeg):
        base, r, B = self.base, self.rank, self.base.size
        sa = [(p, s) for p, s in enumerate(self._slices(a)) if any(s)]
        sb = [(p, s) for p, s in enumerate(self._slices(b)) if any(s)]
        raw = {}
        for p, x in sa:
            for q, y in sb:
                m = p + q
                if m > maxdeg:
                    continue
                prod = base._mul(x, y, maxdeg - m)
                if m in raw:
                    _add_into(raw[m], prod)
                else:
                    raw[m] = prod
        out = [0] * self.size
        for m, v in raw.items():
            if not any(v):
                continue
            if m < r:
                _add_into_slice(out, v, m * B)
                continue
            red = self._reductions[m]
            for p in range(r):
                if any(red[p]):
                    _add_into_slice(out, base._mul(v, red[p], maxdeg - p), p * B)
        return out

    def _integrate(self, vec):
        B = self.base.size
        return self.base._integrate(vec[(self.rank - 1) * B:self.rank * B])

    def _pullback_vec(self, vec, source):
        if source is self:
            return list(vec)
        v = self.base._pullback_vec(vec, source)
        return v + [0] * (self.size - len(v))

    def lies_over(self, other):
        return other is self or self.base.lies_over(other)

    def point_class(self):
        v = self.base.point_class()
        return ChowClass(self, [0] * ((self.rank - 1) * self.base.size) + list(v.num), v.den)

    @property
    def z(self):
        """c_1(O(1))."""
        v = self.zero_vec()
        if self.rank > 1:
            v[self.base.size + self.base.unit_index] = 1
            return ChowClass(self, v)
        # P(L) = X: z = -c_1(L)
        return -chern_classes(self.bundle)[1].pullback(self)

    @property
    def O1(self):
        return line_bundle(self.z)

    @property
    def Om1(self):
        return line_bundle(-self.z)

    @property
    def quotient_bundle(self):
        """pi^* E / O(-1), rank r - 1."""
        return self.bundle.pullback(self) - self.Om1

    def pushforward(self, cls):
        """pi_*: the coefficient of z^{r-1} in normal form."""
        if cls.space is not self:
            raise ChowError("class does not live on %r" % (self,))
        B = self.base.size
        return ChowClass(self.base, cls.num[(self.rank - 1) * B:], cls.den)

    def _make_tangent(self):
        rel = tensor(self.O1, self.quotient_bundle)
        return self.base.tangent_bundle().pullback(self) + rel

    def __repr__(self):
        return "P(%r -> %r)" % (self.bundle.rank, self.base)


def _add_into_slice(out, vec, offset):
    for i, x in enumerate(vec):
        if x:
            out[offset + i] += x


def grassmannian(k, n):
    return Grassmannian(k, n)


def proj_bundle(bundle, name="z"):
    return ProjBundle(bundle, name)


# ---------------------------------------------------------------------------
# classes

class ChowClass:
    """An element of A*(X) tensor Q, possibly of mixed degree."""

    __slots__ = ("space", "num", "den")

    def __init__(self, space, num, den=1):
        if den <= 0:
            raise ChowError("denominator must be positive")
        g = gcd(_vec_gcd(num), den)
        if g > 1:
            num = [x // g for x in num]
            den //= g
        self.space = space
        self.num = list(num)
        self.den = den

    @classmethod
    def from_dict(cls, space, coeffs):
        coeffs = {lab: Fraction(c) for lab, c in coeffs.items()}
        den = 1
        for c in coeffs.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = space.zero_vec()
        for lab, c in coeffs.items():
            num[space.index[lab]] = int(c * den)
        return cls(space, num, den)

    # access --------------------------------------------------------------

    def coefficient(self, label):
        return Fraction(self.num[self.space.index[label]], self.den)

    def coefficients(self):
        return {lab: Fraction(x, self.den) for lab, x in zip(self.space.labels, self.num) if x}

    def is_zero(self):
        return not any(self.num)

    def __bool__(self):
        return not self.is_zero()

    def degrees(self):
        return sorted({d for d, x in zip(self.space.degrees, self.num) if x})

    def part(self, d):
        """Homogeneous component of degree d."""
        degs = self.space.degrees
        return ChowClass(self.space, [x if degs[i] == d else 0 for i, x in enumerate(self.num)], self.den)

    def truncate(self, maxdeg):
        degs = self.space.degrees
        return ChowClass(self.space, [x if degs[i] <= maxdeg else 0 for i, x in enumerate(self.num)], self.den)

    def adams(self, k):
        """Scale the degree-i part by k^i."""
        degs = self.space.degrees
        return ChowClass(self.space, [x * k ** degs[i] if x else 0 for i, x in enumerate(self.num)], self.den)

    def integral(self):
        return Fraction(self.space._integrate(self.num), self.den)

    def pullback(self, target):
        if target is self.space:
            return self
        return ChowClass(target, target._pullback_vec(self.num, self.space), self.den)

    # arithmetic ----------------------------------------------------------

    def _check(self, other):
        if other.space is not self.space:
            raise ChowError("classes live on different spaces: %r, %r" % (self.space, other.space))

    def _coerce(self, other):
        if isinstance(other, ChowClass):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.space.one() * other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self.den * other.den // gcd(self.den, other.den)
        sa, sb = d // self.den, d // other.den
        return ChowClass(self.space, [x * sa + y * sb for x, y in zip(self.num, other.num)], d)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.space, [-x for x in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def mul(self, other, maxdeg=None):
        """Product, discarding everything above ``maxdeg``."""
        self._check(other)
        if maxdeg is None:
            maxdeg = self.space.dim
        return ChowClass(self.space, self.space._mul(self.num, other.num, maxdeg), self.den * other.den)

    def __mul__(self, other):
        if isinstance(other, ChowClass):
            return self.mul(other)
        if isinstance(other, int):
            return ChowClass(self.space, [x * other for x in self.num], self.den)
        if isinstance(other, Fraction):
            return ChowClass(self.space, [x * other.numerator for x in self.num], self.den * other.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / Fraction(other))

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = self.space.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.space.one() * other
        if not isinstance(other, ChowClass):
            return NotImplemented
        return other.space is self.space and other.den == self.den and other.num == self.num

    def __hash__(self):
        return hash((id(self.space), tuple(self.num), self.den))

    def __repr__(self):
        terms = self.coefficients()
        if not terms:
            return "0"
        return " + ".join("%s*%s" % (c, _fmt_label(lab)) for lab, c in terms.items()).replace("+ -", "- ")


def _fmt_label(lab):
    if isinstance(lab, tuple) and len(lab) == 2 and isinstance(lab[1], int) and isinstance(lab[0], tuple):
        base, p = lab
        head = _fmt_label(base)
        return head if p == 0 else ("%s*z^%d" % (head, p) if head != "1" else "z^%d" % p)
    if lab == ():
        return "1"
    return "s" + "".join(map(str, lab))


def integral(cls):
    return cls.integral()


def _exp(x, maxdeg):
    """exp of a class without degree-0 part, to degree ``maxdeg``."""
    space = x.space
    parts = {d: x.part(d) for d in x.degrees() if 0 < d <= maxdeg}
    if x.part(0):
        raise ChowError("exp needs a class without constant term")
    terms = [space.one()]
    for n in range(1, maxdeg + 1):
        acc = space.zero()
        for i, li in parts.items():
            if i <= n and terms[n - i]:
                acc = acc + li.mul(terms[n - i], n) * i
        terms.append(acc / n)
    out = space.zero()
    for t in terms:
        out = out + t
    return out


# ---------------------------------------------------------------------------
# bundles

class BundleClass:
    """
    K-theory class of a (possibly virtual) vector bundle: rank and Chern
    character, the latter known up to degree ``prec``.
    """

    __slots__ = ("space", "rank", "ch", "prec", "_chern")

    def __init__(self, space, rank, ch, prec=None):
        if ch.space is not space:
            raise ChowError("Chern character lives on a different space")
        self.space = space
        self.rank = rank
        self.prec = space.dim if prec is None else min(prec, space.dim)
        self.ch = ch.truncate(self.prec)
        if self.ch.part(0) != space.one() * rank:
            raise ChowError("degree-0 part of ch must equal the rank")
        self._chern = None

    def _check(self, other):
        if not isinstance(other, BundleClass) or other.space is not self.space:
            raise ChowError("bundles live on different spaces")

    def __add__(self, other):
        self._check(other)
        return BundleClass(self.space, self.rank + other.rank, self.ch + other.ch, min(self.prec, other.prec))

    def __sub__(self, other):
        self._check(other)
        return BundleClass(self.space, self.rank - other.rank, self.ch - other.ch, min(self.prec, other.prec))

    def __neg__(self):
        return BundleClass(self.space, -self.rank, -self.ch, self.prec)

    def __mul__(self, other):
        if isinstance(other, int):
            return BundleClass(self.space, self.rank * other, self.ch * other, self.prec)
        return tensor(self, other)

    __rmul__ = __mul__

    def dual(self):
        return BundleClass(self.space, self.rank, self.ch.adams(-1), self.prec)

    def truncate(self, prec):
        return BundleClass(self.space, self.rank, self.ch, min(prec, self.prec))

    def pullback(self, target):
        if target is self.space:
            return self
        # a Chern character known to the top degree stays complete
        prec = target.dim if self.prec >= self.space.dim else self.prec
        return BundleClass(target, self.rank, self.ch.pullback(target), prec)

    def chern_classes(self):
        if self._chern is None:
            self._chern = chern_from_ch(self.ch, self.prec)
        return self._chern

    def c(self, i):
        cs = self.chern_classes()
        if i < 0:
            raise ChowError("negative Chern class index")
        return cs[i] if i < len(cs) else self.space.zero()

    def total_chern(self):
        out = self.space.zero()
        for c in self.chern_classes():
            out = out + c
        return out

    def __eq__(self, other):
        if not isinstance(other, BundleClass):
            return NotImplemented
        return (self.space is other.space and self.rank == other.rank
                and self.ch.truncate(min(self.prec, other.prec)) == other.ch.truncate(min(self.prec, other.prec)))

    __hash__ = None

    def __repr__(self):
        return "BundleClass(rank=%r on %r)" % (self.rank, self.space)


def trivial_bundle(space, rank):
    return BundleClass(space, rank, space.one() * rank)


def line_bundle(c1, prec=None):
    """Line bundle with first Chern class ``c1``."""
    space = c1.space
    prec = space.dim if prec is None else min(prec, space.dim)
    return BundleClass(space, 1, _exp(c1, prec), prec)


def dual(E):
    return E.dual()


def tensor(E, F):
    E._check(F)
    prec = min(E.prec, F.prec)
    return BundleClass(E.space, E.rank * F.rank, E.ch.mul(F.ch, prec), prec)


def sym(d, E):
    """
    Symmetric power via sum_d ch(Sym^d E) t^d = exp(sum_k t^k/k psi^k ch E),
    unrolled as d h_d = sum_{k=1}^d psi^k(ch E) h_{d-k}.
    """
    if d < 0:
        raise ChowError("negative symmetric power")
    space, prec = E.space, E.prec
    psi = [None] + [E.ch.adams(k) for k in range(1, d + 1)]
    h = [space.one()]
    for n in range(1, d + 1):
        acc = space.zero()
        for k in range(1, n + 1):
            acc = acc + psi[k].mul(h[n - k], prec)
        h.append(acc / n)
    rank = _binom_rank(E.rank, d)
    return BundleClass(space, rank, h[d], prec)


def _binom_rank(r, d):
    # rank of Sym^d of a rank-r class: binomial(r + d - 1, d), also for virtual r
    num = 1
    for i in range(d):
        num *= r + i
    return num // factorial(d)


def chern_from_ch(ch, prec=None):
    """
    [c_0, ..., c_prec] from the Chern character via Newton's identities
    k c_k = sum_{i=1}^k (-1)^{i-1} p_i c_{k-i}, p_i = i! ch_i.
    """
    space = ch.space
    if prec is None:
        prec = space.dim
    p = [None] + [ch.part(i) * factorial(i) for i in range(1, prec + 1)]
    c = [space.one()]
    for k in range(1, prec + 1):
        acc = space.zero()
        for i in range(1, k + 1):
            if p[i] and c[k - i]:
                term = p[i].mul(c[k - i], k)
                acc = acc + term if i % 2 else acc - term
        c.append(acc / k)
    return c


def ch_from_chern(rank, cs, prec=None):
    """Inverse of :func:`chern_from_ch`; ``cs[i]`` is c_i (cs[0] ignored)."""
    space = cs[0].space
    if prec is None:
        prec = space.dim
    c = list(cs) + [space.zero()] * (prec + 1 - len(cs))
    p = [None]
    for k in range(1, prec + 1):
        acc = c[k] * (k if k % 2 else -k)
        for i in range(1, k):
            if c[k - i] and p[i]:
                term = c[k - i].mul(p[i], k)
                acc = acc + term if (k - 1 + i) % 2 == 0 else acc - term
        p.append(acc)
    ch = space.one() * rank
    for k in range(1, prec + 1):
        ch = ch + p[k] / factorial(k)
    return ch


def bundle_from_chern(space, rank, cs, prec=None):
    prec = space.dim if prec is None else prec
    return BundleClass(space, rank, ch_from_chern(rank, cs, prec), prec)


def chern_classes(E):
    return E.chern_classes()


def segre_classes(E):
    """s(E) = 1/c(E), degree by degree."""
    c = E.chern_classes()
    space = E.space
    s = [space.one()]
    for k in range(1, E.prec + 1):
        acc = space.zero()
        for i in range(1, k + 1):
            if i < len(c) and c[i] and s[k - i]:
                acc = acc - c[i].mul(s[k - i], k)
        s.append(acc)
    return s


def tangent_bundle(space):
    return space.tangent_bundle()


def canonical_class(space):
    return -tangent_bundle(space).c(1)
