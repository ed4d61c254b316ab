"""
Partitions and Littlewood-Richardson coefficients for Schubert calculus.

Products are truncated to the k x (n-k) box of Gr(k, n).  Coefficients are
memoized in-process; if ``HKCOUNT_LR_CACHE`` names a file, products are also
persisted there as JSON between runs.
"""

import json
import os
import threading

__all__ = [
    "partitions_in_box",
    "lr_coefficients",
    "lr_product",
    "pieri",
    "LRCache",
    "default_cache",
    "box_complement",
]


def _strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def partitions_in_box(rows, cols):
    """All partitions with at most ``rows`` parts, each at most ``cols``, by size."""
    out = []

    def rec(prefix, maxpart):
        out.append(tuple(prefix))
        if len(prefix) == rows:
            return
        for part in range(1, maxpart + 1):
            prefix.append(part)
            rec(prefix, part)
            prefix.pop()

    rec([], cols)
    out.sort(key=lambda p: (sum(p), tuple(-x for x in p)))
    return out


def _horizontal_strips(shape, m, rows, cols):
    """Shapes obtained from ``shape`` by adding a horizontal strip of m cells."""
    shape = list(shape) + [0] * (rows - len(shape))

    def rec(i, remaining, acc):
        if i == rows:
            if remaining == 0:
                yield acc
            return
        upper = cols if i == 0 else shape[i - 1]
        room = min(upper - shape[i], remaining)
        for a in range(room, -1, -1):
            yield from rec(i + 1, remaining - a, acc + [a])

    for adds in rec(0, m, []):
        yield adds


def lr_coefficients(lam, mu, rows, cols):
    """
    ``{nu: c^nu_{lam,mu}}`` for nu inside the rows x cols box.

    Counts LR tableaux of shape nu/lam and content mu: mu_1 ones, mu_2 twos,
    ... each forming a horizontal strip, whose reverse reading word is a
    lattice word.
    """
    lam, mu = _strip(lam), _strip(mu)
    result = {}
    base = list(lam) + [0] * (rows - len(lam))
    if len(lam) > rows or (lam and lam[0] > cols):
        return result

    def rec(label, shape, filling):
        if label > len(mu):
            if _is_lattice(filling, rows):
                nu = _strip(shape)
                result[nu] = result.get(nu, 0) + 1
            return
        for adds in _horizontal_strips(shape, mu[label - 1], rows, cols):
            new_shape = [s + a for s, a in zip(shape, adds)]
            new_fill = [row + [label] * a for row, a in zip(filling, adds)]
            rec(label + 1, new_shape, new_fill)

    rec(1, base, [[] for _ in range(rows)])
    return result


def _is_lattice(filling, rows):
    counts = {}
    for i in range(rows):
        for label in reversed(filling[i]):
            counts[label] = counts.get(label, 0) + 1
            if label > 1 and counts[label] > counts.get(label - 1, 0):
                return False
    return True


def pieri(lam, i, rows, cols):
    """sigma_lam * sigma_(i): add i boxes, no two in one column."""
    lam = _strip(lam)
    out = {}
    for adds in _horizontal_strips(lam, i, rows, cols):
        shape = list(lam) + [0] * (rows - len(lam))
        out[_strip([s + a for s, a in zip(shape, adds)])] = 1
    return out


class LRCache:
    """Thread-safe memo table for boxed LR products, optionally file-backed."""

    def __init__(self, path=None):
        self.path = path
        self._table = {}
        self._lock = threading.Lock()
        self._dirty = False
        if path and os.path.exists(path):
            with open(path) as fh:
                raw = json.load(fh)
            for key, val in raw.items():
                self._table[key] = {tuple(nu): c for nu, c in val}

    @staticmethod
    def _key(lam, mu, rows, cols):
        if lam > mu:
            lam, mu = mu, lam
        return "%s|%s|%d|%d" % (",".join(map(str, lam)), ",".join(map(str, mu)), rows, cols)

    def get(self, lam, mu, rows, cols):
        lam, mu = _strip(lam), _strip(mu)
        key = self._key(lam, mu, rows, cols)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        val = lr_coefficients(lam, mu, rows, cols)
        with self._lock:
            self._table.setdefault(key, val)
            self._dirty = True
        return val

    def __len__(self):
        return len(self._table)

    def save(self):
        if not self.path or not self._dirty:
            return
        with self._lock:
            data = {k: sorted([list(nu), c] for nu, c in v.items()) for k, v in sorted(self._table.items())}
            tmp = self.path + ".tmp"
            with open(tmp, "w") as fh:
                json.dump(data, fh, sort_keys=True)
            os.replace(tmp, self.path)
            self._dirty = False


_default = None
_default_lock = threading.Lock()


def default_cache():
    global _default
    with _default_lock:
        if _default is None:
            _default = LRCache(os.environ.get("HKCOUNT_LR_CACHE") or None)
        return _default


def lr_product(lam, mu, rows, cols, cache=None):
    """sigma_lam * sigma_mu in Gr(rows, rows + cols) as ``{nu: coefficient}``."""
    return (cache or default_cache()).get(lam, mu, rows, cols)


def box_complement(lam, rows, cols):
    """The partition dual to ``lam`` in the rows x cols box."""
    lam = list(_strip(lam)) + [0] * rows
    return _strip(cols - lam[rows - 1 - i] for i in range(rows))
