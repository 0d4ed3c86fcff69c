"""Pure-Python implementations of the combinatorial hot loops.

Objects are sorted tuples of vertex labels in ``1..m``.  The compiled
module ``_ckernels`` exports the same names with the same semantics; the
selection happens in :mod:`tropdual.kernels`.
"""

from __future__ import annotations

BACKEND = "python"


def cyclic_between(a: int, b: int, c: int, m: int) -> bool:
    """``a <= b <= c`` in the clockwise order starting at ``a``."""
    return (b - a) % m <= (c - a) % m


def shift(x: tuple, k: int, m: int) -> tuple:
    return tuple(sorted((v - 1 - k) % m + 1 for v in x))


def intertwines(x: tuple, y: tuple) -> bool:
    # Both sets have the same size, so alternation along the sorted merge
    # also holds across the wrap-around.
    i = j = 0
    nx, ny = len(x), len(y)
    if nx != ny:
        return False
    last = -1
    while i < nx or j < ny:
        if j >= ny or (i < nx and x[i] < y[j]):
            side = 0
            i += 1
        elif i >= nx or y[j] < x[i]:
            side = 1
            j += 1
        else:
            return False
        if side == last:
            return False
        last = side
    return True


def hom_dim(x: tuple, y: tuple, m: int) -> int:
    return int(intertwines(x, shift(y, -1, m)))


def hom_pairing(x: tuple, y: tuple, m: int):
    """Labelling with ``x_i <= y_i <= x_{i+1} - 2`` cyclically, or None."""
    k = len(x)
    for r in range(k):
        for i in range(k):
            upper = (x[(i + 1) % k] - 3) % m + 1
            if not cyclic_between(x[i], y[(i + r) % k], upper, m):
                break
        else:
            return [(x[i], y[(i + r) % k]) for i in range(k)]
    return None


def factors_through(x: tuple, y: tuple, z: tuple, m: int) -> int:
    """1 or 0; -1 when Hom(x, y) vanishes."""
    pairs = hom_pairing(x, y, m)
    if pairs is None:
        return -1
    k = len(z)
    for r in range(k):
        for i in range(k):
            a, b = pairs[i]
            if not cyclic_between(a, z[(i + r) % k], b, m):
                break
        else:
            return 1
    return 0


def compat_matrix(objects: list) -> list:
    """``out[i][j]`` is 1 when objects i and j do not intertwine."""
    n = len(objects)
    out = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if intertwines(objects[i], objects[j]):
                out[i][j] = out[j][i] = 0
    return out


def cliques(compat: list, size: int, limit: int = -1) -> list:
    """All index sets of ``size`` mutually compatible objects, lexicographic."""
    n = len(compat)
    found = []
    chosen = []

    def extend(start, candidates):
        if len(chosen) == size:
            found.append(tuple(chosen))
            return limit >= 0 and len(found) >= limit
        if len(chosen) + len(candidates) < size:
            return False
        for pos, i in enumerate(candidates):
            if len(chosen) + len(candidates) - pos < size:
                break
            row = compat[i]
            chosen.append(i)
            stop = extend(i + 1, [j for j in candidates[pos + 1:] if row[j]])
            chosen.pop()
            if stop:
                return True
        return False

    if size == 0:
        return [()]
    if limit != 0:
        extend(0, list(range(n)))
    return found
