# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled versions of the combinatorial hot loops in ``_pykernels``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

cdef enum:
    MAXK = 64


cdef inline int _mod(int a, int m) nogil:
    cdef int r = a % m
    return r + m if r < 0 else r


cdef inline bint _between(int a, int b, int c, int m) nogil:
    return _mod(b - a, m) <= _mod(c - a, m)


cdef int _load(object x, int* buf) except -1:
    cdef Py_ssize_t k = len(x)
    cdef Py_ssize_t i
    if k > MAXK:
        raise ValueError("object too large for the compiled kernels")
    for i in range(k):
        buf[i] = x[i]
    return <int>k


cdef void _sort(int* a, int k) nogil:
    cdef int i, j, v
    for i in range(1, k):
        v = a[i]
        j = i - 1
        while j >= 0 and a[j] > v:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = v


cdef bint _intertwines(int* x, int* y, int k) nogil:
    cdef int i = 0, j = 0, side, last = -1
    while i < k or j < k:
        if j >= k or (i < k and x[i] < y[j]):
            side = 0
            i += 1
        elif i >= k or y[j] < x[i]:
            side = 1
            j += 1
        else:
            return False
        if side == last:
            return False
        last = side
    return True


cdef bint _hom(int* x, int* y, int k, int m) nogil:
    cdef int ys[MAXK]
    cdef int i
    for i in range(k):
        ys[i] = _mod(y[i], m) + 1
    _sort(ys, k)
    return _intertwines(x, ys, k)


cdef int _pairing(int* x, int* y, int k, int m) nogil:
    """Rotation r with y[(i + r) % k] in [x_i, x_{i+1} - 2], or -1."""
    cdef int r, i, upper
    cdef bint ok
    for r in range(k):
        ok = True
        for i in range(k):
            upper = _mod(x[(i + 1) % k] - 3, m) + 1
            if not _between(x[i], y[(i + r) % k], upper, m):
                ok = False
                break
        if ok:
            return r
    return -1


def cyclic_between(int a, int b, int c, int m):
    return _between(a, b, c, m)


def shift(x, int k, int m):
    return tuple(sorted(_mod(v - 1 - k, m) + 1 for v in x))


def intertwines(x, y):
    cdef int xs[MAXK]
    cdef int ys[MAXK]
    cdef int k = _load(x, xs)
    if _load(y, ys) != k:
        return False
    return _intertwines(xs, ys, k)


def hom_dim(x, y, int m):
    cdef int xs[MAXK]
    cdef int ys[MAXK]
    cdef int k = _load(x, xs)
    _load(y, ys)
    return 1 if _hom(xs, ys, k, m) else 0


def hom_pairing(x, y, int m):
    cdef int xs[MAXK]
    cdef int ys[MAXK]
    cdef int k = _load(x, xs)
    _load(y, ys)
    cdef int r = _pairing(xs, ys, k, m)
    if r < 0:
        return None
    return [(xs[i], ys[(i + r) % k]) for i in range(k)]


def factors_through(x, y, z, int m):
    cdef int xs[MAXK]
    cdef int ys[MAXK]
    cdef int zs[MAXK]
    cdef int k = _load(x, xs)
    _load(y, ys)
    _load(z, zs)
    cdef int r = _pairing(xs, ys, k, m)
    cdef int s, i
    cdef bint ok
    if r < 0:
        return -1
    for s in range(k):
        ok = True
        for i in range(k):
            if not _between(xs[i], zs[(i + s) % k], ys[(i + r) % k], m):
                ok = False
                break
        if ok:
            return 1
    return 0


def compat_matrix(list objects):
    cdef Py_ssize_t n = len(objects)
    cdef Py_ssize_t i, j
    cdef int k
    if n == 0:
        return []
    k = len(objects[0])
    cdef int* data = <int*>malloc(n * k * sizeof(int))
    if data == NULL:
        raise MemoryError()
    out = [[1] * n for _ in range(n)]
    try:
        for i in range(n):
            _load(objects[i], data + i * k)
        for i in range(n):
            for j in range(i + 1, n):
                if _intertwines(data + i * k, data + j * k, k):
                    out[i][j] = 0
                    out[j][i] = 0
    finally:
        free(data)
    return out


cdef int _extend(unsigned char* adj, int n, int size, int* chosen, int depth,
                 int* cand, int ncand, list found, long limit) except -1:
    cdef int pos, i, j, nnext
    cdef int* nxt
    if depth == size:
        found.append(tuple([chosen[j] for j in range(size)]))
        return 1 if (limit >= 0 and len(found) >= limit) else 0
    if depth + ncand < size:
        return 0
    nxt = <int*>malloc((ncand + 1) * sizeof(int))
    if nxt == NULL:
        raise MemoryError()
    try:
        for pos in range(ncand):
            if depth + ncand - pos < size:
                break
            i = cand[pos]
            chosen[depth] = i
            nnext = 0
            for j in range(pos + 1, ncand):
                if adj[i * n + cand[j]]:
                    nxt[nnext] = cand[j]
                    nnext += 1
            if _extend(adj, n, size, chosen, depth + 1, nxt, nnext, found, limit):
                return 1
    finally:
        free(nxt)
    return 0


def cliques(list compat, int size, long limit=-1):
    cdef int n = len(compat)
    cdef int i, j
    found = []
    if size == 0:
        return [()]
    if limit == 0 or n == 0:
        return found
    cdef unsigned char* adj = <unsigned char*>malloc(n * n)
    cdef int* cand = <int*>malloc(n * sizeof(int))
    cdef int* chosen = <int*>malloc((size + 1) * sizeof(int))
    if adj == NULL or cand == NULL or chosen == NULL:
        free(adj); free(cand); free(chosen)
        raise MemoryError()
    try:
        for i in range(n):
            row = compat[i]
            cand[i] = i
            for j in range(n):
                adj[i * n + j] = 1 if row[j] else 0
        _extend(adj, n, size, chosen, 0, cand, n, found, limit)
    finally:
        free(adj)
        free(cand)
        free(chosen)
    return found
