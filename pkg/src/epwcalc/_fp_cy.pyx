# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled F_p elimination kernels; twin of epwcalc._fp_pure."""

from libc.stdlib cimport malloc, free

BACKEND = "compiled"


cdef long long _inv(long long a, long long p):
    # extended Euclid; a is nonzero mod p
    cdef long long old_r = a % p, r = p
    cdef long long old_s = 1, s = 0
    cdef long long q, t
    while r != 0:
        q = old_r / r
        t = old_r - q * r; old_r = r; r = t
        t = old_s - q * s; old_s = s; s = t
    old_s %= p
    if old_s < 0:
        old_s += p
    return old_s


cdef long long* _load(list a, Py_ssize_t n, long long p) except NULL:
    cdef long long* m = <long long*> malloc(n * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef long long v
    for i in range(n):
        v = a[i]
        v %= p
        if v < 0:
            v += p
        m[i] = v
    return m


def rank(list a, Py_ssize_t nrows, Py_ssize_t ncols, long long p):
    cdef long long* m = _load(a, nrows * ncols, p)
    cdef Py_ssize_t r = 0, col, i, c, piv
    cdef long long inv, f, tmp
    try:
        for col in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if m[i * ncols + col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for c in range(col, ncols):
                    tmp = m[r * ncols + c]
                    m[r * ncols + c] = m[piv * ncols + c]
                    m[piv * ncols + c] = tmp
            inv = _inv(m[r * ncols + col], p)
            for i in range(r + 1, nrows):
                f = m[i * ncols + col]
                if f != 0:
                    f = f * inv % p
                    for c in range(col, ncols):
                        m[i * ncols + c] = (m[i * ncols + c] - f * m[r * ncols + c]) % p
                        if m[i * ncols + c] < 0:
                            m[i * ncols + c] += p
            r += 1
            if r == nrows:
                break
        return r
    finally:
        free(m)


def rref(list a, Py_ssize_t nrows, Py_ssize_t ncols, long long p):
    cdef long long* m = _load(a, nrows * ncols, p)
    cdef Py_ssize_t r = 0, col, i, c, piv
    cdef long long inv, f, tmp
    pivots = []
    try:
        for col in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if m[i * ncols + col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for c in range(ncols):
                    tmp = m[r * ncols + c]
                    m[r * ncols + c] = m[piv * ncols + c]
                    m[piv * ncols + c] = tmp
            inv = _inv(m[r * ncols + col], p)
            for c in range(col, ncols):
                m[r * ncols + c] = m[r * ncols + c] * inv % p
            for i in range(nrows):
                if i == r:
                    continue
                f = m[i * ncols + col]
                if f != 0:
                    for c in range(col, ncols):
                        m[i * ncols + c] = (m[i * ncols + c] - f * m[r * ncols + c]) % p
                        if m[i * ncols + c] < 0:
                            m[i * ncols + c] += p
            pivots.append(col)
            r += 1
            if r == nrows:
                break
        out = [m[i] for i in range(nrows * ncols)]
        return r, pivots, out
    finally:
        free(m)


def det(list a, Py_ssize_t n, long long p):
    cdef long long* m = _load(a, n * n, p)
    cdef Py_ssize_t col, i, c, piv
    cdef long long d = 1, inv, f, tmp, pivval
    try:
        for col in range(n):
            piv = -1
            for i in range(col, n):
                if m[i * n + col] != 0:
                    piv = i
                    break
            if piv < 0:
                return 0
            if piv != col:
                d = p - d
                for c in range(col, n):
                    tmp = m[col * n + c]
                    m[col * n + c] = m[piv * n + c]
                    m[piv * n + c] = tmp
            pivval = m[col * n + col]
            d = d * pivval % p
            inv = _inv(pivval, p)
            for i in range(col + 1, n):
                f = m[i * n + col]
                if f != 0:
                    f = f * inv % p
                    for c in range(col, n):
                        m[i * n + c] = (m[i * n + c] - f * m[col * n + c]) % p
                        if m[i * n + c] < 0:
                            m[i * n + c] += p
        return d % p
    finally:
        free(m)
