# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p kernels.  Same contracts as `brownalg._modkernel_py`."""

from libc.stdlib cimport malloc, free


cdef long long mod_inv(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt; t = newt; newt = tmp
        tmp = r - q * newr; r = newr; newr = tmp
    if t < 0:
        t += p
    return t


def bilinear_apply(ti, tj, tk, tc, x, y, int n_out, long long p):
    cdef Py_ssize_t ne = len(ti), i
    cdef Py_ssize_t nx = len(x), ny = len(y)
    cdef long long *cx = <long long *> malloc(nx * sizeof(long long))
    cdef long long *cy = <long long *> malloc(ny * sizeof(long long))
    cdef long long *co = <long long *> malloc(n_out * sizeof(long long))
    cdef int *ci = <int *> malloc(ne * sizeof(int))
    cdef int *cj = <int *> malloc(ne * sizeof(int))
    cdef int *ck = <int *> malloc(ne * sizeof(int))
    cdef long long *cc = <long long *> malloc(ne * sizeof(long long))
    if not (cx and cy and co and ci and cj and ck and cc):
        raise MemoryError()
    cdef long long xv, yv
    cdef int k
    try:
        for i in range(nx):
            cx[i] = x[i]
        for i in range(ny):
            cy[i] = y[i]
        for i in range(n_out):
            co[i] = 0
        for i in range(ne):
            ci[i] = ti[i]; cj[i] = tj[i]; ck[i] = tk[i]; cc[i] = tc[i]
        for i in range(ne):
            xv = cx[ci[i]]
            if xv:
                yv = cy[cj[i]]
                if yv:
                    k = ck[i]
                    co[k] = (co[k] + cc[i] * (xv * yv % p)) % p
        return tuple([co[i] for i in range(n_out)])
    finally:
        free(cx); free(cy); free(co); free(ci); free(cj); free(ck); free(cc)


def mat_mul(a, b, long long p):
    cdef Py_ssize_t m = len(a), n = len(b), k = len(b[0]) if n else 0
    cdef Py_ssize_t i, j, t
    cdef long long *ca = <long long *> malloc(m * n * sizeof(long long))
    cdef long long *cb = <long long *> malloc(n * k * sizeof(long long))
    cdef long long acc
    if not (ca and cb):
        raise MemoryError()
    try:
        for i in range(m):
            row = a[i]
            for j in range(n):
                ca[i * n + j] = row[j]
        for i in range(n):
            row = b[i]
            for j in range(k):
                cb[i * k + j] = row[j]
        out = []
        for i in range(m):
            orow = []
            for j in range(k):
                acc = 0
                for t in range(n):
                    acc = (acc + ca[i * n + t] * cb[t * k + j]) % p
                orow.append(acc)
            out.append(tuple(orow))
        return tuple(out)
    finally:
        free(ca); free(cb)


def mat_vec(a, v, long long p):
    cdef Py_ssize_t m = len(a), n = len(v)
    cdef Py_ssize_t i, j
    cdef long long acc
    cdef long long *cv = <long long *> malloc(n * sizeof(long long))
    if not cv:
        raise MemoryError()
    try:
        for j in range(n):
            cv[j] = v[j]
        out = []
        for i in range(m):
            row = a[i]
            acc = 0
            for j in range(n):
                acc = (acc + <long long> row[j] * cv[j]) % p
            out.append(acc)
        return tuple(out)
    finally:
        free(cv)


def rref(a, long long p):
    cdef Py_ssize_t m = len(a), n = len(a[0]) if m else 0
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef long long inv, f
    cdef long long *w = <long long *> malloc(m * n * sizeof(long long))
    if not w:
        raise MemoryError()
    pivots = []
    try:
        for i in range(m):
            row = a[i]
            for j in range(n):
                w[i * n + j] = row[j]
        for c in range(n):
            pr = -1
            for i in range(r, m):
                if w[i * n + c]:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for j in range(n):
                    f = w[r * n + j]; w[r * n + j] = w[pr * n + j]; w[pr * n + j] = f
            inv = mod_inv(w[r * n + c], p)
            for j in range(n):
                w[r * n + j] = w[r * n + j] * inv % p
            for i in range(m):
                if i != r and w[i * n + c]:
                    f = w[i * n + c]
                    for j in range(n):
                        w[i * n + j] = (w[i * n + j] - f * w[r * n + j]) % p
                        if w[i * n + j] < 0:
                            w[i * n + j] += p
            pivots.append(c)
            r += 1
            if r == m:
                break
        rows = tuple(tuple([w[i * n + j] for j in range(n)]) for i in range(m))
        return rows, tuple(pivots)
    finally:
        free(w)
