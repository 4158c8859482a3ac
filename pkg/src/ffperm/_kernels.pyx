# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops over finite-field element tables.

Same contracts as ``_kernels_py``.  Inputs are contiguous int64 arrays.
"""

import numpy as np
from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free


cdef inline int64_t _add1(int64_t a, int64_t b, int64_t p, int deg) nogil:
    cdef int64_t out = 0, place = 1, da, db
    cdef int i
    if p == 2:
        return a ^ b
    for i in range(deg):
        da = a % p
        db = b % p
        out += ((da + db) % p) * place
        a //= p
        b //= p
        place *= p
    return out


cdef inline int64_t _neg1(int64_t a, int64_t p, int deg) nogil:
    cdef int64_t out = 0, place = 1, da
    cdef int i
    if p == 2:
        return a
    for i in range(deg):
        da = a % p
        out += ((p - da) % p) * place
        a //= p
        place *= p
    return out


def add(int64_t[::1] a, int64_t[::1] b, int64_t p, int deg):
    cdef Py_ssize_t i, n = a.shape[0]
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _add1(a[i], b[i], p, deg)
    return out


def neg(int64_t[::1] a, int64_t p, int deg):
    cdef Py_ssize_t i, n = a.shape[0]
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _neg1(a[i], p, deg)
    return out


def mul(int64_t[::1] a, int64_t[::1] b, int64_t[::1] log, int64_t[::1] exp):
    cdef Py_ssize_t i, n = a.shape[0]
    cdef int64_t order = exp.shape[0]
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] o = out
    with nogil:
        for i in range(n):
            if a[i] == 0 or b[i] == 0:
                o[i] = 0
            else:
                o[i] = exp[(log[a[i]] + log[b[i]]) % order]
    return out


def scale(int64_t[::1] a, int64_t c, int64_t[::1] log, int64_t[::1] exp):
    cdef Py_ssize_t i, n = a.shape[0]
    cdef int64_t order = exp.shape[0], lc
    out = np.zeros(n, dtype=np.int64)
    if c == 0:
        return out
    cdef int64_t[::1] o = out
    lc = log[c]
    with nogil:
        for i in range(n):
            if a[i] != 0:
                o[i] = exp[(log[a[i]] + lc) % order]
    return out


def power(int64_t[::1] a, e, int64_t[::1] log, int64_t[::1] exp):
    cdef Py_ssize_t i, n = a.shape[0]
    cdef int64_t order = exp.shape[0]
    cdef int64_t er
    if e == 0:
        return np.ones(n, dtype=np.int64)
    er = e % order
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] o = out
    with nogil:
        for i in range(n):
            if a[i] == 0:
                o[i] = 0
            else:
                o[i] = exp[(log[a[i]] * er) % order]
    return out


def poly_eval(int64_t[::1] xs, exps, int64_t[::1] coeffs, int64_t p, int deg,
              int64_t[::1] log, int64_t[::1] exp):
    cdef Py_ssize_t i, t, n = xs.shape[0], nt = coeffs.shape[0]
    cdef int64_t order = exp.shape[0], v, lc, er
    cdef bint ezero
    out = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] o = out
    for t in range(nt):
        if coeffs[t] == 0:
            continue
        ezero = exps[t] == 0
        er = exps[t] % order
        lc = log[coeffs[t]]
        with nogil:
            for i in range(n):
                if ezero:
                    v = coeffs[t]
                elif xs[i] == 0:
                    continue
                else:
                    v = exp[(log[xs[i]] * er + lc) % order]
                o[i] = _add1(o[i], v, p, deg)
    return out


cdef int64_t _sum_all(int64_t[::1] a, int64_t p, int deg) nogil:
    cdef Py_ssize_t i, n = a.shape[0]
    cdef int64_t acc = 0
    for i in range(n):
        acc = _add1(acc, a[i], p, deg)
    return acc


def sum_all(int64_t[::1] a, int64_t p, int deg):
    return _sum_all(a, p, deg)


def interpolate(int64_t[::1] images, int64_t p, int deg,
                int64_t[::1] log, int64_t[::1] exp):
    cdef Py_ssize_t q = images.shape[0], k, j, i, m = 0
    cdef int64_t order = q - 1, s, v, place
    coeffs = np.zeros(q, dtype=np.int64)
    cdef int64_t[::1] c = coeffs
    # digits of exp[e], so odd characteristic sums need no division per term
    shape = (int(q), deg) if p != 2 else (1, 1)
    digits = np.zeros(shape, dtype=np.int64)
    cdef int64_t[:, ::1] dg = digits
    cdef int64_t acc[64]
    if deg > 64:
        raise ValueError("degree too large")
    cdef int64_t *la = <int64_t *> malloc(q * sizeof(int64_t))
    cdef int64_t *cur = <int64_t *> malloc(q * sizeof(int64_t))
    if la == NULL or cur == NULL:
        free(la)
        free(cur)
        raise MemoryError()
    try:
        with nogil:
            if p != 2:
                for j in range(order):
                    v = exp[j]
                    for i in range(deg):
                        dg[j, i] = v % p
                        v //= p
            c[0] = images[0]
            for j in range(1, q):
                if images[j] != 0:
                    la[m] = log[j]
                    cur[m] = log[images[j]]  # exponent of f(a) a^(order - k), k = 0
                    m += 1
            for k in range(1, q):
                # a^(order - k) = a^(order - k + 1) / a
                for j in range(m):
                    cur[j] -= la[j]
                    if cur[j] < 0:
                        cur[j] += order
                if p == 2:
                    s = 0
                    for j in range(m):
                        s ^= exp[cur[j]]
                else:
                    for i in range(deg):
                        acc[i] = 0
                    for j in range(m):
                        for i in range(deg):
                            acc[i] += dg[cur[j], i]
                    s = 0
                    place = 1
                    for i in range(deg):
                        s += (acc[i] % p) * place
                        place *= p
                if k == order:
                    s = _add1(s, images[0], p, deg)
                c[k] = _neg1(s, p, deg)
    finally:
        free(la)
        free(cur)
    return coeffs


def invert_permutation(int64_t[::1] images):
    cdef Py_ssize_t i, q = images.shape[0]
    cdef int64_t v
    inv = np.full(q, -1, dtype=np.int64)
    cdef int64_t[::1] o = inv
    for i in range(q):
        v = images[i]
        if v < 0 or v >= q or o[v] != -1:
            return None
        o[v] = i
    return inv


def fibers_injective(int64_t[::1] f_images, int64_t[::1] lam_images, int64_t q):
    cdef Py_ssize_t i, n = f_images.shape[0]
    keys = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] k = keys
    for i in range(n):
        k[i] = lam_images[i] * q + f_images[i]
    keys.sort()
    for i in range(1, n):
        if k[i] == k[i - 1]:
            return False
    return True


def exp_table(int64_t p, int deg, modulus, int64_t gen):
    cdef int64_t q = p ** deg
    cdef int i, j, t, top
    cdef int64_t k, c, val, place
    cdef int64_t mod[64]
    cdef int64_t g[64]
    cdef int64_t cur[64]
    cdef int64_t prod[128]
    out = np.empty(q - 1, dtype=np.int64)
    cdef int64_t[::1] o = out
    for i in range(deg + 1):
        mod[i] = modulus[i]
    val = gen
    for i in range(deg):
        g[i] = val % p
        val //= p
        cur[i] = 0
    cur[0] = 1
    with nogil:
        for k in range(q - 1):
            val = 0
            place = 1
            for i in range(deg):
                val += cur[i] * place
                place *= p
            o[k] = val
            for i in range(2 * deg - 1):
                prod[i] = 0
            for i in range(deg):
                if cur[i]:
                    for j in range(deg):
                        if g[j]:
                            prod[i + j] += cur[i] * g[j]
            for top in range(2 * deg - 2, deg - 1, -1):
                c = prod[top] % p
                if c:
                    for t in range(deg):
                        prod[top - deg + t] -= c * mod[t]
                prod[top] = 0
            for i in range(deg):
                cur[i] = ((prod[i] % p) + p) % p
    return out
