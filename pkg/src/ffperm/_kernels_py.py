"""Numpy fallback for the compiled kernels in ``_kernels.pyx``.

Every function here has the same name, signature and semantics as its
compiled twin.  Field elements are int64 indices ``sum(c_i * p**i)``;
``log``/``exp`` are the discrete-log tables of the field (``log[0]`` is a
placeholder and must never be read for a zero element).
"""

import numpy as np


def _digits(a, p, deg):
    place = 1
    for _ in range(deg):
        yield (a // place) % p, place
        place *= p


def add(a, b, p, deg):
    if p == 2:
        return np.bitwise_xor(a, b)
    out = np.zeros(a.shape, dtype=np.int64)
    place = 1
    for _ in range(deg):
        out += (((a // place) % p + (b // place) % p) % p) * place
        place *= p
    return out


def neg(a, p, deg):
    if p == 2:
        return a.copy()
    out = np.zeros(a.shape, dtype=np.int64)
    for d, place in _digits(a, p, deg):
        out += ((p - d) % p) * place
    return out


def mul(a, b, log, exp):
    n = exp.shape[0]
    out = exp[(log[a] + log[b]) % n]
    out[(a == 0) | (b == 0)] = 0
    return out


def scale(a, c, log, exp):
    if c == 0:
        return np.zeros(a.shape, dtype=np.int64)
    n = exp.shape[0]
    out = exp[(log[a] + log[c]) % n]
    out[a == 0] = 0
    return out


def power(a, e, log, exp):
    """``a**e`` elementwise; ``e`` is a nonnegative Python int, 0**0 = 1."""
    if e == 0:
        return np.ones(a.shape, dtype=np.int64)
    n = exp.shape[0]
    er = e % n
    out = exp[(log[a] * er) % n]
    out[a == 0] = 0
    return out


def poly_eval(xs, exps, coeffs, p, deg, log, exp):
    acc = np.zeros(xs.shape, dtype=np.int64)
    for e, c in zip(list(exps), coeffs.tolist()):
        acc = add(acc, scale(power(xs, e, log, exp), c, log, exp), p, deg)
    return acc


def sum_all(a, p, deg):
    if p == 2:
        return int(np.bitwise_xor.reduce(a)) if a.size else 0
    total = 0
    for d, place in _digits(a, p, deg):
        total += (int(d.sum()) % p) * place
    return total


def interpolate(images, p, deg, log, exp):
    """Coefficients c[0..q-1] of the unique reduced polynomial through ``images``.

    Uses c_0 = f(0) and c_k = -sum_a f(a) a^(q-1-k) for 1 <= k <= q-1.
    """
    q = images.shape[0]
    n = q - 1
    coeffs = np.zeros(q, dtype=np.int64)
    coeffs[0] = images[0]
    nz = np.nonzero(images[1:])[0] + 1           # points a != 0 with f(a) != 0
    if nz.size == 0:
        if images[0] != 0:
            coeffs[n] = neg(np.array([images[0]], dtype=np.int64), p, deg)[0]
        return coeffs
    la = log[nz]
    lf = log[images[nz]]
    for k in range(1, q):
        terms = exp[(lf + la * (n - k)) % n]
        s = sum_all(terms, p, deg)
        if k == n and images[0] != 0:
            s = int(add(np.array([s]), np.array([images[0]]), p, deg)[0])
        if s:
            coeffs[k] = neg(np.array([s], dtype=np.int64), p, deg)[0]
    return coeffs


def invert_permutation(images):
    """Return the inverse table, or None when ``images`` is not a permutation."""
    q = images.shape[0]
    if q == 0:
        return images.copy()
    if images.min() < 0 or images.max() >= q:
        return None
    if np.bincount(images, minlength=q).max() != 1:
        return None
    inv = np.empty(q, dtype=np.int64)
    inv[images] = np.arange(q, dtype=np.int64)
    return inv


def fibers_injective(f_images, lam_images, q):
    keys = lam_images * q + f_images
    return np.unique(keys).shape[0] == keys.shape[0]


def exp_table(p, deg, modulus, gen):
    """Successive powers gen^0 .. gen^(q-2) by repeated multiplication."""
    q = p ** deg
    mod = list(modulus)
    g = [(gen // p ** i) % p for i in range(deg)]
    out = np.empty(q - 1, dtype=np.int64)
    cur = [1] + [0] * (deg - 1)
    weights = [p ** i for i in range(deg)]
    for k in range(q - 1):
        out[k] = sum(c * w for c, w in zip(cur, weights))
        prod = [0] * (2 * deg - 1)
        for i, ci in enumerate(cur):
            if ci:
                for j, gj in enumerate(g):
                    if gj:
                        prod[i + j] += ci * gj
        for top in range(2 * deg - 2, deg - 1, -1):
            c = prod[top] % p
            if c:
                for t in range(deg):
                    prod[top - deg + t] -= c * mod[t]
            prod[top] = 0
        cur = [c % p for c in prod[:deg]]
    return out
