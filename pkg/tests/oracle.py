"""Slow, independent reference arithmetic used as a test oracle.

Nothing here imports ffperm: elements are coefficient lists over Z_p
(constant term first) and every product is schoolbook multiplication followed
by long division by the modulus.
"""

from itertools import product


def decode(index, p, deg):
    return [(index // p ** i) % p for i in range(deg)]


def encode(coeffs, p):
    return sum(c * p ** i for i, c in enumerate(coeffs))


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def polymul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def polymod(a, mod, p):
    a = _trim(a)
    mod = _trim(mod)
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) >= len(mod):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(mod)
        for i, m in enumerate(mod):
            a[shift + i] = (a[shift + i] - c * m) % p
        a = _trim(a)
    return a


def has_factor(mod, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(mod) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not polymod(mod, list(low) + [1], p):
                return True
    return False


class NaiveField:
    def __init__(self, p, modulus):
        self.p = p
        self.modulus = list(modulus)
        self.deg = len(modulus) - 1
        self.order = p ** self.deg

    def add(self, a, b):
        x, y = decode(a, self.p, self.deg), decode(b, self.p, self.deg)
        return encode([(u + v) % self.p for u, v in zip(x, y)], self.p)

    def mul(self, a, b):
        x, y = decode(a, self.p, self.deg), decode(b, self.p, self.deg)
        return encode(polymod(polymul(_trim(x), _trim(y), self.p), self.modulus, self.p), self.p)

    def pow(self, a, e):
        out = 1
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def frob(self, a, j):
        for _ in range(j):
            a = self.pow(a, self.p)
        return a

    def trace(self, a, m):
        acc, cur = 0, a
        for _ in range(self.deg // m):
            acc = self.add(acc, cur)
            cur = self.frob(cur, m)
        return acc
