"""Arithmetic in prime fields and their extensions F_{p^k}.

An element of F_{p^k} = Z_p[x]/(M) is a coefficient vector (c_0, ..., c_{k-1})
over Z_p, constant term first.  Internally it is stored as the compact index
``sum(c_i * p**i)`` so that whole fields can be handled as int64 arrays.

Fields of order at most ``TABLE_LIMIT`` get discrete-log tables, built on
first use; these drive both the scalar fast path and the vectorized ``v*``
methods.  Larger fields still support scalar arithmetic through polynomial
multiplication modulo M, but refuse table operations with ``FieldTooLarge``.
"""

from __future__ import annotations

import functools
import json
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .errors import (
    BadSubfieldDegree,
    CtxMismatch,
    DegreeMismatch,
    DivisionByZero,
    FieldTooLarge,
    NotPrime,
    ReducibleModulus,
)

TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over Z_p: lists of residues, constant term first ------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _zp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _zp_mod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        a = _trim(a)
    return a


def _zp_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _zp_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def _zp_powmod(base, e, mod, p):
    result = [1]
    base = _zp_mod(base, mod, p)
    while e:
        if e & 1:
            result = _zp_mod(_zp_mul(result, base, p), mod, p)
        base = _zp_mod(_zp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Ben-Or test: gcd(x^(p^i) - x, M) = 1 for every i <= deg/2."""
    f = _trim([c % p for c in coeffs])
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    h = [0, 1]
    for _ in range(deg // 2):
        h = _zp_powmod(h, p, f, p)
        g = _zp_gcd(_zp_sub(h, [0, 1], p), f, p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, deg: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``deg`` with the smallest index sum(c_i p^i).

    Comparing indices orders candidates by their highest differing
    coefficient, so degree 4 over F_2 yields x^4 + x + 1.
    """
    for r in range(p ** deg):
        coeffs = [(r // p ** i) % p for i in range(deg)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise ReducibleModulus(f"no irreducible polynomial of degree {deg} over F_{p}")


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


class FieldCtx:
    """The field F_{p^deg} = Z_p[x]/(modulus).  Immutable once built."""

    __slots__ = ("p", "deg", "modulus", "order", "_mod_int", "_log", "_exp",
                 "_prim", "_sub_cache", "__weakref__")

    def __init__(self, p: int, deg: int, modulus: Sequence[int]):
        self.p = p
        self.deg = deg
        self.modulus = tuple(modulus)
        self.order = p ** deg
        self._mod_int = sum(c << i for i, c in enumerate(self.modulus)) if p == 2 else None
        self._log = None
        self._exp = None
        self._prim = None
        self._sub_cache = {}

    # identity --------------------------------------------------------------
    def _key(self):
        return (self.p, self.deg, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GF({self.p}^{self.deg}) mod {format_poly(self.modulus)}"

    # element construction -----------------------------------------------------
    def __call__(self, value) -> "FElem":
        if isinstance(value, FElem):
            if value.ctx != self:
                raise CtxMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, str):
            value = json.loads(value)
        if isinstance(value, (list, tuple)):
            return FElem(self, self.encode(value))
        value = int(value)
        if not 0 <= value < self.order:
            raise ValueError(f"index {value} out of range for {self!r}")
        return FElem(self, value)

    def scalar(self, k: int) -> "FElem":
        """The prime-field element k * 1."""
        return FElem(self, k % self.p)

    @property
    def zero(self) -> "FElem":
        return FElem(self, 0)

    @property
    def one(self) -> "FElem":
        return FElem(self, 1)

    @property
    def gen(self) -> "FElem":
        """The residue class of x (the root of the modulus)."""
        if self.deg == 1:
            return FElem(self, (-self.modulus[0]) % self.p)
        return FElem(self, self.p)

    def encode(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.deg:
            raise DegreeMismatch(f"{len(coeffs)} coefficients for degree {self.deg}")
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def decode(self, index: int) -> list[int]:
        return [(index // self.p ** i) % self.p for i in range(self.deg)]

    def elements(self) -> Iterator["FElem"]:
        for v in range(self.order):
            yield FElem(self, v)

    def random_element(self, rng, nonzero: bool = False) -> "FElem":
        lo = 1 if nonzero else 0
        return FElem(self, int(rng.integers(lo, self.order)))

    # scalar arithmetic on indices --------------------------------------------
    def _add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, out, place = self.p, 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def _neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, out, place = self.p, 0, 1
        while a:
            out += ((-(a % p)) % p) * place
            a //= p
            place *= p
        return out

    def mul_poly(self, a: int, b: int) -> int:
        """Product by polynomial multiplication mod the modulus (no tables)."""
        if self.p == 2:
            prod = 0
            while b:
                if b & 1:
                    prod ^= a
                a <<= 1
                b >>= 1
            top = self.deg
            m = self._mod_int
            for shift in range(prod.bit_length() - 1 - top, -1, -1):
                if prod >> (shift + top) & 1:
                    prod ^= m << shift
            return prod
        prod = _zp_mul(_trim(self.decode(a)), _trim(self.decode(b)), self.p)
        return self.encode(_zp_mod(prod, self.modulus, self.p)) if prod else 0

    def _mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            log, exp = self._tables()
            return int(exp[(log[a] + log[b]) % (self.order - 1)])
        return self.mul_poly(a, b)

    def _pow(self, a: int, e: int) -> int:
        if e < 0:
            return self._pow(self._inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        er = e % (self.order - 1)
        if er == 0:
            return 1
        if self.has_tables:
            log, exp = self._tables()
            return int(exp[(int(log[a]) * er) % (self.order - 1)])
        return self.pow_poly(a, er)

    def pow_poly(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul_poly(result, base)
            base = self.mul_poly(base, base)
            e >>= 1
        return result

    def _inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._pow(a, self.order - 2) if self.order > 2 else 1

    # tables ------------------------------------------------------------------
    @property
    def has_tables(self) -> bool:
        return self.order <= TABLE_LIMIT

    def require_tables(self, limit: int = TABLE_LIMIT) -> None:
        if self.order > limit:
            raise FieldTooLarge(f"{self!r} has order {self.order} > {limit}")

    def primitive_element(self) -> int:
        if self._prim is None:
            n = self.order - 1
            factors = prime_factors(n)
            for cand in range(1, self.order):
                if all(self.pow_poly(cand, n // r) != 1 for r in factors):
                    self._prim = cand
                    break
        return self._prim

    def _tables(self):
        if self._exp is None:
            self.require_tables()
            exp = kernels.exp_table(self.p, self.deg, list(self.modulus), self.primitive_element())
            log = np.zeros(self.order, dtype=np.int64)
            log[exp] = np.arange(self.order - 1, dtype=np.int64)
            self._log, self._exp = log, exp
        return self._log, self._exp

    # vectorized arithmetic on index arrays ------------------------------------
    def indices(self) -> np.ndarray:
        self.require_tables()
        return np.arange(self.order, dtype=np.int64)

    def _arr(self, a) -> np.ndarray:
        return np.ascontiguousarray(a, dtype=np.int64)

    def _full(self, c, like) -> np.ndarray:
        if isinstance(c, FElem):
            c = c.value
        if np.isscalar(c):
            return np.full(like.shape, int(c), dtype=np.int64)
        return self._arr(c)

    def vadd(self, a, b) -> np.ndarray:
        a = self._arr(a)
        return kernels.add(a, self._full(b, a), self.p, self.deg)

    def vneg(self, a) -> np.ndarray:
        return kernels.neg(self._arr(a), self.p, self.deg)

    def vsub(self, a, b) -> np.ndarray:
        a = self._arr(a)
        return kernels.add(a, self.vneg(self._full(b, a)), self.p, self.deg)

    def vmul(self, a, b) -> np.ndarray:
        log, exp = self._tables()
        a = self._arr(a)
        if isinstance(b, FElem) or np.isscalar(b):
            return kernels.scale(a, int(b.value if isinstance(b, FElem) else b), log, exp)
        return kernels.mul(a, self._arr(b), log, exp)

    def vpow(self, a, e: int) -> np.ndarray:
        log, exp = self._tables()
        if e < 0:
            return kernels.power(self.vinv(a), -e, log, exp)
        return kernels.power(self._arr(a), e, log, exp)

    def vinv(self, a) -> np.ndarray:
        a = self._arr(a)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self.vpow(a, self.order - 2) if self.order > 2 else a.copy()

    def vfrob(self, a, j: int) -> np.ndarray:
        return self.vpow(a, self.p ** (j % self.deg))

    def vtrace(self, a, m: int) -> np.ndarray:
        self._check_sub(m)
        a = self._arr(a)
        acc = a.copy()
        for j in range(1, self.deg // m):
            acc = self.vadd(acc, self.vpow(a, self.p ** (m * j)))
        return acc

    def vnorm(self, a, d: int) -> np.ndarray:
        self._check_sub(d)
        return self.vpow(a, (self.order - 1) // (self.p ** d - 1))

    def subfield_indices(self, m: int) -> np.ndarray:
        """Sorted indices of the elements of F_{p^m} inside this field."""
        self._check_sub(m)
        if m not in self._sub_cache:
            xs = self.indices()
            self._sub_cache[m] = xs[self.vpow(xs, self.p ** m) == xs]
        return self._sub_cache[m]

    def _check_sub(self, m: int) -> None:
        if m < 1 or self.deg % m:
            raise BadSubfieldDegree(f"{m} does not divide {self.deg}")


class FElem:
    """An element of a ``FieldCtx``."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        self.ctx = ctx
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FElem):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise CtxMismatch(f"{self.ctx!r} vs {other.ctx!r}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FElem(self.ctx, self.ctx._add(self.value, o))

    __radd__ = __add__

    def __neg__(self):
        return FElem(self.ctx, self.ctx._neg(self.value))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FElem(self.ctx, self.ctx._add(self.value, self.ctx._neg(o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FElem(self.ctx, self.ctx._mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FElem(self.ctx, self.ctx._mul(self.value, self.ctx._inv(o)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        return FElem(self.ctx, self.ctx._pow(self.value, int(e)))

    def __eq__(self, other):
        if isinstance(other, FElem):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return format_elem(self)

    @property
    def coeffs(self) -> list[int]:
        return self.ctx.decode(self.value)

    def inverse(self) -> "FElem":
        return FElem(self.ctx, self.ctx._inv(self.value))

    def frobenius(self, j: int = 1) -> "FElem":
        return frobenius(self, j)

    def trace(self, m: int) -> "FElem":
        return trace_to_subfield(self, m)

    def norm(self, d: int) -> "FElem":
        return norm(self, d)

    def in_subfield(self, m: int) -> bool:
        return in_subfield(self, m)


def format_elem(a: FElem) -> str:
    return "[" + ",".join(str(c) for c in a.coeffs) + "]"


def parse_elem(ctx: FieldCtx, text) -> FElem:
    """Accept a compact index, a coefficient list, or their JSON text."""
    return ctx(text)


@functools.lru_cache(maxsize=None)
def _make_field(p: int, deg: int, modulus: tuple | None) -> FieldCtx:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if deg < 1:
        raise DegreeMismatch(f"degree must be >= 1, got {deg}")
    if modulus is None:
        modulus = smallest_irreducible(p, deg)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(_trim(modulus)) != deg + 1:
            raise DegreeMismatch(f"modulus {format_poly(modulus)} does not have degree {deg}")
        if modulus[-1] != 1:
            raise DegreeMismatch(f"modulus {format_poly(modulus)} is not monic")
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"{format_poly(modulus)} is reducible over F_{p}")
    return FieldCtx(p, deg, modulus)


def make_field(p: int, deg: int, modulus: Sequence[int] | None = None) -> FieldCtx:
    """Build F_{p^deg}; without ``modulus`` the smallest irreducible is used."""
    key = None if modulus is None else tuple(int(c) for c in modulus)
    return _make_field(int(p), int(deg), key)


# -- module-level operations ---------------------------------------------------

def _same(a: FElem, b: FElem) -> None:
    if a.ctx != b.ctx:
        raise CtxMismatch(f"{a.ctx!r} vs {b.ctx!r}")


def add(a: FElem, b: FElem) -> FElem:
    _same(a, b)
    return a + b


def sub(a: FElem, b: FElem) -> FElem:
    _same(a, b)
    return a - b


def mul(a: FElem, b: FElem) -> FElem:
    _same(a, b)
    return a * b


def neg(a: FElem) -> FElem:
    return -a


def inv(a: FElem) -> FElem:
    return a.inverse()


def power(a: FElem, e: int) -> FElem:
    """a**e with 0**0 = 1; the exponent is reduced mod (order - 1) for a != 0."""
    return a ** e


def frobenius(a: FElem, j: int) -> FElem:
    ctx = a.ctx
    return FElem(ctx, ctx._pow(a.value, ctx.p ** (j % ctx.deg)))


def trace_to_subfield(a: FElem, m: int) -> FElem:
    """Sum of a^(p^(m j)) for j < deg/m; lands in F_{p^m}."""
    ctx = a.ctx
    ctx._check_sub(m)
    acc = 0
    for j in range(ctx.deg // m):
        acc = ctx._add(acc, ctx._pow(a.value, ctx.p ** (m * j)))
    return FElem(ctx, acc)


def norm(a: FElem, d: int) -> FElem:
    ctx = a.ctx
    ctx._check_sub(d)
    return FElem(ctx, ctx._pow(a.value, (ctx.order - 1) // (ctx.p ** d - 1)))


def in_subfield(a: FElem, m: int) -> bool:
    ctx = a.ctx
    ctx._check_sub(m)
    return ctx._pow(a.value, ctx.p ** m) == a.value
