"""Closed-form inverses of two families of linearized permutation polynomials.

* L(x) = x^4 + b x^2 + a x over F_{2^m}, via the sequence
  S_{-1} = 0, S_0 = 1, S_i = b^(2^(i-1)) S_{i-1} + a^(2^(i-1)) S_{i-2}.
* L_r(x) = x^(q^r) - a x over F_{q^m}, via the norm N = a^((q^m - 1)/(q^d - 1)),
  d = gcd(m, r).

The working field may be larger than F_{2^m} (resp. F_{q^m}); parameters then
live in the embedded subfield and tables are taken over that subfield.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadR, NotAPermutation, WrongField, ZeroParameter
from .gf_core import FElem, FieldCtx
from .perm_engine import FuncTable, VecMap
from .poly_sparse import SparsePoly


@dataclass(frozen=True)
class SSeq:
    a: FElem
    b: FElem
    values: tuple  # S_{-1}, S_0, ..., S_m

    def __getitem__(self, i: int) -> FElem:
        if i < -1:
            raise IndexError(i)
        return self.values[i + 1]

    @property
    def m(self) -> int:
        return len(self.values) - 2


def _check_binary(a: FElem, b: FElem, m: int) -> FieldCtx:
    ctx = a.ctx
    if b.ctx != ctx or ctx.p != 2 or m < 2 or ctx.deg % m:
        raise WrongField(f"need F_2^{m} (m > 1) inside a binary field, got {ctx!r}")
    if not a or not b:
        raise ZeroParameter("a and b must be nonzero")
    if not (a.in_subfield(m) and b.in_subfield(m)):
        raise WrongField(f"a, b must lie in F_2^{m}")
    return ctx


def s_sequence(a: FElem, b: FElem, m: int) -> SSeq:
    ctx = _check_binary(a, b, m)
    vals = [ctx.zero, ctx.one]
    for i in range(1, m + 1):
        k = 1 << (i - 1)
        vals.append(b ** k * vals[-1] + a ** k * vals[-2])
    return SSeq(a, b, tuple(vals))


def lemma6_is_perm(a: FElem, b: FElem, m: int) -> bool:
    """x^4 + b x^2 + a x permutes F_{2^m}  <=>  S_m + a S_{m-2}^2 = 1."""
    S = s_sequence(a, b, m)
    return S[m] + a * S[m - 2] ** 2 == 1


def lemma6_coefficients(a: FElem, b: FElem, m: int) -> list[FElem]:
    """c_i = S_{m-2-i}^(2^(i+1)) + a^(1 - 2^(i+1)) S_i for i = 0..m-1."""
    S = s_sequence(a, b, m)
    return [S[m - 2 - i] ** (1 << (i + 1)) + a ** (1 - (1 << (i + 1))) * S[i]
            for i in range(m)]


def quartic_map(a: FElem, b: FElem) -> VecMap:
    ctx = a.ctx
    return lambda xs: ctx.vadd(ctx.vadd(ctx.vpow(xs, 4), ctx.vmul(ctx.vpow(xs, 2), b)),
                               ctx.vmul(xs, a))


def _linear_combination(ctx: FieldCtx, coeffs, powers) -> VecMap:
    pairs = [(c.value, e) for c, e in zip(coeffs, powers) if c]

    def apply(xs):
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros(xs.shape, dtype=np.int64)
        for c, e in pairs:
            acc = ctx.vadd(acc, ctx.vmul(ctx.vpow(xs, e), c))
        return acc

    return apply


def lemma6_inverse_map(a: FElem, b: FElem, m: int) -> VecMap:
    if not lemma6_is_perm(a, b, m):
        raise NotAPermutation("x^4 + b x^2 + a x does not permute F_2^%d" % m)
    return _linear_combination(a.ctx, lemma6_coefficients(a, b, m), [1 << i for i in range(m)])


def _table_on(ctx: FieldCtx, m: int, fn: VecMap) -> FuncTable:
    if ctx.deg == m:
        xs = ctx.indices()
        return FuncTable(ctx, fn(xs))
    sub = ctx.subfield_indices(m)
    return FuncTable(ctx, fn(sub), sub)


def lemma6_inverse(a: FElem, b: FElem, m: int) -> FuncTable:
    return _table_on(a.ctx, m, lemma6_inverse_map(a, b, m))


def lemma6_inverse_poly(a: FElem, b: FElem, m: int) -> SparsePoly:
    if not lemma6_is_perm(a, b, m):
        raise NotAPermutation("x^4 + b x^2 + a x does not permute F_2^%d" % m)
    return SparsePoly(a.ctx, {1 << i: c.value for i, c in enumerate(lemma6_coefficients(a, b, m))})


# -- x^(q^r) - a x --------------------------------------------------------------------

def _q_exponent(ctx: FieldCtx, q: int) -> int:
    e, v = 0, 1
    while v < q:
        v *= ctx.p
        e += 1
    if v != q:
        raise WrongField(f"q = {q} is not a power of p = {ctx.p}")
    return e


def _check_lemma7(a: FElem, q: int, r: int, m: int, check_r: bool = True) -> int:
    ctx = a.ctx
    e = _q_exponent(ctx, q)
    if ctx.deg % (e * m):
        raise WrongField(f"F_{q}^{m} is not a subfield of {ctx!r}")
    if r < 1 or (check_r and r > m - 1):
        raise BadR(f"need 1 <= r <= m - 1, got r = {r}, m = {m}")
    if not a:
        raise ZeroParameter("a must be nonzero")
    if not a.in_subfield(e * m):
        raise WrongField(f"a must lie in F_{q}^{m}")
    return e


def lemma7_norm(a: FElem, q: int, r: int, m: int, check_r: bool = True) -> FElem:
    """N_{q^m/q^d}(a).  ``check_r=False`` admits r >= m, where x^(q^r) acts as
    x^(q^(r mod m)) and the same formulas still hold (used when r = m = 2)."""
    _check_lemma7(a, q, r, m, check_r)
    d = math.gcd(m, r)
    return a ** ((q ** m - 1) // (q ** d - 1))


def lemma7_is_perm(a: FElem, q: int, r: int, m: int) -> bool:
    """x^(q^r) - a x permutes F_{q^m}  <=>  N_{q^m/q^d}(a) != 1."""
    return lemma7_norm(a, q, r, m) != 1


def lemma7_map(a: FElem, q: int, r: int) -> VecMap:
    ctx = a.ctx
    return lambda xs: ctx.vsub(ctx.vpow(xs, q ** r), ctx.vmul(xs, a))


def lemma7_coefficients(a: FElem, q: int, r: int, m: int,
                        check_r: bool = True) -> tuple[FElem, list[FElem], list[int]]:
    """(N/(1 - N), [a^(-(q^((i+1)r) - 1)/(q^r - 1))], [q^(i r)]) for i < m/d."""
    N = lemma7_norm(a, q, r, m, check_r)
    if N == 1:
        raise NotAPermutation("norm of a is 1; x^(q^r) - a x is not a permutation")
    d = math.gcd(m, r)
    lead = N / (1 - N)
    qr = q ** r
    coeffs = [a ** (-((qr ** (i + 1) - 1) // (qr - 1))) for i in range(m // d)]
    powers = [qr ** i for i in range(m // d)]
    return lead, coeffs, powers


def lemma7_inverse_map(a: FElem, q: int, r: int, m: int, check_r: bool = True) -> VecMap:
    lead, coeffs, powers = lemma7_coefficients(a, q, r, m, check_r)
    return _linear_combination(a.ctx, [lead * c for c in coeffs], powers)


def lemma7_inverse(a: FElem, q: int, r: int, m: int) -> FuncTable:
    e = _check_lemma7(a, q, r, m)
    return _table_on(a.ctx, e * m, lemma7_inverse_map(a, q, r, m))


def lemma7_inverse_poly(a: FElem, q: int, r: int, m: int) -> SparsePoly:
    lead, coeffs, powers = lemma7_coefficients(a, q, r, m)
    return SparsePoly(a.ctx, [(e, (lead * c).value) for c, e in zip(coeffs, powers)])
