"""Exhaustive permutation machinery and the AGW commuting-square tools.

Maps are tabulated: a ``FuncTable`` stores the image of every element of its
domain (the whole field, or an explicit set such as an embedded subfield).
The inverse builders take their ingredients as "map-likes": a ``SparsePoly``,
a ``FuncTable`` or any callable acting on int64 index arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .errors import (
    CoefficientNotInSubfield,
    CombinedMapNotBijective,
    CtxMismatch,
    FieldTooLarge,
    NotAPermutation,
    ResultLeftSubfield,
)
from .gf_core import FElem, FieldCtx
from .poly_sparse import FUNC_LIMIT, SparsePoly

INTERP_LIMIT = 1 << 12

VecMap = Callable[[np.ndarray], np.ndarray]


class FuncTable:
    """Images of a map on ``domain`` (sorted index array; None = whole field)."""

    __slots__ = ("ctx", "images", "domain", "_lookup")

    def __init__(self, ctx: FieldCtx, images, domain=None):
        self.ctx = ctx
        self.images = np.ascontiguousarray(images, dtype=np.int64)
        self.domain = None if domain is None else np.ascontiguousarray(domain, dtype=np.int64)
        n = ctx.order if self.domain is None else self.domain.shape[0]
        if self.images.shape != (n,):
            raise ValueError(f"table has {self.images.shape[0]} images, domain has {n}")
        self._lookup = None

    @property
    def q(self) -> int:
        return self.ctx.order

    @property
    def points(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64) if self.domain is None else self.domain

    def __len__(self):
        return self.images.shape[0]

    def apply(self, xs) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        if self.domain is None:
            return self.images[xs]
        if self._lookup is None:
            lut = np.full(self.q, -1, dtype=np.int64)
            lut[self.domain] = self.images
            self._lookup = lut
        out = self._lookup[xs]
        if np.any(out < 0):
            raise ValueError("argument outside the table's domain")
        return out

    __call__ = apply

    def __eq__(self, other):
        if not isinstance(other, FuncTable) or other.ctx != self.ctx:
            return NotImplemented
        if (self.domain is None) != (other.domain is None):
            return False
        if self.domain is not None and not np.array_equal(self.domain, other.domain):
            return False
        return bool(np.array_equal(self.images, other.images))

    __hash__ = None

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, self.points))

    def to_json(self) -> dict:
        out = {"q": self.q, "images": self.images.tolist()}
        if self.domain is not None:
            out["domain"] = self.domain.tolist()
        return out

    @classmethod
    def from_json(cls, ctx: FieldCtx, data: dict) -> "FuncTable":
        if int(data["q"]) != ctx.order:
            raise CtxMismatch(f"table for q={data['q']} given field of order {ctx.order}")
        return cls(ctx, data["images"], data.get("domain"))

    def __repr__(self):
        where = "F" if self.domain is None else f"{len(self.domain)} points"
        return f"FuncTable(q={self.q}, on {where})"


def as_map(ctx: FieldCtx, obj) -> VecMap:
    """Turn a SparsePoly / FuncTable / callable / None (zero map) into a vector map."""
    if obj is None:
        return lambda xs: np.zeros(np.shape(xs), dtype=np.int64)
    if isinstance(obj, (SparsePoly, FuncTable)):
        if obj.ctx != ctx:
            raise CtxMismatch(f"{obj.ctx!r} vs {ctx!r}")
        return obj.eval_vec if isinstance(obj, SparsePoly) else obj.apply
    if callable(obj):
        return obj
    raise TypeError(f"cannot use {type(obj).__name__} as a map")


def identity_table(ctx: FieldCtx, domain=None) -> FuncTable:
    ctx.require_tables(FUNC_LIMIT)
    pts = ctx.indices() if domain is None else np.asarray(domain, dtype=np.int64)
    return FuncTable(ctx, pts.copy(), domain)


def table_of(f, ctx: FieldCtx | None = None, domain=None) -> FuncTable:
    """Tabulate ``f`` on the whole field (or on ``domain``)."""
    if ctx is None:
        ctx = f.ctx
    ctx.require_tables(FUNC_LIMIT)
    pts = ctx.indices() if domain is None else np.asarray(domain, dtype=np.int64)
    return FuncTable(ctx, as_map(ctx, f)(pts), domain)


def is_permutation(t: FuncTable) -> bool:
    """Bijective from the domain onto itself."""
    if t.domain is None:
        return kernels.invert_permutation(t.images) is not None
    return bool(np.array_equal(np.sort(t.images), t.domain))


def is_injective(t: FuncTable) -> bool:
    return np.unique(t.images).shape[0] == t.images.shape[0]


def brute_inverse(t: FuncTable) -> FuncTable:
    if t.domain is None:
        inv = kernels.invert_permutation(t.images)
        if inv is None:
            raise NotAPermutation("table is not a permutation of the field")
        return FuncTable(t.ctx, inv)
    if not is_injective(t):
        raise NotAPermutation("table is not injective on its domain")
    order = np.argsort(t.images)
    return FuncTable(t.ctx, t.domain[order], t.images[order])


def compose(outer: FuncTable, inner: FuncTable) -> FuncTable:
    """outer o inner, on inner's domain."""
    if outer.ctx != inner.ctx:
        raise CtxMismatch(f"{outer.ctx!r} vs {inner.ctx!r}")
    return FuncTable(inner.ctx, outer.apply(inner.images), inner.domain)


def interpolate(t: FuncTable) -> SparsePoly:
    """The unique reduced polynomial (degree < q) agreeing with a full table."""
    ctx = t.ctx
    if t.domain is not None:
        raise ValueError("interpolation needs a table on the whole field")
    if ctx.order > INTERP_LIMIT:
        raise FieldTooLarge(f"interpolation limited to order {INTERP_LIMIT}, got {ctx.order}")
    log, exp = ctx._tables()
    coeffs = kernels.interpolate(t.images, ctx.p, ctx.deg, log, exp)
    nz = np.nonzero(coeffs)[0]
    return SparsePoly(ctx, {int(e): int(coeffs[e]) for e in nz})


# -- AGW ------------------------------------------------------------------------------

@dataclass
class AGWDiagram:
    """lambda_bar o f = g o lambda, with lambda, lambda_bar onto the domain of g."""

    f: FuncTable
    lam: FuncTable
    lam_bar: FuncTable
    g: FuncTable


@dataclass
class AGWReport:
    holds: bool
    f_injective_on_fibers: bool
    lambdas_surjective: bool
    f_bijective: bool
    g_bijective: bool

    @property
    def lemma1_consistent(self) -> bool:
        """f bijective <=> (g bijective and f injective on every fiber)."""
        return self.f_bijective == (self.g_bijective and self.f_injective_on_fibers)


def verify_agw(d: AGWDiagram) -> AGWReport:
    ctx = d.f.ctx
    for t in (d.lam, d.lam_bar, d.g):
        if t.ctx != ctx:
            raise CtxMismatch(f"{t.ctx!r} vs {ctx!r}")
    s = d.g.points
    surj = all(np.array_equal(np.unique(t.images), s) for t in (d.lam, d.lam_bar))
    try:
        holds = bool(np.array_equal(d.lam_bar.apply(d.f.images), d.g.apply(d.lam.images)))
    except ValueError:  # lambda lands outside g's domain
        holds = False
    fib = kernels.fibers_injective(d.f.images, d.lam.images, ctx.order)
    return AGWReport(holds, bool(fib), surj, is_permutation(d.f), is_permutation(d.g))


def lemma3_dual_holds(d: AGWDiagram) -> bool:
    """lambda o f^{-1} = g^{-1} o lambda_bar, pointwise; needs f and g bijective."""
    f_inv = brute_inverse(d.f)
    g_inv = brute_inverse(d.g)
    return bool(np.array_equal(d.lam.apply(f_inv.images), g_inv.apply(d.lam_bar.images)))


def lemma5_g(ctx: FieldCtx, m: int, terms: Sequence[tuple], delta, companion) -> FuncTable:
    """The induced map on F_{p^m}:  sum_j sum_i b_i (x^t_i + delta)^(s_i p^(mj)) + companion(x).

    ``terms`` holds (b_i, s_i, t_i); ``companion`` is the map psi with
    Tr o f_1 = psi o Tr.  Every value is checked to lie in the subfield.
    """
    sub = ctx.subfield_indices(m)
    delta = delta.value if isinstance(delta, FElem) else int(delta)
    n = ctx.deg // m
    acc = as_map(ctx, companion)(sub)
    for b, s, t in terms:
        b = b.value if isinstance(b, FElem) else int(b)
        if ctx._pow(b, ctx.p ** m) != b:
            raise CoefficientNotInSubfield(f"b = {ctx(b)!r} is not in F_{ctx.p}^{m}")
        base = ctx.vadd(ctx.vpow(sub, int(t)), delta)
        for j in range(n):
            acc = ctx.vadd(acc, ctx.vmul(ctx.vpow(base, int(s) * ctx.p ** (m * j)), b))
    if not np.all(ctx.vpow(acc, ctx.p ** m) == acc):
        raise ResultLeftSubfield("induced map leaves the subfield")
    return FuncTable(ctx, acc, sub)


def lemma2_inverse(f1_inv, h, g_inv, lambda_bar, ctx: FieldCtx | None = None) -> FuncTable:
    """f^{-1}(x) = f1^{-1}(x - h(g^{-1}(lambda_bar(x))))."""
    ctx = ctx or _ctx_of(f1_inv, h, g_inv, lambda_bar)
    xs = ctx.indices()
    gv = as_map(ctx, g_inv)(as_map(ctx, lambda_bar)(xs))
    inner = ctx.vsub(xs, as_map(ctx, h)(gv))
    return FuncTable(ctx, as_map(ctx, f1_inv)(inner))


def combined_map(phi, phi_bar, f1, lam, ctx: FieldCtx) -> FuncTable:
    """x -> phi(f1(x)) + phi_bar(lam(x))."""
    xs = ctx.indices()
    return FuncTable(ctx, ctx.vadd(as_map(ctx, phi)(as_map(ctx, f1)(xs)),
                                   as_map(ctx, phi_bar)(as_map(ctx, lam)(xs))))


def lemma4_inverse(phi, phi_bar, f1, lam, h, g_inv, lam_bar,
                   ctx: FieldCtx | None = None) -> FuncTable:
    """(phi(f1) + phi_bar(lam))^{-1} o (phi(x - h(G)) + phi_bar(G)),  G = g^{-1}(lam_bar(x))."""
    ctx = ctx or _ctx_of(phi, phi_bar, f1, lam, h, g_inv, lam_bar)
    comb = combined_map(phi, phi_bar, f1, lam, ctx)
    try:
        comb_inv = brute_inverse(comb)
    except NotAPermutation:
        raise CombinedMapNotBijective("phi o f1 + phi_bar o lambda does not permute the field") from None
    xs = ctx.indices()
    gv = as_map(ctx, g_inv)(as_map(ctx, lam_bar)(xs))
    rhs = ctx.vadd(as_map(ctx, phi)(ctx.vsub(xs, as_map(ctx, h)(gv))),
                   as_map(ctx, phi_bar)(gv))
    return FuncTable(ctx, comb_inv.apply(rhs))


def _ctx_of(*objs) -> FieldCtx:
    for o in objs:
        if isinstance(o, (SparsePoly, FuncTable)):
            return o.ctx
    raise ValueError("pass ctx= when no argument carries a field")
