"""Sparse univariate polynomials with arbitrary-precision exponents.

Exponents such as 1 + s(p^{nm} - 1)/d are far beyond any dense degree
bound, so a polynomial is a map exponent -> coefficient and is mostly used
as a function on the field.  ``reduce`` gives the canonical representative
modulo x^q - x.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np

from . import kernels
from .errors import CtxMismatch, TermBlowup
from .gf_core import FElem, FieldCtx, format_elem

MUL_TERM_CAP = 64
FUNC_LIMIT = 1 << 16


class SparsePoly:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: FieldCtx, terms: Mapping[int, object] | Iterable = ()):
        self.ctx = ctx
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            c = ctx(c).value if not isinstance(c, int) else c
            if c:
                acc[e] = ctx._add(acc.get(e, 0), c)
        self.terms = {e: c for e, c in acc.items() if c}

    # constructors ---------------------------------------------------------------
    @classmethod
    def x(cls, ctx: FieldCtx) -> "SparsePoly":
        return cls(ctx, {1: 1})

    @classmethod
    def constant(cls, ctx: FieldCtx, c) -> "SparsePoly":
        return cls(ctx, {0: ctx(c).value})

    @classmethod
    def monomial(cls, ctx: FieldCtx, e: int, c=1) -> "SparsePoly":
        return cls(ctx, {e: ctx(c).value})

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "SparsePoly":
        return cls(ctx)

    # evaluation -------------------------------------------------------------------
    def eval(self, a: FElem) -> FElem:
        if a.ctx != self.ctx:
            raise CtxMismatch(f"{a.ctx!r} vs {self.ctx!r}")
        ctx = self.ctx
        acc = 0
        for e, c in self.terms.items():
            acc = ctx._add(acc, ctx._mul(c, ctx._pow(a.value, e)))
        return FElem(ctx, acc)

    __call__ = eval

    def eval_vec(self, xs) -> np.ndarray:
        ctx = self.ctx
        log, exp = ctx._tables()
        xs = np.ascontiguousarray(xs, dtype=np.int64)
        exps = [_reduced_exp(e, ctx.order) for e in self.terms]
        coeffs = np.fromiter(self.terms.values(), dtype=np.int64, count=len(self.terms))
        return kernels.poly_eval(xs, exps, coeffs, ctx.p, ctx.deg, log, exp)

    # arithmetic -------------------------------------------------------------------
    def _check(self, other: "SparsePoly") -> None:
        if other.ctx != self.ctx:
            raise CtxMismatch(f"{self.ctx!r} vs {other.ctx!r}")

    def add(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        return SparsePoly(self.ctx, list(self.terms.items()) + list(other.terms.items()))

    __add__ = add

    def neg(self) -> "SparsePoly":
        return SparsePoly(self.ctx, {e: self.ctx._neg(c) for e, c in self.terms.items()})

    def sub(self, other: "SparsePoly") -> "SparsePoly":
        return self.add(other.neg())

    __sub__ = sub

    def scale(self, c) -> "SparsePoly":
        c = self.ctx(c).value if not isinstance(c, int) else c
        return SparsePoly(self.ctx, {e: self.ctx._mul(v, c) for e, v in self.terms.items()})

    def mul_small(self, other: "SparsePoly") -> "SparsePoly":
        """Formal product of two reduced polynomials with at most 64 terms each."""
        self._check(other)
        for f in (self, other):
            if len(f.terms) > MUL_TERM_CAP:
                raise TermBlowup(f"{len(f.terms)} terms exceeds cap {MUL_TERM_CAP}")
            if not f.is_reduced():
                raise TermBlowup("mul_small needs reduced operands")
        ctx = self.ctx
        out = []
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out.append((e1 + e2, ctx._mul(c1, c2)))
        return SparsePoly(ctx, out)

    __mul__ = mul_small

    def reduce(self) -> "SparsePoly":
        """Canonical form mod x^q - x: x^e -> x^(((e - 1) mod (q - 1)) + 1) for e >= 1."""
        q = self.ctx.order
        return SparsePoly(self.ctx, [(_reduced_exp(e, q), c) for e, c in self.terms.items()])

    def is_reduced(self) -> bool:
        return all(e <= self.ctx.order - 1 for e in self.terms)

    # comparisons ------------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, SparsePoly) and self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max(self.terms, default=-1)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "1" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if e == 0:
                parts.append(format_elem(FElem(self.ctx, c)))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{format_elem(FElem(self.ctx, c))}*{mono}")
        return " + ".join(parts)

    # serialization ----------------------------------------------------------------
    def to_json(self) -> dict:
        return {"terms": [{"e": str(e), "c": str(c)} for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, ctx: FieldCtx, data: dict) -> "SparsePoly":
        return cls(ctx, [(int(t["e"]), ctx(t["c"]).value) for t in data["terms"]])


def _reduced_exp(e: int, q: int) -> int:
    return 0 if e == 0 else (e - 1) % (q - 1) + 1


def _require(ctx: FieldCtx) -> None:
    ctx.require_tables(FUNC_LIMIT)


def func_equal(f: SparsePoly, g: SparsePoly) -> bool:
    """True iff f and g agree at every element (exhaustive)."""
    f._check(g)
    _require(f.ctx)
    xs = f.ctx.indices()
    return bool(np.array_equal(f.eval_vec(xs), g.eval_vec(xs)))


def compose_as_function(outer: SparsePoly, inner: SparsePoly):
    """Table of outer(inner(a)); composition is never expanded symbolically."""
    from .perm_engine import FuncTable

    outer._check(inner)
    _require(outer.ctx)
    xs = outer.ctx.indices()
    return FuncTable(outer.ctx, outer.eval_vec(inner.eval_vec(xs)))
