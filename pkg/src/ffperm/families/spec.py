"""Family parameters and the f_1 catalogue.

Every family has the shape

    f(x) = sum_i b_i (Tr(x)^t_i + delta)^s_i + f_1(x)      over F_{p^(mn)},

with Tr the trace onto F_{p^m}.  ``FamilySpec`` holds the raw parameters;
which of them matter depends on ``family``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..errors import ParseError
from ..gf_core import FElem, FieldCtx, make_field

FAMILIES = ("T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11", "T12",
            "T13", "Ex1", "Ex2", "Ex3", "L5")


@dataclass
class FamilySpec:
    """Parameters of one family instance.

    ``coeffs`` holds (b, s, t) triples with b a field element (index or
    coefficient list).  For T1, T2 and Ex1-3 the term exponent is
    1 + s (p^(mn) - 1)/d and t must be 1; for L5 the triple is used as is.
    The other families derive their terms from (k, s, i, j, l, variant).
    """

    family: str
    p: int = 2
    m: int = 1
    n: int = 2
    delta: object = 0
    coeffs: list = field(default_factory=list)
    d: int | None = None
    l: int = 0
    i: int | None = None
    j: int | None = None
    k: int = 1
    s: int | None = None
    variant: int | None = None
    f1: str = "x"
    beta: object = 0
    modulus: list | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParseError(f"unknown family {self.family!r}")
        self.coeffs = [tuple(c) for c in self.coeffs]

    # field ----------------------------------------------------------------------
    @property
    def ctx(self) -> FieldCtx:
        return make_field(self.p, self.m * self.n, self.modulus)

    @property
    def delta_elem(self) -> FElem:
        return self.ctx(self.delta)

    @property
    def beta_elem(self) -> FElem:
        return self.ctx(self.beta)

    # JSON -------------------------------------------------------------------------
    def to_json(self) -> dict:
        ctx = self.ctx
        out = {"family": self.family, "p": self.p, "m": self.m, "n": self.n,
               "delta": ctx(self.delta).coeffs}
        if self.coeffs:
            out["coeffs"] = [{"b": ctx(b).coeffs, "s": str(s), "t": str(t)}
                             for b, s, t in self.coeffs]
        for key in ("d", "i", "j", "s", "variant"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        if self.l:
            out["l"] = self.l
        if self.k != 1:
            out["k"] = self.k
        out["f1"] = self.f1
        if self.beta:
            out["beta"] = ctx(self.beta).coeffs
        if self.modulus is not None:
            out["modulus"] = list(self.modulus)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data) -> "FamilySpec":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"spec is not valid JSON: {exc}") from None
        if not isinstance(data, dict) or "family" not in data:
            raise ParseError("spec must be an object with a 'family' key")
        data = dict(data)
        if "k_exp" in data:
            data["k"] = data.pop("k_exp")
        known = set(cls.__dataclass_fields__)
        extra = set(data) - known
        if extra:
            raise ParseError(f"unknown spec keys: {sorted(extra)}")
        coeffs = []
        for c in data.pop("coeffs", []):
            if isinstance(c, dict):
                coeffs.append((_elem_value(c["b"]), int(c.get("s", 1)), int(c.get("t", 1))))
            else:
                b, s, t = (list(c) + [1, 1])[:3]
                coeffs.append((_elem_value(b), int(s), int(t)))
        for key in ("delta", "beta"):
            if key in data:
                data[key] = _elem_value(data[key])
        try:
            return cls(coeffs=coeffs, **data)
        except TypeError as exc:
            raise ParseError(str(exc)) from None


def _elem_value(v):
    if isinstance(v, str):
        v = json.loads(v)
    return list(v) if isinstance(v, (list, tuple)) else int(v)


# -- f_1 catalogue -------------------------------------------------------------------

@dataclass(frozen=True)
class F1Choice:
    """f_1, its companion psi (Tr o f_1 = psi o Tr) and a (phi, phi_bar) pair
    such that phi(f_1(x)) + phi_bar(Tr(x)) permutes the field, if one is known."""

    f1: Callable
    psi: Callable
    phi: Callable | None
    phi_bar: Callable | None


def _power(ctx, e):
    return lambda xs: ctx.vpow(xs, e)


def f1_choice(spec: FamilySpec) -> F1Choice:
    ctx, m, n = spec.ctx, spec.m, spec.n
    p = ctx.p
    name = spec.f1.replace(" ", "")

    def tr(xs):
        return ctx.vtrace(xs, m)

    ident = lambda xs: np.asarray(xs, dtype=np.int64)  # noqa: E731
    if name == "x":
        return F1Choice(ident, ident, ident, None)
    if name in ("tr+x", "x+tr"):
        return F1Choice(lambda xs: ctx.vadd(xs, tr(xs)),
                        lambda xs: ctx.vmul(xs, (n + 1) % p),
                        ident, ctx.vneg)
    if name in ("x^2", "x^4", "x^p"):
        e = p if name == "x^p" else int(name[2:])
        if e % p or (e & (e - 1) and p == 2):
            raise ParseError(f"f1 = {spec.f1} is not a Frobenius power in characteristic {p}")
        return F1Choice(_power(ctx, e), _power(ctx, e), ident, None)
    if name in ("x^(2^l)+tr^(2^l)", "x^(p^l)+tr^(p^l)"):
        e = p ** spec.l
        return F1Choice(lambda xs: ctx.vadd(ctx.vpow(xs, e), ctx.vpow(tr(xs), e)),
                        lambda xs: ctx.vmul(ctx.vpow(xs, e), (n + 1) % p),
                        ident, lambda ys: ctx.vneg(ctx.vpow(ys, e)))
    if name == "x+beta*tr":
        beta = spec.beta_elem
        c = (1 + beta.trace(m)).value
        return F1Choice(lambda xs: ctx.vadd(xs, ctx.vmul(tr(xs), beta)),
                        lambda xs: ctx.vmul(xs, c),
                        ident, lambda ys: ctx.vneg(ctx.vmul(ys, beta)))
    if name == "x^2+x":
        sq = lambda xs: ctx.vadd(ctx.vpow(xs, 2), xs)  # noqa: E731
        return F1Choice(sq, sq, None, None)
    raise ParseError(f"unknown f1 choice {spec.f1!r}")


F1_NAMES = ("x", "tr+x", "x^2", "x^4", "x^p", "x^(2^l)+tr^(2^l)", "x+beta*tr", "x^2+x")
