"""Assemble family instances and sweep parameters for witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import FFPermError, FieldTooLarge, HypothesisViolated
from ..perm_engine import (AGWDiagram, FuncTable, brute_inverse, interpolate, is_permutation,
                           verify_agw)
from ..poly_sparse import FUNC_LIMIT, SparsePoly
from .inverses import agw_inverse, closed_inverse, lemma5_g
from .params import CUBE, HypothesisReport, check_hypotheses, cube_case, effective, f_map
from .spec import FamilySpec


def trace_table(spec: FamilySpec) -> FuncTable:
    ctx = spec.ctx
    return FuncTable(ctx, ctx.vtrace(ctx.indices(), spec.m))


@dataclass
class FamilyInstance:
    """A built family member.  ``f`` is the table of f; the closed-form inverse
    is computed on first access and may raise ``CaseNotCovered``."""

    spec: FamilySpec
    report: HypothesisReport
    f: FuncTable
    _closed: dict = field(default_factory=dict, repr=False)

    @property
    def ctx(self):
        return self.f.ctx

    @property
    def case(self) -> str | None:
        return cube_case(self.spec) if self.spec.family in CUBE else None

    def is_permutation(self) -> bool:
        return is_permutation(self.f)

    def is_involution(self) -> bool:
        return bool(np.array_equal(self.f.apply(self.f.images), self.f.points))

    def closed_inverse(self, form: str = "derived") -> FuncTable:
        if form not in self._closed:
            self._closed[form] = closed_inverse(self.spec, form)
        return self._closed[form]

    @property
    def f_inv_closed(self) -> FuncTable:
        return self.closed_inverse()

    def brute_inverse(self) -> FuncTable:
        return brute_inverse(self.f)

    def agw_inverse(self) -> FuncTable:
        return agw_inverse(self.spec)

    def g(self) -> FuncTable:
        return lemma5_g(self.spec)

    def diagram(self) -> AGWDiagram:
        tr = trace_table(self.spec)
        return AGWDiagram(self.f, tr, tr, self.g())

    def agw_report(self):
        return verify_agw(self.diagram())

    def f_poly(self) -> SparsePoly:
        return interpolate(self.f)

    def f_inv_poly(self, form: str = "derived") -> SparsePoly:
        return interpolate(self.closed_inverse(form))


def build(spec: FamilySpec) -> FamilyInstance:
    """Check hypotheses (raising ``HypothesisViolated`` on the first failure) and
    tabulate f."""
    spec = effective(spec)
    ctx = spec.ctx
    if ctx.order > FUNC_LIMIT:
        raise FieldTooLarge(f"p^(mn) = {ctx.order} exceeds {FUNC_LIMIT}")
    rep = check_hypotheses(spec)
    if not rep.ok:
        raise HypothesisViolated(rep.failed[0], f"family {spec.family}")
    return FamilyInstance(spec, rep, FuncTable(ctx, f_map(spec)(ctx.indices())))


# -- sweeps ------------------------------------------------------------------------------

@dataclass
class SweepRow:
    delta: int
    hypotheses_hold: bool
    failed: list
    case: str | None
    is_permutation: bool | None
    closed_available: bool | None
    oracle_match: bool | None

    def to_json(self) -> dict:
        return dict(self.__dict__)


def check_instance(inst: FamilyInstance, form: str = "derived"):
    """(is_permutation, closed form available, closed == brute or None)."""
    perm = inst.is_permutation()
    try:
        closed = inst.closed_inverse(form)
    except FFPermError:
        return perm, False, None
    if not perm:
        return perm, True, None
    return perm, True, closed == inst.brute_inverse()


def sweep(spec: FamilySpec, deltas=None, form: str = "derived") -> list[SweepRow]:
    """Run ``spec`` for every delta in ``deltas`` (default: the whole field)."""
    spec = effective(spec)
    ctx = spec.ctx
    ctx.require_tables(FUNC_LIMIT)
    deltas = range(ctx.order) if deltas is None else deltas
    rows = []
    for dv in deltas:
        dv = int(dv)
        s = FamilySpec(**{**spec.__dict__, "delta": dv})
        rep = check_hypotheses(s)
        if not rep.ok:
            rows.append(SweepRow(dv, False, rep.failed, None, None, None, None))
            continue
        inst = build(s)
        perm, avail, match = check_instance(inst, form)
        rows.append(SweepRow(dv, True, [], inst.case, perm, avail, match))
    return rows


def find_delta(spec: FamilySpec, predicate, deltas=None) -> int | None:
    """First delta whose built instance satisfies ``predicate(instance)``."""
    spec = effective(spec)
    ctx = spec.ctx
    for dv in (range(ctx.order) if deltas is None else deltas):
        s = FamilySpec(**{**spec.__dict__, "delta": int(dv)})
        if not check_hypotheses(s).ok:
            continue
        if predicate(build(s)):
            return int(dv)
    return None
