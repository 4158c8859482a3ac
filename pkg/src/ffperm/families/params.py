"""Per-family terms, hypothesis checks and the quantities the case splits use."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .. import kernels
from ..errors import HypothesisViolated
from ..gf_core import FElem
from .spec import FamilySpec, f1_choice

FIXED_F1 = {"T3": "x^(2^l)+tr^(2^l)", "T4": "x", "T5": "x^2", "T6": "x^4",
            "Ex1": "x", "Ex2": "tr+x", "Ex3": "x"}
FIXED_F1.update({f"T{k}": "x" for k in range(7, 14)})
CUBE = ("T3", "T4", "T5", "T6")
SQUARE = tuple(f"T{k}" for k in range(7, 14))
AGW_GENERAL = ("T1", "T2", "Ex1", "Ex2", "Ex3")


def effective(spec: FamilySpec) -> FamilySpec:
    """The spec with family-fixed fields (f_1, Ex1's d) filled in."""
    f1 = FIXED_F1.get(spec.family, spec.f1)
    d = spec.d
    if spec.family == "Ex1" and d is None:
        d = spec.p ** spec.m + 1
    coeffs = spec.coeffs
    if spec.family == "Ex1" and not coeffs:
        coeffs = [(1, 1, 1)]
    if (f1, d, coeffs) == (spec.f1, spec.d, spec.coeffs):
        return spec
    return FamilySpec(**{**spec.__dict__, "f1": f1, "d": d, "coeffs": list(coeffs)})


@dataclass(frozen=True)
class Term:
    b: int  # coefficient index, in F_{p^m}
    s: int  # outer exponent
    t: int  # exponent on Tr(x)


def terms(spec: FamilySpec) -> list[Term]:
    """The (b, s, t) triples of f = sum b (Tr^t + delta)^s + f_1, exponents exact."""
    spec = effective(spec)
    ctx, fam, m = spec.ctx, spec.family, spec.m
    if fam in AGW_GENERAL:
        if not spec.d:
            raise HypothesisViolated("d is a positive integer", f"d = {spec.d}")
        big = ctx.order - 1
        if big % spec.d:
            raise HypothesisViolated("d | p^(mn) - 1", f"d = {spec.d}")
        return [Term(ctx(b).value, 1 + int(s) * big // spec.d, int(t)) for b, s, t in spec.coeffs]
    if fam == "L5":
        return [Term(ctx(b).value, int(s), int(t)) for b, s, t in spec.coeffs]
    if fam in CUBE:
        q = 2 ** m
        return [Term(1, q * q + q + 2, 1)]
    if fam == "T7":
        return [Term(1, 2 ** (m - 1) + 1, (2 ** m + 1) // 3)]
    if fam == "T8":
        return [Term(1, 3, (2 ** (m + 1) - 1) // 3)]
    if fam == "T9":
        k = (m + 1) // 2
        return [Term(1, 2 ** k + 1, 2 ** k - 1)]
    if fam == "T10":
        return [Term(1, spec.s, spec.k)]
    if fam == "T11":
        return [Term(1, spec.i * (2 ** m + 1), spec.k)]
    if fam == "T12":
        return [Term(1, 2 ** spec.i, spec.k), Term(1, 2 ** spec.j, spec.k)]
    if fam == "T13":
        second = 2 ** m + 2 ** spec.i if spec.variant == 2 else 2 ** (m + spec.i) + 1
        return [Term(1, 2 ** spec.i + 1, spec.k), Term(1, second, spec.k)]
    raise AssertionError(fam)


def h_map(spec: FamilySpec, ts: list[Term] | None = None):
    """y -> sum b (y^t + delta)^s as a vector map."""
    ctx = spec.ctx
    ts = terms(spec) if ts is None else ts
    delta = spec.delta_elem.value

    def h(ys):
        ys = np.asarray(ys, dtype=np.int64)
        acc = np.zeros(ys.shape, dtype=np.int64)
        for tm in ts:
            if tm.b:
                base = ctx.vadd(ctx.vpow(ys, tm.t), delta)
                acc = ctx.vadd(acc, ctx.vmul(ctx.vpow(base, tm.s), tm.b))
        return acc

    return h


def f_map(spec: FamilySpec):
    spec = effective(spec)
    ctx, m = spec.ctx, spec.m
    h = h_map(spec)
    f1 = f1_choice(spec).f1
    return lambda xs: ctx.vadd(h(ctx.vtrace(xs, m)), f1(xs))


# -- hypothesis report -----------------------------------------------------------------

@dataclass
class HypothesisReport:
    """``conditions`` gate construction; ``cases`` only steer the closed form."""

    conditions: list = field(default_factory=list)
    cases: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(h for _, h in self.conditions)

    @property
    def failed(self) -> list[str]:
        return [c for c, h in self.conditions if not h]

    def items(self) -> list[tuple[str, bool]]:
        return list(self.conditions) + list(self.cases)

    def to_json(self) -> dict:
        return {"conditions": [{"condition": c, "holds": bool(h)} for c, h in self.conditions],
                "cases": [{"condition": c, "holds": bool(h)} for c, h in self.cases]}


def _f1_conditions(spec: FamilySpec) -> list:
    ctx, m = spec.ctx, spec.m
    xs = ctx.indices()
    ch = f1_choice(spec)
    tr = ctx.vtrace(xs, m)
    f1v = ch.f1(xs)
    commutes = np.array_equal(ctx.vtrace(f1v, m), ch.psi(tr))
    fibers = bool(kernels.fibers_injective(f1v, tr, ctx.order))
    return [("Tr_m^{nm} o f_1 = φ o Tr_m^{nm}", commutes),
            ("f_1 injective on every fiber of Tr_m^{nm}", fibers)]


def _coeff_conditions(spec: FamilySpec, need_t1: bool) -> list:
    ctx, m = spec.ctx, spec.m
    out = [("b_i ∈ F_{p^m}", all(ctx(b).in_subfield(m) for b, _, _ in spec.coeffs)),
           ("s_i > 0", all(int(s) > 0 for _, s, _ in spec.coeffs))]
    if need_t1:
        out.append(("t_i = 1", all(int(t) == 1 for _, _, t in spec.coeffs)))
    else:
        out.append(("t_i > 0", all(int(t) > 0 for _, _, t in spec.coeffs)))
    return out


def check_hypotheses(spec: FamilySpec) -> HypothesisReport:
    """Evaluate every stated hypothesis of the family exactly; never raises for a
    failed condition."""
    spec = effective(spec)
    fam, p, m, n = spec.family, spec.p, spec.m, spec.n
    rep = HypothesisReport()
    cond = rep.conditions
    if fam in ("T1", "Ex1"):
        cond += [("d | p^m + 1", bool(spec.d) and (p ** m + 1) % spec.d == 0),
                 ("(2p) | n", n % (2 * p) == 0)]
        # The term sum in g collapses only if the conjugates delta^(p^(2lm)), l < n/2,
        # add up to zero; without it g != phi and the inverse below is wrong.
        if n % 2 == 0:
            cond.append(("Tr_{2m}^{nm}(δ) = 0", spec.delta_elem.trace(2 * m) == 0))
    if fam in ("T2", "Ex2", "Ex3"):
        cond += [("d | p^m − 1", bool(spec.d) and (p ** m - 1) % spec.d == 0),
                 ("Tr_m^{nm}(δ) = 0", spec.delta_elem.trace(m) == 0),
                 ("p | n", n % p == 0)]
    if fam == "Ex1":
        cond += [("p = 2", p == 2), ("n = 4", n == 4), ("d = 2^m + 1", spec.d == 2 ** m + 1),
                 ("k = 1 and b_1 = 1", len(spec.coeffs) == 1 and spec.ctx(spec.coeffs[0][0]) == 1)]
    if fam in AGW_GENERAL or fam == "L5":
        cond += _coeff_conditions(spec, need_t1=fam != "L5")
        cond += _f1_conditions(spec)
    if fam in CUBE:
        cond += [("p = 2", p == 2), ("n = 3", n == 3)]
        if p == 2 and n == 3:
            rep.cases += cube_case_flags(spec)
    if fam in SQUARE:
        cond += [("p = 2", p == 2), ("n = 2", n == 2)]
    if fam in ("T7", "T8", "T9"):
        cond.append(("m odd", m % 2 == 1))
    if fam == "T10":
        cond += [("δ ∈ F_{2^m}", spec.delta_elem.in_subfield(m)),
                 ("k > 0", spec.k > 0), ("s > 0", (spec.s or 0) > 0)]
    if fam == "T11":
        i = spec.i if spec.i is not None else 0
        cond += [("0 < i < 2^m − 1", 0 < i < 2 ** m - 1), ("k > 0", spec.k > 0)]
    if fam == "T12":
        cond += [("i ≠ j", spec.i is not None and spec.j is not None and spec.i != spec.j),
                 ("i, j ≥ 0", (spec.i or 0) >= 0 and (spec.j or 0) >= 0),
                 ("k > 0", spec.k > 0)]
    if fam == "T13":
        i = spec.i if spec.i is not None else 0
        cond += [("0 < i < m", 0 < i < m), ("variant ∈ {2, 3}", spec.variant in (2, 3)),
                 ("k > 0", spec.k > 0)]
    return rep


# -- quantities of the cubic-extension families ------------------------------------------

@dataclass(frozen=True)
class CubeParams:
    A: FElem
    B: FElem
    D: FElem
    A_as_written: FElem  # Tr(delta^2 (delta^q + delta^(q^2))), T6's hypothesis form


def cube_params(spec: FamilySpec) -> CubeParams:
    ctx, m = spec.ctx, spec.m
    q = 2 ** m
    dl = spec.delta_elem

    def tr(a):
        return a.trace(m)

    A = tr(dl ** (2 + q) + dl ** (2 + q * q))
    B = tr(dl ** 2 + dl ** (1 + q))
    D = dl ** (q * q + q + 1) * tr(dl)
    written = tr(dl ** 2 * (dl ** q + dl ** (q * q)))
    if spec.family == "T4":
        A = tr(dl ** (2 + q) + dl ** (2 + q * q) + ctx.one)
    if spec.family == "T5":
        B = tr(dl ** 2 + dl ** (1 + q) + ctx.one)
    return CubeParams(A, B, D, written)


def is_noncube(a: FElem, m: int) -> bool:
    """a != 0 is not a cube in F_{2^m}:  a^((q-1)/gcd(3, q-1)) != 1."""
    q = 2 ** m
    g = math.gcd(3, q - 1)
    return bool(a) and g == 3 and a ** ((q - 1) // g) != 1


def cube_case(spec: FamilySpec) -> str | None:
    """Which displayed inverse applies, or None when no branch covers the parameters."""
    cp = cube_params(spec)
    A, B = cp.A, cp.B
    if spec.family == "T6":
        if not B and cp.A_as_written:
            return "B=0,A!=0"
        if B and not cp.A_as_written:
            return "B!=0,A=0"
        return None
    if not A and not B:
        return "A=B=0"
    if not B and is_noncube(A, spec.m):
        return "B=0,A noncube"
    if A and B and spec.m > 1:
        return "AB!=0"
    return None


def cube_case_flags(spec: FamilySpec) -> list:
    cp = cube_params(spec)
    flags = [("A = 0", not cp.A), ("B = 0", not cp.B),
             ("A is not a cube in F_q", is_noncube(cp.A, spec.m))]
    if spec.family == "T6":
        flags.append(("Tr_m^{3m}(δ^2(δ^q + δ^{q^2})) ≠ 0", bool(cp.A_as_written)))
    flags.append(("case covered", cube_case(spec) is not None))
    return flags
