"""Closed-form compositional inverses, one builder per group of families.

Each builder returns a ``FuncTable`` of the inverse on the whole field.  The
reduced forms of the induced map g on F_{p^m} live here too, so that the
reductions used by the inverses can be compared with ``lemma5_g``.
"""

from __future__ import annotations

from ..errors import CaseNotCovered, CombinedMapNotBijective, HypothesisViolated
from ..linearized import lemma6_inverse_map, lemma7_inverse_map
from ..perm_engine import FuncTable, brute_inverse, lemma4_inverse
from ..perm_engine import lemma5_g as _lemma5_g
from .params import (AGW_GENERAL, CUBE, CubeParams, check_hypotheses, cube_case, cube_params,
                     effective, h_map, terms)
from .spec import FamilySpec, f1_choice


def _require(spec: FamilySpec, families) -> FamilySpec:
    spec = effective(spec)
    if spec.family not in families:
        raise ValueError(f"{spec.family} is not one of {families}")
    rep = check_hypotheses(spec)
    if not rep.ok:
        raise HypothesisViolated(rep.failed[0])
    return spec


def _tr(spec: FamilySpec, xs):
    return spec.ctx.vtrace(xs, spec.m)


def lemma5_g(spec: FamilySpec) -> FuncTable:
    """The induced map g on F_{p^m}, evaluated from its double-sum definition."""
    spec = effective(spec)
    return _lemma5_g(spec.ctx, spec.m, [(t.b, t.s, t.t) for t in terms(spec)],
                     spec.delta_elem, f1_choice(spec).psi)


def agw_inverse(spec: FamilySpec) -> FuncTable:
    """The combined-map inverse (lemma4_inverse) with g^-1 taken by brute force
    from the evaluated g; works for any family whose f_1 has a (phi, phi_bar) pair."""
    spec = effective(spec)
    ch = f1_choice(spec)
    if ch.phi is None:
        raise CombinedMapNotBijective(f"no (phi, phi_bar) pair known for f_1 = {spec.f1}")
    tr = lambda xs: _tr(spec, xs)  # noqa: E731
    return lemma4_inverse(ch.phi, ch.phi_bar, ch.f1, tr, h_map(spec),
                          brute_inverse(lemma5_g(spec)), tr, ctx=spec.ctx)


# -- T1, T2 and Examples 1-3 ----------------------------------------------------------

def psi_table(spec: FamilySpec) -> FuncTable:
    """The companion map (g after the term sum collapses) on the subfield."""
    ctx = spec.ctx
    sub = ctx.subfield_indices(spec.m)
    return FuncTable(ctx, f1_choice(effective(spec)).psi(sub), sub)


def t1_t2_inverse(spec: FamilySpec) -> FuncTable:
    """(phi(f_1) + phi_bar(Tr))^-1 o (phi(x - h(G)) + phi_bar(G)), G = psi^-1(Tr(x))."""
    spec = _require(spec, AGW_GENERAL)
    ctx = spec.ctx
    ch = f1_choice(spec)
    if ch.phi is None:
        raise CombinedMapNotBijective(f"no (phi, phi_bar) pair known for f_1 = {spec.f1}")
    g_inv = brute_inverse(psi_table(spec))
    return lemma4_inverse(ch.phi, ch.phi_bar, ch.f1, lambda xs: _tr(spec, xs),
                          h_map(spec), g_inv, lambda xs: _tr(spec, xs), ctx=ctx)


def example_display_inverse(spec: FamilySpec) -> FuncTable:
    """The explicit formulas: Ex1 f^-1 = f; Ex2 f^-1 = -Tr(x) + x - h(Tr(x));
    Ex3 f^-1 = x - h(Tr(x))."""
    spec = _require(spec, ("Ex1", "Ex2", "Ex3"))
    ctx = spec.ctx
    xs = ctx.indices()
    tr = _tr(spec, xs)
    hv = h_map(spec)(tr)
    if spec.family == "Ex1":
        return FuncTable(ctx, ctx.vadd(xs, hv))
    out = ctx.vsub(xs, hv)
    if spec.family == "Ex2":
        out = ctx.vsub(out, tr)
    return FuncTable(ctx, out)


# -- T3-T6 over F_{q^3} --------------------------------------------------------------

def _root_exp(spec: FamilySpec, power_of_two: int, deg: int) -> int:
    """Exponent of the inverse of x^(2^power_of_two) on F_{2^deg}."""
    return 2 ** ((-power_of_two) % deg)


def cube_g_inverse(spec: FamilySpec, cp: CubeParams | None = None):
    """g^-1 on F_q as a vector map, per the case split; raises CaseNotCovered."""
    ctx, m = spec.ctx, spec.m
    cp = cp or cube_params(spec)
    case = cube_case(spec)
    if case is None:
        raise CaseNotCovered(f"{spec.family}: A = {cp.A!r}, B = {cp.B!r} is outside every branch")
    D = cp.D.value

    def shift(ys):
        return ctx.vadd(ys, D)

    if case == "A=B=0":
        e = _root_exp(spec, 2, m)
        return lambda ys: ctx.vpow(shift(ys), e)
    if case == "B=0,A noncube":
        lin = lemma7_inverse_map(cp.A, 2, 2, m, check_r=False)
        return lambda ys: lin(shift(ys))
    if case == "AB!=0":
        lin = lemma6_inverse_map(cp.A, cp.B, m)
        return lambda ys: lin(shift(ys))
    if case == "B!=0,A=0":
        e = _root_exp(spec, 1, m)
        return lambda ys: ctx.vpow(ctx.vmul(shift(ys), cp.B.inverse()), e)
    if case == "B=0,A!=0":
        return lambda ys: ctx.vmul(shift(ys), cp.A.inverse())
    raise AssertionError(case)


def t3_t6_inverse(spec: FamilySpec, form: str = "derived") -> FuncTable:
    """Closed-form inverse for T3-T6.

    ``form="derived"`` undoes f_1 exactly: T5 and T6 take the square / fourth
    root of x + (G + delta)^E.  ``form="display"`` evaluates the printed
    x + (G + delta)^E for T5/T6 as well (it does not invert f in general).
    """
    spec = _require(spec, CUBE)
    if form not in ("derived", "display"):
        raise ValueError(form)
    ctx, m = spec.ctx, spec.m
    q = 2 ** m
    E = q * q + q + 2
    dl = spec.delta_elem.value
    ginv = cube_g_inverse(spec)
    xs = ctx.indices()
    G = ginv(_tr(spec, xs))
    core = ctx.vpow(ctx.vadd(G, dl), E)
    fam = spec.family
    if fam == "T3":
        root = _root_exp(spec, spec.l, 3 * m)
        out = ctx.vadd(ctx.vadd(ctx.vpow(xs, root), ctx.vpow(core, root)), G)
    else:
        out = ctx.vadd(xs, core)
        if form == "derived" and fam in ("T5", "T6"):
            out = ctx.vpow(out, _root_exp(spec, 1 if fam == "T5" else 2, 3 * m))
    return FuncTable(ctx, out)


def cube_reduced_g(spec: FamilySpec) -> FuncTable:
    """x^4 + Bx^2 + Ax + D (T3-T5) or Bx^2 + Ax + D (T6) on F_q."""
    spec = effective(spec)
    ctx = spec.ctx
    cp = cube_params(spec)
    sub = ctx.subfield_indices(spec.m)
    out = ctx.vadd(ctx.vadd(ctx.vmul(ctx.vpow(sub, 2), cp.B), ctx.vmul(sub, cp.A)), cp.D)
    if spec.family != "T6":
        out = ctx.vadd(out, ctx.vpow(sub, 4))
    return FuncTable(ctx, out, sub)


# -- T7-T13 over F_{2^(2m)} ------------------------------------------------------------

def _conj(spec: FamilySpec):
    """(delta, delta^(2^m), delta + delta^(2^m)) as FElems."""
    dl = spec.delta_elem
    dc = dl ** (2 ** spec.m)
    return dl, dc, dl + dc


def square_constants(spec: FamilySpec) -> dict:
    """The constants c with g = ((x + e)^s + c) o x^t (T7-T9) or g = x + c (T12-T13)."""
    m, fam = spec.m, spec.family
    dl, dc, e = _conj(spec)
    if fam == "T7":
        return {"e": e, "c": dl ** 3 + dc ** 3}
    if fam == "T8":
        return {"e": e, "c": dl * dc ** 2 + dl ** 2 * dc}
    if fam == "T9":
        k = (m + 1) // 2
        return {"e": e, "c": dl ** (2 ** k) * dc + dl * dc ** (2 ** k)}
    if fam == "T12":
        i, j = spec.i, spec.j
        return {"c": dl ** (2 ** i) + dc ** (2 ** i) + dl ** (2 ** j) + dc ** (2 ** j)}
    if fam == "T13":
        return {"c": e ** (2 ** spec.i + 1)}
    return {}


def square_reduced_g(spec: FamilySpec) -> FuncTable:
    """The factorized induced map on F_{2^m}."""
    spec = _require(spec, tuple(f"T{k}" for k in range(7, 14)))
    ctx, m, fam = spec.ctx, spec.m, spec.family
    sub = ctx.subfield_indices(m)
    c = square_constants(spec)
    if fam in ("T10", "T11"):
        out = sub.copy()
    elif fam in ("T12", "T13"):
        out = ctx.vadd(sub, c["c"])
    else:
        if fam == "T7":
            s, t = 3, (2 ** m + 1) // 3
        elif fam == "T8":
            s, t = 3, (2 ** (m + 1) - 1) // 3
        else:
            k = (m + 1) // 2
            s, t = 2 ** k + 1, 2 ** k - 1
        inner = ctx.vpow(sub, t)
        out = ctx.vadd(ctx.vpow(ctx.vadd(inner, c["e"]), s), c["c"])
        if fam == "T7":
            out = ctx.vpow(out, 2 ** (m - 1))
    return FuncTable(ctx, out, sub)


def t7_t9_inverse(spec: FamilySpec) -> FuncTable:
    spec = _require(spec, ("T7", "T8", "T9"))
    ctx, m, fam = spec.ctx, spec.m, spec.family
    dl, dc, _ = _conj(spec)
    xs = ctx.indices()
    tr = _tr(spec, xs)
    if fam == "T7":
        z = ctx.vpow(ctx.vadd(ctx.vpow(tr, 2), dl ** 3 + dc ** 3), (2 ** (m + 1) - 1) // 3)
        s = 2 ** (m - 1) + 1
    elif fam == "T8":
        z = ctx.vpow(ctx.vadd(tr, dl ** (2 ** (m + 1) + 1) + dl ** (2 + 2 ** m)),
                     (2 ** (m + 1) - 1) // 3)
        s = 3
    else:
        k = (m + 1) // 2
        c = dl ** (2 ** k + 2 ** m) + dl ** (2 ** (k + m) + 1)
        z = ctx.vpow(ctx.vadd(tr, c), 2 ** k - 1)
        s = 2 ** k + 1
    return FuncTable(ctx, ctx.vadd(xs, ctx.vpow(ctx.vadd(z, dc), s)))


def t10_t13_inverse(spec: FamilySpec) -> FuncTable:
    spec = _require(spec, ("T10", "T11", "T12", "T13"))
    ctx, fam = spec.ctx, spec.family
    xs = ctx.indices()
    tr = _tr(spec, xs)
    if fam in ("T10", "T11"):
        return FuncTable(ctx, ctx.vadd(xs, h_map(spec)(tr)))
    c = square_constants(spec)["c"]
    w = ctx.vadd(ctx.vpow(ctx.vadd(tr, c), spec.k), spec.delta_elem)
    ts = terms(spec)
    out = xs
    for tm in ts:
        out = ctx.vadd(out, ctx.vpow(w, tm.s))
    return FuncTable(ctx, out)


def closed_inverse(spec: FamilySpec, form: str = "derived") -> FuncTable:
    fam = effective(spec).family
    if fam in AGW_GENERAL:
        return t1_t2_inverse(spec)
    if fam in CUBE:
        return t3_t6_inverse(spec, form)
    if fam in ("T7", "T8", "T9"):
        return t7_t9_inverse(spec)
    if fam in ("T10", "T11", "T12", "T13"):
        return t10_t13_inverse(spec)
    if fam == "L5":
        return agw_inverse(_require(spec, ("L5",)))
    raise CaseNotCovered(f"{fam} has no closed form")


def reduced_g(spec: FamilySpec) -> FuncTable:
    """The family's simplified induced map on F_{p^m}."""
    fam = effective(spec).family
    if fam in AGW_GENERAL:
        return psi_table(spec)
    if fam in CUBE:
        return cube_reduced_g(spec)
    if fam.startswith("T"):
        return square_reduced_g(spec)
    raise ValueError(f"{fam} has no reduced form of g")

