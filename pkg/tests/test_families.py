import json

import numpy as np
import pytest

from ffperm.errors import CaseNotCovered, FieldTooLarge, HypothesisViolated, ParseError
from ffperm.families import (FamilySpec, build, check_hypotheses, cube_case, cube_params,
                             example_display_inverse, f_map, find_delta, lemma5_g, psi_table,
                             reduced_g, sweep, t1_t2_inverse, t3_t6_inverse, terms)
from ffperm.perm_engine import FuncTable, brute_inverse, compose, is_permutation


def spec(family, **kw):
    return FamilySpec(family, **kw)


def assert_inverse(inst, inv):
    assert compose(inst.f, inv).is_identity()
    assert compose(inv, inst.f).is_identity()


# -- spec plumbing ----------------------------------------------------------------------

def test_json_round_trip():
    s = spec("T1", p=2, m=2, n=4, delta=[0, 1, 1], d=5, coeffs=[(1, 3, 1), ([1, 1], 2, 1)])
    back = FamilySpec.from_json(s.dumps())
    assert back.to_json() == s.to_json()
    assert back.delta_elem == s.delta_elem
    data = json.loads(s.dumps())
    assert data["coeffs"][0]["s"] == "3"


def test_json_k_exp_alias():
    s = FamilySpec.from_json({"family": "T10", "m": 2, "k_exp": 3, "s": 1})
    assert s.k == 3


def test_json_rejects_unknown_keys():
    with pytest.raises(ParseError):
        FamilySpec.from_json({"family": "T10", "colour": 1})
    with pytest.raises(ParseError):
        FamilySpec.from_json({"family": "T99"})
    with pytest.raises(ParseError):
        FamilySpec.from_json("{not json")


def test_big_exponents_exact():
    s = spec("T2", p=2, m=2, n=2, d=3, coeffs=[(1, 2, 1)])
    (t,) = terms(s)
    assert t.s == 1 + 2 * (16 - 1) // 3


def test_build_refuses_large_field():
    with pytest.raises(FieldTooLarge):
        build(spec("T10", m=9, n=2, k=1, s=1))


# -- hypothesis reports ---------------------------------------------------------------------

def test_t1_divisibility_flags():
    rep = check_hypotheses(spec("T1", p=2, m=1, n=4, d=3, coeffs=[(1, 1, 1)]))
    flags = dict(rep.conditions)
    assert flags["d | p^m + 1"] and flags["(2p) | n"]


def test_t2_zero_delta():
    rep = check_hypotheses(spec("T2", p=2, m=2, n=2, d=3, delta=0, coeffs=[(1, 1, 1)]))
    assert dict(rep.conditions)["Tr_m^{nm}(δ) = 0"]
    assert rep.ok


def test_t2_trace_violation_named():
    s = spec("T2", p=2, m=2, n=2, d=3, delta=[0, 1, 0, 0], coeffs=[(1, 1, 1)])
    with pytest.raises(HypothesisViolated) as err:
        build(s)
    assert err.value.condition == "Tr_m^{nm}(δ) = 0"


def test_t3_zero_delta_first_case():
    s = spec("T3", m=2, n=3, delta=0)
    cp = cube_params(s)
    assert (cp.A, cp.B, cp.D) == (0, 0, 0)
    assert cube_case(s) == "A=B=0"


def test_square_families_need_odd_m():
    assert "m odd" in check_hypotheses(spec("T7", m=2, n=2)).failed


def test_coefficient_outside_subfield():
    s = spec("T2", p=2, m=1, n=2, d=1, coeffs=[(2, 1, 1)])
    assert "b_i ∈ F_{p^m}" in check_hypotheses(s).failed


# -- T1, T2, Ex1-Ex3 ---------------------------------------------------------------

def test_ex3_display_matches_brute():
    b = int(spec("Ex3", m=2, n=2).ctx.subfield_indices(2)[2])
    s = spec("Ex3", p=2, m=2, n=2, d=3, delta=0, coeffs=[(1, 1, 1), (b, 2, 1)])
    inst = build(s)
    assert inst.is_permutation()
    disp = example_display_inverse(s)
    assert disp == inst.brute_inverse() == t1_t2_inverse(s)


def test_ex2_display_matches_brute():
    s = spec("Ex2", p=3, m=1, n=3, d=2, delta=0, coeffs=[(1, 1, 1), (2, 1, 1)])
    inst = build(s)
    assert inst.is_permutation()
    assert example_display_inverse(s) == inst.brute_inverse() == inst.closed_inverse()


def test_odd_p_t2_f27():
    s = spec("T2", p=3, m=1, n=3, d=2, delta=0, coeffs=[(1, 1, 1)])
    inst = build(s)
    assert inst.is_permutation()
    assert inst.closed_inverse() == inst.brute_inverse()


@pytest.mark.parametrize("m", [1, 2])
def test_ex1_involution(m):
    base = spec("Ex1", p=2, m=m, n=4, coeffs=[(1, 3, 1)])
    checked = 0
    for row in sweep(base):
        if row.hypotheses_hold:
            assert row.is_permutation and row.oracle_match
            s = FamilySpec(**{**base.__dict__, "delta": row.delta})
            inst = build(s)
            assert inst.is_involution()
            assert example_display_inverse(s) == inst.f
            checked += 1
    assert checked > 0


def test_t1_needs_delta_condition():
    # literal hypotheses only: d | 2^m + 1, 4 | n, b in F_2, f_1 = x
    s = spec("T1", p=2, m=1, n=4, d=1, delta=10, coeffs=[(1, 1, 1), (0, 2, 1)])
    rep = check_hypotheses(s)
    assert rep.failed == ["Tr_{2m}^{nm}(δ) = 0"]
    # the induced map is not phi = x, so the inverse built from g = phi cannot be right
    assert lemma5_g(s) != psi_table(s)
    ctx = s.ctx
    f = FuncTable(ctx, f_map(s)(ctx.indices()))
    assert is_permutation(f)
    # here f is not even a permutation although phi = x permutes
    t = spec("T1", p=2, m=1, n=4, d=3, delta=8, coeffs=[(1, 2, 1)])
    assert check_hypotheses(t).failed == ["Tr_{2m}^{nm}(δ) = 0"]
    assert not is_permutation(FuncTable(ctx, f_map(t)(ctx.indices())))
    # the same parameters are an Example 1 instance (d = 2^m + 1, b = 1, s = 2)
    e = spec("Ex1", p=2, m=1, n=4, delta=8, coeffs=[(1, 2, 1)])
    assert check_hypotheses(e).failed == ["Tr_{2m}^{nm}(δ) = 0"]


def test_ex1_not_involution_without_delta_condition():
    s = spec("Ex1", p=2, m=1, n=4, delta=5)
    assert check_hypotheses(s).failed == ["Tr_{2m}^{nm}(δ) = 0"]
    ctx = s.ctx
    f = FuncTable(ctx, f_map(s)(ctx.indices()))
    assert not np.array_equal(f.apply(f.images), f.points)


def _phi_iff_rows(family, p, m, n, d, delta, beta_bad):
    out = []
    for f1, beta in (("x", 0), ("x^p", 0), ("x+beta*tr", beta_bad)):
        s = spec(family, p=p, m=m, n=n, d=d, delta=delta, f1=f1, beta=beta,
                 coeffs=[(1, 1, 1), (1, 2, 1)])
        inst = build(s)
        out.append((is_permutation(psi_table(s)), inst.is_permutation()))
    return out


@pytest.mark.parametrize("family,p,m,n,d", [("T1", 2, 2, 4, 5), ("T2", 2, 2, 2, 3),
                                            ("T2", 3, 1, 3, 2)])
def test_t1_t2_iff_phi(family, p, m, n, d):
    ctx = spec(family, p=p, m=m, n=n).ctx
    # beta with 1 + Tr(beta) = 0 makes phi the zero map
    beta_bad = next(b for b in range(ctx.order) if ctx(b).trace(m) == -1)
    rows = _phi_iff_rows(family, p, m, n, d, 0, beta_bad)
    assert [phi for phi, _ in rows] == [True, True, False]
    for phi_perm, f_perm in rows:
        assert phi_perm == f_perm


# -- T3-T6 ---------------------------------------------------------------------------

@pytest.mark.parametrize("fam", ["T3", "T4", "T5", "T6"])
def test_cube_g_reduction(fam):
    s = spec(fam, m=2, n=3, l=1)
    rng = np.random.default_rng(7)
    for dv in rng.integers(0, 64, 12):
        t = FamilySpec(**{**s.__dict__, "delta": int(dv)})
        assert lemma5_g(t) == reduced_g(t)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_t4_zero_case_unreachable(m):
    # A carries an extra Tr(1) = 1; no delta reaches A = B = 0
    base = spec("T4", m=m, n=3)
    assert not any(r.case == "A=B=0" for r in sweep(base))


@pytest.mark.parametrize("m,case", [(2, "B=0,A noncube"), (3, "AB!=0")])
def test_t4_reachable_cases_match_brute(m, case):
    base = spec("T4", m=m, n=3)
    dv = find_delta(base, lambda inst: inst.case == case and inst.is_permutation())
    assert dv is not None
    inst = build(FamilySpec(**{**base.__dict__, "delta": dv}))
    assert inst.closed_inverse() == inst.brute_inverse()


def test_t6_first_branch_display():
    base = spec("T6", m=2, n=3)
    dv = find_delta(base, lambda inst: inst.case == "B=0,A!=0" and inst.is_permutation())
    assert dv is not None
    inst = build(FamilySpec(**{**base.__dict__, "delta": dv}))
    assert_inverse(inst, inst.closed_inverse())


@pytest.mark.parametrize("fam,m", [("T5", 2), ("T6", 2), ("T5", 3)])
def test_printed_t5_t6_inverse_misses_root(fam, m):
    # the printed x + (G + delta)^E undoes x^2 (T5) / x^4 (T6) only after a root
    base = spec(fam, m=m, n=3)
    rows = [r for r in sweep(base) if r.closed_available and r.is_permutation]
    assert rows
    assert all(r.oracle_match for r in rows)
    disp = [r for r in sweep(base, form="display") if r.closed_available and r.is_permutation]
    assert not any(r.oracle_match for r in disp)


@pytest.mark.parametrize("m", [2, 3])
def test_t6_written_a_equals_a(m):
    base = spec("T6", m=m, n=3)
    for dv in range(base.ctx.order):
        cp = cube_params(FamilySpec(**{**base.__dict__, "delta": dv}))
        assert cp.A_as_written == cp.A


def test_t4_uncovered_case_m3():
    base = spec("T4", m=3, n=3)
    rows = sweep(base)
    uncovered = [r for r in rows if r.hypotheses_hold and r.case is None]
    assert uncovered
    s = FamilySpec(**{**base.__dict__, "delta": uncovered[0].delta})
    cp = cube_params(s)
    assert not cp.B and cp.A
    with pytest.raises(CaseNotCovered):
        t3_t6_inverse(s)
    # g = x^4 + Ax + D with A a cube has a kernel, so f is not a permutation either
    assert not build(s).is_permutation()


def test_t3_odd_m_every_element_a_cube():
    base = spec("T3", m=3, n=3, l=1)
    assert not any(r.case == "B=0,A noncube" for r in sweep(base, range(0, 512, 7)))


# -- T7-T13 ----------------------------------------------------------------------------

def test_t7_zero_delta():
    inst = build(spec("T7", m=3, n=2, delta=0))
    assert inst.is_permutation()
    assert inst.closed_inverse() == inst.brute_inverse()


def test_t8_random_delta():
    rng = np.random.default_rng(8)
    for dv in rng.integers(0, 64, 5):
        inst = build(spec("T8", m=3, n=2, delta=int(dv)))
        assert inst.is_permutation()
        assert inst.closed_inverse() == inst.brute_inverse()


def test_t9_exponent_and_oracle():
    s = spec("T9", m=3, n=2, delta=9)
    assert terms(s)[0].s == 5
    inst = build(s)
    assert inst.closed_inverse() == inst.brute_inverse()


def test_t7_factorization_on_subfield():
    for dv in range(64):
        s = spec("T7", m=3, n=2, delta=dv)
        assert lemma5_g(s) == reduced_g(s)


def test_t10_involution():
    inst = build(spec("T10", m=2, n=2, k=1, s=3, delta=1))
    assert inst.is_involution()
    assert inst.closed_inverse() == inst.f == inst.brute_inverse()


def test_t10_delta_outside_subfield():
    assert "δ ∈ F_{2^m}" in check_hypotheses(spec("T10", m=2, k=1, s=3, delta=2)).failed


def test_t11_involution():
    for dv in range(16):
        inst = build(spec("T11", m=2, n=2, k=2, i=1, delta=dv))
        assert inst.is_involution()


def test_t12_matches_brute():
    for dv in range(0, 64, 5):
        inst = build(spec("T12", m=3, n=2, k=2, i=0, j=2, delta=dv))
        if inst.is_permutation():
            assert inst.closed_inverse() == inst.brute_inverse()


@pytest.mark.parametrize("variant", [2, 3])
def test_t13_constant_shift(variant):
    for dv in range(16):
        s = spec("T13", m=2, n=2, k=1, i=1, variant=variant, delta=dv)
        g = lemma5_g(s)
        ctx = s.ctx
        e = s.delta_elem + s.delta_elem ** 4
        sub = ctx.subfield_indices(2)
        assert np.array_equal(g.images, ctx.vadd(sub, (e ** 3).value))
        inst = build(s)
        assert inst.closed_inverse() == inst.brute_inverse()
