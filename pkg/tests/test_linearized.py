import numpy as np
import pytest

from ffperm import make_field
from ffperm.errors import BadR, NotAPermutation, WrongField, ZeroParameter
from ffperm.linearized import (lemma6_coefficients, lemma6_inverse, lemma6_inverse_poly,
                               lemma6_is_perm, lemma7_coefficients, lemma7_inverse,
                               lemma7_inverse_poly, lemma7_is_perm, lemma7_map, lemma7_norm,
                               quartic_map, s_sequence)
from ffperm.perm_engine import FuncTable, brute_inverse, interpolate, is_permutation
from oracle import NaiveField


def quartic_table(a, b):
    ctx = a.ctx
    return FuncTable(ctx, quartic_map(a, b)(ctx.indices()))


def test_s_sequence_f8():
    f8 = make_field(2, 3)
    S = s_sequence(f8.one, f8.one, 3)
    assert [S[i] for i in range(-1, 4)] == [0, 1, 1, 0, 1]


def test_s_sequence_base_cases(f16):
    a, b = f16(7), f16(11)
    S = s_sequence(a, b, 4)
    assert S[-1] == 0
    assert S[0] == 1
    assert S[1] == b


def test_s_sequence_recurrence(f64):
    a, b = f64(5), f64(40)
    S = s_sequence(a, b, 6)
    for i in range(1, 7):
        k = 2 ** (i - 1)
        assert S[i] == b ** k * S[i - 1] + a ** k * S[i - 2]


def test_s_sequence_errors():
    f8 = make_field(2, 3)
    with pytest.raises(ZeroParameter):
        s_sequence(f8.zero, f8.one, 3)
    with pytest.raises(WrongField):
        s_sequence(f8.one, f8.one, 1)
    f9 = make_field(3, 2)
    with pytest.raises(WrongField):
        s_sequence(f9.one, f9.one, 2)


def test_lemma6_a_b_one_f8():
    f8 = make_field(2, 3)
    assert not lemma6_is_perm(f8.one, f8.one, 3)
    t = quartic_table(f8.one, f8.one)
    # zero and the roots of x^3 + x + 1 all map to 0
    assert int(np.sum(t.images == 0)) == 4


def test_quartic_map_matches_naive(f16):
    naive = NaiveField(2, f16.modulus)
    for a, b in [(3, 9), (1, 1), (15, 2)]:
        want = [naive.add(naive.add(naive.pow(x, 4), naive.mul(b, naive.pow(x, 2))),
                          naive.mul(a, x)) for x in range(16)]
        assert quartic_table(f16(a), f16(b)).images.tolist() == want


@pytest.mark.parametrize("deg", [3, 4])
def test_lemma6_criterion_exhaustive(deg):
    ctx = make_field(2, deg)
    count = 0
    for a in range(1, ctx.order):
        for b in range(1, ctx.order):
            A, B = ctx(a), ctx(b)
            assert lemma6_is_perm(A, B, deg) == is_permutation(quartic_table(A, B))
            count += 1
    assert count == (ctx.order - 1) ** 2


@pytest.mark.parametrize("deg", [3, 4])
def test_lemma6_inverse_matches_oracle(deg):
    ctx = make_field(2, deg)
    for a in range(1, ctx.order):
        for b in range(1, ctx.order):
            A, B = ctx(a), ctx(b)
            if not lemma6_is_perm(A, B, deg):
                continue
            L = quartic_table(A, B)
            inv = lemma6_inverse(A, B, deg)
            assert inv == brute_inverse(L)
            assert L.apply(inv.images).tolist() == list(range(ctx.order))
            assert interpolate(inv) == lemma6_inverse_poly(A, B, deg)


def test_lemma6_inverse_is_linearized(f16):
    for a in range(1, 16):
        for b in range(1, 16):
            if lemma6_is_perm(f16(a), f16(b), 4):
                poly = lemma6_inverse_poly(f16(a), f16(b), 4)
                assert all(e & (e - 1) == 0 for e in poly.terms)


def test_lemma6_last_coefficient(f16):
    a, b = f16(2), f16(3)
    S = s_sequence(a, b, 4)
    c = lemma6_coefficients(a, b, 4)
    assert c[3] == a ** (1 - 2 ** 4) * S[3]


def test_lemma6_inverse_rejects():
    f8 = make_field(2, 3)
    with pytest.raises(NotAPermutation):
        lemma6_inverse(f8.one, f8.one, 3)


def test_lemma6_on_subfield(f64):
    # parameters in F_8 inside F_64: the table lives on the subfield
    sub = f64.subfield_indices(3)
    for a in sub[1:]:
        for b in sub[1:]:
            A, B = f64(int(a)), f64(int(b))
            if lemma6_is_perm(A, B, 3):
                inv = lemma6_inverse(A, B, 3)
                assert np.array_equal(quartic_map(A, B)(inv.images), sub)


# -- x^(q^r) - a x --------------------------------------------------------------------------

def lemma7_table(a, q, r):
    ctx = a.ctx
    return FuncTable(ctx, lemma7_map(a, q, r)(ctx.indices()))


def test_lemma7_f4_never_perm(f4):
    for a in range(1, 4):
        A = f4(a)
        assert A ** 3 == 1
        assert not lemma7_is_perm(A, 2, 1, 2)
        assert not is_permutation(lemma7_table(A, 2, 1))


def test_lemma7_f9():
    f9 = make_field(3, 2)
    seen = 0
    for a in range(1, 9):
        A = f9(a)
        perm = is_permutation(lemma7_table(A, 3, 1))
        assert lemma7_is_perm(A, 3, 1, 2) == (A ** 4 != 1) == perm
        if perm:
            inv = lemma7_inverse(A, 3, 1, 2)
            assert lemma7_table(A, 3, 1).apply(inv.images).tolist() == list(range(9))
            seen += 1
    assert seen == 4


def test_lemma7_sweep_f64_r2(f64):
    for a in range(1, 64):
        A = f64(a)
        perm = is_permutation(lemma7_table(A, 2, 2))
        assert lemma7_is_perm(A, 2, 2, 6) == perm
        if perm:
            assert lemma7_inverse(A, 2, 2, 6) == brute_inverse(lemma7_table(A, 2, 2))


def test_lemma7_first_coefficient():
    f9 = make_field(3, 2)
    A = next(f9(a) for a in range(1, 9) if lemma7_is_perm(f9(a), 3, 1, 2))
    lead, coeffs, powers = lemma7_coefficients(A, 3, 1, 2)
    N = lemma7_norm(A, 3, 1, 2)
    assert lead == N / (1 - N)
    assert coeffs[0] == A.inverse()
    assert powers[0] == 1


def test_lemma7_poly_round_trip():
    f27 = make_field(3, 3)
    for a in range(1, 27):
        A = f27(a)
        if lemma7_is_perm(A, 3, 1, 3):
            assert interpolate(lemma7_inverse(A, 3, 1, 3)) == lemma7_inverse_poly(A, 3, 1, 3)


def test_lemma7_over_q4():
    f64 = make_field(2, 6)
    for a in range(1, 64):
        A = f64(a)
        perm = is_permutation(lemma7_table(A, 4, 1))
        assert lemma7_is_perm(A, 4, 1, 3) == perm


def test_lemma7_errors(f16):
    with pytest.raises(BadR):
        lemma7_is_perm(f16.one, 2, 4, 4)
    with pytest.raises(BadR):
        lemma7_is_perm(f16.one, 2, 0, 4)
    with pytest.raises(ZeroParameter):
        lemma7_is_perm(f16.zero, 2, 1, 4)
    with pytest.raises(WrongField):
        lemma7_is_perm(f16.one, 3, 1, 4)
    with pytest.raises(NotAPermutation):
        lemma7_inverse(f16.one, 2, 1, 4)


def test_lemma7_r_equal_m_relaxed(f4):
    # r = m is allowed internally: x^(4) + a x on F_4 is (1 + a) x
    for a in range(1, 4):
        A = f4(a)
        N = lemma7_norm(A, 2, 2, 2, check_r=False)
        assert N == A
        assert (N != 1) == is_permutation(lemma7_table(A, 2, 2))
