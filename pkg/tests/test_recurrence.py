import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orthokit.errors import InsufficientCoefficients, InsufficientMoments, SingularHankel
from orthokit.families import classical_moments, laguerre, legendre, recurrence_coeffs
from orthokit.functional import MomentSequence, monic_from_hankel
from orthokit.recurrence import (RecurrenceCoefficients, associated_shift, cd_kernel, cd_kernel_sum,
                                 constant_recurrence, evaluate, monic_coefficients, moments_from_recurrence,
                                 recurrence_from_moments, subleading_closed_forms)

F = Fraction
SQPI = math.sqrt(math.pi)


def hermite_moments(N):
    out = [SQPI]
    for n in range(N):
        out.append(0.0 if n % 2 == 0 else out[n - 1] * n / 2)
    return MomentSequence(tuple(out))


def legendre_moments(N):
    return MomentSequence(tuple(F(2, n + 1) if n % 2 == 0 else 0 for n in range(N + 1)))


def test_hermite_from_moments():
    rc = recurrence_from_moments(hermite_moments(11), 5)
    assert all(abs(b) < 1e-13 for b in rc.beta)
    for n, g in enumerate(rc.gamma, start=1):
        assert math.isclose(g, n / 2, rel_tol=1e-12)


def test_legendre_from_moments_exact():
    rc = recurrence_from_moments(legendre_moments(13), 6)
    assert all(b == 0 for b in rc.beta)
    assert rc.gamma == tuple(F(n * n, 4 * n * n - 1) for n in range(1, 7))
    assert rc.gamma_check == rc.gamma


def test_order_zero():
    rc = recurrence_from_moments(MomentSequence((F(2), F(3))), 0)
    assert rc.beta == (F(3, 2),) and rc.gamma == ()


def test_too_few_moments():
    with pytest.raises(InsufficientMoments):
        recurrence_from_moments(legendre_moments(4), 2)


def test_singular_moments_report_index():
    with pytest.raises(SingularHankel) as info:
        recurrence_from_moments(MomentSequence((1, 1, 1, 1, 1, 1)), 2)
    assert info.value.index == 1


def test_moments_from_recurrence_hermite():
    rc = RecurrenceCoefficients((0, 0), (0.5, 1.0), SQPI)
    u = moments_from_recurrence(rc, 4)
    ref = [SQPI, 0, SQPI / 2, 0, 3 * SQPI / 4]
    assert all(math.isclose(a, b, abs_tol=1e-15) for a, b in zip(u, ref))


def test_moments_from_recurrence_length_contract():
    with pytest.raises(InsufficientCoefficients):
        moments_from_recurrence(RecurrenceCoefficients((0,), (), 1), 4)


@given(st.lists(st.floats(-2, 2), min_size=5, max_size=5), st.lists(st.floats(0.2, 3), min_size=5, max_size=5))
def test_float_roundtrip(betas, gammas):
    rc = RecurrenceCoefficients(tuple(betas), tuple(gammas), 1.0)
    u = moments_from_recurrence(rc, 9)
    back = recurrence_from_moments(u, 4)
    for a, b in zip(back.beta, rc.beta[:5]):
        assert abs(a - b) <= 1e-10 * (1 + abs(b))
    for a, b in zip(back.gamma, rc.gamma[:4]):
        assert abs(a - b) <= 1e-10 * abs(b)


def test_float_roundtrip_classical_tight():
    rc = recurrence_coeffs(legendre(), 6)
    rcf = RecurrenceCoefficients(tuple(float(b) for b in rc.beta), tuple(float(g) for g in rc.gamma), 2.0)
    back = recurrence_from_moments(moments_from_recurrence(rcf, 9), 4)
    for a, b in zip(back.gamma, rcf.gamma):
        assert abs(a - b) <= 1e-12 * b


@given(st.lists(st.fractions(-3, 3, max_denominator=5), min_size=4, max_size=4),
       st.lists(st.fractions(F(1, 5), 3, max_denominator=5), min_size=4, max_size=4))
def test_exact_roundtrip(betas, gammas):
    rc = RecurrenceCoefficients(tuple(betas), tuple(gammas), F(1))
    back = recurrence_from_moments(moments_from_recurrence(rc, 7), 3)
    assert back.beta == rc.beta[:4] and back.gamma == rc.gamma[:3]
    assert back.gamma_check == back.gamma


def test_evaluate_examples():
    cheb = constant_recurrence(0, F(1, 4), 3)
    tri = evaluate(cheb, 2, F(1, 2))
    assert tri.values == (1, F(1, 2), 0)
    t0 = evaluate(cheb, 0, 7)
    assert t0.values == (1,) and t0.derivatives == (0,)
    herm = RecurrenceCoefficients((0, 0), (F(1, 2), 1), 1)
    assert evaluate(herm, 2, 1).values[2] == F(1, 2)
    assert evaluate(herm, 2, 1).norms == (1, F(1, 2), F(1, 2))


def test_evaluate_length_contract():
    with pytest.raises(InsufficientCoefficients):
        evaluate(RecurrenceCoefficients((0,), (), 1), 2, 0.3)


def test_monic_coefficients_laguerre():
    rc = recurrence_coeffs(laguerre(0), 3)
    P2 = monic_coefficients(rc, 2)
    assert P2.coeffs == (2, -4, 1)
    assert subleading_closed_forms(rc, 2) == (-4, 2)
    assert monic_coefficients(rc, 1).coeffs == (-1, 1)


@pytest.mark.parametrize("n", range(0, 7))
def test_monic_coefficients_match_hankel(n):
    u = classical_moments(laguerre(0), 2 * n + 1)
    rc = recurrence_coeffs(laguerre(0), n)
    assert monic_coefficients(rc, n) == monic_from_hankel(u, n)


@pytest.mark.parametrize("n", range(2, 8))
def test_subleading_closed_forms(n):
    rc = recurrence_coeffs(legendre(), n)
    P = monic_coefficients(rc, n)
    assert subleading_closed_forms(rc, n) == (P.coeff(n - 1), P.coeff(n - 2))


def test_cd_kernel_examples():
    cheb = constant_recurrence(0, F(1, 4), 4)
    assert cd_kernel(cheb, 1, F(1), F(2)) == 9
    assert cd_kernel_sum(cheb, 1, F(1), F(2)) == 9
    assert cd_kernel(cheb, 0, F(1, 3), F(5)) == 1


@given(st.floats(-1, 1), st.floats(-1, 1), st.integers(0, 8))
def test_cd_kernel_matches_sum(x, y, n):
    rc = recurrence_coeffs(legendre(), n + 1)
    a, b = cd_kernel(rc, n, x, y), cd_kernel_sum(rc, n, x, y)
    assert abs(a - b) <= 1e-7 * (1 + abs(b))


def test_cd_kernel_confluent():
    rc = recurrence_coeffs(legendre(), 6)
    x = F(1, 3)
    assert cd_kernel(rc, 5, x, x) == cd_kernel_sum(rc, 5, x, x)
    assert math.isclose(cd_kernel(rc, 5, 0.3, 0.3 + 1e-9), cd_kernel_sum(rc, 5, 0.3, 0.3), rel_tol=1e-8)


def test_associated_shift():
    rc = recurrence_coeffs(laguerre(0), 6)
    assert associated_shift(rc, 0) is rc
    sh = associated_shift(rc, 1)
    assert sh.beta[:3] == (3, 5, 7) and sh.gamma[:3] == (4, 9, 16)
    cheb = constant_recurrence(0, F(1, 4), 5)
    assert associated_shift(cheb, 1).beta == cheb.beta[1:]
    assert set(associated_shift(cheb, 1).gamma) == {F(1, 4)}


def test_zero_gamma_rejected():
    with pytest.raises(SingularHankel):
        RecurrenceCoefficients((0, 0), (1, 0), 1)


def test_json_roundtrip():
    rc = recurrence_coeffs(legendre(), 3)
    assert RecurrenceCoefficients.from_json(rc.to_json()) == rc
