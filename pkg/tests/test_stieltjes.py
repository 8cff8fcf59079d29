import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orthokit import families as fam
from orthokit.errors import OnCut, Overflow, PoleHit
from orthokit.functional import hankel_determinants
from orthokit.quadrature import QuadratureRule, gauss_rule
from orthokit.recurrence import RecurrenceCoefficients, constant_recurrence
from orthokit.stieltjes import (chebyshev_closed_form, closed_form_transform, density_estimate, dirac_transform,
                                invert_interval, markov_ratio, rule_transform, stieltjes_indeterminate_moments,
                                transform_of_rule)

F = Fraction
CHEB_U = constant_recurrence(0, F(1, 4), 80)
SQ3 = math.sqrt(3)


def test_rule_transform_examples():
    dirac = QuadratureRule((0.0,), (1.0,), 1.0)
    assert transform_of_rule(dirac, 2 + 1j) == 1 / (2 + 1j)
    leg = gauss_rule(fam.recurrence_coeffs(fam.legendre(), 2), 2)
    assert abs(transform_of_rule(leg, 2) - 12 / 11) < 1e-15
    with pytest.raises(PoleHit):
        transform_of_rule(leg, leg.nodes[0])


@given(st.floats(-3, 3), st.floats(0.1, 3))
def test_conjugate_symmetry(x, y):
    r = gauss_rule(fam.recurrence_coeffs(fam.laguerre(1), 6), 6)
    z = complex(x, y)
    assert abs(transform_of_rule(r, z.conjugate()) - transform_of_rule(r, z).conjugate()) < 1e-14


def test_markov_examples():
    rc = RecurrenceCoefficients((F(1, 2),), (), 3)
    assert abs(markov_ratio(rc, 1, 2 + 1j) - 3 / (1.5 + 1j)) < 1e-15
    assert abs(markov_ratio(CHEB_U, 40, 2) - 2 * (2 - SQ3)) < 1e-10


@pytest.mark.parametrize("n", [3, 10, 25])
def test_markov_equals_rule_transform(n):
    rc = fam.recurrence_coeffs(fam.jacobi(F(1, 2), F(-1, 3)), n)
    r = gauss_rule(rc, n)
    for z in (2 + 0.5j, -1.5 - 0.2j, 0.3 + 1j):
        assert abs(markov_ratio(rc, n, z) - transform_of_rule(r, z)) < 1e-11 * abs(transform_of_rule(r, z))


def test_markov_pole():
    with pytest.raises(PoleHit):
        markov_ratio(constant_recurrence(0, F(1, 4), 3), 1, 0)


def test_closed_forms():
    assert abs(chebyshev_closed_form("first", 2) - 1 / SQ3) < 1e-15
    assert abs(chebyshev_closed_form("second", 2) - 2 * (2 - SQ3)) < 1e-15
    z = 1e6
    assert abs(chebyshev_closed_form("second", z) * z - 1) < 1e-6
    with pytest.raises(OnCut):
        chebyshev_closed_form("second", 0.3)


@given(st.floats(-3, 3), st.floats(0.3, 3))
def test_closed_form_matches_markov(x, y):
    z = complex(x, y)
    assert abs(chebyshev_closed_form("second", z) - markov_ratio(CHEB_U, 80, z)) < 1e-6


def test_inversion_chebyshev_u():
    exact = 2 * ((0.5 * math.sqrt(0.75) + math.asin(0.5)) / math.pi)
    res = invert_interval(closed_form_transform("second"), -0.5, 0.5)
    assert abs(res.extrapolated - exact) < 2e-3
    assert len(res.epsilon_sequence) == 3


def test_inversion_dirac():
    full = invert_interval(dirac_transform(), -1, 1)
    assert abs(full.extrapolated - 1) < 1e-3
    half = invert_interval(dirac_transform(), 0, 1)
    assert abs(half.extrapolated - 0.5) < 1e-3


def test_inversion_rejects_bad_eps():
    with pytest.raises(ValueError):
        invert_interval(dirac_transform(), 0, 1, [1e-3, 1e-2])


def test_density_examples():
    F2 = closed_form_transform("second")
    assert abs(density_estimate(F2, 0.0, 1e-8) - 2 / math.pi) < 1e-6
    assert abs(density_estimate(F2, 1.5, 1e-8)) < 1e-6
    d = density_estimate(dirac_transform(), 0.5, 1e-3)
    assert abs(d - 1e-3 / (math.pi * (0.25 + 1e-6))) < 1e-15


def test_rule_transform_handle():
    r = gauss_rule(fam.recurrence_coeffs(fam.hermite(), 4), 4)
    F_ = rule_transform(r)
    assert F_(3j) == transform_of_rule(r, 3j)


def test_indeterminate_moments():
    u = stieltjes_indeterminate_moments(1.0, 8)
    assert math.isclose(u[0], math.sqrt(math.pi) * math.exp(0.25))
    with pytest.raises(Overflow):
        stieltjes_indeterminate_moments(0.01, 60)


def test_indeterminate_moments_positive_definite_exact_mode():
    u = stieltjes_indeterminate_moments(1.0, 8)
    assert hankel_determinants(u, 4, mode="exact").positive_definite


def test_indeterminate_moments_float_threshold_flags_h4():
    # |H_4| / scale is about 5e-13, below the binary64 zero threshold
    rep = hankel_determinants(stieltjes_indeterminate_moments(1.0, 8), 4)
    assert rep.first_failure_index == 4
