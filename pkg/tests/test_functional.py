import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from orthokit.errors import InsufficientMoments, SingularHankel
from orthokit.functional import (MomentSequence, PearsonPair, affine_image, apply, bareiss_det,
                                 derivative_functional, dirac_moments, divide_by_linear, functional_product,
                                 hankel_determinants, monic_from_hankel, multiply_by_polynomial, pearson_residual,
                                 right_multiply)
from orthokit.polynomial import DensePolynomial, poly

from conftest import fraction_lists, small_fractions

F = Fraction
SQPI = math.sqrt(math.pi)


def M(*v):
    return MomentSequence(tuple(v))


def moment_seqs(min_size=3, max_size=10):
    return fraction_lists(min_size, max_size).map(lambda v: MomentSequence(tuple(v)))


# apply
def test_apply_examples():
    assert apply(M(1, 0, F(1, 2)), poly(0, 0, 1)) == F(1, 2)
    assert apply(M(7, 3, 1), poly(1)) == 7
    assert apply(M(2, 0, F(2, 3), 0), poly(0, 0, 0, 1)) == 0


def test_apply_needs_enough_moments():
    with pytest.raises(InsufficientMoments):
        apply(M(1, 2), poly(0, 0, 1))


# Hankel
def test_hankel_hermite_floats():
    rep = hankel_determinants(M(SQPI, 0.0, SQPI / 2), 1)
    assert rep.H(-1) == 1
    assert math.isclose(rep.H(1), math.pi / 2)
    assert rep.positive_definite


def test_hankel_rank_one():
    rep = hankel_determinants(M(1, 1, 1, 1, 1), 2)
    assert rep.H(1) == 0
    assert not rep.regular
    assert rep.first_failure_index == 1


def test_bareiss_matches_numpy():
    import numpy as np
    m = [[F(2), F(1), F(3)], [F(0), F(0), F(1)], [F(4), F(5), F(6)]]
    assert math.isclose(float(bareiss_det(m)), np.linalg.det(np.array(m, dtype=float)))


@given(st.lists(st.lists(small_fractions(), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_against_leibniz(rows):
    from itertools import permutations

    def sign(p):
        s, seen = 1, list(p)
        for i in range(len(seen)):
            for j in range(i + 1, len(seen)):
                if seen[i] > seen[j]:
                    s = -s
        return s

    ref = sum(sign(p) * math.prod(rows[i][p[i]] for i in range(4)) for p in permutations(range(4)))
    assert bareiss_det(rows) == ref


# bordered determinants
def test_monic_from_hankel_examples():
    assert monic_from_hankel(M(1, 0, F(1, 2), 0, F(3, 4)), 2).coeffs == (F(-1, 2), 0, 1)
    assert monic_from_hankel(M(2, 0, F(2, 3), 0, F(2, 5)), 2).coeffs == (F(-1, 3), 0, 1)
    assert monic_from_hankel(M(5), 0).coeffs == (1,)


def test_monic_from_hankel_singular():
    with pytest.raises(SingularHankel):
        monic_from_hankel(M(1, 1, 1, 1), 2)


@given(moment_seqs(9, 9))
def test_monic_from_hankel_orthogonality(u):
    rep = hankel_determinants(u, 4)
    assume(rep.regular)
    for n in range(1, 5):
        P = monic_from_hankel(u, n)
        assert P.degree == n and P.leading == 1
        for m in range(n):
            assert apply(u, P * DensePolynomial.monomial(m)) == 0
        assert apply(u, P * DensePolynomial.monomial(n)) == F(rep.H(n)) / rep.H(n - 1)


# derivative and multiplication
def test_derivative_examples():
    assert list(derivative_functional(M(1, 0, F(1, 2)))) == [0, -1, 0]
    assert list(derivative_functional(dirac_moments(0, 2))) == [0, -1, 0]


def test_multiply_examples():
    assert list(multiply_by_polynomial(M(1, 0, F(1, 2), 0), poly(0, 1))) == [0, F(1, 2), 0]
    assert list(multiply_by_polynomial(M(1, 2, 5), poly(1))) == [1, 2, 5]
    assert list(multiply_by_polynomial(M(1, 2, 5), poly(-1, 1))) == [1, 3]


def test_divide_examples():
    assert list(divide_by_linear(M(1, 2, 5), 0)) == [0, 1, 2]
    assert list(divide_by_linear(M(1, 2, 5), 1)) == [0, 1, 3]


def test_dirac_examples():
    assert list(dirac_moments(0, 3)) == [1, 0, 0, 0]
    assert list(dirac_moments(2, 3)) == [1, 2, 4, 8]
    p = poly(3, -1, 2)
    assert apply(dirac_moments(F(1, 3), 2), p) == p(F(1, 3))


def test_product_examples():
    assert list(functional_product(M(1, 1), M(1, 1))) == [1, 2]
    u = M(3, F(1, 2), 7)
    assert functional_product(u, dirac_moments(0, 2)) == u


def test_right_multiply_examples():
    assert right_multiply(M(4, 9), poly(1)).coeffs == (4,)
    assert right_multiply(M(1, 2), poly(3, 1)).coeffs == (5, 1)
    p = poly(1, -2, 5)
    assert right_multiply(dirac_moments(0, 2), p) == p


def test_affine_examples():
    u = M(1, 2, 3)
    assert affine_image(u, 1, 0) == u
    assert list(affine_image(M(1, 1, 1), 2, 0, "forward")) == [1, 2, 4]
    assert list(affine_image(M(1, 0), 1, 1, "forward")) == [1, 1]


@given(moment_seqs(5, 10), small_fractions())
def test_leibniz(u, c0):
    phi = poly(c0, 1, 2)
    lhs = derivative_functional(multiply_by_polynomial(u, phi))
    rhs1 = multiply_by_polynomial(derivative_functional(u), phi)
    rhs2 = multiply_by_polynomial(u, phi.derivative())
    n = min(len(lhs), len(rhs1), len(rhs2))
    assert all(lhs[i] == rhs1[i] + rhs2[i] for i in range(n))


@given(moment_seqs(), small_fractions())
def test_division_identities(u, c):
    back = multiply_by_polynomial(divide_by_linear(u, c), poly(-c, 1))
    assert list(back) == list(u)[: len(back)]
    again = divide_by_linear(multiply_by_polynomial(u, poly(-c, 1)), c)
    delta = dirac_moments(c, len(u) - 1)
    assert all(again[n] == u[n] - u[0] * delta[n] for n in range(len(again)))


@given(moment_seqs(), moment_seqs())
def test_product_commutative(u, v):
    assert functional_product(u, v) == functional_product(v, u)


@given(moment_seqs(), small_fractions(), small_fractions())
def test_affine_inverse(u, a, b):
    assume(a != 0)
    for orient in ("forward", "reduce"):
        there = affine_image(u, a, b, orient)
        back = affine_image(there, 1 / a, -b / a, orient)
        assert back == u


def test_pearson_residual_hermite():
    r = pearson_residual(M(SQPI, 0.0, SQPI / 2, 0.0), PearsonPair(0, 0, 1, -2, 0), 1)
    assert abs(r[0]) < 1e-15 and abs(r[1]) < 1e-15


def test_pearson_residual_bessel_forces_u1():
    alpha = F(1, 3)
    pair = PearsonPair(1, 0, 0, alpha + 2, 2)
    u = M(1, -2 / (alpha + 2), 0)
    assert pearson_residual(u, pair, 0) == [0]


def test_pearson_residual_zero_functional():
    assert pearson_residual(M(0, 0, 0, 0), PearsonPair(1, 2, 3, 4, 5), 2) == [0, 0, 0]


def test_json_roundtrip():
    u = M(F(1, 3), 2, F(-5, 7))
    obj = u.to_json()
    assert obj == {"moments": ["1/3", 2, "-5/7"], "exact": True}
    assert MomentSequence.from_json(obj) == u
    fl = MomentSequence.from_json({"moments": [1.5, "1/2"], "exact": False})
    assert list(fl) == [1.5, 0.5]


def test_rejects_nonfinite():
    with pytest.raises(ValueError):
        M(1.0, float("nan"))
