"""Stieltjes transforms, Markov approximants and Perron-Stieltjes inversion."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import mpmath

from .errors import OnCut, Overflow, PoleHit, QuadratureFailure
from .functional import MomentSequence
from .quadrature import QuadratureRule, gauss_rule
from .recurrence import RecurrenceCoefficients

DEFAULT_EPS = (1e-2, 5e-3, 2.5e-3)
MARKOV_RESCALE = 1e100


@dataclass(frozen=True)
class StieltjesTransform:
    """F(z) = integral of d mu(x) / (z - x), as an evaluator handle."""

    evaluator: Callable[[complex], complex]
    kind: str
    meta: dict = field(default_factory=dict)

    def __call__(self, z: complex) -> complex:
        return self.evaluator(complex(z))


def transform_of_rule(rule: QuadratureRule, z: complex) -> complex:
    z = complex(z)
    scale = max([1.0] + [abs(x) for x in rule.nodes])
    total = 0j
    for x, a in zip(rule.nodes, rule.weights):
        if abs(z - x) < 1e-14 * scale:
            raise PoleHit(f"z = {z} coincides with node {x}")
        total += a / (z - x)
    return total


def _mp(v) -> "mpmath.mpc":
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpmathify(v)


def markov_ratio(rc: RecurrenceCoefficients, n: int, z: complex, dps: int = 30) -> complex:
    """u0 P^{(1)}_{n-1}(z) / P_n(z).

    Numerator and denominator obey the same recurrence with different
    starting values, so they are advanced together and rescaled jointly.
    The recurrence runs at ``dps`` digits so the rounded result does not
    carry accumulated roundoff once the approximant has converged.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rc.require(n, n - 1, "markov_ratio")
    with mpmath.workdps(dps):
        z = mpmath.mpc(complex(z))
        # Q_k = P_k for the denominator and P^{(1)}_{k-1} for the numerator
        p_prev, p = mpmath.mpc(0), mpmath.mpc(1)
        q_prev, q = mpmath.mpc(0), mpmath.mpc(0)
        for k in range(n):
            g = _mp(rc.gamma[k - 1]) if k > 0 else 0
            b = _mp(rc.beta[k])
            p_prev, p = p, (z - b) * p - g * p_prev
            if k == 0:
                q_prev, q = q, mpmath.mpc(1)
            else:
                q_prev, q = q, (z - b) * q - g * q_prev
            m = max(abs(p), abs(q))
            if m > MARKOV_RESCALE:
                p_prev, p, q_prev, q = p_prev / m, p / m, q_prev / m, q / m
        if p == 0 or abs(p) < mpmath.mpf(1e-290) * abs(q):
            raise PoleHit(f"P_{n}(z) vanishes at z = {complex(z)}")
        return complex(_mp(rc.u0) * q / p)


def _sqrt_z2m1(z: complex) -> complex:
    s = cmath.exp(0.5 * (cmath.log(z - 1) + cmath.log(z + 1)))
    if z.imag == 0 and z.real > 1 and s.real < 0:
        s = -s
    return s


def chebyshev_closed_form(kind: str, z: complex) -> complex:
    """Transform of the normalized Chebyshev measures (mass 1) off [-1, 1]."""
    z = complex(z)
    if z.imag == 0 and -1 <= z.real <= 1:
        raise OnCut(f"z = {z.real} lies on the cut [-1, 1]")
    s = _sqrt_z2m1(z)
    if kind == "first":
        return 1 / s
    if kind == "second":
        return 2 / (z + s)  # = 2 (z - s) without cancellation
    raise ValueError(f"unknown kind {kind!r}")


def rule_transform(rule: QuadratureRule) -> StieltjesTransform:
    return StieltjesTransform(lambda z: transform_of_rule(rule, z), "rule-based", {"n": rule.order, "family": rule.family})


def closed_form_transform(kind: str) -> StieltjesTransform:
    return StieltjesTransform(lambda z: chebyshev_closed_form(kind, z), "closed-form", {"chebyshev": kind})


def markov_transform(rc: RecurrenceCoefficients, n: int) -> StieltjesTransform:
    return StieltjesTransform(lambda z: markov_ratio(rc, n, z), "markov-ratio", {"n": n})


def dirac_transform(c: float = 0.0, mass: float = 1.0) -> StieltjesTransform:
    def ev(z: complex) -> complex:
        if z == c:
            raise PoleHit(f"z = {z} is the atom")
        return mass / (z - c)

    return StieltjesTransform(ev, "closed-form", {"dirac": c, "mass": mass})


@dataclass(frozen=True)
class InversionResult:
    interval: tuple
    estimate: float
    epsilon_sequence: tuple
    extrapolated: float


@lru_cache(maxsize=None)
def _legendre16() -> tuple[tuple, tuple]:
    from .families import legendre, recurrence_coeffs

    rule = gauss_rule(recurrence_coeffs(legendre(), 16), 16)
    return rule.nodes, rule.weights


def _poisson_integral(F: Callable[[complex], complex], a: float, b: float, eps: float, panels: int) -> float:
    xs, ws = _legendre16()
    h = (b - a) / panels
    acc = []
    for k in range(panels):
        mid = a + (k + 0.5) * h
        for x, w in zip(xs, ws):
            v = F(complex(mid + 0.5 * h * x, -eps)).imag
            if not math.isfinite(v):
                raise QuadratureFailure(f"non-finite integrand at x = {mid + 0.5 * h * x}")
            acc.append(w * v)
    return 0.5 * h * math.fsum(acc) / math.pi


def invert_interval(F: Callable[[complex], complex], a: float, b: float,
                    eps_list: Sequence[float] | None = None, panels: int = 200) -> InversionResult:
    """Estimate mu((a,b)) + (mu({a}) + mu({b}))/2 from Im F(x - i eps).

    Each eps gives a composite Gauss-Legendre value; the two smallest are
    extrapolated linearly to eps = 0.
    """
    eps_list = list(DEFAULT_EPS if eps_list is None else eps_list)
    if not a < b:
        raise ValueError("need a < b")
    if not eps_list or any(e <= 0 for e in eps_list) or any(x <= y for x, y in zip(eps_list, eps_list[1:])):
        raise ValueError("eps_list must be positive and strictly decreasing")
    seq = tuple((e, _poisson_integral(F, a, b, e, panels)) for e in eps_list)
    if len(seq) >= 2:
        (e1, v1), (e2, v2) = seq[-2], seq[-1]
        extrap = (e1 * v2 - e2 * v1) / (e1 - e2)
    else:
        extrap = seq[-1][1]
    return InversionResult((a, b), seq[-1][1], seq, extrap)


def density_estimate(F: Callable[[complex], complex], x: float, eps: float) -> float:
    if eps <= 0:
        raise ValueError("eps must be positive")
    return F(complex(x, -eps)).imag / math.pi


def stieltjes_indeterminate_moments(c: float, N: int) -> MomentSequence:
    """u_n = sqrt(pi/c) exp((n+1)^2 / (4c)), shared by a whole family of distinct measures."""
    if not c > 0:
        raise ValueError("c must be positive")
    if (N + 1) ** 2 / (4 * c) > 700:
        raise Overflow(f"u_{N} overflows binary64")
    base = math.sqrt(math.pi / c)
    return MomentSequence(tuple(base * math.exp((n + 1) ** 2 / (4 * c)) for n in range(N + 1)))
