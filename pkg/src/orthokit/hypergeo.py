"""Gamma and beta functions, generalized hypergeometric series and classical summation identities."""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

import numpy as np

from .errors import (ConstraintViolated, DivergentSeries, InvalidSpec, NoConvergence, NotTerminating,
                     ParameterDomain, PoleAt, UnsupportedFamily)
from .scalars import Scalar, all_exact, is_exact, is_nonpositive_integer, parse_scalar, simplify

_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2 * math.pi)
DIRECT_CAP = 10**6


def _is_real_input(z) -> bool:
    return not isinstance(z, complex)


def _sin_pi(z: complex) -> complex:
    """sin(pi z) with the integer part removed first to keep relative accuracy near integers."""
    k = round(z.real)
    s = cmath.sin(math.pi * (z - k))
    return -s if k % 2 else s


def gamma_fn(z: Scalar) -> Scalar:
    """Gamma function: Lanczos (g = 7, 9 terms) with reflection for Re z < 1/2."""
    real = _is_real_input(z)
    zc = complex(float(z)) if real else complex(z)
    if zc.imag == 0 and zc.real <= 0 and zc.real == math.floor(zc.real):
        raise PoleAt(f"gamma has a pole at {z}")
    if zc.real < 0.5:
        out = math.pi / (_sin_pi(zc) * _lanczos(1 - zc))
    else:
        out = _lanczos(zc)
    return out.real if real else out


def _lanczos(z: complex) -> complex:
    z = z - 1
    acc = complex(_LANCZOS[0])
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * acc


def gamma_gauss_oracle(z: Scalar, n: int, chunk: int = 1 << 20) -> Scalar:
    """The Gauss limit n! n^{z-1} / (z)_n at finite n, summed in logarithms."""
    if is_nonpositive_integer(z):
        raise PoleAt(f"gamma has a pole at {z}")
    if n < 1:
        raise ValueError("n must be at least 1")
    real = _is_real_input(z)
    w = complex(z) - 1
    # n!/(z)_n = prod_{k=1}^n 1/(1 + (z-1)/k)
    total = 0j
    for start in range(1, n + 1, chunk):
        k = np.arange(start, min(start + chunk, n + 1), dtype=float)
        total += complex(np.sum(np.log1p(w / k)))
    out = cmath.exp(w * math.log(n) - total)
    return out.real if real else out


def beta_fn(x: Scalar, y: Scalar) -> Scalar:
    for v in (x, y, complex(x) + complex(y)):
        if is_nonpositive_integer(v):
            raise PoleAt(f"beta has a pole: argument {v}")
    return gamma_fn(x) * gamma_fn(y) / gamma_fn(x + y)


def pochhammer(a: Scalar, n: int) -> Scalar:
    """Rising factorial (a)_n; exact for rational a."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: Scalar = Fraction(1) if is_exact(a) else 1
    for j in range(n):
        out = out * (a + j)
    return out


@dataclass(frozen=True)
class HypSeriesSpec:
    """pFq(a_params; b_params; x)."""

    a_params: tuple
    b_params: tuple
    x: Scalar

    def __post_init__(self):
        object.__setattr__(self, "a_params", tuple(parse_scalar(v) for v in self.a_params))
        object.__setattr__(self, "b_params", tuple(parse_scalar(v) for v in self.b_params))
        object.__setattr__(self, "x", parse_scalar(self.x))
        for b in self.b_params:
            if is_nonpositive_integer(b):
                raise InvalidSpec(f"denominator parameter {b} is a nonpositive integer")

    @property
    def p(self) -> int:
        return len(self.a_params)

    @property
    def q(self) -> int:
        return len(self.b_params)

    @property
    def exact(self) -> bool:
        return all_exact(self.a_params + self.b_params + (self.x,))

    def termination_index(self) -> int | None:
        """Smallest m with some a = -m, i.e. the last nonzero term index."""
        ms = [int(-complex(a).real) for a in self.a_params if is_nonpositive_integer(a)]
        return min(ms) if ms else None


@dataclass(frozen=True)
class ConvergenceClass:
    verdict: str
    reason: str


def _abs_is_one(x: Scalar) -> bool:
    if is_exact(x):
        return abs(x) == 1
    return abs(abs(complex(x)) - 1) <= 1e-15


def _is_one(x: Scalar) -> bool:
    if is_exact(x):
        return x == 1
    return abs(complex(x) - 1) <= 1e-15


def classify_convergence(spec: HypSeriesSpec) -> ConvergenceClass:
    if spec.termination_index() is not None:
        return ConvergenceClass("terminates", "a numerator parameter is a nonpositive integer")
    p, q, x = spec.p, spec.q, spec.x
    if p <= q:
        return ConvergenceClass("absolute", "p <= q: absolutely convergent for every x")
    if p > q + 1:
        if x == 0:
            return ConvergenceClass("absolute", "p > q + 1 with x = 0")
        return ConvergenceClass("divergent", "p > q + 1 and x != 0")
    ax = abs(complex(x))
    if not _abs_is_one(x):
        if ax < 1:
            return ConvergenceClass("absolute", "p = q + 1 and |x| < 1")
        return ConvergenceClass("divergent", "p = q + 1 and |x| > 1")
    s = (sum(complex(a) for a in spec.a_params) - sum(complex(b) for b in spec.b_params)).real
    if s < 0:
        return ConvergenceClass("absolute", "|x| = 1 and Re(sum a - sum b) < 0")
    if s < 1 and not _is_one(x):
        return ConvergenceClass("conditional", "|x| = 1, x != 1 and 0 <= Re(sum a - sum b) < 1")
    if s < 1:
        return ConvergenceClass("divergent", "x = 1 and Re(sum a - sum b) >= 0")
    return ConvergenceClass("divergent", "|x| = 1 and Re(sum a - sum b) >= 1")


def _ratio(spec: HypSeriesSpec, n: int):
    num = 1
    for a in spec.a_params:
        num = num * (n + a)
    den = n + 1
    for b in spec.b_params:
        den = den * (n + b)
    return num, den


def _as_output(v: complex, spec: HypSeriesSpec):
    if all(not isinstance(t, complex) for t in spec.a_params + spec.b_params + (spec.x,)):
        return v.real
    return v


def terminating_sum(spec: HypSeriesSpec):
    """Finite sum of a terminating series in the arithmetic of its inputs."""
    m = spec.termination_index()
    if m is None:
        raise NotTerminating("no numerator parameter is a nonpositive integer")
    term = Fraction(1) if spec.exact else 1
    total = term
    for n in range(m):
        num, den = _ratio(spec, n)
        term = term * num * spec.x / den
        total = total + term
    return total


def pfq_exact_terminating(spec: HypSeriesSpec) -> Fraction:
    if spec.termination_index() is None:
        raise NotTerminating("no numerator parameter is a nonpositive integer")
    if not spec.exact:
        raise ParameterDomain("exact summation needs rational parameters and argument")
    return Fraction(terminating_sum(spec))


def _direct(spec: HypSeriesSpec, tol: float, cap: int, conditional: bool):
    x = complex(spec.x)
    a = [complex(v) for v in spec.a_params]
    b = [complex(v) for v in spec.b_params]
    term = 1 + 0j
    re_parts, im_parts = [1.0], [0.0]
    total = 1 + 0j
    small = 0
    for n in range(cap):
        num = 1 + 0j
        for v in a:
            num *= n + v
        den = complex(n + 1)
        for v in b:
            den *= n + v
        term = term * num / den * x
        re_parts.append(term.real)
        im_parts.append(term.imag)
        total += term
        if abs(term) < tol * abs(total) or term == 0:
            small += 1
            if small >= 3 and not conditional:
                return complex(math.fsum(re_parts), math.fsum(im_parts))
        else:
            small = 0
    if conditional:
        warnings.warn(f"conditionally convergent series summed directly to {cap} terms", RuntimeWarning)
        return complex(math.fsum(re_parts), math.fsum(im_parts))
    raise NoConvergence(f"series did not reach tolerance within {cap} terms")


def pfq_unit_argument(spec: HypSeriesSpec, levels: int = 7, base: int = 500) -> complex:
    """Sum of a p+1Fp series at x = 1 with Re(sum b - sum a) > 0.

    Partial sums S_N at N = base * 2^j are fitted to S + N^{-s}(C_0 + C_1/N + ...),
    s = sum b - sum a, which is the Euler-Maclaurin shape of the tail.
    """
    s = sum(complex(v) for v in spec.b_params) - sum(complex(v) for v in spec.a_params)
    if s.real <= 0:
        raise DivergentSeries("unit-argument summation needs Re(sum b - sum a) > 0")
    a = [complex(v) for v in spec.a_params]
    b = [complex(v) for v in spec.b_params]
    checkpoints = [base * 2**j for j in range(levels)]
    sums = []
    term = 1 + 0j
    re_parts, im_parts = [1.0], [0.0]
    n_done = 1  # number of terms accumulated
    for N in checkpoints:
        while n_done < N:
            n = n_done - 1
            num = 1 + 0j
            for v in a:
                num *= n + v
            den = complex(n + 1)
            for v in b:
                den *= n + v
            term = term * num / den
            re_parts.append(term.real)
            im_parts.append(term.imag)
            n_done += 1
        sums.append(complex(math.fsum(re_parts), math.fsum(im_parts)))
    Ns = np.array(checkpoints, dtype=float)
    cols = [np.ones(levels, dtype=complex)] + [Ns ** (-s - k) for k in range(levels - 1)]
    A = np.column_stack(cols)
    scale = np.max(np.abs(A), axis=0)
    scale[scale == 0] = 1.0
    sol = np.linalg.solve(A / scale, np.array(sums))
    return complex(sol[0] / scale[0])


def pfq_sum(spec: HypSeriesSpec, tol: float = 1e-15):
    """Numerical value of pFq by forward term recurrence."""
    cls = classify_convergence(spec)
    if cls.verdict == "divergent":
        raise DivergentSeries(cls.reason)
    if cls.verdict == "terminates":
        v = terminating_sum(spec)
        return _as_output(complex(v), spec)
    if spec.p == spec.q + 1 and _abs_is_one(spec.x):
        if _is_one(spec.x):
            return _as_output(pfq_unit_argument(spec), spec)
        return _as_output(_direct(spec, tol, DIRECT_CAP, conditional=True), spec)
    return _as_output(_direct(spec, tol, DIRECT_CAP, conditional=False), spec)


def hyp(a: Sequence, b: Sequence, x) -> Scalar:
    """Shorthand for pfq_sum(HypSeriesSpec(a, b, x))."""
    return pfq_sum(HypSeriesSpec(tuple(a), tuple(b), x))


@dataclass(frozen=True)
class IdentityReport:
    name: str
    lhs: Scalar
    rhs: Scalar
    residual: Scalar
    exact: bool
    params: dict = field(default_factory=dict)

    @property
    def relative_residual(self) -> float:
        if self.exact:
            return 0.0 if self.lhs == self.rhs else math.inf
        return abs(self.lhs - self.rhs) / max(abs(self.rhs), 1e-300)


IDENTITIES = ("gauss", "chu-vandermonde", "pfaff-saalschutz", "dixon", "dougall",
              "pfaff-transform", "euler-transform", "reflection", "duplication")


def _nonneg_int(v, name: str) -> int:
    if is_exact(v) and Fraction(v).denominator == 1 and v >= 0:
        return int(v)
    if isinstance(v, float) and v.is_integer() and v >= 0:
        return int(v)
    raise ConstraintViolated(f"{name} must be a nonnegative integer, got {v}")


def _need_not_pole(v, label: str) -> None:
    if is_nonpositive_integer(v):
        raise ConstraintViolated(f"{label} = {v} is a nonpositive integer")


def _report(name, lhs, rhs, exact, params) -> IdentityReport:
    if exact:
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        return IdentityReport(name, simplify(lhs), simplify(rhs), simplify(abs(lhs - rhs)), True, params)
    return IdentityReport(name, lhs, rhs, abs(lhs - rhs), False, params)


def _spec(a, b, x) -> HypSeriesSpec:
    try:
        return HypSeriesSpec(tuple(a), tuple(b), x)
    except InvalidSpec as exc:
        raise ConstraintViolated(str(exc)) from None


def _lhs(spec: HypSeriesSpec, exact: bool):
    if exact:
        return pfq_exact_terminating(spec)
    return pfq_sum(spec)


def identity_report(name: str, params: dict, exact: bool | None = None) -> IdentityReport:
    """Evaluate both sides of a named summation or transformation identity."""
    P = {k: parse_scalar(v) for k, v in params.items()}
    if exact is None:
        exact = all_exact(P.values()) and name in ("chu-vandermonde", "pfaff-saalschutz", "dougall") or \
            (name == "dixon" and all_exact(P.values()) and _dixon_terminating(P))
    if exact and not all_exact(P.values()):
        raise ParameterDomain("exact mode needs rational parameters")
    try:
        handler = _HANDLERS[name]
    except KeyError:
        raise ParameterDomain(f"unknown identity {name!r}; expected one of {', '.join(IDENTITIES)}") from None
    if exact:
        P = {k: Fraction(v) for k, v in P.items()}
    return handler(P, exact)


def _get(P: dict, *names):
    missing = [n for n in names if n not in P]
    if missing:
        raise ConstraintViolated(f"missing parameters {missing}")
    return [P[n] for n in names]


def _gauss(P, exact):
    a, b, c = _get(P, "a", "b", "c")
    if exact:
        raise ParameterDomain("the gauss right side is gamma-based and has no exact form")
    if not (complex(c) - complex(a) - complex(b)).real > 0:
        raise ConstraintViolated("Gauss summation needs Re(c - a - b) > 0")
    _need_not_pole(c, "c")
    lhs = pfq_sum(_spec((a, b), (c,), 1))
    rhs = gamma_fn(c) * gamma_fn(c - a - b) / (gamma_fn(c - a) * gamma_fn(c - b))
    return _report("gauss", lhs, rhs, False, P)


def _chu(P, exact):
    n, a, c = _get(P, "n", "a", "c")
    n = _nonneg_int(n, "n")
    _need_not_pole(c, "c")
    spec = _spec((-n, a), (c,), 1)
    lhs = _lhs(spec, exact)
    rhs = pochhammer(c - a, n) / pochhammer(c, n)
    return _report("chu-vandermonde", lhs, rhs, exact, P)


def _saalschutz(P, exact):
    n, a, b, c = _get(P, "n", "a", "b", "c")
    n = _nonneg_int(n, "n")
    _need_not_pole(c, "c")
    _need_not_pole(1 + a + b - c - n, "1+a+b-c-n")
    den = pochhammer(c, n) * pochhammer(c - a - b, n)
    if den == 0:
        raise ConstraintViolated("(c)_n (c-a-b)_n vanishes")
    lhs = _lhs(_spec((-n, a, b), (c, 1 + a + b - c - n), 1), exact)
    rhs = pochhammer(c - a, n) * pochhammer(c - b, n) / den
    return _report("pfaff-saalschutz", lhs, rhs, exact, P)


def _dixon_terminating(P) -> bool:
    return any(k in P and is_exact(P[k]) and Fraction(P[k]).denominator == 1 and P[k] >= 0 for k in ("b", "c"))


def _dixon(P, exact):
    a, b, c = _get(P, "a", "b", "c")
    _need_not_pole(1 + a + b, "1+a+b")
    _need_not_pole(1 + a + c, "1+a+c")
    spec = _spec((a, -b, -c), (1 + a + b, 1 + a + c), 1)
    terminating = spec.termination_index() is not None
    if terminating and _dixon_terminating(P):
        if not (is_exact(c) and Fraction(c).denominator == 1 and c >= 0):
            b, c = c, b
        n = int(c)
        den = pochhammer(1 + Fraction(a) / 2 if is_exact(a) else 1 + a / 2, n) * pochhammer(1 + a + b, n)
        if den == 0:
            raise ConstraintViolated("Dixon right side has a vanishing denominator")
        half = Fraction(a) / 2 if is_exact(a) else a / 2
        rhs = pochhammer(1 + a, n) * pochhammer(1 + half + b, n) / den
        lhs = _lhs(spec, exact) if exact else pfq_sum(spec)
        if not exact:
            rhs = complex(rhs) if isinstance(rhs, complex) else float(rhs)
        return _report("dixon", lhs, rhs, exact, P)
    if exact:
        raise ParameterDomain("nonterminating Dixon has a gamma-based right side")
    if not (complex(a) + 2 * complex(b) + 2 * complex(c) + 2).real > 0:
        raise ConstraintViolated("nonterminating Dixon needs Re(a + 2b + 2c + 2) > 0")
    lhs = pfq_sum(spec)
    try:
        rhs = (gamma_fn(1 + a / 2) * gamma_fn(1 + a + b) * gamma_fn(1 + a + c) * gamma_fn(1 + a / 2 + b + c)) / (
            gamma_fn(1 + a) * gamma_fn(1 + a / 2 + b) * gamma_fn(1 + a / 2 + c) * gamma_fn(1 + a + b + c))
    except PoleAt as exc:
        raise ConstraintViolated(f"Dixon right side undefined: {exc}") from None
    return _report("dixon", lhs, rhs, False, P)


def _dougall(P, exact):
    n, a, b, c, d = _get(P, "n", "a", "b", "c", "d")
    n = _nonneg_int(n, "n")
    balance = -(1 + 2 * a + b + c + d + n)
    e = P.get("e", balance)
    if e != balance:
        raise ConstraintViolated("Dougall needs 1 + 2a + b + c + d + e + n = 0")
    half = Fraction(a) / 2 if is_exact(a) else a / 2
    lower = (half, 1 + a + b, 1 + a + c, 1 + a + d, 1 + a + e, 1 + a + n)
    for lab, v in zip(("a/2", "1+a+b", "1+a+c", "1+a+d", "1+a+e", "1+a+n"), lower):
        _need_not_pole(v, lab)
    spec = _spec((-n, a, 1 + half, -b, -c, -d, -e), lower, 1)
    den = pochhammer(1 + a + b, n) * pochhammer(1 + a + c, n) * pochhammer(1 + a + d, n) * pochhammer(1 + a + b + c + d, n)
    if den == 0:
        raise ConstraintViolated("Dougall right side has a vanishing denominator")
    rhs = pochhammer(1 + a, n) * pochhammer(1 + a + b + c, n) * pochhammer(1 + a + b + d, n) * pochhammer(1 + a + c + d, n) / den
    lhs = _lhs(spec, exact)
    if not exact:
        rhs = float(rhs) if isinstance(rhs, Fraction) else rhs
    P = dict(P, e=e)
    return _report("dougall", lhs, rhs, exact, P)


def _principal_pow(base: Scalar, expo: Scalar) -> Scalar:
    v = cmath.exp(complex(expo) * cmath.log(complex(base)))
    return v.real if not isinstance(base, complex) and not isinstance(expo, complex) and complex(base).real > 0 else v


def _pfaff(P, exact):
    a, b, c, x = _get(P, "a", "b", "c", "x")
    if exact:
        raise ParameterDomain("transform identities are evaluated in floating point")
    _need_not_pole(c, "c")
    x = complex(x) if isinstance(x, complex) else float(x)
    if not (abs(x) < 1 and abs(x / (x - 1)) < 1):
        raise ConstraintViolated("Pfaff transform needs |x| < 1 and |x/(x-1)| < 1")
    lhs = pfq_sum(_spec((a, b), (c,), x))
    rhs = _principal_pow(1 - x, -a) * pfq_sum(_spec((a, c - b), (c,), x / (x - 1)))
    return _report("pfaff-transform", lhs, rhs, False, P)


def _euler(P, exact):
    a, b, c, x = _get(P, "a", "b", "c", "x")
    if exact:
        raise ParameterDomain("transform identities are evaluated in floating point")
    _need_not_pole(c, "c")
    x = complex(x) if isinstance(x, complex) else float(x)
    if not abs(x) < 1:
        raise ConstraintViolated("Euler transform needs |x| < 1")
    lhs = pfq_sum(_spec((a, b), (c,), x))
    rhs = _principal_pow(1 - x, c - a - b) * pfq_sum(_spec((c - a, c - b), (c,), x))
    return _report("euler-transform", lhs, rhs, False, P)


def _reflection(P, exact):
    (z,) = _get(P, "z")
    if exact:
        raise ParameterDomain("reflection is evaluated in floating point")
    zc = complex(z)
    if zc.imag == 0 and zc.real == math.floor(zc.real):
        raise ConstraintViolated("reflection needs z outside the integers")
    lhs = gamma_fn(z) * gamma_fn(1 - z)
    rhs = math.pi / _sin_pi(zc)
    rhs = rhs.real if not isinstance(z, complex) else rhs
    return _report("reflection", lhs, rhs, False, P)


def _duplication(P, exact):
    (z,) = _get(P, "z")
    if exact:
        raise ParameterDomain("duplication is evaluated in floating point")
    if is_nonpositive_integer(2 * complex(z)):
        raise ConstraintViolated("duplication needs 2z outside the nonpositive integers")
    z = float(z) if not isinstance(z, complex) else z
    lhs = gamma_fn(z) * gamma_fn(z + 0.5)
    rhs = _principal_pow(2, 1 - 2 * z) * math.sqrt(math.pi) * gamma_fn(2 * z)
    return _report("duplication", lhs, rhs, False, P)


_HANDLERS = {
    "gauss": _gauss,
    "chu-vandermonde": _chu,
    "pfaff-saalschutz": _saalschutz,
    "dixon": _dixon,
    "dougall": _dougall,
    "pfaff-transform": _pfaff,
    "euler-transform": _euler,
    "reflection": _reflection,
    "duplication": _duplication,
}


def euler_integral_2f1(a: Scalar, b: float, c: float, x: float, n: int = 60) -> Scalar:
    """2F1(a, b; c; x) from its Euler integral, by an n-point Gauss-Jacobi rule on [0, 1]."""
    from .families import jacobi, recurrence_coeffs
    from .quadrature import gauss_rule

    if isinstance(b, complex) or isinstance(c, complex) or isinstance(x, complex):
        raise ParameterDomain("the quadrature route needs real b, c and x")
    b, c, x = float(b), float(c), float(x)
    if not c > b > 0:
        raise ParameterDomain("Euler integral needs c > b > 0")
    if not x < 1:
        raise ParameterDomain("Euler integral needs x < 1")
    rc = recurrence_coeffs(jacobi(c - b - 1, b - 1), n)
    rule = gauss_rule(rc, n)
    acc = []
    for s, w in zip(rule.nodes, rule.weights):
        t = 0.5 * (1 + s)
        acc.append(w / rule.mass * _principal_pow(1 - x * t, -a))
    if any(isinstance(v, complex) for v in acc):
        return complex(math.fsum(v.real for v in acc), math.fsum(complex(v).imag for v in acc))
    return math.fsum(acc)


def _gbinom(z: Scalar, k: int) -> Scalar:
    if k < 0:
        return 0
    out: Scalar = Fraction(1) if is_exact(z) else 1.0
    for j in range(k):
        out = out * (z - j)
    return out / factorial(k)


def binomial_sum_suite(example: int, params: dict) -> IdentityReport:
    """Exact check of three closed-form binomial sums."""
    P = {k: parse_scalar(v) for k, v in params.items()}
    if example == 1:
        alpha, n = Fraction(P["alpha"]), P["n"]
        if alpha == -1:
            raise ParameterDomain("alpha = -1 is excluded")
        n = _int_at_least(n, 0, "n")
        lhs = sum(Fraction((-1) ** j) * _gbinom(alpha, j) * _gbinom(alpha - 1 - j, n - j) / (j + 1) for j in range(n + 1))
        rhs = (_gbinom(alpha, n + 1) + (-1) ** n) / (alpha + 1)
    elif example == 2:
        m, n = _int_at_least(P["m"], 1, "m"), _int_at_least(P["n"], 1, "n")
        lhs = sum(Fraction((-1) ** j, j + 1) * comb(n + j, m + 2 * j) * comb(2 * j, j) for j in range(max(n - m + 1, 0)))
        rhs = Fraction(comb(n - 1, m - 1))
    elif example == 3:
        n, p = _int_at_least(P["n"], 1, "n"), _int_at_least(P["p"], 1, "p")
        lhs = Fraction(sum(2 * k * comb(2 * p, k + p) * comb(2 * n, k + n) for k in range(1, min(n, p) + 1)))
        rhs = Fraction(4 * n * p, n + p) * comb(2 * p - 1, p) * comb(2 * n - 1, n)
    else:
        raise ParameterDomain(f"unknown binomial example {example}")
    return _report(f"binomial-{example}", lhs, rhs, True, P)


def _int_at_least(v, lo: int, name: str) -> int:
    if not (is_exact(v) and Fraction(v).denominator == 1 and v >= lo):
        raise ParameterDomain(f"{name} must be an integer >= {lo}")
    return int(v)


def classical_via_hypergeometric(f, n: int, x: Scalar) -> Scalar:
    """Standard-normalization value of a classical polynomial from its hypergeometric form."""
    k = f.kind
    exact = f.exact and is_exact(x)
    one = Fraction(1) if exact else 1.0
    if k == "hermite":
        # (2x)^n 2F0(-n/2, (1-n)/2;; -1/x^2), multiplied through by x^n term by term
        spec_a = (Fraction(-n, 2), Fraction(1 - n, 2))
        total = 0
        term = Fraction(1)
        for j in range(n // 2 + 1):
            total = total + term * (-1) ** j * 2**n * x ** (n - 2 * j)
            term = term * (spec_a[0] + j) * (spec_a[1] + j) / (j + 1)
        return simplify(total) if exact else total
    if k == "laguerre":
        (a,) = f.params
        return _finish(_gbinom(n + a, n) * terminating_sum(_spec((-n,), (a + 1,), x * one)), exact)
    if k == "jacobi":
        a, b = f.params
        return _finish(_gbinom(n + a, n) * terminating_sum(_spec((-n, n + a + b + 1), (a + 1,), (1 - x) * one / 2)), exact)
    if k == "bessel":
        (a,) = f.params
        return _finish(terminating_sum(_spec((-n, n + a + 1), (), -x * one / 2)), exact)
    if k == "charlier":
        (a,) = f.params
        return _finish((-a) ** n * terminating_sum(_spec((-n, -x), (), -one / a)), exact)
    if k == "meixner":
        beta, c = f.params
        return _finish(pochhammer(x + beta, n) * terminating_sum(_spec((-n, -x), (-x - beta - n + 1,), one / c)), exact)
    raise UnsupportedFamily(f"no hypergeometric representation for {k}")


def _finish(v, exact):
    return simplify(Fraction(v)) if exact else v
