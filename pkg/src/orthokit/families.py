"""Classical families: Hermite, Laguerre, Jacobi, Bessel and the discrete Charlier and Meixner."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import mpmath

from .errors import NotPositiveDefinite, OutOfSupport, RegularityViolation, UnsupportedFamily, DegeneratePair
from .functional import MomentSequence, PearsonPair
from .polynomial import DensePolynomial
from .recurrence import RecurrenceCoefficients
from .scalars import Scalar, all_exact, is_exact, is_real, parse_scalar, simplify

CONTINUOUS = ("hermite", "laguerre", "jacobi", "bessel")
DISCRETE = ("charlier", "meixner")


def _is_pos_int(v: Scalar) -> bool:
    """v in {1, 2, 3, ...}."""
    if isinstance(v, complex):
        if v.imag != 0:
            return False
        v = v.real
    if is_exact(v):
        return Fraction(v).denominator == 1 and v >= 1
    return float(v).is_integer() and v >= 1


def _num(v: Scalar) -> Scalar:
    v = parse_scalar(v)
    return Fraction(v) if is_exact(v) else v


@dataclass(frozen=True)
class ClassicalFamily:
    """A classical functional with its canonical parameters.

    Parameters by kind: hermite (), laguerre (alpha,), jacobi (alpha, beta),
    bessel (alpha,), charlier (a,), meixner (beta, c).
    """

    kind: str
    params: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(_num(p) for p in self.params))
        arity = {"hermite": 0, "laguerre": 1, "jacobi": 2, "bessel": 1, "charlier": 1, "meixner": 2}
        if self.kind not in arity:
            raise UnsupportedFamily(f"unknown family {self.kind!r}")
        if len(self.params) != arity[self.kind]:
            raise ValueError(f"{self.kind} takes {arity[self.kind]} parameters")
        self._check_regular()

    def _check_regular(self) -> None:
        p = self.params
        if self.kind == "laguerre" and _is_pos_int(-p[0]):
            raise RegularityViolation(f"laguerre: -alpha in N (gamma_{int(-_real(p[0]))} = 0)")
        if self.kind == "jacobi":
            a, b = p
            if _is_pos_int(-a):
                raise RegularityViolation(f"jacobi: -alpha in N (gamma_{int(-_real(a))} = 0)")
            if _is_pos_int(-b):
                raise RegularityViolation(f"jacobi: -beta in N (gamma_{int(-_real(b))} = 0)")
            if _is_pos_int(-(a + b + 1)):
                raise RegularityViolation(f"jacobi: -(alpha+beta+1) in N (gamma_{int(-_real(a + b + 1)) + 1} = 0)")
        if self.kind == "bessel" and _is_pos_int(-(p[0] + 1)):
            raise RegularityViolation(f"bessel: -(alpha+1) in N (gamma_{int(-_real(p[0] + 1))} = 0)")
        if self.kind == "charlier" and p[0] == 0:
            raise RegularityViolation("charlier: a = 0 (gamma_1 = 0)")
        if self.kind == "meixner":
            beta, c = p
            if c == 0 or c == 1:
                raise RegularityViolation("meixner: c in {0, 1}")
            if beta == 0 or _is_pos_int(-beta):
                raise RegularityViolation("meixner: -beta in N_0")

    @property
    def exact(self) -> bool:
        return all_exact(self.params)

    @property
    def continuous(self) -> bool:
        return self.kind in CONTINUOUS

    def param_dict(self) -> dict:
        names = {"hermite": (), "laguerre": ("alpha",), "jacobi": ("alpha", "beta"), "bessel": ("alpha",),
                 "charlier": ("a",), "meixner": ("beta", "c")}[self.kind]
        return dict(zip(names, (simplify(p) for p in self.params)))


def _real(v):
    return v.real if isinstance(v, complex) else v


def hermite() -> ClassicalFamily:
    return ClassicalFamily("hermite")


def laguerre(alpha: Scalar = 0) -> ClassicalFamily:
    return ClassicalFamily("laguerre", (alpha,))


def jacobi(alpha: Scalar, beta: Scalar) -> ClassicalFamily:
    return ClassicalFamily("jacobi", (alpha, beta))


def bessel(alpha: Scalar = 0) -> ClassicalFamily:
    return ClassicalFamily("bessel", (alpha,))


def charlier(a: Scalar) -> ClassicalFamily:
    return ClassicalFamily("charlier", (a,))


def meixner(beta: Scalar, c: Scalar) -> ClassicalFamily:
    return ClassicalFamily("meixner", (beta, c))


def legendre() -> ClassicalFamily:
    return jacobi(0, 0)


def chebyshev_t() -> ClassicalFamily:
    return jacobi(Fraction(-1, 2), Fraction(-1, 2))


def chebyshev_u() -> ClassicalFamily:
    return jacobi(Fraction(1, 2), Fraction(1, 2))


def gegenbauer(lam: Scalar) -> ClassicalFamily:
    lam = _num(lam)
    return jacobi(lam - Fraction(1, 2), lam - Fraction(1, 2))


def family_from_name(name: str, params: dict | None = None) -> ClassicalFamily:
    """Resolve CLI family names and aliases; params maps names to scalars."""
    params = {k: _num(v) for k, v in (params or {}).items()}
    name = name.lower()
    simple = {"hermite": hermite, "legendre": legendre, "chebyshev-t": chebyshev_t, "chebyshev-u": chebyshev_u}
    try:
        if name in simple:
            _no_extra(params, set())
            return simple[name]()
        if name == "laguerre":
            _no_extra(params, {"alpha"})
            return laguerre(params.get("alpha", 0))
        if name == "jacobi":
            _no_extra(params, {"alpha", "beta"})
            return jacobi(params.get("alpha", 0), params.get("beta", 0))
        if name == "bessel":
            _no_extra(params, {"alpha"})
            return bessel(params.get("alpha", 0))
        if name == "charlier":
            _no_extra(params, {"a"})
            return charlier(params["a"])
        if name == "meixner":
            _no_extra(params, {"beta", "c"})
            return meixner(params["beta"], params["c"])
        if name == "gegenbauer":
            _no_extra(params, {"lambda"})
            return gegenbauer(params["lambda"])
    except KeyError as exc:
        raise ValueError(f"family {name} requires parameter {exc.args[0]}") from None
    raise UnsupportedFamily(f"unknown family {name!r}")


def _no_extra(params: dict, allowed: set) -> None:
    extra = set(params) - allowed
    if extra:
        raise ValueError(f"unexpected parameters {sorted(extra)}")


def pearson_pair(f: ClassicalFamily) -> PearsonPair:
    if f.kind == "hermite":
        return PearsonPair(0, 0, 1, -2, 0)
    if f.kind == "laguerre":
        (a,) = f.params
        return PearsonPair(0, 1, 0, -1, a + 1)
    if f.kind == "jacobi":
        a, b = f.params
        return PearsonPair(-1, 0, 1, -(a + b + 2), b - a)
    if f.kind == "bessel":
        (a,) = f.params
        return PearsonPair(1, 0, 0, a + 2, 2)
    raise UnsupportedFamily(f"{f.kind} is discrete and has no continuous Pearson pair")


def _sqrt(v: Scalar) -> Scalar:
    """Square root, exact for perfect-square rationals."""
    if is_exact(v):
        v = Fraction(v)
        if v >= 0:
            n, d = math.isqrt(v.numerator), math.isqrt(v.denominator)
            if n * n == v.numerator and d * d == v.denominator:
                return Fraction(n, d)
            return math.sqrt(v)
        return cmath.sqrt(float(v))
    if isinstance(v, complex) or v < 0:
        return cmath.sqrt(v)
    return math.sqrt(v)


def jacobi_mass(alpha: Scalar, beta: Scalar) -> Scalar:
    """2^{alpha+beta+1} B(alpha+1, beta+1), exact for nonnegative integer exponents."""
    if is_exact(alpha) and is_exact(beta) and Fraction(alpha).denominator == 1 and Fraction(beta).denominator == 1 \
            and alpha >= 0 and beta >= 0:
        a, b = int(alpha), int(beta)
        return Fraction(2 ** (a + b + 1) * factorial(a) * factorial(b), factorial(a + b + 1))
    a, b = complex(alpha), complex(beta)
    if a.imag == 0 and b.imag == 0:
        a, b = a.real, b.real
        return float(2 ** (a + b + 1) * mpmath.beta(a + 1, b + 1))
    return complex(2 ** (a + b + 1) * mpmath.beta(a + 1, b + 1))


def _mass(f: ClassicalFamily) -> Scalar:
    if f.kind == "hermite":
        return math.sqrt(math.pi)
    if f.kind == "laguerre":
        (a,) = f.params
        if is_exact(a) and Fraction(a).denominator == 1 and a >= 0:
            return factorial(int(a))
        v = mpmath.gamma(a + 1 if not isinstance(a, Fraction) else float(a) + 1)
        return complex(v) if isinstance(a, complex) else float(v)
    if f.kind == "jacobi":
        return jacobi_mass(*f.params)
    return 1


def _ffloat(v):
    return float(v) if isinstance(v, Fraction) else v


def recurrence_coeffs(f: ClassicalFamily, N: int) -> RecurrenceCoefficients:
    """beta_0..beta_N and gamma_1..gamma_N from the closed forms."""
    exact = f.exact
    u0 = _mass(f)
    k = f.kind
    betas, gammas = [], []
    if k == "hermite":
        betas = [0] * (N + 1)
        gammas = [Fraction(n, 2) for n in range(1, N + 1)]
    elif k == "laguerre":
        (a,) = f.params
        betas = [2 * n + a + 1 for n in range(N + 1)]
        gammas = [n * (n + a) for n in range(1, N + 1)]
    elif k == "jacobi":
        a, b = f.params
        s = a + b
        for n in range(N + 1):
            if n == 0:
                betas.append((b - a) / (s + 2))
            else:
                betas.append((b * b - a * a) / ((2 * n + s) * (2 * n + 2 + s)))
        for n in range(1, N + 1):
            if n == 1:
                gammas.append(4 * (1 + a) * (1 + b) / ((s + 2) ** 2 * (s + 3)))
            else:
                gammas.append(4 * n * (n + a) * (n + b) * (n + s) / ((2 * n + s - 1) * (2 * n + s) ** 2 * (2 * n + s + 1)))
    elif k == "bessel":
        (a,) = f.params
        for n in range(N + 1):
            if n == 0:
                betas.append(-2 / (a + 2))
            else:
                betas.append(-2 * a / ((2 * n + a) * (2 * n + 2 + a)))
        for n in range(1, N + 1):
            if n == 1:
                gammas.append(-4 / ((a + 2) ** 2 * (a + 3)))
            else:
                gammas.append(-4 * n * (n + a) / ((2 * n + a - 1) * (2 * n + a) ** 2 * (2 * n + a + 1)))
    elif k == "charlier":
        (a,) = f.params
        betas = [n + a for n in range(N + 1)]
        gammas = [a * n for n in range(1, N + 1)]
    else:
        raise UnsupportedFamily("meixner recurrence coefficients are not available")
    if not exact:
        betas = [_ffloat(v) for v in betas]
        gammas = [_ffloat(v) for v in gammas]
    for i, g in enumerate(gammas):
        if g == 0:
            raise RegularityViolation(f"{k}: gamma_{i + 1} = 0")
    return RecurrenceCoefficients(tuple(simplify(v) for v in betas), tuple(simplify(v) for v in gammas), simplify(u0))


def recurrence_from_pearson(pair: PearsonPair, N: int, u0: Scalar = 1) -> RecurrenceCoefficients:
    """beta_0..beta_N and gamma_1..gamma_N directly from (a, b, c, p, q)."""
    if all(v == 0 for v in (pair.a, pair.b, pair.c, pair.p, pair.q)):
        raise DegeneratePair("phi and psi are both zero")
    exact = pair.exact
    one = Fraction(1) if exact else 1.0
    d, e, phi = pair.d, pair.e, pair.phi
    for n in range(2 * N + 1):
        if d(n) == 0:
            raise RegularityViolation(f"d_{n} = {n}a + p = 0")
    for n in range(N):
        if phi(-e(n) * one / d(2 * n)) == 0:
            raise RegularityViolation(f"phi(-e_{n}/d_{2 * n}) = 0")
    betas, gammas = [], []
    for n in range(N + 1):
        if n == 0:
            betas.append(-pair.q * one / pair.p)
        else:
            betas.append(-(d(-2) * pair.q + 2 * pair.b * n * d(n - 1)) * one / (d(2 * n) * d(2 * n - 2)))
    for n in range(1, N + 1):
        if n == 1:
            gammas.append(-phi(-pair.q * one / pair.p) / (pair.a + pair.p))
        else:
            gammas.append(-n * d(n - 2) * one / (d(2 * n - 3) * d(2 * n - 1)) * phi(-e(n - 1) * one / d(2 * n - 2)))
    return RecurrenceCoefficients(tuple(simplify(v) for v in betas), tuple(simplify(v) for v in gammas), u0)


@dataclass(frozen=True)
class AffineReduction:
    """Phi(x) = K phi(A x + B) and Psi(x) = K A psi(A x + B) give the target's canonical pair."""

    A: Scalar
    B: Scalar
    K: Scalar
    target: ClassicalFamily

    def mapped_pair(self, pair: PearsonPair) -> tuple[DensePolynomial, DensePolynomial]:
        Phi = pair.phi.compose_affine(self.A, self.B) * self.K
        Psi = pair.psi.compose_affine(self.A, self.B) * (self.K * self.A)
        return Phi, Psi

    def residual(self, pair: PearsonPair) -> tuple[DensePolynomial, DensePolynomial]:
        Phi, Psi = self.mapped_pair(pair)
        tgt = pearson_pair(self.target)
        return Phi - tgt.phi, Psi - tgt.psi

    def verify(self, pair: PearsonPair, tol: float = 0.0) -> bool:
        r1, r2 = self.residual(pair)
        return all(abs(c) <= tol for c in r1.coeffs + r2.coeffs)


def classify_pearson(pair: PearsonPair, depth: int = 10) -> AffineReduction:
    """Affine reduction of a regular classical pair to its canonical representative."""
    a, b, c, p, q = pair.a, pair.b, pair.c, pair.p, pair.q
    if all(v == 0 for v in (a, b, c, p, q)):
        raise DegeneratePair("phi and psi are both zero")
    recurrence_from_pearson(pair, depth)
    one = Fraction(1) if pair.exact else 1.0
    if a == 0 and b == 0:
        K = one / c
        A = _sqrt(-2 * c * one / p)
        B = -q * one / p
        target = hermite()
    elif a == 0:
        K = -p * one / b**2
        A = -b * one / p
        B = -c * one / b
        target = laguerre(-1 + (q * b - p * c) * one / b**2)
    else:
        delta = b * b - 4 * a * c
        B = -b * one / (2 * a)
        dd = pair.psi(B)
        if delta == 0:
            K = 4 * a * one / dd**2
            A = dd * one / (2 * a)
            target = bessel(-2 + p * one / a)
        else:
            root = _sqrt(delta)
            K = -4 * a * one / delta
            A = -root / (2 * a)
            base = -1 + p * one / (2 * a)
            target = jacobi(base - dd / root, base + dd / root)
    return AffineReduction(simplify(A), simplify(B), simplify(K), target)


def gbinom(z: Scalar, k: int) -> Scalar:
    """Generalized binomial coefficient z(z-1)...(z-k+1)/k!."""
    if k < 0:
        return 0
    out: Scalar = Fraction(1) if is_exact(z) else 1.0
    for j in range(k):
        out = out * (z - j)
    return out / factorial(k)


def _poch(a: Scalar, n: int) -> Scalar:
    out: Scalar = 1
    for j in range(n):
        out = out * (a + j)
    return out


def leading_factor(f: ClassicalFamily, n: int) -> Scalar:
    """Standard normalization divided by monic normalization."""
    k = f.kind
    if k == "hermite":
        return 2**n
    if k == "laguerre":
        return Fraction((-1) ** n, factorial(n))
    if k == "jacobi":
        a, b = f.params
        return gbinom(2 * n + a + b, n) / 2**n
    if k == "bessel":
        (a,) = f.params
        return _poch(n + a + 1, n) / (Fraction(2**n) if is_exact(a) else 2**n)
    raise UnsupportedFamily(f"no standard normalization for {k}")


def explicit_polynomial(f: ClassicalFamily, n: int, normalization: str = "monic") -> DensePolynomial:
    """Coefficient vector from the closed-form finite sums."""
    k = f.kind
    x = DensePolynomial.x()
    if k == "hermite":
        coeffs = [0] * (n + 1)
        for j in range(n // 2 + 1):
            coeffs[n - 2 * j] = Fraction(factorial(n) * (-1) ** j, 4**j * factorial(n - 2 * j) * factorial(j))
        p = DensePolynomial(tuple(coeffs))
    elif k == "laguerre":
        (a,) = f.params
        coeffs = [(-1) ** (n + j) * factorial(n) * gbinom(n + a, n - j) / factorial(j) for j in range(n + 1)]
        p = DensePolynomial(tuple(coeffs))
    elif k == "jacobi":
        a, b = f.params
        xm, xp = x - 1, x + 1
        p = DensePolynomial(())
        for j in range(n + 1):
            p = p + (xm**j * xp ** (n - j)) * (gbinom(n + a, n - j) * gbinom(n + b, j))
        p = p * (1 / gbinom(2 * n + a + b, n))
    elif k == "bessel":
        (a,) = f.params
        scale = Fraction(2**n) / _poch(n + a + 1, n) if is_exact(a) else 2**n / _poch(n + a + 1, n)
        coeffs = [scale * comb(n, j) * _poch(n + a + 1, j) / (Fraction(2**j) if is_exact(a) else 2**j) for j in range(n + 1)]
        p = DensePolynomial(tuple(coeffs))
    elif k == "charlier":
        (a,) = f.params
        # sum_k C(x,k) C(n,k) k! (-a)^{n-k}, with C(x,k) k! the falling factorial
        p = DensePolynomial(())
        falling = DensePolynomial((1,))
        for j in range(n + 1):
            p = p + falling * (comb(n, j) * (-a) ** (n - j))
            falling = falling * (x - j)
        return DensePolynomial(tuple(simplify(c) for c in p.coeffs))
    else:
        raise UnsupportedFamily(f"no explicit monic formula for {k}")
    if normalization == "standard":
        p = p * leading_factor(f, n)
    elif normalization != "monic":
        raise ValueError(f"unknown normalization {normalization!r}")
    return DensePolynomial(tuple(simplify(c) for c in p.coeffs))


def meixner_explicit(f: ClassicalFamily, n: int, x: Scalar) -> Scalar:
    """m_n(x; beta, c) = (-1)^n n! sum_k C(x,k) C(-x-beta, n-k) c^{-k}."""
    if f.kind != "meixner":
        raise UnsupportedFamily("meixner_explicit needs a meixner family")
    beta, c = f.params
    s: Scalar = 0
    for j in range(n + 1):
        s = s + gbinom(x, j) * gbinom(-x - beta, n - j) / c**j
    return simplify((-1) ** n * factorial(n) * s)


def eigenvalue(f: ClassicalFamily, n: int) -> Scalar:
    """lambda_n in phi P'' + psi P' + lambda_n P = 0."""
    k = f.kind
    if k == "hermite":
        return 2 * n
    if k == "laguerre":
        return n
    if k == "jacobi":
        a, b = f.params
        return n * (n + a + b + 1)
    if k == "bessel":
        (a,) = f.params
        return -n * (n + a + 1)
    raise UnsupportedFamily(f"{k} has no differential equation")


def bochner_residual(f: ClassicalFamily, n: int) -> DensePolynomial:
    if not f.continuous:
        raise UnsupportedFamily(f"{f.kind} is discrete")
    pair = pearson_pair(f)
    P = explicit_polynomial(f, n)
    res = pair.phi * P.derivative(2) + pair.psi * P.derivative() + P * eigenvalue(f, n)
    return DensePolynomial(tuple(simplify(c) for c in res.coeffs))


def derivative_shift(f: ClassicalFamily, n: int, k: int) -> tuple[ClassicalFamily, Scalar]:
    if k > n:
        raise ValueError("need n >= k")
    factor = _poch(n - k + 1, k)
    if k == 0:
        return f, 1
    if f.kind == "jacobi":
        a, b = f.params
        return jacobi(a + k, b + k), factor
    if f.kind == "laguerre":
        return laguerre(f.params[0] + k), factor
    if f.kind == "hermite":
        return f, factor
    if f.kind == "bessel":
        return bessel(f.params[0] + 2 * k), factor
    raise UnsupportedFamily(f"{f.kind} has no derivative shift")


def classical_moments(f: ClassicalFamily, N: int) -> MomentSequence:
    """u_0..u_N, from the mass and the Pearson moment recurrence."""
    if not f.continuous:
        raise UnsupportedFamily(f"{f.kind} is discrete")
    u0 = _mass(f)
    out: list = [u0]
    k = f.kind
    if k == "hermite":
        for n in range(N):
            out.append(0 if n % 2 == 0 else out[n - 1] * n / 2)
        return MomentSequence(tuple(out[: N + 1]))
    if k == "laguerre":
        (a,) = f.params
        for n in range(N):
            out.append(out[-1] * (n + a + 1))
    elif k == "jacobi":
        a, b = f.params
        for n in range(N):
            prev = out[n - 1] if n > 0 else 0
            out.append(((b - a) * out[n] + n * prev) / (n + a + b + 2))
    else:
        (a,) = f.params
        out = [Fraction(1) if is_exact(a) else 1.0]
        for n in range(N):
            out.append(-2 * out[-1] / (n + a + 2))
    return MomentSequence(tuple(simplify(v) if all_exact((v,)) else _ffloat(v) for v in out))


def weight_density(f: ClassicalFamily, x: float) -> float:
    """Unnormalized weight on the support; its integral is u0."""
    k = f.kind
    if k == "bessel":
        raise UnsupportedFamily("bessel has no positive weight on the real line")
    if not f.continuous:
        raise UnsupportedFamily(f"{k} is discrete")
    if k == "hermite":
        return math.exp(-x * x)
    if k == "laguerre":
        (a,) = f.params
        if not (is_real(a) and float(_real(a)) > -1):
            raise NotPositiveDefinite("laguerre weight needs alpha > -1")
        if x < 0:
            raise OutOfSupport(f"x = {x} outside [0, inf)")
        return x ** float(a) * math.exp(-x)
    a, b = f.params
    if not (is_real(a) and is_real(b) and float(_real(a)) > -1 and float(_real(b)) > -1):
        raise NotPositiveDefinite("jacobi weight needs alpha, beta > -1")
    if not -1 <= x <= 1:
        raise OutOfSupport(f"x = {x} outside [-1, 1]")
    return (1 - x) ** float(a) * (1 + x) ** float(b)


def bessel_circle_orthogonality(alpha: Scalar, m: int, n: int, M: int = 256, dps: int = 40) -> tuple[complex, complex]:
    """Trapezoid value of the unit-circle integral of B_m B_n rho, and the closed-form right side.

    Evaluated in extended precision because the diagonal values are tiny
    compared to the size of the integrand.
    """
    f = bessel(alpha)
    if M < 1 or M & (M - 1):
        raise ValueError("M must be a power of two")
    with mpmath.workdps(dps):
        al = mpmath.mpf(alpha) if not isinstance(alpha, Fraction) else mpmath.mpf(alpha.numerator) / alpha.denominator
        # Laurent coefficients of 2*pi*i*rho in powers of (-2/z)
        coeffs = [1 + al]
        poch = mpmath.mpf(1)
        k = 1
        while k <= 200:
            term = 1 / poch
            if abs(term) * mpmath.mpf(2) ** k < mpmath.mpf("1e-18") and k > 2:
                break
            coeffs.append(term)
            poch *= al + 2 + (k - 1)
            k += 1
        Bm = [mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mpmath.mpf(c)
              for c in explicit_polynomial(f, m).coeffs]
        Bn = [mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mpmath.mpf(c)
              for c in explicit_polynomial(f, n).coeffs]
        total = mpmath.mpc(0)
        for j in range(M):
            z = mpmath.expjpi(mpmath.mpf(2 * j) / M)
            w = -2 / z
            rho = mpmath.mpc(0)
            pw = mpmath.mpc(1)
            for c in coeffs:
                rho += c * pw
                pw *= w
            total += mpmath.polyval(Bm[::-1], z) * mpmath.polyval(Bn[::-1], z) * rho * z
        value = total / M
    rhs = 0
    if m == n:
        rhs = Fraction(2 ** (2 * n + 1) * (-1) ** (n + 1) * factorial(n)) / (_poch(Fraction(alpha) + 2, 2 * n) * _poch(Fraction(alpha) + n + 1, n)) \
            if is_exact(alpha) else 2 ** (2 * n + 1) * (-1) ** (n + 1) * factorial(n) / (_poch(alpha + 2, 2 * n) * _poch(alpha + n + 1, n))
    return complex(value), complex(float(rhs))


def bessel_circle_omega(alpha: int, m: int, n: int, M: int = 256, dps: int = 40) -> tuple[complex, complex]:
    """Secondary route: unit-circle integral of B_m B_n z^alpha exp(-2/z), for integer alpha >= -1.

    The weight is single-valued only for integer alpha; the closed form holds for alpha >= -1.
    """
    if not (is_exact(alpha) and Fraction(alpha).denominator == 1 and alpha >= -1):
        raise ValueError("the z^alpha exp(-2/z) weight needs an integer alpha >= -1")
    if M < 1 or M & (M - 1):
        raise ValueError("M must be a power of two")
    alpha = int(alpha)
    f = bessel(alpha)
    with mpmath.workdps(dps):
        Bm = [mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mpmath.mpf(c)
              for c in explicit_polynomial(f, m).coeffs][::-1]
        Bn = [mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mpmath.mpf(c)
              for c in explicit_polynomial(f, n).coeffs][::-1]
        total = mpmath.mpc(0)
        for j in range(M):
            z = mpmath.expjpi(mpmath.mpf(2 * j) / M)
            total += mpmath.polyval(Bm, z) * mpmath.polyval(Bn, z) * z ** (alpha + 1) * mpmath.exp(-2 / z)
        value = total / M
    rhs = Fraction(0)
    if m == n:
        rhs = Fraction((-1) ** (n + alpha + 1) * 2 ** (2 * n + alpha + 1) * factorial(n),
                       factorial(2 * n + alpha + 1) * _poch(n + alpha + 1, n))
    return complex(value), complex(float(rhs))
