"""Three-term recurrence: construction from moments, evaluation, kernels."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InsufficientCoefficients, InsufficientMoments, SingularHankel
from .functional import MomentSequence, apply, hankel_determinants
from .polynomial import DensePolynomial
from .scalars import Scalar, all_exact, is_real, parse_scalar, reciprocal, simplify

CONFLUENT_SWITCH = 1e-6
FLOAT_NORM_RTOL = 1e-13


@dataclass(frozen=True)
class RecurrenceCoefficients:
    """Monic recurrence P_{k+1} = (x - beta_k) P_k - gamma_k P_{k-1}.

    ``beta`` holds beta_0, beta_1, ...; ``gamma`` holds gamma_1, gamma_2, ...
    (gamma_0 is identified with the mass ``u0``).
    """

    beta: tuple
    gamma: tuple
    u0: Scalar = 1
    gamma_check: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "beta", tuple(self.beta))
        object.__setattr__(self, "gamma", tuple(self.gamma))
        if any(g == 0 for g in self.gamma):
            raise SingularHankel("gamma entries must be nonzero", index=next(i + 1 for i, g in enumerate(self.gamma) if g == 0))

    def gamma_at(self, n: int) -> Scalar:
        """gamma_n with the convention gamma_0 = u0."""
        return self.u0 if n == 0 else self.gamma[n - 1]

    @property
    def exact(self) -> bool:
        return all_exact(self.beta + self.gamma + (self.u0,))

    @property
    def positive_definite(self) -> bool:
        vals = self.beta + self.gamma + (self.u0,)
        if not all(is_real(v) for v in vals):
            return False
        return all((g.real if isinstance(g, complex) else g) > 0 for g in self.gamma + (self.u0,))

    def covers(self, n: int) -> bool:
        return len(self.beta) >= n and len(self.gamma) >= n

    def require(self, n_beta: int, n_gamma: int, what: str) -> None:
        if len(self.beta) < n_beta or len(self.gamma) < n_gamma:
            raise InsufficientCoefficients(
                f"{what} needs beta_0..beta_{n_beta - 1} and gamma_1..gamma_{n_gamma}; "
                f"have {len(self.beta)} betas and {len(self.gamma)} gammas"
            )

    def truncated(self, n_beta: int, n_gamma: int | None = None) -> "RecurrenceCoefficients":
        n_gamma = n_beta if n_gamma is None else n_gamma
        self.require(n_beta, n_gamma, "truncated")
        return RecurrenceCoefficients(self.beta[:n_beta], self.gamma[:n_gamma], self.u0)

    def norm(self, n: int) -> Scalar:
        """<u, P_n^2> = u0 * gamma_1 ... gamma_n."""
        self.require(0, n, "norm")
        out = self.u0
        for g in self.gamma[:n]:
            out = out * g
        return out

    def to_json(self) -> dict:
        return {"u0": _jsonable(self.u0), "beta": [_jsonable(b) for b in self.beta], "gamma": [_jsonable(g) for g in self.gamma]}

    @classmethod
    def from_json(cls, obj: dict | str) -> "RecurrenceCoefficients":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            tuple(parse_scalar(b) for b in obj["beta"]),
            tuple(parse_scalar(g) for g in obj["gamma"]),
            parse_scalar(obj.get("u0", 1)),
        )


def _jsonable(v: Scalar):
    v = simplify(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, complex):
        raise ValueError("complex coefficients are not representable in recurrence files")
    return v


def constant_recurrence(beta: Scalar, gamma: Scalar, n: int, u0: Scalar = 1) -> RecurrenceCoefficients:
    return RecurrenceCoefficients((beta,) * n, (gamma,) * n, u0)


@dataclass(frozen=True)
class EvaluationTriple:
    values: tuple
    derivatives: tuple
    norms: tuple


def _norm_scale(coeffs: Sequence[Scalar], u: MomentSequence) -> float:
    return sum(abs(c * u[k]) for k, c in enumerate(coeffs))


def recurrence_from_moments(u: MomentSequence, N: int) -> RecurrenceCoefficients:
    """Build beta_0..beta_N and gamma_1..gamma_N from moments u_0..u_{2N+1}.

    Uses the Stieltjes procedure on moment dot products; in exact mode the
    Hankel-ratio form of gamma_n is attached as ``gamma_check``.
    """
    if len(u) < 2 * N + 2:
        raise InsufficientMoments(f"order {N} needs {2 * N + 2} moments, got {len(u)}")
    exact = u.exact
    prev = DensePolynomial(())
    cur = DensePolynomial((1,))
    x = DensePolynomial.x()
    betas: list = []
    gammas: list = []
    norm_prev = None
    for n in range(N + 1):
        sq = cur * cur
        norm = apply(u, sq)
        if exact:
            singular = norm == 0
        else:
            singular = abs(norm) <= FLOAT_NORM_RTOL * _norm_scale(sq.coeffs, u)
        if singular:
            raise SingularHankel(f"<u, P_{n}^2> vanishes; u is not regular at order {n}", index=n)
        xnorm = apply(u, x * sq)
        if exact:
            norm, xnorm = Fraction(norm), Fraction(xnorm)
        beta = xnorm / norm
        betas.append(simplify(beta) if exact else beta)
        if n > 0:
            g = norm / norm_prev
            gammas.append(simplify(g) if exact else g)
            nxt = (x - beta) * cur - prev * g
        else:
            nxt = (x - beta) * cur
        prev, cur = cur, nxt
        norm_prev = norm
    check = None
    if exact:
        rep = hankel_determinants(u, N)
        check = tuple(simplify(Fraction(rep.H(n - 2)) * rep.H(n) / Fraction(rep.H(n - 1)) ** 2) for n in range(1, N + 1))
    return RecurrenceCoefficients(tuple(betas), tuple(gammas), simplify(u[0]) if exact else u[0], check)


def moments_from_recurrence(rc: RecurrenceCoefficients, N: int) -> MomentSequence:
    """u_0..u_N as u0 times weighted Motzkin-path sums, i.e. u0 (J^n)_{00}."""
    if N < 0:
        raise InsufficientCoefficients("N must be nonnegative")
    rc.require((N - 1) // 2 + 1 if N >= 1 else 0, N // 2, "moments_from_recurrence")
    w: list = [1]
    out = [rc.u0]
    for t in range(1, N + 1):
        top = min(t, N - t)
        nw: list = []
        for k in range(top + 1):
            s: Scalar = 0
            if k - 1 >= 0 and k - 1 < len(w):
                s = s + w[k - 1]
            if k < len(w):
                s = s + rc.beta[k] * w[k]
            if k + 1 < len(w):
                s = s + rc.gamma[k] * w[k + 1]
            nw.append(s)
        w = nw
        out.append(rc.u0 * w[0])
    return MomentSequence(tuple(simplify(v) for v in out))


def _forward(rc: RecurrenceCoefficients, n: int, x: Scalar):
    vals = [1]
    ders = [0]
    if n == 0:
        return vals, ders
    p_prev, p = 0, 1
    d_prev, d = 0, 0
    for k in range(n):
        g = rc.gamma[k - 1] if k > 0 else 0
        p_new = (x - rc.beta[k]) * p - g * p_prev
        d_new = p + (x - rc.beta[k]) * d - g * d_prev
        p_prev, p = p, p_new
        d_prev, d = d, d_new
        vals.append(p)
        ders.append(d)
    return vals, ders


def evaluate(rc: RecurrenceCoefficients, n: int, x: Scalar) -> EvaluationTriple:
    rc.require(n, n, "evaluate")
    vals, ders = _forward(rc, n, x)
    norms = [rc.u0]
    for j in range(1, n + 1):
        norms.append(norms[-1] * rc.gamma[j - 1])
    return EvaluationTriple(tuple(vals), tuple(ders), tuple(norms))


def monic_coefficients(rc: RecurrenceCoefficients, n: int) -> DensePolynomial:
    rc.require(n, max(n - 1, 0), "monic_coefficients")
    x = DensePolynomial.x()
    prev, cur = DensePolynomial(()), DensePolynomial((1,))
    for k in range(n):
        g = rc.gamma[k - 1] if k > 0 else 0
        prev, cur = cur, (x - rc.beta[k]) * cur - prev * g
    return DensePolynomial(tuple(simplify(c) for c in cur.coeffs))


def subleading_closed_forms(rc: RecurrenceCoefficients, n: int) -> tuple:
    """(f_n, g_n): coefficients of x^{n-1} and x^{n-2} from sums of beta and gamma."""
    b = rc.beta[:n]
    f = -sum(b)
    g = sum(b[i] * b[j] for i in range(n) for j in range(i + 1, n)) - sum(rc.gamma[: max(n - 1, 0)])
    return simplify(f), simplify(g)


def cd_kernel(rc: RecurrenceCoefficients, n: int, x: Scalar, y: Scalar) -> Scalar:
    """Christoffel-Darboux kernel sum_{j<=n} P_j(x) P_j(y) / (gamma_1...gamma_j)."""
    rc.require(n + 1, n, "cd_kernel")
    prod: Scalar = 1
    for g in rc.gamma[:n]:
        prod = prod * g
    if x == y or abs(x - y) < CONFLUENT_SWITCH * (1 + abs(x) + abs(y)):
        t = x if x == y else (x + y) / 2
        v, d = _forward(rc, n + 1, t)
        return (d[n + 1] * v[n] - d[n] * v[n + 1]) * reciprocal(prod)
    vx, _ = _forward(rc, n + 1, x)
    vy, _ = _forward(rc, n + 1, y)
    return (vx[n + 1] * vy[n] - vx[n] * vy[n + 1]) / ((x - y) * prod)


def cd_kernel_sum(rc: RecurrenceCoefficients, n: int, x: Scalar, y: Scalar) -> Scalar:
    """Direct summation form of the kernel (reference route)."""
    rc.require(n, n, "cd_kernel_sum")
    vx, _ = _forward(rc, n, x)
    vy, _ = _forward(rc, n, y)
    total: Scalar = 0
    prod: Scalar = 1
    for j in range(n + 1):
        if j > 0:
            prod = prod * rc.gamma[j - 1]
        total = total + vx[j] * vy[j] * reciprocal(prod)
    return total


def associated_shift(rc: RecurrenceCoefficients, k: int) -> RecurrenceCoefficients:
    """Coefficients of the associated family of order k (u0 set to 1)."""
    if k == 0:
        return rc
    if len(rc.beta) < k or len(rc.gamma) < k:
        raise InsufficientCoefficients(f"associated shift by {k} needs at least {k} betas and gammas")
    return RecurrenceCoefficients(rc.beta[k:], rc.gamma[k:], 1)
