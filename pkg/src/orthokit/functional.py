"""Moment-sequence representation of linear functionals and their calculus."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import InsufficientMoments, SingularHankel
from .polynomial import DensePolynomial
from .scalars import Scalar, all_exact, is_exact, is_finite, is_real, parse_scalar, reciprocal, simplify

HANKEL_ZERO_RTOL = 1e-10


@dataclass(frozen=True)
class MomentSequence:
    """Moments u_0..u_N of a functional u, with u_n = <u, x^n>."""

    moments: tuple

    def __post_init__(self):
        m = tuple(self.moments)
        if len(m) < 1:
            raise InsufficientMoments("a moment sequence needs at least u_0")
        for v in m:
            if not is_finite(v):
                raise ValueError(f"non-finite moment {v!r}")
        object.__setattr__(self, "moments", m)

    @classmethod
    def of(cls, values: Iterable) -> "MomentSequence":
        return cls(tuple(parse_scalar(v) for v in values))

    def __len__(self) -> int:
        return len(self.moments)

    def __getitem__(self, i):
        return self.moments[i]

    def __iter__(self):
        return iter(self.moments)

    @property
    def exact(self) -> bool:
        return all_exact(self.moments)

    def truncated(self, length: int) -> "MomentSequence":
        if length > len(self.moments):
            raise InsufficientMoments(f"need {length} moments, have {len(self.moments)}")
        return MomentSequence(self.moments[:length])

    def to_json(self) -> dict:
        exact = self.exact
        out = []
        for v in self.moments:
            v = simplify(v)
            if isinstance(v, Fraction):
                out.append(f"{v.numerator}/{v.denominator}")
            elif isinstance(v, complex):
                raise ValueError("complex moments are not representable in moment files")
            else:
                out.append(v)
        return {"moments": out, "exact": exact}

    @classmethod
    def from_json(cls, obj: dict | str) -> "MomentSequence":
        if isinstance(obj, str):
            obj = json.loads(obj)
        vals = [parse_scalar(v) for v in obj["moments"]]
        if obj.get("exact", False):
            vals = [Fraction(v) if not isinstance(v, float) else Fraction(v) for v in vals]
        else:
            vals = [v if not isinstance(v, Fraction) else float(v) for v in vals]
        return cls(tuple(vals))


@dataclass(frozen=True)
class HankelReport:
    """Hankel determinants H_{-1}..H_K; determinants[0] is H_{-1} = 1."""

    determinants: tuple
    regular: bool
    positive_definite: bool
    first_failure_index: int | None

    def H(self, n: int) -> Scalar:
        return self.determinants[n + 1]


def _need(u: MomentSequence, length: int, what: str) -> None:
    if len(u) < length:
        raise InsufficientMoments(f"{what} needs {length} moments, got {len(u)}")


def apply(u: MomentSequence, p: DensePolynomial) -> Scalar:
    """<u, p> = sum_k p_k u_k."""
    if p.degree >= len(u):
        raise InsufficientMoments(f"polynomial of degree {p.degree} needs {p.degree + 1} moments, got {len(u)}")
    total: Scalar = 0
    for k, c in enumerate(p.coeffs):
        total = total + c * u[k]
    return total


def bareiss_det(matrix: Sequence[Sequence[Scalar]]) -> Fraction:
    """Fraction-free determinant with row pivoting on exact entries."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(v) for v in row] for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _float_det(matrix: Sequence[Sequence[Scalar]]) -> tuple[Scalar, float]:
    """Determinant via LAPACK LU with partial pivoting, plus the row-norm scale."""
    a = np.array(matrix, dtype=complex if any(isinstance(v, complex) for r in matrix for v in r) else float)
    if a.size == 0:
        return 1.0, 1.0
    det = np.linalg.det(a)
    scale = float(np.prod(np.max(np.abs(a), axis=1)))
    det = complex(det) if np.iscomplexobj(a) else float(det)
    return det, scale


def _hankel(u: MomentSequence, n: int, exact: bool) -> list[list]:
    conv = Fraction if exact else (lambda v: v)
    return [[conv(u[i + j]) for j in range(n + 1)] for i in range(n + 1)]


def hankel_determinants(u: MomentSequence, K: int, mode: str = "auto") -> HankelReport:
    """Hankel determinants H_{-1}..H_K with regularity and positivity flags.

    ``mode="auto"`` works exactly on rational input and in floating point
    otherwise; ``mode="exact"`` converts binary64 moments to the rationals
    they represent and decides zeros exactly.
    """
    _need(u, 2 * K + 1, "hankel_determinants")
    if mode == "exact":
        if any(isinstance(v, complex) for v in u.moments):
            raise ValueError("exact mode needs real moments")
        u = MomentSequence(tuple(Fraction(v) for v in u.moments))
    elif mode != "auto":
        raise ValueError(f"unknown mode {mode!r}")
    exact = u.exact
    dets: list = [Fraction(1) if exact else 1.0]
    first_failure = None
    positive = all(is_real(v) for v in u.moments[: 2 * K + 1])
    for n in range(K + 1):
        mat = _hankel(u, n, exact)
        if exact:
            d = bareiss_det(mat)
            zero = d == 0
        else:
            d, scale = _float_det(mat)
            zero = abs(d) < HANKEL_ZERO_RTOL * scale
        dets.append(simplify(d) if exact else d)
        if zero and first_failure is None:
            first_failure = n
        if zero or not is_real(d) or (d.real if isinstance(d, complex) else d) <= 0:
            positive = False
    regular = first_failure is None
    return HankelReport(tuple(dets), regular, regular and positive, first_failure)


def monic_from_hankel(u: MomentSequence, n: int) -> DensePolynomial:
    """Monic P_n from the bordered Hankel determinant expanded along [1, x, ..., x^n]."""
    if n == 0:
        return DensePolynomial((1,))
    _need(u, 2 * n, "monic_from_hankel")
    exact = u.exact
    rows = [[u[i + j] for j in range(n + 1)] for i in range(n)]
    if exact:
        rows = [[Fraction(v) for v in r] for r in rows]
        det = bareiss_det
        minors = [det([r[:k] + r[k + 1:] for r in rows]) for k in range(n + 1)]
        if minors[n] == 0:
            raise SingularHankel(f"H_{n - 1} = 0", index=n - 1)
    else:
        minors = []
        for k in range(n + 1):
            d, scale = _float_det([r[:k] + r[k + 1:] for r in rows])
            minors.append(d)
        if abs(minors[n]) < HANKEL_ZERO_RTOL * scale:
            raise SingularHankel(f"H_{n - 1} = 0 to working precision", index=n - 1)
    h = minors[n]
    coeffs = [(-1) ** (n + k) * minors[k] / h for k in range(n + 1)]
    if exact:
        coeffs = [simplify(c) for c in coeffs]
    else:
        coeffs[n] = 1.0
    return DensePolynomial(tuple(coeffs))


def derivative_functional(u: MomentSequence) -> MomentSequence:
    _need(u, 2, "derivative_functional")
    return MomentSequence(tuple([0] + [-n * u[n - 1] for n in range(1, len(u))]))


def multiply_by_polynomial(u: MomentSequence, phi: DensePolynomial) -> MomentSequence:
    """Left multiplication: (phi u)_n = sum_k phi_k u_{n+k}."""
    if phi.is_zero():
        return MomentSequence(tuple(0 for _ in range(len(u))))
    _need(u, phi.degree + 1, "multiply_by_polynomial")
    length = len(u) - phi.degree
    out = []
    for n in range(length):
        s: Scalar = 0
        for k, c in enumerate(phi.coeffs):
            s = s + c * u[n + k]
        out.append(s)
    return MomentSequence(tuple(out))


def divide_by_linear(u: MomentSequence, c: Scalar) -> MomentSequence:
    """(x - c)^{-1} u: result_n = sum_{j<n} c^{n-1-j} u_j, result_0 = 0."""
    _need(u, 2, "divide_by_linear")
    out: list = [0]
    acc: Scalar = 0
    for n in range(1, len(u)):
        acc = acc * c + u[n - 1]
        out.append(acc)
    return MomentSequence(tuple(out))


def dirac_moments(c: Scalar, N: int) -> MomentSequence:
    if N < 0:
        raise InsufficientMoments("N must be nonnegative")
    out: list = [1]
    for _ in range(N):
        out.append(out[-1] * c)
    return MomentSequence(tuple(out))


def functional_product(u: MomentSequence, v: MomentSequence) -> MomentSequence:
    """Cauchy convolution of moments."""
    length = min(len(u), len(v))
    out = []
    for n in range(length):
        s: Scalar = 0
        for i in range(n + 1):
            s = s + u[i] * v[n - i]
        out.append(s)
    return MomentSequence(tuple(out))


def right_multiply(u: MomentSequence, psi: DensePolynomial) -> DensePolynomial:
    """The polynomial u psi = sum_i (sum_{j>=i} a_j u_{j-i}) x^i."""
    if psi.is_zero():
        return DensePolynomial(())
    _need(u, psi.degree + 1, "right_multiply")
    a = psi.coeffs
    out = []
    for i in range(len(a)):
        s: Scalar = 0
        for j in range(i, len(a)):
            s = s + a[j] * u[j - i]
        out.append(s)
    return DensePolynomial(tuple(out))


def affine_image(u: MomentSequence, a: Scalar, b: Scalar, orientation: str = "reduce") -> MomentSequence:
    """Moments under an affine change of variable.

    ``forward`` gives <u, (a x + b)^n>; ``reduce`` gives <u, ((x - b)/a)^n>.
    """
    if a == 0:
        raise ValueError("a must be nonzero")
    if orientation == "reduce":
        a, b = reciprocal(a), -b * reciprocal(a)
    elif orientation != "forward":
        raise ValueError(f"unknown orientation {orientation!r}")
    out = []
    for n in range(len(u)):
        s: Scalar = 0
        for j in range(n + 1):
            s = s + comb(n, j) * a**j * b ** (n - j) * u[j]
        out.append(s)
    return MomentSequence(tuple(out))


@dataclass(frozen=True)
class PearsonPair:
    """phi(x) = a x^2 + b x + c and psi(x) = p x + q in D(phi u) = psi u."""

    a: Scalar
    b: Scalar
    c: Scalar
    p: Scalar
    q: Scalar

    @property
    def phi(self) -> DensePolynomial:
        return DensePolynomial((self.c, self.b, self.a))

    @property
    def psi(self) -> DensePolynomial:
        return DensePolynomial((self.q, self.p))

    def d(self, n) -> Scalar:
        return n * self.a + self.p

    def e(self, n) -> Scalar:
        return n * self.b + self.q

    def psi_n(self, n) -> DensePolynomial:
        return self.psi + self.phi.derivative() * n

    @property
    def exact(self) -> bool:
        return all_exact((self.a, self.b, self.c, self.p, self.q))


def pearson_residual(u: MomentSequence, pair: PearsonPair, N: int) -> list:
    """r_n = d_n u_{n+1} + e_n u_n + n phi(0) u_{n-1}, n = 0..N."""
    _need(u, N + 2, "pearson_residual")
    out = []
    for n in range(N + 1):
        r = pair.d(n) * u[n + 1] + pair.e(n) * u[n]
        if n > 0:
            r = r + n * pair.c * u[n - 1]
        out.append(r)
    return out
