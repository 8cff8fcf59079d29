"""Dense univariate polynomials over exact or floating scalars."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import Scalar, is_exact


def _trim(coeffs: Sequence[Scalar]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class DensePolynomial:
    """Coefficients in ascending powers; the zero polynomial has degree -1."""

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> "DensePolynomial":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> "DensePolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "DensePolynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def x(cls) -> "DensePolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other) -> "DensePolynomial":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return DensePolynomial(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    __radd__ = __add__

    def __neg__(self) -> "DensePolynomial":
        return DensePolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "DensePolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "DensePolynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "DensePolynomial":
        if not isinstance(other, DensePolynomial):
            return DensePolynomial(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return DensePolynomial(())
        out: list = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return DensePolynomial(tuple(out))

    def __rmul__(self, other) -> "DensePolynomial":
        return self * other

    def __pow__(self, k: int) -> "DensePolynomial":
        out = DensePolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def derivative(self, k: int = 1) -> "DensePolynomial":
        c = list(self.coeffs)
        for _ in range(k):
            c = [j * c[j] for j in range(1, len(c))]
        return DensePolynomial(tuple(c))

    def compose_affine(self, a: Scalar, b: Scalar) -> "DensePolynomial":
        """Return p(a*x + b)."""
        lin = DensePolynomial((b, a))
        acc = DensePolynomial(())
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def to_fraction(self) -> "DensePolynomial":
        return DensePolynomial(tuple(Fraction(c) for c in self.coeffs))

    def __repr__(self) -> str:
        return f"DensePolynomial({list(self.coeffs)!r})"


def _coerce(p) -> DensePolynomial:
    if isinstance(p, DensePolynomial):
        return p
    return DensePolynomial((p,))


def poly(*coeffs: Scalar) -> DensePolynomial:
    """Shorthand: poly(1, 0, 2) is 1 + 2x^2."""
    return DensePolynomial(tuple(coeffs))
