"""Scalar helpers shared by the exact (Fraction) and floating kernels."""
from __future__ import annotations

import math
import numbers
from fractions import Fraction
from typing import Any, Iterable, Union

Scalar = Union[int, Fraction, float, complex]


def is_exact(x: Any) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(values: Iterable[Any]) -> bool:
    return all(is_exact(v) for v in values)


def parse_scalar(value: Any) -> Scalar:
    """Parse ints, floats, complex, Fractions and strings like "3", "-1/2", "0.25", "1+2j"."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction, float, complex)):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return float(value)
    if isinstance(value, numbers.Complex):
        return complex(value)
    if isinstance(value, str):
        s = value.strip()
        if "j" in s:
            return complex(s.replace(" ", ""))
        if "/" in s:
            return Fraction(s)
        try:
            return int(s)
        except ValueError:
            return float(s)
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def as_exact(value: Scalar) -> Fraction:
    if is_exact(value):
        return Fraction(value)
    if isinstance(value, float) and value.is_integer():
        return Fraction(int(value))
    raise TypeError(f"{value!r} is not exact")


def simplify(value: Scalar) -> Scalar:
    """Collapse integral Fractions to int so printing stays tidy."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def is_finite(value: Scalar) -> bool:
    if is_exact(value):
        return True
    if isinstance(value, complex):
        return math.isfinite(value.real) and math.isfinite(value.imag)
    return math.isfinite(value)


def reciprocal(value: Scalar) -> Scalar:
    if is_exact(value):
        return Fraction(1) / value
    return 1 / value


def is_zero(value: Scalar) -> bool:
    return value == 0


def is_real(value: Scalar) -> bool:
    return not isinstance(value, complex) or value.imag == 0


def real_part(value: Scalar) -> Scalar:
    return value.real if isinstance(value, complex) else value


def is_nonpositive_integer(value: Scalar) -> bool:
    if isinstance(value, complex):
        if value.imag != 0:
            return False
        value = value.real
    if is_exact(value):
        return Fraction(value).denominator == 1 and value <= 0
    return float(value).is_integer() and value <= 0


def format_float(value: float) -> str:
    return format(value, ".17g")


def to_text(value: Scalar) -> str:
    """Render a scalar: exact values as p/q, floats with 17 significant digits."""
    value = simplify(value)
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, complex):
        if value.imag == 0:
            return format_float(value.real)
        sign = "+" if value.imag >= 0 else "-"
        return f"{format_float(value.real)}{sign}{format_float(abs(value.imag))}j"
    return format_float(float(value))
