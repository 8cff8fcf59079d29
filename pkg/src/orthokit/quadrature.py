"""Gauss quadrature from recurrence coefficients: Jacobi matrix spectra and Christoffel weights."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from .errors import ConvergenceFailure, NotPositiveDefinite
from .polynomial import DensePolynomial
from .recurrence import RecurrenceCoefficients
from .scalars import is_real, format_float

EPS = 2.220446049250313e-16
RESCALE_AT = 1e150


def _real_float(v, what: str) -> float:
    if not is_real(v):
        raise NotPositiveDefinite(f"{what} = {v!r} is not real")
    return float(v.real if isinstance(v, complex) else v)


@dataclass(frozen=True)
class JacobiMatrix:
    """Symmetric tridiagonal matrix: diagonal beta_k and off-diagonal sqrt(gamma_k)."""

    diagonal: tuple
    subdiagonal: tuple

    @property
    def order(self) -> int:
        return len(self.diagonal)

    def dense(self):
        import numpy as np

        n = self.order
        m = np.diag(np.array(self.diagonal, dtype=float))
        for i, s in enumerate(self.subdiagonal):
            m[i, i + 1] = m[i + 1, i] = s
        return m


def jacobi_matrix(rc: RecurrenceCoefficients, n: int) -> JacobiMatrix:
    if n < 1:
        raise ValueError("order must be at least 1")
    rc.require(n, n - 1, "jacobi_matrix")
    diag = tuple(_real_float(b, f"beta_{k}") for k, b in enumerate(rc.beta[:n]))
    sub = []
    for k, g in enumerate(rc.gamma[: n - 1], start=1):
        gv = _real_float(g, f"gamma_{k}")
        if not gv > 0:
            raise NotPositiveDefinite(f"gamma_{k} = {g} is not positive")
        sub.append(math.sqrt(gv))
    return JacobiMatrix(diag, tuple(sub))


def tridiagonal_eigenvalues(diagonal, subdiagonal) -> list[float]:
    """Eigenvalues of a symmetric tridiagonal matrix by implicit QL with Wilkinson shifts."""
    d = [float(v) for v in diagonal]
    n = len(d)
    e = [float(v) for v in subdiagonal] + [0.0]
    anorm = max((abs(d[i]) + abs(e[i]) + (abs(e[i - 1]) if i else 0.0) for i in range(n)), default=0.0)
    sweeps = 0
    cap = 30 * max(n, 1)
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= EPS * (dd if dd > 0 else anorm):
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > cap:
                raise ConvergenceFailure(f"QL iteration exceeded {cap} sweeps")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return sorted(d)


def _count_below(beta, gamma, n: int, x: float) -> int:
    """Number of zeros of P_n below x.

    Sign changes in P_0(x), ..., P_n(x) count the zeros above x; a change
    between P_k and P_{k+1} is a negative ratio r_k = P_{k+1}(x)/P_k(x).
    """
    above = 0
    r = 1.0
    for k in range(n):
        r = (x - beta[k]) - (gamma[k - 1] / r if k > 0 else 0.0)
        if r == 0.0:
            r = 1e-300
        if r < 0:
            above += 1
    return n - above


def _eval_with_derivative(beta, gamma, n: int, x: float) -> tuple[float, float]:
    p_prev, p = 0.0, 1.0
    d_prev, d = 0.0, 0.0
    for k in range(n):
        g = gamma[k - 1] if k > 0 else 0.0
        p_prev, p, d_prev, d = p, (x - beta[k]) * p - g * p_prev, d, p + (x - beta[k]) * d - g * d_prev
    return p, d


def nodes_bisection(rc: RecurrenceCoefficients, n: int) -> list[float]:
    """Zeros of P_n by Sturm-count bisection followed by one Newton polish step."""
    J = jacobi_matrix(rc, n)
    beta = list(J.diagonal)
    gamma = [s * s for s in J.subdiagonal]
    radius = [abs(J.subdiagonal[i - 1]) if i > 0 else 0.0 for i in range(n)]
    radius = [radius[i] + (abs(J.subdiagonal[i]) if i < n - 1 else 0.0) for i in range(n)]
    lo = min(beta[i] - radius[i] for i in range(n)) - 1e-12
    hi = max(beta[i] + radius[i] for i in range(n)) + 1e-12
    out = []
    for j in range(n):
        a, b = lo, hi
        for _ in range(200):
            mid = 0.5 * (a + b)
            if mid <= a or mid >= b:
                break
            if _count_below(beta, gamma, n, mid) > j:
                b = mid
            else:
                a = mid
        x = 0.5 * (a + b)
        p, dp = _eval_with_derivative(beta, gamma, n, x)
        if dp != 0.0:
            y = x - p / dp
            if a <= y <= b:
                x = y
        out.append(x)
    return out


def _symmetrize(xs: list[float]) -> list[float]:
    n = len(xs)
    out = list(xs)
    for j in range(n // 2):
        v = 0.5 * (xs[n - 1 - j] - xs[j])
        out[j], out[n - 1 - j] = -v, v
    if n % 2:
        out[n // 2] = 0.0
    return out


def _symmetric(rc: RecurrenceCoefficients, n: int) -> bool:
    return all(b == 0 for b in rc.beta[:n])


def nodes(rc: RecurrenceCoefficients, n: int, method: str = "ql") -> list[float]:
    """Zeros of P_n in ascending order."""
    if method == "ql":
        J = jacobi_matrix(rc, n)
        try:
            xs = tridiagonal_eigenvalues(J.diagonal, J.subdiagonal)
        except ConvergenceFailure:
            xs = nodes_bisection(rc, n)
    elif method == "bisection":
        xs = nodes_bisection(rc, n)
    else:
        raise ValueError(f"unknown method {method!r}")
    if _symmetric(rc, n):
        xs = _symmetrize(xs)
    return xs


def orthonormal_sum_of_squares(rc: RecurrenceCoefficients, n: int, x: float) -> float:
    """sum_{j<n} p_j(x)^2 for the orthonormal family, with running rescaling."""
    u0 = float(rc.u0)
    sq = [math.sqrt(float(g)) for g in rc.gamma[:n]]
    beta = [float(b) for b in rc.beta[:n]]
    p_prev, p = 0.0, 1.0 / math.sqrt(u0)
    total = p * p
    log_scale = 0.0  # values are stored divided by exp(log_scale)
    for j in range(n - 1):
        nxt = ((x - beta[j]) * p - (sq[j - 1] * p_prev if j > 0 else 0.0)) / sq[j]
        p_prev, p = p, nxt
        if abs(p) > RESCALE_AT:
            s = abs(p)
            p_prev /= s
            p /= s
            total /= s * s
            log_scale += math.log(s)
        total += p * p
    if log_scale:
        return total * math.exp(2 * log_scale) if 2 * log_scale < 700 else math.inf
    return total


@dataclass(frozen=True)
class QuadratureRule:
    nodes: tuple
    weights: tuple
    mass: float
    family: str = "custom"
    params: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.nodes)

    def to_json(self) -> dict:
        return {"family": self.family, "params": dict(self.params), "n": self.order, "u0": self.mass,
                "nodes": list(self.nodes), "weights": list(self.weights)}

    def dumps(self) -> str:
        return dumps17(self.to_json())

    @classmethod
    def from_json(cls, obj: dict | str) -> "QuadratureRule":
        if isinstance(obj, str):
            obj = json.loads(obj)
        xs = tuple(float(v) for v in obj["nodes"])
        ws = tuple(float(v) for v in obj["weights"])
        if len(xs) != len(ws):
            raise ValueError("nodes and weights differ in length")
        mass = float(obj["u0"]) if "u0" in obj else math.fsum(ws)
        return cls(xs, ws, mass, obj.get("family", "custom"), dict(obj.get("params", {})))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["node", "weight"])
        for x, a in zip(self.nodes, self.weights):
            w.writerow([format_float(x), format_float(a)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "QuadratureRule":
        rows = list(csv.reader(io.StringIO(text)))
        if rows and rows[0] and rows[0][0].strip() == "node":
            rows = rows[1:]
        xs = tuple(float(r[0]) for r in rows if r)
        ws = tuple(float(r[1]) for r in rows if r)
        return cls(xs, ws, math.fsum(ws))


def dumps17(obj) -> str:
    """JSON with every float written to 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError("non-finite float in output")
        return format_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps17(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps17(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def gauss_rule(rc: RecurrenceCoefficients, n: int, family: str = "custom", params: dict | None = None) -> QuadratureRule:
    """n-point Gauss rule; weights are reciprocals of the orthonormal kernel at the nodes."""
    if not rc.positive_definite:
        raise NotPositiveDefinite("Gauss rules need a positive-definite recurrence")
    xs = nodes(rc, n)
    ws = [1.0 / orthonormal_sum_of_squares(rc, n, x) for x in xs]
    if _symmetric(rc, n):
        for j in range(n // 2):
            w = 0.5 * (ws[j] + ws[n - 1 - j])
            ws[j] = ws[n - 1 - j] = w
    for w in ws:
        if not w > 0:
            raise NotPositiveDefinite("non-positive Christoffel weight")
    return QuadratureRule(tuple(xs), tuple(ws), float(rc.u0), family, dict(params or {}))


def christoffel_weights_alt(rc: RecurrenceCoefficients, n: int, xs) -> list[float]:
    """A_k = -u0 gamma_1...gamma_n / (P_{n+1}(x_k) P_n'(x_k)); needs beta_n and gamma_n."""
    rc.require(n + 1, n, "christoffel_weights_alt")
    beta = [float(b) for b in rc.beta[: n + 1]]
    gamma = [float(g) for g in rc.gamma[:n]]
    prod = float(rc.u0)
    for g in gamma:
        prod *= g
    out = []
    for x in xs:
        pn, dpn = _eval_with_derivative(beta, gamma, n, x)
        pn1, _ = _eval_with_derivative(beta, gamma, n + 1, x)
        out.append(-prod / (pn1 * dpn))
    return out


def integrate(rule: QuadratureRule, p) -> float:
    """sum_j A_j p(x_j); ``p`` is a DensePolynomial or any callable."""
    vals = [a * p(x) for x, a in zip(rule.nodes, rule.weights)]
    if any(isinstance(v, complex) for v in vals):
        return complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))
    return math.fsum(float(v) for v in vals)


def support_hull(rc: RecurrenceCoefficients, n: int) -> tuple[float, float]:
    """(smallest zero, largest zero) of P_n: an inner approximation of the true interval."""
    if not rc.positive_definite:
        raise NotPositiveDefinite("support hull needs a positive-definite recurrence")
    xs = nodes(rc, n)
    return xs[0], xs[-1]
