"""Command-line interface.

Exit codes: 0 success, 2 domain error (one JSON line on stderr), 64 usage error.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence, TextIO

from . import families as fam
from .errors import OrthoError
from .functional import MomentSequence
from .hypergeo import (IDENTITIES, HypSeriesSpec, classify_convergence, identity_report, pfq_exact_terminating,
                       pfq_sum)
from .polynomial import DensePolynomial
from .quadrature import QuadratureRule, dumps17, gauss_rule, integrate
from .recurrence import RecurrenceCoefficients, evaluate, moments_from_recurrence, recurrence_from_moments
from .scalars import parse_scalar, simplify, to_text
from .stieltjes import closed_form_transform, invert_interval, markov_ratio, rule_transform

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_USAGE = 64
FAMILY_NAMES = ("hermite", "laguerre", "jacobi", "bessel", "charlier", "meixner",
                "legendre", "chebyshev-t", "chebyshev-u", "gegenbauer")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _params(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        if "=" not in item:
            raise UsageError(f"bad parameter {item!r}; expected name=value")
        k, v = item.split("=", 1)
        try:
            out[k.strip()] = parse_scalar(v)
        except (ValueError, TypeError):
            raise UsageError(f"bad value for {k}: {v!r}") from None
    return out


def _scalar(text: str):
    try:
        return parse_scalar(text)
    except (ValueError, TypeError):
        raise UsageError(f"bad number {text!r}") from None


def _scalar_list(text: str | None) -> list:
    if text is None or text.strip() == "":
        return []
    return [_scalar(t) for t in text.split(",")]


def _jsonable(v):
    v = simplify(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _emit(out: TextIO, fmt: str, payload: dict, text_lines: list[str] | None = None, csv_rows=None) -> None:
    if fmt == "json":
        out.write(dumps17(_jsonable(payload)) + "\n")
    elif fmt == "csv":
        rows = csv_rows if csv_rows is not None else [list(payload.keys()), [_csv_cell(v) for v in payload.values()]]
        for r in rows:
            out.write(",".join(r) + "\n")
    else:
        lines = text_lines if text_lines is not None else [f"{k}: {_text(v)}" for k, v in payload.items()]
        out.write("\n".join(lines) + "\n")


def _text(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(_text(x) for x in v)
    if isinstance(v, dict):
        return ", ".join(f"{k}={_text(x)}" for k, x in v.items())
    if isinstance(v, (bool, str)) or v is None:
        return str(v)
    return to_text(v)


def _csv_cell(v) -> str:
    return _text(v).replace(",", ";")


def _family(args) -> fam.ClassicalFamily:
    return fam.family_from_name(args.family, _params(args.params))


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_rule(path: str) -> QuadratureRule:
    text = _read(path)
    if text.lstrip().startswith("{"):
        return QuadratureRule.from_json(text)
    return QuadratureRule.from_csv(text)


def _load_recurrence(args, n_needed: int) -> RecurrenceCoefficients:
    if getattr(args, "recurrence_file", None):
        return RecurrenceCoefficients.from_json(_read(args.recurrence_file))
    return fam.recurrence_coeffs(_family(args), n_needed)


def _poly(text: str) -> DensePolynomial:
    return DensePolynomial(tuple(_scalar_list(text)))


# subcommands

def cmd_quad(args, out):
    if args.rule_file:
        rule = _load_rule(args.rule_file)
    else:
        if args.n is None:
            raise UsageError("quad --family needs --n")
        f = _family(args)
        rule = gauss_rule(fam.recurrence_coeffs(f, args.n), args.n, args.family, _jsonable(f.param_dict()))
    if args.integrate is not None:
        value = integrate(rule, _poly(args.integrate))
        _emit(out, args.format, {"value": value}, [to_text(value)])
        return
    if args.format == "json":
        out.write(rule.dumps() + "\n")
    elif args.format == "csv":
        out.write(rule.to_csv())
    else:
        out.write("\n".join(f"{to_text(x)} {to_text(w)}" for x, w in zip(rule.nodes, rule.weights)) + "\n")


def cmd_eval(args, out):
    x = _scalar(args.x)
    if args.normalization == "standard":
        if args.recurrence_file:
            raise UsageError("standard normalization needs --family")
        p = fam.explicit_polynomial(_family(args), args.n, "standard")
        value, deriv = p(x), p.derivative()(x)
    else:
        rc = _load_recurrence(args, args.n)
        tri = evaluate(rc, args.n, x)
        value, deriv = tri.values[-1], tri.derivatives[-1]
    _emit(out, args.format, {"n": args.n, "x": x, "value": value, "derivative": deriv}, [to_text(value)])


def cmd_recurrence(args, out):
    if args.moments_file:
        u = MomentSequence.from_json(_read(args.moments_file))
        rc = recurrence_from_moments(u, args.n)
    else:
        rc = fam.recurrence_coeffs(_family(args), args.n)
    payload = rc.to_json()
    rows = [["k", "beta", "gamma"]] + [[str(k), to_text(b), to_text(rc.gamma[k - 1]) if k >= 1 else to_text(rc.u0)]
                                        for k, b in enumerate(rc.beta)]
    lines = [f"u0 {to_text(rc.u0)}"] + [f"{k} {to_text(b)} {to_text(rc.gamma[k - 1]) if k >= 1 else '-'}"
                                        for k, b in enumerate(rc.beta)]
    _emit(out, args.format, payload, lines, rows)


def cmd_moments(args, out):
    if args.recurrence_file:
        rc = RecurrenceCoefficients.from_json(_read(args.recurrence_file))
        u = moments_from_recurrence(rc, args.n)
    else:
        u = fam.classical_moments(_family(args), args.n)
    if args.exact and not u.exact:
        raise OrthoError("moments are not rational; drop --exact")
    payload = u.to_json()
    rows = [["n", "moment"]] + [[str(k), to_text(v)] for k, v in enumerate(u)]
    _emit(out, args.format, payload, [f"{k} {to_text(v)}" for k, v in enumerate(u)], rows)


def cmd_classify(args, out):
    P = _params(args.pair)
    try:
        pair = fam.PearsonPair(*(P.get(k, 0) for k in "abcpq"))
    except TypeError:
        raise UsageError("--pair takes a,b,c,p,q") from None
    unknown = set(P) - set("abcpq")
    if unknown:
        raise UsageError(f"unknown pair coefficients {sorted(unknown)}")
    red = fam.classify_pearson(pair)
    ok = red.verify(pair, 0 if pair.exact else 1e-12)
    payload = {"family": red.target.kind, "params": red.target.param_dict(), "A": red.A, "B": red.B, "K": red.K,
               "verified": ok}
    _emit(out, args.format, payload)


def cmd_identity(args, out):
    rep = identity_report(args.name, _params(args.params), True if args.exact else None)
    payload = {"name": rep.name, "lhs": rep.lhs, "rhs": rep.rhs, "residual": rep.residual, "exact": rep.exact}
    _emit(out, args.format, payload)


def cmd_hyp(args, out):
    spec = HypSeriesSpec(tuple(_scalar_list(args.a)), tuple(_scalar_list(args.b)), _scalar(args.x))
    cls = classify_convergence(spec)
    value = pfq_exact_terminating(spec) if args.exact else pfq_sum(spec, args.tol)
    payload = {"verdict": cls.verdict, "reason": cls.reason, "value": value}
    _emit(out, args.format, payload, [to_text(value)])


def cmd_markov(args, out):
    rc = _load_recurrence(args, args.n)
    if args.normalize:
        rc = dataclasses.replace(rc, u0=1)
    z = complex(_scalar(args.z))
    value = markov_ratio(rc, args.n, z)
    _emit(out, args.format, {"n": args.n, "z": z, "value": value}, [to_text(value)])


def cmd_invert(args, out):
    if args.rule_file:
        F = rule_transform(_load_rule(args.rule_file))
    elif args.transform in ("chebyshev-t", "chebyshev-u"):
        F = closed_form_transform("first" if args.transform == "chebyshev-t" else "second")
    else:
        raise UsageError("invert needs --transform chebyshev-t|chebyshev-u or --rule-file")
    eps = [float(e) for e in _scalar_list(args.eps)] if args.eps else None
    res = invert_interval(F, float(_scalar(args.lo)), float(_scalar(args.hi)), eps, args.panels)
    payload = {"a": res.interval[0], "b": res.interval[1], "estimate": res.estimate, "extrapolated": res.extrapolated,
               "eps": [e for e, _ in res.epsilon_sequence], "values": [v for _, v in res.epsilon_sequence]}
    _emit(out, args.format, payload, [to_text(res.extrapolated)])


def cmd_bessel_circle(args, out):
    value, rhs = fam.bessel_circle_orthogonality(_scalar(args.alpha), args.m, args.n, args.points)
    payload = {"alpha": _scalar(args.alpha), "m": args.m, "n": args.n, "integral": value, "closed_form": rhs}
    _emit(out, args.format, payload)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orthokit", description="Orthogonal polynomials, Gauss rules and hypergeometric identities.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("json", "csv", "text"), default="text")
        sp.set_defaults(func=func)
        return sp

    def family_source(sp, file_flag=None, required=True):
        g = sp.add_mutually_exclusive_group(required=required)
        g.add_argument("--family", choices=FAMILY_NAMES)
        if file_flag:
            g.add_argument(f"--{file_flag}", dest=file_flag.replace("-", "_"))
        sp.add_argument("--params", help="family parameters, e.g. alpha=1/2,beta=0")

    sp = add("quad", cmd_quad, "Gauss rule for a family, or integrate with a saved rule")
    family_source(sp, "rule-file")
    sp.add_argument("--n", type=int)
    sp.add_argument("--integrate", metavar="COEFFS", help="ascending polynomial coefficients, e.g. 0,0,1 for x^2")

    sp = add("eval", cmd_eval, "evaluate P_n(x) by the recurrence")
    family_source(sp, "recurrence-file")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--x", required=True)
    sp.add_argument("--normalization", choices=("monic", "standard"), default="monic")

    sp = add("recurrence", cmd_recurrence, "recurrence coefficients beta_0..beta_N, gamma_1..gamma_N")
    family_source(sp, "moments-file")
    sp.add_argument("--n", type=int, required=True)

    sp = add("moments", cmd_moments, "moments u_0..u_N")
    family_source(sp, "recurrence-file")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--exact", action="store_true")

    sp = add("classify", cmd_classify, "reduce a Pearson pair to canonical form")
    sp.add_argument("--pair", required=True, help="phi = a x^2 + b x + c, psi = p x + q, e.g. c=2,p=-4,q=4")

    sp = add("identity", cmd_identity, "check a hypergeometric identity")
    sp.add_argument("--name", required=True, choices=IDENTITIES)
    sp.add_argument("--params", required=True)
    sp.add_argument("--exact", action="store_true")

    sp = add("hyp", cmd_hyp, "sum a pFq series")
    sp.add_argument("--a", default="", help="numerator parameters; use --a=-2,1 for negative values")
    sp.add_argument("--b", default="")
    sp.add_argument("--x", required=True)
    sp.add_argument("--exact", action="store_true")
    sp.add_argument("--tol", type=float, default=1e-15)

    sp = add("markov", cmd_markov, "Markov approximant u0 P1_{n-1}(z)/P_n(z)")
    family_source(sp, "recurrence-file")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--z", required=True)
    sp.add_argument("--normalize", action="store_true", help="use u0 = 1")

    sp = add("invert", cmd_invert, "Perron-Stieltjes inversion over (a, b)")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--transform", choices=("chebyshev-t", "chebyshev-u"))
    g.add_argument("--rule-file")
    sp.add_argument("--a", dest="lo", required=True)
    sp.add_argument("--b", dest="hi", required=True)
    sp.add_argument("--eps", help="decreasing list, e.g. 1e-2,5e-3,2.5e-3")
    sp.add_argument("--panels", type=int, default=200)

    sp = add("bessel-circle", cmd_bessel_circle, "Bessel orthogonality on the unit circle")
    sp.add_argument("--alpha", default="0")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--points", type=int, default=256)
    return p


def _error_line(kind: str, message: str) -> str:
    return json.dumps({"error": kind, "message": message})


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        args.func(args, out)
    except UsageError as exc:
        err.write(_error_line("UsageError", str(exc)) + "\n")
        return EXIT_USAGE
    except OrthoError as exc:
        err.write(_error_line(type(exc).__name__, str(exc)) + "\n")
        return EXIT_DOMAIN
    except (ValueError, ZeroDivisionError, OverflowError, KeyError) as exc:
        err.write(_error_line("DomainError", f"{type(exc).__name__}: {exc}") + "\n")
        return EXIT_DOMAIN
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
