"""Exactness and mass error of Gauss rules across classical families and orders."""
from __future__ import annotations

import argparse
import math
from dataclasses import dataclass, field
from fractions import Fraction

from orthokit import families as fam
from orthokit.quadrature import gauss_rule


@dataclass
class SweepConfig:
    max_order: int = 20
    laguerre_alphas: tuple = (Fraction(0), Fraction(1, 2), Fraction(3))
    jacobi_grid: tuple = (Fraction(-2, 5), Fraction(0), Fraction(1, 2), Fraction(2))
    extra: tuple = field(default_factory=lambda: ("hermite", "legendre", "chebyshev-u"))


def families(cfg: SweepConfig):
    out = [(name, fam.family_from_name(name)) for name in cfg.extra]
    out += [(f"laguerre({a})", fam.laguerre(a)) for a in cfg.laguerre_alphas]
    out += [(f"jacobi({a},{b})", fam.jacobi(a, b)) for a in cfg.jacobi_grid for b in cfg.jacobi_grid]
    return out


def run(cfg: SweepConfig) -> None:
    print(f"{'family':<18} {'max mass err':>14} {'max moment err':>16}")
    for name, f in families(cfg):
        rc = fam.recurrence_coeffs(f, cfg.max_order + 1)
        u = fam.classical_moments(f, 2 * cfg.max_order)
        mass_err = mom_err = 0.0
        for n in range(1, cfg.max_order + 1):
            rule = gauss_rule(rc, n)
            mass_err = max(mass_err, abs(math.fsum(rule.weights) - rule.mass) / rule.mass)
            for m in range(2 * n):
                val = math.fsum(w * x**m for x, w in zip(rule.nodes, rule.weights))
                mom_err = max(mom_err, abs(val - float(u[m])) / (1 + abs(float(u[m]))))
        print(f"{name:<18} {mass_err:14.3e} {mom_err:16.3e}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=SweepConfig.max_order)
    run(SweepConfig(max_order=ap.parse_args().max_order))
