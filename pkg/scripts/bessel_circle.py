"""Table of unit-circle Bessel integrals against their closed forms."""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from orthokit.families import bessel_circle_orthogonality


@dataclass
class CircleConfig:
    alphas: tuple = (Fraction(0), Fraction(1, 2), Fraction(1))
    max_degree: int = 6
    points: int = 256


def run(cfg: CircleConfig) -> None:
    for alpha in cfg.alphas:
        print(f"alpha = {alpha}")
        off = 0.0
        for m in range(cfg.max_degree + 1):
            for n in range(cfg.max_degree + 1):
                val, rhs = bessel_circle_orthogonality(alpha, m, n, cfg.points)
                if m == n:
                    print(f"  n={n}: integral {val.real: .12e}  closed form {rhs.real: .12e}")
                else:
                    off = max(off, abs(val))
        print(f"  largest off-diagonal |integral| = {off:.2e}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=CircleConfig.max_degree)
    ap.add_argument("--points", type=int, default=CircleConfig.points)
    a = ap.parse_args()
    run(CircleConfig(max_degree=a.max_degree, points=a.points))
