"""Randomized draws of the summation identities, exact where the right side is rational."""
from __future__ import annotations

import argparse
import random
from dataclasses import dataclass
from fractions import Fraction

from orthokit.errors import ConstraintViolated
from orthokit.hypergeo import identity_report


@dataclass
class IdentityConfig:
    draws: int = 100
    seed: int = 0


def rand_frac(rng: random.Random, lo: int = -5, hi: int = 5) -> Fraction:
    d = rng.choice((1, 2, 3, 4))
    return Fraction(rng.randint(lo * d, hi * d), d)


DRAWS = {
    "chu-vandermonde": lambda r: {"n": r.randint(0, 10), "a": rand_frac(r), "c": rand_frac(r)},
    "pfaff-saalschutz": lambda r: {"n": r.randint(0, 8), "a": rand_frac(r), "b": rand_frac(r), "c": rand_frac(r)},
    "dixon": lambda r: {"a": rand_frac(r), "b": rand_frac(r), "c": r.randint(0, 8)},
    "dougall": lambda r: {"n": r.randint(0, 6), "a": rand_frac(r, -4, 6), "b": rand_frac(r, -4, 4),
                          "c": rand_frac(r, -4, 4), "d": rand_frac(r, -4, 4)},
}


def run(cfg: IdentityConfig) -> None:
    rng = random.Random(cfg.seed)
    for name, draw in DRAWS.items():
        passed = skipped = 0
        while passed < cfg.draws:
            try:
                r = identity_report(name, draw(rng), exact=True)
            except ConstraintViolated:
                skipped += 1
                continue
            if r.residual != 0:
                print(f"{name}: mismatch at {r.params}")
                break
            passed += 1
        print(f"{name:<18} {passed} exact matches ({skipped} draws rejected by the hypotheses)")
    worst = 0.0
    for _ in range(cfg.draws):
        a, b = rng.uniform(-2, 2), rng.uniform(-2, 2)
        c = a + b + rng.uniform(0.2, 3)
        try:
            worst = max(worst, identity_report("gauss", {"a": a, "b": b, "c": c}).relative_residual)
        except ConstraintViolated:
            continue
    print(f"{'gauss':<18} worst relative residual {worst:.2e}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--draws", type=int, default=IdentityConfig.draws)
    ap.add_argument("--seed", type=int, default=IdentityConfig.seed)
    a = ap.parse_args()
    run(IdentityConfig(draws=a.draws, seed=a.seed))
