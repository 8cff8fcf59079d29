"""Error of Markov approximants against the Chebyshev closed forms as the order grows."""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from orthokit import families as fam
from orthokit.recurrence import RecurrenceCoefficients, constant_recurrence
from orthokit.stieltjes import chebyshev_closed_form, markov_ratio


@dataclass
class MarkovConfig:
    z: complex = 2 + 1j
    orders: tuple = (1, 2, 5, 10, 20, 40, 60, 80)


def normalized(kind: str, n: int) -> RecurrenceCoefficients:
    if kind == "second":
        return constant_recurrence(0, Fraction(1, 4), n)
    rc = fam.recurrence_coeffs(fam.chebyshev_t(), n)
    return RecurrenceCoefficients(rc.beta, rc.gamma, 1)


def run(cfg: MarkovConfig) -> None:
    top = max(cfg.orders)
    print(f"z = {cfg.z}")
    print(f"{'n':>4} {'first kind':>12} {'second kind':>12}")
    for n in cfg.orders:
        errs = [abs(markov_ratio(normalized(k, top), n, cfg.z) - chebyshev_closed_form(k, cfg.z))
                for k in ("first", "second")]
        print(f"{n:>4} {errs[0]:12.3e} {errs[1]:12.3e}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--z", type=complex, default=MarkovConfig.z)
    run(MarkovConfig(z=ap.parse_args().z))
