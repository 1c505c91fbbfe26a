#!/usr/bin/env python3
"""Sweep x**n - u over a grid and tabulate verdicts.

For every pair the closed-form test is compared against the general engine;
any disagreement would be a bug, so the script exits nonzero on one.

    python scripts/sweep_purepower.py --nmax 8 --umax 30
"""

import argparse
import sys

from dedcrit.criterion import is_maximal_global
from dedcrit.purepower import (
    ReduciblePolynomialError,
    pure_power_exact,
    pure_power_poly,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--umax", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rows = []
    disagreements = 0
    skipped = 0
    for n in range(2, args.nmax + 1):
        for u in range(-args.umax, args.umax + 1):
            if u == 0:
                continue
            try:
                verdict = pure_power_exact(n, u)
            except ReduciblePolynomialError:
                skipped += 1
                continue
            engine = is_maximal_global(pure_power_poly(n, u), args.seed).verdict
            mark = "" if engine == verdict.verdict else "  << DISAGREES"
            if mark:
                disagreements += 1
            reason = f" ({verdict.reason} at {verdict.failing_prime})" if verdict.reason else ""
            rows.append(f"x^{n} - ({u}): {verdict.verdict}{reason}{mark}")
    print("\n".join(rows))
    print(f"\n{len(rows)} irreducible pairs, {skipped} screened out, {disagreements} disagreements")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
