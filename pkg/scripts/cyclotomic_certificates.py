#!/usr/bin/env python3
"""Certificates for the prime-power cyclotomic family.

Prints, for each index p**r, the checked prime, the division remainder by the
lift of x - 1 (always exactly p), and the verdict; optionally dumps the full
JSON certificates.

    python scripts/cyclotomic_certificates.py --cases 4 8 16 9 27 25 5 7 11 --json
"""

import argparse
import sys

from dedcrit.arith import factor
from dedcrit.criterion import certificate_to_json, is_maximal_global
from dedcrit.intpoly import cyclotomic_prime_power


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, nargs="*", default=[4, 8, 16, 9, 27, 25, 5, 7, 11])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    for q in args.cases:
        fq = factor(q)
        if len(fq.factors) != 1:
            print(f"{q}: skipped, not a prime power")
            continue
        p, r = fq.factors[0]
        f = cyclotomic_prime_power(p, r)
        cert = is_maximal_global(f, args.seed)
        (report,) = cert.checked_primes
        (ev,) = report.factors
        print(
            f"index {p}^{r}: degree {f.degree}, checked prime {report.p},"
            f" remainder by {ev.lift} is {ev.remainder}, verdict {cert.verdict}"
        )
        if args.json:
            print(certificate_to_json(cert))
    return 0


if __name__ == "__main__":
    sys.exit(main())
