#!/usr/bin/env python3
"""Sieve-case histogram for polynomials with primitive non-S_n group.

Splits the certified-ramification product C and the discriminant-supported
product D against the H^(1+delta) / H^(2+2delta) thresholds and reports how
many polynomials land in each case, plus how many have an uncertifiable
prime (Dedekind criterion inconclusive at some p^2 | disc).

Usage: python3 scripts/sieve_cases.py --n 3 --H 20
"""

import argparse
import json
from fractions import Fraction

from galcount import counting


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--H", type=int, default=20)
    ap.add_argument("--delta", default=None, help="rational, default 1/(2n)")
    args = ap.parse_args()

    delta = Fraction(args.delta) if args.delta else None
    params = counting.SieveParams(args.n, delta=delta)
    hist = counting.case_partition(args.n, args.H, params)
    total = sum(hist.values())
    print(
        json.dumps(
            {
                "n": args.n,
                "H": args.H,
                "delta": str(params.resolved_delta()),
                "histogram": hist,
                "classified": total,
            },
            sort_keys=True,
        )
    )


if __name__ == "__main__":
    main()
