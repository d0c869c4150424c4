#!/usr/bin/env python3
"""Height multiplicativity across factorizations f = f1 f2 in a box.

Checks the bracket C(n, n/2)^-1 <= H(f1)H(f2)/H(f) <= sqrt(n+1) on every
factorization of every monic polynomial in the box, and prints the extreme
ratios with their witnesses.

Usage: python3 scripts/height_products.py --n1 2 --n2 2 --H 5
"""

import argparse
import json

from galcount import counting


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n1", type=int, default=2)
    ap.add_argument("--n2", type=int, default=2)
    ap.add_argument("--H", type=int, default=5)
    args = ap.parse_args()

    rep = counting.intransitive_height_report(args.n1, args.n2, args.H)
    rows = sorted(rep["rows"], key=lambda r: r["ratio"])
    print(
        json.dumps(
            {
                "products": rep["products"],
                "bracket": rep["bracket"],
                "withinBracket": rep["withinBracket"],
                "minRatio": rep["minRatio"],
                "maxRatio": rep["maxRatio"],
                "minWitness": rows[0] if rows else None,
                "maxWitness": rows[-1] if rows else None,
            },
            sort_keys=True,
        )
    )


if __name__ == "__main__":
    main()
