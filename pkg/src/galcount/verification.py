"""Named property suites shared by the `verify` command and the test suite.

Each suite exhaustively (or, where noted, by seeded sampling) checks one of
the finitely decidable statements backing the counting bounds: completion
counts, power-sum solution counts, moved-subset lower bounds, index ratios
of product actions, the forced-index criterion, and Fourier decay.  A suite
returns a report dict with `pass`, `checked`, `violations`, and details.
"""
from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import numpy as np

from .errors import UsageError
from . import fourier, permgroup
from .polyarith import (
    DoubleDiscInput,
    MonicIntPoly,
    SplittingType,
    disc_poly_in_last,
    double_disc,
    index_table,
    is_prime,
    mod_p2_forced_test,
    partition_count,
    power_sum_solution_count,
)
from .errors import SubsetSumZero


def verify_prop33(ps=(5, 7, 11, 13), ns=(3, 4, 5)) -> dict:
    """Completions of a prefix to index >= k number at most q(k,n-k)(n-k)!.

    Exhaustive over all prefixes; cells with p <= n are skipped because the
    gcd index computation needs the characteristic prime to n!.
    """
    checked = 0
    violations = []
    cells = []
    for p in ps:
        for n in ns:
            if p <= n:
                cells.append({"p": p, "n": n, "skipped": "needs p > n"})
                continue
            tab = np.array(index_table(p, n), dtype=np.int64)
            for k in range(1, n):
                bound = partition_count(k, n - k) * math.factorial(n - k)
                rows = tab.reshape(p ** (n - k), p**k)
                counts = (rows >= k).sum(axis=1)
                worst = int(counts.max())
                checked += rows.shape[0]
                if worst > bound:
                    violations.append({"p": p, "n": n, "k": k, "worst": worst, "bound": bound})
                cells.append({"p": p, "n": n, "k": k, "worst": worst, "bound": bound})
    return {
        "suite": "prop33",
        "pass": not violations,
        "checked": checked,
        "violations": len(violations),
        "details": {"cells": cells, "failures": violations},
    }


def verify_prop34(seed: int = 0, samples: int = 200) -> dict:
    """Power-sum systems with admissible weights have at most r! solutions."""
    rng = random.Random(seed)
    checked = 0
    violations = []
    skipped = []
    for p in (q for q in range(3, 14) if is_prime(q)):
        for r in (1, 2, 3):
            done = 0
            attempts = 0
            while done < samples:
                attempts += 1
                if attempts > 100 * samples:
                    # small p admit no weight tuple free of zero subset sums
                    skipped.append({"p": p, "r": r, "collected": done})
                    break
                weights = tuple(rng.randrange(1, p) for _ in range(r))
                targets = tuple(rng.randrange(p) for _ in range(r))
                try:
                    cnt = power_sum_solution_count(p, weights, targets)
                except SubsetSumZero:
                    continue
                done += 1
                checked += 1
                if cnt > math.factorial(r):
                    violations.append({"p": p, "weights": weights, "targets": targets, "count": cnt})
    return {
        "suite": "prop34",
        "pass": not violations,
        "checked": checked,
        "violations": len(violations),
        "details": {"failures": violations, "skippedCells": skipped},
    }


def _partitions(m: int):
    if m == 0:
        yield ()
        return
    for first in range(m, 0, -1):
        for rest in _partitions(m - first):
            if not rest or rest[0] <= first:
                yield (first, *rest)


def verify_fmky(mmax: int = 10) -> dict:
    """Moved k-subsets under y disjoint 2-cycles: f(m,k,y) >= (8/(5k)) C(m-1,k-1) y.

    The count depends only on the cycle type, so one product of y disjoint
    transpositions per (m, y) covers every such involution.
    """
    checked = 0
    violations = []
    for m in range(3, mmax + 1):
        for k in range(1, (m + 1) // 2):
            if not k < m / 2:
                continue
            for y in range(1, m // 2 + 1):
                part = (2,) * y + (1,) * (m - 2 * y)
                sigma = _perm_of_type(m, part)
                moved = permgroup.count_moved_ksubsets(sigma, k)
                bound = Fraction(8, 5 * k) * math.comb(m - 1, k - 1) * y
                checked += 1
                if Fraction(moved) < bound:
                    violations.append({"m": m, "k": k, "y": y, "moved": moved, "bound": str(bound)})
    return {
        "suite": "fmky",
        "pass": not violations,
        "checked": checked,
        "violations": len(violations),
        "details": {"failures": violations},
    }


def _perm_of_type(m: int, part) -> permgroup.Permutation:
    cycles = []
    start = 1
    for c in part:
        if c > 1:
            cycles.append(tuple(range(start, start + c)))
        start += c
    return permgroup.Permutation.from_cycles(m, cycles)


def verify_thm25() -> dict:
    """Product-action vs imprimitive-action index ratio exceeds n/(3rm).

    Exhaustive over all non-identity elements of S_m wr S_r for every
    (m, k, r) with k < m/2, r <= 2, and product-action degree <= 100.
    """
    checked = 0
    violations = []
    combos = []
    for m in range(3, 6):
        for k in range(1, (m + 1) // 2):
            if not k < m / 2:
                continue
            for r in (1, 2):
                deg = math.comb(m, k) ** r
                if deg <= 100:
                    combos.append((m, k, r))
    sym_cache = {}

    def sym(m):
        if m not in sym_cache:
            sym_cache[m] = list(itertools.permutations(range(m)))
        return sym_cache[m]

    for m, k, r in combos:
        spec = permgroup.ProductActionSpec(m, k, r)
        n = math.comb(m, k) ** r
        threshold = Fraction(n, 3 * r * m)
        for hs in sym(r):
            h = permgroup.Permutation(hs)
            for gtup in itertools.product(sym(m), repeat=r):
                gs = [permgroup.Permutation(g) for g in gtup]
                if h.is_identity() and all(g.is_identity() for g in gs):
                    continue
                big, small = permgroup.blow_down_index_ratio(spec, gs, h)
                checked += 1
                if Fraction(big, small) <= threshold:
                    violations.append({"m": m, "k": k, "r": r, "gs": gtup, "h": hs, "big": big, "small": small})
    return {
        "suite": "thm25",
        "pass": not violations,
        "checked": checked,
        "violations": len(violations),
        "details": {"combos": combos, "failures": violations},
    }


def verify_prop51dd() -> dict:
    """Forced-index residues have vanishing disc derivative and divide DD.

    Exhaustive over residue tuples for n=3, p in {3,5,7} and n=4,
    p in {3,5}: whenever every lift of the tuple mod p^2 keeps p^2 | disc,
    the partial derivative of Disc with respect to a_n vanishes mod p, and
    p divides the double discriminant of the prefix when it is nonzero.
    """
    checked = 0
    forced = 0
    violations = []
    cells = [(3, p) for p in (3, 5, 7)] + [(4, p) for p in (3, 5)]
    for n, p in cells:
        for tup in itertools.product(range(p), repeat=n):
            if not mod_p2_forced_test(p, n, tup):
                continue
            forced += 1
            checked += 1
            prefix = tup[:-1]
            dpoly = disc_poly_in_last(n, prefix)  # Disc as a poly in a_n, descending
            deg = len(dpoly) - 1
            deriv_at = sum(
                (deg - i) * dpoly[i] * tup[-1] ** (deg - i - 1) for i in range(deg)
            )
            ok_deriv = deriv_at % p == 0
            dd = double_disc(DoubleDiscInput(n, prefix))
            ok_dd = dd == 0 or dd % p == 0
            if not (ok_deriv and ok_dd):
                violations.append({"n": n, "p": p, "tuple": tup, "derivOK": ok_deriv, "ddOK": ok_dd})
    return {
        "suite": "prop51dd",
        "pass": not violations,
        "checked": checked,
        "violations": len(violations),
        "details": {"forcedTuples": forced, "failures": violations},
    }


def _sigmas_up_to(n: int):
    """All splitting types of total degree between 1 and n."""
    seen = set()
    for total in range(1, n + 1):
        for part in _partitions(total):
            # group equal degrees into multiplicities in every way: a part list
            # like (1,1) can be one irreducible squared or two distinct ones
            for split in _multiplicity_splits(part):
                seen.add(split)
    return [SplittingType.of(s) for s in sorted(seen)]


def _multiplicity_splits(part):
    """Ways to read a degree multiset as (degree, multiplicity) pairs."""
    from collections import Counter

    counts = Counter(part)
    per_degree = []
    for d, c in sorted(counts.items()):
        per_degree.append([tuple((d, e) for e in comp) for comp in _compositions(c)])
    out = []
    for pick in itertools.product(*per_degree):
        flat = tuple(sorted(x for grp in pick for x in grp))
        out.append(flat)
    return out


def _compositions(c: int):
    """Multisets of positive integers summing to c (partitions of c)."""
    return list(_partitions(c))


def verify_decay(ns=(3, 4), ps=(3, 5, 7, 11), spaces=("monic", "binary"), tol=1e-9) -> dict:
    """Fourier decay across primes: scaled maxima stay bounded in p.

    For each space, degree, and sigma, builds the full transform at every
    prime, checks Parseval to tolerance, and requires that neither the
    main-term error nor the scaled off-peak maximum increases monotonically
    across the prime ladder (a proxy for p-uniform boundedness).
    """
    checked = 0
    violations = []
    series = []
    for kind in spaces:
        for n in ns:
            for sigma in _sigmas_up_to(n):
                errs = []
                maxima = []
                for p in ps:
                    space = fourier.WeightSpace(kind, p, n)
                    table = fourier.fourier_table(space, sigma)
                    gap = fourier.parseval_gap(table)
                    checked += 1
                    if gap > tol:
                        violations.append({"space": kind, "n": n, "p": p, "sigma": str(sigma), "parsevalGap": gap})
                    rep = fourier.verify_decay(table)
                    errs.append(rep["mainTermError"])
                    maxima.append(rep["maxNonzeroScaled"])
                def accelerating(xs):
                    # bounded-looking series (convergent from below) have
                    # shrinking increments; flag only sustained growth whose
                    # increments never shrink, the signature of a wrong
                    # power of p in the scaling
                    inc = [b - a for a, b in zip(xs, xs[1:])]
                    return all(i > tol for i in inc) and all(
                        b >= a * (1 - 1e-6) for a, b in zip(inc, inc[1:])
                    )

                if accelerating(errs) or accelerating(maxima):
                    violations.append(
                        {"space": kind, "n": n, "sigma": str(sigma), "mainTermErrors": errs, "maxima": maxima}
                    )
                series.append({"space": kind, "n": n, "sigma": str(sigma), "mainTermErrors": errs, "maxNonzeroScaled": maxima})
    return {
        "suite": "decay",
        "pass": not violations,
        "checked": checked,
        "violations": len(violations),
        "details": {"series": series, "failures": violations},
    }


SUITES = {
    "prop33": verify_prop33,
    "prop34": verify_prop34,
    "fmky": verify_fmky,
    "thm25": verify_thm25,
    "prop51dd": verify_prop51dd,
    "decay": verify_decay,
}


def run_suite(name: str, seed: int | None = None) -> dict:
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}")
    fn = SUITES[name]
    if name == "prop34" and seed is not None:
        return fn(seed=seed)
    return fn()
