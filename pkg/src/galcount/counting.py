"""Exhaustive coefficient-box enumeration and the derived experiments.

The box {max |a_i| <= H} is cut into slices along a_1.  Each slice is
counted independently (vectorized for degrees 2-4, scalar for 5-7) and the
slice ledgers are merged in a fixed order, so the result is independent of
the worker schedule.  The checksum of a merged ledger is the XOR of the
per-slice checksums, hence also schedule-independent.

E_n(H) counts monic degree-n integer polynomials in the box whose Galois
group is not the full symmetric group; polynomials with vanishing
discriminant are counted by the group of their squarefree kernel, which
acts on fewer than n roots and therefore always contributes to E_n.
"""
from __future__ import annotations

import itertools
import json
import math
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool

import numpy as np

from .errors import (
    BudgetExceeded,
    DegreeOutOfRange,
    InsufficientData,
    UnknownGroup,
    UsageError,
    ZeroCount,
)
from . import galois
from .polyarith import MonicIntPoly, disc, field_disc_valuation, is_prime

FORMAT_VERSION = 1
DEFAULT_BUDGET = 10**9

DEGREE_GROUPS = {
    1: (),
    2: ("C2",),
    3: ("C3", "S3"),
    4: ("C4", "V4", "D4", "A4", "S4"),
    5: ("C5", "D5", "F20", "A5", "S5"),
    6: ("S6",),  # certificate-only
    7: ("S7",),
}
GROUP_ALIASES = {"S2": "C2", "A3": "C3"}
SN_NAME = {1: "S1", 2: "C2", 3: "S3", 4: "S4", 5: "S5", 6: "S6", 7: "S7"}


@dataclass
class CountLedger:
    n: int
    H: int
    total: int = 0
    disc_zero: int = 0
    reducible: int = 0
    per_group: dict = field(default_factory=dict)
    square_disc: int = 0
    unresolved: int = 0
    case_histogram: dict = field(default_factory=dict)
    checksum: int = 0

    def merge(self, other: "CountLedger") -> "CountLedger":
        if (self.n, self.H) != (other.n, other.H):
            raise UsageError("ledgers from different boxes")
        per_group = dict(self.per_group)
        for k, v in other.per_group.items():
            per_group[k] = per_group.get(k, 0) + v
        hist = dict(self.case_histogram)
        for k, v in other.case_histogram.items():
            hist[k] = hist.get(k, 0) + v
        return CountLedger(
            n=self.n,
            H=self.H,
            total=self.total + other.total,
            disc_zero=self.disc_zero + other.disc_zero,
            reducible=self.reducible + other.reducible,
            per_group=per_group,
            square_disc=self.square_disc + other.square_disc,
            unresolved=self.unresolved + other.unresolved,
            case_histogram=hist,
            checksum=self.checksum ^ other.checksum,
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "H": self.H,
            "total": self.total,
            "discZero": self.disc_zero,
            "reducible": self.reducible,
            "perGroup": {k: self.per_group[k] for k in sorted(self.per_group)},
            "squareDisc": self.square_disc,
            "unresolved": self.unresolved,
            "caseHistogram": {k: self.case_histogram[k] for k in sorted(self.case_histogram)},
            "checksum": self.checksum,
        }

    @classmethod
    def from_json(cls, obj) -> "CountLedger":
        return cls(
            n=obj["n"],
            H=obj["H"],
            total=obj["total"],
            disc_zero=obj["discZero"],
            reducible=obj["reducible"],
            per_group=dict(obj["perGroup"]),
            square_disc=obj["squareDisc"],
            unresolved=obj["unresolved"],
            case_histogram=dict(obj.get("caseHistogram", {})),
            checksum=obj["checksum"],
        )

    def canonical(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def _sealed(n, H, a1, counts: dict) -> CountLedger:
    """Attach the slice checksum: crc32 over the canonical slice record."""
    led = CountLedger(
        n=n,
        H=H,
        total=counts["total"],
        disc_zero=counts["discZero"],
        reducible=counts["reducible"],
        per_group=counts["perGroup"],
        square_disc=counts["squareDisc"],
        unresolved=counts["unresolved"],
    )
    body = json.dumps(
        {"a1": a1, **{k: led.to_json()[k] for k in ("n", "H", "total", "discZero", "reducible", "perGroup", "squareDisc", "unresolved")}},
        sort_keys=True,
        separators=(",", ":"),
    )
    led.checksum = zlib.crc32(body.encode())
    return led


def _is_square(x: int) -> bool:
    return x >= 0 and math.isqrt(x) ** 2 == x


def _square_mask(d: np.ndarray) -> np.ndarray:
    """Elementwise perfect-square test for a nonnegative int64 array."""
    s = np.sqrt(d.astype(np.float64)).astype(np.int64)
    ok = np.zeros(d.shape, dtype=bool)
    for off in (-1, 0, 1):
        t = s + off
        ok |= (t >= 0) & (t * t == d)
    return ok


# ---------------------------------------------------------------------------
# Slice counters


def _empty_counts(total=0):
    return {
        "total": total,
        "discZero": 0,
        "reducible": 0,
        "perGroup": {},
        "squareDisc": 0,
        "unresolved": 0,
    }


def _slice_counts_n1(H, a1):
    c = _empty_counts(total=1)
    c["reducible"] = 1  # x + a1 is linear
    return c


def _slice_counts_n2(H, a1):
    a2 = np.arange(-H, H + 1, dtype=np.int64)
    d = np.int64(a1) * a1 - 4 * a2
    zero = d == 0
    sq = _square_mask(np.where(d > 0, d, 0)) & (d > 0)
    c = _empty_counts(total=2 * H + 1)
    c["discZero"] = int(zero.sum())
    c["reducible"] = int(sq.sum())
    c2 = int((~zero & ~sq).sum())
    if c2:
        c["perGroup"]["C2"] = c2
    return c


def _cubic_root_mask(H, a1, S):
    """Mask over (a2, a3) of cubics x^3+a1x^2+a2x+a3 with an integer root."""
    mask = np.zeros((S, S), dtype=bool)
    a2v = np.arange(-H, H + 1, dtype=np.int64)
    for r in range(-(H + 1), H + 2):
        a3 = -(r**3 + a1 * r * r + a2v * r)
        ok = (a3 >= -H) & (a3 <= H)
        idx = np.nonzero(ok)[0]
        mask[idx, a3[idx] + H] = True
    return mask


def _slice_counts_n3(H, a1):
    S = 2 * H + 1
    a = np.int64(a1)
    b = np.arange(-H, H + 1, dtype=np.int64)[:, None]
    cc = np.arange(-H, H + 1, dtype=np.int64)[None, :]
    d = (
        18 * a * b * cc
        - 4 * a**3 * cc
        + a * a * b * b
        - 4 * b**3
        - 27 * cc * cc
    )
    zero = d == 0
    red = _cubic_root_mask(H, a1, S) & ~zero
    sq = _square_mask(np.where(d > 0, d, 0)) & (d > 0) & ~zero & ~red
    c = _empty_counts(total=S * S)
    c["discZero"] = int(zero.sum())
    c["reducible"] = int(red.sum())
    n_c3 = int(sq.sum())
    n_s3 = int((~zero & ~red & ~sq).sum())
    if n_c3:
        c["perGroup"]["C3"] = n_c3
    if n_s3:
        c["perGroup"]["S3"] = n_s3
    c["squareDisc"] = n_c3
    return c


def _quartic_reducible_mask(H, a1, S):
    """Mask over (a2,a3,a4) of quartics with a rational linear or quadratic factor."""
    mask = np.zeros((S, S, S), dtype=bool)
    a2v = np.arange(-H, H + 1, dtype=np.int64)
    # linear factors: a4 determined by the root r and (a2, a3)
    for r in range(-(H + 1), H + 2):
        base = r**4 + a1 * r**3
        val = -(base + a2v[:, None] * (r * r) + a2v[None, :] * r)
        ok = (val >= -H) & (val <= H)
        i2, i3 = np.nonzero(ok)
        mask[i2, i3, val[i2, i3] + H] = True
    # quadratic pairs (x^2+bx+c)(x^2+dx+e) with both factors root-free
    for b in range(-2 * (H + 1), 2 * (H + 1) + 1):
        dd = a1 - b
        for c in range(-H, H + 1):
            if c == 0:
                continue
            emax = H // abs(c)
            for e in range(-emax, emax + 1):
                if e == 0:
                    continue
                A2 = c + e + b * dd
                A3 = b * e + c * dd
                A4 = c * e
                if -H <= A2 <= H and -H <= A3 <= H and -H <= A4 <= H:
                    mask[A2 + H, A3 + H, A4 + H] = True
    return mask


def _slice_counts_n4(H, a1):
    S = 2 * H + 1
    red = _quartic_reducible_mask(H, a1, S)
    c = _empty_counts(total=S**3)
    n_red = 0
    n_zero = 0
    groups = dict.fromkeys(DEGREE_GROUPS[4], 0)
    sq = 0
    rng = range(-H, H + 1)
    for i2, a2 in enumerate(rng):
        for i3, a3 in enumerate(rng):
            row = red[i2, i3]
            for i4, a4 in enumerate(rng):
                P, Q, R = galois.depressed_quartic(a1, a2, a3, a4)
                delta = galois.quartic_disc_depressed(P, Q, R)
                if delta == 0:
                    n_zero += 1
                    continue
                if row[i4]:
                    n_red += 1
                    continue
                name = galois.quartic_group_irreducible(a1, a2, a3, a4)
                groups[name] += 1
                if name in ("A4", "V4"):
                    sq += 1
    c["discZero"] = n_zero
    c["reducible"] = n_red
    c["perGroup"] = {k: v for k, v in groups.items() if v}
    c["squareDisc"] = sq
    return c


def _slice_counts_n5(H, a1):
    S = 2 * H + 1
    c = _empty_counts(total=S**4)
    groups = dict.fromkeys(DEGREE_GROUPS[5], 0)
    for rest in itertools.product(range(-H, H + 1), repeat=4):
        f = MonicIntPoly((a1, *rest))
        if disc(f) == 0:
            c["discZero"] += 1
            continue
        name = galois._exact_group_name(f)
        if name is None:
            c["reducible"] += 1
        else:
            groups[name] += 1
            if name in ("C5", "D5", "A5"):
                c["squareDisc"] += 1
    c["perGroup"] = {k: v for k, v in groups.items() if v}
    return c


def _slice_counts_interval(n, H, a1):
    """Degrees 6-7: reducibility is exact, S_n only by certificate."""
    S = 2 * H + 1
    c = _empty_counts(total=S ** (n - 1))
    certified = 0
    for rest in itertools.product(range(-H, H + 1), repeat=n - 1):
        f = MonicIntPoly((a1, *rest))
        if disc(f) == 0:
            c["discZero"] += 1
            continue
        if not galois.is_irreducible(f):
            c["reducible"] += 1
            continue
        verdict = galois.sn_certificate(f, prime_budget=25)
        if verdict.status == "certifiedSn":
            certified += 1
        else:
            if verdict.status == "certifiedSubsetAn":
                c["squareDisc"] += 1
            c["unresolved"] += 1
    if certified:
        c["perGroup"][SN_NAME[n]] = certified
    return c


def _slice_counts_generic(n, H, a1, classifier):
    """Apply a user classifier: f -> bucket label ('discZero', 'reducible',
    'unresolved', or a group name)."""
    S = 2 * H + 1
    c = _empty_counts(total=S ** (n - 1))
    for rest in itertools.product(range(-H, H + 1), repeat=n - 1):
        label = classifier(MonicIntPoly((a1, *rest)))
        if label == "discZero":
            c["discZero"] += 1
        elif label == "reducible":
            c["reducible"] += 1
        elif label == "unresolved":
            c["unresolved"] += 1
        else:
            c["perGroup"][label] = c["perGroup"].get(label, 0) + 1
    return c


def slice_ledger(n: int, H: int, a1: int, classifier=None) -> CountLedger:
    """Ledger for the sub-box with the leading coefficient pinned to a1."""
    if classifier is not None:
        counts = _slice_counts_generic(n, H, a1, classifier)
    elif n == 1:
        counts = _slice_counts_n1(H, a1)
    elif n == 2:
        counts = _slice_counts_n2(H, a1)
    elif n == 3:
        counts = _slice_counts_n3(H, a1)
    elif n == 4:
        counts = _slice_counts_n4(H, a1)
    elif n == 5:
        counts = _slice_counts_n5(H, a1)
    elif n in (6, 7):
        counts = _slice_counts_interval(n, H, a1)
    else:
        raise DegreeOutOfRange("enumeration implemented for n <= 7")
    return _sealed(n, H, a1, counts)


def _slice_worker(args):
    n, H, a1 = args
    return a1, slice_ledger(n, H, a1)


def enumerate_box(
    n: int,
    H: int,
    classifier=None,
    parallelism: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> CountLedger:
    if n < 1 or H < 0:
        raise UsageError("need n >= 1 and H >= 0")
    if (2 * H + 1) ** n > budget:
        raise BudgetExceeded(f"(2H+1)^n = {(2*H+1)**n} exceeds budget {budget}")
    a1s = list(range(-H, H + 1))
    if parallelism > 1 and classifier is None and len(a1s) > 1:
        with Pool(parallelism) as pool:
            results = dict(pool.map(_slice_worker, [(n, H, a1) for a1 in a1s]))
    else:
        results = {a1: slice_ledger(n, H, a1, classifier) for a1 in a1s}
    merged = CountLedger(n=n, H=H)
    for a1 in a1s:  # fixed order; checksum is order-free anyway
        merged = merged.merge(results[a1])
    return merged


# ---------------------------------------------------------------------------
# Headline counts


def compute_E(n: int, H: int, parallelism: int = 1, budget: int = DEFAULT_BUDGET) -> dict:
    """E_n(H): polynomials in the box whose group is not S_n.

    Exact for n <= 5; a certified interval [lower, upper] for n in {6, 7}.
    """
    if n >= 1 and (2 * H + 1) ** n > budget:
        raise BudgetExceeded(f"(2H+1)^n = {(2*H+1)**n} exceeds budget {budget}")
    if not 2 <= n <= 7:
        raise DegreeOutOfRange("compute_E implemented for 2 <= n <= 7")
    led = enumerate_box(n, H, parallelism=parallelism, budget=budget)
    if n <= 5:
        sn = led.per_group.get(SN_NAME[n], 0)
        return {"mode": "exact", "value": led.total - sn, "ledger": led}
    lower = led.reducible + led.disc_zero + led.square_disc
    upper = led.total - led.per_group.get(SN_NAME[n], 0)
    return {"mode": "interval", "value": [lower, upper], "ledger": led}


def compute_N(n: int, H: int, group_name: str, parallelism: int = 1) -> int:
    """N_n(G,H): exact count with Galois group the named transitive group."""
    if not 1 <= n <= 5:
        raise DegreeOutOfRange("compute_N implemented for n <= 5")
    name = GROUP_ALIASES.get(group_name, group_name)
    if name not in DEGREE_GROUPS[n]:
        raise UnknownGroup(f"{group_name} is not a transitive group label of degree {n}")
    led = enumerate_box(n, H, parallelism=parallelism)
    return led.per_group.get(name, 0)


# ---------------------------------------------------------------------------
# Sieve-case partition


@dataclass(frozen=True)
class SieveParams:
    n: int
    delta: Fraction | None = None
    Y: float | None = None

    def resolved_delta(self) -> Fraction:
        d = self.delta if self.delta is not None else Fraction(1, 2 * self.n)
        if not 0 < d < Fraction(1, 2 * self.n - 1):
            raise UsageError("need 0 < delta < 1/(2n-1)")
        return d


_PRIMITIVE_NON_SN = {3: ("C3",), 4: ("A4",), 5: ("C5", "D5", "F20", "A5")}


def _factor_int(m: int) -> dict[int, int]:
    m = abs(m)
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def case_partition(n: int, H: int, params: SieveParams | None = None) -> dict:
    """Sieve cases for irreducible f with primitive non-S_n group.

    C = product of primes with certified positive field-disc valuation,
    D = product p^{v_p} over those primes.  Case I: C <= H^{1+d} < ... and
    D > H^{2+2d}; Case II: C <= H^{1+d} and D <= H^{2+2d}; Case III:
    C > H^{1+d}.  A prime with p^2 | disc and no Dedekind certificate sends
    the polynomial to unknownC.  Threshold comparisons are exact: C <= H^t
    for rational t = u/v is decided as C^v <= H^u in integers.
    """
    if n not in _PRIMITIVE_NON_SN:
        raise DegreeOutOfRange("case partition for 3 <= n <= 5")
    params = params or SieveParams(n)
    delta = params.resolved_delta()
    num, den = delta.numerator, delta.denominator
    targets = set(_PRIMITIVE_NON_SN[n])
    hist = {"I": 0, "II": 0, "III": 0, "unknownC": 0}
    for tup in itertools.product(range(-H, H + 1), repeat=n):
        f = MonicIntPoly(tup)
        delta_f = disc(f)
        if delta_f == 0:
            continue
        if galois._exact_group_name(f) not in targets:
            continue
        C = 1
        D = 1
        unknown = False
        for p, e in _factor_int(delta_f).items():
            if e == 1:
                D *= p  # p-maximality is automatic when p exactly divides disc
                C *= p
                continue
            v = field_disc_valuation(f, p)
            if v is None:
                unknown = True
                break
            if v > 0:
                C *= p
                D *= p**v
        if unknown:
            hist["unknownC"] += 1
            continue
        # C <= H^(1+delta)  <=>  C^den <= H^(den+num)
        c_small = C**den <= H ** (den + num)
        d_small = D**den <= H ** (2 * den + 2 * num)
        if not c_small:
            hist["III"] += 1
        elif d_small:
            hist["II"] += 1
        else:
            hist["I"] += 1
    return hist


# ---------------------------------------------------------------------------
# Exponent bound calculator


@dataclass(frozen=True)
class BoundInputs:
    n: int
    ind: int  # k = ind(G)
    a: Fraction
    u: Fraction

    def __post_init__(self):
        if self.n < 2:
            raise UsageError("need n >= 2")
        if not 1 <= self.ind <= self.n - 1:
            raise UsageError("need 1 <= ind <= n-1")
        if self.a <= 0:
            raise UsageError("need a > 0")
        if self.u not in (Fraction(0), Fraction(1, self.n * (self.n - 1))):
            raise UsageError("u must be 0 or 1/(n(n-1))")


def bound_calculator(inp: BoundInputs) -> dict:
    """Exponent bound for N_n(G,H): all terms exact Fractions.

    term1 = n+1-k, term2 = n - (n-1)(1-1/k)/(a+1-1/k-u),
    term3 = (2n-2)(a-u)+1, chosen = min(max(term1, term2), term3);
    Ystar is the balancing exponent (n-1)/(a+1-1/k-u).
    """
    from .errors import DivisionByZero

    n, k, a, u = inp.n, inp.ind, inp.a, inp.u
    denom = a + 1 - Fraction(1, k) - u
    if denom == 0:
        raise DivisionByZero("a + 1 - 1/k - u = 0")
    term1 = Fraction(n + 1 - k)
    term2 = n - (n - 1) * (1 - Fraction(1, k)) / denom
    term3 = (2 * n - 2) * (a - u) + 1
    chosen = min(max(term1, term2), term3)
    ystar = Fraction(n - 1) / denom
    return {
        "term1Exp": term1,
        "term2Exp": term2,
        "term3Exp": term3,
        "chosenExp": chosen,
        "Ystar": ystar,
    }


def cor17_report(n: int) -> dict:
    """Both readings of the O(H^{3n/11+1.164}) headline bound, for inspection.

    The direct evaluation with a = 3/8, k = n/2, u = 0 is
    (3n^2+8n-16)/(11n-16), which tends to 3n/11 + 136/121; the stated
    headline has additive constant 1.164.  Both are reported, neither
    is asserted.
    """
    if n < 4 or n % 2:
        raise UsageError("need even n >= 4")
    out = bound_calculator(BoundInputs(n=n, ind=n // 2, a=Fraction(3, 8), u=Fraction(0)))
    headline = Fraction(3 * n, 11) + Fraction(1164, 1000)
    return {
        "formulaExp": out["term2Exp"],
        "chosenExp": out["chosenExp"],
        "headlineExp": headline,
        "asymptoticConstant": Fraction(136, 121),
    }


# ---------------------------------------------------------------------------
# Height multiplicativity table


def intransitive_height_report(n1: int, n2: int, H: int, budget: int = 10**6) -> dict:
    """Joint height distribution over factorizations f = f1 f2 in the box.

    Enumerates every monic f of degree n1+n2 with H(f) <= H, splits its
    integer factorization into degree-(n1, n2) products, and brackets the
    ratio H(f1)H(f2)/H(f) against [C(n, floor(n/2))^-1, sqrt(n+1)].
    """
    n = n1 + n2
    if n1 < 1 or n2 < 1 or n > 8 or H > 30 or H < 0:
        raise UsageError("need n1, n2 >= 1, n1+n2 <= 8, 0 <= H <= 30")
    if (2 * H + 1) ** n > budget:
        raise BudgetExceeded(f"(2H+1)^n = {(2*H+1)**n} exceeds budget {budget}")
    lo_const = Fraction(1, math.comb(n, n // 2))
    hi_const = math.sqrt(n + 1)
    rows = []
    ratios = []
    for tup in itertools.product(range(-H, H + 1), repeat=n):
        f = MonicIntPoly(tup)
        fac = []
        for g, e in galois.factor_over_Z(f):
            fac.extend([g] * e)
        if sum(g.degree for g in fac) != n:
            continue  # cannot happen for monic f; guard
        seen = set()
        idx = range(len(fac))
        for r in range(len(fac) + 1):
            for combo in itertools.combinations(idx, r):
                if sum(fac[i].degree for i in combo) != n1:
                    continue
                f1 = _product([fac[i] for i in combo])
                if f1 in seen:
                    continue
                seen.add(f1)
                rest = [fac[i] for i in idx if i not in combo]
                f2 = _product(rest)
                h1 = max(1, f1.height())
                h2 = max(1, f2.height())
                hf = max(1, f.height())
                ratio = h1 * h2 / hf
                ratios.append(ratio)
                rows.append({"f1": f1.to_json(), "f2": f2.to_json(), "H1": h1, "H2": h2, "Hf": hf, "ratio": ratio})
    in_bracket = all(float(lo_const) <= r <= hi_const for r in ratios)
    return {
        "rows": rows,
        "products": len(rows),
        "minRatio": min(ratios) if ratios else None,
        "maxRatio": max(ratios) if ratios else None,
        "bracket": [float(lo_const), hi_const],
        "withinBracket": in_bracket,
    }


def _product(factors) -> MonicIntPoly:
    out = [1]
    for g in factors:
        gf = g.full()
        nxt = [0] * (len(out) + len(gf) - 1)
        for i, x in enumerate(out):
            for j, y in enumerate(gf):
                nxt[i + j] += x * y
        out = nxt
    return MonicIntPoly.from_full(out)


# ---------------------------------------------------------------------------
# Exponent fit


def exponent_fit(counts) -> dict:
    """Least-squares slope of log(count) against log(H)."""
    counts = list(counts)
    if len(counts) < 3:
        raise InsufficientData("need at least 3 points")
    for h, c in counts:
        if c <= 0:
            raise ZeroCount(f"count {c} at H={h}")
        if h <= 0:
            raise UsageError("need H > 0 for a log-log fit")
    x = np.log([float(h) for h, _ in counts])
    y = np.log([float(c) for _, c in counts])
    A = np.vstack([x, np.ones_like(x)]).T
    sol, res, _, _ = np.linalg.lstsq(A, y, rcond=None)
    residual = float(res[0]) if len(res) else float(np.sum((A @ sol - y) ** 2))
    return {"slope": float(sol[0]), "intercept": float(sol[1]), "residual": residual}
