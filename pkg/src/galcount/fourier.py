"""Finite-field Fourier analysis of the splitting-type weights.

w_{p,sigma}(f) counts sigma-patterned tuples of distinct irreducibles whose
product-with-multiplicity divides f, up to sigma-preserving permutations;
its transform over the coefficient space mod p is

    what(g) = p^-N * sum_f w(f) e(2 pi i [f,g] / p),

with [f,g] the coordinatewise dot product of coefficient vectors and N the
dimension of the space (n for monic, n+1 for binary forms).  The table is
built by adding each sigma-selection's multiples into the weight array and
running an axis-by-axis DFT; a direct sparse double sum is kept as an
independent cross-check path for small p.

The binary-form space is the full space of degree-n forms c_0 x^n + ... +
c_n y^n, and its irreducibles are y together with the monic-in-x forms, so
every nonzero form is a unit times a product of pool members.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import TooLarge, UsageError
from .polyarith import (
    MonicIntPoly,
    PolyModP,
    SplittingType,
    factor_mod_p,
    index_mod_p,
    index_table,
    is_prime,
    ptrim,
)

SPACE_CAP = 2 * 10**7
IRRED_CAP = 10**7


@dataclass(frozen=True)
class WeightSpace:
    kind: str  # "monic" or "binary"
    p: int
    n: int

    def __post_init__(self):
        if self.kind not in ("monic", "binary"):
            raise UsageError("kind must be monic or binary")
        if not is_prime(self.p):
            raise UsageError(f"{self.p} is not prime")
        if self.n < 1:
            raise UsageError("n >= 1 required")

    @property
    def dim(self) -> int:
        return self.n if self.kind == "monic" else self.n + 1

    @property
    def points(self) -> int:
        return self.p**self.dim


@lru_cache(maxsize=None)
def enumerate_irreducibles(p: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All monic irreducibles of degree d over F_p, ascending coefficients.

    Built degree by degree: a monic polynomial is irreducible iff no
    irreducible of degree <= d/2 divides it.
    """
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    if p**d > IRRED_CAP:
        raise TooLarge(f"p^d = {p**d} exceeds cap")
    if d == 1:
        return tuple((a, 1) for a in range(p))
    lower = [enumerate_irreducibles(p, e) for e in range(1, d // 2 + 1)]
    out = []
    from .polyarith import pdivmod

    for body in itertools.product(range(p), repeat=d):
        f = list(body) + [1]
        if all(
            pdivmod(f, list(q), p)[1] != [0] for pool in lower for q in pool
        ):
            out.append(tuple(f))
    return tuple(out)


def irreducible_count_necklace(p: int, d: int) -> int:
    """(1/d) sum_{e|d} mu(e) p^(d/e), the necklace cross-check."""

    def mu(m: int) -> int:
        out, q = 1, 2
        while q * q <= m:
            if m % q == 0:
                m //= q
                if m % q == 0:
                    return 0
                out = -out
            q += 1
        if m > 1:
            out = -out
        return out

    return sum(mu(e) * p ** (d // e) for e in range(1, d + 1) if d % e == 0) // d


_Y = ("y",)  # marker for the binary-space irreducible y


def _pools(space: WeightSpace, d: int) -> list:
    """Irreducibles of degree d available in the space."""
    pool = [("x", c) for c in enumerate_irreducibles(space.p, d)]
    if space.kind == "binary" and d == 1:
        pool = [_Y] + pool
    return pool


def _form_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _member_form(member, p: int) -> list[int]:
    """Descending coefficients of a pool member as a binary form."""
    if member == _Y:
        return [0, 1]
    return list(reversed(member[1]))  # homogenize the monic univariate


def _member_poly(member) -> list[int]:
    """Ascending univariate coefficients of a monic-space pool member."""
    return list(member[1])


def _selections(space: WeightSpace, sigma: SplittingType):
    """Yield all sets of distinct irreducibles matching sigma.

    Each selection is a list of (member, e); members of equal degree are
    distinct across the whole selection, and equal (f,e) parts are chosen
    as unordered combinations so every sigma-orbit appears exactly once.
    """
    classes: dict[tuple[int, int], int] = {}
    for part in sigma.parts:
        classes[part] = classes.get(part, 0) + 1
    items = sorted(classes.items())

    def rec(i: int, used: frozenset, acc: list):
        if i == len(items):
            yield acc
            return
        (fdeg, e), cnt = items[i]
        pool = [m for m in _pools(space, fdeg) if m not in used]
        for combo in itertools.combinations(pool, cnt):
            yield from rec(i + 1, used | frozenset(combo), acc + [(m, e) for m in combo])

    yield from rec(0, frozenset(), [])


@dataclass
class FourierTable:
    space: WeightSpace
    sigma: SplittingType
    values: np.ndarray  # complex, shape (p,)*dim
    weights: np.ndarray  # the underlying integer weight array

    @property
    def k(self) -> int:
        return self.sigma.ind

    @property
    def d(self) -> int:
        return self.sigma.deg

    @property
    def aut_count(self) -> int:
        return self.sigma.aut_count


def _weight_array(space: WeightSpace, sigma: SplittingType) -> np.ndarray:
    p, n = space.p, space.n
    shape = (p,) * space.dim
    w = np.zeros(shape, dtype=np.int64)
    d = sigma.deg
    if d > n:
        return w
    flat = w.reshape(-1)
    if space.kind == "monic":
        for sel in _selections(space, sigma):
            q = [1]
            for m, e in sel:
                poly = _member_poly(m)
                for _ in range(e):
                    q = _form_mul(q, poly, p)  # ascending convolution works too
            qd = len(q) - 1
            for mon in itertools.product(range(p), repeat=n - qd):
                prod = _form_mul(q, [*reversed(mon), 1], p)
                # descending (a_1..a_n) after the leading 1
                idx = 0
                for c in reversed(prod[:-1]):
                    idx = idx * p + c
                flat[idx] += 1
    else:
        for sel in _selections(space, sigma):
            q = [1]  # descending form coefficients
            for m, e in sel:
                form = _member_form(m, p)
                for _ in range(e):
                    q = _form_mul(q, form, p)
            qd = len(q) - 1
            for rest in itertools.product(range(p), repeat=n - qd + 1):
                prod = _form_mul(q, list(rest), p)
                idx = 0
                for c in prod:
                    idx = idx * p + c
                flat[idx] += 1
    return w


def fourier_table(space: WeightSpace, sigma: SplittingType) -> FourierTable:
    if space.points > SPACE_CAP:
        raise TooLarge(f"{space.points} points exceed cap {SPACE_CAP}")
    w = _weight_array(space, sigma)
    # ifftn is exactly p^-N sum w(f) e(+2 pi i [f,g]/p), the definition
    values = np.fft.ifftn(w.astype(np.complex128))
    return FourierTable(space, sigma, values, w)


def weight(space: WeightSpace, point: tuple[int, ...], sigma: SplittingType) -> int:
    """Pointwise w_{p,sigma}: independent of the table-building path."""
    p, n = space.p, space.n
    if sigma.deg > n:
        return 0
    if space.kind == "monic":
        if len(point) != n:
            raise UsageError("monic point is (a_1..a_n)")
        fac = factor_mod_p(PolyModP.of(p, [point[i] % p for i in range(n - 1, -1, -1)] + [1]))
        mults = {("x", g.coeffs): e for g, e in fac}
    else:
        if len(point) != n + 1:
            raise UsageError("binary point is (c_0..c_n)")
        c = [x % p for x in point]
        if all(x == 0 for x in c):
            mults = None  # the zero form: everything divides it
        else:
            v = next(i for i, x in enumerate(c) if x)
            uni_desc = c[v:]
            mults = {_Y: v} if v else {}
            if len(uni_desc) > 1:
                lead_inv = pow(uni_desc[0], p - 2, p)
                monic = [x * lead_inv % p for x in reversed(uni_desc)]
                for g, e in factor_mod_p(PolyModP.of(p, monic)):
                    mults[("x", g.coeffs)] = e
            # degree-0 remainder contributes nothing
    count = 0
    for sel in _selections(space, sigma):
        if mults is None or all(
            mults.get(m, 0) >= e for m, e in sel
        ):
            count += 1
    return count


def direct_transform(space: WeightSpace, w: np.ndarray) -> np.ndarray:
    """Sparse double-sum transform, the cross-check path (p <= 5 intended)."""
    p = space.p
    dim = space.dim
    root = np.exp(2j * np.pi / p)
    powers = root ** np.arange(p)
    out = np.zeros((p,) * dim, dtype=np.complex128)
    nz = np.argwhere(w != 0)
    vals = w[w != 0]
    for g in itertools.product(range(p), repeat=dim):
        acc = 0j
        garr = np.array(g)
        phases = (nz @ garr) % p
        acc = np.sum(vals * powers[phases])
        out[g] = acc / p**dim
    return out


def parseval_gap(table: FourierTable) -> float:
    """Relative gap in sum_g |what(g)|^2 = p^-N sum_f w(f)^2."""
    lhs = float(np.sum(np.abs(table.values) ** 2))
    rhs = float(np.sum(table.weights.astype(np.float64) ** 2)) / table.space.points
    if rhs == 0:
        return abs(lhs)
    return abs(lhs - rhs) / rhs


def verify_decay(table: FourierTable) -> dict:
    """Main-term and scaled-maximum report for the decay propositions."""
    p = table.space.p
    k = table.k
    vals = table.values
    main = vals.reshape(-1)[0]
    main_term = 0.0 if table.d > table.space.n else p ** (-k) / table.aut_count
    main_err = abs(main - main_term) * p ** (k + 1)
    monic_full_degree = table.space.kind == "monic" and table.d == table.space.n
    exponent = k + 0.5 if monic_full_degree else k + 1
    flat = np.abs(vals.reshape(-1)).copy()
    flat[0] = 0.0
    max_scaled = float(flat.max() * p**exponent) if flat.size > 1 else 0.0
    return {
        "p": p,
        "n": table.space.n,
        "space": table.space.kind,
        "sigma": str(table.sigma),
        "k": k,
        "d": table.d,
        "mainTermError": float(main_err),
        "maxNonzeroScaled": max_scaled,
        "regime": "p^(k+1/2)" if monic_full_degree else "p^(k+1)",
    }


# ---------------------------------------------------------------------------
# Box counts via residue-class precounts


def _residue_counts(p: int, H: int) -> np.ndarray:
    """counts[r] = #{a in [-H,H] : a = r mod p}."""
    out = np.zeros(p, dtype=np.int64)
    for r in range(p):
        out[r] = (H - r) // p - math.ceil((-H - r) / p) + 1
    return out


def _index_mask(p: int, n: int, k: int) -> np.ndarray:
    """Boolean (p,)*n array: residue tuples with index >= k mod p."""
    if p > n:
        tab = np.array(index_table(p, n), dtype=np.int64).reshape((p,) * n)
    else:
        tab = np.zeros((p,) * n, dtype=np.int64)
        for tup in itertools.product(range(p), repeat=n):
            tab[tup] = index_mod_p(MonicIntPoly(tup), p)
    return tab >= k


def box_count_index(p: int, n: int, k: int, H: int) -> int:
    """#{monic f in [-H,H]^n : ind(f mod p) >= k}, exact."""
    if (2 * H + 1) ** n > 10**9:
        raise TooLarge("box exceeds the scan budget")
    if k <= 0:
        return (2 * H + 1) ** n
    mask = _index_mask(p, n, k).astype(object)
    c = _residue_counts(p, H).astype(object)
    acc = mask
    for _ in range(n):
        acc = np.tensordot(acc, c, axes=([acc.ndim - 1], [0]))
    return int(acc)


def box_count_index_scan(p: int, n: int, k: int, H: int) -> int:
    """Direct scan cross-check (small boxes only)."""
    if (2 * H + 1) ** n > 10**6:
        raise TooLarge("scan cross-check limited to 10^6 points")
    mask = _index_mask(p, n, k)
    count = 0
    for tup in itertools.product(range(-H, H + 1), repeat=n):
        if mask[tuple(a % p for a in tup)]:
            count += 1
    return count


def multi_prime_box_count(conditions: list[tuple[int, int]], n: int, H: int) -> int:
    """#{monic f in box : ind(f mod p_i) >= k_i for all i}, via CRT residues."""
    primes = [p for p, _ in conditions]
    if len(set(primes)) != len(primes):
        raise UsageError("repeated primes")
    q = math.prod(primes)
    if q > 10**5 or q**n > 10**7:
        raise TooLarge("CRT residue scan too large")
    if (2 * H + 1) ** n > 10**9:
        raise TooLarge("box exceeds the scan budget")
    joint = np.ones((q,) * n, dtype=bool)
    r = np.arange(q)
    for p, k in conditions:
        if k <= 0:
            continue
        mask = _index_mask(p, n, k)
        joint &= mask[np.ix_(*([r % p] * n))]
    c = _residue_counts(q, H).astype(object)
    acc = joint.astype(object)
    for _ in range(n):
        acc = np.tensordot(acc, c, axes=([acc.ndim - 1], [0]))
    return int(acc)
