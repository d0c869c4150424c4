"""Exact polynomial arithmetic over Z and F_p.

Integer polynomials are coefficient lists in descending order
[lead, ..., const]; polynomials over F_p are lists in ascending order
(index = power) because the gcd/factorization loops read nicer that way.
MonicIntPoly stores only (a_1,...,a_n) for x^n + a_1 x^{n-1} + ... + a_n.

Sign convention, fixed for reproducibility: Res(f,g) is the determinant of
the Sylvester matrix with the f-rows first, and
disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    CharacteristicTooSmall,
    DegreeTooSmall,
    NotPrime,
    SubsetSumZero,
    ToleranceUnreachable,
    UsageError,
)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


@dataclass(frozen=True)
class MonicIntPoly:
    """x^n + a_1 x^(n-1) + ... + a_n with exact integer coefficients."""

    coeffs: tuple[int, ...]  # (a_1, ..., a_n)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def full(self) -> list[int]:
        """Descending coefficient list [1, a_1, ..., a_n]."""
        return [1, *self.coeffs]

    def __call__(self, x):
        v = 1
        for a in self.coeffs:
            v = v * x + a
        return v

    def derivative(self) -> list[int]:
        """Descending coefficients of f' (not monic)."""
        n = self.degree
        full = self.full()
        return [full[i] * (n - i) for i in range(n)]

    def height(self) -> int:
        return max((abs(a) for a in self.coeffs), default=0)

    def shift_const(self, delta: int) -> "MonicIntPoly":
        return MonicIntPoly((*self.coeffs[:-1], self.coeffs[-1] + delta))

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, arr) -> "MonicIntPoly":
        return cls(tuple(int(a) for a in arr))

    @classmethod
    def from_full(cls, full) -> "MonicIntPoly":
        if not full or full[0] != 1:
            raise UsageError("not monic")
        return cls(tuple(full[1:]))


def height(f: MonicIntPoly) -> int:
    return f.height()


# ---------------------------------------------------------------------------
# Resultants: Bareiss on the Sylvester matrix (primary) and modular CRT
# (independent cross-check path)


def _trim(c: list[int]) -> list[int]:
    i = 0
    while i < len(c) - 1 and c[i] == 0:
        i += 1
    return c[i:]


def sylvester_matrix(f: list[int], g: list[int]) -> list[list[int]]:
    f, g = _trim(list(f)), _trim(list(g))
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):  # f-rows first
        rows.append([0] * i + f + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + g + [0] * (m - 1 - i))
    assert all(len(r) == size for r in rows)
    return rows


def _det_bareiss(mat: list[list[int]]) -> int:
    """Fraction-free exact integer determinant."""
    a = [row[:] for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(f: list[int], g: list[int]) -> int:
    """Res(f,g), normalized so Res(x-a, x-b) = b-a.

    Computed as the Sylvester determinant (f-rows first) times
    (-1)^(deg f * deg g); the sign factor is what makes the linear example
    come out b-a while leaving every even-degree-product case untouched.
    """
    f, g = _trim(list(f)), _trim(list(g))
    if f == [0] or g == [0]:
        raise UsageError("resultant of the zero polynomial")
    m, n = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    det = _det_bareiss(sylvester_matrix(f, g))
    return -det if (m * n) % 2 else det


def _res_mod_p(f: list[int], g: list[int], p: int) -> int:
    """Resultant mod p by the Euclidean product formula."""
    a = [c % p for c in _trim(f)]
    b = [c % p for c in _trim(g)]
    a, b = _trim(a), _trim(b)
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db < 0:
            return 0
        if db == 0:
            return res * pow(b[0], da, p) % p
        # remainder of a by b
        lcb = b[0]
        inv = pow(lcb, p - 2, p)
        r = a[:]
        for i in range(da - db + 1):
            q = r[i] * inv % p
            if q:
                for j in range(db + 1):
                    r[i + j] = (r[i + j] - q * b[j]) % p
        r = _trim(r)
        dr = len(r) - 1 if r != [0] else -1
        if dr < 0:
            return 0
        res = res * pow(lcb, da - dr, p) % p
        if (da * db) % 2 == 1:
            res = (-res) % p
        a, b = b, r


@lru_cache(maxsize=1)
def _crt_primes() -> list[int]:
    out = []
    q = 1 << 30
    while len(out) < 64:
        q += 1
        if is_prime(q):
            out.append(q)
    return out


def resultant_crt(f: list[int], g: list[int]) -> int:
    """Independent code path: CRT over primes past the Hadamard bound."""
    f, g = _trim(list(f)), _trim(list(g))
    if f == [0] or g == [0]:
        raise UsageError("resultant of the zero polynomial")
    m, n = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    bound = 1
    for row in sylvester_matrix(f, g):
        bound *= math.isqrt(sum(c * c for c in row)) + 1
    primes, modulus, res = [], 1, 0
    pool = iter(_crt_primes())
    while modulus <= 2 * bound:
        try:
            p = next(pool)
        except StopIteration:  # extend the pool
            q = _crt_primes()[-1] + 1
            while not is_prime(q) or q in primes:
                q += 1
            p = q
        if f[0] % p == 0 or g[0] % p == 0:
            continue
        rp = _res_mod_p(f, g, p)
        # CRT combine
        inv = pow(modulus % p, p - 2, p) if modulus > 1 else 1
        res = res + modulus * ((rp - res) * inv % p)
        modulus *= p
        primes.append(p)
    res %= modulus
    if res > modulus // 2:
        res -= modulus
    return -res if (m * n) % 2 else res


def disc_general(f: list[int], use_crt: bool = False) -> int:
    """disc of an integer polynomial: (-1)^(d(d-1)/2) Res(f,f') / lc."""
    f = _trim(list(f))
    d = len(f) - 1
    if d <= 0:
        raise UsageError("disc needs degree >= 1")
    if d == 1:
        return 1
    fp = _trim([f[i] * (d - i) for i in range(d)])
    res = resultant_crt(f, fp) if use_crt else resultant(f, fp)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, f[0])
    assert r == 0
    return q


def disc(f: MonicIntPoly, use_crt: bool = False) -> int:
    return disc_general(f.full(), use_crt=use_crt)


# ---------------------------------------------------------------------------
# The discriminant as a polynomial in a_n, and the double discriminant


def disc_poly_in_last(n: int, prefix: tuple[int, ...]) -> list[int]:
    """Descending integer coefficients of a_n |-> Disc(x^n + a_1 x^(n-1) + ... + a_n).

    Degree in a_n is exactly n-1 (the leading coefficient is +-n^n), so n
    interpolation points determine it; Lagrange interpolation over exact
    rationals must land on integers, asserted.
    """
    if len(prefix) != n - 1:
        raise UsageError("prefix must have length n-1")
    xs = list(range(n))
    ys = [disc(MonicIntPoly((*prefix, t))) for t in xs]
    # Newton divided differences
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form to the descending power basis
    poly = [Fraction(0)] * n
    acc = [Fraction(1)]  # descending coeffs of prod_{i<j} (t - x_i)
    for j in range(n):
        offset = n - len(acc)
        for i, c in enumerate(acc):
            poly[offset + i] += coef[j] * c
        if j < n - 1:
            shifted = acc + [Fraction(0)]
            for i in range(1, len(shifted)):
                shifted[i] -= Fraction(xs[j]) * acc[i - 1]
            acc = shifted
    out = []
    for c in poly:
        assert c.denominator == 1
        out.append(int(c))
    return _trim(out)


@dataclass(frozen=True)
class DoubleDiscInput:
    degree: int
    prefix: tuple[int, ...]

    def __post_init__(self):
        if self.degree <= 2:
            raise DegreeTooSmall("double disc needs degree >= 3")
        if len(self.prefix) != self.degree - 1:
            raise UsageError("prefix must have length n-1")


def double_disc(inp: DoubleDiscInput) -> int:
    """DD(a_1..a_{n-1}) = Disc_{a_n}(Disc_x f), same sign convention."""
    g = disc_poly_in_last(inp.degree, inp.prefix)
    if len(g) - 1 < 1:
        return 0  # Disc_x degenerate to a constant in a_n (cannot happen generically)
    if len(g) - 1 == 1:
        return 1
    return disc_general(g)


def mod_p2_forced_test(p: int, n: int, residues: tuple[int, ...]) -> bool:
    """True iff Disc(f + p*t) = 0 mod p^2 for every shift t in [0,p) of a_n.

    This is the exactly-checkable hypothesis of the section-5 proposition:
    the discriminant vanishing to order 2 at p "for mod p reasons",
    uniformly in the a_n direction.
    """
    _require_prime(p)
    if len(residues) != n:
        raise UsageError("need n residues")
    f = MonicIntPoly(tuple(r % (p * p) for r in residues))
    p2 = p * p
    return all(disc(f.shift_const(p * t)) % p2 == 0 for t in range(p))


# ---------------------------------------------------------------------------
# Arithmetic over F_p (ascending coefficient lists)


def ptrim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def pmul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return ptrim(out)


def pdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = a[:]
    db, da = len(b) - 1, len(a) - 1
    if b == [0]:
        raise ZeroDivisionError
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(da - db + 1, 1)
    for i in range(da - db, -1, -1):
        c = a[i + db] * inv % p
        if c:
            q[i] = c
            for j in range(db + 1):
                a[i + j] = (a[i + j] - c * b[j]) % p
    return ptrim(q), ptrim(a[: max(db, 1)])


def pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = ptrim(a[:]), ptrim(b[:])
    while b != [0]:
        _, r = pdivmod(a, b, p)
        a, b = b, r
    if a != [0]:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def pmonic(a: list[int], p: int) -> list[int]:
    a = ptrim(a[:])
    if a == [0]:
        return a
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def ppow_mod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = pdivmod(pmul(result, base, p), mod, p)[1]
        base = pdivmod(pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def pderiv(a: list[int], p: int) -> list[int]:
    return ptrim([(i * a[i]) % p for i in range(1, len(a))] or [0])


@dataclass(frozen=True)
class PolyModP:
    """Polynomial over F_p, ascending residue coefficients."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _require_prime(self.p)
        c = list(self.coeffs)
        if len(c) > 1 and c[-1] == 0:
            raise UsageError("leading coefficient must be nonzero")
        if any(not 0 <= x < self.p for x in c):
            raise UsageError("coefficients must be reduced mod p")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def of(cls, p: int, coeffs: list[int]) -> "PolyModP":
        return cls(p, tuple(ptrim([c % p for c in coeffs])))


def _pth_root(a: list[int], p: int) -> list[int]:
    # over F_p the coefficient-wise p-th root is the identity; f(x) = g(x^p)
    return [a[i] for i in range(0, len(a), p)]


def _squarefree_decomposition(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """[(g, multiplicity)] with product g^mult = f (f monic), g squarefree."""
    out: list[tuple[list[int], int]] = []

    def rec(f: list[int], mult: int):
        if len(f) == 1:
            return
        d = pderiv(f, p)
        if d == [0]:
            rec(_pth_root(f, p), mult * p)
            return
        c = pgcd(f, d, p)
        w = pdivmod(f, c, p)[0]  # product of squarefree part
        i = 1
        while len(w) > 1:
            y = pgcd(w, c, p)
            z = pdivmod(w, y, p)[0]
            if len(z) > 1:
                out.append((z, mult * i))
            c = pdivmod(c, y, p)[0]
            w = y
            i += 1
        # what is left of c is the product of the factors whose multiplicity
        # is divisible by p, each still at full multiplicity
        if len(c) > 1:
            rec(c, mult)

    rec(pmonic(f, p), 1)
    return out


def _distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Split squarefree monic f into products of irreducibles of equal degree."""
    out = []
    h = [0, 1]  # x
    v = f[:]
    d = 0
    while len(v) - 1 > 2 * d:
        d += 1
        h = ppow_mod(h, p, v, p)
        g = pgcd([(a - b) % p for a, b in itertools.zip_longest(h, [0, 1], fillvalue=0)], v, p)
        if len(g) > 1:
            out.append((g, d))
            v = pdivmod(v, g, p)[0]
            h = pdivmod(h, v, p)[1]
    if len(v) > 1:
        out.append((v, len(v) - 1))
    return out


def _equal_degree(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus split of monic squarefree f, all factors of degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)] + [1]
        if p == 2:
            # trace map over F_{2^d}
            t = a[:]
            cur = a[:]
            for _ in range(d - 1):
                cur = ppow_mod(cur, 2, f, p)
                t = ptrim([(x + y) % p for x, y in itertools.zip_longest(t, cur, fillvalue=0)])
            g = pgcd(t, f, p)
        else:
            b = ppow_mod(a, (p**d - 1) // 2, f, p)
            b = b[:]
            b[0] = (b[0] - 1) % p
            g = pgcd(ptrim(b), f, p)
        if 0 < len(g) - 1 < n:
            rest = pdivmod(f, g, p)[0]
            return _equal_degree(g, d, p, rng) + _equal_degree(rest, d, p, rng)


def factor_mod_p(f: PolyModP, seed: int | None = None) -> list[tuple[PolyModP, int]]:
    """Complete monic factorization of f over F_p.

    The equal-degree stage is randomized; the rng is seeded from (f, p) so
    repeated calls are reproducible.  The returned list is sorted.
    """
    p = f.p
    c = list(f.coeffs)
    if c == [0]:
        raise UsageError("cannot factor the zero polynomial")
    if len(c) == 1:
        return []
    if seed is None:
        seed = hash((p,) + tuple(c)) & 0x7FFFFFFF
    rng = random.Random(seed)
    out = []
    for g, mult in _squarefree_decomposition(c, p):
        for h, d in _distinct_degree(g, p):
            for irr in _equal_degree(h, d, p, rng):
                out.append((PolyModP(p, tuple(irr)), mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs, t[1]))
    return out


# ---------------------------------------------------------------------------
# Splitting types


@dataclass(frozen=True)
class SplittingType:
    """Pattern (f_1^{e_1} ... f_r^{e_r}): multiset of (degree, multiplicity)."""

    parts: tuple[tuple[int, int], ...]  # sorted ((f_i, e_i), ...)

    def __post_init__(self):
        if any(f < 1 or e < 1 for f, e in self.parts):
            raise UsageError("parts must be positive")
        if list(self.parts) != sorted(self.parts):
            raise UsageError("parts must be sorted")

    @classmethod
    def of(cls, parts) -> "SplittingType":
        return cls(tuple(sorted((int(f), int(e)) for f, e in parts)))

    @property
    def deg(self) -> int:
        return sum(f * e for f, e in self.parts)

    @property
    def ind(self) -> int:
        return sum(f * (e - 1) for f, e in self.parts)

    @property
    def len(self) -> int:
        return sum(f for f, _ in self.parts)

    @property
    def aut_count(self) -> int:
        prod = 1
        for f, _ in self.parts:
            prod *= f
        counts: dict[tuple[int, int], int] = {}
        for part in self.parts:
            counts[part] = counts.get(part, 0) + 1
        for c in counts.values():
            prod *= math.factorial(c)
        return prod

    @classmethod
    def parse(cls, text: str) -> "SplittingType":
        """Grammar: parts `f^e` joined by spaces, `^e` omitted when e = 1."""
        parts = []
        for token in text.split():
            if "^" in token:
                f, e = token.split("^", 1)
            else:
                f, e = token, "1"
            if not (f.isdigit() and e.isdigit() and int(f) >= 1 and int(e) >= 1):
                raise UsageError(f"bad sigma token {token!r}")
            parts.append((int(f), int(e)))
        if not parts:
            raise UsageError("empty sigma")
        return cls.of(parts)

    def __str__(self) -> str:
        return " ".join(f"{f}^{e}" if e > 1 else str(f) for f, e in self.parts)


def splitting_type(f: MonicIntPoly, p: int) -> SplittingType:
    fac = factor_mod_p(PolyModP.of(p, list(reversed(f.full()))))
    return SplittingType.of((g.degree, e) for g, e in fac)


def index_mod_p(f: MonicIntPoly, p: int) -> int:
    return splitting_type(f, p).ind


# ---------------------------------------------------------------------------
# Dedekind's criterion


def dedekind_p_maximal(f: MonicIntPoly, p: int) -> bool:
    """Dedekind criterion: is Z[x]/(f) maximal at p? (f assumed irreducible/Q)."""
    _require_prime(p)
    fac = factor_mod_p(PolyModP.of(p, list(reversed(f.full()))))
    gstar = [1]
    hstar = [1]
    for g, e in fac:
        gstar = pmul(gstar, list(g.coeffs), p)
        for _ in range(e - 1):
            hstar = pmul(hstar, list(g.coeffs), p)
    # integer lifts, monic, ascending
    glift = [c if c <= p // 2 else c - p for c in gstar]
    hlift = [c if c <= p // 2 else c - p for c in hstar]
    prod = [0] * (len(glift) + len(hlift) - 1)
    for i, x in enumerate(glift):
        for j, y in enumerate(hlift):
            prod[i + j] += x * y
    fasc = list(reversed(f.full()))
    # g*h* == f mod p, so the difference is divisible by p coefficient-wise
    diff = [a - b for a, b in itertools.zip_longest(prod, fasc, fillvalue=0)]
    assert all(d % p == 0 for d in diff)
    tbar = ptrim([(d // p) % p for d in diff])
    g1 = pgcd(tbar, gstar, p)
    g2 = pgcd(g1, hstar, p)
    return len(g2) == 1


def field_disc_valuation(f: MonicIntPoly, p: int) -> int | None:
    """v_p of the field discriminant when Dedekind certifies maximality, else None."""
    if not dedekind_p_maximal(f, p):
        return None
    d = disc(f)
    v = 0
    while d % p == 0:
        d //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# Completion-counting verifiers (section 3)


def _index_via_gcd(full_desc: list[int], deriv_desc: list[int], p: int) -> int:
    """ind(f mod p) = deg gcd(f, f') when p > deg f (multiplicities < p)."""
    a = ptrim([c % p for c in reversed(full_desc)])
    b = ptrim([c % p for c in reversed(deriv_desc)])
    if b == [0]:
        return len(a) - 1  # cannot happen for p > n
    g = pgcd(a, b, p)
    return len(g) - 1


def count_index_completions(p: int, n: int, k: int, prefix: tuple[int, ...]) -> int:
    """Exact number of suffixes giving index exactly k over F_p (p > n)."""
    _require_prime(p)
    if p <= n:
        raise CharacteristicTooSmall("need p > n so that char is prime to n!")
    if not 1 <= k <= n - 1:
        raise UsageError("need 1 <= k <= n-1")
    if len(prefix) != n - k:
        raise UsageError("prefix must have length n-k")
    count = 0
    for suffix in itertools.product(range(p), repeat=k):
        full = [1, *prefix, *suffix]
        deriv = [full[i] * (n - i) for i in range(n)]
        if _index_via_gcd(full, deriv, p) == k:
            count += 1
    return count


def index_table(p: int, n: int) -> list[int]:
    """ind(f mod p) for every coefficient tuple (a_1..a_n), row-major (p > n)."""
    if p <= n:
        raise CharacteristicTooSmall("need p > n")
    out = []
    for body in itertools.product(range(p), repeat=n - 1):
        full = [1, *body, 0]
        deriv = [full[i] * (n - i) for i in range(n)]
        dasc = ptrim([c % p for c in reversed(deriv)])
        for an in range(p):
            fasc = [an, *reversed(body), 1]
            g = pgcd(fasc, dasc, p)
            out.append(len(g) - 1)
    return out


def partition_count(k: int, r: int) -> int:
    """q(k,r): partitions of k into at most r parts."""
    if k < 0 or r < 1:
        raise UsageError("need k >= 0, r >= 1")
    # dp over largest part
    table = [[0] * (k + 1) for _ in range(r + 1)]
    for j in range(r + 1):
        table[j][0] = 1
    for j in range(1, r + 1):
        for s in range(1, k + 1):
            table[j][s] = table[j - 1][s] + (table[j][s - j] if s >= j else 0)
    return table[r][k]


def partition_bound(k: int, r: int) -> int:
    """q(k,r) * r!, the completion-count bound."""
    return partition_count(k, r) * math.factorial(r)


def power_sum_solution_count(p: int, weights: tuple[int, ...], targets: tuple[int, ...]) -> int:
    """Solutions of sum m_i x_i^j = c_j (j = 1..r) in F_p^r, exact scan."""
    _require_prime(p)
    r = len(weights)
    if len(targets) != r:
        raise UsageError("need as many targets as weights")
    if r > 5 or p > 31:
        raise UsageError("scan limited to r <= 5, p <= 31")
    ws = [w % p for w in weights]
    for size in range(1, r + 1):
        for combo in itertools.combinations(ws, size):
            if sum(combo) % p == 0:
                raise SubsetSumZero(f"subset {combo} sums to 0 mod {p}")
    powers = [[pow(x, j, p) for j in range(1, r + 1)] for x in range(p)]
    count = 0
    for xs in itertools.product(range(p), repeat=r):
        if all(
            sum(ws[i] * powers[xs[i]][j] for i in range(r)) % p == targets[j] % p
            for j in range(r)
        ):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Mahler measure


def _squarefree_decomposition_Q(f: MonicIntPoly) -> list[tuple[MonicIntPoly, int]]:
    """Yun's algorithm in characteristic 0: monic squarefree parts with
    multiplicities.  Gauss's lemma keeps every part integer-coefficient."""

    def fdivmod(a, b):
        a = list(a)
        q = [Fraction(0)] * (len(a) - len(b) + 1)
        for i in range(len(q)):
            c = a[i] / b[0]
            q[i] = c
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
        return q, a[len(q):]

    def fgcd(a, b):
        while b and (len(b) > 1 or b[0] != 0):
            _, r = fdivmod(a, b)
            while len(r) > 1 and r[0] == 0:
                r.pop(0)
            a, b = b, r
        return [c / a[0] for c in a]

    def fderiv(a):
        d = len(a) - 1
        return [a[i] * (d - i) for i in range(d)]

    def to_poly(a):
        ints = []
        for c in a:
            assert c.denominator == 1
            ints.append(int(c))
        return MonicIntPoly(tuple(ints[1:]))

    def fsub(a, b):
        pad = len(a) - len(b)
        if pad < 0:
            a = [Fraction(0)] * (-pad) + list(a)
        elif pad > 0:
            b = [Fraction(0)] * pad + list(b)
        out = [x - y for x, y in zip(a, b)]
        while len(out) > 1 and out[0] == 0:
            out.pop(0)
        return out

    fq = [Fraction(c) for c in f.full()]
    a = fgcd(fq, fderiv(fq))
    if len(a) == 1:
        return [(f, 1)]
    b, _ = fdivmod(fq, a)
    c, _ = fdivmod(fderiv(fq), a)
    d = fsub(c, fderiv(b))
    out = []
    i = 1
    while len(b) > 1:
        p = fgcd(b, d)
        if len(p) > 1:
            out.append((to_poly(p), i))
        b, _ = fdivmod(b, p)
        c, _ = fdivmod(d, p)
        d = fsub(c, fderiv(b))
        i += 1
    return out


def mahler_measure(f: MonicIntPoly, tol: float = 1e-9) -> float:
    """prod max(1,|root|) with certified absolute error <= tol."""
    if tol < 1e-12:
        raise UsageError("tol too small to certify in double precision")
    import numpy as np

    parts = _squarefree_decomposition_Q(f)
    if len(parts) > 1 or parts[0][1] > 1:
        # repeated roots break both the residual certificate and the
        # high-precision solver; measure the squarefree parts instead.
        # M(g) >= 1, so each factor error delta inflates the product by
        # at most e*delta*M; a rough first pass sizes the budget
        weight = sum(e for _, e in parts)
        rough = 1.0
        for g, e in parts:
            rough *= mahler_measure(g, 1e-3) ** e
        budget = tol / (2 * weight * max(1.0, rough))
        out = 1.0
        for g, e in parts:
            out *= mahler_measure(g, max(budget, 1e-12)) ** e
        return out

    coeffs = [1.0, *map(float, f.coeffs)]
    roots = np.roots(coeffs)
    # Newton-residual error estimate per root
    fz = np.polyval(coeffs, roots)
    dcoeffs = np.polyder(np.array(coeffs))
    dfz = np.polyval(dcoeffs, roots)
    with np.errstate(divide="ignore", invalid="ignore"):
        delta = np.abs(fz) / np.abs(dfz)
    mods = np.abs(roots)
    m = float(np.prod(np.maximum(1.0, mods)))
    if np.all(np.isfinite(delta)):
        err = m * float(np.sum(delta / np.maximum(1.0, mods))) * 4.0
        if err <= tol:
            return m
    # escalate precision with mpmath, doubling up to 4 times
    import mpmath

    prev = None
    prec = 53
    for _ in range(5):
        prec *= 2
        with mpmath.workprec(prec):
            try:
                roots = mpmath.polyroots([1, *f.coeffs], maxsteps=200, extraprec=prec)
            except mpmath.libmp.NoConvergence:
                continue
            m = float(mpmath.fprod([max(1, abs(r)) for r in roots]))
        if prev is not None and abs(m - prev) <= tol / 2:
            return m
        prev = m
    raise ToleranceUnreachable(f"could not certify M(f) to {tol}")
