"""Permutation groups: indices, primitivity, and wreath-product actions.

Letters are 1-based in every external interface (constructors that take
cycles, JSON export); internally permutations map {0,...,n-1} to itself.

ind(g) = n - #orbits of <g> = sum over cycles of (length - 1), and
ind(G) = min of ind(g) over non-identity g.  These are the quantities the
bound calculator in `counting` consumes.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from .errors import (
    DegreeTooLarge,
    GroupTooLarge,
    IdentityElement,
    InternalError,
    NotTransitive,
    TrivialGroup,
    UsageError,
)

CLOSURE_CAP = 10**7
DEGREE_CAP = 10**5


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0,...,n-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise UsageError(f"not a permutation: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        """Build from disjoint cycles of 1-based letters, e.g. [(1,2),(3,4,5)]."""
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if images[a - 1] != a - 1:
                    raise UsageError("cycles are not disjoint")
                images[a - 1] = b - 1
        return cls(tuple(images))

    @classmethod
    def from_one_based(cls, images) -> "Permutation":
        return cls(tuple(i - 1 for i in images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(self * other)(x) = self(other(x))."""
        o = other.images
        s = self.images
        return Permutation(tuple(s[o[i]] for i in range(len(s))))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition on 0-based letters, fixed points included."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def moved(self) -> int:
        return sum(1 for i, j in enumerate(self.images) if i != j)

    def one_based(self) -> list[int]:
        return [i + 1 for i in self.images]


def cycle_type(g: Permutation) -> list[int]:
    """Multiset of cycle lengths (ascending), summing to the degree."""
    return sorted(len(c) for c in g.cycles())


def ind_of_element(g: Permutation) -> int:
    """ind(g) = n - #orbits = sum of (cycle length - 1)."""
    return g.degree - len(g.cycles())


def _ind_images(images: tuple[int, ...]) -> int:
    # closure loops work on raw image tuples to skip dataclass overhead
    n = len(images)
    seen = [False] * n
    orbits = 0
    for start in range(n):
        if seen[start]:
            continue
        orbits += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = images[j]
    return n - orbits


@dataclass
class PermGroup:
    """A permutation group given by generators; closure computed on demand."""

    degree: int
    generators: list[Permutation]
    name: str = ""
    expected_order: int | None = None
    _elements: list[tuple[int, ...]] | None = field(default=None, repr=False)

    def __post_init__(self):
        if not self.generators:
            raise UsageError("at least one generator required")
        for g in self.generators:
            if g.degree != self.degree:
                raise UsageError("generator degree mismatch")

    def elements(self, cap: int = CLOSURE_CAP) -> list[tuple[int, ...]]:
        """Full closure as raw image tuples (breadth-first multiplication)."""
        if self._elements is None:
            gens = [g.images for g in self.generators]
            ident = tuple(range(self.degree))
            seen = {ident}
            frontier = [ident]
            while frontier:
                nxt = []
                for e in frontier:
                    for g in gens:
                        prod = tuple(g[e[i]] for i in range(self.degree))
                        if prod not in seen:
                            seen.add(prod)
                            nxt.append(prod)
                if len(seen) > cap:
                    raise GroupTooLarge(f"closure exceeds cap {cap}")
                frontier = nxt
            self._elements = sorted(seen)
            if self.expected_order is not None and len(seen) != self.expected_order:
                raise InternalError(
                    f"{self.name or 'group'}: closure has {len(seen)} elements, "
                    f"expected {self.expected_order}"
                )
        return self._elements

    def order(self, cap: int = CLOSURE_CAP) -> int:
        return len(self.elements(cap))

    def __contains__(self, g: Permutation) -> bool:
        return g.images in set(self.elements())


def ind_of_group(G: PermGroup, cap: int = CLOSURE_CAP) -> int:
    ident = tuple(range(G.degree))
    best = None
    for e in G.elements(cap):
        if e == ident:
            continue
        v = _ind_images(e)
        if best is None or v < best:
            best = v
    if best is None:
        raise TrivialGroup("ind undefined for the trivial group")
    return best


def min_moved_points(G: PermGroup, cap: int = CLOSURE_CAP) -> int:
    ident = tuple(range(G.degree))
    best = None
    for e in G.elements(cap):
        if e == ident:
            continue
        v = sum(1 for i, j in enumerate(e) if i != j)
        if best is None or v < best:
            best = v
    if best is None:
        raise TrivialGroup("minimal degree undefined for the trivial group")
    return best


def is_transitive(G: PermGroup) -> bool:
    gens = [g.images for g in G.generators]
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == G.degree


def _minimal_block_trivial(gens: list[tuple[int, ...]], n: int, a: int) -> bool:
    """True iff the minimal G-congruence identifying 0 and a is the full set.

    Union-find closure: merge {0,a}, then propagate merges through every
    generator until stable (Atkinson's minimal block algorithm).
    """
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    classes = n
    parent[find(a)] = find(0)
    classes -= 1
    queue = [(a, 0)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            rx, ry = find(g[x]), find(g[y])
            if rx != ry:
                parent[rx] = ry
                classes -= 1
                queue.append((rx, ry))
    return classes == 1


def is_primitive(G: PermGroup) -> bool:
    if not is_transitive(G):
        raise NotTransitive("primitivity is defined for transitive groups")
    if G.degree == 1:
        return True
    gens = [g.images for g in G.generators]
    return all(_minimal_block_trivial(gens, G.degree, a) for a in range(1, G.degree))


# ---------------------------------------------------------------------------
# Product actions of S_m wr S_r on r-tuples of k-subsets


@dataclass(frozen=True)
class ProductActionSpec:
    m: int
    k: int
    r: int

    def __post_init__(self):
        if self.m < 3 or self.r < 1 or not 1 <= self.k < self.m / 2:
            raise UsageError("need m >= 3, r >= 1, 1 <= k < m/2")
        if self.n > DEGREE_CAP:
            raise DegreeTooLarge(f"degree {self.n} exceeds cap {DEGREE_CAP}")

    @property
    def n(self) -> int:
        return comb(self.m, self.k) ** self.r


def _ksubsets(m: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of {0..m-1} in lexicographic order (= their rank order)."""
    return list(itertools.combinations(range(m), k))


def product_action_perm(spec: ProductActionSpec, gs, h) -> Permutation:
    """The permutation of C(m,k)^r letters induced by (g_1..g_r; h).

    gs are Permutations of degree m, h a Permutation of degree r; the tuple
    (S_1..S_r) maps to (g_1 S_{h^-1(1)}, ..., g_r S_{h^-1(r)}).  Letters are
    indexed row-major over subset ranks.
    """
    subsets = _ksubsets(spec.m, spec.k)
    rank = {s: i for i, s in enumerate(subsets)}
    nsub = len(subsets)
    hinv = h.inverse().images
    # image of each subset rank under each g_i
    sub_im = []
    for g in gs:
        im = g.images
        sub_im.append([rank[tuple(sorted(im[x] for x in s))] for s in subsets])
    images = []
    for tup in itertools.product(range(nsub), repeat=spec.r):
        out = 0
        for i in range(spec.r):
            out = out * nsub + sub_im[i][tup[hinv[i]]]
        images.append(out)
    return Permutation(tuple(images))


def imprimitive_perm(spec: ProductActionSpec, gs, h) -> Permutation:
    """The same element acting on r blocks of m letters (h permutes blocks)."""
    m, r = spec.m, spec.r
    him = h.images
    images = [0] * (r * m)
    for i in range(r):
        gi = gs[him[i]].images
        for j in range(m):
            images[i * m + j] = him[i] * m + gi[j]
    return Permutation(tuple(images))


def wreath_product_action(spec: ProductActionSpec) -> PermGroup:
    """Generators of S_m wr S_r on r-tuples of k-subsets."""
    m, r = spec.m, spec.r
    ident_m = Permutation.identity(m)
    ident_r = Permutation.identity(r)
    sm_gens = [Permutation.from_cycles(m, [tuple(range(1, m + 1))])]
    if m >= 2:
        sm_gens.append(Permutation.from_cycles(m, [(1, 2)]))
    gens = []
    for g in sm_gens:
        gs = [g] + [ident_m] * (r - 1)
        gens.append(product_action_perm(spec, gs, ident_r))
    if r >= 2:
        top = [Permutation.from_cycles(r, [tuple(range(1, r + 1))])]
        if r > 2:
            top.append(Permutation.from_cycles(r, [(1, 2)]))
        for h in top:
            gens.append(product_action_perm(spec, [ident_m] * r, h))
    name = f"S{m}wrS{r}_product_k{spec.k}"
    order = (factorial(m) ** r) * factorial(r)
    return PermGroup(spec.n, gens, name=name, expected_order=order)


def imprimitive_wreath_action(m: int, r: int) -> PermGroup:
    """S_m wr S_r on r*m letters (r blocks of size m)."""
    gens = []
    ident = list(range(r * m))
    # S_m on the first block
    for cyc in ([tuple(range(1, m + 1))], [(1, 2)]) if m >= 2 else ():
        g = Permutation.from_cycles(m, cyc)
        im = list(ident)
        for j in range(m):
            im[j] = g.images[j]
        gens.append(Permutation(tuple(im)))
    if r >= 2:
        # block rotation and block swap
        tops = [Permutation.from_cycles(r, [tuple(range(1, r + 1))])]
        if r > 2:
            tops.append(Permutation.from_cycles(r, [(1, 2)]))
        for h in tops:
            im = list(ident)
            for i in range(r):
                for j in range(m):
                    im[i * m + j] = h.images[i] * m + j
            gens.append(Permutation(tuple(im)))
    order = (factorial(m) ** r) * factorial(r)
    return PermGroup(r * m, gens, name=f"S{m}wrS{r}_imprimitive", expected_order=order)


def blow_down_index_ratio(spec: ProductActionSpec, gs, h) -> tuple[int, int]:
    """(ind in the product action, ind in the imprimitive action on rm letters)."""
    if all(g.is_identity() for g in gs) and h.is_identity():
        raise IdentityElement("the identity has no index ratio")
    g_big = product_action_perm(spec, gs, h)
    g_small = imprimitive_perm(spec, gs, h)
    return ind_of_element(g_big), ind_of_element(g_small)


def count_moved_ksubsets(sigma: Permutation, k: int) -> int:
    """Number of k-subsets S of {1..m} with sigma(S) != S."""
    m = sigma.degree
    if not 1 <= k <= m / 2:
        # the count is symmetric in k <-> m-k, so the small-k half suffices
        raise UsageError("need 1 <= k <= m/2")
    im = sigma.images
    moved = 0
    for s in itertools.combinations(range(m), k):
        if tuple(sorted(im[x] for x in s)) != s:
            moved += 1
    return moved


# ---------------------------------------------------------------------------
# Catalogue of constructed groups (no external databases)

_PRIMES_SMALL = (3, 5, 7, 11, 13)

# 11-cycle plus an order-4 element; the closure self-check (order 7920,
# transitivity, a 4-transitivity spot check) is the oracle for this data.
_M11_GENS = (
    ((1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11),),
    ((3, 7, 11, 8), (4, 10, 5, 6)),
)


def _cyclic(p: int) -> PermGroup:
    g = Permutation.from_cycles(p, [tuple(range(1, p + 1))])
    return PermGroup(p, [g], name=f"C{p}", expected_order=p)


def _symmetric(n: int) -> PermGroup:
    gens = [Permutation.from_cycles(n, [tuple(range(1, n + 1))])]
    if n >= 2:
        gens.append(Permutation.from_cycles(n, [(1, 2)]))
    return PermGroup(n, gens, name=f"S{n}", expected_order=factorial(n))


def _alternating(n: int) -> PermGroup:
    if n < 3:
        raise UsageError("A_n needs n >= 3")
    gens = [Permutation.from_cycles(n, [(1, 2, 3)])]
    if n > 3:
        if n % 2 == 1:
            gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
        else:
            gens.append(Permutation.from_cycles(n, [tuple(range(2, n + 1))]))
    return PermGroup(n, gens, name=f"A{n}", expected_order=factorial(n) // 2)


def _dihedral(p: int) -> PermGroup:
    rot = Permutation.from_cycles(p, [tuple(range(1, p + 1))])
    refl = Permutation(tuple((p - i) % p for i in range(p)))
    return PermGroup(p, [rot, refl], name=f"D{p}", expected_order=2 * p)


def _agl1(p: int) -> PermGroup:
    """AGL(1,p): x -> x+1 and x -> gx for a primitive root g, on F_p."""
    add = Permutation(tuple((i + 1) % p for i in range(p)))
    g = next(
        g
        for g in range(2, p)
        if all(pow(g, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1))
    )
    mul = Permutation(tuple((i * g) % p for i in range(p)))
    return PermGroup(p, [add, mul], name=f"AGL1_{p}", expected_order=p * (p - 1))


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def m11() -> PermGroup:
    gens = [Permutation.from_cycles(11, cycs) for cycs in _M11_GENS]
    G = PermGroup(11, gens, name="M11", expected_order=7920)
    # hard self-checks on the embedded generator data
    G.elements()
    if not is_transitive(G):
        raise InternalError("M11 self-check failed: not transitive")
    tuples = {(e[0], e[1], e[2], e[3]) for e in G.elements()}
    if len(tuples) != 11 * 10 * 9 * 8:
        raise InternalError("M11 self-check failed: not 4-transitive")
    return G


@lru_cache(maxsize=1)
def catalogue() -> list[PermGroup]:
    """Constructed test families with degree <= 30.

    A_9 is the designated degree >= 9 member with 3-cycles (for the Jordan
    property checks); its closure is the largest one enumerated here.
    """
    groups: list[PermGroup] = []
    groups += [_symmetric(n) for n in range(2, 9)]
    groups += [_alternating(n) for n in range(3, 10)]
    groups += [_cyclic(p) for p in _PRIMES_SMALL]
    groups += [_dihedral(p) for p in (5, 7, 11, 13)]
    groups += [_agl1(p) for p in (5, 7, 11, 13)]
    groups += [
        wreath_product_action(ProductActionSpec(3, 1, 2)),
        wreath_product_action(ProductActionSpec(4, 1, 2)),
        wreath_product_action(ProductActionSpec(5, 1, 2)),
        wreath_product_action(ProductActionSpec(5, 2, 1)),
        imprimitive_wreath_action(3, 2),
        imprimitive_wreath_action(5, 2),
    ]
    groups.append(m11())
    return groups


def catalogue_entry(G: PermGroup) -> dict:
    transitive = is_transitive(G)
    return {
        "name": G.name,
        "degree": G.degree,
        "order": G.order(),
        "transitive": transitive,
        "primitive": is_primitive(G) if transitive else False,
        "ind": ind_of_group(G),
        "min_moved": min_moved_points(G),
    }


def export_catalogue_jsonl(path: str) -> None:
    with open(path, "w") as fh:
        for G in catalogue():
            fh.write(json.dumps(catalogue_entry(G)) + "\n")
