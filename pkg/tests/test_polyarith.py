"""Exact integer/F_p polynomial arithmetic: discriminants, factoring, indices."""

import math
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from galcount import polyarith as pa
from galcount.errors import (
    CharacteristicTooSmall,
    DegreeTooSmall,
    NotPrime,
    SubsetSumZero,
    UsageError,
)

x = sympy.Symbol("x")


def to_sympy(full_desc):
    return sympy.Poly(full_desc, x)


small_coeff = st.integers(min_value=-20, max_value=20)


# ---------------------------------------------------------------------------
# resultants and discriminants


def test_resultant_examples():
    assert pa.resultant([1, -2], [1, -5]) == 3
    assert pa.resultant([1, 0, 1], [1, 0, -1]) == 4
    f = [1, 0, -3, -1]
    fp = [3, 0, -3]
    assert abs(pa.resultant(f, fp)) == 81


def test_disc_examples():
    assert pa.disc(pa.MonicIntPoly((3, 2))) == 1
    assert pa.disc(pa.MonicIntPoly((0, -3, -1))) == 81


def test_disc_trinomial_identity():
    # disc(x^n + b x + c) = +-(n^n c^(n-1) - (n-1)^(n-1) (-b)^n); the sign
    # is the (-1)^(n(n-1)/2) convention factor, checked as an exact match
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randrange(2, 9)
        b = rng.randrange(-50, 51)
        c = rng.randrange(-50, 51)
        f = pa.MonicIntPoly((*([0] * (n - 2)), b, c))
        formula = n**n * c ** (n - 1) - (n - 1) ** (n - 1) * (-b) ** n
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        assert pa.disc(f) == sign * formula


@given(
    st.lists(small_coeff, min_size=2, max_size=6),
    st.lists(small_coeff, min_size=2, max_size=6),
)
@settings(max_examples=60, deadline=None)
def test_resultant_matches_sylvester_determinant(fc, gc):
    # oracle: Sylvester matrix built independently, exact sympy determinant.
    # (sympy.resultant itself is PRS-based and drops the sign in some
    # degenerate cases, e.g. Res(x^3+1, x^5).)
    f = [1, *fc]
    g = [1, *gc]
    m, n = len(f) - 1, len(g) - 1
    rows = []
    for i in range(n):
        rows.append([0] * i + f + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + g + [0] * (m - 1 - i))
    det = int(sympy.Matrix(rows).det())
    sign = -1 if (m * n) % 2 else 1
    assert pa.resultant(f, g) == sign * det


@given(st.lists(small_coeff, min_size=1, max_size=7))
@settings(max_examples=80, deadline=None)
def test_bareiss_and_crt_resultant_agree(coeffs):
    f = pa.MonicIntPoly(tuple(coeffs))
    assert pa.disc(f, use_crt=False) == pa.disc(f, use_crt=True)


@given(
    st.lists(small_coeff, min_size=1, max_size=5),
    st.lists(small_coeff, min_size=1, max_size=5),
)
@settings(max_examples=40, deadline=None)
def test_disc_product_formula(fc, gc):
    f = [1, *fc]
    g = [1, *gc]
    prod = [int(c) for c in (to_sympy(f) * to_sympy(g)).all_coeffs()]
    lhs = pa.disc_general(prod)
    rhs = pa.disc_general(f) * pa.disc_general(g) * pa.resultant(f, g) ** 2
    assert lhs == rhs


def test_disc_zero_iff_repeated_root():
    assert pa.disc(pa.MonicIntPoly((-2, 1))) == 0  # (x-1)^2
    assert pa.disc(pa.MonicIntPoly((0, -1))) != 0


# ---------------------------------------------------------------------------
# factor_mod_p


def poly_mod(p, full_desc):
    return pa.PolyModP.of(p, [c % p for c in reversed(full_desc)])


def test_factor_mod_p_examples():
    fac = pa.factor_mod_p(poly_mod(3, [1, 0, 0, 1]))
    assert [(list(g.coeffs), e) for g, e in fac] == [([1, 1], 3)]
    fac = pa.factor_mod_p(poly_mod(5, [1, 0, 1]))
    assert sorted((tuple(g.coeffs), e) for g, e in fac) == [((2, 1), 1), ((3, 1), 1)]
    fac = pa.factor_mod_p(poly_mod(2, [1, 0, 0, 0, 1]))
    assert [(list(g.coeffs), e) for g, e in fac] == [([1, 1], 4)]


def test_factor_mod_p_requires_prime():
    with pytest.raises(NotPrime):
        pa.factor_mod_p(poly_mod(9, [1, 0, 1]))


@given(
    st.integers(min_value=0, max_value=4).map(lambda i: [2, 3, 5, 7, 11][i]),
    st.lists(st.integers(min_value=0, max_value=10), min_size=1, max_size=7),
    st.integers(min_value=0, max_value=2**30),
)
@settings(max_examples=120, deadline=None)
def test_factor_mod_p_matches_sympy(p, tail, seed):
    full = [1, *[c % p for c in tail]]
    fac = pa.factor_mod_p(poly_mod(p, full), seed=seed)
    # product reproduces f
    prod = [1]
    for g, e in fac:
        for _ in range(e):
            prod = pa.pmul(prod, list(g.coeffs), p)
    assert prod == [c % p for c in reversed(full)]
    ours = sorted((tuple(reversed(g.coeffs)), e) for g, e in fac)
    _, ref = sympy.factor_list(sympy.Poly(full, x, modulus=p).set_domain(sympy.GF(p, symmetric=False)))
    theirs = sorted((tuple(int(c) % p for c in g.all_coeffs()), e) for g, e in ref)
    assert ours == theirs


def test_factor_mod_p_deterministic_per_seed():
    f = poly_mod(13, [1, 0, 0, 0, 0, 0, 1])
    assert pa.factor_mod_p(f, seed=5) == pa.factor_mod_p(f, seed=5)


# ---------------------------------------------------------------------------
# splitting types and indices


def test_splitting_type_examples():
    t = pa.splitting_type(pa.MonicIntPoly((0, 0, 1)), 3)
    assert t.parts == ((1, 3),) and t.ind == 2
    t = pa.splitting_type(pa.MonicIntPoly((0, -1, 0)), 5)
    assert t.parts == ((1, 1), (1, 1), (1, 1)) and t.ind == 0
    t = pa.splitting_type(pa.MonicIntPoly((-1, 0, 0)), 7)
    assert sorted(t.parts) == [(1, 1), (1, 2)] and t.ind == 1


def test_splitting_type_identities():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randrange(1, 7)
        p = rng.choice([2, 3, 5, 7, 11])
        f = pa.MonicIntPoly(tuple(rng.randrange(-9, 10) for _ in range(n)))
        t = pa.splitting_type(f, p)
        assert t.deg == n
        assert t.deg == t.ind + t.len
        assert t.aut_count >= 1
        if len({part for part in t.parts}) == len(t.parts):
            expect = 1
            for d, e in t.parts:
                expect *= d
            assert t.aut_count == expect


def test_index_mod_p_examples():
    assert pa.index_mod_p(pa.MonicIntPoly((0, 0, 1)), 3) == 2
    assert pa.index_mod_p(pa.MonicIntPoly((1, -2, 3)), 5) == 0  # squarefree mod 5
    sq = sympy.Poly((x**2 + x + 1) ** 2, x).all_coeffs()
    assert pa.index_mod_p(pa.MonicIntPoly(tuple(int(c) for c in sq[1:])), 5) == 2


def test_splitting_type_parse_roundtrip():
    t = pa.SplittingType.parse("1^2 1")
    assert t.parts == ((1, 1), (1, 2))
    assert pa.SplittingType.parse(str(t)) == t
    with pytest.raises(UsageError):
        pa.SplittingType.parse("0^2")


# ---------------------------------------------------------------------------
# double discriminant and the forced-index test


def test_disc_poly_in_last_matches_direct_disc():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randrange(3, 6)
        prefix = tuple(rng.randrange(-6, 7) for _ in range(n - 1))
        poly = pa.disc_poly_in_last(n, prefix)
        for an in (-3, 0, 2, 11):
            val = sum(c * an ** (len(poly) - 1 - i) for i, c in enumerate(poly))
            assert val == pa.disc(pa.MonicIntPoly((*prefix, an)))


def test_double_disc_examples():
    assert pa.double_disc(pa.DoubleDiscInput(3, (0, -3))) == 11664
    assert pa.double_disc(pa.DoubleDiscInput(3, (0, 0))) == 0
    with pytest.raises(DegreeTooSmall):
        pa.DoubleDiscInput(2, (1,))


def test_mod_p2_forced_test_examples():
    # triple root pattern mod 5: (x-1)^3 = x^3 - 3x^2 + 3x - 1
    assert pa.mod_p2_forced_test(5, 3, (-3, 3, -1))
    assert not pa.mod_p2_forced_test(5, 3, (0, 1, 1))  # squarefree mod 5
    with pytest.raises(NotPrime):
        pa.mod_p2_forced_test(4, 3, (0, 0, 0))


# ---------------------------------------------------------------------------
# Dedekind criterion and field discriminants


def test_dedekind_examples():
    assert not pa.dedekind_p_maximal(pa.MonicIntPoly((0, -5)), 2)
    assert pa.dedekind_p_maximal(pa.MonicIntPoly((0, 1)), 2)
    assert pa.dedekind_p_maximal(pa.MonicIntPoly((1, 1, 1)), 7)  # squarefree mod 7


def test_field_disc_valuation_examples():
    f = pa.MonicIntPoly((0, 1))  # x^2 + 1, disc -4
    assert pa.field_disc_valuation(f, 5) == 0
    assert pa.field_disc_valuation(f, 2) == 2
    assert pa.field_disc_valuation(pa.MonicIntPoly((0, -5)), 2) is None


# ---------------------------------------------------------------------------
# completion counting


def test_count_index_completions_examples():
    assert pa.count_index_completions(5, 3, 2, (0,)) == 1
    assert pa.count_index_completions(7, 3, 2, (1,)) == 1
    with pytest.raises(UsageError):
        pa.count_index_completions(5, 3, 0, (0, 1))
    with pytest.raises(CharacteristicTooSmall):
        pa.count_index_completions(3, 3, 1, (0, 1))


def test_index_table_matches_pointwise():
    p, n = 5, 3
    tab = pa.index_table(p, n)
    assert len(tab) == p**n
    import itertools

    for idx, tup in enumerate(itertools.product(range(p), repeat=n)):
        f = pa.MonicIntPoly(tup)
        assert tab[idx] == pa.index_mod_p(f, p)


def test_partition_bound_examples():
    assert pa.partition_bound(2, 1) == 1
    assert pa.partition_bound(3, 2) == 4
    for r in (1, 2, 3, 4):
        assert pa.partition_bound(0, r) == math.factorial(r)


def test_power_sum_solution_count():
    assert pa.power_sum_solution_count(7, (1,), (3,)) == 1
    assert pa.power_sum_solution_count(7, (1, 1), (0, 0)) <= 2
    with pytest.raises(SubsetSumZero):
        pa.power_sum_solution_count(7, (1, 6), (0, 0))


# ---------------------------------------------------------------------------
# heights and Mahler measure


def test_height_examples():
    assert pa.MonicIntPoly((0, -3, -1)).height() == 3
    assert pa.MonicIntPoly((0, 0, 0, 0)).height() == 0
    assert pa.MonicIntPoly((100, -7)).height() == 100


def test_mahler_examples():
    assert pa.mahler_measure(pa.MonicIntPoly((-3,))) == pytest.approx(3, abs=1e-9)
    assert pa.mahler_measure(pa.MonicIntPoly((0, -2))) == pytest.approx(2, abs=1e-9)
    assert pa.mahler_measure(pa.MonicIntPoly((1, 1))) == pytest.approx(1, abs=1e-9)


@given(st.lists(st.integers(min_value=-30, max_value=30), min_size=1, max_size=6))
@settings(max_examples=60, deadline=None)
def test_mahler_height_bracket(coeffs):
    f = pa.MonicIntPoly(tuple(coeffs))
    if f.height() == 0:
        return
    n = f.degree
    m = pa.mahler_measure(f, tol=1e-7)
    tol = 1e-6
    assert f.height() / math.comb(n, n // 2) <= m + tol
    assert m - tol <= math.sqrt(n + 1) * f.height()


def test_serialization_roundtrip():
    f = pa.MonicIntPoly((10**30, -7, 3))
    arr = f.to_json()
    assert all(isinstance(c, str) for c in arr)
    assert pa.MonicIntPoly.from_json(arr) == f
