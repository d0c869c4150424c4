"""Integer factorization and exact Galois groups for degrees 2 through 5."""

import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from galcount import galois as ga
from galcount.errors import DegreeOutOfRange, Reducible, UsageError
from galcount.polyarith import MonicIntPoly, disc

x = sympy.Symbol("x")

small_coeff = st.integers(min_value=-15, max_value=15)


def poly(*coeffs):
    return MonicIntPoly(tuple(coeffs))


# ---------------------------------------------------------------------------
# factorization over Z


def test_factor_examples():
    # x^4 - 1 = (x-1)(x+1)(x^2+1)
    fac = ga.factor_over_Z(poly(0, 0, 0, -1))
    degs = sorted(g.degree for g, e in fac for _ in range(e))
    assert degs == [1, 1, 2]
    # x^4 + 4 = (x^2-2x+2)(x^2+2x+2), irreducible-looking but not
    fac = ga.factor_over_Z(poly(0, 0, 0, 4))
    assert sorted(tuple(g.coeffs) for g, e in fac) == [(-2, 2), (2, 2)]
    assert ga.is_irreducible(poly(0, 0, 0, 0, -1, -1))  # x^5 - x - 1


def test_factor_repeated():
    # (x-2)^2 (x+1)
    f = poly(-3, 0, 4)
    fac = dict((tuple(g.coeffs), e) for g, e in ga.factor_over_Z(f))
    assert fac == {(-2,): 2, (1,): 1}


@given(st.lists(small_coeff, min_size=1, max_size=7))
@settings(max_examples=100, deadline=None)
def test_factor_roundtrip_and_irreducibility(coeffs):
    f = MonicIntPoly(tuple(coeffs))
    fac = ga.factor_over_Z(f)
    prod = sympy.Integer(1)
    for g, e in fac:
        assert sympy.Poly([1, *g.coeffs], x).is_irreducible
        prod *= sympy.Poly([1, *g.coeffs], x).as_expr() ** e
    assert sympy.Poly(prod, x).all_coeffs() == [1, *f.coeffs]


# ---------------------------------------------------------------------------
# exact groups, known values


def galois_name_sympy(full):
    grp, _ = sympy.polys.numberfields.galoisgroups.galois_group(sympy.Poly(full, x))
    order = grp.order()
    n = len(full) - 1
    if n == 2:
        return "C2"
    if n == 3:
        return {3: "C3", 6: "S3"}[order]
    if n == 4:
        if order == 4:
            return "C4" if grp.is_cyclic else "V4"
        return {8: "D4", 12: "A4", 24: "S4"}[order]
    if n == 5:
        return {5: "C5", 10: "D5", 20: "F20", 60: "A5", 120: "S5"}[order]
    raise ValueError(n)


def test_quartic_known_groups():
    cases = {
        (0, 0, 0, 1): "V4",  # x^4 + 1
        (1, 1, 1, 1): "C4",  # 5th cyclotomic
        (0, 0, 0, -2): "D4",  # x^4 - 2
        (0, 0, 8, 12): "A4",
        (0, 0, -1, -1): "S4",  # x^4 - x - 1
    }
    for coeffs, name in cases.items():
        assert ga._exact_group_name(poly(*coeffs)) == name
        assert galois_name_sympy([1, *coeffs]) == name


def test_quintic_known_groups():
    # one representative of each transitive quintic group, oracle-confirmed
    cases = {
        (1, -4, -3, 3, 1): "C5",
        (0, 0, 0, -5, 12): "D5",  # x^5 - 5x + 12
        (0, 0, 0, 0, -2): "F20",  # x^5 - 2
        (0, 0, 0, 20, 16): "A5",  # x^5 + 20x + 16
        (0, 0, 0, -1, -1): "S5",  # x^5 - x - 1
    }
    for coeffs, name in cases.items():
        assert ga._exact_group_name(poly(*coeffs)) == name
        assert galois_name_sympy([1, *coeffs]) == name


@given(st.lists(st.integers(min_value=-8, max_value=8), min_size=2, max_size=4))
@settings(max_examples=60, deadline=None)
def test_exact_group_matches_sympy_low_degree(coeffs):
    f = MonicIntPoly(tuple(coeffs))
    if disc(f) == 0:
        return
    name = ga._exact_group_name(f)
    full = [1, *coeffs]
    if not sympy.Poly(full, x).is_irreducible:
        assert name is None
        return
    assert name == galois_name_sympy(full)


def test_exact_group_matches_sympy_quintics():
    rng = random.Random(11)
    checked = 0
    while checked < 25:
        coeffs = tuple(rng.randrange(-6, 7) for _ in range(5))
        f = MonicIntPoly(coeffs)
        if disc(f) == 0:
            continue
        checked += 1
        name = ga._exact_group_name(f)
        full = [1, *coeffs]
        if not sympy.Poly(full, x).is_irreducible:
            assert name is None
        else:
            assert name == galois_name_sympy(full)


def test_classify_verdicts():
    v = ga.classify(poly(0, -1, 0, 0))  # x^4 - x^2 = x^2(x-1)(x+1), disc 0
    assert v.status == "reducible" and sorted(v.factor_degrees) == [1, 1, 1, 1]
    v = ga.classify(poly(0, 0, 0, -1, -1))
    assert v.status == "exactGroup" and v.group == "S5"
    assert v.order == 120 and v.transitivity_class == "5T5"
    with pytest.raises(DegreeOutOfRange):
        ga.classify(poly(0, 0, 0, 0, 0, -1))


def test_galois_group_exact_rejects_reducible():
    with pytest.raises(Reducible):
        ga.galois_group_exact(poly(0, -1))  # x^2 - 1


# ---------------------------------------------------------------------------
# the S_n certificate for degrees beyond 5


def test_sn_certificate_quintic():
    v = ga.sn_certificate(poly(0, 0, 0, -1, -1), prime_budget=50)
    assert v.status == "certifiedSn"
    assert v.evidence  # carries the witnessing (p, splitting degrees) pairs


def test_sn_certificate_square_disc():
    f = poly(0, -3, -1)  # cubic with disc 81
    assert ga.sn_certificate(f).status == "certifiedSubsetAn"


def test_sn_certificate_never_certifies_small_group():
    # x^5 - 2 has group F20; no amount of sampling may produce an S5 certificate
    v = ga.sn_certificate(poly(0, 0, 0, 0, -2), prime_budget=60)
    assert v.status == "unresolved"


def test_sn_certificate_degree_7():
    v = ga.sn_certificate(poly(0, 0, 0, 0, 0, -1, -1), prime_budget=80)
    assert v.status in ("certifiedSn", "unresolved")
    # x^7 - x - 1 is a standard S7 polynomial; the witnesses should be found
    assert v.status == "certifiedSn"


def test_sn_certificate_rejects_zero_disc():
    with pytest.raises(UsageError):
        ga.sn_certificate(poly(-2, 1))


def test_certificate_cycle_types_realized_by_exact_group():
    # sampled Frobenius splitting degrees must be cycle types of the true group
    from galcount import permgroup as pg

    rng = random.Random(23)
    checked = 0
    while checked < 10:
        coeffs = tuple(rng.randrange(-5, 6) for _ in range(4))
        f = MonicIntPoly(coeffs)
        if disc(f) == 0 or ga._exact_group_name(f) is None:
            continue
        checked += 1
        name = ga._exact_group_name(f)
        G = ga.transitive_group(name)
        types = {
            tuple(sorted(pg.cycle_type(pg.Permutation(e)), reverse=True))
            for e in G.elements()
        }
        v = ga.sn_certificate(f, prime_budget=15)
        for _, degs in v.evidence:
            assert tuple(sorted(degs, reverse=True)) in types


# ---------------------------------------------------------------------------
# catalogue consistency


def test_transitive_group_orders_match_table():
    for name, (order, label) in ga.GROUPS.items():
        G = ga.transitive_group(name)
        assert G.order() == order, name
        deg = int(label.split("T")[0])
        assert G.degree == deg
