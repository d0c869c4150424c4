"""Finite-field Fourier tables for the splitting-type weights, box counts."""

import numpy as np
import pytest

from galcount import fourier as fr
from galcount.errors import TooLarge
from galcount.polyarith import SplittingType

S = SplittingType.parse


# ---------------------------------------------------------------------------
# irreducible enumeration


def test_enumerate_irreducibles_small():
    # ascending coefficient tuples: x and x+1 over F_2
    assert set(fr.enumerate_irreducibles(2, 1)) == {(0, 1), (1, 1)}
    assert fr.enumerate_irreducibles(2, 2) == ((1, 1, 1),)


def test_irreducible_counts_match_necklace_formula():
    for p in (2, 3, 5, 7):
        for d in (1, 2, 3):
            listed = len(fr.enumerate_irreducibles(p, d))
            assert listed == fr.irreducible_count_necklace(p, d)


def test_enumerate_irreducibles_too_large():
    with pytest.raises(TooLarge):
        fr.enumerate_irreducibles(101, 4)


# ---------------------------------------------------------------------------
# weights


def test_weight_examples():
    space = fr.WeightSpace("monic", 5, 3)
    # f = x^3: only P = x has P^2 | f
    assert fr.weight(space, (0, 0, 0), S("1^2")) == 1
    # f = x(x-1)(x-2): unordered pairs of distinct linear divisors
    assert fr.weight(space, (2, 2, 0), S("1 1")) == 3
    # squarefree f has no square divisor
    assert fr.weight(space, (0, 4, 0), S("1^2")) == 0  # x^3 - x mod 5


def test_weight_zero_beyond_degree():
    space = fr.WeightSpace("monic", 3, 2)
    sigma = S("1^2 1")  # degree 3 > n = 2
    arr = fr._weight_array(space, sigma)
    assert not arr.any()


# ---------------------------------------------------------------------------
# Fourier tables


def test_main_term_oracles():
    for p in (3, 5, 7):
        space = fr.WeightSpace("monic", p, 3)
        assert fr.fourier_table(space, S("1")).values.reshape(-1)[0] == pytest.approx(1.0, abs=1e-9)
    space = fr.WeightSpace("monic", 5, 3)
    assert fr.fourier_table(space, S("1^2")).values.reshape(-1)[0] == pytest.approx(0.2, abs=1e-9)
    assert fr.fourier_table(space, S("1^3")).values.reshape(-1)[0] == pytest.approx(0.04, abs=1e-9)


def test_parseval_all_small_tables():
    for kind in ("monic", "binary"):
        for p in (3, 5):
            for sig in ("1", "1^2", "2", "1 1", "1^3"):
                space = fr.WeightSpace(kind, p, 3)
                table = fr.fourier_table(space, S(sig))
                assert fr.parseval_gap(table) <= 1e-9


def test_axis_dft_matches_direct_double_sum():
    for kind in ("monic", "binary"):
        for p in (3, 5):
            space = fr.WeightSpace(kind, p, 3)
            w = fr._weight_array(space, S("1^2"))
            fast = fr.fourier_table(space, S("1^2")).values
            slow = fr.direct_transform(space, w)
            assert np.max(np.abs(fast - slow)) < 1e-9


def test_verify_decay_report_shape():
    space = fr.WeightSpace("monic", 7, 3)
    rep = fr.verify_decay(fr.fourier_table(space, S("1")))
    assert rep["p"] == 7 and rep["k"] == 0 and rep["d"] == 1
    assert rep["regime"] == "p^(k+1)"
    assert rep["mainTermError"] >= 0 and rep["maxNonzeroScaled"] >= 0


def test_verify_decay_weil_regime():
    # full-degree monic sigma: scaled by p^(k+1/2), Weil-size maxima
    for p in (3, 5, 7):
        space = fr.WeightSpace("monic", p, 3)
        rep = fr.verify_decay(fr.fourier_table(space, S("1^3")))
        assert rep["regime"] == "p^(k+1/2)"
        assert rep["maxNonzeroScaled"] <= 3 - 1 + 0.5


# ---------------------------------------------------------------------------
# box counts


def test_box_count_index_k0():
    assert fr.box_count_index(5, 3, 0, 4) == 9**3


def test_box_count_precount_matches_scan():
    for p, n, k, H in [(5, 3, 2, 2), (3, 3, 1, 3), (7, 2, 1, 4)]:
        assert fr.box_count_index(p, n, k, H) == fr.box_count_index_scan(p, n, k, H)


def test_box_count_balanced_box():
    # H = (p-1)/2 makes the box exactly one full residue system per axis
    p, n, k = 5, 3, 2
    H = (p - 1) // 2
    tuples = fr.box_count_index(p, n, k, H)
    mask = fr._index_mask(p, n, k)
    assert tuples == int(mask.sum())


def test_multi_prime_consistency():
    assert fr.multi_prime_box_count([(5, 2)], 3, 4) == fr.box_count_index(5, 3, 2, 4)
    assert fr.multi_prime_box_count([(3, 0), (5, 0)], 3, 4) == 9**3


def test_multi_prime_crt_brute_force():
    from galcount.polyarith import MonicIntPoly, index_mod_p
    import itertools

    conds = [(3, 1), (5, 1)]
    n, H = 3, 3
    brute = 0
    for tup in itertools.product(range(-H, H + 1), repeat=n):
        f = MonicIntPoly(tup)
        if all(index_mod_p(f, p) >= k for p, k in conds):
            brute += 1
    assert fr.multi_prime_box_count(conds, n, H) == brute
