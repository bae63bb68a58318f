import math
import random
from fractions import Fraction

from mbezout.bounds import (asymptotic_table, bezout_bound,
                            bezout_exceeds_bregman_minc,
                            bregman_minc_asymptotic_base,
                            bregman_minc_bound, compare_bounds,
                            felsner_zickfeld_bound,
                            fz_embedding_asymptotic_base,
                            fz_orientation_asymptotic_base)
from mbezout.graphs import Graph, enumerate_fixed_bases, henneberg_generate
from mbezout.orientations import mbezout_via_orientations
from mbezout.permanent import build_mbezout_matrix, permanent

PRISM = Graph(6, ((1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6),
                  (1, 4), (2, 5), (3, 6)))


def test_bezout_bound_values():
    # one quadratic per non-base distance constraint
    assert bezout_bound(6, 2) == 2 ** 8
    assert bezout_bound(7, 2) == 2 ** 10
    assert bezout_bound(7, 3) == 2 ** 12
    assert bezout_bound(2, 2) == 1


def test_bezout_dominates_mbezout():
    rng = random.Random(23)
    pool = henneberg_generate(2, 7)
    for g in rng.sample(pool, 10):
        bz = bezout_bound(g.n, 2)
        for base in enumerate_fixed_bases(g, 2):
            assert mbezout_via_orientations(g, 2, base).value <= bz


def test_bregman_minc_prism():
    A = build_mbezout_matrix(PRISM, 2, (1, 2))
    bm = bregman_minc_bound(A)
    assert bm.rational_upper == Fraction(96)
    assert bm.decimal == "96.0000"
    assert "2!" in bm.symbolic and "4!" in bm.symbolic


def test_bregman_minc_dominates_permanent():
    rng = random.Random(24)
    pool = henneberg_generate(2, 7)
    for g in rng.sample(pool, 10):
        for base in enumerate_fixed_bases(g, 2):
            A = build_mbezout_matrix(g, 2, base)
            scaled = Fraction(permanent(A)) * Fraction(2, math.factorial(2)) ** (g.n - 2)
            bm = bregman_minc_bound(A)
            assert scaled <= bm.rational_upper


def test_felsner_zickfeld_prism_is_tight():
    fz = felsner_zickfeld_bound(PRISM, 2, (1, 2))
    assert fz.value == 2
    assert fz.certified
    assert fz.cycle_dim == 3


def test_felsner_zickfeld_dominates_counts():
    rng = random.Random(25)
    pool = henneberg_generate(2, 7)
    for g in rng.sample(pool, 10):
        for base in enumerate_fixed_bases(g, 2):
            fz = felsner_zickfeld_bound(g, 2, base)
            count = mbezout_via_orientations(g, 2, base).count
            assert count <= fz.value
            if fz.certified:
                # independent in the graph with base edges removed
                s = set(fz.independent_set)
                bs = set(base)
                assert not any(u in s and v in s for u, v in g.edges
                               if not (u in bs and v in bs))


def test_asymptotic_bases():
    assert abs(bregman_minc_asymptotic_base(2) - math.sqrt(24)) < 1e-12
    assert abs(fz_orientation_asymptotic_base() - 3.5565588) < 1e-6
    assert abs(fz_embedding_asymptotic_base()
               - 2 * fz_orientation_asymptotic_base()) < 1e-12


def test_asymptotic_table_pinned_rows():
    rows = {r["d"]: r for r in asymptotic_table([5, 10])}
    assert rows[5]["bezout_base"] == 32
    assert round(rows[5]["bregman_minc_base"], 1) == 31.7
    assert rows[10]["bezout_base"] == 1024
    assert round(rows[10]["bregman_minc_base"]) == 860


def test_crossover_of_classical_vs_bregman_minc():
    # 2^(2d-2) (d!)^2 vs (2d)! exact in integers
    for d in (2, 3, 4):
        assert not bezout_exceeds_bregman_minc(d)
    for d in range(5, 65):
        assert bezout_exceeds_bregman_minc(d)
        assert 2 ** (2 * d - 2) * math.factorial(d) ** 2 > math.factorial(2 * d)


def test_compare_bounds_report():
    rep = compare_bounds(PRISM, 2)
    assert rep.bezout == 256
    assert rep.min_mbezout == 32
    assert rep.min_base in enumerate_fixed_bases(PRISM, 2)
    assert rep.bregman_minc.rational_upper >= rep.min_mbezout
