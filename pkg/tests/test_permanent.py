import math
import random

import pytest

from mbezout.graphs import Graph, enumerate_fixed_bases, henneberg_generate
from mbezout.orientations import mbezout_via_orientations
from mbezout.permanent import (MAX_PERMANENT_SIZE, build_mbezout_matrix,
                               mbezout_via_permanent, permanent,
                               permanent_reference)

L136 = Graph(8, ((1, 2), (1, 4), (1, 8), (2, 3), (2, 5), (2, 7),
                 (3, 4), (3, 5), (4, 6), (4, 8), (5, 6), (6, 7), (7, 8)))


def random_01(rng, size, density=0.5):
    return [[1 if rng.random() < density else 0 for _ in range(size)]
            for _ in range(size)]


def test_known_permanents():
    assert permanent([[1]]) == 1
    assert permanent([[1, 1], [1, 1]]) == 2
    assert permanent([[1, 0], [0, 1]]) == 1
    ones4 = [[1] * 4 for _ in range(4)]
    assert permanent(ones4) == math.factorial(4)
    with_zero_row = [[0, 0, 0], [1, 1, 1], [1, 1, 1]]
    assert permanent(with_zero_row) == 0


def test_permanent_matches_reference_on_random_matrices():
    rng = random.Random(17)
    for size in range(2, 8):
        for _ in range(6):
            mat = random_01(rng, size)
            assert permanent(mat) == permanent_reference(mat)


def test_permanent_row_permutation_invariant():
    rng = random.Random(18)
    mat = random_01(rng, 6)
    shuffled = mat[:]
    rng.shuffle(shuffled)
    assert permanent(mat) == permanent(shuffled)


def test_permanent_rejects_bad_input():
    with pytest.raises(ValueError):
        permanent([[1, 0], [1]])
    with pytest.raises(ValueError):
        permanent([[2, 0], [0, 1]])


def test_size_guard():
    big = [[0] * (MAX_PERMANENT_SIZE + 1)
           for _ in range(MAX_PERMANENT_SIZE + 1)]
    with pytest.raises(ValueError):
        permanent(big)
    assert permanent(big, allow_large=True) == 0


def test_matrix_structure():
    A = build_mbezout_matrix(L136, 2, (1, 2))
    assert A.size == 2 * 6
    assert A.column_edges == tuple(sorted(A.column_edges))
    assert all((1, 2) != e for e in A.column_edges)
    blocks = A.row_blocks
    for u, idxs in blocks.items():
        assert len(idxs) == 2
        r0, r1 = (A.rows[i] for i in idxs)
        assert r0 == r1
        for j, e in enumerate(A.column_edges):
            assert r0[j] == (1 if u in e else 0)


def test_matrix_rejects_nonsquare():
    flexible = Graph(4, ((1, 2), (1, 3), (2, 3), (3, 4)))
    with pytest.raises(ValueError):
        build_mbezout_matrix(flexible, 2, (1, 2))


def test_l136_permanent_value():
    A = build_mbezout_matrix(L136, 2, (1, 2))
    assert permanent(A) == 192
    b = mbezout_via_permanent(L136, 2, (1, 2))
    assert b.value == 192
    assert b.method == "permanent"


def test_permanent_route_agrees_with_orientations():
    rng = random.Random(19)
    pool = henneberg_generate(2, 7)
    for g in rng.sample(pool, 10):
        for base in enumerate_fixed_bases(g, 2):
            assert (mbezout_via_permanent(g, 2, base).value
                    == mbezout_via_orientations(g, 2, base).value)


def test_permanent_route_agrees_spatial():
    pool = henneberg_generate(3, 6)
    for g in pool:
        for base in enumerate_fixed_bases(g, 3):
            assert (mbezout_via_permanent(g, 3, base).value
                    == mbezout_via_orientations(g, 3, base).value)
