import random

from mbezout.graphs import Graph, enumerate_fixed_bases, h1_children, henneberg_generate
from mbezout.orientations import (count_orientations, mbezout_via_orientations,
                                  min_mbezout, orientation_problem)

PRISM = Graph(6, ((1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6),
                  (1, 4), (2, 5), (3, 6)))


def brute_count(problem):
    """Walk every 0/1 head assignment and check indegrees directly."""
    m = len(problem.edges)
    assert m <= 22
    total = 0
    for mask in range(1 << m):
        indeg = [0] * (problem.n + 1)
        for i, (u, v) in enumerate(problem.edges):
            indeg[v if (mask >> i) & 1 else u] += 1
        if all(indeg[v] == problem.targets[v]
               for v in range(1, problem.n + 1)):
            total += 1
    return total


def test_problem_drops_base_edges_and_sets_targets():
    p = orientation_problem(PRISM, 2, (1, 2))
    assert (1, 2) not in p.edges
    assert len(p.edges) == 8
    assert p.targets[1] == p.targets[2] == 0
    assert all(p.targets[v] == 2 for v in range(3, 7))


def test_prism_has_two_valid_orientations():
    p = orientation_problem(PRISM, 2, (1, 2))
    assert count_orientations(p) == 2
    assert brute_count(p) == 2


def test_prism_bound_is_32_for_every_base():
    for base in enumerate_fixed_bases(PRISM, 2):
        b = mbezout_via_orientations(PRISM, 2, base)
        assert b.value == 32
        assert b.count == 2
        assert b.value == 2 ** (6 - 2) * b.count


def test_min_mbezout_picks_smallest():
    b = min_mbezout(PRISM, 2)
    assert b.value == 32


def test_triangle_in_plane_is_unit():
    tri = Graph(3, ((1, 2), (1, 3), (2, 3)))
    b = mbezout_via_orientations(tri, 2, (1, 2))
    assert b.count == 1 and b.value == 2


def test_counts_match_brute_force_on_random_laman_graphs():
    rng = random.Random(41)
    pool = henneberg_generate(2, 7)
    for g in rng.sample(pool, 12):
        for base in enumerate_fixed_bases(g, 2):
            p = orientation_problem(g, 2, base)
            assert count_orientations(p) == brute_count(p)


def test_counts_match_brute_force_spatial():
    rng = random.Random(42)
    pool = henneberg_generate(3, 6)
    for g in pool:
        for base in enumerate_fixed_bases(g, 3):
            p = orientation_problem(g, 3, base)
            assert count_orientations(p) == brute_count(p)


def test_vertex_addition_doubles_the_bound():
    # attaching a degree-d vertex doubles the bound at any old base
    rng = random.Random(43)
    pool = henneberg_generate(2, 6)
    for g in rng.sample(pool, 6):
        base = enumerate_fixed_bases(g, 2)[0]
        before = mbezout_via_orientations(g, 2, base).value
        child = next(iter(h1_children(g, 2)))
        after = mbezout_via_orientations(child, 2, base).value
        assert after == 2 * before


def test_l136_count_is_three():
    l136 = Graph(8, ((1, 2), (1, 4), (1, 8), (2, 3), (2, 5), (2, 7),
                     (3, 4), (3, 5), (4, 6), (4, 8), (5, 6), (6, 7), (7, 8)))
    b = mbezout_via_orientations(l136, 2, (1, 2))
    assert b.count == 3
    assert b.value == 192
