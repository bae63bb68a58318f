import json
import random

import pytest

from mbezout.graphs import (Graph, GraphFormatError, InvalidBaseError,
                            NoBaseCliqueError, canonical_form,
                            enumerate_fixed_bases, format_edge_list,
                            generation_tally, graph_from_json,
                            graph_to_json, h1_children, h2_children,
                            henneberg_generate, is_planar,
                            last_move_class, maxwell_check,
                            parse_edge_list, seed_graph, validate_base)

PRISM = Graph(6, ((1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6),
                  (1, 4), (2, 5), (3, 6)))


def test_graph_normalizes_edges():
    g = Graph(4, ((2, 1), (3, 1), (4, 3), (2, 4), (1, 4)))
    assert (1, 2) in g.edges
    assert (3, 4) in g.edges
    assert len(g.edges) == 5


def test_degrees_and_neighbors():
    degs = PRISM.degrees()
    assert degs[1:] == [3, 3, 3, 3, 3, 3]
    assert PRISM.neighbors(1) == frozenset({2, 3, 4})


def test_parse_format_roundtrip():
    text = format_edge_list(PRISM, 2)
    g2, d2 = parse_edge_list(text)
    assert g2 == PRISM and d2 == 2


def test_parse_rejects_garbage():
    with pytest.raises(GraphFormatError):
        parse_edge_list("6 2\n1 2 3\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("")


def test_json_roundtrip_preserves_canonical_form():
    obj = graph_to_json(PRISM, 2)
    blob = json.dumps(obj)
    g2, d2 = graph_from_json(json.loads(blob))
    assert d2 == 2
    assert canonical_form(g2) == canonical_form(PRISM)


def test_maxwell_prism_ok():
    assert maxwell_check(PRISM, 2).ok


def test_maxwell_global_count_failure():
    k4 = Graph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)))
    rep = maxwell_check(k4, 2)
    assert not rep.ok


def test_maxwell_subset_violation_found():
    # global count right, but a K4 subset is overbraced
    g = Graph(6, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
                  (5, 6), (1, 5), (2, 6)))
    rep = maxwell_check(g, 2)
    assert not rep.ok
    assert rep.witness is not None
    assert {1, 2, 3, 4} <= set(rep.witness)


def test_maxwell_double_banana_passes_count_only():
    # the classic reminder that the count is necessary, not sufficient
    banana = Graph(8, ((1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
                       (3, 4), (3, 5), (4, 5), (1, 6), (1, 7), (1, 8),
                       (2, 6), (2, 7), (2, 8), (6, 7), (6, 8), (7, 8)))
    assert maxwell_check(banana, 3).ok


def test_planarity_small_cases():
    assert is_planar(PRISM)
    k5 = Graph(5, tuple((i, j) for i in range(1, 6)
                        for j in range(i + 1, 6)))
    assert not is_planar(k5)
    k33 = Graph(6, tuple((i, j) for i in (1, 2, 3) for j in (4, 5, 6)))
    assert not is_planar(k33)


def test_canonical_form_isomorphism_invariance():
    rng = random.Random(7)
    perm = list(range(1, 7))
    rng.shuffle(perm)
    relabeled = Graph(6, tuple((perm[u - 1], perm[v - 1])
                               for u, v in PRISM.edges))
    assert canonical_form(relabeled) == canonical_form(PRISM)
    other = Graph(6, ((1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3),
                      (3, 4), (4, 5), (5, 6)))
    assert canonical_form(other) != canonical_form(PRISM)


def test_enumerate_bases_prism_every_edge():
    bases = enumerate_fixed_bases(PRISM, 2)
    assert sorted(bases) == sorted(PRISM.edges)


def test_enumerate_bases_triangles():
    bip = Graph(5, ((1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (3, 4),
                    (1, 5), (2, 5), (3, 5)))  # K5 minus (4,5)
    bases = enumerate_fixed_bases(bip, 3)
    assert (1, 2, 3) in bases
    assert all(len(b) == 3 for b in bases)


def test_validate_base_errors():
    with pytest.raises(InvalidBaseError):
        validate_base(PRISM, 2, (1, 5))  # not an edge
    with pytest.raises(InvalidBaseError):
        validate_base(PRISM, 2, (1, 1))
    assert validate_base(PRISM, 2, (2, 1)) == (2, 1)


def test_seed_graphs():
    assert seed_graph(2).edges == ((1, 2),)
    assert seed_graph(3).edges == ((1, 2), (1, 3), (2, 3))


def test_h1_child_shape():
    for child in h1_children(seed_graph(2), 2):
        assert child.n == 3
        assert len(child.edges) == 3
        assert child.degrees()[3] == 2


def test_h2_needs_an_edge_to_split():
    children = list(h2_children(seed_graph(2), 2))
    assert all(c.n == 3 and len(c.edges) == 3 + 1 - 1 for c in children)


def test_generation_counts_match_known_table():
    # up-to-isomorphism counts in the plane
    assert len(henneberg_generate(2, 4)) == 1
    assert len(henneberg_generate(2, 5)) == 3
    assert len(henneberg_generate(2, 6)) == 13
    assert len(henneberg_generate(2, 7)) == 70


def test_generation_counts_spatial():
    assert len(henneberg_generate(3, 5)) == 1
    assert len(henneberg_generate(3, 6)) == 4


def test_tally_sums_to_total():
    tally = generation_tally(2, 6)
    assert sum(tally.values()) == 13
    assert tally["H1 planar"] + tally["H1 nonplanar"] == 11


def test_last_move_class():
    assert last_move_class(PRISM, 2) == "H2"
    fan = Graph(4, ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4)))
    assert last_move_class(fan, 2) == "H1"


def test_generated_graphs_satisfy_maxwell():
    rng = random.Random(3)
    pool = henneberg_generate(2, 6)
    for g in rng.sample(pool, 5):
        assert maxwell_check(g, 2).ok
