"""Named graphs used throughout the tests, examples and benchmarks.

Each entry fixes a dimension, a canonical fixed base and the known
bound value at that base so callers can refer to well-studied graphs
by name instead of pasting edge lists.  Values stored here are frozen
regression anchors, re-derived by the bound modules in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    d: int
    base: tuple[int, ...]
    bound: int
    notes: str = ""
    # slack variables worth keeping when the quadratic elimination is
    # switched on for exactness runs (vertices with no fixed neighbor)
    keep_s: tuple[int, ...] = field(default=())
    aliases: tuple[str, ...] = field(default=())


def _icosahedron() -> Graph:
    # antiprism of two pentagons 1..5 and 6..10 with poles 11, 12
    ring1 = [(i, i % 5 + 1) for i in range(1, 6)]
    ring2 = [(i + 5, i % 5 + 6) for i in range(1, 6)]
    cross = []
    for i in range(1, 6):
        cross.append((i, i + 5))
        cross.append((i, i % 5 + 6))
    polar = [(11, i) for i in range(1, 6)] + [(12, i) for i in range(6, 11)]
    return Graph(12, tuple(ring1 + ring2 + cross + polar))


def _pentagonal_bipyramid() -> Graph:
    ring = [(i, i % 5 + 1) for i in range(1, 6)]
    apex = [(6, i) for i in range(1, 6)] + [(7, i) for i in range(1, 6)]
    return Graph(7, tuple(ring + apex))


_ENTRIES = (
    CatalogEntry(
        name="prism",
        graph=Graph(6, ((1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6),
                        (1, 4), (2, 5), (3, 6))),
        d=2, base=(1, 2), bound=32,
        notes=("triangular prism; 24 plane embeddings, 32 on the "
               "sphere, so the bound is inexact in the plane and "
               "exact on the sphere"),
        aliases=("desargues", "three-prism")),
    CatalogEntry(
        name="l56",
        graph=Graph(7, ((1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 7),
                        (3, 5), (3, 7), (4, 6), (5, 6), (6, 7))),
        d=2, base=(1, 2), bound=64,
        notes=("7-vertex graph with the maximal plane embedding count "
               "56; attains 64 on the sphere")),
    CatalogEntry(
        name="l136",
        graph=Graph(8, ((1, 2), (1, 4), (1, 8), (2, 3), (2, 5), (2, 7),
                        (3, 4), (3, 5), (4, 6), (4, 8), (5, 6), (6, 7),
                        (7, 8))),
        d=2, base=(1, 2), bound=192,
        notes=("8-vertex graph with the maximal plane embedding count "
               "136; 192 on the sphere")),
    CatalogEntry(
        name="jackson_owen",
        graph=Graph(8, ((1, 2), (2, 3), (3, 4), (1, 4), (5, 6), (6, 7),
                        (7, 8), (5, 8), (1, 5), (2, 6), (3, 7), (4, 8),
                        (1, 7))),
        d=2, base=(1, 2), bound=192,
        notes=("two nested quadrilaterals joined by spokes plus one "
               "diagonal; vertex 8 has no fixed neighbor for the "
               "canonical base, hence keep_s"),
        keep_s=(8,)),
    CatalogEntry(
        name="pentagonal_bipyramid",
        graph=_pentagonal_bipyramid(),
        d=3, base=(1, 2, 6), bound=48,
        notes="7-vertex spatial graph with 48 embeddings; the bound "
              "is 48 at every triangle base",
        aliases=("g48",)),
    CatalogEntry(
        name="icosahedron",
        graph=_icosahedron(),
        d=3, base=(1, 2, 11), bound=54272,
        notes="12 vertices, 30 edges; the bound is invariant over "
              "all 20 triangular faces"),
    CatalogEntry(
        name="max_laman_9",
        graph=Graph(9, ((1, 5), (1, 6), (1, 8), (1, 9), (2, 3), (2, 4),
                        (2, 5), (2, 6), (3, 6), (3, 7), (4, 7), (4, 8),
                        (5, 9), (7, 8), (7, 9))),
        d=2, base=(2, 5), bound=640,
        notes=("unique 9-vertex graph maximizing the minimal bound "
               "over bases (640) in the exhaustive sweep")),
    CatalogEntry(
        name="planar_laman_10",
        graph=Graph(10, ((1, 2), (1, 8), (1, 9), (1, 10), (2, 3), (2, 4),
                         (2, 5), (3, 6), (3, 7), (4, 6), (4, 8), (5, 7),
                         (5, 10), (6, 8), (6, 9), (7, 9), (7, 10))),
        d=2, base=(4, 6), bound=1536,
        notes=("planar 10-vertex witness whose minimal bound over "
               "bases is 1536")),
    CatalogEntry(
        name="planar_laman_11",
        graph=Graph(11, ((1, 5), (1, 8), (1, 10), (1, 11), (2, 4), (2, 5),
                         (2, 9), (2, 11), (3, 6), (3, 7), (3, 8), (3, 9),
                         (4, 6), (4, 10), (5, 7), (5, 11), (6, 8), (6, 10),
                         (7, 9))),
        d=2, base=(1, 5), bound=4096,
        notes=("planar 11-vertex witness whose minimal bound over "
               "bases is 4096")),
    CatalogEntry(
        name="best_found_laman_12",
        graph=Graph(12, ((1, 7), (1, 8), (1, 11), (1, 12), (2, 3), (2, 4),
                         (2, 7), (2, 9), (3, 6), (3, 10), (4, 6), (4, 11),
                         (4, 12), (5, 7), (5, 8), (5, 9), (5, 10), (6, 8),
                         (6, 9), (10, 11), (10, 12))),
        d=2, base=(2, 4), bound=13312,
        notes=("best 12-vertex graph found by beam search over "
               "Henneberg constructions (not exhaustive); minimal "
               "bound over bases 13312 = 13 * 1024")),
    CatalogEntry(
        name="double_banana",
        graph=Graph(8, ((1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
                        (3, 4), (3, 5), (4, 5), (1, 6), (1, 7), (1, 8),
                        (2, 6), (2, 7), (2, 8), (6, 7), (6, 8), (7, 8))),
        d=3, base=(1, 3, 4), bound=64,
        notes=("two bodies sharing only the hinge pair {1,2}: passes "
               "the edge count yet is flexible, so the bound (64 at "
               "this base) does not cap an embedding count")),
)

def _normalize(name: str) -> str:
    return name.strip().lower().replace("-", "_").replace(" ", "_")


NAMED_GRAPHS: dict[str, CatalogEntry] = {}
for _entry in _ENTRIES:
    NAMED_GRAPHS[_normalize(_entry.name)] = _entry
    for _alias in _entry.aliases:
        NAMED_GRAPHS[_normalize(_alias)] = _entry


def lookup(name: str) -> CatalogEntry:
    key = _normalize(name)
    try:
        return NAMED_GRAPHS[key]
    except KeyError:
        known = ", ".join(sorted({e.name for e in _ENTRIES}))
        raise KeyError(f"unknown graph {name!r}; known: {known}") from None


def names() -> tuple[str, ...]:
    return tuple(e.name for e in _ENTRIES)
