"""Graphs, rigidity counts, and vertex-addition construction moves.

Vertices are labeled 1..n.  Edges are stored as ordered pairs (u, v) with
u < v, sorted lexicographically.  The ambient dimension d is carried
separately; construction moves are implemented for d in {2, 3}.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence, Union


class GraphFormatError(ValueError):
    """Raised for malformed graph input: bad labels, loops, duplicate edges."""


class NoBaseCliqueError(ValueError):
    """Raised when a graph contains no complete subgraph on d vertices.

    In particular a triangle-free graph admits no fixable base for d = 3;
    the bound routines refuse such input rather than silently degrading.
    """


class InvalidBaseError(ValueError):
    """Raised when a claimed fixed base is not a K_d of the graph."""


Edge = tuple[int, int]
FixedBase = tuple[int, ...]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n.

    Edges are normalized to (u, v) with u < v and stored sorted, so two
    structurally equal graphs compare and hash equal.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphFormatError(f"vertex count must be positive, got {self.n}")
        seen = set()
        norm = []
        for e in self.edges:
            if len(e) != 2:
                raise GraphFormatError(f"edge {e!r} is not a pair")
            u, v = e
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphFormatError(f"edge {e!r} leaves label range 1..{self.n}")
            e = _norm_edge(u, v)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {e!r}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degrees(self) -> list[int]:
        """Degree of each vertex; index 0 is unused."""
        deg = [0] * (self.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self, u: int) -> frozenset[int]:
        return frozenset(w for a, b in self.edges for w in ((b,) if a == u else (a,) if b == u else ()))

    def adjacency_masks(self) -> list[int]:
        """Bitmask adjacency; bit (v-1) of entry u-1 set iff u ~ v (0-based list)."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in set(self.edges)

    def min_degree(self) -> int:
        return min(self.degrees()[1:])


# ---------------------------------------------------------------------------
# input / output

def parse_edge_list(text: str) -> tuple[Graph, int]:
    """Parse the plain edge-list format.

    First non-blank line is "n d"; every following non-blank line is one
    edge "u v".  Lines starting with '#' are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"header must be 'n d', got {lines[0]!r}")
    try:
        n, d = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"non-integer header {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphFormatError(f"non-integer edge line {ln!r}") from exc
    if d < 1:
        raise GraphFormatError(f"dimension must be positive, got {d}")
    return Graph(n, tuple(edges)), d


def format_edge_list(g: Graph, d: int) -> str:
    lines = [f"{g.n} {d}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_from_json(obj: dict) -> tuple[Graph, int]:
    try:
        n = int(obj["n"])
        d = int(obj["d"])
        edges = tuple((int(u), int(v)) for u, v in obj["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad JSON graph object: {exc}") from exc
    if d < 1:
        raise GraphFormatError(f"dimension must be positive, got {d}")
    return Graph(n, edges), d


def graph_to_json(g: Graph, d: int) -> dict:
    return {"n": g.n, "d": d, "edges": [[u, v] for u, v in g.edges]}


def load_graph(path: Union[str, Path]) -> tuple[Graph, int]:
    """Load a graph from a file in either supported format.

    JSON is detected by a leading '{'; everything else is parsed as the
    plain edge-list format.
    """
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(json.loads(text))
    return parse_edge_list(text)


def save_graph(path: Union[str, Path], g: Graph, d: int) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(json.dumps(graph_to_json(g, d), indent=2) + "\n")
    else:
        path.write_text(format_edge_list(g, d))


# ---------------------------------------------------------------------------
# rigidity edge counts

@dataclass(frozen=True)
class MaxwellReport:
    """Outcome of the edge-count test.

    failure is None when the check passes, "count" when the global edge
    count is off, "subgraph" when some vertex subset spans too many edges;
    witness then holds one violating subset.
    """

    ok: bool
    failure: Optional[str] = None
    witness: Optional[frozenset[int]] = None


def _required_edges(k: int, d: int) -> int:
    return d * k - d * (d + 1) // 2


def _sparsity_exhaustive(g: Graph, d: int) -> Optional[frozenset[int]]:
    """Check every vertex subset of size >= d; return a violating subset or None."""
    adj = g.adjacency_masks()
    n = g.n
    for size in range(d + 1, n):
        budget = _required_edges(size, d)
        for subset in combinations(range(n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            count = 0
            for v in subset:
                count += (adj[v] & mask).bit_count()
            if count // 2 > budget:
                return frozenset(v + 1 for v in subset)
    return None


def _sparsity_bitmask(g: Graph, d: int) -> Optional[frozenset[int]]:
    """Vectorized variant of the subset sweep, usable up to n ~ 22."""
    import numpy as np

    n = g.n
    masks = np.arange(1 << n, dtype=np.uint32)
    sizes = np.bitwise_count(masks).astype(np.int32)
    inside = np.zeros(1 << n, dtype=np.int32)
    for u, v in g.edges:
        both = ((masks >> np.uint32(u - 1)) & 1) & ((masks >> np.uint32(v - 1)) & 1)
        inside += both.astype(np.int32)
    budget = d * sizes - d * (d + 1) // 2
    bad = (sizes > d) & (sizes < n) & (inside > budget)
    idx = np.flatnonzero(bad)
    if idx.size == 0:
        return None
    first = int(idx[0])
    return frozenset(v + 1 for v in range(n) if (first >> v) & 1)


def _pebble_game_23(g: Graph) -> Optional[frozenset[int]]:
    """(2,3)-pebble game sparsity test; returns a violating region or None.

    Each vertex starts with two pebbles; inserting an edge requires four
    pebbles on its endpoints, collected by reversing oriented paths.  An
    uninsertable edge certifies a subset spanning more than 2k-3 edges.
    """
    n = g.n
    peb = [2] * (n + 1)
    out: list[set[int]] = [set() for _ in range(n + 1)]

    def collect(u: int, v: int) -> bool:
        while peb[u] + peb[v] < 4:
            seen = {u, v}
            parent: dict[int, int] = {}
            stack = [u, v]
            found = 0
            while stack:
                a = stack.pop()
                for b in out[a]:
                    if b in seen:
                        continue
                    seen.add(b)
                    parent[b] = a
                    if peb[b] > 0:
                        found = b
                        stack = []
                        break
                    stack.append(b)
            if not found:
                collect.witness = frozenset(seen)  # type: ignore[attr-defined]
                return False
            peb[found] -= 1
            node = found
            while node in parent:
                prev = parent[node]
                out[prev].remove(node)
                out[node].add(prev)
                node = prev
            peb[node] += 1
        return True

    for u, v in g.edges:
        if not collect(u, v):
            return collect.witness  # type: ignore[attr-defined]
        peb[u] -= 1
        out[u].add(v)
    return None


def maxwell_check(g: Graph, d: int) -> MaxwellReport:
    """Edge-count test for minimal rigidity candidates in dimension d.

    Requires |E| = d n - d(d+1)/2 globally and, for every subset of at
    least d vertices, |E'| <= d|V'| - d(d+1)/2.  Subsets are enumerated
    exhaustively for n <= 10; larger graphs use the (2,3)-pebble game for
    d = 2 and a vectorized subset sweep otherwise.
    """
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    if g.n < d:
        raise ValueError(f"graph needs at least d={d} vertices, has {g.n}")
    expected = _required_edges(g.n, d)
    if g.m != expected:
        return MaxwellReport(ok=False, failure="count", witness=None)
    if g.n <= 10:
        witness = _sparsity_exhaustive(g, d)
    elif d == 2:
        witness = _pebble_game_23(g)
    elif g.n <= 22:
        witness = _sparsity_bitmask(g, d)
    else:
        raise ValueError(f"subgraph sparsity check not implemented for n = {g.n} > 22")
    if witness is not None:
        return MaxwellReport(ok=False, failure="subgraph", witness=witness)
    return MaxwellReport(ok=True)


def is_planar(g: Graph) -> bool:
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges)
    ok, _ = nx.check_planarity(h, counterexample=False)
    return bool(ok)


# ---------------------------------------------------------------------------
# canonical labeling

def canonical_form(g: Graph) -> bytes:
    """Canonical certificate; equal bytes iff the graphs are isomorphic.

    Color refinement on neighbor-color multisets, with backtracking
    individualization on the smallest ambiguous class; the certificate is
    the minimal relabeled adjacency bitstring over all leaves.
    """
    n = g.n
    adj = g.adjacency_masks()

    def refine(colors: list[int]) -> list[int]:
        ncls = len(set(colors))
        while True:
            sigs = []
            for v in range(n):
                cnt: dict[int, int] = {}
                nb = adj[v]
                while nb:
                    b = nb & -nb
                    w = b.bit_length() - 1
                    nb ^= b
                    c = colors[w]
                    cnt[c] = cnt.get(c, 0) + 1
                sigs.append((colors[v], tuple(sorted(cnt.items()))))
            order = sorted(set(sigs))
            rank = {s: i for i, s in enumerate(order)}
            colors = [rank[s] for s in sigs]
            if len(order) == ncls:
                return colors
            ncls = len(order)

    best: Optional[tuple[int, ...]] = None

    def leaf_cert(colors: list[int]) -> tuple[int, ...]:
        perm = sorted(range(n), key=lambda v: colors[v])
        pos = [0] * n
        for i, v in enumerate(perm):
            pos[v] = i
        rows = []
        for i in range(n):
            row = 0
            nb = adj[perm[i]]
            while nb:
                b = nb & -nb
                w = b.bit_length() - 1
                nb ^= b
                row |= 1 << pos[w]
            rows.append(row)
        return tuple(rows)

    def search(colors: list[int]) -> None:
        nonlocal best
        classes: dict[int, list[int]] = {}
        for v in range(n):
            classes.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = classes[c]
                break
        if target is None:
            cert = leaf_cert(colors)
            if best is None or cert < best:
                best = cert
            return
        fresh = n + 1
        for v in target:
            child = list(colors)
            child[v] = fresh
            search(refine(child))

    search(refine([0] * n))
    assert best is not None
    body = b"".join(row.to_bytes((n + 7) // 8, "big") for row in best)
    return bytes([n]) + body


# ---------------------------------------------------------------------------
# fixed bases

def enumerate_fixed_bases(g: Graph, d: int) -> list[FixedBase]:
    """All complete subgraphs on d vertices, as ascending tuples in lex order."""
    edge_set = set(g.edges)
    bases = []
    for combo in combinations(g.vertices(), d):
        if all(_norm_edge(a, b) in edge_set for a, b in combinations(combo, 2)):
            bases.append(tuple(combo))
    return bases


def validate_base(g: Graph, d: int, base: Sequence[int]) -> FixedBase:
    base = tuple(base)
    if len(base) != d or len(set(base)) != d:
        raise InvalidBaseError(f"base {base} must list d={d} distinct vertices")
    for v in base:
        if not 1 <= v <= g.n:
            raise InvalidBaseError(f"base vertex {v} outside 1..{g.n}")
    edge_set = set(g.edges)
    for a, b in combinations(base, 2):
        if _norm_edge(a, b) not in edge_set:
            raise InvalidBaseError(f"base {base} is not complete: missing edge ({a},{b})")
    return base


# ---------------------------------------------------------------------------
# construction moves

def _check_move_dim(d: int) -> None:
    if d not in (2, 3):
        raise ValueError(f"construction moves are implemented for d in {{2, 3}}, got {d}")


def seed_graph(d: int) -> Graph:
    """K_d, the construction seed on d vertices."""
    _check_move_dim(d)
    return Graph(d, tuple(combinations(range(1, d + 1), 2)))


def h1_children(g: Graph, d: int) -> Iterator[Graph]:
    """All graphs from one degree-d vertex addition."""
    w = g.n + 1
    for nbrs in combinations(g.vertices(), d):
        yield Graph(w, g.edges + tuple(_norm_edge(a, w) for a in nbrs))


def h2_children(g: Graph, d: int) -> Iterator[Graph]:
    """All graphs from one edge split: remove (a, b), add a degree-(d+1)
    vertex adjacent to a, b, and d-1 further vertices."""
    w = g.n + 1
    if g.n < d + 1:
        return
    for rm in g.edges:
        a, b = rm
        rest = [v for v in g.vertices() if v not in rm]
        kept = tuple(e for e in g.edges if e != rm)
        for extra in combinations(rest, d - 1):
            new_edges = kept + tuple(_norm_edge(x, w) for x in (a, b) + extra)
            yield Graph(w, new_edges)


def henneberg_children(g: Graph, d: int, moves: Sequence[str] = ("H1", "H2")) -> Iterator[Graph]:
    for mv in moves:
        if mv == "H1":
            yield from h1_children(g, d)
        elif mv == "H2":
            yield from h2_children(g, d)
        else:
            raise ValueError(f"unknown move {mv!r}; expected H1 or H2")


def henneberg_generate(d: int, n: int, moves: Sequence[str] = ("H1", "H2")) -> list[Graph]:
    """All graphs on n vertices reachable from K_d by the given moves.

    Isomorphic duplicates are removed via canonical_form; the result is
    sorted by certificate, so output order is deterministic.
    """
    _check_move_dim(d)
    if n < d:
        raise ValueError(f"need n >= d, got n={n} d={d}")
    level = {canonical_form(seed_graph(d)): seed_graph(d)}
    size = d
    while size < n:
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            for child in henneberg_children(g, d, moves):
                cert = canonical_form(child)
                if cert not in nxt:
                    nxt[cert] = child
        level = nxt
        size += 1
    return [g for _, g in sorted(level.items())]


def last_move_class(g: Graph, d: int) -> str:
    """Classify by minimum degree: a min-degree-d graph can end in a vertex
    addition ("H1"), min degree d+1 forces an edge split ("H2")."""
    md = g.min_degree()
    if md == d:
        return "H1"
    if md == d + 1:
        return "H2"
    return "H3+"


def generation_tally(d: int, n: int) -> dict[str, int]:
    """Counts of generated n-vertex graphs by last-move class and planarity."""
    tally = {"H1 planar": 0, "H1 nonplanar": 0, "H2 planar": 0, "H2 nonplanar": 0}
    for g in henneberg_generate(d, n):
        cls = last_move_class(g, d)
        planar = "planar" if is_planar(g) else "nonplanar"
        key = f"{cls} {planar}"
        tally[key] = tally.get(key, 0) + 1
    return tally
