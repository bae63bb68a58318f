"""Indegree-constrained orientation counting and the bound built on it.

For a graph G with a fixed base clique K_d, the bound on complex embeddings
factors as 2^(n-d) times the number of orientations of the non-base edges
in which every free vertex has indegree d and every base vertex indegree 0.
Counting those orientations is a small exact search: forced edges are
propagated to a fixed point, then one edge is branched both ways.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import (
    Edge,
    FixedBase,
    Graph,
    NoBaseCliqueError,
    enumerate_fixed_bases,
    validate_base,
)


@dataclass(frozen=True)
class OrientationProblem:
    """Edges to orient plus one indegree target per vertex.

    targets[0] is unused; targets[u] is the required indegree of vertex u.
    A problem whose targets do not sum to the edge count has no valid
    orientation and counts 0.
    """

    n: int
    edges: tuple[Edge, ...]
    targets: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.targets) != self.n + 1:
            raise ValueError(
                f"targets must have length n+1={self.n + 1}, got {len(self.targets)}"
            )


@dataclass(frozen=True)
class BoundValue:
    """A computed embedding bound.

    count is the raw kernel behind the bound: the orientation count for
    method "orient", the matrix permanent for method "permanent".
    """

    value: int
    method: str
    base: FixedBase
    count: int


def orientation_problem(g: Graph, d: int, base: Sequence[int]) -> OrientationProblem:
    """Build the orientation instance for a fixed base clique."""
    base = validate_base(g, d, base)
    base_set = set(base)
    edges = tuple(e for e in g.edges if not (e[0] in base_set and e[1] in base_set))
    targets = [0] * (g.n + 1)
    for v in g.vertices():
        if v not in base_set:
            targets[v] = d
    return OrientationProblem(g.n, edges, tuple(targets))


def count_orientations(problem: OrientationProblem) -> int:
    """Number of orientations meeting every indegree target exactly.

    Forced moves (a vertex whose remaining target is 0 sends all incident
    edges outward; one whose target equals its remaining degree takes them
    all inward) are applied to a fixed point; then the search branches on
    one edge at a vertex with the smallest slack and sums both sides.
    Counts are exact integers; nothing is memoized.
    """
    n = problem.n
    m = len(problem.edges)
    if any(t < 0 for t in problem.targets[1:]):
        return 0
    if sum(problem.targets[1:]) != m:
        return 0

    head = [0] * m
    tail = [0] * m
    incident: list[list[int]] = [[] for _ in range(n + 1)]
    for i, (u, v) in enumerate(problem.edges):
        head[i], tail[i] = u, v
        incident[u].append(i)
        incident[v].append(i)

    need = list(problem.targets)
    deg = [0] * (n + 1)
    for u, v in problem.edges:
        deg[u] += 1
        deg[v] += 1
    alive = [True] * m

    def other(i: int, v: int) -> int:
        return tail[i] if head[i] == v else head[i]

    def orient_into(i: int, v: int, trail: list[tuple[int, int]]) -> bool:
        """Remove edge i, delivering its indegree to v; False on violation."""
        w = other(i, v)
        alive[i] = False
        deg[head[i]] -= 1
        deg[tail[i]] -= 1
        need[v] -= 1
        trail.append((i, v))
        if need[v] < 0 or need[v] > deg[v] or need[w] > deg[w]:
            return False
        return True

    def undo(trail: list[tuple[int, int]]) -> None:
        for i, v in reversed(trail):
            alive[i] = True
            deg[head[i]] += 1
            deg[tail[i]] += 1
            need[v] += 1

    def propagate(trail: list[tuple[int, int]]) -> bool:
        changed = True
        while changed:
            changed = False
            for v in range(1, n + 1):
                if deg[v] == 0:
                    continue
                if need[v] == 0:
                    for i in incident[v]:
                        if alive[i]:
                            if not orient_into(i, other(i, v), trail):
                                return False
                    changed = True
                elif need[v] == deg[v]:
                    for i in incident[v]:
                        if alive[i]:
                            if not orient_into(i, v, trail):
                                return False
                    changed = True
                elif need[v] > deg[v]:
                    return False
        return True

    def solve() -> int:
        trail: list[tuple[int, int]] = []
        if not propagate(trail):
            undo(trail)
            return 0
        branch_v = 0
        best_slack = None
        for v in range(1, n + 1):
            if deg[v] == 0:
                continue
            slack = min(need[v], deg[v] - need[v])
            if best_slack is None or slack < best_slack:
                best_slack = slack
                branch_v = v
        if branch_v == 0:
            complete = all(t == 0 for t in need[1:])
            undo(trail)
            return 1 if complete else 0
        edge = next(i for i in incident[branch_v] if alive[i])
        total = 0
        for target in (branch_v, other(edge, branch_v)):
            sub: list[tuple[int, int]] = []
            if orient_into(edge, target, sub):
                total += solve()
            undo(sub)
        undo(trail)
        return total

    return solve()


def mbezout_via_orientations(g: Graph, d: int, base: Sequence[int]) -> BoundValue:
    """Embedding bound 2^(n-d) times the orientation count for one base."""
    base = validate_base(g, d, base)
    cnt = count_orientations(orientation_problem(g, d, base))
    return BoundValue(value=(1 << (g.n - d)) * cnt, method="orient", base=base, count=cnt)


def min_mbezout(g: Graph, d: int, method: str = "orient") -> BoundValue:
    """Minimum of the bound over all base cliques, with its witness base.

    Ties go to the lexicographically first base.  Raises NoBaseCliqueError
    when the graph has no K_d at all (for d = 3: a triangle-free graph).
    """
    bases = enumerate_fixed_bases(g, d)
    if not bases:
        raise NoBaseCliqueError(
            f"graph has no complete subgraph on {d} vertices; no base can be fixed"
        )
    if method == "orient":
        compute = mbezout_via_orientations
    elif method == "permanent":
        from .permanent import mbezout_via_permanent

        compute = mbezout_via_permanent
    else:
        raise ValueError(f"unknown method {method!r}")
    best: Optional[BoundValue] = None
    for base in bases:
        bv = compute(g, d, base)
        if best is None or bv.value < best.value:
            best = bv
    assert best is not None
    return best
