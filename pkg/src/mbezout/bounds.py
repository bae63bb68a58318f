"""Classical and asymptotic upper bounds for comparison tables.

Four families: the plain Bezout bound of the edge-equation system, the
Bregman-Minc permanent bound, an independent-set refinement of the
cycle-space bound on indegree-constrained orientations of planar
graphs, and the asymptotic base constants these give for growing d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .graphs import Graph, FixedBase, is_planar, validate_base
from .permanent import MBezoutMatrix


def bezout_bound(n: int, d: int) -> int:
    """Product of the degrees of the n*d - d^2 edge equations, all quadratic."""
    if n < d:
        raise ValueError("need n >= d")
    return 1 << (n * d - d * d)


# ---------------------------------------------------------------------------
# Bregman-Minc


def _iroot_floor(x: int, r: int) -> int:
    """Largest integer y with y^r <= x."""
    if x < 0 or r < 1:
        raise ValueError("bad root arguments")
    if x in (0, 1) or r == 1:
        return x
    y = int(round(x ** (1.0 / r)))
    # float seed may be off by a few either way
    while y > 0 and y ** r > x:
        y -= 1
    while (y + 1) ** r <= x:
        y += 1
    return y


def _iroot_ceil(x: int, r: int) -> int:
    y = _iroot_floor(x, r)
    return y if y ** r == x else y + 1


def _upper_decimal(value: Fraction, sig: int = 6) -> str:
    """Decimal string with sig significant digits, rounded upward.

    The printed number is always >= value, so it remains a valid bound.
    """
    if value == 0:
        return "0"
    if value < 0:
        raise ValueError("bound should not be negative")
    num, den = value.numerator, value.denominator
    # position of the leading digit
    exp = len(str(num)) - len(str(den))
    while Fraction(num, den) < Fraction(10) ** (exp - 1):
        exp -= 1
    while Fraction(num, den) >= Fraction(10) ** exp:
        exp += 1
    # value in [10^(exp-1), 10^exp); scale to sig digits and round up
    shift = sig - exp
    if shift >= 0:
        digits = -(-(num * 10 ** shift) // den)
    else:
        digits = -(-num // (den * 10 ** (-shift)))
    text = str(digits)
    if len(text) > sig:  # rounding bumped 999... to 1000...
        text = text[:sig]
        exp += 1
    point = exp
    if 0 < point <= sig:
        out = text[:point] + ("." + text[point:] if text[point:] else "")
    elif point <= 0:
        out = "0." + "0" * (-point) + text
    else:
        out = text[0] + "." + text[1:] + "e+%d" % (point - 1)
    return out.rstrip(".") if "." in out else out


@dataclass(frozen=True)
class BregmanMincBound:
    """Upper bound on the m-Bezout value via column factorial roots."""

    rational_upper: Fraction
    decimal: str
    symbolic: str

    @property
    def value(self) -> Fraction:
        return self.rational_upper


def bregman_minc_bound(mat, n: Optional[int] = None, d: Optional[int] = None,
                       guard_digits: int = 12) -> BregmanMincBound:
    """Bound (2/d!)^(n-d) * prod_j (r_j!)^(1/r_j) with r_j the column sums.

    Accepts an MBezoutMatrix (n, d inferred) or any 0/1 row matrix, in
    which case the scaling prefactor is 1 and the result bounds the
    permanent itself.  The reported rational and decimal values are
    computed with upward-directed integer root extraction, so they
    never undershoot the true real value.
    """
    if isinstance(mat, MBezoutMatrix):
        rows = mat.rows
        if n is None:
            n = mat.n
        if d is None:
            d = mat.d
        scale = Fraction(2, math.factorial(d)) ** (n - d)
        prefix = "(2/%d!)^%d" % (d, n - d)
    else:
        rows = [tuple(int(x) for x in row) for row in mat]
        scale = Fraction(1)
        prefix = ""
    m = len(rows)
    colsums = [sum(row[j] for row in rows) for j in range(m)]
    if any(r == 0 for r in colsums):
        return BregmanMincBound(Fraction(0), "0", "0 (zero column)")

    counts: dict[int, int] = {}
    for r in colsums:
        counts[r] = counts.get(r, 0) + 1
    terms = ["(%d!)^(%d/%d)" % (r, k, r) for r, k in sorted(counts.items())]
    symbolic = " * ".join(([prefix] if prefix else []) + terms)

    R = math.lcm(*counts.keys())
    inner = 1
    for r, k in counts.items():
        inner *= math.factorial(r) ** (k * R // r)
    # upper-round (scale^R * inner * 10^(R*g))^(1/R) / 10^g
    g = guard_digits
    p, q = scale.numerator, scale.denominator
    numerator = inner * p ** R * 10 ** (R * g)
    scaled = -(-numerator // q ** R)
    root_up = _iroot_ceil(scaled, R)
    rational = Fraction(root_up, 10 ** g)
    return BregmanMincBound(rational, _upper_decimal(rational), symbolic)


def bregman_minc_asymptotic_base(d: int) -> float:
    """Base of the bound O(base^n) from the all-free-edge worst case."""
    return 2.0 * math.sqrt(math.factorial(2 * d)) / math.factorial(d)


def bezout_exceeds_bregman_minc(d: int) -> bool:
    """Exact test of 2^(2d-2) * (d!)^2 > (2d)!.

    When true, the Bezout bound strictly dominates the Bregman-Minc
    route for every minimally rigid graph in dimension d.
    """
    return (1 << (2 * d - 2)) * math.factorial(d) ** 2 > math.factorial(2 * d)


def asymptotic_table(d_list: Iterable[int]) -> list[dict]:
    """Rows of (d, Bezout base 2^d, permanent-route base)."""
    out = []
    for d in d_list:
        out.append({
            "d": d,
            "bezout_base": 1 << d,
            "bregman_minc_base": bregman_minc_asymptotic_base(d),
        })
    return out


# ---------------------------------------------------------------------------
# Orientation bound for planar graphs


def fz_orientation_asymptotic_base() -> float:
    """Per-vertex growth of the planar indegree-3 orientation bound.

    A quarter of the vertices can be assumed independent of degree 6,
    each contributing 2^(1-6) * C(6,3) = 5/8 on top of the 4^n shell.
    """
    return 4.0 * (5.0 / 8.0) ** 0.25


def fz_embedding_asymptotic_base() -> float:
    """Embedding-count growth for planar graphs in 3-space: one factor
    2 per vertex on top of the orientation base."""
    return 2.0 * fz_orientation_asymptotic_base()


@dataclass(frozen=True)
class OrientationBound:
    """Certified upper bound on indegree-constrained orientations."""

    value: Fraction
    cycle_dim: int
    independent_set: tuple[int, ...]
    certified: bool


def _cycle_basis_masks(n: int, edges: Sequence[tuple[int, int]]) -> tuple[list[int], int]:
    """Fundamental cycle basis as edge bitmasks, plus component count.

    Spanning forest by union-find; each non-tree edge closes one cycle
    with the forest path between its endpoints.
    """
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adj_tree: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, n + 1)}
    tree = []
    extra = []
    for idx, (u, v) in enumerate(edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            adj_tree[u].append((v, idx))
            adj_tree[v].append((u, idx))
            tree.append(idx)
        else:
            extra.append(idx)

    def path_mask(u: int, v: int) -> int:
        # BFS in the forest from u to v, collecting edge indices
        prev: dict[int, tuple[int, int]] = {u: (0, -1)}
        queue = [u]
        while queue:
            nxt = []
            for x in queue:
                if x == v:
                    queue = []
                    break
                for y, idx in adj_tree[x]:
                    if y not in prev:
                        prev[y] = (x, idx)
                        nxt.append(y)
            else:
                queue = nxt
                continue
            break
        mask = 0
        x = v
        while x != u:
            px, idx = prev[x]
            mask |= 1 << idx
            x = px
        return mask

    basis = []
    for idx in extra:
        u, v = edges[idx]
        basis.append((1 << idx) | path_mask(u, v))
    components = len({find(v) for v in range(1, n + 1)})
    return basis, components


def _rank_gf2(vectors: list[int]) -> int:
    pivots: list[int] = []
    rank = 0
    for vec in vectors:
        for p in pivots:
            vec = min(vec, vec ^ p)
        if vec:
            pivots.append(vec)
            pivots.sort(reverse=True)
            rank += 1
    return rank


def felsner_zickfeld_bound(g: Graph, d: int, base: Optional[FixedBase] = None,
                           independent_set: Optional[Sequence[int]] = None) -> OrientationBound:
    """Upper bound on orientations with indegree d at free vertices.

    Two orientations with equal indegrees differ on a cycle-space
    element, so their number is at most 2^(m-n+c).  An independent set
    I sharpens this by a factor prod_{u in I} 2^(1-deg u)*C(deg u, a_u)
    with a_u the indegree target, PROVIDED the cycle space projects
    onto the full even-subset space at the vertices of I; that rank
    condition is certified here over GF(2), never assumed.  Without it
    the factor can undershoot the true count, so uncertified sets are
    rejected (explicit I) or skipped (search).

    With a base, the bound applies to the graph minus the base edges
    with indegree targets 0 on base vertices; otherwise to g itself
    with uniform target d.  The search over independent sets includes
    the empty set, so the plain 2^(m-n+c) value is always admissible.
    """
    if not is_planar(g):
        raise ValueError("orientation bound requires a planar graph")
    if base is not None:
        validate_base(g, d, base)
        base_set = set(base)
        edges = [e for e in g.edges if not (e[0] in base_set and e[1] in base_set)]
        target = {v: (0 if v in base_set else d) for v in g.vertices()}
    else:
        edges = list(g.edges)
        target = {v: d for v in g.vertices()}

    deg = {v: 0 for v in g.vertices()}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    incident = {v: 0 for v in g.vertices()}
    adj = {v: set() for v in g.vertices()}
    for idx, (u, v) in enumerate(edges):
        incident[u] |= 1 << idx
        incident[v] |= 1 << idx
        adj[u].add(v)
        adj[v].add(u)

    basis, components = _cycle_basis_masks(g.n, edges)
    dim = len(edges) - g.n + components
    assert dim == len(basis)
    shell = Fraction(2) ** dim

    def factor(u: int) -> Fraction:
        a = target[u]
        if a > deg[u]:
            return Fraction(0)
        return Fraction(math.comb(deg[u], a), 1 << max(deg[u] - 1, 0))

    def certified(iset: Sequence[int]) -> bool:
        need = sum(deg[u] - 1 for u in iset)
        if need > dim:
            return False
        mask = 0
        for u in iset:
            mask |= incident[u]
        return _rank_gf2([b & mask for b in basis]) == need

    if independent_set is not None:
        iset = sorted(set(independent_set))
        for i, u in enumerate(iset):
            for w in iset[i + 1:]:
                if w in adj[u]:
                    raise ValueError("set is not independent: %d-%d" % (u, w))
        if not certified(iset):
            raise ValueError("independent set fails the rank condition")
        value = shell
        for u in iset:
            value *= factor(u)
        return OrientationBound(value, dim, tuple(iset), True)

    # Only vertices whose factor improves the bound are worth adding.
    candidates = [u for u in g.vertices() if factor(u) < 1 and deg[u] >= 1]
    best_value = shell
    best_set: tuple[int, ...] = ()

    if g.n <= 12:
        chosen: list[int] = []

        def explore(pos: int, value: Fraction) -> None:
            nonlocal best_value, best_set
            if value < best_value and certified(chosen):
                best_value = value
                best_set = tuple(chosen)
            for j in range(pos, len(candidates)):
                u = candidates[j]
                if any(w in adj[u] for w in chosen):
                    continue
                chosen.append(u)
                explore(j + 1, value * factor(u))
                chosen.pop()

        explore(0, shell)
    else:
        order = sorted(candidates, key=lambda u: (factor(u), u))
        chosen = []
        value = shell
        for u in order:
            if any(w in adj[u] for w in chosen):
                continue
            if certified(chosen + [u]):
                chosen.append(u)
                value *= factor(u)
        best_value, best_set = value, tuple(sorted(chosen))

    return OrientationBound(best_value, dim, best_set, True)


# ---------------------------------------------------------------------------
# Combined report


@dataclass(frozen=True)
class BoundReport:
    graph_id: str
    n: int
    d: int
    bezout: int
    min_mbezout: int
    min_base: tuple[int, ...]
    bregman_minc: BregmanMincBound
    felsner_zickfeld: Optional[OrientationBound]


def compare_bounds(g: Graph, d: int) -> BoundReport:
    """All bounds for one graph, using the base that minimizes mB."""
    from .orientations import min_mbezout
    from .permanent import build_mbezout_matrix
    from .graphs import canonical_form

    best = min_mbezout(g, d)
    mat = build_mbezout_matrix(g, d, best.base)
    bm = bregman_minc_bound(mat)
    fz = None
    if is_planar(g):
        fz = felsner_zickfeld_bound(g, d, base=best.base)
    return BoundReport(
        graph_id=canonical_form(g).hex(),
        n=g.n,
        d=d,
        bezout=bezout_bound(g.n, d),
        min_mbezout=best.value,
        min_base=best.base,
        bregman_minc=bm,
        felsner_zickfeld=fz,
    )
