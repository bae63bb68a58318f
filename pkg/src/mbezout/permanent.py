"""m-Bezout matrices and exact permanents via Ryser's formula.

The matrix route to the bound: for a graph with a fixed complete subgraph
on d vertices, build the 0/1 incidence-style matrix whose rows come in
blocks of d identical rows per free vertex and whose columns are the
non-fixed edges.  The permanent of that matrix, scaled by (2/d!)^(n-d),
equals the bound computed by orientation counting, which gives a fully
independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphs import Edge, FixedBase, Graph, InvalidBaseError, validate_base
from .orientations import BoundValue

# Hard cap on matrix size for permanent computation.  Ryser's sum has
# 2^m terms in the worst case; identical-row grouping usually collapses
# it far below that, but the cap keeps accidental huge inputs from
# running away.  Pass allow_large=True to override.
MAX_PERMANENT_SIZE = 30


@dataclass(frozen=True)
class MBezoutMatrix:
    """Square 0/1 matrix whose permanent yields the embedding bound.

    Rows are grouped in blocks of d identical rows, one block per free
    vertex in ascending vertex order.  Columns are the non-fixed edges
    in lexicographic order.  Entry (r, c) is 1 exactly when the vertex
    owning row r is an endpoint of the edge owning column c.
    """

    n: int
    d: int
    base: FixedBase
    column_edges: tuple[Edge, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def free_vertices(self) -> tuple[int, ...]:
        base = set(self.base)
        return tuple(v for v in range(1, self.n + 1) if v not in base)

    @property
    def row_blocks(self) -> dict[int, tuple[int, ...]]:
        """Map each free vertex to the indices of its d identical rows."""
        blocks = {}
        for i, u in enumerate(self.free_vertices):
            blocks[u] = tuple(range(i * self.d, (i + 1) * self.d))
        return blocks

    def column_sums(self) -> tuple[int, ...]:
        if not self.rows:
            return ()
        return tuple(sum(row[j] for row in self.rows) for j in range(len(self.rows[0])))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def build_mbezout_matrix(g: Graph, d: int, base: FixedBase) -> MBezoutMatrix:
    """Assemble the matrix for graph g with the given fixed base.

    Raises InvalidBaseError for a bad base and ValueError when the edge
    count off the base does not equal d*(n-d), i.e. the matrix would not
    be square.
    """
    validate_base(g, d, base)
    base_set = set(base)
    free = [v for v in g.vertices() if v not in base_set]
    cols = tuple(e for e in g.edges if not (e[0] in base_set and e[1] in base_set))
    m = d * len(free)
    if len(cols) != m:
        raise ValueError(
            "non-square matrix: %d non-fixed edges but %d rows required"
            % (len(cols), m)
        )
    rows = []
    for u in free:
        row = tuple(1 if u in e else 0 for e in cols)
        for _ in range(d):
            rows.append(row)
    return MBezoutMatrix(n=g.n, d=d, base=tuple(base), column_edges=cols, rows=tuple(rows))


def _as_rows(mat) -> tuple[tuple[int, ...], ...]:
    if isinstance(mat, MBezoutMatrix):
        return mat.rows
    rows = tuple(tuple(int(x) for x in row) for row in mat)
    for row in rows:
        if len(row) != len(rows):
            raise ValueError("permanent requires a square matrix")
        if any(x not in (0, 1) for x in row):
            raise ValueError("matrix entries must be 0 or 1")
    return rows


def permanent(mat, allow_large: bool = False) -> int:
    """Exact permanent of a square 0/1 matrix by Ryser's formula.

    Ryser's formula sums (-1)^|S| prod_j (sum of rows S in column j)
    over row subsets S, with an overall (-1)^m.  Subsets are walked in
    Gray-code order so each step adjusts the running column-sum vector
    along a single row.  Identical rows are grouped first: a block of c
    equal rows contributes through its multiplicity 0..c only, weighted
    by binomial(c, k), which shrinks the 2^m subsets to a product of
    (c_i + 1) profiles.  For an m-Bezout matrix that is (d+1)^(n-d).
    """
    rows = _as_rows(mat)
    m = len(rows)
    if m == 0:
        return 1
    if m > MAX_PERMANENT_SIZE and not allow_large:
        raise ValueError(
            "matrix size %d exceeds the cap %d; pass allow_large=True"
            % (m, MAX_PERMANENT_SIZE)
        )

    # Group identical rows, preserving first-seen order.
    mult: dict[tuple[int, ...], int] = {}
    for row in rows:
        mult[row] = mult.get(row, 0) + 1
    groups = list(mult.items())
    t = len(groups)
    radix = [c + 1 for _, c in groups]
    support = [tuple(j for j, x in enumerate(row) if x) for row, _ in groups]
    binom = [[math.comb(c, k) for k in range(c + 1)] for _, c in groups]

    # Loopless reflected mixed-radix Gray enumeration (one digit moves
    # by one each step).  digit[i] is the multiplicity taken from group
    # i; colsum tracks the weighted column sums; zcount counts columns
    # whose sum is zero, letting us skip the product for dead subsets.
    digit = [0] * t
    focus = list(range(t + 1))
    direction = [1] * t
    colsum = [0] * m
    zcount = m
    coef = 1
    parity = 0
    total = 0
    while True:
        i = focus[0]
        focus[0] = 0
        if i == t:
            break
        old = digit[i]
        new = old + direction[i]
        digit[i] = new
        if new == 0 or new == radix[i] - 1:
            direction[i] = -direction[i]
            focus[i] = focus[i + 1]
            focus[i + 1] = i + 1
        step = new - old
        coef = coef * binom[i][new] // binom[i][old]
        parity ^= 1
        for j in support[i]:
            s = colsum[j]
            s2 = s + step
            colsum[j] = s2
            if s == 0:
                zcount -= 1
            elif s2 == 0:
                zcount += 1
        if zcount == 0:
            term = coef * math.prod(colsum)
            total = total - term if parity else total + term
    return total if m % 2 == 0 else -total


def permanent_reference(mat) -> int:
    """Permutation-sum definition of the permanent, for cross-checks.

    Expands row by row over the still-unused columns, skipping zero
    entries.  Exponential; intended for small matrices only.
    """
    rows = _as_rows(mat)
    m = len(rows)

    def expand(i: int, used: int) -> int:
        if i == m:
            return 1
        acc = 0
        row = rows[i]
        for j in range(m):
            if row[j] and not used & (1 << j):
                acc += expand(i + 1, used | (1 << j))
        return acc

    return expand(0, 0)


def mbezout_via_permanent(g: Graph, d: int, base: FixedBase,
                          allow_large: bool = False) -> BoundValue:
    """Bound for (g, d, base) as (2/d!)^(n-d) * permanent.

    The scaling is carried out in exact rational arithmetic; a
    non-integral result would mean the matrix was assembled wrongly,
    so it is asserted away rather than returned.
    """
    mat = build_mbezout_matrix(g, d, base)
    per = permanent(mat, allow_large=allow_large)
    scale = Fraction(2, math.factorial(d)) ** (g.n - d)
    value = scale * per
    assert value.denominator == 1, "permanent not divisible by (d!/2)^(n-d)"
    return BoundValue(value=int(value), method="permanent", base=tuple(base), count=per)
