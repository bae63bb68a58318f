"""Sphere equation systems and the delta-variable transformation.

The embedding count of a minimally rigid graph up to a fixed clique is
the root count of a square polynomial system: one magnitude equation
per free vertex tying its squared norm to a slack variable, and one
bilinear equation per non-fixed edge.  The euclidean flavor works in
C^d with an explicit s_u slack per vertex; the spherical flavor places
every vertex on the unit sphere in C^(d+1), which freezes the slack at
1.  Coordinates of fixed vertices are substituted by generic nonzero
constants, so the system is square in the free-vertex variables.

The second half of the module rewrites such a system through the
monomial change of variables that turns one chosen coordinate per free
vertex into an inverted "delta" variable.  Zero evaluations of the
delta variables of the rewritten system probe the face systems needed
by the exactness test.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from random import Random
from typing import Iterator, Optional, Sequence

from .graphs import Graph, InvalidBaseError, validate_base
from .polynomials import PolyRing, Polynomial

COORD_LETTERS = "xyzw"


def _coord_name(u: int, j: int, d: int) -> str:
    if d + 1 <= len(COORD_LETTERS):
        return f"{COORD_LETTERS[j]}{u}"
    return f"x{u}_{j + 1}"


@dataclass(frozen=True)
class SphereSystem:
    """Square polynomial system counting embeddings up to a fixed base.

    blocks lists, per free vertex in ascending order, the ring indices
    of its variables: d coordinates first, then the slack when it is
    still a variable (euclidean, not eliminated) or the extra
    coordinate (spherical).
    """

    flavor: str
    d: int
    graph: Graph
    base: tuple[int, ...]
    ring: PolyRing
    blocks: tuple[tuple[int, tuple[int, ...]], ...]
    equations: tuple[Polynomial, ...]
    labels: tuple[str, ...]
    placements: tuple[tuple[int, tuple[Fraction, ...]], ...]
    lambda_squares: tuple[tuple[tuple[int, int], object], ...]

    @property
    def free_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.blocks)

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def block_vars(self, vertex: int) -> tuple[int, ...]:
        for v, idxs in self.blocks:
            if v == vertex:
                return idxs
        raise KeyError(vertex)

    def is_square(self) -> bool:
        return len(self.equations) == self.ring.nvars


def _draw_nonzero(rng: Random, modulus: Optional[int]) -> object:
    if modulus is None:
        value = 0
        while value == 0:
            value = rng.randint(-20, 20)
        return Fraction(value)
    return rng.randrange(1, modulus)


def _draw_lambda_square(rng: Random, modulus: Optional[int]) -> object:
    if modulus is None:
        return Fraction(rng.randint(10 ** 3, 10 ** 6))
    return rng.randrange(1, modulus)


def _euclidean_placement(rng: Random, d: int, modulus: Optional[int]) -> tuple:
    return tuple(_draw_nonzero(rng, modulus) for _ in range(d))


def _spherical_placement(rng: Random, d: int, modulus: Optional[int]) -> tuple:
    # rational point on the unit sphere from an integer vector a:
    # ((2a, |a|^2 - 1)) / (|a|^2 + 1); retried until no coordinate is 0
    while True:
        a = [_draw_nonzero(rng, None) for _ in range(d)]
        norm2 = sum(c * c for c in a)
        if norm2 == 1:
            continue
        denom = norm2 + 1
        coords = tuple(2 * c / denom for c in a) + ((norm2 - 1) / denom,)
        if all(c != 0 for c in coords):
            if modulus is None:
                return coords
            try:
                return tuple(
                    int(c.numerator) * pow(int(c.denominator), -1, modulus)
                    % modulus
                    for c in coords)
            except ValueError:
                continue  # denominator divisible by the modulus; redraw


def build_sphere_system(g: Graph,
                        d: int,
                        base: Sequence[int],
                        flavor: str = "euclidean",
                        rng: Optional[Random] = None,
                        eliminate: bool = False,
                        keep_s: Sequence[int] = (),
                        fix_reflection: bool = False,
                        modulus: Optional[int] = None) -> SphereSystem:
    """Construct the square system for (g, d, base) with generic data.

    eliminate substitutes the slack of every free vertex not listed in
    keep_s by its squared norm and drops that magnitude equation.
    fix_reflection additionally pins the lowest free vertex adjacent
    to the whole base at a generic placement (its edges into the base
    then determine their own lengths and are dropped).  Both are
    preprocessing refinements; the default keeps the full system.
    """
    if flavor not in ("euclidean", "spherical"):
        raise ValueError(f"unknown flavor {flavor!r}")
    base = validate_base(g, d, base)
    rng = rng if rng is not None else Random(0)
    keep_s = frozenset(keep_s)
    ncoords = d if flavor == "euclidean" else d + 1

    fixed: dict[int, tuple] = {}
    for v in sorted(base):
        if flavor == "euclidean":
            fixed[v] = _euclidean_placement(rng, d, modulus)
        else:
            fixed[v] = _spherical_placement(rng, d, modulus)

    free = sorted(v for v in g.vertices() if v not in base)
    dropped_edges: set[tuple[int, int]] = set()
    if fix_reflection:
        candidates = [v for v in free
                      if all(b in g.neighbors(v) for b in base)]
        if not candidates:
            raise InvalidBaseError(
                "fix_reflection needs a free vertex adjacent to every "
                "base vertex")
        w = min(candidates)
        if flavor == "euclidean":
            fixed[w] = _euclidean_placement(rng, d, modulus)
        else:
            fixed[w] = _spherical_placement(rng, d, modulus)
        free.remove(w)
        for b in base:
            dropped_edges.add(tuple(sorted((w, b))))

    if flavor == "spherical":
        eliminate = False  # no slack variables exist on the sphere

    # variable layout: per free vertex, coordinates then surviving slack
    names: list[str] = []
    blocks: list[tuple[int, tuple[int, ...]]] = []
    coord_idx: dict[tuple[int, int], int] = {}
    slack_idx: dict[int, int] = {}
    for u in free:
        idxs = []
        for j in range(ncoords):
            coord_idx[(u, j)] = len(names)
            idxs.append(len(names))
            names.append(_coord_name(u, j, d))
        if flavor == "euclidean" and (not eliminate or u in keep_s):
            slack_idx[u] = len(names)
            idxs.append(len(names))
            names.append(f"s{u}")
        blocks.append((u, tuple(idxs)))

    ring = PolyRing(names=tuple(names), modulus=modulus)

    def coord_poly(u: int, j: int) -> Polynomial:
        return ring.variable(coord_idx[(u, j)])

    def norm_square(u: int) -> Polynomial:
        acc = ring.zero()
        for j in range(ncoords):
            acc = acc + coord_poly(u, j) * coord_poly(u, j)
        return acc

    def slack_poly(u: int) -> Polynomial:
        """s_u as a polynomial: variable, substituted norm, constant."""
        if flavor == "spherical":
            return ring.one()
        if u in fixed:
            return ring.constant(sum(c * c for c in fixed[u])
                                 if modulus is None else
                                 sum(c * c for c in fixed[u]) % modulus)
        if u in slack_idx:
            return ring.variable(slack_idx[u])
        return norm_square(u)

    def inner_product(u: int, v: int) -> Polynomial:
        acc = ring.zero()
        for j in range(ncoords):
            if u in fixed:
                pu = ring.constant(fixed[u][j])
            else:
                pu = coord_poly(u, j)
            if v in fixed:
                pv = ring.constant(fixed[v][j])
            else:
                pv = coord_poly(v, j)
            acc = acc + pu * pv
        return acc

    equations: list[Polynomial] = []
    labels: list[str] = []
    lambda_squares: list[tuple[tuple[int, int], object]] = []

    for u in free:
        if flavor == "euclidean" and u not in slack_idx:
            continue  # slack substituted away, equation became trivial
        if flavor == "spherical":
            eq = norm_square(u) - ring.one()
        else:
            eq = norm_square(u) - slack_poly(u)
        equations.append(eq)
        labels.append(f"mag:{u}")

    base_set = set(base)
    for (a, b) in g.edges:
        if a in base_set and b in base_set:
            continue
        if (a, b) in dropped_edges:
            continue
        lam2 = _draw_lambda_square(rng, modulus)
        lambda_squares.append(((a, b), lam2))
        eq = (slack_poly(a) + slack_poly(b)
              - inner_product(a, b).scale(2)
              + ring.constant(lam2))
        equations.append(eq)
        labels.append(f"edge:{a}-{b}")

    system = SphereSystem(
        flavor=flavor,
        d=d,
        graph=g,
        base=base,
        ring=ring,
        blocks=tuple(blocks),
        equations=tuple(equations),
        labels=tuple(labels),
        placements=tuple((v, tuple(fixed[v])) for v in sorted(fixed)),
        lambda_squares=tuple(lambda_squares),
    )
    if not system.is_square():
        raise ValueError(
            f"system is {len(equations)} equations in {ring.nvars} "
            "variables; expected square")
    return system


# ---------------------------------------------------------------------------
# delta-variable transformation


@dataclass(frozen=True)
class DeltaChoice:
    """Chosen inverted coordinate slot (0-based) per free vertex."""

    slots: tuple[tuple[int, int], ...]

    def slot_of(self, vertex: int) -> int:
        for v, s in self.slots:
            if v == vertex:
                return s
        raise KeyError(vertex)


def delta_choices(system: SphereSystem,
                  conjecture_mode: bool) -> Iterator[DeltaChoice]:
    """Enumerate slot choices: first free vertex pinned to slot 0,
    the others ranging over the d coordinate slots (never the slack).
    Conjecture mode keeps only the all-first-slot choice."""
    verts = system.free_vertices
    if not verts:
        raise ValueError("no free vertices to transform")
    if conjecture_mode:
        yield DeltaChoice(tuple((v, 0) for v in verts))
        return
    rest = verts[1:]
    for combo in product(range(system.d), repeat=len(rest)):
        yield DeltaChoice(((verts[0], 0),)
                          + tuple(zip(rest, combo)))


@dataclass(frozen=True)
class DeltaSystem:
    """Image of a sphere system under the monomial transformation."""

    source: SphereSystem
    choice: DeltaChoice
    ring: PolyRing
    equations: tuple[Polynomial, ...]
    labels: tuple[str, ...]
    blocks: tuple[tuple[int, tuple[int, ...]], ...]
    delta_vars: tuple[tuple[int, int], ...]  # (vertex, ring index)

    def delta_var(self, vertex: int) -> int:
        for v, idx in self.delta_vars:
            if v == vertex:
                return idx
        raise KeyError(vertex)

    @property
    def e_vars(self) -> tuple[int, ...]:
        dset = {idx for _, idx in self.delta_vars}
        return tuple(i for i in range(self.ring.nvars) if i not in dset)


def construct_delta_poly(system: SphereSystem,
                         choice: DeltaChoice) -> DeltaSystem:
    """Rewrite the system through x_{u,L} -> 1/t_{u,L},
    x_{u,l} -> t_{u,l}/t_{u,L}, clearing denominators per polynomial.

    On exponent vectors the map sends the chosen slot's exponent to
    minus the block's total degree and leaves the other slots alone;
    multiplying by the least common denominator then shifts the chosen
    slot so its minimum exponent becomes zero.
    """
    for v, s in choice.slots:
        if not 0 <= s < system.d:
            raise ValueError(
                f"delta slot {s} for vertex {v} outside the first "
                f"{system.d} coordinate slots")
    names = []
    for u, idxs in system.blocks:
        for k in range(len(idxs)):
            names.append(f"t{u}_{k + 1}")
    ring = PolyRing(names=tuple(names), modulus=system.ring.modulus)

    chosen: list[tuple[tuple[int, ...], int]] = []
    for u, idxs in system.blocks:
        chosen.append((idxs, idxs[choice.slot_of(u)]))

    new_eqs = []
    for poly in system.equations:
        rewritten: dict[tuple[int, ...], object] = {}
        for expo, coeff in poly.terms.items():
            e = list(expo)
            for idxs, pivot in chosen:
                block_deg = sum(expo[i] for i in idxs)
                e[pivot] = -block_deg
            rewritten[tuple(e)] = coeff
        # clear denominators: lift each pivot's minimum exponent to 0
        shifts = {}
        for idxs, pivot in chosen:
            low = min(e[pivot] for e in rewritten)
            if low:
                shifts[pivot] = -low
        cleared = {}
        for e, coeff in rewritten.items():
            e = list(e)
            for pivot, up in shifts.items():
                e[pivot] += up
            cleared[tuple(e)] = coeff
        new_eqs.append(Polynomial(ring, cleared))

    return DeltaSystem(
        source=system,
        choice=choice,
        ring=ring,
        equations=tuple(new_eqs),
        labels=system.labels,
        blocks=system.blocks,
        delta_vars=tuple(
            (u, idxs[choice.slot_of(u)]) for u, idxs in system.blocks),
    )


def delta_weight(system: SphereSystem,
                 vertices: Sequence[int]) -> tuple[int, ...]:
    """Weight vector with -1 on every slot of the listed blocks; the
    initial form under it is the face system those blocks' deltas cut
    out.  Test helper tying the transformation back to initial forms."""
    w = [0] * system.ring.nvars
    for u in vertices:
        for i in system.block_vars(u):
            w[i] = -1
    return tuple(w)


# ---------------------------------------------------------------------------
# dumps


def _poly_json(p: Polynomial) -> list:
    items = sorted(p.terms.items())
    return [[list(e), str(c)] for e, c in items]


def system_to_text(equations: Sequence[Polynomial],
                   labels: Sequence[str]) -> str:
    lines = []
    for label, poly in zip(labels, equations):
        lines.append(f"{label}: {poly} = 0")
    return "\n".join(lines) + "\n"


def system_to_json(ring: PolyRing,
                   equations: Sequence[Polynomial],
                   labels: Sequence[str]) -> str:
    payload = {
        "variables": list(ring.names),
        "modulus": ring.modulus,
        "equations": [
            {"label": label, "terms": _poly_json(p)}
            for label, p in zip(labels, equations)
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True)
