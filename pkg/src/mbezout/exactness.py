"""Deciding whether the multihomogeneous bound of a graph is exact.

The bound counts roots of the sphere system.  By Bernstein's second
criterion it is exact precisely when no face system of the common
polytope has a root with all coordinates nonzero.  The facet normals
of that polytope split into coordinate vectors (excluded generically)
and one negative block vector per free vertex, so after the delta
rewriting of the system it suffices to test, for each choice of delta
variables and each free vertex, whether zeroing that vertex's delta
variable leaves a solvable system.  Any solvable zero evaluation
witnesses a face system with a toric root, hence an inexact bound;
if every zero evaluation is unsolvable the bound is exact.

Solvability is decided by a probabilistic oracle: the system is built
over a random 31-bit prime field with fresh generic data per trial and
handed to Buchberger's algorithm; the ideal is trivial exactly when
the basis is {1}.  A query is "solvable" if any trial completes with a
nontrivial basis, "unsolvable" if all trials return {1}, and capped
computations surface as "indeterminate", never as a verdict.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from random import Random
from typing import Optional, Sequence

from .graphs import Graph
from .groebner import has_solution
from .polynomials import Polynomial, PolyRing
from .spheresystem import (DeltaChoice, DeltaSystem, SphereSystem,
                           build_sphere_system, construct_delta_poly,
                           delta_choices, system_to_json, system_to_text)

VERDICT_EXACT = "exact"
VERDICT_INEXACT = "inexact"
VERDICT_INDETERMINATE = "indeterminate"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # bases 2, 3, 5, 7 are conclusive below 3,215,031,751 > 2^31
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng: Random, bits: int = 31) -> int:
    while True:
        candidate = rng.randrange(1 << (bits - 1), 1 << bits) | 1
        if _is_prime(candidate):
            return candidate


@dataclass(frozen=True)
class OracleConfig:
    trials: int = 3
    pair_cap: int = 20000
    retry_cap: int = 5
    prime_bits: int = 31


@dataclass
class QueryRecord:
    choice: tuple[tuple[int, int], ...]
    zeroed: tuple[str, ...]
    verdict: str
    trial_verdicts: tuple[str, ...]
    primes: tuple[int, ...]


@dataclass
class Witness:
    zero_delta_vertices: tuple[int, ...]
    zero_e_vars: tuple[str, ...]
    normal: tuple[int, ...]
    variable_order: tuple[str, ...]
    toric_certified: bool


@dataclass
class ExactnessReport:
    graph_edges: tuple[tuple[int, int], ...]
    n: int
    d: int
    base: tuple[int, ...]
    flavor: str
    conjecture_mode: bool
    seed: int
    eliminate: bool
    keep_s: tuple[int, ...]
    fix_reflection: bool
    verdict: str
    queries: list[QueryRecord] = field(default_factory=list)
    witness: Optional[Witness] = None
    bound_polytope_caveat: bool = True
    elapsed_seconds: float = 0.0

    def to_json(self) -> str:
        payload = {
            "graph": {"n": self.n,
                      "edges": [list(e) for e in self.graph_edges]},
            "d": self.d,
            "base": list(self.base),
            "flavor": self.flavor,
            "conjecture_mode": self.conjecture_mode,
            "seed": self.seed,
            "preprocessing": {
                "eliminate": self.eliminate,
                "keep_s": list(self.keep_s),
                "fix_reflection": self.fix_reflection,
            },
            "verdict": self.verdict,
            "queries": [
                {
                    "choice": [list(p) for p in q.choice],
                    "zeroed": list(q.zeroed),
                    "verdict": q.verdict,
                    "trial_verdicts": list(q.trial_verdicts),
                    "primes": list(q.primes),
                }
                for q in self.queries
            ],
            "witness": None if self.witness is None else {
                "zero_delta_vertices": list(
                    self.witness.zero_delta_vertices),
                "zero_e_vars": list(self.witness.zero_e_vars),
                "normal": list(self.witness.normal),
                "variable_order": list(self.witness.variable_order),
                "toric_certified": self.witness.toric_certified,
            },
            "bound_polytope_caveat": self.bound_polytope_caveat,
        }
        return json.dumps(payload, indent=2, sort_keys=True)


class _Session:
    """Shared machinery for one exactness run: system construction per
    (prime, data) trial plus the aggregated solvability queries."""

    def __init__(self, g: Graph, d: int, base, flavor: str, rng: Random,
                 eliminate: bool, keep_s, fix_reflection: bool,
                 oracle: OracleConfig, emit_dir: Optional[Path]):
        self.g = g
        self.d = d
        self.base = tuple(base)
        self.flavor = flavor
        self.rng = rng
        self.eliminate = eliminate
        self.keep_s = tuple(sorted(keep_s))
        self.fix_reflection = fix_reflection
        self.oracle = oracle
        self.emit_dir = emit_dir
        self.emitted = 0
        # shape probe with deterministic data; defines variable order
        self.shape = self._build(modulus=None, rng=Random(0))

    def _build(self, modulus, rng) -> SphereSystem:
        return build_sphere_system(
            self.g, self.d, self.base, flavor=self.flavor, rng=rng,
            eliminate=self.eliminate, keep_s=self.keep_s,
            fix_reflection=self.fix_reflection, modulus=modulus)

    def _trial_system(self, choice: DeltaChoice) -> DeltaSystem:
        p = random_prime(self.rng, self.oracle.prime_bits)
        system = self._build(modulus=p, rng=self.rng)
        return construct_delta_poly(system, choice)

    def _emit(self, tag: str, ds: DeltaSystem,
              polys: Sequence[Polynomial]) -> None:
        if self.emit_dir is None:
            return
        self.emit_dir.mkdir(parents=True, exist_ok=True)
        stem = self.emit_dir / f"face_{self.emitted:04d}_{tag}"
        stem.with_suffix(".txt").write_text(
            system_to_text(polys, ds.labels))
        stem.with_suffix(".json").write_text(
            system_to_json(ds.ring, polys, ds.labels))
        self.emitted += 1

    def _trial_verdict(self, ds: DeltaSystem, zero_idx: list[int],
                       toric: bool) -> str:
        """Solvability of one zero evaluation over one trial's field.

        Zeroing additional variables only shrinks the variety, so any
        root of a deeper zero evaluation extends by zeros to a root
        here.  Plain queries therefore try the much smaller system
        with every delta variable zeroed first and only fall back to
        the full system when that shortcut does not certify a root.
        Toric queries skip the shortcut: it would change which
        variables must stay nonzero.
        """
        cap = self.oracle.pair_cap
        if toric:
            polys = [q.zero_substitute(zero_idx) for q in ds.equations]
            polys = _with_inverse(ds.ring, polys, zero_idx)
            return has_solution(polys, pair_cap=cap)
        deep = set(zero_idx)
        deep.update(idx for _, idx in ds.delta_vars)
        if deep != set(zero_idx):
            deep_idx = sorted(deep)
            deep_polys = [q.zero_substitute(deep_idx)
                          for q in ds.equations]
            verdict = has_solution(deep_polys, pair_cap=cap)
            if verdict == "solvable":
                return "solvable"
            if verdict == "indeterminate":
                # a single slack variable deeper still
                for _, idxs in ds.blocks:
                    for k, i in enumerate(idxs):
                        if k < self.d or i in deep:
                            continue
                        deeper = [q.zero_substitute(deep_idx + [i])
                                  for q in ds.equations]
                        if has_solution(deeper,
                                        pair_cap=cap) == "solvable":
                            return "solvable"
        polys = [q.zero_substitute(zero_idx) for q in ds.equations]
        return has_solution(polys, pair_cap=cap)

    def query(self, choice: DeltaChoice, zero_vertices: Sequence[int],
              zero_e_vars: Sequence[str] = (),
              toric: bool = False) -> tuple[str, tuple[str, ...],
                                            tuple[int, ...]]:
        """Aggregated solvability of the zero evaluation across trials.

        zero_vertices name free vertices whose delta variable is
        zeroed; zero_e_vars are additional variable names to zero.
        toric additionally demands a root with every remaining
        appearing variable nonzero (via an inverse variable).
        """
        verdicts: list[str] = []
        primes: list[int] = []
        attempts = 0
        while len(verdicts) < self.oracle.trials:
            if attempts >= self.oracle.trials + self.oracle.retry_cap:
                break
            attempts += 1
            ds = self._trial_system(choice)
            zero_idx = [ds.delta_var(u) for u in zero_vertices]
            zero_idx += [ds.ring.names.index(nm) for nm in zero_e_vars]
            verdict = self._trial_verdict(ds, zero_idx, toric)
            primes.append(ds.ring.modulus)
            if verdict == "indeterminate":
                continue  # fresh prime retry
            verdicts.append(verdict)
        if len(verdicts) < self.oracle.trials:
            overall = "indeterminate"
        elif any(v == "solvable" for v in verdicts):
            overall = "solvable"
        else:
            overall = "unsolvable"
        if self.emit_dir is not None:
            ds = self._trial_system(choice)
            zero_idx = [ds.delta_var(u) for u in zero_vertices]
            zero_idx += [ds.ring.names.index(nm) for nm in zero_e_vars]
            tag = "z" + "-".join(str(u) for u in zero_vertices)
            if zero_e_vars:
                tag += "_e" + "-".join(zero_e_vars)
            self._emit(tag, ds,
                       [q.zero_substitute(zero_idx)
                        for q in ds.equations])
        return overall, tuple(verdicts), tuple(primes)


def _with_inverse(ring: PolyRing, polys: Sequence[Polynomial],
                  zeroed: Sequence[int]) -> list[Polynomial]:
    """Append an inverse witness variable forcing the product of all
    remaining appearing variables to be a unit."""
    appearing: set[int] = set()
    for p in polys:
        appearing.update(p.support_variables())
    appearing -= set(zeroed)
    inv_ring = PolyRing(names=ring.names + ("invprod",),
                        modulus=ring.modulus)
    lifted = []
    for p in polys:
        lifted.append(Polynomial(
            inv_ring, {e + (0,): c for e, c in p.terms.items()}))
    expo = [0] * inv_ring.nvars
    for i in appearing:
        expo[i] = 1
    expo[-1] = 1
    product_term = Polynomial(
        inv_ring, {tuple(expo): inv_ring.normalize(1)})
    lifted.append(product_term - inv_ring.one())
    return lifted


def _witness_normal(shape: SphereSystem, ds_names: Sequence[str],
                    zero_delta_vertices: Sequence[int],
                    zero_e_vars: Sequence[str]) -> tuple[int, ...]:
    normal = [0] * len(ds_names)
    for u in zero_delta_vertices:
        for i in shape.block_vars(u):
            normal[i] -= 1
    for nm in zero_e_vars:
        normal[list(ds_names).index(nm)] += 1
    return tuple(normal)


def _search_witness(session: _Session, choice: DeltaChoice,
                    solvable_single: Sequence[int]) -> Optional[Witness]:
    """Greedily grow a zero set with a toric root on the rest.

    Start from the delta variables whose single zero evaluations were
    solvable, keep those that stay jointly solvable, then certify a
    root with all remaining variables nonzero; while that fails, allow
    additional e-variables to vanish (slack slots first), mirroring
    how mixed face normals arise."""
    shape_ds = construct_delta_poly(session.shape, choice)
    names = shape_ds.ring.names
    zero_delta: list[int] = []
    for u in solvable_single:
        trial = zero_delta + [u]
        verdict, _, _ = session.query(choice, trial)
        if verdict == "solvable":
            zero_delta = trial
    if not zero_delta:
        return None
    zero_e: list[str] = []

    # a variable absent from the face system is a free direction of
    # that face: walking along it reaches a deeper face with the very
    # same initial system, so fold such variables into the zero set
    # (slack slots before coordinates) to report the canonical face
    zero_idx = [shape_ds.delta_var(u) for u in zero_delta]
    zeroed_shape = [q.zero_substitute(zero_idx)
                    for q in shape_ds.equations]
    present: set[int] = set()
    for q in zeroed_shape:
        present.update(q.support_variables())
    absent = []
    for v, idxs in shape_ds.blocks:
        for k, i in enumerate(idxs):
            if i in present or i in zero_idx:
                continue
            absent.append((0 if k >= session.d else 1, names[i]))
    for _, nm in sorted(absent):
        verdict, _, _ = session.query(choice, zero_delta,
                                      zero_e + [nm])
        if verdict == "solvable":
            zero_e.append(nm)

    def candidates() -> list[str]:
        zeroed = {names[shape_ds.delta_var(u)] for u in zero_delta}
        zeroed.update(zero_e)
        slack, coords = [], []
        for v, idxs in shape_ds.blocks:
            for k, i in enumerate(idxs):
                nm = names[i]
                if nm in zeroed:
                    continue
                (slack if k >= session.d else coords).append(nm)
        return slack + coords

    for _ in range(len(names)):
        verdict, _, _ = session.query(choice, zero_delta, zero_e,
                                      toric=True)
        if verdict == "solvable":
            return Witness(
                zero_delta_vertices=tuple(zero_delta),
                zero_e_vars=tuple(zero_e),
                normal=_witness_normal(session.shape, names,
                                       zero_delta, zero_e),
                variable_order=tuple(names),
                toric_certified=True,
            )
        progressed = False
        for nm in candidates():
            verdict, _, _ = session.query(choice, zero_delta,
                                          zero_e + [nm])
            if verdict == "solvable":
                zero_e.append(nm)
                progressed = True
                break
        if not progressed:
            break
    return Witness(
        zero_delta_vertices=tuple(zero_delta),
        zero_e_vars=tuple(zero_e),
        normal=_witness_normal(session.shape, names, zero_delta,
                               zero_e),
        variable_order=tuple(names),
        toric_certified=False,
    )


def is_mbezout_exact(g: Graph,
                     d: int,
                     base: Sequence[int],
                     flavor: str = "euclidean",
                     conjecture_mode: bool = True,
                     seed: int = 0,
                     eliminate: bool = False,
                     keep_s: Sequence[int] = (),
                     fix_reflection: bool = False,
                     oracle: Optional[OracleConfig] = None,
                     emit_dir: Optional[str] = None,
                     find_witness: bool = True) -> ExactnessReport:
    """Run the exactness decision procedure for one graph and base.

    conjecture_mode tests only the all-first-slot delta choice; the
    full mode enumerates every choice.  The verdict is "inexact" as
    soon as any zero evaluation is solvable, "exact" when all are
    unsolvable, and "indeterminate" when the oracle could not decide
    some query (never silently exact).
    """
    started = time.time()
    oracle = oracle if oracle is not None else OracleConfig()
    rng = Random(seed)
    session = _Session(g, d, base, flavor, rng, eliminate, keep_s,
                       fix_reflection, oracle,
                       Path(emit_dir) if emit_dir else None)
    report = ExactnessReport(
        graph_edges=g.edges, n=g.n, d=d, base=tuple(base),
        flavor=flavor, conjecture_mode=conjecture_mode, seed=seed,
        eliminate=eliminate, keep_s=tuple(sorted(keep_s)),
        fix_reflection=fix_reflection, verdict=VERDICT_INDETERMINATE)

    shape = session.shape
    saw_indeterminate = False
    solvable_hit: Optional[tuple[DeltaChoice, list[int]]] = None
    for choice in delta_choices(shape, conjecture_mode):
        solvable_here: list[int] = []
        for u in shape.free_vertices:
            verdict, per_trial, primes = session.query(choice, [u])
            report.queries.append(QueryRecord(
                choice=choice.slots,
                zeroed=(f"t{u}_{choice.slot_of(u) + 1}",),
                verdict=verdict,
                trial_verdicts=per_trial,
                primes=primes))
            if verdict == "solvable":
                solvable_here.append(u)
            elif verdict == "indeterminate":
                saw_indeterminate = True
        if solvable_here and solvable_hit is None:
            solvable_hit = (choice, solvable_here)
            if conjecture_mode:
                break

    if solvable_hit is not None:
        report.verdict = VERDICT_INEXACT
        if find_witness:
            choice, singles = solvable_hit
            report.witness = _search_witness(session, choice, singles)
    elif saw_indeterminate:
        report.verdict = VERDICT_INDETERMINATE
    else:
        report.verdict = VERDICT_EXACT
    report.elapsed_seconds = round(time.time() - started, 3)
    return report


def conjecture_consistency(g: Graph, d: int, base: Sequence[int],
                           flavor: str = "euclidean", seed: int = 0,
                           eliminate: bool = False,
                           keep_s: Sequence[int] = (),
                           fix_reflection: bool = False,
                           oracle: Optional[OracleConfig] = None) -> bool:
    """True when the single-choice mode and the full enumeration agree.

    This is the empirical probe of the one-choice-suffices conjecture,
    not a proof of it.
    """
    short = is_mbezout_exact(
        g, d, base, flavor=flavor, conjecture_mode=True, seed=seed,
        eliminate=eliminate, keep_s=keep_s,
        fix_reflection=fix_reflection, oracle=oracle,
        find_witness=False)
    full = is_mbezout_exact(
        g, d, base, flavor=flavor, conjecture_mode=False, seed=seed,
        eliminate=eliminate, keep_s=keep_s,
        fix_reflection=fix_reflection, oracle=oracle,
        find_witness=False)
    return short.verdict == full.verdict
