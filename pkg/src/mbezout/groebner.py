"""Buchberger's algorithm and an ideal-triviality solvability test.

Over an algebraically closed field a polynomial system has no common
root exactly when its ideal contains 1, i.e. when the reduced Groebner
basis is {1}.  Working modulo a random large prime with generic data
makes that test effective: the computation stays exact and the verdict
transfers to characteristic zero for all but finitely many primes.

The engine is the classical Buchberger loop hardened with the standard
machinery: Gebauer-Moeller pair elimination, the sugar selection
strategy, divisibility bitmask prefilters during reduction, and
deactivation of generators whose leading term becomes divisible by a
newer one.  A cap on the number of treated S-pairs turns runaway cases
into an explicit "indeterminate" instead of a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappush, heappop
from typing import Optional, Sequence

from .polynomials import (Polynomial, grevlex_key, leading_term,
                          monomial_divides, monomial_lcm)

DEFAULT_PAIR_CAP = 20000


def _heap_key(expo: tuple[int, ...]) -> tuple:
    # heapq pops its smallest element; this key makes that the
    # grevlex-smallest monomial, the normal selection strategy
    return (sum(expo), tuple(-e for e in reversed(expo)))


def _lead_heap_key(expo: tuple[int, ...]) -> tuple:
    # inverted: pops the grevlex-largest monomial first, used when
    # peeling monomials off the work polynomial during reduction
    return (-sum(expo), tuple(reversed(expo)))


def _divmask(expo: tuple[int, ...]) -> int:
    mask = 0
    for i, e in enumerate(expo):
        if e:
            mask |= 1 << i
    return mask


class _Engine:
    """Shared state of one Groebner run."""

    def __init__(self, ring):
        self.ring = ring
        self.p = ring.modulus
        # parallel arrays per basis element
        self.terms: list[dict] = []     # monic coefficient maps
        self.lead: list[tuple] = []     # leading exponents
        self.rest: list[list] = []      # non-leading (expo, coeff) pairs
        self.mask: list[int] = []       # divmasks of the leads
        self.sugar: list[int] = []
        self.active: list[bool] = []
        self.pairs: list = []           # heap of (sugar, key, i, j, lcm)
        self.cancelled: set = set()
        self.unit = False

    # -- basis bookkeeping -------------------------------------------------

    def add(self, poly_terms: dict, sugar: int) -> None:
        ring = self.ring
        p = self.p
        lead_expo = max(poly_terms, key=grevlex_key)
        lc = poly_terms[lead_expo]
        if lc != 1:
            inv = ring.invert(lc)
            if p:
                poly_terms = {e: c * inv % p
                              for e, c in poly_terms.items()}
            else:
                poly_terms = {e: c * inv for e, c in poly_terms.items()}
        if sum(lead_expo) == 0:
            self.unit = True
            return
        h = len(self.terms)
        self.terms.append(poly_terms)
        self.lead.append(lead_expo)
        self.rest.append(sorted(
            ((e, c) for e, c in poly_terms.items() if e != lead_expo),
            key=lambda t: grevlex_key(t[0]), reverse=True))
        self.mask.append(_divmask(lead_expo))
        self.sugar.append(sugar)
        self.active.append(True)
        self._update_pairs(h)

    def _update_pairs(self, h: int) -> None:
        """Gebauer-Moeller update for the freshly added element h."""
        lt_h = self.lead[h]
        mask_h = self.mask[h]
        olds = [g for g in range(h) if self.active[g]]

        lcms = {g: monomial_lcm(lt_h, self.lead[g]) for g in olds}
        # criterion M: drop (h, g) when another new pair's lcm
        # properly divides its lcm
        keep = []
        for g in olds:
            lg = lcms[g]
            dominated = False
            for g2 in olds:
                l2 = lcms[g2]
                if l2 != lg and monomial_divides(l2, lg):
                    dominated = True
                    break
            if not dominated:
                keep.append(g)
        # criterion F: one pair per distinct lcm
        by_lcm: dict = {}
        for g in keep:
            by_lcm.setdefault(lcms[g], g)
        survivors = by_lcm.items()
        # criterion B (product): coprime leading terms reduce to zero
        for lcm, g in survivors:
            lt_g = self.lead[g]
            if all(a == 0 or b == 0 for a, b in zip(lt_h, lt_g)):
                continue
            sug = max(self.sugar[h] + sum(lcm) - sum(lt_h),
                      self.sugar[g] + sum(lcm) - sum(lt_g))
            heappush(self.pairs,
                     (sug, _heap_key(lcm), g, h, lcm))
        # prune old pairs made redundant by h
        for (sug, key, i, j, lcm) in self.pairs:
            if j == h or (i, j) in self.cancelled:
                continue
            if (monomial_divides(lt_h, lcm)
                    and monomial_lcm(lt_h, self.lead[i]) != lcm
                    and monomial_lcm(lt_h, self.lead[j]) != lcm):
                self.cancelled.add((i, j))
        # deactivate older generators whose lead h now divides
        for g in olds:
            if monomial_divides(lt_h, self.lead[g]):
                self.active[g] = False

    # -- reduction ---------------------------------------------------------

    def reduce_terms(self, start: dict, sugar: int) -> tuple[dict, int]:
        """Full normal form of the given coefficient map, with sugar
        tracking.  Inactive generators still serve as reducers."""
        p = self.p
        ring = self.ring
        work = dict(start)
        heap = [(_lead_heap_key(e), e) for e in work]
        heapify(heap)
        remainder: dict = {}
        nbasis = len(self.terms)
        while heap:
            _, expo = heappop(heap)
            coeff = work.get(expo)
            if not coeff:
                continue
            emask = _divmask(expo)
            esum = sum(expo)
            reducer = -1
            for g in range(nbasis):
                if self.mask[g] & ~emask:
                    continue
                lg = self.lead[g]
                ok = True
                for a, b in zip(lg, expo):
                    if a > b:
                        ok = False
                        break
                if ok:
                    reducer = g
                    break
            if reducer < 0:
                remainder[expo] = coeff
                del work[expo]
                continue
            del work[expo]
            lg = self.lead[reducer]
            shift_deg = esum - sum(lg)
            gs = self.sugar[reducer] + shift_deg
            if gs > sugar:
                sugar = gs
            factor = coeff  # reducers are monic
            for ge2, gc2 in self.rest[reducer]:
                ne = tuple(a - b + c for a, b, c in zip(expo, lg, ge2))
                cur = work.get(ne)
                if cur is None:
                    nc = (-factor * gc2) % p if p else -factor * gc2
                    if nc:
                        work[ne] = nc
                        heappush(heap, (_lead_heap_key(ne), ne))
                else:
                    nc = (cur - factor * gc2) % p if p \
                        else cur - factor * gc2
                    if nc:
                        work[ne] = nc
                    else:
                        del work[ne]
        return remainder, sugar

    def spoly_terms(self, i: int, j: int,
                    lcm: tuple) -> tuple[dict, int]:
        p = self.p
        li, lj = self.lead[i], self.lead[j]
        mi = tuple(a - b for a, b in zip(lcm, li))
        mj = tuple(a - b for a, b in zip(lcm, lj))
        out: dict = {}
        for e, c in self.terms[i].items():
            ne = tuple(a + b for a, b in zip(e, mi))
            out[ne] = c
        for e, c in self.terms[j].items():
            ne = tuple(a + b for a, b in zip(e, mj))
            cur = out.get(ne)
            if cur is None:
                out[ne] = (-c) % p if p else -c
            else:
                nc = (cur - c) % p if p else cur - c
                if nc:
                    out[ne] = nc
                else:
                    del out[ne]
        sug = max(self.sugar[i] + sum(mi), self.sugar[j] + sum(mj))
        return out, sug


@dataclass(frozen=True)
class GroebnerResult:
    basis: tuple[Polynomial, ...]
    completed: bool
    pairs_processed: int

    def contains_one(self) -> bool:
        return any(p.is_constant() and not p.is_zero() for p in self.basis)


def buchberger(polys: Sequence[Polynomial],
               pair_cap: int = DEFAULT_PAIR_CAP) -> GroebnerResult:
    """Groebner basis in graded reverse lex order.

    Stops early as soon as a nonzero constant enters the basis (the
    only question our callers ask is ideal triviality).  When the pair
    budget runs out the result is flagged incomplete.
    """
    live = [p for p in polys if not p.is_zero()]
    if not live:
        return GroebnerResult((), True, 0)
    ring = live[0].ring
    for p in live:
        if p.is_constant():
            return GroebnerResult((ring.one(),), True, 0)

    engine = _Engine(ring)
    for p in sorted(live, key=lambda q: _heap_key(leading_term(q)[0])):
        reduced, sugar = engine.reduce_terms(
            dict(p.terms), p.total_degree())
        if not reduced:
            continue
        engine.add(reduced, sugar)
        if engine.unit:
            return GroebnerResult((ring.one(),), True, 0)

    count = 0
    while engine.pairs:
        if count >= pair_cap:
            basis = tuple(Polynomial(ring, dict(engine.terms[g]))
                          for g in range(len(engine.terms))
                          if engine.active[g])
            return GroebnerResult(basis, False, count)
        sug, key, i, j, lcm = heappop(engine.pairs)
        if (i, j) in engine.cancelled:
            continue
        count += 1
        raw, sugar = engine.spoly_terms(i, j, lcm)
        if not raw:
            continue
        reduced, sugar = engine.reduce_terms(raw, sugar)
        if not reduced:
            continue
        engine.add(reduced, sugar)
        if engine.unit:
            return GroebnerResult((ring.one(),), True, count)

    basis = tuple(Polynomial(ring, dict(engine.terms[g]))
                  for g in range(len(engine.terms)) if engine.active[g])
    return GroebnerResult(basis, True, count)


def normal_form(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Full remainder of f under division by the given polynomials."""
    ring = f.ring
    engine = _Engine(ring)
    for g in basis:
        if g.is_zero():
            continue
        terms = dict(g.terms)
        lead_expo = max(terms, key=grevlex_key)
        lc = terms[lead_expo]
        if lc != 1:
            inv = ring.invert(lc)
            if ring.modulus:
                terms = {e: c * inv % ring.modulus
                         for e, c in terms.items()}
            else:
                terms = {e: c * inv for e, c in terms.items()}
        engine.terms.append(terms)
        engine.lead.append(lead_expo)
        engine.rest.append(sorted(
            ((e, c) for e, c in terms.items() if e != lead_expo),
            key=lambda t: grevlex_key(t[0]), reverse=True))
        engine.mask.append(_divmask(lead_expo))
        engine.sugar.append(sum(lead_expo))
        engine.active.append(True)
    reduced, _ = engine.reduce_terms(dict(f.terms), f.total_degree())
    return Polynomial(ring, reduced)


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial; exposed for the closure property tests."""
    ring = f.ring
    fe, fc = leading_term(f)
    ge, gc = leading_term(g)
    lcm = monomial_lcm(fe, ge)
    mf = tuple(a - b for a, b in zip(lcm, fe))
    mg = tuple(a - b for a, b in zip(lcm, ge))
    return f.mul_term(mf, ring.invert(fc)) - g.mul_term(mg, ring.invert(gc))


def quotient_dimension(result: GroebnerResult) -> Optional[int]:
    """Number of standard monomials of a completed basis.

    For a zero-dimensional ideal this equals the number of common
    roots counted with multiplicity over the algebraic closure, which
    for generic data is the plain root count.  Returns None when the
    basis is incomplete or the quotient is infinite dimensional (some
    variable admits no pure power among the leading terms).
    """
    if not result.completed:
        return None
    if result.contains_one():
        return 0
    if not result.basis:
        return None
    nvars = result.basis[0].ring.nvars
    leads = [leading_term(p)[0] for p in result.basis]
    caps = []
    for i in range(nvars):
        pure = [le[i] for le in leads
                if le[i] > 0 and all(e == 0 for j, e in enumerate(le)
                                     if j != i)]
        if not pure:
            return None
        caps.append(min(pure))
    count = 0
    stack = [(0,) * nvars]
    seen = {stack[0]}
    while stack:
        m = stack.pop()
        if any(monomial_divides(le, m) for le in leads):
            continue
        count += 1
        for i in range(nvars):
            if m[i] + 1 >= caps[i]:
                continue
            m2 = m[:i] + (m[i] + 1,) + m[i + 1:]
            if m2 not in seen:
                seen.add(m2)
                stack.append(m2)
    return count


def has_solution(polys: Sequence[Polynomial],
                 pair_cap: int = DEFAULT_PAIR_CAP) -> str:
    """"solvable", "unsolvable", or "indeterminate" over the closure.

    Input polynomials must share a ring.  "unsolvable" means the ideal
    is the whole ring (basis {1}); "solvable" means a completed basis
    without 1, which over an algebraically closed field guarantees a
    common root; "indeterminate" reports a capped computation and
    decides nothing.
    """
    live = [p for p in polys if not p.is_zero()]
    if not live:
        return "solvable"
    for p in live:
        if p.is_constant():
            return "unsolvable"
    result = buchberger(live, pair_cap=pair_cap)
    if result.contains_one():
        return "unsolvable"
    if not result.completed:
        return "indeterminate"
    return "solvable"
