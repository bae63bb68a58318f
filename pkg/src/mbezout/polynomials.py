"""Sparse multivariate polynomials over the rationals or a prime field.

Terms live in a dict keyed by exponent tuples.  Coefficients are
Fractions when the ring modulus is None, otherwise ints in [0, p).
Just enough arithmetic for building sphere systems, taking initial
forms, and running Buchberger's algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

Coeff = Union[int, Fraction]


@dataclass(frozen=True)
class PolyRing:
    """Variable names plus an optional prime modulus."""

    names: tuple[str, ...]
    modulus: Optional[int] = None

    @property
    def nvars(self) -> int:
        return len(self.names)

    def normalize(self, c: Coeff) -> Coeff:
        if self.modulus is None:
            return c if isinstance(c, Fraction) else Fraction(c)
        return int(c) % self.modulus

    def invert(self, c: Coeff) -> Coeff:
        if self.modulus is None:
            return 1 / Fraction(c)
        return pow(int(c), -1, self.modulus)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Coeff) -> "Polynomial":
        c = self.normalize(c)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, index: "int | str") -> "Polynomial":
        if isinstance(index, str):
            index = self.names.index(index)
        expo = [0] * self.nvars
        expo[index] = 1
        return Polynomial(self, {tuple(expo): self.normalize(1)})

    def var_index(self, name: str) -> int:
        return self.names.index(name)

    def from_terms(self, terms: Mapping[tuple[int, ...], Coeff]) -> "Polynomial":
        out = {}
        for expo, c in terms.items():
            c = self.normalize(c)
            if c:
                out[tuple(expo)] = c
        return Polynomial(self, out)


class Polynomial:
    """Immutable-by-convention sparse polynomial bound to a ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict[tuple[int, ...], Coeff]):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Coeff:
        zero = (0,) * self.ring.nvars
        return self.terms.get(zero, self.ring.normalize(0))

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.ring == other.ring \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for expo, c in other.terms.items():
            s = self.ring.normalize(out.get(expo, 0) + c)
            if s:
                out[expo] = s
            else:
                out.pop(expo, None)
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: Coeff) -> "Polynomial":
        c = self.ring.normalize(c)
        if not c:
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {e: self.ring.normalize(v * c)
                                      for e, v in self.terms.items()})

    def mul_term(self, expo: Sequence[int], c: Coeff) -> "Polynomial":
        c = self.ring.normalize(c)
        if not c:
            return Polynomial(self.ring, {})
        out = {}
        for e, v in self.terms.items():
            key = tuple(a + b for a, b in zip(e, expo))
            out[key] = self.ring.normalize(v * c)
        return Polynomial(self.ring, out)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict[tuple[int, ...], Coeff] = {}
        norm = self.ring.normalize
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = norm(out.get(key, 0) + c1 * c2)
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Polynomial(self.ring, out)

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def zero_substitute(self, indices: Iterable[int]) -> "Polynomial":
        """Set the given variables to zero: drop terms using them."""
        idx = set(indices)
        out = {e: c for e, c in self.terms.items()
               if all(e[i] == 0 for i in idx)}
        return Polynomial(self.ring, out)

    def substitute_values(self, values: Mapping[int, Coeff]) -> "Polynomial":
        """Replace selected variables by constants."""
        out: dict[tuple[int, ...], Coeff] = {}
        norm = self.ring.normalize
        for e, c in self.terms.items():
            factor = norm(c)
            key = list(e)
            for i, val in values.items():
                if e[i]:
                    factor = norm(factor * norm(val) ** e[i])
                    key[i] = 0
            if not factor:
                continue
            k = tuple(key)
            s = norm(out.get(k, 0) + factor)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Polynomial(self.ring, out)

    def evaluate(self, point: Sequence[Coeff]) -> Coeff:
        norm = self.ring.normalize
        total = norm(0)
        for e, c in self.terms.items():
            v = norm(c)
            for i, power in enumerate(e):
                if power:
                    v = norm(v * norm(point[i]) ** power)
            total = norm(total + v)
        return total

    def initial_form(self, w: Sequence[Coeff]) -> "Polynomial":
        """Terms whose exponent vector minimizes the inner product with w."""
        if not self.terms:
            return self
        scored = [(sum(a * b for a, b in zip(e, w)), e) for e in self.terms]
        low = min(s for s, _ in scored)
        return Polynomial(self.ring, {e: self.terms[e]
                                      for s, e in scored if s == low})

    def support_variables(self) -> set[int]:
        used = set()
        for e in self.terms:
            for i, p in enumerate(e):
                if p:
                    used.add(i)
        return used

    def map_ring(self, ring: PolyRing) -> "Polynomial":
        """Reinterpret coefficients in another ring (e.g. reduce mod p).

        Fraction coefficients map to num * den^-1 mod p; requires the
        denominators to be invertible.
        """
        out: dict[tuple[int, ...], Coeff] = {}
        for e, c in self.terms.items():
            if ring.modulus is not None and isinstance(c, Fraction):
                v = c.numerator % ring.modulus
                v = v * pow(c.denominator % ring.modulus, -1, ring.modulus) % ring.modulus
            else:
                v = ring.normalize(c)
            if v:
                out[e] = v
        return Polynomial(ring, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda t: (-sum(t), t)):
            c = self.terms[e]
            factors = []
            for i, p in enumerate(e):
                if p == 1:
                    factors.append(self.ring.names[i])
                elif p > 1:
                    factors.append("%s^%d" % (self.ring.names[i], p))
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append("%s*%s" % (c, body))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    __repr__ = __str__


def grevlex_key(expo: tuple[int, ...]):
    """Sort key so that max(key) picks the graded reverse lex leader."""
    return (sum(expo), tuple(-e for e in reversed(expo)))


def leading_term(p: Polynomial) -> tuple[tuple[int, ...], Coeff]:
    expo = max(p.terms, key=grevlex_key)
    return expo, p.terms[expo]


def monomial_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))
