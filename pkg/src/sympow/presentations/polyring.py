"""Presentations that are quotients of a graded polynomial ring.

Covers the projective spaces, the classifying-space rings ``Z*`` and
``G*``, their truncations by ``nu`` and by the power sums.  Each degree is
the span of the monomials of that degree modulo the degree-wise span of
relation multiples.  Relations that are single monomials with unit
coefficient simply remove the monomials they divide.
"""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from ..algebra.polynomial import Polynomial, PolyRing
from ..cli.expr import ElementError
from .base import Presentation, SpaceId, check_homogeneous, monomial_multiples


class PolyAlgebra:
    """Evaluation context for element expressions."""

    def __init__(self, pres: PolynomialPresentation):
        self.pres = pres

    def const(self, n: int) -> Polynomial:
        return self.pres.ring.const(n)

    def gen(self, name: str, idx: tuple, offset: int) -> Polynomial:
        img = self.pres.tokens.get(name)
        if img is None or idx:
            label = f"{name}[{','.join(map(str, idx))}]" if idx else name
            raise ElementError(f"generator {label} is not available in {self.pres.space}", offset)
        return img

    def divide(self, value: Polynomial, k: int) -> Polynomial:
        try:
            return value.exact_div(k)
        except ValueError:
            raise ElementError(f"{value} is not divisible by {k}") from None


class PolynomialPresentation(Presentation):
    def __init__(self, space: SpaceId, coeff: str, ring: PolyRing, relations: Sequence[Polynomial],
                 tokens: Mapping[str, Polynomial] | None = None,
                 elimination: Callable[[tuple[int, ...]], tuple] | None = None,
                 product_rules: Sequence[str] = ()):
        super().__init__(space, coeff)
        self.ring = ring
        self.variables = ring.variables
        self.relations = tuple(relations)
        self.product_rules = tuple(product_rules)
        killed, other = [], []
        for r in self.relations:
            if r.ring != ring:
                raise ValueError("relation lives in a different ring")
            if not r.is_homogeneous():
                raise ValueError(f"relation {r} is not homogeneous")
            if len(r.terms) == 1 and abs(next(iter(r.terms.values()))) == 1:
                killed.append(next(iter(r.terms)))
            elif r:
                other.append(r)
        self.killed = tuple(killed)
        self.generic_relations = tuple(other)
        toks = {v.name: ring.gen(v.name) for v in ring.variables}
        toks.update(tokens or {})
        self.tokens = toks
        self._elimination = elimination

    def ambient(self, degree: int) -> list[tuple[int, ...]]:
        keys = monomial_multiples(self.ring, degree, self.killed)
        if self._elimination is not None:
            keys.sort(key=self._elimination, reverse=True)
        return keys

    def key_name(self, key) -> str:
        return self.ring.format_monomial(key)

    def display_key(self, key):
        # same order as polynomial printing: lex-larger exponents first
        return tuple(-e for e in key)

    def _reduce(self, p: Polynomial) -> dict:
        out = {}
        for e, c in p.terms.items():
            if any(all(a >= b for a, b in zip(e, k)) for k in self.killed):
                continue
            out[e] = c
        return out

    def relation_vectors(self, degree: int) -> list[dict]:
        rows = []
        for r in self.generic_relations:
            rd = r.degree()
            for mu in monomial_multiples(self.ring, degree - rd, self.killed):
                vec = self._reduce(r * self.ring.monomial(mu))
                if vec:
                    rows.append(vec)
        return rows

    # -- elements -------------------------------------------------------------
    def algebra(self) -> PolyAlgebra:
        return PolyAlgebra(self)

    def to_vector(self, element: Polynomial):
        if not isinstance(element, Polynomial) or element.ring != self.ring:
            raise ElementError(f"{element!r} is not an element of {self.space}")
        vec = self._reduce(element)
        p = Polynomial(self.ring, vec)
        return check_homogeneous(p), vec

    def key_element(self, key) -> Polynomial:
        return self.ring.monomial(key)
