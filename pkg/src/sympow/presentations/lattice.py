"""Integral cohomology of the symmetric square, in lattice coordinates.

Write ``w`` for ``h/2``.  The even part is the sublattice of ``Z[g, w]``
spanned by ``1``, ``g^q w^s`` (``q >= 1``) and ``2 w^p`` (``p >= 1``); these
are the classes ``g^q*h^s/2^s`` and ``h^p/2^(p-1)``.  The odd part is spanned
by order-2 classes ``u[i,j]`` in degree ``2i + jd + 1``, the images of the
boundary classes ``c^i delta[j]``, with ``u[0,j] = 0``.  Products of
``u``-classes with each other or with positive-degree even classes vanish.

For the truncation at ``n`` the even part is divided by the span of lattice
multiples of the power sums ``r_t(g, w)`` for ``t > n``, and only ``u[i,j]``
with ``j <= n`` remain.
"""

from __future__ import annotations

from functools import lru_cache

from ..algebra.polynomial import GradedVariable, Polynomial, PolyRing
from ..cli.expr import ElementError
from ..fibonacci import powersum
from .base import Presentation, SpaceId
from .mp_integral import cz_rewrite

UNIT = "1"


class LatticeError(ElementError):
    """An even element outside the integral lattice (e.g. ``h/2``)."""


@lru_cache(maxsize=None)
def gw_ring(d: int) -> PolyRing:
    return PolyRing([GradedVariable("g", d), GradedVariable("w", 2 * d)])


def divided_name(q: int, s: int) -> str:
    """Name of ``g^q w^s`` (q >= 1) or ``2 w^s`` (q = 0)."""
    if q == 0:
        return "h" if s == 1 else f"h^{s}/{2 ** (s - 1)}"
    g = "g" if q == 1 else f"g^{q}"
    if s == 0:
        return g
    h = "h" if s == 1 else f"h^{s}"
    return f"{g}*{h}/{2 ** s}"


def lattice_vector(p: Polynomial) -> dict:
    """Coordinates of an even element on the lattice generators."""
    out = {}
    for (q, s), c in p.terms.items():
        if q == 0 and s == 0:
            out[UNIT] = c
        elif q >= 1:
            out[("g", q, s)] = c
        else:
            if c % 2:
                raise LatticeError(f"{p} is not in the integral lattice: "
                                   f"{divided_name(0, s)} would need a half-integer coefficient")
            out[("h", s)] = c // 2
    return out


class LatticeElement:
    __slots__ = ("even", "u")

    def __init__(self, even: Polynomial, u: frozenset = frozenset()):
        self.even = even
        self.u = frozenset(u)

    def _lift(self, other):
        if isinstance(other, LatticeElement):
            return other
        if isinstance(other, int):
            return LatticeElement(self.even.ring.const(other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return LatticeElement(self.even + other.even, self.u ^ other.u)

    __radd__ = __add__

    def __neg__(self):
        return LatticeElement(-self.even, self.u)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        unit = self.even.ring.unit_exps()
        c1 = self.even.terms.get(unit, 0)
        c2 = other.even.terms.get(unit, 0)
        u = (other.u if c1 % 2 else frozenset()) ^ (self.u if c2 % 2 else frozenset())
        return LatticeElement(self.even * other.even, u)

    __rmul__ = __mul__

    def __repr__(self):
        return f"LatticeElement({self.even}, {sorted(self.u)})"


class LatticeAlgebra:
    def __init__(self, pres: SP2Integral):
        self.pres = pres
        R = pres.ring
        self.tokens = {"g": LatticeElement(R.gen("g")), "h": LatticeElement(2 * R.gen("w"))}

    def const(self, n: int) -> LatticeElement:
        return LatticeElement(self.pres.ring.const(n))

    def gen(self, name: str, idx: tuple, offset: int) -> LatticeElement:
        if name == "u":
            i, j = idx
            if j < 1:
                raise ElementError("u[i,j] needs j >= 1", offset)
            return LatticeElement(self.pres.ring.zero(), frozenset({(i, j)}))
        tok = self.tokens.get(name)
        if tok is None:
            raise ElementError(f"generator {name} is not available in {self.pres.space}", offset)
        return tok

    def divide(self, value: LatticeElement, k: int) -> LatticeElement:
        if value.u:
            raise ElementError("order-2 classes cannot be divided")
        try:
            return LatticeElement(value.even.exact_div(k))
        except ValueError:
            raise ElementError(f"{value.even} is not divisible by {k}") from None


class SP2Integral(Presentation):
    def __init__(self, space: SpaceId):
        super().__init__(space, "Z")
        d = space.d
        self.ring = gw_ring(d)
        self.truncation = space.n
        self.variables = (GradedVariable("g", d), GradedVariable("h", 2 * d))
        rules = [
            "h = 2*w (w = h/2 is a lattice coordinate)",
            "2*u[i,j] = 0", "u[0,j] = 0", "u[i,j]*u[k,l] = 0", "g*u[i,j] = h*u[i,j] = 0",
            "u[j*d/2+k,j] = sum_{0<i<=j} C(j,i)*u[(j-i)*d/2+k,j+i]",
        ]
        if space.n is not None:
            rules.append(f"r_t(g, h/2) = 0 and u[i,t] = 0 for t > {space.n}")
        self.product_rules = tuple(rules)

    # -- keys ---------------------------------------------------------------------
    def ambient(self, degree: int) -> list:
        d = self.d
        n = self.truncation
        if degree == 0:
            return [UNIT]
        if degree % 2 == 1:
            keys = []
            for j in range(1, degree // d + 1):
                if n is not None and j > n:
                    break
                rest = degree - 1 - j * d
                if rest >= 0 and rest % 2 == 0:
                    keys.append(("u", rest // 2, j))
            keys.sort(key=lambda k: -k[1])
            return keys
        if degree % d:
            return []
        top = degree // d
        keys = [("g", top - 2 * s, s) for s in range(top // 2 + 1) if top - 2 * s >= 1]
        if top % 2 == 0:
            keys.append(("h", top // 2))
        return keys

    def key_name(self, key) -> str:
        if key == UNIT:
            return UNIT
        if key[0] == "u":
            return f"u[{key[1]},{key[2]}]"
        if key[0] == "g":
            return divided_name(key[1], key[2])
        return divided_name(0, key[1])

    def display_key(self, key):
        if key == UNIT:
            return (-1, 0)
        if key[0] == "g":
            return (0, key[2])
        if key[0] == "h":
            return (0, key[1])
        return (1, key[2])

    def lattice_generators(self, degree: int) -> list[Polynomial]:
        return [self.key_element(k).even for k in self.ambient(degree) if k == UNIT or k[0] != "u"]

    def relation_vectors(self, degree: int) -> list[dict]:
        d = self.d
        n = self.truncation
        rows: list[dict] = []
        if degree % 2 == 1:
            keys = self.ambient(degree)
            rows.extend({k: 2} for k in keys)
            for k in keys:
                _, i, j = k
                if i == 0:
                    rows.append({k: 1})
                    continue
                rel = cz_rewrite(i, j, d, top=n)
                if rel:
                    rows.append({("u",) + ij: 1 for ij in rel})
            return rows
        if n is None or degree % d:
            return rows
        R = self.ring
        for t in range(n + 1, degree // d + 1):
            rt = powersum(t, d).substitute({"e1": R.gen("g"), "e2": R.gen("w")}, R)
            for gen in self.lattice_generators(degree - t * d):
                vec = lattice_vector(rt * gen)
                vec = {k: c for k, c in vec.items() if c}
                if vec:
                    rows.append(vec)
        return rows

    # -- elements -----------------------------------------------------------------
    def algebra(self) -> LatticeAlgebra:
        return LatticeAlgebra(self)

    def to_vector(self, element: LatticeElement):
        if not isinstance(element, LatticeElement):
            raise ElementError(f"{element!r} is not an element of {self.space}")
        d = self.d
        degs = set()
        vec = lattice_vector(element.even)
        if element.even:
            degs.add(element.even.degree())
        n = self.truncation
        for (i, j) in element.u:
            if n is not None and j > n:
                continue
            vec[("u", i, j)] = 1
            degs.add(2 * i + j * d + 1)
        if len(degs) > 1:
            raise ElementError("element is not homogeneous")
        return (degs.pop() if degs else None), vec

    def key_element(self, key) -> LatticeElement:
        R = self.ring
        if key == UNIT:
            return LatticeElement(R.const(1))
        if key[0] == "g":
            return LatticeElement(R.monomial((key[1], key[2])))
        if key[0] == "h":
            return LatticeElement(R.monomial((0, key[1]), 2))
        return LatticeElement(R.zero(), frozenset({(key[1], key[2])}))
