"""Integral cohomology of the Thom space MP.

Even part: free on ``m^q y^r s`` with ``s^2 = (m^2 - 4y) s`` and ``c s = 0``.
Odd part: order-2 classes ``c^i delta[j]``, images of ``c^i z^j`` under the
boundary map, subject to the rewriting

    c^(j d/2 + k) delta[j] = sum_{0<l<=j} C(j,l) c^((j-l) d/2 + k) delta[j+l]

which leaves the basis ``c^i delta[j]`` with ``0 <= i < j d/2``.  The ring
``Z* = Z[c,m,y]/(2c, cm)`` acts on boundary classes through ``p3*``, so
``m delta = 0`` and ``y delta[j] = c^(d/2) delta[j+1] + delta[j+2]``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from ..algebra.polynomial import GradedVariable, Polynomial, PolyRing
from ..cli.expr import ElementError
from ..fibonacci import gamma_ring, reduce_gamma
from .base import Presentation, SpaceId

UNIT = "1"


@lru_cache(maxsize=None)
def s_ring(d: int) -> PolyRing:
    return PolyRing([GradedVariable("m", d), GradedVariable("y", 2 * d)])


def boundary_name(i: int, j: int) -> str:
    if i == 0:
        return f"delta[{j}]"
    if i == 1:
        return f"c*delta[{j}]"
    return f"c^{i}*delta[{j}]"


def cz_rewrite(i: int, j: int, d: int, top: int | None = None) -> dict | None:
    """The rewriting relation led by ``c^i z^j`` (needs ``i >= j d/2``).

    Returns ``{(i', j'): 1}`` over Z/2, dropping ``z`` powers above ``top``.
    """
    half = d // 2
    k = i - j * half
    if k < 0:
        return None
    out = {(i, j): 1}
    for l in range(1, j + 1):
        if comb(j, l) % 2 and (top is None or j + l <= top):
            key = ((j - l) * half + k, j + l)
            out[key] = out.get(key, 0) ^ 1
    return {key: 1 for key, c in out.items() if c}


def act_on_boundary(u: Polynomial, classes: frozenset, d: int) -> frozenset:
    """``u . delta(v)`` for ``u`` in ``Z*`` via ``delta(p3*(u) v)``, over Z/2."""
    R = u.ring
    ci, mi, yi = R.index("c"), R.index("m"), R.index("y")
    half = d // 2
    acc: dict = {}
    for e, coef in u.terms.items():
        if e[mi] or coef % 2 == 0:
            continue  # p3*(m) = 2z
        a, ey = e[ci], e[yi]
        for l in range(ey + 1):
            if comb(ey, l) % 2 == 0:
                continue
            for (i, j) in classes:
                key = (i + a + (ey - l) * half, j + ey + l)
                acc[key] = acc.get(key, 0) ^ 1
    return frozenset(k for k, v in acc.items() if v)


class MPElement:
    """``zpart + spart*s + sum delta-classes``; ``zpart`` acts from ``Z*``."""

    __slots__ = ("d", "zpart", "spart", "dpart")

    def __init__(self, d: int, zpart: Polynomial, spart: Polynomial, dpart: frozenset = frozenset()):
        self.d = d
        self.zpart = reduce_gamma(zpart)
        self.spart = spart
        self.dpart = frozenset(dpart)

    def _lift(self, other):
        if isinstance(other, MPElement):
            return other
        if isinstance(other, int):
            return MPElement(self.d, self.zpart.ring.const(other), self.spart.ring.zero())
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return MPElement(self.d, self.zpart + other.zpart, self.spart + other.spart,
                         self.dpart ^ other.dpart)

    __radd__ = __add__

    def __neg__(self):
        return MPElement(self.d, -self.zpart, -self.spart, self.dpart)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        d = self.d
        S = self.spart.ring
        m, y = S.gen("m"), S.gen("y")
        z1, z2 = self.zpart, other.zpart
        s = _drop_c(z1, S) * other.spart + _drop_c(z2, S) * self.spart
        s = s + self.spart * other.spart * (m * m - 4 * y)
        dl = act_on_boundary(z1, other.dpart, d) ^ act_on_boundary(z2, self.dpart, d)
        return MPElement(d, z1 * z2, s, dl)

    __rmul__ = __mul__

    def __repr__(self):
        return f"MPElement({self.zpart}, {self.spart}, {sorted(self.dpart)})"


def _drop_c(p: Polynomial, target: PolyRing) -> Polynomial:
    ci = p.ring.index("c")
    keep = {e: c for e, c in p.terms.items() if e[ci] == 0}
    return Polynomial(p.ring, keep).change_ring(target)


class MPAlgebra:
    def __init__(self, pres: MPIntegral):
        self.pres = pres
        d = pres.d
        G, S = pres.zring, pres.sring
        zero_s = S.zero()
        self.tokens = {
            "c": MPElement(d, G.gen("c"), zero_s),
            "m": MPElement(d, G.gen("m"), zero_s),
            "y": MPElement(d, G.gen("y"), zero_s),
            "x": MPElement(d, G.gen("m") + G.gen("c") ** (d // 2), zero_s),
            "s": MPElement(d, G.zero(), S.const(1)),
        }

    def const(self, n: int) -> MPElement:
        return MPElement(self.pres.d, self.pres.zring.const(n), self.pres.sring.zero())

    def gen(self, name: str, idx: tuple, offset: int) -> MPElement:
        if name == "delta":
            if idx[0] < 1:
                raise ElementError("delta[j] needs j >= 1", offset)
            return MPElement(self.pres.d, self.pres.zring.zero(), self.pres.sring.zero(),
                             frozenset({(0, idx[0])}))
        tok = self.tokens.get(name)
        if tok is None:
            raise ElementError(f"generator {name} is not available in {self.pres.space}", offset)
        return tok

    def divide(self, value: MPElement, k: int) -> MPElement:
        if value.dpart:
            raise ElementError("order-2 classes cannot be divided")
        try:
            return MPElement(value.d, value.zpart.exact_div(k), value.spart.exact_div(k))
        except ValueError:
            raise ElementError(f"element is not divisible by {k}") from None


class MPIntegral(Presentation):
    def __init__(self, space: SpaceId):
        super().__init__(space, "Z")
        d = space.d
        self.zring = gamma_ring(d, "Z")
        self.sring = s_ring(d)
        self.variables = (GradedVariable("s", 2 * d),)
        self.product_rules = (
            "s^2 = (m^2 - 4*y)*s", "c*s = 0", "m*delta[j] = 0", "s*delta[j] = 0",
            "delta[i]*delta[j] = 0", "y*delta[j] = c^(d/2)*delta[j+1] + delta[j+2]",
            "c^(j*d/2)*delta[j] = sum_{0<i<=j} C(j,i)*c^((j-i)*d/2)*delta[j+i]",
        )

    def ambient(self, degree: int) -> list:
        d = self.d
        if degree == 0:
            return [UNIT]
        if degree % 2 == 1:
            keys = []
            for j in range(1, degree // d + 1):
                rest = degree - 1 - j * d
                if rest >= 0 and rest % 2 == 0:
                    keys.append(("d", rest // 2, j))
            keys.sort(key=lambda k: -k[1])
            return keys
        rest = degree - 2 * d
        if rest < 0 or rest % d:
            return []
        top = rest // d
        return [("s", top - 2 * r, r) for r in range(top // 2 + 1)]

    def key_name(self, key) -> str:
        if key == UNIT:
            return UNIT
        if key[0] == "d":
            return boundary_name(key[1], key[2])
        S = self.sring
        mono = S.format_monomial((key[1], key[2]))
        return "s" if mono == "1" else f"{mono}*s"

    def display_key(self, key):
        if key == UNIT:
            return (-1, 0)
        if key[0] == "s":
            return (0, key[2])
        return (1, key[2])

    def relation_vectors(self, degree: int) -> list[dict]:
        if degree % 2 == 0:
            return []
        keys = self.ambient(degree)
        rows = [{k: 2} for k in keys]
        for k in keys:
            rel = cz_rewrite(k[1], k[2], self.d)
            if rel:
                rows.append({("d",) + ij: 1 for ij in rel})
        return rows

    def algebra(self) -> MPAlgebra:
        return MPAlgebra(self)

    def to_vector(self, element: MPElement):
        if not isinstance(element, MPElement):
            raise ElementError(f"{element!r} is not an element of {self.space}")
        z = element.zpart
        if z and z.degree() != 0:
            raise ElementError(f"{z} alone is not a class of {self.space}")
        vec: dict = {}
        degs = set()
        if z:
            vec[UNIT] = z.coefficient(z.ring.unit_exps())
            degs.add(0)
        d = self.d
        for (q, r), c in element.spart.terms.items():
            vec[("s", q, r)] = c
            degs.add(q * d + 2 * r * d + 2 * d)
        for (i, j) in element.dpart:
            vec[("d", i, j)] = 1
            degs.add(2 * i + j * d + 1)
        if len(degs) > 1:
            raise ElementError("element is not homogeneous")
        return (degs.pop() if degs else None), vec

    def key_element(self, key) -> MPElement:
        d = self.d
        if key == UNIT:
            return MPElement(d, self.zring.const(1), self.sring.zero())
        if key[0] == "s":
            return MPElement(d, self.zring.zero(), self.sring.monomial((key[1], key[2])))
        return MPElement(d, self.zring.zero(), self.sring.zero(), frozenset({(key[1], key[2])}))
