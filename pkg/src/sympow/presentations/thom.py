"""Mod 2 rings built on a Thom class ``t`` with ``t^2 = m*t``.

The positive-degree part is the free module ``G*.t`` over
``G* = F2[a, m, y]/(a*m)``, so a degree ``D`` piece is spanned by
``a^i m^j y^k t`` of that degree.  Optional quotients:

* truncation by ``(nu[n], nu[n+1]).t``;
* the boundary classes ``delta[k]`` (all k, or ``k <= n`` when truncated).

The boundary classes annihilate everything of positive degree, so the
ideal they generate is just their span.
"""

from __future__ import annotations

from ..algebra.polynomial import Polynomial
from ..cli.expr import ElementError
from ..fibonacci import delta, gamma_ring, nu, thom_ring
from .base import BasisElement, GradedPiece, Presentation, SpaceId, check_homogeneous, monomial_multiples

UNIT = "1"


class ThomAlgebra:
    def __init__(self, pres: ThomMod2):
        self.pres = pres
        R = pres.ring
        d = pres.d
        self.tokens = {
            "a": R.gen("a"), "m": R.gen("m"), "y": R.gen("y"), "t": R.gen("t"),
            "x": R.gen("a") ** d + R.gen("m"),
        }

    def const(self, n: int) -> Polynomial:
        return self.pres.ring.const(n)

    def gen(self, name: str, idx: tuple, offset: int) -> Polynomial:
        if name == "delta":
            return delta(idx[0], self.pres.d)
        img = self.tokens.get(name)
        if img is None:
            raise ElementError(f"generator {name} is not available in {self.pres.space}", offset)
        return img

    def divide(self, value: Polynomial, k: int) -> Polynomial:
        raise ElementError("division is not defined over Z/2")


class ThomMod2(Presentation):
    def __init__(self, space: SpaceId, kill_deltas: bool):
        super().__init__(space, "F2")
        d = space.d
        self.ring = thom_ring(d)
        self.gring = gamma_ring(d, "F2")
        self.kill_deltas = kill_deltas
        n = space.n
        self.truncation = n
        self.variables = self.ring.variables
        am = self.gring.exps({"a": 1, "m": 1})
        self._killed = (am,)
        rels = []
        if n is not None:
            rels = [nu(n, d, "F2"), nu(n + 1, d, "F2")]
        self.nu_relations = tuple(rels)
        t = self.ring.gen("t")
        self.relations = tuple(r.change_ring(self.ring) * t for r in rels)
        rules = ["t^2 = m*t", "a*m = 0"]
        if kill_deltas:
            top = "k >= 1" if n is None else f"1 <= k <= {n}"
            rules.append(f"delta[k] = 0 for {top}")
        self.product_rules = tuple(rules)

    # -- keys ---------------------------------------------------------------------
    def ambient(self, degree: int) -> list:
        if degree == 0:
            return [UNIT]
        d = self.d
        if degree < d:
            return []
        keys = [(e[0], e[1], e[2], 1)
                for e in monomial_multiples(self.gring, degree - d, self._killed)]
        # high powers of y, then of m, are rewritten first
        keys.sort(key=lambda k: (k[2], k[1]), reverse=True)
        return keys

    def key_name(self, key) -> str:
        return UNIT if key == UNIT else self.ring.format_monomial(key)

    def display_key(self, key):
        return (-1, -1) if key == UNIT else (key[1], key[2])

    def relation_vectors(self, degree: int) -> list[dict]:
        if degree == 0:
            return []
        d = self.d
        rows = []
        for r in self.nu_relations:
            rd = r.degree()
            for mu in monomial_multiples(self.gring, degree - d - rd, self._killed):
                p = r * self.gring.monomial(mu)
                vec = {(e[0], e[1], e[2], 1): 1 for e in p.terms if not (e[0] and e[1])}
                if vec:
                    rows.append(vec)
        if self.kill_deltas and (degree - 1) % d == 0:
            k = (degree - 1) // d
            if self.truncation is None or k <= self.truncation:
                rows.append(dict.fromkeys(delta(k, d).terms, 1))
        return rows

    def alias(self, piece: GradedPiece, b: BasisElement) -> BasisElement:
        if self.truncation is None or not self.kill_deltas or len(b.vector) != 1:
            return b
        key = b.vector[0][0]
        if key == UNIT or (key[0] == 0 and key[2] == 0):
            return b
        alt = _alias_candidates(piece)
        return BasisElement(b.name, b.vector, b.order, alt.get(key))

    # -- elements -----------------------------------------------------------------
    def algebra(self) -> ThomAlgebra:
        return ThomAlgebra(self)

    def to_vector(self, element: Polynomial):
        if not isinstance(element, Polynomial) or element.ring != self.ring:
            raise ElementError(f"{element!r} is not an element of {self.space}")
        vec: dict = {}
        for (i, j, k, l), c in element.terms.items():
            if l == 0:
                if i or j or k:
                    raise ElementError(f"{element} has a term outside the Thom module")
                key = UNIT
            else:
                j += l - 1
                if i and j:
                    continue
                key = (i, j, k, 1)
            vec[key] = (vec.get(key, 0) + c) % 2
        vec = {k: c for k, c in vec.items() if c}
        probe = Polynomial(self.ring, {(0, 0, 0, 0) if k == UNIT else k: 1 for k in vec})
        return check_homogeneous(probe), vec

    def key_element(self, key) -> Polynomial:
        if key == UNIT:
            return self.ring.const(1)
        return self.ring.monomial(key)


def _alias_candidates(piece: GradedPiece) -> dict:
    """Map surviving keys to a pure power ``m^i*t`` equal to them."""
    surviving = set()
    for b in piece.quotient.basis_columns:
        if b is not None:
            surviving.add(piece.keys[b])
    out = {}
    for k in piece.keys:
        if k == UNIT or k in surviving or k[0] or k[2]:
            continue
        coords = piece.quotient.coordinates(piece.dense({k: 1}))
        hits = [i for i, c in enumerate(coords) if c]
        if len(hits) == 1:
            col = piece.quotient.basis_columns[hits[0]]
            if col is not None:
                out.setdefault(piece.keys[col], piece.names[k])
    return out
