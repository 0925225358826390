"""Space identifiers, graded pieces, and the presentation base class."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from ..algebra.polynomial import GradedVariable, Polynomial
from ..algebra.quotient import Quotient
from ..cli.expr import ElementError, ElementExpr, evaluate, parse_element

COEFFS = ("Z", "F2")
FIELDS = {"C": 2, "H": 4}

# kind -> (label when infinite, label when truncated)
_LABELS = {
    "KP": ("KPinf", "KPn"),
    "RP": ("RPinf", None),
    "RK": ("RKinf", "RKn"),
    "Gamma": ("Gamma", "GammaN"),
    "Borel": ("Borel", "BorelN"),
    "MP": ("MP", "ThN"),
    "SP2": ("SP2", "SP2N"),
}

_ALIASES = {
    "kpn": ("KP", True), "kpinf": ("KP", False), "kp": ("KP", None),
    "rpinf": ("RP", False), "rp": ("RP", False),
    "rkn": ("RK", True), "rkinf": ("RK", False), "bf": ("RK", False), "rk": ("RK", None),
    "gamma": ("Gamma", None), "bp": ("Gamma", None), "gamman": ("Gamma", True),
    "borel": ("Borel", None), "b": ("Borel", None), "boreln": ("Borel", True),
    "mp": ("MP", None), "thn": ("MP", True), "th": ("MP", True),
    "sp2": ("SP2", None), "sp2n": ("SP2", True),
}


class UnsupportedCombination(ValueError):
    """The requested (space, coefficients) pair has no presentation."""


class UnsupportedOperation(ValueError):
    """The presentation is additive only and has no products or elements."""


@dataclass(frozen=True)
class SpaceId:
    kind: str
    field: str = "C"
    n: int | None = None

    def __post_init__(self):
        if self.kind not in _LABELS:
            raise ValueError(f"unknown space kind {self.kind!r}")
        if self.field not in FIELDS:
            raise ValueError(f"field must be C or H, not {self.field!r}")
        if self.n is not None:
            if _LABELS[self.kind][1] is None:
                raise ValueError(f"{self.kind} has no truncated variant")
            low = 0 if self.kind == "KP" else 1
            if self.n < low:
                raise ValueError(f"truncation must be at least {low}")

    @property
    def d(self) -> int:
        return FIELDS[self.field]

    @property
    def label(self) -> str:
        inf, fin = _LABELS[self.kind]
        return inf if self.n is None else fin

    def truncated(self, n: int | None) -> SpaceId:
        return SpaceId(self.kind, self.field, n)

    def __str__(self):
        n = "" if self.n is None else f"(n={self.n})"
        return f"{self.label}{n}[{self.field}]"

    @classmethod
    def parse(cls, name: str, field: str = "C", n: int | None = None) -> SpaceId:
        """Accept CLI names such as ``sp2n``, ``bf``, ``kpinf``."""
        key = name.lower()
        if key not in _ALIASES:
            raise ValueError(f"unknown space {name!r}")
        kind, truncated = _ALIASES[key]
        if truncated is True and n is None:
            raise ValueError(f"space {name!r} needs a finite --n")
        if truncated is False and n is not None:
            raise ValueError(f"space {name!r} does not take a finite --n")
        return cls(kind, field, n)


@dataclass(frozen=True)
class BasisElement:
    name: str
    vector: tuple  # ((key, coefficient), ...)
    order: int  # 0 for infinite order
    alias: str | None = None

    @property
    def display(self) -> str:
        return self.name if self.alias is None else f"{self.name}={self.alias}"

    @property
    def order_text(self) -> str:
        return "inf" if self.order == 0 else str(self.order)


def _format_coeff_name(c: int, name: str, first: bool) -> str:
    mag = abs(c)
    if mag == 1:
        body = name
    else:
        compound = any(ch in name for ch in "*/+- =")
        body = f"{mag}*({name})" if compound else f"{mag}*{name}"
    if first:
        return ("-" if c < 0 else "") + body
    return ("- " if c < 0 else "+ ") + body


def render_combination(terms: Iterable[tuple[str, int]]) -> str:
    live = [(name, c) for name, c in terms if c]
    if not live:
        return "0"
    return " ".join(_format_coeff_name(c, name, i == 0) for i, (name, c) in enumerate(live))


@dataclass(frozen=True)
class Expansion:
    """Coordinates of an element on a canonical graded basis."""

    degree: int
    terms: tuple  # ((BasisElement, coefficient), ...), zero terms dropped

    def as_dict(self) -> dict[str, int]:
        return {b.name: c for b, c in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        return render_combination((b.name, c) for b, c in self.terms)


class GradedPiece:
    """The abelian group of one degree with its canonical basis."""

    def __init__(self, space: SpaceId, coeff: str, degree: int, keys: Sequence[Hashable],
                 names: Mapping[Hashable, str], relations: Sequence[Mapping[Hashable, int]],
                 display_key=None, alias_fn=None):
        self.space = space
        self.coeff = coeff
        self.degree = degree
        self.keys = list(keys)
        self.index = {k: i for i, k in enumerate(self.keys)}
        self.names = dict(names)
        self.modulus = 2 if coeff == "F2" else None
        dense = [self.dense(r) for r in relations]
        self.relations = dense
        self.quotient = Quotient(len(self.keys), dense, self.modulus)
        elements = []
        for vec, order in zip(self.quotient.basis, self.quotient.orders):
            support = [(self.keys[j], c) for j, c in enumerate(vec) if c]
            if len(support) == 1 and support[0][1] == 1:
                name = self.names[support[0][0]]
            else:
                name = render_combination((self.names[k], c) for k, c in support)
            elements.append(BasisElement(name, tuple(support), order))
        perm = list(range(len(elements)))
        if display_key is not None:
            def sort_key(i):
                sup = elements[i].vector
                if len(sup) == 1:
                    return (0, display_key(sup[0][0]), "")
                return (1, (), elements[i].name)
            perm.sort(key=sort_key)
        self._perm = perm
        self.basis: list[BasisElement] = [elements[i] for i in perm]
        if alias_fn is not None:
            self.basis = [alias_fn(self, b) for b in self.basis]

    # -- shape ---------------------------------------------------------------
    @property
    def free(self) -> list[BasisElement]:
        if self.modulus == 2:
            return list(self.basis)
        return [b for b in self.basis if b.order == 0]

    @property
    def torsion(self) -> list[BasisElement]:
        if self.modulus == 2:
            return []
        return [b for b in self.basis if b.order != 0]

    @property
    def ranks(self) -> tuple[int, int]:
        """(free rank, number of order-2 summands); over F2 the dimension."""
        if self.modulus == 2:
            return (len(self.basis), 0)
        if any(b.order not in (0, 2) for b in self.basis):
            raise ValueError(f"{self.space} degree {self.degree} has torsion other than 2")
        return (len(self.free), len(self.torsion))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        names = ", ".join(b.display for b in self.basis)
        return f"<GradedPiece {self.space} {self.coeff} deg {self.degree}: {names}>"

    # -- vectors -------------------------------------------------------------
    def dense(self, vec: Mapping[Hashable, int]) -> list[int]:
        out = [0] * len(self.keys)
        for k, c in vec.items():
            if not c:
                continue
            i = self.index.get(k)
            if i is None:
                raise KeyError(f"{k!r} is not an ambient generator in degree {self.degree}")
            out[i] += c
        return out

    def coordinates(self, vec: Mapping[Hashable, int]) -> list[int]:
        raw = self.quotient.coordinates(self.dense(vec))
        return [raw[i] for i in self._perm]

    def expand(self, vec: Mapping[Hashable, int]) -> Expansion:
        coords = self.coordinates(vec)
        return Expansion(self.degree, tuple((b, c) for b, c in zip(self.basis, coords) if c))

    def is_zero(self, vec: Mapping[Hashable, int]) -> bool:
        return not any(self.coordinates(vec))

    def element_vector(self, b: BasisElement) -> dict:
        return dict(b.vector)


def zero_piece(space: SpaceId, coeff: str, degree: int) -> GradedPiece:
    return GradedPiece(space, coeff, degree, [], {}, [])


class Presentation:
    """Common machinery: subclasses describe ambient generators and relations.

    Subclasses implement :meth:`ambient`, :meth:`key_name`,
    :meth:`relation_vectors`, and for ring presentations :meth:`algebra`,
    :meth:`to_vector` and :meth:`key_element`.
    """

    additive_only = False
    variables: tuple[GradedVariable, ...] = ()
    relations: tuple[Polynomial, ...] = ()
    product_rules: tuple[str, ...] = ()

    def __init__(self, space: SpaceId, coeff: str):
        if coeff not in COEFFS:
            raise ValueError(f"coefficients must be Z or F2, not {coeff!r}")
        self.space = space
        self.coeff = coeff
        self._cache: dict[int, GradedPiece] = {}
        self._lock = threading.Lock()

    @property
    def d(self) -> int:
        return self.space.d

    @property
    def modulus(self) -> int | None:
        return 2 if self.coeff == "F2" else None

    def __repr__(self):
        return f"<{type(self).__name__} {self.space} {self.coeff}>"

    # -- to be provided -------------------------------------------------------
    def ambient(self, degree: int) -> list[Hashable]:
        raise NotImplementedError

    def key_name(self, key: Hashable) -> str:
        raise NotImplementedError

    def relation_vectors(self, degree: int) -> list[dict]:
        raise NotImplementedError

    def display_key(self, key: Hashable):
        return None

    def alias(self, piece: GradedPiece, b: BasisElement) -> BasisElement:
        return b

    # -- graded pieces ----------------------------------------------------------
    def piece(self, degree: int) -> GradedPiece:
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        hit = self._cache.get(degree)
        if hit is not None:
            return hit
        piece = self._build_piece(degree)
        with self._lock:
            self._cache.setdefault(degree, piece)
        return self._cache[degree]

    def _build_piece(self, degree: int) -> GradedPiece:
        keys = self.ambient(degree)
        names = {k: self.key_name(k) for k in keys}
        rels = self.relation_vectors(degree) if keys else []
        dk = self.display_key if type(self).display_key is not Presentation.display_key else None
        af = self.alias if type(self).alias is not Presentation.alias else None
        return GradedPiece(self.space, self.coeff, degree, keys, names, rels, dk, af)

    def ranks(self, max_degree: int) -> list[tuple[int, int]]:
        return [self.piece(k).ranks for k in range(max_degree + 1)]

    # -- elements ---------------------------------------------------------------
    def algebra(self):
        raise UnsupportedOperation(f"{self.space} over {self.coeff} is additive only")

    def to_vector(self, element) -> tuple[int | None, dict]:
        """``(degree, ambient vector)``; degree ``None`` for zero."""
        raise UnsupportedOperation(f"{self.space} over {self.coeff} is additive only")

    def key_element(self, key: Hashable):
        raise UnsupportedOperation(f"{self.space} over {self.coeff} is additive only")

    def element(self, expr: str | ElementExpr):
        if isinstance(expr, str):
            expr = parse_element(expr)
        return evaluate(expr, self.algebra())

    def basis_element(self, b: BasisElement):
        out = None
        for key, c in b.vector:
            e = self.key_element(key) * c
            out = e if out is None else out + e
        return out

    def normal_form(self, element) -> Expansion:
        if isinstance(element, (str, ElementExpr)):
            element = self.element(element)
        degree, vec = self.to_vector(element)
        if degree is None:
            return Expansion(0, ())
        return self.piece(degree).expand(vec)

    def multiply(self, x, y) -> Expansion:
        if isinstance(x, (str, ElementExpr)):
            x = self.element(x)
        if isinstance(y, (str, ElementExpr)):
            y = self.element(y)
        return self.normal_form(x * y)


def monomial_multiples(ring, degree: int, killed) -> list[tuple[int, ...]]:
    """Monomials of ``ring`` in ``degree`` not divisible by any killed monomial."""
    out = []
    for e in ring.monomials(degree):
        if not any(all(a >= b for a, b in zip(e, k)) for k in killed):
            out.append(e)
    return out


def check_homogeneous(p: Polynomial) -> int | None:
    try:
        return p.degree()
    except ValueError:
        raise ElementError(f"{p} is not homogeneous") from None
