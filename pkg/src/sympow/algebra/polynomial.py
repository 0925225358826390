"""Sparse multivariate polynomials over Z or Z/2 in graded variables.

A polynomial is an immutable mapping from exponent tuples to nonzero
integer coefficients.  Exponent tuples are indexed by the variables of a
:class:`PolyRing`, which always lists its variables in a fixed global order
so that printing and canonical bases are reproducible.

>>> R = PolyRing([GradedVariable("e1", 2), GradedVariable("e2", 4)])
>>> e1, e2 = R.gen("e1"), R.gen("e2")
>>> str(e1**3 - 3*e1*e2)
'e1^3 - 3*e1*e2'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

GLOBAL_ORDER = (
    "a", "c", "z", "z1", "z2", "m", "x", "y", "t", "s",
    "g", "w", "l1", "l2", "e1", "e2", "x1", "x2",
)


class CoefficientMismatch(ValueError):
    """Operands live over different coefficient rings or variable sets."""


class InhomogeneousError(ValueError):
    """A polynomial that was required to be homogeneous is not."""


@dataclass(frozen=True)
class GradedVariable:
    name: str
    degree: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"variable {self.name} must have positive degree")


def _order_key(name: str) -> tuple[int, str]:
    try:
        return (GLOBAL_ORDER.index(name), name)
    except ValueError:
        return (len(GLOBAL_ORDER), name)


class PolyRing:
    """Polynomial ring over Z (``modulus=None``) or Z/2 (``modulus=2``)."""

    __slots__ = ("variables", "modulus", "_index", "_hash")

    def __init__(self, variables: Iterable[GradedVariable], modulus: int | None = None):
        vs = sorted(variables, key=lambda v: _order_key(v.name))
        names = [v.name for v in vs]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if modulus not in (None, 2):
            raise ValueError("only Z and Z/2 coefficients are supported")
        self.variables: tuple[GradedVariable, ...] = tuple(vs)
        self.modulus = modulus
        self._index = {v.name: i for i, v in enumerate(vs)}
        self._hash = hash((self.variables, modulus))

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        base = "F2" if self.modulus == 2 else "Z"
        gens = ",".join(f"{v.name}:{v.degree}" for v in self.variables)
        return f"{base}[{gens}]"

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(v.degree for v in self.variables)

    def has(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        return self._index[name]

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def const(self, c: int) -> Polynomial:
        return Polynomial(self, {self.unit_exps(): c})

    def unit_exps(self) -> tuple[int, ...]:
        return (0,) * len(self.variables)

    def gen(self, name: str) -> Polynomial:
        exps = [0] * len(self.variables)
        exps[self._index[name]] = 1
        return Polynomial(self, {tuple(exps): 1})

    def monomial(self, exps: Mapping[str, int] | tuple[int, ...], coeff: int = 1) -> Polynomial:
        return Polynomial(self, {self.exps(exps): coeff})

    def exps(self, exps: Mapping[str, int] | tuple[int, ...]) -> tuple[int, ...]:
        """Normalize a name->exponent mapping to an exponent tuple."""
        if isinstance(exps, tuple):
            if len(exps) != len(self.variables):
                raise ValueError("exponent tuple has wrong length")
            return exps
        out = [0] * len(self.variables)
        for name, e in exps.items():
            out[self._index[name]] = e
        return tuple(out)

    def monomial_degree(self, exps: tuple[int, ...]) -> int:
        return sum(e * v.degree for e, v in zip(exps, self.variables))

    def monomials(self, degree: int) -> list[tuple[int, ...]]:
        """All exponent tuples of the given degree, in descending grlex order."""
        return list(_monomials(self.degrees, degree))

    def with_modulus(self, modulus: int | None) -> PolyRing:
        return PolyRing(self.variables, modulus)

    def format_monomial(self, exps: tuple[int, ...]) -> str:
        parts = []
        for e, v in zip(exps, self.variables):
            if e == 1:
                parts.append(v.name)
            elif e > 1:
                parts.append(f"{v.name}^{e}")
        return "*".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def _monomials(degrees: tuple[int, ...], degree: int) -> tuple[tuple[int, ...], ...]:
    if degree < 0:
        return ()
    if not degrees:
        return ((),) if degree == 0 else ()
    out = []
    first, rest = degrees[0], degrees[1:]
    for e in range(degree // first, -1, -1):
        for tail in _monomials(rest, degree - e * first):
            out.append((e,) + tail)
    return tuple(out)


Scalar = Union[int, "Polynomial"]


class Polynomial:
    """Immutable sparse polynomial.  Zero coefficients are never stored."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple[int, ...], int]):
        mod = ring.modulus
        clean = {}
        for exps, c in terms.items():
            if mod is not None:
                c %= mod
            if c:
                clean[exps] = c
        self.ring = ring
        self.terms: dict[tuple[int, ...], int] = clean
        self._hash = None

    # -- coercion helpers -------------------------------------------------
    def _coerce(self, other: Scalar) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise CoefficientMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: Scalar) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Scalar) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Scalar) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return iter(self.sorted_terms())

    def __len__(self):
        return len(self.terms)

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Mapping[str, int] | tuple[int, ...]) -> int:
        return self.terms.get(self.ring.exps(exps), 0)

    def degree(self) -> int | None:
        """Common degree of all terms; ``None`` for zero."""
        degs = {self.ring.monomial_degree(e) for e in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise InhomogeneousError(f"{self} is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({self.ring.monomial_degree(e) for e in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        deg = self.ring.monomial_degree
        return sorted(self.terms.items(), key=lambda t: (deg(t[0]), t[0]), reverse=True)

    # -- transformations --------------------------------------------------
    def exact_div(self, k: int) -> Polynomial:
        if k == 0:
            raise ZeroDivisionError("division by zero")
        out = {}
        for e, c in self.terms.items():
            q, r = divmod(c, k)
            if r:
                raise ValueError(f"{self} is not divisible by {k}")
            out[e] = q
        return Polynomial(self.ring, out)

    def change_ring(self, ring: PolyRing) -> Polynomial:
        """Re-embed into ``ring`` by variable name, reducing coefficients."""
        idx = [ring.index(v.name) if ring.has(v.name) else None for v in self.ring.variables]
        out: dict[tuple[int, ...], int] = {}
        n = len(ring.variables)
        for e, c in self.terms.items():
            new = [0] * n
            for i, x in enumerate(e):
                if x:
                    if idx[i] is None:
                        raise CoefficientMismatch(
                            f"variable {self.ring.variables[i].name} missing from {ring!r}"
                        )
                    new[idx[i]] = x
            t = tuple(new)
            out[t] = out.get(t, 0) + c
        return Polynomial(ring, out)

    def substitute(
        self,
        images: Mapping[str, Polynomial],
        target: PolyRing | None = None,
        check_degrees: bool = True,
    ) -> Polynomial:
        """Replace variables by polynomials in ``target``.

        Variables without an image must exist in ``target`` and map to
        themselves.  With ``check_degrees`` every image must be homogeneous of
        the variable's degree, so homogeneous inputs stay homogeneous.
        """
        if target is None:
            target = next(iter(images.values())).ring if images else self.ring
        gens = []
        for v in self.ring.variables:
            img = images.get(v.name)
            if img is None:
                img = target.gen(v.name) if target.has(v.name) else None
                if img is None:
                    raise CoefficientMismatch(f"no image for variable {v.name}")
            if img.ring != target:
                raise CoefficientMismatch(f"image of {v.name} lives in {img.ring!r}")
            if check_degrees and img and img.degree() != v.degree:
                raise InhomogeneousError(
                    f"image of {v.name} has degree {img.degree()}, expected {v.degree}"
                )
            gens.append(img)
        powers: list[dict[int, Polynomial]] = [{0: target.const(1)} for _ in gens]

        def power(i: int, k: int) -> Polynomial:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * gens[i]
            return cache[k]

        acc: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for te, tc in term.terms.items():
                acc[te] = acc.get(te, 0) + tc
        return Polynomial(target, acc)

    def map_terms(self, fn) -> Polynomial:
        """Apply ``fn(exps, coeff) -> Polynomial | None`` termwise and sum."""
        acc: dict[tuple[int, ...], int] = {}
        ring = None
        for e, c in self.terms.items():
            p = fn(e, c)
            if p is None:
                continue
            ring = p.ring
            for te, tc in p.terms.items():
                acc[te] = acc.get(te, 0) + tc
        if ring is None:
            return self.ring.zero()
        return Polynomial(ring, acc)

    # -- printing ---------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = self.ring.format_monomial(e)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial({self})"


def poly_arith(op: str, *operands: Polynomial, images: Mapping[str, Polynomial] | None = None,
               target: PolyRing | None = None) -> Polynomial:
    """Dispatch ``add``, ``mul`` or ``substitute`` on polynomials.

    >>> R = PolyRing([GradedVariable("m", 2)])
    >>> str(poly_arith("add", R.gen("m"), R.gen("m")))
    '2*m'
    """
    if op == "add":
        out = operands[0]
        for p in operands[1:]:
            out = out + p
        return out
    if op == "mul":
        out = operands[0]
        for p in operands[1:]:
            out = out * p
        return out
    if op == "substitute":
        if len(operands) != 1 or images is None:
            raise ValueError("substitute takes one polynomial and an images mapping")
        return operands[0].substitute(images, target)
    raise ValueError(f"unknown operation {op!r}")
