"""Finitely presented abelian groups in a single degree.

A :class:`Quotient` is ``Z^n / span(relations)`` (or the F2 analogue).  The
ambient coordinates are listed in elimination preference: when a relation
has a unit coefficient on some coordinate, the lowest such coordinate is
rewritten in terms of the others.  Coordinates that survive become the
canonical basis.  Only when the leftover relations are not diagonal does the
engine fall back to Smith form, and then the basis vectors are genuine
combinations of ambient coordinates.

The helpers at the bottom compute images, kernels and subquotients for
linear maps between such groups, which is what exactness checks need.
"""

from __future__ import annotations

from typing import Sequence

from . import f2
from .intmat import (
    _euclid_column,
    hermite_basis,
    integer_kernel,
    reduce_by_hermite,
    smith_normal_form,
)

Vector = list[int]


class Quotient:
    """Canonical basis, orders and normal forms for ``Z^n/R`` or ``F2^n/R``.

    ``orders[i]`` is 0 for a free generator and the (finite) order otherwise.
    Over F2 every generator has order 2.
    """

    def __init__(self, n: int, relations: Sequence[Sequence[int]], modulus: int | None = None):
        self.n = n
        self.modulus = modulus
        self.basis: list[Vector] = []
        self.orders: list[int] = []
        self.basis_columns: list[int | None] = []
        if modulus == 2:
            self._init_f2(relations)
        else:
            self._init_z(relations)

    # -- construction -----------------------------------------------------
    def _init_f2(self, relations):
        ech = f2.Echelon(f2.to_bits(r) for r in relations)
        self._ech = ech
        self._free_cols = [j for j in range(self.n) if j not in ech.rows]
        for j in self._free_cols:
            v = [0] * self.n
            v[j] = 1
            self.basis.append(v)
            self.orders.append(2)
            self.basis_columns.append(j)

    def _init_z(self, relations):
        n = self.n
        pool = [list(r) for r in relations if any(r)]
        pivots: list[tuple[int, Vector]] = []
        eliminated = set()
        for col in range(n):
            i = _euclid_column(pool, col)
            if i is None:
                continue
            if abs(pool[i][col]) == 1:
                row = pool.pop(i)
                if row[col] < 0:
                    row = [-x for x in row]
                pivots.append((col, row))
                eliminated.add(col)
        self._pivots = pivots
        rest = [j for j in range(n) if j not in eliminated]
        self._rest = rest
        sub = [[r[j] for j in rest] for r in pool]
        H = hermite_basis(sub, len(rest))
        self._smith = None
        clean = all(sum(1 for x in row if x) == 1 for row in H)
        if clean:
            order_at = {}
            for row in H:
                k = next(k for k, x in enumerate(row) if x)
                order_at[k] = row[k]
            for k, j in enumerate(rest):
                o = order_at.get(k, 0)
                if o == 1:
                    continue
                v = [0] * n
                v[j] = 1
                self.basis.append(v)
                self.orders.append(o)
                self.basis_columns.append(j)
            self._order_at = order_at
        else:
            D, _, V, Vi = smith_normal_form(H, want_inverse=True)
            m = len(rest)
            diag = [D[i][i] if i < len(D) else 0 for i in range(m)]
            keep = []
            for i, dval in enumerate(diag):
                if dval == 1:
                    continue
                v = [0] * n
                for k, j in enumerate(rest):
                    v[j] = Vi[i][k]
                self.basis.append(v)
                self.orders.append(dval)
                self.basis_columns.append(None)
                keep.append(i)
            self._smith = (V, diag, keep)

    # -- queries ----------------------------------------------------------
    @property
    def free_rank(self) -> int:
        return sum(1 for o in self.orders if o == 0)

    @property
    def torsion(self) -> list[int]:
        return [o for o in self.orders if o]

    def __len__(self):
        return len(self.basis)

    def reduce(self, v: Sequence[int]) -> Vector:
        """Representative of ``v`` supported on surviving coordinates."""
        if self.modulus == 2:
            bits = self._ech.reduce(f2.to_bits(v))
            return f2.from_bits(bits, self.n)
        v = list(v)
        for col, row in self._pivots:
            c = v[col]
            if c:
                for k, x in enumerate(row):
                    if x:
                        v[k] -= c * x
        return v

    def coordinates(self, v: Sequence[int]) -> Vector:
        """Coordinates of ``v`` on the canonical basis (torsion reduced)."""
        if len(v) != self.n:
            raise ValueError("vector length differs from ambient rank")
        r = self.reduce(v)
        if self.modulus == 2:
            return [r[j] for j in self._free_cols]
        if self._smith is None:
            out = []
            for j, o in zip(self.basis_columns, self.orders):
                c = r[j]
                out.append(c % o if o else c)
            return out
        V, diag, keep = self._smith
        sub = [r[j] for j in self._rest]
        out = []
        for i in keep:
            c = sum(sub[k] * V[k][i] for k in range(len(sub)))
            out.append(c % diag[i] if diag[i] else c)
        return out

    def is_zero(self, v: Sequence[int]) -> bool:
        return not any(self.coordinates(v))


# -- spans ----------------------------------------------------------------

class Span:
    """Subgroup of Z^n or subspace of F2^n, with canonical equality."""

    def __init__(self, n: int, generators: Sequence[Sequence[int]] = (), modulus: int | None = None):
        self.n = n
        self.modulus = modulus
        gens = [list(g) for g in generators]
        if modulus == 2:
            self._ech = f2.Echelon(f2.to_bits(g) for g in gens)
        else:
            self._basis = hermite_basis(gens, n)

    @property
    def basis(self) -> list[Vector]:
        if self.modulus == 2:
            return [f2.from_bits(self._ech.rows[p], self.n) for p in sorted(self._ech.rows)]
        return [list(b) for b in self._basis]

    @property
    def rank(self) -> int:
        return self._ech.rank if self.modulus == 2 else len(self._basis)

    def contains(self, v: Sequence[int]) -> bool:
        if self.modulus == 2:
            return self._ech.contains(f2.to_bits(v))
        return not any(reduce_by_hermite(self._basis, v))

    def contains_span(self, other: Span) -> bool:
        return all(self.contains(b) for b in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Span):
            return NotImplemented
        return self.n == other.n and self.contains_span(other) and other.contains_span(self)

    def __add__(self, other: Span) -> Span:
        return Span(self.n, self.basis + other.basis, self.modulus)

    def coordinates(self, v: Sequence[int]) -> Vector:
        """Coefficients of ``v`` on :attr:`basis`; raises if ``v`` is outside."""
        basis = self.basis
        v = list(v)
        out = []
        if self.modulus == 2:
            for b in basis:
                p = next(k for k, x in enumerate(b) if x)
                c = v[p] & 1
                out.append(c)
                if c:
                    v = [(x + y) & 1 for x, y in zip(v, b)]
            if any(x & 1 for x in v):
                raise ValueError("vector not in span")
            return out
        for b in basis:
            p = next(k for k, x in enumerate(b) if x)
            q, r = divmod(v[p], b[p])
            if r:
                raise ValueError("vector not in span")
            out.append(q)
            if q:
                v = [x - q * y for x, y in zip(v, b)]
        if any(v):
            raise ValueError("vector not in span")
        return out


def image_span(columns: Sequence[Sequence[int]], target_relations: Sequence[Sequence[int]],
               m: int, modulus: int | None = None) -> Span:
    """Span of the image columns together with the target relations."""
    return Span(m, list(columns) + list(target_relations), modulus)


def kernel_span(columns: Sequence[Sequence[int]], target_relations: Sequence[Sequence[int]],
                n: int, m: int, modulus: int | None = None) -> Span:
    """``{x in ambient^n : sum x_i col_i lies in span(target_relations)}``."""
    if n == 0:
        return Span(0, [], modulus)
    if modulus == 2:
        rel = f2.Echelon(f2.to_bits(r) for r in target_relations)
        # eliminate images while tracking which source vectors produced them
        ech: dict[int, tuple[int, int]] = {}
        kern = []
        for i, col in enumerate(columns):
            v = rel.reduce(f2.to_bits(col))
            combo = 1 << i
            while v:
                p = f2.lowbit(v)
                if p not in ech:
                    break
                rv, rc = ech[p]
                v ^= rv
                combo ^= rc
            if v:
                ech[f2.lowbit(v)] = (v, combo)
            else:
                kern.append(f2.from_bits(combo, n))
        return Span(n, kern, 2)
    rels = hermite_basis(target_relations, m)
    # columns of A: images then relation vectors; kernel projected to sources
    A = [[columns[i][p] for i in range(n)] + [r[p] for r in rels] for p in range(m)]
    if m == 0:
        return Span(n, [[int(i == j) for j in range(n)] for i in range(n)])
    ker = integer_kernel(A, n + len(rels))
    return Span(n, [k[:n] for k in ker])


def subquotient(sub: Span, relations: Sequence[Sequence[int]]) -> tuple[Quotient, list[Vector]]:
    """``sub / span(relations)`` for relations lying inside ``sub``.

    Returns the quotient in the coordinates of ``sub.basis`` together with
    that basis, so callers can map generators back to the ambient space.
    """
    basis = sub.basis
    coords = [sub.coordinates(r) for r in relations]
    return Quotient(len(basis), coords, sub.modulus), basis
