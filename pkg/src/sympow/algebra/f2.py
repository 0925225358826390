"""Linear algebra over Z/2 with rows stored as Python int bitmasks.

Bit ``j`` of a row is the entry in column ``j``.  Pivots are taken at the
lowest set bit, so lower-indexed columns are eliminated first.

>>> f2_solve("kernel", [[1, 1]])
[[1, 1]]
"""

from __future__ import annotations

from typing import Sequence


def to_bits(vec: Sequence[int]) -> int:
    out = 0
    for j, x in enumerate(vec):
        if x & 1:
            out |= 1 << j
    return out


def from_bits(bits: int, n: int) -> list[int]:
    return [(bits >> j) & 1 for j in range(n)]


def lowbit(x: int) -> int:
    return (x & -x).bit_length() - 1


class Echelon:
    """Reduced echelon basis of a subspace of F2^n, keyed by pivot column."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[int] = ()):
        self.rows: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def reduce(self, v: int) -> int:
        # rows are fully reduced, so one pass over the pivots suffices
        for p, r in self.rows.items():
            if (v >> p) & 1:
                v ^= r
        return v

    def add(self, v: int) -> bool:
        """Insert ``v``; returns False if it was already in the span."""
        v = self.reduce(v)
        if not v:
            return False
        p = lowbit(v)
        for q, r in list(self.rows.items()):
            if (r >> p) & 1:
                self.rows[q] = r ^ v
        self.rows[p] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        return sorted(self.rows)


def rank(rows: Sequence[int]) -> int:
    return Echelon(rows).rank


def kernel(rows: Sequence[int], n: int) -> list[int]:
    """Basis of ``{x in F2^n : A x = 0}`` where ``rows`` are the rows of A."""
    ech = Echelon(rows)
    pivots = ech.rows
    out = []
    for f in range(n):
        if f in pivots:
            continue
        x = 1 << f
        for p, r in pivots.items():
            if (r >> f) & 1:
                x |= 1 << p
        out.append(x)
    return out


def f2_solve(op: str, A: Sequence[Sequence[int]], v: Sequence[int] | None = None):
    """Rank, kernel basis, or row-span membership over Z/2.

    ``A`` is a list of 0/1 rows of equal length.
    """
    n = len(A[0]) if A else (len(v) if v is not None else 0)
    if any(len(r) != n for r in A):
        raise ValueError("rows of unequal length")
    rows = [to_bits(r) for r in A]
    if op == "rank":
        return rank(rows)
    if op == "kernel":
        return [from_bits(x, n) for x in kernel(rows, n)]
    if op == "membership":
        if v is None or len(v) != n:
            raise ValueError("membership needs a vector of matching length")
        return Echelon(rows).contains(to_bits(v))
    raise ValueError(f"unknown operation {op!r}")
