"""Integer matrices: Smith and Hermite normal forms, kernels, lattices.

Matrices are plain lists of row lists of Python ints.  Everything is exact.

>>> D, U, V = smith_normal_form([[2, 0], [0, 3]])
>>> D
[[1, 0], [0, 6]]
>>> abelian_quotient(3, [[2, 0, 0], [1, 1, 0]])
(1, [2])
"""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    if any(len(row) != inner for row in A):
        raise ValueError("dimension mismatch in matmul")
    out = []
    for row in A:
        acc = [0] * cols
        for k, a in enumerate(row):
            if a:
                bk = B[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += a * bk[j]
        out.append(acc)
    return out


def transpose(A: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(A: Sequence[Sequence[int]], ncols: int | None = None,
                      want_inverse: bool = False):
    """Return ``(D, U, V)`` with ``D = U*A*V`` in Smith form.

    ``U`` and ``V`` are unimodular and the diagonal of ``D`` is nonnegative
    with each entry dividing the next.  With ``want_inverse`` a fourth item,
    the inverse of ``V``, is returned as well.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    D = [list(r) for r in A]
    U = identity(m)
    V = identity(n)
    Vi = identity(n) if want_inverse else None

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        if Vi is not None:
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        rd, rs = D[dst], D[src]
        for k in range(n):
            if rs[k]:
                rd[k] += q * rs[k]
        ud, us = U[dst], U[src]
        for k in range(m):
            if us[k]:
                ud[k] += q * us[k]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        for row in D:
            if row[src]:
                row[dst] += q * row[src]
        for row in V:
            if row[src]:
                row[dst] += q * row[src]
        if Vi is not None:
            # inverse: row_src -= q * row_dst
            rs, rd = Vi[src], Vi[dst]
            for k in range(n):
                if rd[k]:
                    rs[k] -= q * rd[k]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        while True:
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            p = D[t][t]
            clean = True
            for r in range(t + 1, m):
                if D[r][t]:
                    add_row(r, t, -(D[r][t] // p))
                    if D[r][t]:
                        clean = False
            for c in range(t + 1, n):
                if D[t][c]:
                    add_col(c, t, -(D[t][c] // p))
                    if D[t][c]:
                        clean = False
            if not clean:
                # new pivot: smallest leftover in row t or column t
                best = (abs(p), t, t)
                for r in range(t + 1, m):
                    if D[r][t] and abs(D[r][t]) < best[0]:
                        best = (abs(D[r][t]), r, t)
                for c in range(t + 1, n):
                    if D[t][c] and abs(D[t][c]) < best[0]:
                        best = (abs(D[t][c]), t, c)
                _, i, j = best
                continue
            bad = None
            for r in range(t + 1, m):
                for c in range(t + 1, n):
                    if D[r][c] % p:
                        bad = r
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
            i, j = t, t
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    if want_inverse:
        return D, U, V, Vi
    return D, U, V


def diagonal(D: Matrix) -> list[int]:
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def integer_kernel(A: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Basis (as row vectors) of ``{x : A x = 0}`` in Z^ncols."""
    n = len(A[0]) if A else (ncols or 0)
    if not A or not any(any(r) for r in A):
        return identity(n)
    D, _, V = smith_normal_form(A)
    rank = sum(1 for x in diagonal(D) if x)
    return [[V[i][j] for i in range(n)] for j in range(rank, n)]


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """An integer solution of ``A x = b``, or ``None``."""
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    if len(b) != m:
        raise ValueError("dimension mismatch")
    D, U, V = smith_normal_form(A)
    Ub = [sum(u * x for u, x in zip(row, b)) for row in U]
    y = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d:
            if Ub[i] % d:
                return None
            y[i] = Ub[i] // d
        elif Ub[i]:
            return None
    return [sum(V[i][j] * y[j] for j in range(n)) for i in range(n)]


def hermite_basis(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Row-style Hermite basis of the lattice spanned by ``rows``.

    Pivots appear in increasing column order, are positive, and entries
    above each pivot are reduced into ``[0, pivot)``.
    """
    pool = [list(r) for r in rows if any(r)]
    basis: Matrix = []
    pivots: list[int] = []
    for col in range(ncols):
        pivot = _euclid_column(pool, col)
        if pivot is None:
            continue
        row = pool.pop(pivot)
        if row[col] < 0:
            row = [-x for x in row]
        p = row[col]
        for b in basis:
            q = b[col] // p
            if q:
                for k in range(col, ncols):
                    b[k] -= q * row[k]
        basis.append(row)
        pivots.append(col)
        if not pool:
            break
    return basis


def _euclid_column(pool: Matrix, col: int) -> int | None:
    """Gcd-reduce ``pool`` in column ``col`` until one row is nonzero there.

    Returns the index of that row, or ``None`` if the column is zero.
    """
    idx = [i for i, r in enumerate(pool) if r[col]]
    if not idx:
        return None
    while len(idx) > 1:
        idx.sort(key=lambda i: abs(pool[i][col]))
        p = idx[0]
        prow = pool[p]
        pv = prow[col]
        keep = [p]
        for i in idx[1:]:
            r = pool[i]
            q = r[col] // pv
            if q:
                for k in range(len(r)):
                    if prow[k]:
                        r[k] -= q * prow[k]
            if r[col]:
                keep.append(i)
        idx = keep
    return idx[0]


def reduce_by_hermite(basis: Matrix, v: Sequence[int]) -> list[int]:
    """Remainder of ``v`` after subtracting lattice vectors pivot by pivot."""
    v = list(v)
    for row in basis:
        col = next(k for k, x in enumerate(row) if x)
        q = v[col] // row[col]
        if q:
            for k in range(col, len(v)):
                if row[k]:
                    v[k] -= q * row[k]
    return v


class Lattice:
    """A sublattice of Z^n held in Hermite form."""

    def __init__(self, generators: Sequence[Sequence[int]], n: int):
        self.n = n
        self.basis = hermite_basis(generators, n)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(reduce_by_hermite(self.basis, v))

    def contains_lattice(self, other: Lattice) -> bool:
        return all(self.contains(b) for b in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, tuple(map(tuple, self.basis))))


def abelian_quotient(generators: int, relations: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Free rank and invariant factors (>1) of ``Z^generators / rowspan(relations)``."""
    rels = [list(r) for r in relations if any(r)]
    if any(len(r) != generators for r in rels):
        raise ValueError("relation length differs from generator count")
    if not rels:
        return generators, []
    D, _, _ = smith_normal_form(rels)
    diag = [x for x in diagonal(D) if x]
    torsion = [x for x in diag if x > 1]
    return generators - len(diag), torsion
