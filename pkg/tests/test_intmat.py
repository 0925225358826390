import math

from hypothesis import given, strategies as st

from sympow.algebra import abelian_quotient, determinant, integer_kernel, smith_normal_form
from sympow.algebra.intmat import diagonal, matmul


def matrices(max_rows=4, max_cols=4, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices())
def test_smith_postcondition(A):
    D, U, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == D
    assert abs(determinant(U)) == 1
    assert abs(determinant(V)) == 1
    diag = diagonal(D)
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert nz == diag[:len(nz)]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_smith_examples():
    assert diagonal(smith_normal_form([[2, 0], [0, 3]])[0]) == [1, 6]
    assert smith_normal_form([[1, 0], [0, 1]])[0] == [[1, 0], [0, 1]]
    assert smith_normal_form([[0]])[0] == [[0]]


def _rank_over_q(gens, rels):
    from fractions import Fraction

    rows = [[Fraction(x) for x in r] for r in rels]
    rank = 0
    for col in range(gens):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _cosets_mod(gens, rels, N):
    """Number of cosets of the relation lattice in (Z/N)^gens, by closure."""
    span = {tuple([0] * gens)}
    frontier = list(span)
    while frontier:
        nxt = []
        for p in frontier:
            for r in rels:
                q = tuple((a + b) % N for a, b in zip(p, r))
                if q not in span:
                    span.add(q)
                    nxt.append(q)
        frontier = nxt
    return N**gens // len(span)


small = st.integers(1, 3).flatmap(lambda g: st.tuples(
    st.just(g), st.lists(st.lists(st.integers(-3, 3), min_size=g, max_size=g), max_size=3)))


@given(small)
def test_abelian_quotient_matches_enumeration(gr):
    gens, rels = gr
    free, tors = abelian_quotient(gens, rels)
    assert free == gens - _rank_over_q(gens, rels)
    assert all(t > 1 for t in tors)
    assert all(b % a == 0 for a, b in zip(tors, tors[1:]))
    # |G / N G| = N^free * prod gcd(t, N) pins the invariant factors down
    moduli = set(range(2, 13))
    if tors and tors[-1] ** gens <= 40000:
        moduli.add(tors[-1])
    for N in sorted(moduli):
        expected = N**free
        for t in tors:
            expected *= math.gcd(t, N)
        assert _cosets_mod(gens, rels, N) == expected, N


def test_abelian_quotient_examples():
    assert abelian_quotient(1, [[2]]) == (0, [2])
    assert abelian_quotient(2, [[2, 0]]) == (1, [2])
    assert abelian_quotient(3, [[2, 0, 0], [1, 1, 0]]) == (1, [2])


def test_integer_kernel():
    K = integer_kernel([[1, 1, 0]], 3)
    assert len(K) == 2
    for v in K:
        assert v[0] + v[1] == 0
