import itertools

from hypothesis import given, strategies as st

from sympow.algebra import Quotient, Span, f2_solve


def test_examples():
    assert f2_solve("rank", [[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert f2_solve("membership", [[1, 0], [0, 1]], [1, 1]) is True
    assert f2_solve("kernel", [[1, 1]]) == [[1, 1]]


bitmats = st.integers(1, 5).flatmap(lambda n: st.lists(
    st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=1, max_size=5))


@given(bitmats)
def test_rank_nullity_by_enumeration(A):
    n = len(A[0])
    kernel = f2_solve("kernel", A)
    zeros = [v for v in itertools.product((0, 1), repeat=n)
             if all(sum(a * b for a, b in zip(row, v)) % 2 == 0 for row in A)]
    assert 2 ** len(kernel) == len(zeros)
    assert f2_solve("rank", A) + len(kernel) == n


@given(bitmats, st.data())
def test_membership_by_enumeration(A, data):
    n = len(A[0])
    v = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    sums = {tuple(sum(c * row[i] for c, row in zip(cs, A)) % 2 for i in range(n))
            for cs in itertools.product((0, 1), repeat=len(A))}
    assert f2_solve("membership", A, v) == (tuple(v) in sums)


def test_quotient_mod2_and_integral():
    Q = Quotient(2, [[1, 1]], modulus=2)
    assert len(Q) == 1 and Q.torsion == [2]
    Z = Quotient(2, [[2, 0]])
    assert (Z.free_rank, Z.torsion) == (1, [2])
    assert Z.is_zero([2, 0]) and not Z.is_zero([1, 0])


def test_span_equality_ignores_generators():
    assert Span(2, [[1, 1], [0, 2]]) == Span(2, [[1, -1], [2, 0]])
    assert Span(2, [[2, 0]]) != Span(2, [[1, 0]])
