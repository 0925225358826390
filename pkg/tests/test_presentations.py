from math import comb

import pytest
from hypothesis import given, strategies as st

from sympow.algebra import Span
from sympow.presentations import (
    SpaceId,
    UnsupportedCombination,
    UnsupportedOperation,
    catalog,
    graded_basis,
    multiply,
    normal_form,
    poincare_series,
)

D = {"C": 2, "H": 4}
FIELDS = ("C", "H")


def names(piece):
    return [b.display for b in piece.basis]


# -- examples -----------------------------------------------------------------------

def test_gamma_integral_presentation():
    P = catalog(SpaceId("Gamma", "C"), "Z")
    assert [(v.name, v.degree) for v in P.variables] == [("c", 2), ("m", 2), ("y", 4)]
    assert [str(r) for r in P.relations] == ["2*c", "c*m"]


def test_truncated_borel_relations():
    P = catalog(SpaceId("Borel", "C", 1), "Z")
    assert [str(r) for r in P.relations] == ["2*c", "c*m", "m^2 - 2*y", "m^3 - 3*m*y", "y^2"]


def test_point():
    assert poincare_series(SpaceId("KP", "C", 0), "Z", 6) == [(1, 0)] + [(0, 0)] * 6


def test_basis_examples():
    assert names(graded_basis(SpaceId("SP2", "C"), "Z", 8)) == ["g^4", "g^2*h/2", "h^2/2"]
    assert names(graded_basis(SpaceId("SP2", "H"), "F2", 16)) == ["a^12*t", "a^4*y*t", "m*y*t", "m^3*t"]
    assert names(graded_basis(SpaceId("SP2", "C", 2), "F2", 8)) == ["a^6*t=m^3*t"]


@pytest.mark.parametrize("space", [SpaceId(k, f) for k in ("KP", "RP", "RK", "Gamma", "Borel", "MP", "SP2")
                                   for f in FIELDS], ids=str)
@pytest.mark.parametrize("coeff", ["Z", "F2"])
def test_degree_zero_is_the_unit(space, coeff):
    assert names(graded_basis(space, coeff, 0)) == ["1"]
    assert graded_basis(space, coeff, 0).ranks == ((1, 0) if coeff == "Z" else (1, 0))


def test_normal_form_examples():
    mp = SpaceId("MP", "C")
    assert str(normal_form(mp, "Z", "c^5*delta[3]")) == "c^3*delta[5] + c^2*delta[6] + delta[8]"
    assert normal_form(mp, "Z", "m*delta[2]").is_zero()
    mpH = SpaceId("MP", "H")
    assert str(normal_form(mpH, "Z", "c^10*delta[3]")) == "c^6*delta[5] + c^4*delta[6] + delta[8]"


def test_multiply_examples():
    for n in (None, 2, 3):
        assert str(multiply(SpaceId("SP2", "C", n), "Z", "g", "h")) == "2*(g*h/2)"
    assert str(multiply(SpaceId("MP", "C"), "F2", "t", "t")) == "m*t"
    assert multiply(SpaceId("SP2", "C"), "Z", "u[1,2]", "u[1,2]").is_zero()
    for f in FIELDS:
        sp = SpaceId("SP2", f, 3)
        assert str(multiply(sp, "Z", "g^4", "1")) == "4*(g^2*h/2) - h^2/2"
        assert str(multiply(sp, "Z", "g^3*h/2", "1")) == "3*(g*h^2/4)"


def test_unsupported():
    with pytest.raises(UnsupportedCombination):
        catalog(SpaceId("Borel", "C", 2), "F2")
    with pytest.raises(UnsupportedOperation):
        normal_form(SpaceId("MP", "C", 2), "Z", "1")
    with pytest.raises(ValueError):
        poincare_series(SpaceId("SP2", "C"), "Z", -1)


# -- structure of the symmetric squares -------------------------------------------------

def top_name(n):
    return "h" if n == 1 else f"h^{n}/{2 ** (n - 1)}"


def divided_name(q, s):
    parts = []
    if q:
        parts.append("g" if q == 1 else f"g^{q}")
    if s:
        parts.append("h" if s == 1 else f"h^{s}")
    body = "*".join(parts)
    return body if s <= 1 and not (s == 1 and q == 0) else (f"{body}/{2 ** s}" if s else body)


def closed_form_even_basis(n, degree, d):
    """``g^q h^s/2^s`` with ``q >= 1, q+s <= n < q+2s`` and ``h^p/2^(p-1)`` with ``n/2 < p <= n``."""
    if degree % d:
        return set()
    w = degree // d
    out = set()
    for s in range(w // 2 + 1):
        q = w - 2 * s
        if q >= 1 and q + s <= n < q + 2 * s:
            body = ("g" if q == 1 else f"g^{q}") + ("" if s == 0 else "*h" if s == 1 else f"*h^{s}")
            out.add(body + (f"/{2 ** s}" if s else ""))
    if w % 2 == 0 and n / 2 < w // 2 <= n:
        out.add(top_name(w // 2))
    return out


@pytest.mark.parametrize("field", FIELDS)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_truncated_even_basis_above_middle(field, n):
    d = D[field]
    P = catalog(SpaceId("SP2", field, n), "Z")
    for k in range(n * d + 1, 2 * n * d + 3 * d + 1):
        piece = P.piece(k)
        if k % 2 == 0:
            assert set(names(piece)) == closed_form_even_basis(n, k, d), k
            assert not piece.torsion
        else:
            assert not piece.free


@pytest.mark.parametrize("field", FIELDS)
@pytest.mark.parametrize("n", [None, 1, 2, 3])
def test_odd_degrees_are_order_two(field, n):
    P = catalog(SpaceId("SP2", field, n), "Z")
    for k in range(1, 10 * D[field] + 1, 2):
        assert all(b.order == 2 for b in P.piece(k).basis)


@pytest.mark.parametrize("field", FIELDS)
def test_top_class(field):
    d = D[field]
    for n in (1, 2, 3, 4):
        P = catalog(SpaceId("SP2", field, n), "Z")
        assert names(P.piece(2 * n * d)) == [top_name(n)]
        assert all(P.piece(k).dimension == 0 for k in range(2 * n * d + 1, 2 * n * d + 3 * d + 1))


@pytest.mark.parametrize("field", FIELDS)
def test_odd_vanishing(field):
    P = catalog(SpaceId("SP2", field), "Z")
    zero = [k for k in range(1, 31, 2) if P.piece(k).dimension == 0]
    assert zero == ([1, 3, 5] if field == "C" else [1, 3, 5, 9])


@pytest.mark.parametrize("field", FIELDS)
def test_u_relation(field):
    d = D[field]
    P = catalog(SpaceId("SP2", field), "Z")
    half = d // 2
    for j in range(1, 7):
        lhs = P.normal_form(f"u[{j * half},{j}]")
        terms = [f"u[{(j - i) * half},{j + i}]" for i in range(1, j + 1) if comb(j, i) % 2]
        rhs = P.normal_form(" + ".join(terms)) if terms else None
        assert (lhs.is_zero() and rhs is None) or lhs == rhs, j


@pytest.mark.parametrize("space", [SpaceId("SP2", f, n) for f in FIELDS for n in (None, 2, 3)]
                         + [SpaceId("MP", f) for f in FIELDS] + [SpaceId("Borel", "C", 2)], ids=str)
def test_orders(space):
    """Torsion classes are killed by 2; free classes have infinite order."""
    P = catalog(space, "Z")
    for k in range(8 * space.d + 1):
        piece = P.piece(k)
        for i, b in enumerate(piece.basis):
            vec = dict(b.vector)
            if b.order == 2:
                assert piece.is_zero({key: 2 * c for key, c in vec.items()})
            else:
                assert b.order == 0
                for m in (1, 2, 3, 7):
                    coords = piece.coordinates({key: m * c for key, c in vec.items()})
                    assert coords[i] == m


@pytest.mark.parametrize("field", FIELDS)
@pytest.mark.parametrize("coeff", ["Z", "F2"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_restriction_to_truncation(field, coeff, n):
    """The untruncated classes restrict onto the truncated ones, bijectively below (n+1)d."""
    d = D[field]
    full = catalog(SpaceId("SP2", field), coeff)
    trunc = catalog(SpaceId("SP2", field, n), coeff)
    for k in range(2 * n * d + 2 * d):
        tp = trunc.piece(k)
        images = []
        for b in full.piece(k).basis:
            nf = trunc.normal_form(b.name).as_dict()
            images.append([nf.get(t.name, 0) for t in tp.basis])
        # surjective: every truncated basis vector is hit
        m = len(tp.basis)
        mod = 2 if coeff == "F2" else None
        rel = [[o if j == i else 0 for j in range(m)] for i, o in enumerate(b.order for b in tp.basis) if o]
        span = Span(m, images + rel, modulus=mod)
        assert span.rank == m and all(span.contains([int(i == j) for j in range(m)]) for i in range(m)), k
        if k <= (n + 1) * d - 1:
            assert full.piece(k).ranks == tp.ranks, k


SPACES_FOR_PRODUCTS = [SpaceId("SP2", "C"), SpaceId("SP2", "C", 3), SpaceId("SP2", "H", 2),
                       SpaceId("MP", "C"), SpaceId("Gamma", "C"), SpaceId("Borel", "H", 2)]


def basis_names(space, coeff, top):
    P = catalog(space, coeff)
    return [b.name for k in range(top + 1) for b in P.piece(k).basis]


@pytest.mark.parametrize("space", SPACES_FOR_PRODUCTS, ids=str)
@pytest.mark.parametrize("coeff", ["Z", "F2"])
def test_products_commute_and_associate(space, coeff):
    if space.kind == "Borel" and coeff == "F2":
        pytest.skip("no mod 2 presentation")
    P = catalog(space, coeff)
    top = 10 * space.d
    pool = basis_names(space, coeff, top // 3)

    @given(st.sampled_from(pool), st.sampled_from(pool), st.sampled_from(pool))
    def check(x, y, z):
        assert P.multiply(x, y) == P.multiply(y, x)
        xy = P.element(x) * P.element(y)
        yz = P.element(y) * P.element(z)
        assert P.normal_form(xy * P.element(z)) == P.normal_form(P.element(x) * yz)

    check()

