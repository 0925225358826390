import pytest
from hypothesis import given, strategies as st

from sympow.cli.expr import ElementError, ParseError, parse_element
from sympow.presentations import LatticeError, SpaceId, catalog


def test_degrees():
    assert parse_element("g^2*h/2").degree(2) == 8
    assert parse_element("g^2*h/2").degree(4) == 16
    assert parse_element("u[1,2]").degree(2) == 2 + 4 + 1
    assert parse_element("u[1,2]").degree(4) == 2 + 8 + 1
    assert parse_element("1").degree(2) == 0
    assert parse_element("delta[3]").degree(4) == 13


@pytest.mark.parametrize("text, offset", [("g^", 2), ("2*(g", 4), ("q", 0), ("g + + h", 4), ("u[1]", 3)])
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_element(text)
    assert info.value.offset == offset
    assert info.value.expected


def test_offsets_are_bytes():
    with pytest.raises(ParseError) as info:
        parse_element("g*é")
    assert info.value.offset == 2


def test_inhomogeneous_is_rejected():
    with pytest.raises(ElementError):
        parse_element("g + h").degree(2)


def test_lattice_admits_only_divided_monomials():
    P = catalog(SpaceId("SP2", "C"), "Z")
    with pytest.raises(LatticeError):
        P.normal_form("h/2")
    assert str(P.normal_form("g*h/2")) == "g*h/2"
    with pytest.raises(ElementError):
        P.normal_form("g^2*h/4")


def test_unit():
    for space in (SpaceId("SP2", "C"), SpaceId("Gamma", "H"), SpaceId("MP", "C")):
        for coeff in ("Z", "F2"):
            assert str(catalog(space, coeff).normal_form("1")) == "1"


RING_SPACES = [SpaceId(k, f, n) for f in ("C", "H")
               for k, n in [("SP2", None), ("SP2", 2), ("SP2", 3), ("MP", None), ("Gamma", None),
                            ("Gamma", 2), ("Borel", None), ("Borel", 2), ("RK", 3), ("KP", 4), ("RP", None)]]


@pytest.mark.parametrize("space", RING_SPACES, ids=str)
@pytest.mark.parametrize("coeff", ["Z", "F2"])
def test_basis_names_round_trip(space, coeff):
    if space.kind == "Borel" and space.n is not None and coeff == "F2":
        pytest.skip("no mod 2 presentation")
    P = catalog(space, coeff)
    for k in range(6 * space.d + 1):
        for b in P.piece(k).basis:
            assert P.normal_form(b.name).as_dict() == {b.name: 1}, (k, b.name)
            if b.alias:
                assert P.normal_form(b.alias).as_dict() == {b.name: 1}


@given(st.lists(st.sampled_from(["g", "h", "g^2", "g*h/2", "h^2/2", "u[1,2]"]), min_size=1, max_size=3),
       st.integers(-3, 3))
def test_scalar_multiples_render_and_reparse(factors, c):
    P = catalog(SpaceId("SP2", "C"), "Z")
    expr = "*".join(f"({f})" for f in factors)
    nf = P.normal_form(f"{c}*{expr}")
    again = P.normal_form(str(nf)) if not nf.is_zero() else nf
    assert again == nf
