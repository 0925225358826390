"""Catalog of presentations and the degree-wise operations on them.

>>> from sympow.presentations import SpaceId, graded_basis
>>> [b.name for b in graded_basis(SpaceId("SP2", "C"), "Z", 8).free]
['g^4', 'g^2*h/2', 'h^2/2']
"""

from __future__ import annotations

from functools import lru_cache

from ..fibonacci import gamma_ring, nu, powersum
from .base import (
    BasisElement,
    Expansion,
    GradedPiece,
    Presentation,
    SpaceId,
    UnsupportedCombination,
    UnsupportedOperation,
)
from .lattice import LatticeError, SP2Integral
from .mp_integral import MPIntegral
from .polyring import PolynomialPresentation
from .rings import kp_ring, rk_ring, rp_ring
from .thn_integral import ThNIntegral
from .thom import ThomMod2

__all__ = [
    "BasisElement",
    "Expansion",
    "GradedPiece",
    "LatticeError",
    "Presentation",
    "SpaceId",
    "UnsupportedCombination",
    "UnsupportedOperation",
    "catalog",
    "graded_basis",
    "multiply",
    "normal_form",
    "poincare_series",
]


def _y_then_m(key):
    # Gamma rings order their exponents (torsion variable, m, y)
    return (key[2], key[1])


def _truncation_power(ring, name: str, n: int):
    return ring.gen(name) ** (n + 1)


@lru_cache(maxsize=None)
def catalog(space: SpaceId, coeff: str) -> Presentation:
    """The presentation of ``space`` with ``Z`` or ``F2`` coefficients."""
    if coeff not in ("Z", "F2"):
        raise UnsupportedCombination(f"coefficients must be Z or F2, not {coeff!r}")
    d, n, kind = space.d, space.n, space.kind

    if kind == "KP":
        R = kp_ring(d, coeff)
        rels = [] if n is None else [_truncation_power(R, "z", n)]
        return PolynomialPresentation(space, coeff, R, rels)

    if kind == "RP":
        R = rp_ring(coeff)
        rels = [] if coeff == "F2" else [2 * R.gen("c")]
        return PolynomialPresentation(space, coeff, R, rels)

    if kind == "RK":
        R = rk_ring(d, coeff)
        rels = [] if coeff == "F2" else [2 * R.gen("c")]
        if n is not None:
            rels.append(_truncation_power(R, "z", n))
        return PolynomialPresentation(space, coeff, R, rels)

    if kind in ("Gamma", "Borel"):
        G = gamma_ring(d, coeff)
        m, y = G.gen("m"), G.gen("y")
        if coeff == "F2":
            a = G.gen("a")
            base = [a * m]
            x = a**d + m
        else:
            c = G.gen("c")
            base = [2 * c, c * m]
            x = m + c ** (d // 2)
        tokens = {"x": x}
        if kind == "Gamma":
            tokens.update({"l1": x, "l2": y})
            if n is None:
                return PolynomialPresentation(space, coeff, G, base, tokens,
                                              product_rules=_gamma_rules(coeff, d))
            rels = base + [nu(n, d, coeff), nu(n + 1, d, coeff)]
            return PolynomialPresentation(space, coeff, G, rels, tokens, elimination=_y_then_m,
                                          product_rules=_gamma_rules(coeff, d))
        tokens.update({"e1": m, "e2": y})
        if n is None:
            return PolynomialPresentation(space, coeff, G, base, tokens,
                                          product_rules=_gamma_rules(coeff, d))
        if coeff == "F2":
            raise UnsupportedCombination("the truncated Borel ring has no mod 2 presentation here")
        rsub = {"e1": m, "e2": y}
        rels = base + [
            powersum(n + 1, d).substitute(rsub, G),
            powersum(n + 2, d).substitute(rsub, G),
            y ** (n + 1),
        ]
        return PolynomialPresentation(space, coeff, G, rels, tokens,
                                      product_rules=_gamma_rules(coeff, d))

    if kind == "MP":
        if coeff == "F2":
            return ThomMod2(space, kill_deltas=False)
        if n is None:
            return MPIntegral(space)
        return ThNIntegral(space, catalog(SpaceId("Borel", space.field, n), "Z"),
                           catalog(SpaceId("RK", space.field, n), "Z"))

    if kind == "SP2":
        if coeff == "F2":
            return ThomMod2(space, kill_deltas=True)
        return SP2Integral(space)

    raise UnsupportedCombination(f"no presentation for {space}")


def _gamma_rules(coeff: str, d: int) -> tuple[str, ...]:
    if coeff == "F2":
        return ("a*m = 0", f"a^({d}+j) = a^j*x")
    return ("2*c = 0", "c*m = 0", f"m = c^{d // 2} + x")


def graded_basis(space: SpaceId, coeff: str, degree: int) -> GradedPiece:
    return catalog(space, coeff).piece(degree)


def normal_form(space: SpaceId, coeff: str, element) -> Expansion:
    return catalog(space, coeff).normal_form(element)


def multiply(space: SpaceId, coeff: str, x, y) -> Expansion:
    return catalog(space, coeff).multiply(x, y)


def poincare_series(space: SpaceId, coeff: str, max_degree: int) -> list[tuple[int, int]]:
    """``(free rank, order-2 rank)`` per degree; over F2 ``(dimension, 0)``."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    return catalog(space, coeff).ranks(max_degree)
