"""Polynomial rings and the ring maps between them used across the catalog."""

from __future__ import annotations

from functools import lru_cache

from ..algebra.polynomial import GradedVariable, Polynomial, PolyRing
from ..fibonacci import gamma_ring


@lru_cache(maxsize=None)
def kp_ring(d: int, coeff: str) -> PolyRing:
    return PolyRing([GradedVariable("z", d)], 2 if coeff == "F2" else None)


@lru_cache(maxsize=None)
def rp_ring(coeff: str) -> PolyRing:
    if coeff == "F2":
        return PolyRing([GradedVariable("a", 1)], 2)
    return PolyRing([GradedVariable("c", 2)])


@lru_cache(maxsize=None)
def rk_ring(d: int, coeff: str) -> PolyRing:
    if coeff == "F2":
        return PolyRing([GradedVariable("a", 1), GradedVariable("z", d)], 2)
    return PolyRing([GradedVariable("c", 2), GradedVariable("z", d)])


def p3_images(d: int, coeff: str) -> dict[str, Polynomial]:
    """Generator images of the restriction from the classifying ring to ``RK``.

    Integrally ``c -> c, m -> 2z, y -> (c^(d/2) + z) z``; mod 2
    ``a -> a, m -> 0, y -> (a^d + z) z``.
    """
    R = rk_ring(d, coeff)
    z = R.gen("z")
    if coeff == "F2":
        a = R.gen("a")
        return {"a": a, "m": R.zero(), "y": (a**d + z) * z}
    c = R.gen("c")
    return {"c": c, "m": 2 * z, "y": (c ** (d // 2) + z) * z}


def apply_ring_map(p: Polynomial, images: dict[str, Polynomial], target: PolyRing) -> Polynomial:
    return p.substitute(images, target)


__all__ = ["gamma_ring", "kp_ring", "rk_ring", "rp_ring", "p3_images", "apply_ring_map"]
