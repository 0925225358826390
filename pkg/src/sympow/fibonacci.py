"""Generalized Fibonacci polynomials and their specializations.

Every family here solves a second order recurrence
``q[k+2] = x1*q[k+1] + x2*q[k]`` for suitable multipliers and seeds:

* ``delta``: the boundary classes over Z/2 in ``a, m, y, t``,
  ``delta[k+2] = a^d*delta[k+1] + y*delta[k]`` with ``delta[0] = 0``,
  ``delta[1] = a*t``;
* ``sigma``: ``sigma[k+2] = -l1*sigma[k+1] - l2*sigma[k]`` from ``1, -l1``;
* ``r``: power sums ``z1^k + z2^k`` in the elementary symmetric
  polynomials, ``r[k+2] = e1*r[k+1] - e2*r[k]`` from ``2, e1``;
* ``nu``: ``sigma`` evaluated at ``(a^d + m, y)`` mod 2, or at
  ``(c^(d/2) + m, y)`` integrally, reduced by ``a*m = 0`` (resp.
  ``2c = c*m = 0``);
* ``custom``: the plain family ``q[0] = 0``, ``q[1] = 1`` over ``Z[x1, x2]``.

>>> str(family_by_recurrence(FamilyId("r"), 4))
'e1^4 - 4*e1^2*e2 + 2*e2^2'
>>> lucas_parity(5, 2)
0
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .algebra.polynomial import GradedVariable, Polynomial, PolyRing
from .verdict import Verdict

FAMILIES = ("delta", "sigma", "nu", "r", "custom")


@dataclass(frozen=True)
class FamilyId:
    name: str
    d: int = 2
    coeff: str = "F2"  # only consulted by ``nu``

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise ValueError(f"unknown family {self.name!r}")
        if self.d not in (2, 4):
            raise ValueError("d must be 2 or 4")
        if self.coeff not in ("Z", "F2"):
            raise ValueError("coeff must be Z or F2")


@dataclass(frozen=True)
class RecurrenceSpec:
    multiplier1: Polynomial
    multiplier2: Polynomial
    seed0: Polynomial
    seed1: Polynomial
    sign: str  # "fib", "sigma" or "powersum"

    def __post_init__(self):
        d1, d2 = self.multiplier1.degree(), self.multiplier2.degree()
        if d1 is not None and d2 is not None and d2 != 2 * d1:
            raise ValueError("second multiplier must have twice the degree of the first")

    def iterate(self, k: int) -> Polynomial:
        prev, cur = self.seed0, self.seed1
        if k == 0:
            return prev
        for _ in range(k - 1):
            prev, cur = cur, self.multiplier1 * cur + self.multiplier2 * prev
        return cur


# -- rings ----------------------------------------------------------------

@lru_cache(maxsize=None)
def thom_ring(d: int) -> PolyRing:
    """Z/2[a, m, y, t] carrying the boundary classes."""
    return PolyRing(
        [GradedVariable("a", 1), GradedVariable("m", d), GradedVariable("y", 2 * d),
         GradedVariable("t", d)],
        modulus=2,
    )


@lru_cache(maxsize=None)
def sigma_ring(d: int) -> PolyRing:
    return PolyRing([GradedVariable("l1", d), GradedVariable("l2", 2 * d)])


@lru_cache(maxsize=None)
def powersum_ring(d: int) -> PolyRing:
    return PolyRing([GradedVariable("e1", d), GradedVariable("e2", 2 * d)])


@lru_cache(maxsize=None)
def split_ring(d: int) -> PolyRing:
    return PolyRing([GradedVariable("z1", d), GradedVariable("z2", d)])


@lru_cache(maxsize=None)
def custom_ring() -> PolyRing:
    return PolyRing([GradedVariable("x1", 1), GradedVariable("x2", 2)])


@lru_cache(maxsize=None)
def gamma_ring(d: int, coeff: str) -> PolyRing:
    if coeff == "F2":
        return PolyRing(
            [GradedVariable("a", 1), GradedVariable("m", d), GradedVariable("y", 2 * d)], 2
        )
    return PolyRing([GradedVariable("c", 2), GradedVariable("m", d), GradedVariable("y", 2 * d)])


def reduce_gamma(p: Polynomial) -> Polynomial:
    """Reduce modulo ``a*m`` (mod 2) or ``2c, c*m`` (integrally).

    The torsion variable is whichever of ``a``/``c`` the ring has.
    """
    ring = p.ring
    tv = ring.index("a") if ring.has("a") else ring.index("c")
    mv = ring.index("m")
    out = {}
    for e, c in p.terms.items():
        if e[tv] and e[mv]:
            continue
        if ring.modulus is None and e[tv]:
            c %= 2
        out[e] = c
    return Polynomial(ring, out)


# -- recurrences ------------------------------------------------------------

@lru_cache(maxsize=None)
def recurrence_spec(fam: FamilyId) -> RecurrenceSpec:
    d = fam.d
    if fam.name == "delta":
        R = thom_ring(d)
        a, y, t = R.gen("a"), R.gen("y"), R.gen("t")
        return RecurrenceSpec(a**d, y, R.zero(), a * t, "fib")
    if fam.name in ("sigma", "nu"):
        R = sigma_ring(d)
        l1, l2 = R.gen("l1"), R.gen("l2")
        return RecurrenceSpec(-l1, -l2, R.const(1), -l1, "sigma")
    if fam.name == "r":
        R = powersum_ring(d)
        e1, e2 = R.gen("e1"), R.gen("e2")
        return RecurrenceSpec(e1, -e2, R.const(2), e1, "powersum")
    R = custom_ring()
    return RecurrenceSpec(R.gen("x1"), R.gen("x2"), R.zero(), R.const(1), "fib")


@lru_cache(maxsize=None)
def _recurrence_table(fam: FamilyId, k: int) -> Polynomial:
    spec = recurrence_spec(fam)
    if k == 0:
        return spec.seed0
    if k == 1:
        return spec.seed1
    return spec.multiplier1 * _recurrence_table(fam, k - 1) + spec.multiplier2 * _recurrence_table(fam, k - 2)


def family_by_recurrence(fam: FamilyId, k: int) -> Polynomial:
    """The k-th member, iterating the recurrence from the seeds."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    for j in range(k):  # fill the memo bottom-up to keep recursion shallow
        _recurrence_table(fam, j)
    p = _recurrence_table(fam, k)
    if fam.name == "nu":
        return _nu_substitute(p, fam.d, fam.coeff)
    return p


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def family_by_closed_form(fam: FamilyId, k: int) -> Polynomial:
    """The k-th member from its binomial-sum expression (``k >= 1``)."""
    if k < 1:
        raise ValueError("closed forms start at k = 1")
    d = fam.d
    if fam.name == "delta":
        R = thom_ring(d)
        terms = {}
        for i in range((k - 1) // 2 + 1):
            if lucas_parity(k - 1 - i, i):
                terms[R.exps({"a": (k - 1 - 2 * i) * d + 1, "y": i, "t": 1})] = 1
        return Polynomial(R, terms)
    if fam.name in ("sigma", "nu"):
        R = sigma_ring(d)
        terms = {}
        for i in range(k // 2 + 1):
            terms[R.exps({"l1": k - 2 * i, "l2": i})] = (-1) ** (k - i) * comb(k - i, i)
        p = Polynomial(R, terms)
        return _nu_substitute(p, d, fam.coeff) if fam.name == "nu" else p
    if fam.name == "r":
        R = powersum_ring(d)
        terms = {}
        for i in range(k // 2 + 1):
            c = 2 * _binom(k - i, i) - _binom(k - i - 1, i)
            terms[R.exps({"e1": k - 2 * i, "e2": i})] = (-1) ** i * c
        return Polynomial(R, terms)
    R = custom_ring()
    terms = {}
    for i in range((k - 1) // 2 + 1):
        terms[R.exps({"x1": k - 1 - 2 * i, "x2": i})] = comb(k - 1 - i, i)
    return Polynomial(R, terms)


def _nu_substitute(sigma: Polynomial, d: int, coeff: str) -> Polynomial:
    G = gamma_ring(d, coeff)
    if coeff == "F2":
        l1 = G.gen("a") ** d + G.gen("m")
    else:
        l1 = G.gen("c") ** (d // 2) + G.gen("m")
    return reduce_gamma(sigma.substitute({"l1": l1, "l2": G.gen("y")}, G))


def nu(k: int, d: int, coeff: str = "F2") -> Polynomial:
    """``sigma[k]`` at ``(a^d + m, y)`` mod 2 or ``(c^(d/2) + m, y)`` over Z, reduced."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return family_by_recurrence(FamilyId("nu", d, coeff), k)


def delta(k: int, d: int) -> Polynomial:
    return family_by_recurrence(FamilyId("delta", d), k)


def sigma(k: int, d: int = 2) -> Polynomial:
    return family_by_recurrence(FamilyId("sigma", d), k)


def powersum(k: int, d: int = 2) -> Polynomial:
    return family_by_recurrence(FamilyId("r", d), k)


def lucas_parity(top: int, bottom: int) -> int:
    """1 iff ``C(top, bottom)`` is odd, i.e. the bits of bottom lie in top."""
    if top < 0 or bottom < 0:
        raise ValueError("arguments must be nonnegative")
    return int(bottom & ~top == 0)


# -- power sum identities ---------------------------------------------------

@lru_cache(maxsize=None)
def powersum_cofactors(t: int, d: int = 2) -> tuple[Polynomial, Polynomial]:
    """``(A, B)`` with ``r[k+t] = A*r[k+1] + B*r[k]`` for every k."""
    R = powersum_ring(d)
    e1, e2 = R.gen("e1"), R.gen("e2")
    prev, cur = (R.zero(), R.const(1)), (R.const(1), R.zero())
    if t == 0:
        return prev
    for _ in range(t - 1):
        prev, cur = cur, (e1 * cur[0] - e2 * prev[0], e1 * cur[1] - e2 * prev[1])
    return cur


def powersum_identities(j: int, k: int, t: int, d: int = 2) -> Verdict:
    """Check the three power-sum identities at the given indices.

    (i)   ``e2^j r[k] = sum_i (-1)^i C(j,i) e1^(j-i) r[k+j+i]``;
    (ii)  ``r[k+t] = A_t r[k+1] + B_t r[k]`` with explicit cofactors;
    (iii) for even k, ``r[k] = (-1)^(k/2) 2 e2^(k/2)`` modulo ``e1``.
    """
    if min(j, k, t) < 0:
        raise ValueError("indices must be nonnegative")
    R = powersum_ring(d)
    e1, e2 = R.gen("e1"), R.gen("e2")
    r = lambda i: powersum(i, d)  # noqa: E731
    lhs = e2**j * r(k)
    rhs = R.zero()
    for i in range(j + 1):
        rhs = rhs + (-1) ** i * comb(j, i) * e1 ** (j - i) * r(k + j + i)
    if lhs != rhs:
        return Verdict(False, "powersum", f"(i) fails at j={j}, k={k}: {lhs} != {rhs}")
    A, B = powersum_cofactors(t, d)
    if r(k + t) != A * r(k + 1) + B * r(k):
        return Verdict(False, "powersum", f"(ii) fails at k={k}, t={t}")
    if k % 2 == 0:
        reduced = r(k).substitute({"e1": R.zero()}, R, check_degrees=False)
        if reduced != (-1) ** (k // 2) * 2 * e2 ** (k // 2):
            return Verdict(False, "powersum", f"(iii) fails at k={k}: {reduced}")
    return Verdict(True, "powersum", f"j={j}, k={k}, t={t}")


def check_powersum_identities(bound: int, d: int = 2) -> Verdict:
    for j in range(bound + 1):
        for k in range(bound + 1):
            for t in range(bound + 1):
                v = powersum_identities(j, k, t, d)
                if not v.ok:
                    return v
    return Verdict(True, "powersum", f"all indices <= {bound}")
