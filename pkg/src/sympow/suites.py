"""Verification suites: groups of named pass/fail checks.

Each suite returns a list of :class:`~sympow.verdict.Verdict`.  Suites are
independent, so :func:`run_suites` may evaluate them on a thread pool; the
output order is always the order requested.
"""

from __future__ import annotations

import csv
import os
from concurrent.futures import ThreadPoolExecutor
from importlib import resources
from math import comb

from . import exact_sequences as ex
from . import oracle
from .fibonacci import (
    FamilyId,
    check_powersum_identities,
    family_by_closed_form,
    family_by_recurrence,
    lucas_parity,
    split_ring,
    thom_ring,
)
from .presentations import SpaceId, UnsupportedCombination, catalog
from .verdict import Verdict, combine

FIELDS = ("C", "H")
D = {"C": 2, "H": 4}


def thread_count() -> int:
    """Worker cap from ``SYMPOW_THREADS`` (0 or unset means automatic)."""
    raw = os.environ.get("SYMPOW_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"SYMPOW_THREADS must be an integer, not {raw!r}") from None
    if n < 0:
        raise ValueError("SYMPOW_THREADS must be nonnegative")
    return n or min(8, os.cpu_count() or 1)


# -- appendix tables --------------------------------------------------------------

GOLDEN_TABLES = {
    "sp2-f2": ("SP2", "F2"),
    "sp2-z": ("SP2", "Z"),
    "sp2n-f2": ("SP2", "F2"),
    "sp2n-z": ("SP2", "Z"),
}


def load_golden() -> dict[tuple, dict]:
    """Golden tables keyed by ``(table, field)``."""
    text = resources.files("sympow").joinpath("data/appendix.csv").read_text("utf-8")
    out: dict[tuple, dict] = {}
    for row in csv.DictReader(text.splitlines()):
        key = (row["table"], row["field"])
        entry = out.setdefault(key, {
            "coeff": row["coeff"],
            "n": None if row["n"] == "inf" else int(row["n"]),
            "max_degree": int(row["max_degree"]),
            "entries": [],
        })
        entry["entries"].append((int(row["degree"]), row["generator"], row["order"]))
    return out


def appendix_suite() -> list[Verdict]:
    from .cli.report import build_report

    out = []
    for (table, field), table_spec in sorted(load_golden().items()):
        kind, coeff = GOLDEN_TABLES[table]
        space = SpaceId(kind, field, table_spec["n"])
        report = build_report(space, coeff, 0, table_spec["max_degree"])
        got = report.entries()
        name = f"table {table} [{field}]"
        if got == table_spec["entries"]:
            out.append(Verdict(True, name, f"{len(got)} generators in degrees 0..{table_spec['max_degree']}"))
            continue
        want = table_spec["entries"]
        first = next((i for i, (a, b) in enumerate(zip(got, want)) if a != b), min(len(got), len(want)))
        g = got[first] if first < len(got) else None
        w = want[first] if first < len(want) else None
        out.append(Verdict(False, name, f"entry {first}: engine {g} != table {w}"))
    return out


# -- oracle ---------------------------------------------------------------------------

def oracle_suite() -> list[Verdict]:
    out = []
    for d in (2, 4):
        for n in (1, 2, 3, 4):
            out.append(oracle.oracle_vs_presentation(n, d, 4 * n * d).verdict())
        out.append(borel_stabilization(d))
    return out


def borel_stabilization(d: int, n_max: int = 5) -> Verdict:
    """Below ``(n+1)d`` the truncated oracle agrees with the untruncated ring."""
    field = "C" if d == 2 else "H"
    full = catalog(SpaceId("Borel", field), "Z")
    name = f"Borel oracle stabilizes d={d}"
    for n in range(1, n_max + 1):
        for k in range((n + 1) * d):
            if oracle.borel_oracle(n, d, k) != full.piece(k).ranks:
                return Verdict(False, name, f"n={n} degree {k}")
    return Verdict(True, name, f"n <= {n_max}")


# -- exactness ------------------------------------------------------------------------

def exactness_suite(max_degree: int | None = None) -> list[Verdict]:
    out = []
    for field in FIELDS:
        top = max_degree if max_degree is not None else 10 * D[field]
        out.append(ex.check_well_defined(field, top))
        out += ex.exactness_checks(field, top)
    return out


# -- kernels --------------------------------------------------------------------------

def kernels_suite() -> list[Verdict]:
    out = []
    for field in FIELDS:
        d = D[field]
        out.append(ex.restriction_kernel_check(field, 12 * d))
        out.append(ex.restriction_kernel_n1_check(field, 12 * d))
        out.append(ex.boundary_kernel_check(field, 12 * d))
        for n in (1, 2, 3, 4):
            out.append(ex.truncated_kernel_check(field, n, 2 * n * d + 3 * d))
        out.append(oracle.cokernel_basis_oracle(12, d))
        out.append(cokernel_rewriting(d, 6))
    for d in (2, 4):
        for n in (1, 2, 3, 4):
            out.append(oracle.mu_kernel_oracle(n, (n + 4) * d, d))
    return out


def cokernel_rewriting(d: int, max_j: int) -> Verdict:
    """``c^(jd/2) z^j = sum_i C(j,i) c^((j-i)d/2) z^(j+i)`` holds in ``Cok i*``."""
    half = d // 2
    for j in range(1, max_j + 1):
        rhs = [((j - i) * half, j + i) for i in range(1, j + 1) if comb(j, i) % 2]
        if not oracle.cokernel_relation_holds((j * half, j), rhs, d):
            return Verdict(False, f"Cok i* rewriting d={d}", f"fails for j={j}")
    return Verdict(True, f"Cok i* rewriting d={d}", f"j <= {max_j}")


# -- closed forms ---------------------------------------------------------------------

def closedforms_suite(k_max: int = 64) -> list[Verdict]:
    out = []
    fams = [FamilyId("delta", 2), FamilyId("delta", 4), FamilyId("sigma"), FamilyId("r"),
            FamilyId("custom")]
    for fam in fams:
        name = f"{fam.name} recurrence = closed form" + (f" d={fam.d}" if fam.name == "delta" else "")
        bad = next((k for k in range(1, k_max + 1)
                    if family_by_recurrence(fam, k) != family_by_closed_form(fam, k)), None)
        out.append(Verdict(bad is None, name, f"k <= {k_max}" if bad is None else f"differs at k={bad}"))
    out.append(powersum_substitution(k_max))
    out.append(lucas_check(200))
    for d in (2, 4):
        out.append(delta_leading_term(d, k_max))
    v = check_powersum_identities(12)
    out.append(Verdict(v.ok, "power sum identities", v.detail))
    return out


def powersum_substitution(k_max: int) -> Verdict:
    S = split_ring(2)
    z1, z2 = S.gen("z1"), S.gen("z2")
    images = {"e1": z1 + z2, "e2": z1 * z2}
    for k in range(0, k_max + 1):
        if family_by_recurrence(FamilyId("r"), k).substitute(images, S) != z1**k + z2**k:
            return Verdict(False, "power sums in z1, z2", f"fails at k={k}")
    return Verdict(True, "power sums in z1, z2", f"k <= {k_max}")


def lucas_check(n_max: int) -> Verdict:
    for n in range(n_max + 1):
        for k in range(n + 1):
            if lucas_parity(n, k) != comb(n, k) % 2:
                return Verdict(False, "Lucas parity", f"fails at ({n}, {k})")
    return Verdict(True, "Lucas parity", f"n <= {n_max}")


def delta_leading_term(d: int, k_max: int) -> Verdict:
    """``delta[k] = a^((k-1)d+1) t`` modulo terms divisible by ``y t``."""
    R = thom_ring(d)
    yi = R.index("y")
    name = f"delta leading term d={d}"
    for k in range(1, k_max + 1):
        p = family_by_recurrence(FamilyId("delta", d), k)
        rest = {e: c for e, c in p.terms.items() if e[yi] == 0}
        if rest != {R.exps({"a": (k - 1) * d + 1, "t": 1}): 1}:
            return Verdict(False, name, f"fails at k={k}")
    return Verdict(True, name, f"k <= {k_max}")


# -- structure --------------------------------------------------------------------------

def _expansion_is(space: SpaceId, coeff: str, expr: str, want: dict[str, int], other: str = "1") -> bool:
    pres = catalog(space, coeff)
    return pres.multiply(expr, other).as_dict() == want


def named_relations() -> list[Verdict]:
    out = []
    for field in FIELDS:
        sp3 = SpaceId("SP2", field, 3)
        out.append(Verdict(_expansion_is(sp3, "Z", "g^4", {"g^2*h/2": 4, "h^2/2": -1}),
                           f"g^4 = 4*(g^2*h/2) - h^2/2 in SP2N(n=3) [{field}]"))
        out.append(Verdict(_expansion_is(sp3, "Z", "g^3*h/2", {"g*h^2/4": 3}),
                           f"g^3*h/2 = 3*(g*h^2/4) in SP2N(n=3) [{field}]"))
        for n in (None, 2, 3):
            sp = SpaceId("SP2", field, n)
            out.append(Verdict(_expansion_is(sp, "Z", "g", {"g*h/2": 2}, "h"),
                               f"g*h = 2*(g*h/2) in {sp}"))
        mp = SpaceId("MP", field)
        out.append(Verdict(_expansion_is(mp, "F2", "t", {"m*t": 1}, "t"), f"t*t = m*t in {mp} mod 2"))
    return out


def vanishing_pattern(field: str, max_degree: int = 30) -> Verdict:
    """Odd integral cohomology of SP2 vanishes only in degrees 1, 3, 5 (and 9 for H)."""
    pres = catalog(SpaceId("SP2", field), "Z")
    want = {1, 3, 5} | ({9} if field == "H" else set())
    zero = {k for k in range(1, max_degree + 1, 2) if pres.piece(k).dimension == 0}
    name = f"odd vanishing [{field}]"
    if zero != want:
        return Verdict(False, name, f"vanishes in {sorted(zero)}, expected {sorted(want)}")
    for k in range(1, max_degree + 1, 2):
        if pres.piece(k).quotient.free_rank or any(o != 2 for o in pres.piece(k).quotient.torsion):
            return Verdict(False, name, f"degree {k} is not an F2 vector space")
    return Verdict(True, name, f"vanishes exactly in {sorted(want)} up to {max_degree}")


def top_class_name(n: int) -> str:
    return "h" if n == 1 else f"h^{n}/{2 ** (n - 1)}"


def top_cell(field: str, n: int) -> Verdict:
    d = D[field]
    pres = catalog(SpaceId("SP2", field, n), "Z")
    top = pres.piece(2 * n * d)
    name = f"top class SP2N(n={n}) [{field}]"
    names = [b.name for b in top.basis]
    if top.ranks != (1, 0) or names != [top_class_name(n)]:
        return Verdict(False, name, f"degree {2 * n * d} is {names}")
    for k in range(2 * n * d + 1, 2 * n * d + 3 * d + 1):
        if pres.piece(k).dimension:
            return Verdict(False, name, f"degree {k} is nonzero")
    return Verdict(True, name, f"{top_class_name(n)} in degree {2 * n * d}, zero above to {2 * n * d + 3 * d}")


def uct_spaces(field: str, truncations=(1, 2, 3, 4)) -> list[SpaceId]:
    out = [SpaceId(k, field) for k in ("KP", "RP", "RK", "Gamma", "Borel", "MP", "SP2")]
    for n in truncations:
        out += [SpaceId(k, field, n) for k in ("KP", "RK", "Gamma", "Borel", "MP", "SP2")]
    out.append(SpaceId("KP", field, 0))
    return out


def universal_coefficients(space: SpaceId, max_degree: int) -> Verdict | None:
    """``dim H^k(F2) = free(k) + t2(k) + t2(k+1)``; ``None`` without both presentations."""
    try:
        Z = catalog(space, "Z")
        F = catalog(space, "F2")
    except UnsupportedCombination:
        return None
    name = f"universal coefficients {space}"
    for k in range(max_degree + 1):
        free, t2 = Z.piece(k).ranks
        t2_next = Z.piece(k + 1).ranks[1]
        dim = F.piece(k).dimension
        if dim != free + t2 + t2_next:
            return Verdict(False, name, f"degree {k}: {dim} != {free} + {t2} + {t2_next}")
    return Verdict(True, name, f"degrees 0..{max_degree}")


def uct_checks(field: str, max_degree: int | None = None) -> list[Verdict]:
    top = max_degree if max_degree is not None else 10 * D[field]
    out = [universal_coefficients(s, top) for s in uct_spaces(field)]
    return [v for v in out if v is not None]


def structure_suite(max_degree: int | None = None) -> list[Verdict]:
    out = named_relations()
    for field in FIELDS:
        out.append(vanishing_pattern(field))
        out += [top_cell(field, n) for n in (1, 2, 3, 4)]
        out += uct_checks(field, max_degree)
    return out


# -- running --------------------------------------------------------------------------

SUITES = {
    "appendix": lambda top: appendix_suite(),
    "oracle": lambda top: oracle_suite(),
    "exactness": exactness_suite,
    "kernels": lambda top: kernels_suite(),
    "closedforms": lambda top: closedforms_suite(),
    "structure": structure_suite,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suites(names, max_degree: int | None = None, workers: int | None = None) -> list[tuple[str, list[Verdict]]]:
    order = list(SUITES) if "all" in names else list(names)
    for n in order:
        if n not in SUITES:
            raise ValueError(f"unknown suite {n!r}")
    workers = workers or thread_count()
    if workers == 1 or len(order) == 1:
        results = [SUITES[n](max_degree) for n in order]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda n: SUITES[n](max_degree), order))
    return list(zip(order, results))


def suite_verdict(name: str, verdicts: list[Verdict]) -> Verdict:
    return combine(name, verdicts)
