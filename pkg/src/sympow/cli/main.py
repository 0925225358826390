"""``sympow`` command line: ring tables, products, polynomial families, checks.

Exit status is 0 on success, 1 when a verification fails and 2 for usage
errors (bad flags, unparsable elements, unsupported space/coefficients).
"""

from __future__ import annotations

import argparse
import json
import sys

from ..fibonacci import FAMILIES, FamilyId, family_by_closed_form, family_by_recurrence
from ..presentations import SpaceId, catalog
from .report import FORMATS, build_report, emit_report

SUITE_CHOICES = ("appendix", "oracle", "exactness", "kernels", "closedforms", "structure", "all")


class UsageError(Exception):
    pass


def _truncation(text: str) -> int | None:
    if text.lower() == "inf":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {text!r}") from None


def _space_args(p: argparse.ArgumentParser, space_required: bool = True) -> None:
    p.add_argument("--space", required=space_required,
                   help="sp2, sp2n, mp, thn, kp, kpn, rp, rk, rkn, gamma, gamman, borel, boreln")
    p.add_argument("--field", choices=("C", "H"), default="C")
    p.add_argument("--coeff", choices=("Z", "F2"), default="Z")
    p.add_argument("--n", type=_truncation, default=None, metavar="INT|inf")


def _range_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--deg-from", type=int, default=0)
    p.add_argument("--deg-to", type=int, default=None, help="default: 6d")
    p.add_argument("--format", choices=FORMATS, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sympow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring", help="presentation and generator table over a degree range")
    _space_args(p)
    _range_args(p)

    p = sub.add_parser("basis", help="canonical basis over a degree range")
    _space_args(p)
    _range_args(p)

    p = sub.add_parser("mul", help="normal form of a product (or of one element)")
    _space_args(p)
    p.add_argument("elements", nargs="+", metavar="EXPR")

    p = sub.add_parser("poincare", help="free and order-2 ranks per degree")
    _space_args(p)
    _range_args(p)

    p = sub.add_parser("poly", help="a member of a polynomial family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, choices=(2, 4), default=2)
    p.add_argument("--coeff", choices=("Z", "F2"), default="F2", help="coefficients of nu")
    p.add_argument("--method", choices=("recurrence", "closed"), default="recurrence")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITE_CHOICES, action="append", dest="suites",
                   help="repeatable; default all")
    p.add_argument("--max-deg", type=int, default=None,
                   help="top degree for the exactness and structure checks (default 10d)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _space(args) -> SpaceId:
    try:
        return SpaceId.parse(args.space, args.field, args.n)
    except ValueError as exc:
        raise UsageError(f"--space: {exc}") from None


def _degree_range(args, space: SpaceId) -> tuple[int, int]:
    hi = args.deg_to if args.deg_to is not None else 6 * space.d
    if args.deg_from < 0 or hi < args.deg_from:
        raise UsageError(f"--deg-from/--deg-to: empty or negative range {args.deg_from}..{hi}")
    return args.deg_from, hi


def _write(out, data: bytes | str) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    out.buffer.write(data) if hasattr(out, "buffer") else out.write(data.decode("utf-8"))


def _presentation_text(pres) -> str:
    lines = [f"{pres.space} over {pres.coeff}"]
    if pres.variables:
        lines.append("generators: " + ", ".join(f"{v.name} ({v.degree})" for v in pres.variables))
    rels = getattr(pres, "relations", ())
    if rels:
        lines.append("relations: " + ", ".join(f"{r} = 0" for r in rels))
    if pres.product_rules:
        lines.append("rules: " + "; ".join(pres.product_rules))
    if pres.additive_only:
        lines.append("additive structure only")
    return "\n".join(lines) + "\n"


def cmd_table(args, out, with_header: bool) -> int:
    space = _space(args)
    lo, hi = _degree_range(args, space)
    report = build_report(space, args.coeff, lo, hi)
    if with_header and args.format == "text":
        _write(out, _presentation_text(catalog(space, args.coeff)))
    _write(out, emit_report(report, args.format))
    return 0


def cmd_mul(args, out) -> int:
    if len(args.elements) > 2:
        raise UsageError("mul: expected one or two element expressions")
    pres = catalog(_space(args), args.coeff)
    x = args.elements[0]
    y = args.elements[1] if len(args.elements) == 2 else "1"
    _write(out, f"{pres.multiply(x, y)}\n")
    return 0


def cmd_poincare(args, out) -> int:
    space = _space(args)
    lo, hi = _degree_range(args, space)
    pres = catalog(space, args.coeff)
    rows = [(k, *pres.piece(k).ranks) for k in range(lo, hi + 1)]
    if args.format == "json":
        text = json.dumps([{"degree": k, "free": f, "torsion2": t} for k, f, t in rows], indent=2) + "\n"
    elif args.format == "csv":
        text = "degree,free,torsion2\n" + "".join(f"{k},{f},{t}\n" for k, f, t in rows)
    else:
        text = f"{space} over {args.coeff}\n" + "".join(f"{k:>4}  {f:>3}  {t:>3}\n" for k, f, t in rows)
    _write(out, text)
    return 0


def cmd_poly(args, out) -> int:
    fam = FamilyId(args.family, args.d, args.coeff)
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    if args.method == "closed":
        if args.k < 1:
            raise UsageError("--k: closed forms start at k = 1")
        p = family_by_closed_form(fam, args.k)
    else:
        p = family_by_recurrence(fam, args.k)
    _write(out, f"{p}\n")
    return 0


def cmd_verify(args, out) -> int:
    from .. import suites

    names = args.suites or ["all"]
    results = suites.run_suites(dict.fromkeys(names), args.max_deg)
    ok = all(v.ok for _, vs in results for v in vs)
    if args.format == "json":
        data = [{"suite": s, "checks": [{"name": v.name, "ok": v.ok, "detail": v.detail} for v in vs]}
                for s, vs in results]
        _write(out, json.dumps({"ok": ok, "suites": data}, indent=2) + "\n")
    else:
        lines = []
        for s, vs in results:
            lines.append(f"[{s}]")
            lines += [v.line() for v in vs]
        lines.append("ALL PASS" if ok else "FAILURES")
        _write(out, "\n".join(lines) + "\n")
    return 0 if ok else 1


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command in ("ring", "basis"):
            return cmd_table(args, out, args.command == "ring")
        if args.command == "mul":
            return cmd_mul(args, out)
        if args.command == "poincare":
            return cmd_poincare(args, out)
        if args.command == "poly":
            return cmd_poly(args, out)
        return cmd_verify(args, out)
    except (UsageError, ValueError) as exc:
        err.write(f"sympow {args.command}: {exc}\n")
        return 2


def run_command(argv) -> int:
    return main(argv)
