"""Per-degree generator tables and their text, JSON and CSV forms."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from ..presentations import SpaceId, catalog
from ..presentations.base import GradedPiece

FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class TableRow:
    degree: int
    free: tuple[str, ...] = ()
    torsion2: tuple[str, ...] = ()


@dataclass
class TableReport:
    space: str
    field: str
    d: int
    coeff: str
    n: int | None
    rows: list[TableRow] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "space": self.space,
            "field": self.field,
            "d": self.d,
            "coeff": self.coeff,
            "n": self.n,
            "degrees": [
                {"degree": r.degree, "free": list(r.free), "torsion2": list(r.torsion2)}
                for r in self.rows
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> TableReport:
        rows = [TableRow(r["degree"], tuple(r["free"]), tuple(r["torsion2"])) for r in data["degrees"]]
        return cls(data["space"], data["field"], data["d"], data["coeff"], data["n"], rows)

    def entries(self) -> list[tuple[int, str, str]]:
        """``(degree, generator, order)`` triples; F2 classes have order 2."""
        out = []
        free_order = "2" if self.coeff == "F2" else "inf"
        for r in self.rows:
            out += [(r.degree, g, free_order) for g in r.free]
            out += [(r.degree, g, "2") for g in r.torsion2]
        return out


def piece_row(piece: GradedPiece) -> TableRow:
    free = tuple(b.display for b in piece.free)
    tors = tuple(b.display for b in piece.torsion)
    return TableRow(piece.degree, free, tors)


def build_report(space: SpaceId, coeff: str, lo: int, hi: int, pieces=None) -> TableReport:
    """Table for degrees ``lo..hi``; ``pieces`` may supply precomputed pieces."""
    pres = catalog(space, coeff)
    if pieces is None:
        pieces = [pres.piece(k) for k in range(lo, hi + 1)]
    rows = [piece_row(p) for p in pieces]
    return TableReport(space.label, space.field, space.d, coeff, space.n, rows)


def emit_report(report: TableReport, fmt: str) -> bytes:
    if fmt == "json":
        text = json.dumps(report.as_dict(), indent=2, ensure_ascii=False) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "generator", "order"])
        for row in report.entries():
            w.writerow(row)
        text = buf.getvalue()
    elif fmt == "text":
        text = _text_table(report)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return text.encode("utf-8")


def _text_table(report: TableReport) -> str:
    n = "inf" if report.n is None else str(report.n)
    head = f"{report.space} field={report.field} d={report.d} coeff={report.coeff} n={n}"
    free_label = "classes" if report.coeff == "F2" else "infinite order"
    cells = [(str(r.degree), ", ".join(r.free), ", ".join(r.torsion2)) for r in report.rows]
    w0 = max([3] + [len(c[0]) for c in cells])
    w1 = max([len(free_label)] + [len(c[1]) for c in cells])
    lines = [head]
    if report.coeff == "F2":
        lines.append(f"{'deg'.rjust(w0)}  {free_label}")
        lines += [f"{c[0].rjust(w0)}  {c[1]}".rstrip() for c in cells]
    else:
        lines.append(f"{'deg'.rjust(w0)}  {free_label.ljust(w1)}  order 2")
        lines += [f"{c[0].rjust(w0)}  {c[1].ljust(w1)}  {c[2]}".rstrip() for c in cells]
    return "\n".join(lines) + "\n"


def parse_json_report(data: bytes | str) -> TableReport:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return TableReport.from_dict(json.loads(data))
