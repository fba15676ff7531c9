"""Text renderings of canonical basis matrices.

Four formats are supported: ``pretty`` (aligned columns, ``.`` for zero),
``csv``, ``json`` and ``tex``.  Entries always use the polynomial text
grammar of ``qpoly``, so ``csv`` and ``json`` are lossless and ``json``
can be read back with ``matrix_from_json``.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Dict

from . import __version__
from .combinatorics import format_partition, partition_label
from .fock import CanonicalBasisMatrix, FockVector
from .qpoly import LaurentPoly, parse_laurent

FORMATS = ("pretty", "csv", "json", "tex")


def _label(la) -> str:
    return partition_label(tuple(la))


def _metadata(cb: CanonicalBasisMatrix) -> Dict[str, object]:
    return {
        "kind": cb.kind,
        "modulus": cb.modulus,
        "core": list(cb.core),
        "weight": cb.weight,
        "generator": "fockspace %s" % __version__,
    }


def to_pretty(cb: CanonicalBasisMatrix) -> str:
    name = "m" if cb.kind == "a1" else "h"
    head = "# %s %s=%d core=%s weight=%d rows=%d cols=%d" % (
        cb.kind, name, cb.modulus, _label(cb.core), cb.weight, len(cb.rows), len(cb.cols))
    cells = [[""] + [_label(c) for c in cb.cols]]
    for r in cb.rows:
        row = [_label(r)]
        for c in cb.cols:
            x = cb.entry(r, c)
            row.append(str(x) if x else ".")
        cells.append(row)
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    lines = [head]
    for row in cells:
        first = row[0].ljust(widths[0])
        rest = [cell.rjust(widths[j + 1]) for j, cell in enumerate(row[1:])]
        lines.append("  ".join([first] + rest).rstrip())
    return "\n".join(lines) + "\n"


def to_csv(cb: CanonicalBasisMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["row"] + [format_partition(c) for c in cb.cols])
    for r in cb.rows:
        writer.writerow([format_partition(r)] + [str(cb.entry(r, c)) for c in cb.cols])
    return buf.getvalue()


def to_json(cb: CanonicalBasisMatrix) -> str:
    data = _metadata(cb)
    data["rows"] = [list(r) for r in cb.rows]
    data["cols"] = [list(c) for c in cb.cols]
    data["entries"] = [[str(cb.entry(r, c)) for c in cb.cols] for r in cb.rows]
    return json.dumps(data, indent=1) + "\n"


def _tex_poly(p: LaurentPoly) -> str:
    if not p:
        return r"\cdot"
    out = []
    for e, c in p.items():
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = "q" if e == 1 else "q^{%d}" % e
            body = mono if a == 1 else "%d%s" % (a, mono)
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += sign + body
    return text


def _tex_partition(la) -> str:
    return _label(la) if la else r"\varnothing"


def to_tex(cb: CanonicalBasisMatrix) -> str:
    lines = [r"\begin{array}{c|%s|}" % ("c" * len(cb.cols))]
    header = "".join(r"&\rotatebox{90}{$%s$}" % _tex_partition(c) for c in cb.cols)
    lines.append(header + r"\\\hline")
    for r in cb.rows:
        cells = [_tex_partition(r)] + [_tex_poly(cb.entry(r, c)) for c in cb.cols]
        lines.append("&".join(cells) + r"\\")
    lines.append(r"\hline")
    lines.append(r"\end{array}")
    return "\n".join(lines) + "\n"


def render(cb: CanonicalBasisMatrix, fmt: str = "pretty") -> str:
    if fmt == "pretty":
        return to_pretty(cb)
    if fmt == "csv":
        return to_csv(cb)
    if fmt == "json":
        return to_json(cb)
    if fmt == "tex":
        return to_tex(cb)
    raise ValueError("unknown format %r" % fmt)


def matrix_from_json(text: str) -> CanonicalBasisMatrix:
    """Rebuild the matrix written by ``to_json``."""
    data = json.loads(text)
    rows = [tuple(r) for r in data["rows"]]
    cols = [tuple(c) for c in data["cols"]]
    columns = {}
    for j, c in enumerate(cols):
        terms = {}
        for i, r in enumerate(rows):
            x = parse_laurent(data["entries"][i][j])
            if x:
                terms[r] = x
        columns[c] = FockVector(terms)
    return CanonicalBasisMatrix(data["kind"], data["modulus"], tuple(data["core"]),
                                data["weight"], rows, cols, columns)


def matrix_from_csv(text: str, kind: str, modulus: int, core, weight: int) -> CanonicalBasisMatrix:
    """Rebuild a matrix from ``to_csv`` output plus the metadata csv does not carry."""
    from .combinatorics import parse_partition

    reader = list(csv.reader(io.StringIO(text)))
    cols = [parse_partition(c) for c in reader[0][1:]]
    rows = []
    columns: Dict[tuple, Dict[tuple, LaurentPoly]] = {c: {} for c in cols}
    for line in reader[1:]:
        r = parse_partition(line[0])
        rows.append(r)
        for c, cell in zip(cols, line[1:]):
            x = parse_laurent(cell)
            if x:
                columns[c][r] = x
    return CanonicalBasisMatrix(kind, modulus, tuple(core), weight, rows, cols,
                                {c: FockVector(t) for c, t in columns.items()})
