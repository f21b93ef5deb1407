"""Serializers: Scala .scl tuning files, CSV tables, layout JSON for the UI.

All three emitters are deterministic byte-for-byte: fixed decimal widths,
LF line endings, and canonical JSON (sorted keys, 2-space indent), so the
outputs can be golden-tested and consumed as stable interchange files.
"""
from __future__ import annotations

import csv
import io
import json
import math

from . import fifths, layouts
from .approx import TemperamentRow
from .layouts import FIFTH_WINDOWS, LayoutVariant, ROWS
from .pitch import OCTAVE_CENTS

LAYOUT_JSON_SCHEMA_VERSION = 1


def emit_scl(q: int, description: str) -> str:
    """Scala scale file for q-EDO: q-1 cents degrees plus the exact 2/1 octave.

    Degrees carry five decimals, the common interchange precision; every
    degree line starts with one space.
    """
    if q < 1:
        raise ValueError(f"division count must be >= 1, got {q}")
    lines = [f"! c{q}.scl", "!", description, f" {q}", "!"]
    for i in range(1, q):
        lines.append(f" {i * OCTAVE_CENTS / q:.5f}")
    lines.append(" 2/1")
    return "\n".join(lines) + "\n"


_TEMPERAMENT_HEADER = ["divisions", "fifth_steps", "fifth_height", "fifth_cents", "deviation_cents"]
_OVERTONE_HEADER = ["label", "ratio", "log2", "mantissa_cents", "nearest_step", "deviation_cents"]


def _fmt(x: float) -> str:
    return f"{x:.8f}"


def emit_table_csv(rows, kind: str | None = None) -> str:
    """CSV for a fifth-approximation or overtone table (8-decimal reals, LF).

    The row type picks the columns; pass kind="temperaments" or
    kind="overtones" explicitly when rows may be empty.
    """
    if kind is None:
        if not rows:
            raise ValueError("cannot infer table kind from an empty row list; pass kind=")
        kind = "temperaments" if isinstance(rows[0], TemperamentRow) else "overtones"
    if kind not in ("temperaments", "overtones"):
        raise ValueError(f"unknown table kind {kind!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if kind == "temperaments":
        writer.writerow(_TEMPERAMENT_HEADER)
        for row in rows:
            writer.writerow([row.q, row.p, _fmt(row.fifth_height),
                             _fmt(row.fifth_cents), _fmt(row.delta_cents)])
    else:
        writer.writerow(_OVERTONE_HEADER)
        for row in rows:
            ratio = (str(row.ratio.numerator) if row.ratio.denominator == 1
                     else f"{row.ratio.numerator}/{row.ratio.denominator}")
            log2_full = math.log2(row.ratio.numerator) - math.log2(row.ratio.denominator)
            writer.writerow([row.label, ratio, _fmt(log2_full), _fmt(row.mantissa_cents),
                             row.nearest, _fmt(row.deviation_cents)])
    return buf.getvalue()


def emit_layout_csv(layout: LayoutVariant) -> str:
    """One CSV line per key: manual, row, x, step, color."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["manual", "row", "x", "step", "color"])
    for manual in layout.manuals:
        for row in ROWS:
            for key in sorted((k for k in layout.keys if k.manual == manual and k.row == row),
                              key=lambda k: k.x):
                writer.writerow([key.manual, key.row, key.x, key.step, key.color])
    return buf.getvalue()


def emit_layout_json(layout: LayoutVariant) -> str:
    """Canonical JSON for the browser keyboard; refuses an invalid layout.

    Variants that come with a naming table also carry per-step name labels
    and diatonic/overtone annotations.
    """
    problems = layouts.validate(layout)
    if problems:
        raise ValueError(f"refusing to export invalid layout {layout.id}: " + "; ".join(problems))
    q = layout.system.divisions
    manuals = []
    for manual in layout.manuals:
        rows = []
        for row in ROWS:
            keys = sorted((k for k in layout.keys if k.manual == manual and k.row == row),
                          key=lambda k: k.x)
            rows.append({
                "kind": row,
                "keys": [{"step": k.step, "x": k.x, "color": k.color} for k in keys],
            })
        manuals.append({"name": manual, "rows": rows})
    doc = {
        "schema_version": LAYOUT_JSON_SCHEMA_VERSION,
        "variant_id": layout.id,
        "system": {"divisions": q, "step_cents": layout.system.step_cents},
        "manuals": manuals,
    }
    if layout.id in FIFTH_WINDOWS:
        doc["labels"] = {
            str(step): [name.render() for name in fifths.names_of_step(step, 4, q=q)]
            for step in range(1, q + 1)
        }
        annotations = {}
        for step in range(1, q + 1):
            note = layouts.annotate(step, q=q)
            if note.diatonic is not None or note.overtone is not None:
                annotations[str(step)] = {"diatonic": note.diatonic, "overtone": note.overtone}
        doc["annotations"] = annotations
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
