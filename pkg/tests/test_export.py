"""Tests for the scl, CSV, and layout JSON serializers, with golden files."""
import csv
import io
import json
import pathlib

import pytest

from edo53 import approx, export, layouts

GOLDEN = pathlib.Path(__file__).parent / "golden"


def test_scl_structure_53():
    text = export.emit_scl(53, "53-tone equal temperament")
    lines = text.splitlines()
    assert lines[0] == "! c53.scl"
    assert lines[1] == "!"
    assert lines[2] == "53-tone equal temperament"
    assert lines[3] == " 53"
    assert lines[4] == "!"
    assert lines[5] == " 22.64151"
    assert lines[-1] == " 2/1"
    assert len(lines) == 5 + 53
    assert all(line.startswith(" ") for line in lines[5:])
    assert text.endswith("\n")


def test_scl_12_and_41():
    twelve = export.emit_scl(12, "semitones").splitlines()
    assert twelve[5] == " 100.00000"
    assert twelve[-2] == " 1100.00000"
    assert twelve[-1] == " 2/1"
    assert export.emit_scl(41, "41-EDO").splitlines()[5] == " 29.26829"


def test_scl_rejects_zero_divisions():
    with pytest.raises(ValueError):
        export.emit_scl(0, "empty")


def test_temperament_csv_row_count_and_values():
    text = export.emit_table_csv(approx.fifth_table())
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 12
    assert "\r" not in text
    row53 = next(r for r in rows if r["divisions"] == "53")
    assert row53["fifth_steps"] == "31"
    assert float(row53["deviation_cents"]) == pytest.approx(0.06820836, abs=1e-6)


def test_overtone_csv_nearest_column():
    text = export.emit_table_csv(approx.overtone_table())
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 12
    assert [int(r["nearest_step"]) for r in rows] == [1, 54, 32, 18, 15, 44, 10, 25, 38, 49, 6, 14]


def test_csv_empty_rows():
    assert export.emit_table_csv([], kind="temperaments").splitlines() == [
        "divisions,fifth_steps,fifth_height,fifth_cents,deviation_cents"
    ]
    with pytest.raises(ValueError):
        export.emit_table_csv([])


def test_csv_round_trips_to_printed_precision():
    text = export.emit_table_csv(approx.fifth_table())
    for parsed, row in zip(csv.DictReader(io.StringIO(text)), approx.fifth_table()):
        assert float(parsed["fifth_cents"]) == pytest.approx(row.fifth_cents, abs=5e-9)
        assert float(parsed["deviation_cents"]) == pytest.approx(row.delta_cents, abs=5e-9)


def test_layout_json_53v1():
    doc = json.loads(export.emit_layout_json(layouts.load_variant("53-v1")))
    assert doc["schema_version"] == 1
    assert doc["variant_id"] == "53-v1"
    assert doc["system"]["divisions"] == 53
    total = sum(len(row["keys"]) for manual in doc["manuals"] for row in manual["rows"])
    assert total == 53
    assert doc["labels"]["43"] == ["F4#", "D4b"]
    assert doc["labels"]["45"] == ["B"]
    assert doc["annotations"]["10"] == {
        "diatonic": "major second",
        "overtone": "major second (9th harmonic)",
    }
    steps_seen = sorted(
        key["step"] for manual in doc["manuals"] for row in manual["rows"] for key in row["keys"]
    )
    assert steps_seen == list(range(1, 54))


def test_layout_json_unnamed_variants_have_no_labels():
    for vid in ("29-v1", "53-v4"):
        doc = json.loads(export.emit_layout_json(layouts.load_variant(vid)))
        assert "labels" not in doc
        assert "annotations" not in doc


def test_layout_json_refuses_invalid_layout():
    v1 = layouts.load_variant("53-v1")
    broken = layouts.LayoutVariant(
        id=v1.id, system=v1.system, keys=v1.keys[:-1], source="test"
    )
    with pytest.raises(ValueError):
        export.emit_layout_json(broken)


def test_layout_csv():
    text = export.emit_layout_csv(layouts.load_variant("29-v1"))
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 29
    assert {r["manual"] for r in rows} == {"lower", "middle"}
    assert all(r["color"] in ("white", "black") for r in rows)


def test_emitters_are_deterministic():
    assert export.emit_scl(53, "x") == export.emit_scl(53, "x")
    assert export.emit_table_csv(approx.fifth_table()) == export.emit_table_csv(approx.fifth_table())
    v1 = layouts.load_variant("53-v1")
    assert export.emit_layout_json(v1) == export.emit_layout_json(layouts.load_variant("53-v1"))


@pytest.mark.parametrize(
    "name,produce",
    [
        ("c53.scl", lambda: export.emit_scl(53, "53-tone equal temperament")),
        ("table1.csv", lambda: export.emit_table_csv(approx.fifth_table())),
        ("table2.csv", lambda: export.emit_table_csv(approx.overtone_table())),
        ("53-v1.json", lambda: export.emit_layout_json(layouts.load_variant("53-v1"))),
    ],
)
def test_golden_files(name, produce):
    golden = (GOLDEN / name).read_bytes()
    assert produce().encode() == golden
    assert produce().encode() == golden  # and again: same bytes on reruns
