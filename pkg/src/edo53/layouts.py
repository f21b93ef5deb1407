"""Keyboard layout data model, shipped placements, and validation.

Ten placements ship as plain-text data files: six 53-step three-manual
variants, two 29-step and two 41-step two-manual variants.  The manual
sizes realize the identities 12+17 = 29, 17+24 = 41, 12+17+24 = 53, so a
pair of adjacent manuals of the big keyboard carries a complete 29- or
41-tone system on its own.

Data file format (one file per variant): `#` starts a comment, a header
line `id=<variant> q=<divisions>`, then one line per key:

    <manual> <row> <x> <step>

with manual in {lower, middle, upper}, row in {front, back}, x the
left-to-right slot within the row, and step in 1..q.  Front-row keys are
white, back-row keys black; x follows ascending step order, since the
source drawings do not survive transcription well enough to recover true
key geometry.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from . import approx, fifths
from .pitch import EdoSystem

MANUALS = ("lower", "middle", "upper")
ROWS = ("front", "back")

VARIANT_IDS = (
    "53-v1", "53-v2", "53-v3", "53-v4", "53-v5", "53-v6",
    "29-v1", "29-v2", "41-v1", "41-v2",
)

#: Required key count per manual, by division count.
MANUAL_SIZES = {
    53: {"lower": 12, "middle": 17, "upper": 24},
    29: {"lower": 12, "middle": 17},
    41: {"middle": 17, "upper": 24},
}

#: Fifth-index window [lo, hi] of the variants that come with a naming
#: table; a step's representative fifth index is chosen inside it.
FIFTH_WINDOWS = {
    "53-v1": (-22, 30),
    "53-v2": (-26, 26),
    "53-v3": (-22, 30),
}


@dataclass(frozen=True)
class Key:
    step: int
    manual: str
    row: str
    x: int
    color: str


@dataclass(frozen=True)
class LayoutVariant:
    """A validated assignment of steps 1..q to keys on named manuals."""

    id: str
    system: EdoSystem
    keys: tuple[Key, ...]
    source: str

    @property
    def manuals(self) -> tuple[str, ...]:
        return tuple(m for m in MANUALS if any(k.manual == m for k in self.keys))

    def manual_keys(self, manual: str) -> list[Key]:
        if manual not in MANUALS:
            raise ValueError(f"unknown manual {manual!r}")
        return sorted((k for k in self.keys if k.manual == manual), key=lambda k: k.step)

    def manual_steps(self, manual: str) -> list[int]:
        return [k.step for k in self.manual_keys(manual)]


class LayoutDataError(ValueError):
    """A shipped or supplied layout file failed to parse or validate."""


def parse_variant(text: str, source: str = "<string>") -> LayoutVariant:
    """Parse the line-oriented variant format; does not validate invariants."""
    header = None
    keys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            fields = dict(part.split("=", 1) for part in line.split() if "=" in part)
            if sorted(fields) != ["id", "q"]:
                raise LayoutDataError(f"{source}:{lineno}: expected header 'id=<id> q=<q>'")
            header = (fields["id"], int(fields["q"]))
            continue
        parts = line.split()
        if len(parts) != 4:
            raise LayoutDataError(f"{source}:{lineno}: expected '<manual> <row> <x> <step>'")
        manual, row, x, step = parts[0], parts[1], int(parts[2]), int(parts[3])
        if manual not in MANUALS:
            raise LayoutDataError(f"{source}:{lineno}: unknown manual {manual!r}")
        if row not in ROWS:
            raise LayoutDataError(f"{source}:{lineno}: unknown row {row!r}")
        keys.append(Key(step=step, manual=manual, row=row, x=x,
                        color="white" if row == "front" else "black"))
    if header is None:
        raise LayoutDataError(f"{source}: empty layout file")
    vid, q = header
    return LayoutVariant(id=vid, system=EdoSystem(q), keys=tuple(keys), source=source)


def validate(layout: LayoutVariant) -> list[str]:
    """Check every layout invariant; an empty report means valid."""
    report = []
    q = layout.system.divisions
    seen = {}
    for key in layout.keys:
        seen[key.step] = seen.get(key.step, 0) + 1
        if not 1 <= key.step <= q:
            report.append(f"step {key.step} out of range 1..{q}")
        if (key.color == "white") != (key.row == "front"):
            report.append(f"step {key.step}: color {key.color} contradicts row {key.row}")
    for step, count in sorted(seen.items()):
        if count > 1:
            report.append(f"duplicate step {step} ({count} keys)")
    for step in range(1, q + 1):
        if step not in seen:
            report.append(f"missing step {step}")
    sizes = MANUAL_SIZES.get(q, {})
    for manual in MANUALS:
        have = sum(1 for k in layout.keys if k.manual == manual)
        want = sizes.get(manual, 0)
        if sizes and have != want:
            report.append(f"{manual} manual has {have} keys, expected {want}")
    for manual in MANUALS:
        for row in ROWS:
            keys = [k for k in layout.keys if k.manual == manual and k.row == row]
            xs = [k.x for k in keys]
            if sorted(set(xs)) != sorted(xs):
                report.append(f"{manual}/{row}: x slots not distinct")
            elif [k.step for k in sorted(keys, key=lambda k: k.x)] != sorted(k.step for k in keys):
                report.append(f"{manual}/{row}: x order disagrees with step order")
    return report


def load_variant(variant_id: str) -> LayoutVariant:
    """Load and validate a shipped placement; fails loudly on any defect."""
    if variant_id not in VARIANT_IDS:
        raise KeyError(f"unknown layout variant {variant_id!r}; shipped: {', '.join(VARIANT_IDS)}")
    text = resources.files(__package__).joinpath(f"data/{variant_id}.layout").read_text()
    layout = parse_variant(text, source=f"data/{variant_id}.layout")
    if layout.id != variant_id:
        raise LayoutDataError(f"data/{variant_id}.layout declares id {layout.id!r}")
    problems = validate(layout)
    if problems:
        raise LayoutDataError(f"{variant_id} failed validation: " + "; ".join(problems))
    return layout


def centered_fifth(step: int, lo: int = -26, hi: int = 26, q: int = 53, p: int = 31) -> int:
    """The unique fifth index of a step inside a window of q consecutive indices."""
    if hi - lo + 1 != q:
        raise ValueError(f"window [{lo}, {hi}] must span exactly {q} indices")
    inv = pow(p, -1, q)
    f = (inv * (step - 1)) % q
    while f > hi:
        f -= q
    return f


def manual_fifth_window(layout: LayoutVariant, manual: str) -> set[int]:
    """Fifth indices of a manual's steps, under the variant's naming window.

    Only the 53-step variants with a naming table carry a window; for them
    the three windows are pairwise disjoint and tile 53 consecutive fifths.
    """
    if layout.id not in FIFTH_WINDOWS:
        raise ValueError(f"variant {layout.id} has no naming window")
    lo, hi = FIFTH_WINDOWS[layout.id]
    q = layout.system.divisions
    return {centered_fifth(step, lo, hi, q=q) for step in layout.manual_steps(manual)}


def subsystem_steps(layout: LayoutVariant, manuals) -> list[int]:
    """Sorted union of the given manuals' steps (adjacent pairs form 29/41 systems)."""
    chosen = set(manuals)
    unknown = chosen - set(MANUALS)
    if unknown:
        raise ValueError(f"unknown manuals {sorted(unknown)}")
    if not chosen:
        raise ValueError("subsystem needs at least one manual")
    return sorted(k.step for k in layout.keys if k.manual in chosen)


@dataclass(frozen=True)
class StepAnnotation:
    """Why a step matters: diatonic interval and/or overtone landing site."""

    step: int
    diatonic: str | None
    overtone: str | None


def _ordinal(n: int) -> str:
    suffix = {1: "st", 2: "nd", 3: "rd"}.get(n % 10 if n % 100 not in (11, 12, 13) else 0, "th")
    return f"{n}{suffix}"


def _overtone_labels(q: int = 53) -> dict[int, str]:
    labels = {}
    for row in approx.overtone_table(q):
        step = (row.nearest - 1) % q + 1
        if step in labels:
            continue  # the octave lands on the prime's step; keep the first label
        if row.ratio.denominator == 1:
            labels[step] = f"{row.label} ({_ordinal(row.ratio.numerator)} harmonic)"
        else:
            labels[step] = row.label
    return labels


def annotate(step: int, q: int = 53) -> StepAnnotation:
    """Diatonic and overtone labels of a 53-EDO step, where they apply."""
    if not 1 <= step <= q:
        raise ValueError(f"step index {step} out of range 1..{q}")
    f = centered_fifth(step, q=q)
    diatonic = fifths.DIATONIC_NAMES.get(f)
    overtone = _overtone_labels(q).get(step)
    return StepAnnotation(step=step, diatonic=diatonic, overtone=overtone)


def adjacent_interval_profile(layout: LayoutVariant, manual: str) -> list[int]:
    """Step gaps between a manual's consecutive keys, wrapping the octave.

    Gaps are in units of one layout step; a single-key manual has no gaps.
    """
    steps = layout.manual_steps(manual)
    if len(steps) < 2:
        return []
    q = layout.system.divisions
    return [b - a for a, b in zip(steps, steps[1:])] + [steps[0] + q - steps[-1]]
