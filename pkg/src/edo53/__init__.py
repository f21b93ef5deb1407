"""53-tone equal temperament toolkit.

Pitch arithmetic on the log2 scale, rational approximation tables for the
pure fifth, harmonic deviation tables, circle-of-fifths note spelling with
enharmonic identities, validated three-manual keyboard layouts (53, 29,
and 41 steps), and exporters for Scala .scl files, CSV tables, and the
layout JSON consumed by the browser keyboard.
"""
from .pitch import (
    EdoSystem,
    OCTAVE_CENTS,
    PURE_FIFTH,
    PURE_FIFTH_HEIGHT,
    cents_of_height,
    cents_of_ratio,
    edo_step_cents,
    frequency_of_step,
    height_of_ratio,
    nearest_step,
    step_height,
)
from .approx import (
    DEFAULT_DIVISIONS,
    ERRATA,
    OvertoneRow,
    TemperamentRow,
    best_fifth_step,
    continued_fraction,
    convergents,
    fifth_table,
    improvement_ratio,
    next_better_division,
    overtone_table,
    semiconvergents,
)
from .fifths import (
    ChainSegment,
    NoteName,
    diatonic_interval_name,
    enharmonic_pairs,
    fifth_of_spelling,
    names_of_step,
    natural_ladder,
    natural_steps,
    pythagorean_chain,
    spelling_of_fifth,
    step_of_fifth,
)
from .layouts import (
    Key,
    LayoutDataError,
    LayoutVariant,
    StepAnnotation,
    VARIANT_IDS,
    adjacent_interval_profile,
    annotate,
    load_variant,
    manual_fifth_window,
    parse_variant,
    subsystem_steps,
    validate,
)
from .export import emit_layout_csv, emit_layout_json, emit_scl, emit_table_csv

__version__ = "0.1.0"
