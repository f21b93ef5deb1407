"""Rational approximation of the pure fifth and the overtone deviation table.

Reproduces the two classic numeric tables of the 53-EDO literature: the
per-division fifth approximation table (how close round(q*alpha)/q comes
to alpha = log2(3/2) for each division count q) and the table of the
first twenty harmonics quantized to 53-EDO steps.  Continued-fraction
machinery explains where the good divisions 12, 17, 29, 41, 53 come from.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .pitch import OCTAVE_CENTS, PURE_FIFTH_HEIGHT, as_ratio, height_of_ratio, nearest_step

#: Division counts of the standard fifth approximation table.
DEFAULT_DIVISIONS = (5, 7, 12, 17, 21, 24, 29, 31, 41, 53, 65, 359)

#: Known misprints in circulated printings of these tables.  Values here are
#: the computed ones; the note records what the printings show instead.
ERRATA = {
    "fifth-table-q29-sign": (
        "q=29: the deviation is negative (17/29 = 0.5862 exceeds log2(3/2)); "
        "printings of this table show it with a positive sign."
    ),
    "next-better-359-claim": (
        "210/359 is often quoted as the first improvement over 31/53, but the "
        "exhaustive scan finds 179/306 first (306 < 359); both improve on 53."
    ),
    "overtone-k15-mantissa": (
        "the 15th-harmonic mantissa is 1088.26871473 c (= 1200*frac(log2 15)); "
        "printings show 1088.2686672, a dropped-digit misprint."
    ),
}


@dataclass(frozen=True)
class TemperamentRow:
    """One division's best tempered fifth: p steps out of q."""

    q: int
    p: int
    fifth_height: float
    fifth_cents: float
    delta_cents: float


@dataclass(frozen=True)
class OvertoneRow:
    """One harmonic (or derived interval) quantized to a q-EDO step."""

    label: str
    ratio: Fraction
    height: float          # octave-reduced, in [0, 1)
    mantissa_cents: float
    nearest: int           # 1..q, or q+1 for the exact octave
    deviation_cents: float


def continued_fraction(x: float, max_terms: int = 24) -> list[int]:
    """Continued-fraction terms [0; a1, a2, ...] of x in (0, 1).

    Extraction stops at max_terms or once the remaining fractional part
    drops below 1e-12, where double precision yields garbage terms.
    """
    if not 0.0 < x < 1.0:
        raise ValueError(f"expected a value in (0, 1), got {x}")
    if max_terms < 1:
        raise ValueError(f"max_terms must be >= 1, got {max_terms}")
    terms = [0]
    frac = x
    while len(terms) < max_terms and frac >= 1e-12:
        y = 1.0 / frac
        a = int(math.floor(y))
        frac = y - a
        if frac > 1.0 - 1e-12:  # noise just below an exact integer quotient
            a += 1
            frac = 0.0
        terms.append(a)
    return terms


def convergents(terms: list[int]) -> list[tuple[int, int]]:
    """Convergents p/q of a continued fraction, by the standard recurrence."""
    out = []
    p_prev, q_prev = 1, 0
    p, q = terms[0], 1
    out.append((p, q))
    for a in terms[1:]:
        p, q, p_prev, q_prev = a * p + p_prev, a * q + q_prev, p, q
        out.append((p, q))
    return out


def semiconvergents(terms: list[int]) -> list[tuple[int, int]]:
    """Intermediate (mediant) fractions between consecutive convergents.

    For each term a_n >= 2 this yields (p_{n-2} + m*p_{n-1}) / (q_{n-2} +
    m*q_{n-1}) for m = 1..a_n-1; for alpha the family includes 10/17 and
    17/29, the fifths of the 17- and 29-tone systems.
    """
    out = []
    conv = convergents(terms)
    for i, a in enumerate(terms[1:], start=1):
        p_back, q_back = (1, 0) if i == 1 else conv[i - 2]
        p_prev, q_prev = conv[i - 1]
        for m in range(1, a):
            out.append((p_back + m * p_prev, q_back + m * q_prev))
    return out


def best_fifth_step(q: int) -> tuple[int, float]:
    """Step count p nearest to a pure fifth in q-EDO, and the deviation.

    The deviation is delta = 1200*(alpha - p/q) cents: positive when the
    tempered fifth is flat of 3/2, negative when it overshoots.
    """
    if q < 2:
        raise ValueError(f"division count must be >= 2, got {q}")
    p = math.floor(q * PURE_FIFTH_HEIGHT + 0.5)
    delta = OCTAVE_CENTS * (PURE_FIFTH_HEIGHT - p / q)
    return p, delta


def fifth_table(q_list=None) -> list[TemperamentRow]:
    """Fifth approximation rows for the given divisions (default: the classic 12)."""
    rows = []
    for q in q_list if q_list is not None else DEFAULT_DIVISIONS:
        p, delta = best_fifth_step(q)
        rows.append(
            TemperamentRow(
                q=q,
                p=p,
                fifth_height=p / q,
                fifth_cents=OCTAVE_CENTS * p / q,
                delta_cents=delta,
            )
        )
    return rows


def next_better_division(q0: int, q_max: int) -> list[tuple[int, int, float]]:
    """Divisions q in (q0, q_max] whose fifth beats q0's, by exhaustive scan.

    "Beats" is measured per step, |q*alpha - p| < |q0*alpha - p0|, the
    classical best-approximation sense in which the convergent denominators
    12, 41, 53, 306 are records; comparing the raw deviation |alpha - p/q|
    instead would let any sufficiently fine division win by fineness alone.
    For q0 = 53 the first hit is 306, then 359.
    """
    if q0 < 2:
        raise ValueError(f"division count must be >= 2, got {q0}")
    if q_max <= q0:
        raise ValueError(f"scan bound {q_max} must exceed {q0}")
    p0, _ = best_fifth_step(q0)
    err0 = abs(q0 * PURE_FIFTH_HEIGHT - p0)
    out = []
    for q in range(q0 + 1, q_max + 1):
        p, delta = best_fifth_step(q)
        if abs(q * PURE_FIFTH_HEIGHT - p) < err0:
            out.append((q, p, delta))
    return out


def improvement_ratio(q_ref: int, q_other: int) -> float:
    """How many times larger q_other's fifth deviation is than q_ref's."""
    _, d_ref = best_fifth_step(q_ref)
    _, d_other = best_fifth_step(q_other)
    return abs(d_other) / abs(d_ref)


#: Overtone table rows: (label, ratio).  Harmonics k enter as k/1; the minor
#: third comes from the interval between the 5th and 3rd harmonics, whose
#: octave-reduced ratio is 6/5.
OVERTONE_ROWS = (
    ("prime", Fraction(1)),
    ("octave", Fraction(2)),
    ("fifth", Fraction(3)),
    ("major third", Fraction(5)),
    ("minor third (5-3)", Fraction(6, 5)),
    ("minor seventh", Fraction(7)),
    ("major second", Fraction(9)),
    ("diminished fifth", Fraction(11)),
    ("minor sixth", Fraction(13)),
    ("major seventh", Fraction(15)),
    ("minor second", Fraction(17)),
    ("minor third", Fraction(19)),
)


def overtone_table(q: int = 53) -> list[OvertoneRow]:
    """Quantize the first twenty harmonics (odd ones, plus 6/5) to q-EDO.

    The exact octave is reported as step q+1 rather than step 1, so the
    octave row stays distinguishable from the prime.
    """
    if q < 2:
        raise ValueError(f"division count must be >= 2, got {q}")
    rows = []
    for label, ratio in OVERTONE_ROWS:
        ratio = as_ratio(ratio)
        h = height_of_ratio(ratio)
        n, dev = nearest_step(q, h)
        if h == 0.0 and ratio > 1:
            n = q + 1
        rows.append(
            OvertoneRow(
                label=label,
                ratio=ratio,
                height=h,
                mantissa_cents=OCTAVE_CENTS * h,
                nearest=n,
                deviation_cents=dev,
            )
        )
    return rows
