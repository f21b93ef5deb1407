"""Pitch arithmetic on the logarithmic scale.

An interval is a frequency ratio; its height is the fractional part of
log2 of that ratio, an octave-reduced position in [0, 1).  One octave is
1200 cents, so a height h sits at 1200*h cents.  An equal temperament
with q divisions places its steps at heights (n-1)/q for n = 1..q.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

OCTAVE_CENTS = 1200.0

#: Height of the pure fifth 3/2, computed at runtime (log2 3 - 1).
PURE_FIFTH = Fraction(3, 2)
PURE_FIFTH_HEIGHT = math.log2(3.0) - 1.0


def as_ratio(value) -> Fraction:
    """Coerce to a positive frequency ratio in lowest terms."""
    r = Fraction(value)
    if r <= 0:
        raise ValueError(f"frequency ratio must be positive, got {value!r}")
    return r


def height_of_ratio(r) -> float:
    """Fractional part of log2(r): octave-reduced pitch position in [0, 1)."""
    r = as_ratio(r)
    num, den = r.numerator, r.denominator
    # strip exact octaves so height(2*r) == height(r) bit for bit
    num >>= (num & -num).bit_length() - 1
    den >>= (den & -den).bit_length() - 1
    h = (math.log2(num) - math.log2(den)) % 1.0
    return 0.0 if h == 1.0 else h


def cents_of_height(h: float) -> float:
    return OCTAVE_CENTS * h


def cents_of_ratio(r) -> float:
    """Cents of the octave-reduced ratio, in [0, 1200)."""
    return cents_of_height(height_of_ratio(r))


def edo_step_cents(q: int) -> float:
    """Size of one step of q-EDO in cents."""
    if q < 1:
        raise ValueError(f"division count must be >= 1, got {q}")
    return OCTAVE_CENTS / q


def step_height(q: int, n: int) -> float:
    """Height (n-1)/q of step n in q-EDO; steps are numbered 1..q."""
    if q < 1:
        raise ValueError(f"division count must be >= 1, got {q}")
    if not 1 <= n <= q:
        raise ValueError(f"step index {n} out of range 1..{q}")
    return (n - 1) / q


def nearest_step(q: int, h: float) -> tuple[int, float]:
    """Quantize a height to the closest step of q-EDO.

    Returns (n, deviation_cents) with n in 1..q and the deviation measured
    to the unwrapped nearest grid point, so |deviation| <= 600/q.  Exact
    half-step ties round away from zero.
    """
    if q < 1:
        raise ValueError(f"division count must be >= 1, got {q}")
    m = math.floor(q * h + 0.5)  # round half up == away from zero for h >= 0
    n = m % q + 1
    deviation = OCTAVE_CENTS * (h - m / q)
    return n, deviation


def frequency_of_step(base: float, q: int, n: int, octave: int = 0) -> float:
    """Frequency of step n (1..q) of q-EDO, octave offsets from the base."""
    if base <= 0:
        raise ValueError(f"base frequency must be positive, got {base}")
    return base * 2.0 ** (octave + step_height(q, n))


@dataclass(frozen=True)
class EdoSystem:
    """An equal division of the octave into q steps of 1200/q cents."""

    divisions: int

    def __post_init__(self):
        if self.divisions < 1:
            raise ValueError(f"division count must be >= 1, got {self.divisions}")

    @property
    def step_cents(self) -> float:
        return edo_step_cents(self.divisions)
