"""Circle of fifths, note spelling, enharmonic identities, Pythagorean chains.

Note names follow the German convention: letters F C G D A E H (H is the
English B natural), with B accepted and emitted as the alias for H-flat.
Every position f on the chain of fifths (C = 0, sharps at +7, flats at -7)
has exactly one spelling; in 53-EDO the step of fifth f is (31*f) mod 53 + 1.
The constants generalize: pass q and p for other fifth-generated systems
such as (29, 17) and (41, 24).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

#: Letters in chain-of-fifths order; index 1 (C) is the origin.
LETTERS = ("F", "C", "G", "D", "A", "E", "H")

DEFAULT_Q = 53
DEFAULT_P = 31

_NAME_RE = re.compile(r"^([FCGDAEHB])(#+|b+|[0-9]+[#b])?$")


@dataclass(frozen=True, order=True)
class NoteName:
    """A fifth-chain spelling: letter plus signed accidental count (+ = sharps)."""

    letter: str
    accidentals: int

    def __post_init__(self):
        if self.letter not in LETTERS:
            raise ValueError(f"unknown letter {self.letter!r}")

    def render(self) -> str:
        """Printable form: up to 3 accidentals repeated, 4 and more counted.

        Single-flat H renders as its German alias "B".
        """
        if self.letter == "H" and self.accidentals == -1:
            return "B"
        mark = "#" if self.accidentals >= 0 else "b"
        count = abs(self.accidentals)
        if count <= 3:
            return self.letter + mark * count
        return f"{self.letter}{count}{mark}"

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def parse(cls, text: str) -> "NoteName":
        m = _NAME_RE.match(text.strip())
        if not m:
            raise ValueError(f"cannot parse note name {text!r}")
        letter, rest = m.group(1), m.group(2) or ""
        if letter == "B":
            if rest:
                raise ValueError(f"cannot parse note name {text!r}: write H-flats as Hb, Hbb, ...")
            return cls("H", -1)
        if not rest:
            acc = 0
        elif rest[0] in "#b":
            acc = len(rest) if rest[0] == "#" else -len(rest)
        else:
            acc = int(rest[:-1])
            if acc < 4:
                raise ValueError(f"cannot parse note name {text!r}: counted form starts at 4")
            if rest[-1] == "b":
                acc = -acc
        return cls(letter, acc)


def step_of_fifth(f: int, q: int = DEFAULT_Q, p: int = DEFAULT_P) -> int:
    """Step index 1..q reached by f tempered fifths from step 1."""
    return (p * f) % q + 1


def spelling_of_fifth(f: int) -> NoteName:
    """The unique spelling of fifth index f (C = 0)."""
    t = f + 1
    return NoteName(LETTERS[t % 7], math.floor(t / 7))


def fifth_of_spelling(name: NoteName) -> int:
    """Inverse of spelling_of_fifth."""
    return LETTERS.index(name.letter) + 7 * name.accidentals - 1


def names_of_step(n: int, max_acc: int = 4, q: int = DEFAULT_Q, p: int = DEFAULT_P) -> list[NoteName]:
    """All spellings of step n within max_acc accidentals.

    Spellings are the fifth indices congruent to inv(p)*(n-1) mod q; the
    list is ordered fewest accidentals first, sharps before flats on ties.
    """
    if not 1 <= n <= q:
        raise ValueError(f"step index {n} out of range 1..{q}")
    if max_acc < 0:
        raise ValueError(f"max_acc must be >= 0, got {max_acc}")
    inv = pow(p, -1, q)
    f0 = (inv * (n - 1)) % q
    t_lo, t_hi = -7 * max_acc, 7 * max_acc + 6
    names = []
    k = math.ceil((t_lo - 1 - f0) / q)
    while f0 + k * q + 1 <= t_hi:
        name = spelling_of_fifth(f0 + k * q)
        if abs(name.accidentals) <= max_acc:
            names.append(name)
        k += 1
    names.sort(key=lambda nm: (abs(nm.accidentals), 0 if nm.accidentals >= 0 else 1))
    return names


def enharmonic_pairs(
    max_acc: int = 4, q: int = DEFAULT_Q, p: int = DEFAULT_P
) -> list[tuple[int, NoteName, NoteName]]:
    """Steps with two equally simple spellings: the enharmonic identities.

    A pair forms where a step's two cheapest spellings tie in accidental
    count (sharp side first).  In 53-EDO within 4 accidentals these are
    exactly C4#=A4b, D4#=H4b, F4#=D4b, G4#=E4b; a step whose alternative
    spelling costs more (like Fbbb vs A4#) is not an identity the naming
    tables would print.
    """
    pairs = []
    for n in range(1, q + 1):
        names = names_of_step(n, max_acc, q, p)
        if len(names) >= 2 and abs(names[0].accidentals) == abs(names[1].accidentals):
            pairs.append((n, names[0], names[1]))
    return pairs


@dataclass(frozen=True)
class ChainSegment:
    """A run of consecutive fifths and the steps they land on, in chain order."""

    f_start: int
    count: int
    steps: tuple[int, ...]


def pythagorean_chain(f_start: int, count: int, q: int = DEFAULT_Q, p: int = DEFAULT_P) -> ChainSegment:
    """Steps of the fifths f_start..f_start+count-1; distinct while count <= q."""
    if not 1 <= count <= q:
        raise ValueError(f"chain length {count} out of range 1..{q}")
    steps = tuple(step_of_fifth(f, q, p) for f in range(f_start, f_start + count))
    return ChainSegment(f_start=f_start, count=count, steps=steps)


#: Interval reached by f pure fifths (octave-reduced), |f| <= 6.
DIATONIC_NAMES = {
    0: "prime",
    1: "fifth",
    2: "major second",
    3: "major sixth",
    4: "major third",
    5: "major seventh",
    6: "augmented fourth",
    -1: "fourth",
    -2: "minor seventh",
    -3: "minor third",
    -4: "minor sixth",
    -5: "minor second",
    -6: "diminished fifth",
}


def diatonic_interval_name(f: int) -> str:
    """Name of the diatonic (fifth-generated) interval at fifth index f."""
    if abs(f) > 6:
        raise ValueError(f"no diatonic interval at fifth index {f} (|f| > 6)")
    return DIATONIC_NAMES[f]


def natural_steps(q: int = DEFAULT_Q, p: int = DEFAULT_P) -> list[int]:
    """Steps of the seven naturals (fifth indices -1..5), ascending."""
    return sorted(step_of_fifth(f, q, p) for f in range(-1, 6))


def natural_ladder(q: int = DEFAULT_Q, p: int = DEFAULT_P) -> list[int]:
    """Cyclic step gaps along the ascending naturals (C D E F G A H C')."""
    steps = natural_steps(q, p)
    return [b - a for a, b in zip(steps, steps[1:])] + [steps[0] + q - steps[-1]]
