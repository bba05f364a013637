"""Pitch classes, chords, scales and diatonic degrees.

Pitch classes are integers mod 12 with C = 0.  Names are presentation only;
output prefers flats for the black keys.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "PitchClass",
    "Chord",
    "Scale",
    "Degree",
    "MusicError",
    "UnsupportedScaleError",
    "ChordArityError",
    "QUALITIES",
    "NUMERALS",
    "pitch_set_names",
    "triads_of_scale",
    "sevenths_of_scale",
    "root_third_seventh",
    "triads_containing",
]

_NAMES = ("C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B")
_LETTERS = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
_ACCIDENTALS = {"#": 1, "♯": 1, "b": -1, "♭": -1}
_NOTE_RE = re.compile(r"([A-Ga-g])([#♯b♭]*)")

NUMERALS = ("I", "II", "III", "IV", "V", "VI", "VII")


class MusicError(ValueError):
    pass


class UnsupportedScaleError(MusicError):
    pass


class ChordArityError(MusicError):
    pass


class PitchClass(int):
    """An integer pitch class 0-11 (C = 0)."""

    def __new__(cls, value: int):
        return super().__new__(cls, int(value) % 12)

    @classmethod
    def parse(cls, text: str) -> "PitchClass":
        m = _NOTE_RE.fullmatch(text.strip())
        if not m:
            raise MusicError(f"not a note name: {text!r}")
        letter, acc = m.groups()
        return cls(_LETTERS[letter.upper()] + sum(_ACCIDENTALS[a] for a in acc))

    @property
    def name(self) -> str:
        return _NAMES[self]

    def __add__(self, other):
        return PitchClass(int(self) + int(other))

    def __sub__(self, other):
        return PitchClass(int(self) - int(other))

    def __repr__(self):
        return f"PitchClass({self.name})"

    def __str__(self):
        return self.name


def pitch_set_names(pcs: Iterable[int]) -> str:
    return "{" + ", ".join(_NAMES[p % 12] for p in sorted(pcs)) + "}"


# quality -> (interval template, text suffix)
QUALITIES: dict[str, tuple[tuple[int, ...], str]] = {
    "major": ((0, 4, 7), "M"),
    "minor": ((0, 3, 7), "m"),
    "diminished": ((0, 3, 6), "dim"),
    "augmented": ((0, 4, 8), "aug"),
    "M7": ((0, 4, 7, 11), "M7"),
    "m7": ((0, 3, 7, 10), "m7"),
    "dom7": ((0, 4, 7, 10), "V7"),
    "halfdim7": ((0, 3, 6, 10), "ø7"),
}
_SUFFIXES = {suffix: q for q, (_, suffix) in QUALITIES.items()}
_SUFFIXES["o7"] = "halfdim7"
_BY_TEMPLATE = {tmpl: q for q, (tmpl, _) in QUALITIES.items()}
_CHORD_RE = re.compile(r"([A-Ga-g][#♯b♭]*)(M7|m7|V7|ø7|o7|M|m|dim|aug)")


@dataclass(frozen=True, order=True)
class Chord:
    root: PitchClass
    quality: str

    def __post_init__(self):
        if self.quality not in QUALITIES:
            raise MusicError(f"unknown chord quality {self.quality!r}")
        object.__setattr__(self, "root", PitchClass(self.root))

    @classmethod
    def parse(cls, text: str) -> "Chord":
        m = _CHORD_RE.fullmatch(text.strip())
        if not m:
            raise MusicError(f"not a chord name: {text!r}")
        return cls(PitchClass.parse(m.group(1)), _SUFFIXES[m.group(2)])

    @classmethod
    def from_pitches(cls, root: int, pcs: Iterable[int]) -> "Chord":
        tmpl = tuple(sorted((p - root) % 12 for p in pcs))
        try:
            return cls(PitchClass(root), _BY_TEMPLATE[tmpl])
        except KeyError:
            raise MusicError(f"no chord quality with intervals {tmpl}") from None

    @property
    def intervals(self) -> tuple[int, ...]:
        return QUALITIES[self.quality][0]

    @property
    def pitch_set(self) -> frozenset[PitchClass]:
        return frozenset(self.root + i for i in self.intervals)

    @property
    def is_seventh(self) -> bool:
        return len(self.intervals) == 4

    @property
    def name(self) -> str:
        return self.root.name + QUALITIES[self.quality][1]

    def transpose(self, t: int) -> "Chord":
        return Chord(self.root + t, self.quality)

    def __str__(self):
        return self.name


SCALE_KINDS = ("major", "natural_minor", "pentatonic", "chromatic", "hexachord")
_MODE_STEPS = {
    "major": (0, 2, 4, 5, 7, 9, 11),
    "natural_minor": (0, 2, 3, 5, 7, 8, 10),
}
_MODE_ALIASES = {"major": "major", "minor": "natural_minor", "natural_minor": "natural_minor", "aeolian": "natural_minor"}


@dataclass(frozen=True)
class Scale:
    """A pitch collection.  Hexachord members are tagged 1-6 by position."""

    kind: str
    tonic: PitchClass | None
    members: tuple[PitchClass, ...]

    def __post_init__(self):
        if self.kind not in SCALE_KINDS:
            raise MusicError(f"unknown scale kind {self.kind!r}")
        members = tuple(PitchClass(p) for p in self.members)
        object.__setattr__(self, "members", members)
        if len(set(members)) != len(members):
            raise MusicError(f"{self.kind} scale has repeated members: {[p.name for p in members]}")
        expected = {"pentatonic": 5, "hexachord": 6, "chromatic": 12}.get(self.kind)
        if self.kind in _MODE_STEPS:
            expected = 7
            steps = tuple((p - members[0]) % 12 for p in members)
            if steps != _MODE_STEPS[self.kind]:
                raise MusicError(f"members do not form a {self.kind} scale")
        if expected is not None and len(members) != expected:
            raise MusicError(f"{self.kind} scale needs {expected} members, got {len(members)}")

    @classmethod
    def major(cls, tonic="C") -> "Scale":
        t = PitchClass.parse(tonic) if isinstance(tonic, str) else PitchClass(tonic)
        return cls("major", t, tuple(t + s for s in _MODE_STEPS["major"]))

    @classmethod
    def natural_minor(cls, tonic="C") -> "Scale":
        t = PitchClass.parse(tonic) if isinstance(tonic, str) else PitchClass(tonic)
        return cls("natural_minor", t, tuple(t + s for s in _MODE_STEPS["natural_minor"]))

    @classmethod
    def pentatonic(cls, notes: Sequence = ("C", "D", "E", "G", "A")) -> "Scale":
        pcs = tuple(PitchClass.parse(n) if isinstance(n, str) else PitchClass(n) for n in notes)
        return cls("pentatonic", pcs[0] if pcs else None, pcs)

    @classmethod
    def chromatic(cls) -> "Scale":
        return cls("chromatic", PitchClass(0), tuple(PitchClass(i) for i in range(12)))

    @classmethod
    def hexachord(cls, notes: Sequence = ("F#", "G#", "C#", "D#", "E", "A#")) -> "Scale":
        pcs = tuple(PitchClass.parse(n) if isinstance(n, str) else PitchClass(n) for n in notes)
        return cls("hexachord", None, pcs)

    @classmethod
    def parse(cls, text: str) -> "Scale":
        """Parse ``"C:major"``, ``"A:minor"`` or a comma list of 5/6 notes."""
        text = text.strip()
        if ":" in text:
            tonic, mode = text.split(":", 1)
            kind = _MODE_ALIASES.get(mode.strip().lower())
            if kind is None:
                raise MusicError(f"unknown mode {mode!r}")
            return cls.major(tonic.strip()) if kind == "major" else cls.natural_minor(tonic.strip())
        notes = [n for n in re.split(r"[,\s]+", text) if n]
        if len(notes) == 5:
            return cls.pentatonic(notes)
        if len(notes) == 6:
            return cls.hexachord(notes)
        raise MusicError(f"cannot parse scale {text!r}")

    @property
    def is_diatonic(self) -> bool:
        return self.kind in _MODE_STEPS

    def transpose(self, t: int) -> "Scale":
        tonic = None if self.tonic is None else self.tonic + t
        return Scale(self.kind, tonic, tuple(p + t for p in self.members))

    def degree_of(self, pc: int) -> int:
        """1-based position of ``pc`` in the scale."""
        return self.members.index(PitchClass(pc)) + 1

    def __str__(self):
        if self.is_diatonic:
            return f"{self.tonic.name}:{'major' if self.kind == 'major' else 'minor'}"
        return ",".join(p.name for p in self.members)


@dataclass(frozen=True)
class Degree:
    index: int  # 0..6
    quality: str

    @property
    def numeral(self) -> str:
        return NUMERALS[self.index]

    def __str__(self):
        return self.numeral


def _require_diatonic(s: Scale) -> None:
    if not s.is_diatonic:
        raise UnsupportedScaleError(f"expected a major or natural minor scale, got {s.kind}")


def _stacked(s: Scale, size: int) -> list[tuple[Degree, Chord]]:
    _require_diatonic(s)
    out = []
    for n in range(7):
        pcs = [s.members[(n + 2 * j) % 7] for j in range(size)]
        chord = Chord.from_pitches(pcs[0], pcs)
        out.append((Degree(n, chord.quality), chord))
    return out


def triads_of_scale(s: Scale) -> list[tuple[Degree, Chord]]:
    """Triad on each degree: scale members n, n+2, n+4."""
    return _stacked(s, 3)


def sevenths_of_scale(s: Scale) -> list[tuple[Degree, Chord]]:
    """Seventh chord on each degree: scale members n, n+2, n+4, n+6."""
    return _stacked(s, 4)


def root_third_seventh(c: Chord) -> frozenset[PitchClass]:
    if not c.is_seventh:
        raise ChordArityError(f"{c.name} is not a seventh chord")
    root, third, _, seventh = c.intervals
    return frozenset({c.root + root, c.root + third, c.root + seventh})


def triads_containing(p: int, quality: str) -> list[Chord]:
    if quality not in ("major", "minor"):
        raise MusicError("quality must be 'major' or 'minor'")
    tmpl = QUALITIES[quality][0]
    p = PitchClass(p)
    return [Chord(p - i, quality) for i in tmpl]
