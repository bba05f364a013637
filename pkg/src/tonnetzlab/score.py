"""Realizing graph cycles as simple timed scores."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .cycles import Cycle, ReferenceHamiltonian, enumerate_cycles, p_number
from .duads import letter_tables
from .incidence import LeviGraph
from .music import NUMERALS, Chord, MusicError, PitchClass, Scale, sevenths_of_scale, triads_of_scale

__all__ = [
    "ScoreError",
    "Event",
    "Score",
    "realize_duad",
    "realize_syntheme",
    "realize_label",
    "cycle_to_score",
    "perimeter_units",
    "ON_THE_PERIMETER_SCALE",
    "DECACYCLE",
    "DECACYCLE_PEDAL",
]

ON_THE_PERIMETER_SCALE = ("C", "D", "Eb", "G", "Ab")
DECACYCLE = ("12", "ab", "56", "df", "13", "ac", "25", "bf", "36", "cd")
DECACYCLE_PEDAL = "B"

_NOTE_RUN = re.compile(r"[A-G][#b]?")


class ScoreError(MusicError):
    pass


@dataclass(frozen=True)
class Event:
    pitches: frozenset[PitchClass]
    beats: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "pitches", frozenset(PitchClass(p) for p in self.pitches))
        if not self.beats > 0:
            raise ScoreError(f"event duration must be positive, got {self.beats}")

    def names(self) -> list[str]:
        return [p.name for p in sorted(self.pitches)]


@dataclass(frozen=True)
class Score:
    title: str
    scale: Scale
    events: tuple[Event, ...]
    pedal: PitchClass | None = None
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        members = set(self.scale.members)
        for i, e in enumerate(self.events):
            stray = e.pitches - members
            if stray:
                raise ScoreError(f"event {i} uses {sorted(p.name for p in stray)} outside the scale {self.scale}")

    @property
    def total_beats(self) -> float:
        return sum(e.beats for e in self.events)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "scale": {"kind": self.scale.kind, "members": [p.name for p in self.scale.members]},
            "pedal": None if self.pedal is None else self.pedal.name,
            "events": [{"pitches": e.names(), "beats": e.beats} for e in self.events],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Score":
        sd = d["scale"]
        members = tuple(PitchClass.parse(n) for n in sd["members"])
        tonic = members[0] if sd["kind"] != "hexachord" else None
        scale = Scale(sd["kind"], tonic, members)
        events = tuple(Event(frozenset(PitchClass.parse(n) for n in e["pitches"]), e["beats"]) for e in d["events"])
        pedal = None if d.get("pedal") is None else PitchClass.parse(d["pedal"])
        return cls(d["title"], scale, events, pedal)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def realize_duad(d: str | tuple[int, int], h: Scale) -> frozenset[PitchClass]:
    """Duad ``ij`` of tags 1-6 -> the two hexachord tones tagged i and j."""
    if h.kind != "hexachord":
        raise ScoreError("duads are realized over a hexachord")
    i, j = (int(d[0]), int(d[1])) if isinstance(d, str) else d
    if not (1 <= i <= 6 and 1 <= j <= 6) or i == j:
        raise ScoreError(f"not a duad: {d!r}")
    return frozenset({h.members[i - 1], h.members[j - 1]})


def realize_syntheme(letter_pair: str, h: Scale) -> list[frozenset[PitchClass]]:
    """Letter duad -> its syntheme of numbers -> three realized duads."""
    try:
        syn = letter_tables().syntheme_of(letter_pair)
    except KeyError:
        raise ScoreError(f"unknown letter duad {letter_pair!r}") from None
    return [realize_duad(d, h) for d in syn]


def realize_label(label: str, s: Scale, roman: str = "triad") -> list[frozenset[PitchClass]]:
    """Pitch-class sets sounded for one vertex label.

    Handles chord names, Roman numerals (triads or sevenths of ``s``), note
    clusters such as ``CEbG``, 1-based scale positions such as ``135``, duads
    and letter duads.  A letter duad yields three sets, everything else one.
    """
    if re.fullmatch(r"[a-f]{2}", label):
        return realize_syntheme(label, s)
    if label in NUMERALS:
        table = triads_of_scale(s) if roman == "triad" else sevenths_of_scale(s)
        return [table[NUMERALS.index(label)][1].pitch_set]
    if label.isdigit():
        try:
            return [frozenset(s.members[int(ch) - 1] for ch in label)]
        except IndexError:
            raise ScoreError(f"position label {label!r} out of range for {s}") from None
    try:
        return [Chord.parse(label).pitch_set]
    except MusicError:
        pass
    notes = _NOTE_RUN.findall(label)
    if notes and "".join(notes) == label:
        return [frozenset(PitchClass.parse(n) for n in notes)]
    raise ScoreError(f"cannot realize vertex label {label!r}")


def cycle_to_score(
    c: Cycle | Sequence[str],
    g: LeviGraph | None,
    s: Scale,
    repeats_per_unit: int = 1,
    beat: float = 1.0,
    units: Sequence[Sequence[str]] | None = None,
    emit: str = "all",
    pedal: str | None = None,
    title: str = "",
    roman: str = "triad",
) -> Score:
    """Walk a cycle (or each of a covering family of ``units``) and emit its chords.

    ``emit`` keeps all vertices, or only the ``"points"`` / ``"blocks"`` side.
    Vertices sounding a single pitch are always skipped.  Each unit is played
    ``repeats_per_unit`` times before moving on.
    """
    if repeats_per_unit < 1:
        raise ScoreError("repeats_per_unit must be positive")
    if emit not in ("all", "points", "blocks"):
        raise ScoreError(f"unknown emit mode {emit!r}")
    if units is None:
        units = [c.labels(g) if isinstance(c, Cycle) else tuple(c)]
    keep: Callable[[str], bool]
    if emit == "all" or g is None:
        keep = lambda lab: True  # noqa: E731
    else:
        side = set(g.labels[: g.n_white]) if emit == "points" else set(g.labels[g.n_white :])
        keep = side.__contains__
    events = []
    for unit in units:
        chunk = []
        for lab in unit:
            if not keep(lab):
                continue
            for pcs in realize_label(lab, s, roman):
                if len(pcs) > 1:
                    chunk.append(Event(pcs, beat))
        events += chunk * repeats_per_unit
    return Score(title, s, tuple(events), None if pedal is None else PitchClass.parse(pedal))


def perimeter_units(g: LeviGraph, ref: ReferenceHamiltonian, p: int = 1, length: int = 6) -> list[tuple[str, ...]]:
    """The ``p``-cycles of one length, in perimeter order, each read in the
    perimeter's direction from the first vertex of its leading arc."""
    order = ref.cycle.vertices
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    units = []
    for cyc in enumerate_cycles(g):
        if cyc.length != length or p_number(cyc, ref) != p:
            continue
        members = set(cyc.vertices)
        heads = [v for v in cyc.vertices if order[(pos[v] - 1) % n] not in members] or list(cyc.vertices)
        start = min(heads, key=pos.__getitem__)
        walk = cyc.walk_from(start, order[(pos[start] + 1) % n])
        units.append((pos[start], tuple(g.labels[v] for v in walk)))
    return [u for _, u in sorted(units)]
