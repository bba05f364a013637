"""Named catalog entries, as used by the command line."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import catalog as cat
from .incidence import IncidenceStructure, LeviGraph, incidence_from_levi, levi_from_incidence
from .music import Scale

__all__ = ["Entry", "ENTRIES", "get_entry", "entry_names"]


@dataclass(frozen=True)
class Entry:
    name: str
    summary: str
    make: Callable[[Scale | None, Scale | None], IncidenceStructure | LeviGraph]
    symbol: str  # expected type; "" when not a biregular claim
    girth: int | float
    configuration: bool
    self_dual: bool = False
    table: str | None = None  # key of the published cycle table
    default_scale: str = "C:major"

    def structure(self, scale=None, hexachord=None) -> IncidenceStructure:
        obj = self.make(scale, hexachord)
        return obj if isinstance(obj, IncidenceStructure) else incidence_from_levi(obj)

    def levi(self, scale=None, hexachord=None) -> LeviGraph:
        obj = self.make(scale, hexachord)
        return obj if isinstance(obj, LeviGraph) else levi_from_incidence(obj)


def _diatonic(builder):
    def make(scale, _h):
        return builder(scale or Scale.major("C"))

    return make


def _pentatonic(scale, _h):
    if scale is not None and scale.kind == "pentatonic":
        return cat.build_pentatonic_tonnetz(scale)
    return cat.build_pentatonic_tonnetz()


ENTRIES: dict[str, Entry] = {
    e.name: e
    for e in [
        Entry("eulerian", "major triads against minor triads sharing two tones",
              lambda s, h: cat.build_eulerian_tonnetz(), "{12_3}", 6, True),
        Entry("pitch-major", "major triads against the pitch classes they contain",
              lambda s, h: cat.build_pitch_to_triad_tonnetz("major"), "{12_3}", 6, True),
        Entry("pitch-minor", "minor triads against the pitch classes they contain",
              lambda s, h: cat.build_pitch_to_triad_tonnetz("minor"), "{12_3}", 6, True),
        Entry("diatonic-triads", "scale pitches against the seven degree triads",
              _diatonic(cat.build_diatonic_triad_tonnetz), "{7_3}", 4, False),
        Entry("diatonic-sevenths", "scale pitches against root/third/seventh of the degree sevenths",
              _diatonic(cat.build_diatonic_seventh_tonnetz), "{7_3}", 6, True, True, "heawood"),
        Entry("pentatonic", "two-note against three-note pentatonic chords",
              _pentatonic, "{10_3}", 6, True, True, "pentatonic"),
        Entry("odd-3", "1-subsets against 2-subsets of three tones",
              lambda s, h: cat.build_odd_scale_tonnetz(3), "{3_2}", 6, True, True),
        Entry("odd-5", "2-subsets against 3-subsets of five tones",
              lambda s, h: cat.build_odd_scale_tonnetz(5), "{10_3}", 6, True, True),
        Entry("odd-7", "3-subsets against 4-subsets of seven tones",
              lambda s, h: cat.build_odd_scale_tonnetz(7), "{35_4}", 6, True, True),
        Entry("odd-9", "4-subsets against 5-subsets of nine tones",
              lambda s, h: cat.build_odd_scale_tonnetz(9), "{126_5}", 6, True, True),
        Entry("duads-synthemes", "duads against synthemes of a hexachord",
              lambda s, h: cat.build_duads_synthemes(h)[0], "{15_3}", 8, True, True, "duads-synthemes"),
        Entry("heptagon", "diatonic triads against the sevenths containing them",
              _diatonic(cat.build_triad_seventh_heptagon), "{7_2}", 14, True),
        Entry("clusters", "three-note against four-note diatonic clusters",
              _diatonic(cat.build_diatonic_cluster_tonnetz), "{35_4}", 6, True, True),
        Entry("heawood", "the Heawood graph from LCF [5,-5]^7",
              lambda s, h: cat.heawood_graph(), "{7_3}", 6, True, True),
        Entry("tutte-8-cage", "Tutte's 8-cage from LCF [-13,-9,7,-7,9,13]^5",
              lambda s, h: cat.tutte_eight_cage(), "{15_3}", 8, True, True),
    ]
}


def entry_names() -> list[str]:
    return list(ENTRIES)


def get_entry(name: str) -> Entry:
    try:
        return ENTRIES[name]
    except KeyError:
        raise KeyError(f"unknown structure {name!r}; choose from {', '.join(ENTRIES)}") from None
