"""The two cycle-based pieces: "On the Perimeter" and "Decacycle for Violin"."""

from __future__ import annotations

from typing import Sequence

from .catalog import build_duads_synthemes, build_pentatonic_tonnetz
from .cycles import Cycle, CycleError, p_number
from .fixtures import pinned_reference
from .incidence import levi_from_incidence
from .music import MusicError, Scale
from .score import DECACYCLE, DECACYCLE_PEDAL, ON_THE_PERIMETER_SCALE, Score, cycle_to_score, perimeter_units

__all__ = ["on_the_perimeter", "decacycle_for_violin", "COMPOSITIONS"]


def _pentatonic_relabel(tones: Sequence[str]) -> dict[str, str]:
    base = build_pentatonic_tonnetz()
    s = build_pentatonic_tonnetz(tones)
    return dict(zip(base.point_labels + base.block_labels, s.point_labels + s.block_labels))


def on_the_perimeter(scale: Scale | None = None, repeats: int = 2, beat: float = 1.0) -> Score:
    """Five overlapping 1p-hexacycles along the Desargues perimeter, in order,
    sounding the three-note chord of each hexacycle vertex; each unit twice."""
    scale = Scale.pentatonic(ON_THE_PERIMETER_SCALE) if scale is None else scale
    if scale.kind != "pentatonic":
        raise MusicError(f"'On the Perimeter' needs a pentatonic scale, got {scale.kind}")
    tones = [p.name for p in scale.members]
    g = levi_from_incidence(build_pentatonic_tonnetz(tones))
    ref = pinned_reference("pentatonic", g, _pentatonic_relabel(tones))
    units = perimeter_units(g, ref, p=1, length=6)
    return cycle_to_score(
        ref.cycle, g, scale, repeats_per_unit=repeats, beat=beat, units=units, emit="blocks", title="On the Perimeter"
    )


def decacycle_for_violin(hexachord: Scale | None = None, pedal: bool = False, beat: float = 1.0) -> Score:
    """Duads sound as dyads, letter duads as their three-dyad syntheme."""
    h = Scale.hexachord() if hexachord is None else hexachord
    structure, _ = build_duads_synthemes(h)
    g = levi_from_incidence(structure)
    cyc = Cycle(tuple(g.index(x) for x in DECACYCLE))
    if not cyc.is_valid_in(g.adjacency):
        raise CycleError("decacycle is not a cycle of the duad/syntheme Levi graph")
    score = cycle_to_score(
        DECACYCLE, g, h, beat=beat, pedal=DECACYCLE_PEDAL if pedal else None, title="Decacycle for Violin"
    )
    score.metadata["p_number"] = p_number(cyc, pinned_reference("duads-synthemes", g))
    return score


COMPOSITIONS = {"perimeter": on_the_perimeter, "decacycle": decacycle_for_violin}
