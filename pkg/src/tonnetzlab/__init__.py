"""Musical incidence geometries: tonnetze as configurations and Levi graphs."""

from .canonical import are_isomorphic, canonical_form
from .catalog import (
    build_diatonic_cluster_tonnetz,
    build_diatonic_seventh_tonnetz,
    build_diatonic_triad_tonnetz,
    build_duads_synthemes,
    build_eulerian_tonnetz,
    build_odd_scale_tonnetz,
    build_pentatonic_tonnetz,
    build_pitch_class_graph,
    build_pitch_to_triad_tonnetz,
    build_triad_seventh_heptagon,
    build_tripartite_tonnetz,
    check_duality,
    heawood_graph,
    minor_triads_from_hexacycles,
    tutte_eight_cage,
)
from .cycles import Cycle, CycleTable, ReferenceHamiltonian, cycle_table, enumerate_cycles, enumerate_hamiltonians, p_number
from .incidence import (
    IncidenceStructure,
    LeviGraph,
    biregularity,
    count_tetracycles,
    dual,
    girth,
    incidence_from_levi,
    is_configuration,
    levi_from_incidence,
)
from .music import Chord, PitchClass, Scale

__all__ = [
    "are_isomorphic",
    "canonical_form",
    "build_diatonic_cluster_tonnetz",
    "build_diatonic_seventh_tonnetz",
    "build_diatonic_triad_tonnetz",
    "build_duads_synthemes",
    "build_eulerian_tonnetz",
    "build_odd_scale_tonnetz",
    "build_pentatonic_tonnetz",
    "build_pitch_class_graph",
    "build_pitch_to_triad_tonnetz",
    "build_triad_seventh_heptagon",
    "build_tripartite_tonnetz",
    "check_duality",
    "heawood_graph",
    "minor_triads_from_hexacycles",
    "tutte_eight_cage",
    "Cycle",
    "CycleTable",
    "ReferenceHamiltonian",
    "cycle_table",
    "enumerate_cycles",
    "enumerate_hamiltonians",
    "p_number",
    "IncidenceStructure",
    "LeviGraph",
    "biregularity",
    "count_tetracycles",
    "dual",
    "girth",
    "incidence_from_levi",
    "is_configuration",
    "levi_from_incidence",
    "Chord",
    "PitchClass",
    "Scale",
]

__version__ = "0.1.0"
