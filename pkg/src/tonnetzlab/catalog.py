"""Builders for the musical incidence structures and their companion graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Sequence

from .cycles import Cycle, CycleError, ReferenceHamiltonian, enumerate_cycles, p_number
from .duads import Total, duad_text, duads, label_totals, letter_tables, synthemes
from .incidence import Block, IncidenceStructure, LeviGraph
from .music import (
    Chord,
    MusicError,
    PitchClass,
    Scale,
    UnsupportedScaleError,
    root_third_seventh,
    sevenths_of_scale,
    triads_of_scale,
)

__all__ = [
    "DualityError",
    "PitchClassGraph",
    "TripartiteTonnetz",
    "DualityReport",
    "HexacycleCorrespondence",
    "CONSONANT_INTERVALS",
    "major_triads",
    "minor_triads",
    "build_eulerian_tonnetz",
    "build_pitch_class_graph",
    "check_duality",
    "build_diatonic_triad_tonnetz",
    "build_diatonic_seventh_tonnetz",
    "build_pentatonic_tonnetz",
    "build_odd_scale_tonnetz",
    "build_duads_synthemes",
    "build_pitch_to_triad_tonnetz",
    "minor_triads_from_hexacycles",
    "build_tripartite_tonnetz",
    "build_triad_seventh_heptagon",
    "build_diatonic_cluster_tonnetz",
    "lcf_levi_graph",
    "heawood_graph",
    "tutte_eight_cage",
    "fused_triad_reference",
    "circle_of_fifths_reference",
    "diatonic_seventh_reference",
]

CONSONANT_INTERVALS = frozenset({3, 4, 5, 7, 8, 9})


class DualityError(ValueError):
    pass


def major_triads() -> list[Chord]:
    return [Chord(PitchClass(r), "major") for r in range(12)]


def minor_triads() -> list[Chord]:
    return [Chord(PitchClass(r), "minor") for r in range(12)]


def build_eulerian_tonnetz() -> IncidenceStructure:
    """Major triads as points, minor triads as blocks; incident iff they share two tones."""
    majors, minors = major_triads(), minor_triads()
    blocks = []
    for mn in minors:
        pts = tuple(i for i, mj in enumerate(majors) if len(mj.pitch_set & mn.pitch_set) == 2)
        blocks.append(Block(mn.name, pts))
    return IncidenceStructure("eulerian", tuple(c.name for c in majors), tuple(blocks))


@dataclass(frozen=True)
class PitchClassGraph:
    """Pitch classes joined by consonant intervals, with the 24 triads as faces."""

    labels: tuple[str, ...]
    edges: frozenset[tuple[int, int]]
    faces: tuple[Chord, ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.labels]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def faces_on_edge(self, u: int, v: int) -> list[Chord]:
        return [f for f in self.faces if u in f.pitch_set and v in f.pitch_set]

    def as_incidence(self) -> IncidenceStructure:
        """Pitches as points, triangular faces as blocks."""
        return IncidenceStructure(
            "pitch-class-graph",
            self.labels,
            tuple(Block(f.name, tuple(int(p) for p in f.pitch_set)) for f in self.faces),
        )


def build_pitch_class_graph() -> PitchClassGraph:
    edges = frozenset((a, b) for a, b in combinations(range(12), 2) if (b - a) % 12 in CONSONANT_INTERVALS)
    adj = {v: {w for e in edges for w in e if v in e and w != v} for v in range(12)}
    faces = []
    for tri in combinations(range(12), 3):
        if all(b in adj[a] for a, b in combinations(tri, 2)):
            for root in tri:
                try:
                    faces.append(Chord.from_pitches(root, tri))
                    break
                except MusicError:
                    continue
    faces = [f for f in faces if f.quality in ("major", "minor")]
    faces.sort(key=lambda c: (c.quality != "major", int(c.root)))
    return PitchClassGraph(tuple(PitchClass(i).name for i in range(12)), edges, tuple(faces))


@dataclass(frozen=True)
class DualityReport:
    edge_map: dict[tuple[str, str], tuple[str, str]]  # pitch edge -> Levi edge (major, minor)
    face_map: dict[str, str]  # triangular face -> Levi vertex
    vertex_map: dict[str, tuple[str, ...]]  # pitch -> hexacycle of the six triads around it

    @property
    def n_edges(self) -> int:
        return len(self.edge_map)


def check_duality(pg: PitchClassGraph, levi: LeviGraph) -> DualityReport:
    """Verify the pitch-edge / Levi-edge bijection and the vertex / hexacycle map."""
    levi_edges = {(levi.labels[u], levi.labels[v]) for u, v in levi.edges}
    face_map = {}
    for f in pg.faces:
        if f.name not in levi.labels:
            raise DualityError(f"face {f.name} has no Levi vertex")
        face_map[f.name] = f.name
    edge_map: dict[tuple[str, str], tuple[str, str]] = {}
    for u, v in sorted(pg.edges):
        on = pg.faces_on_edge(u, v)
        majors = [f for f in on if f.quality == "major"]
        minors = [f for f in on if f.quality == "minor"]
        name = (pg.labels[u], pg.labels[v])
        if len(majors) != 1 or len(minors) != 1:
            raise DualityError(f"edge {name} does not lie on one major and one minor face")
        pair = (majors[0].name, minors[0].name)
        if pair not in levi_edges:
            raise DualityError(f"edge {name} maps to {pair}, which is not a Levi edge")
        edge_map[name] = pair
    if len(set(edge_map.values())) != len(edge_map):
        raise DualityError("two pitch edges map to the same Levi edge")
    missing = sorted(levi_edges - set(edge_map.values()))
    if missing:
        raise DualityError(f"Levi edge {missing[0]} is not the image of any pitch edge")
    vertex_map = {}
    for v, lab in enumerate(pg.labels):
        around = [f for f in pg.faces if v in f.pitch_set]
        walk = _face_cycle(levi, [f.name for f in around])
        if walk is None:
            raise DualityError(f"the six triads on {lab} do not form a hexacycle")
        vertex_map[lab] = walk
    return DualityReport(edge_map, face_map, vertex_map)


def _face_cycle(levi: LeviGraph, names: list[str]) -> tuple[str, ...] | None:
    if len(names) != 6:
        return None
    members = set(names)
    start = min(names)
    walk = [start]
    prev = None
    while True:
        nxt = sorted(w for w in levi.neighbors(walk[-1]) if w in members and w != prev and (w not in walk or w == start))
        nxt = [w for w in nxt if w != walk[-1]]
        if not nxt:
            return None
        step = nxt[0] if nxt[0] != start or len(walk) == 6 else (nxt[1] if len(nxt) > 1 else nxt[0])
        if step == start:
            return tuple(walk) if len(walk) == 6 else None
        prev = walk[-1]
        walk.append(step)
        if len(walk) > 6:
            return None


def _require_diatonic(s: Scale) -> None:
    if not s.is_diatonic:
        raise UnsupportedScaleError(f"expected a major or natural minor scale, got {s.kind}")


def _scale_point_labels(s: Scale, style: str) -> tuple[str, ...]:
    if style == "note":
        return tuple(p.name for p in s.members)
    if style == "degree":
        return tuple(str(i + 1) for i in range(len(s.members)))
    raise ValueError(f"unknown label style {style!r}")


def build_diatonic_triad_tonnetz(s: Scale, point_labels: str = "note") -> IncidenceStructure:
    """Scale pitches as points, the seven degree triads (I..VII) as blocks."""
    _require_diatonic(s)
    blocks = tuple(
        Block(deg.numeral, tuple(s.members.index(p) for p in chord.pitch_set)) for deg, chord in triads_of_scale(s)
    )
    return IncidenceStructure(f"diatonic-triads {s}", _scale_point_labels(s, point_labels), blocks)


def build_diatonic_seventh_tonnetz(s: Scale, point_labels: str = "note") -> IncidenceStructure:
    """Scale pitches against the root/third/seventh of each degree's seventh chord."""
    _require_diatonic(s)
    blocks = tuple(
        Block(deg.numeral, tuple(s.members.index(p) for p in root_third_seventh(chord)))
        for deg, chord in sevenths_of_scale(s)
    )
    return IncidenceStructure(f"diatonic-sevenths {s}", _scale_point_labels(s, point_labels), blocks)


def _subset_structure(name: str, tones: Sequence[str], k: int) -> IncidenceStructure:
    points = list(combinations(range(len(tones)), k))
    index = {p: i for i, p in enumerate(points)}
    blocks = []
    for big in combinations(range(len(tones)), k + 1):
        sub = tuple(index[small] for small in combinations(big, k))
        blocks.append(Block("".join(tones[i] for i in big), sub))
    return IncidenceStructure(name, tuple("".join(tones[i] for i in p) for p in points), tuple(blocks))


def build_pentatonic_tonnetz(tones: Sequence[str] | Scale = ("C", "D", "E", "G", "A")) -> IncidenceStructure:
    """Two-note clusters as points, three-note clusters as blocks, by containment."""
    if isinstance(tones, Scale):
        if len(tones.members) != 5:
            raise MusicError("pentatonic tonnetz needs five tones")
        tones = [p.name for p in tones.members]
    tones = list(tones)
    if len(tones) != 5 or len(set(tones)) != 5:
        raise MusicError("pentatonic tonnetz needs five distinct labels")
    return _subset_structure("pentatonic " + ",".join(tones), tones, 2)


def build_odd_scale_tonnetz(m: int) -> IncidenceStructure:
    """k-subsets against (k+1)-subsets of ``m = 2k + 1`` tones labelled 1..m."""
    if not isinstance(m, int) or m < 3 or m % 2 == 0 or m > 9:
        raise ValueError(f"m must be odd with 3 <= m <= 9, got {m!r}")
    k = (m - 1) // 2
    s = _subset_structure(f"odd-scale m={m}", [str(i + 1) for i in range(m)], k)
    assert s.num_points == comb(m, k)
    return s


def build_duads_synthemes(h: Scale | None = None) -> tuple[IncidenceStructure, list[Total]]:
    """Duads as points, synthemes (named by letter duads) as blocks.

    The hexachord only fixes the pitches behind tags 1-6; the combinatorics do
    not depend on it.
    """
    h = Scale.hexachord() if h is None else h
    if h.kind != "hexachord":
        raise MusicError(f"expected a hexachord, got a {h.kind} scale")
    totals = label_totals()
    tables = letter_tables(totals)
    points = duads()
    index = {d: i for i, d in enumerate(points)}
    blocks = tuple(Block(ld, tuple(index[d] for d in s)) for ld, s in tables.letter_duads.items())
    assert len(tables.letter_duads) == len(synthemes()) == 15
    name = "duads-synthemes " + ",".join(p.name for p in h.members)
    return IncidenceStructure(name, tuple(duad_text(d) for d in points), blocks), totals


def build_pitch_to_triad_tonnetz(quality: str = "major") -> IncidenceStructure:
    """Triads of one quality as points, pitch classes as blocks, by containment."""
    if quality not in ("major", "minor"):
        raise MusicError("quality must be 'major' or 'minor'")
    triads = major_triads() if quality == "major" else minor_triads()
    blocks = tuple(
        Block(PitchClass(p).name, tuple(i for i, c in enumerate(triads) if p in c.pitch_set)) for p in range(12)
    )
    return IncidenceStructure(f"pitch-{quality}", tuple(c.name for c in triads), blocks)


@dataclass(frozen=True)
class HexacycleCorrespondence:
    minor_of: dict[Cycle, Chord]
    augmented: dict[Cycle, frozenset[PitchClass]]

    def hexacycles_through(self, g: LeviGraph, pitch: str) -> list[Chord]:
        v = g.index(pitch)
        return sorted(ch for c, ch in self.minor_of.items() if v in c.vertices)


def minor_triads_from_hexacycles(g: LeviGraph, ref: ReferenceHamiltonian) -> HexacycleCorrespondence:
    """Read the minor and augmented triads off the 2p / 3p hexacycles of the
    pitch-to-major Levi graph."""
    if ref.n_vertices != g.num_vertices or ref.adjacency != tuple(tuple(a) for a in g.adjacency):
        raise CycleError("reference is not a Hamiltonian of this graph")
    pitch_names = {PitchClass(i).name: PitchClass(i) for i in range(12)}
    minor_of: dict[Cycle, Chord] = {}
    augmented: dict[Cycle, frozenset[PitchClass]] = {}
    for c in enumerate_cycles(g):
        if c.length != 6:
            continue
        p = p_number(c, ref)
        pcs = frozenset(pitch_names[g.labels[v]] for v in c.vertices if g.labels[v] in pitch_names)
        if p == 2:
            chord = next((ch for ch in minor_triads() if ch.pitch_set == pcs), None)
            if chord is None:
                raise ValueError(f"2p-hexacycle {c.labels(g)} does not carry a minor triad")
            minor_of[c] = chord
        elif p == 3:
            roots = [r for r in pcs if Chord(r, "augmented").pitch_set == pcs]
            if not roots:
                raise ValueError(f"3p-hexacycle {c.labels(g)} does not carry an augmented triad")
            augmented[c] = pcs
    if sorted(minor_of.values()) != sorted(minor_triads()):
        raise ValueError("2p-hexacycles are not in bijection with the minor triads")
    return HexacycleCorrespondence(minor_of, augmented)


@dataclass(frozen=True)
class TripartiteTonnetz:
    """Pitches, major triads and minor triads with their three bipartite layers."""

    labels: tuple[str, ...]
    colors: tuple[int, ...]  # 0 pitch, 1 major, 2 minor
    edges: frozenset[tuple[int, int]]

    CLASSES = ("pitch", "major", "minor")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.labels]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def neighbors(self, label: str, kind: str | None = None) -> tuple[str, ...]:
        want = None if kind is None else self.CLASSES.index(kind)
        return tuple(
            self.labels[w] for w in self.adjacency[self.index(label)] if want is None or self.colors[w] == want
        )

    def layer(self, a: str, b: str) -> frozenset[tuple[int, int]]:
        ca, cb = self.CLASSES.index(a), self.CLASSES.index(b)
        return frozenset(e for e in self.edges if {self.colors[e[0]], self.colors[e[1]]} == {ca, cb})

    def erase(self, kind: str) -> LeviGraph:
        """Drop one vertex class, leaving the bipartite graph on the other two."""
        gone = self.CLASSES.index(kind)
        keep = [c for c in range(3) if c != gone]
        white = [i for i, c in enumerate(self.colors) if c == keep[0]]
        black = [i for i, c in enumerate(self.colors) if c == keep[1]]
        order = white + black
        pos = {v: i for i, v in enumerate(order)}
        edges = frozenset(
            tuple(sorted((pos[u], pos[v]))) for u, v in self.edges if u in pos and v in pos
        )
        return LeviGraph(tuple(self.labels[v] for v in order), len(white), edges, f"tripartite minus {kind}")


def build_tripartite_tonnetz() -> TripartiteTonnetz:
    pitches = [PitchClass(i) for i in range(12)]
    majors, minors = major_triads(), minor_triads()
    labels = tuple(p.name for p in pitches) + tuple(c.name for c in majors) + tuple(c.name for c in minors)
    colors = (0,) * 12 + (1,) * 12 + (2,) * 12
    edges = set()
    for i, mj in enumerate(majors):
        for p in mj.pitch_set:
            edges.add((int(p), 12 + i))
    for j, mn in enumerate(minors):
        for p in mn.pitch_set:
            edges.add((int(p), 24 + j))
    for i, mj in enumerate(majors):
        for j, mn in enumerate(minors):
            if len(mj.pitch_set & mn.pitch_set) == 2:
                edges.add((12 + i, 24 + j))
    return TripartiteTonnetz(labels, colors, frozenset(edges))


def build_triad_seventh_heptagon(s: Scale) -> IncidenceStructure:
    """Diatonic triads as points, diatonic sevenths as blocks, by containment."""
    _require_diatonic(s)
    triads = [c for _, c in triads_of_scale(s)]
    sevenths = [c for _, c in sevenths_of_scale(s)]
    blocks = tuple(
        Block(sv.name, tuple(i for i, t in enumerate(triads) if t.pitch_set <= sv.pitch_set)) for sv in sevenths
    )
    return IncidenceStructure(f"heptagon {s}", tuple(t.name for t in triads), blocks)


def build_diatonic_cluster_tonnetz(s: Scale) -> IncidenceStructure:
    """Three-note against four-note clusters of the seven scale tones."""
    _require_diatonic(s)
    return _subset_structure(f"clusters {s}", [p.name for p in s.members], 3)


def lcf_levi_graph(name: str, n: int, shifts: Sequence[int], repeats: int) -> LeviGraph:
    """Cubic bipartite graph from LCF notation; even vertices become white."""
    edges = set()
    for i in range(n):
        edges.add(tuple(sorted((i, (i + 1) % n))))
    jumps = list(shifts) * repeats
    if len(jumps) != n:
        raise ValueError(f"LCF code covers {len(jumps)} vertices, expected {n}")
    for i in range(n):
        edges.add(tuple(sorted((i, (i + jumps[i]) % n))))
    half = n // 2

    def pos(v):
        return v // 2 if v % 2 == 0 else half + v // 2

    levi_edges = set()
    for a, b in edges:
        if a % 2 == b % 2:
            raise ValueError("LCF graph is not bipartite under the parity colouring")
        w, k = (a, b) if a % 2 == 0 else (b, a)
        levi_edges.add((pos(w), pos(k)))
    labels = tuple(f"v{v}" for v in range(0, n, 2)) + tuple(f"v{v}" for v in range(1, n, 2))
    return LeviGraph(labels, half, frozenset(levi_edges), name)


def heawood_graph() -> LeviGraph:
    return lcf_levi_graph("heawood", 14, [5, -5], 7)


def tutte_eight_cage() -> LeviGraph:
    return lcf_levi_graph("tutte-8-cage", 30, [-13, -9, 7, -7, 9, 13], 5)


def fused_triad_reference(g: LeviGraph) -> ReferenceHamiltonian:
    """CM, Am, FM, Dm, ...: alternate relative minor and the major a third below it."""
    seq = []
    for i in range(12):
        root = PitchClass(5 * i)
        seq.append(Chord(root, "major").name)
        seq.append(Chord(root - 3, "minor").name)
    return ReferenceHamiltonian.of(g, [g.index(x) for x in seq])


def circle_of_fifths_reference(g: LeviGraph) -> ReferenceHamiltonian:
    """C, CM, G, GM, D, DM, ... on the pitch-to-major Levi graph."""
    seq = []
    for i in range(12):
        root = PitchClass(7 * i)
        seq.append(root.name)
        seq.append(Chord(root, "major").name)
    return ReferenceHamiltonian.of(g, [g.index(x) for x in seq])


def diatonic_seventh_reference(g: LeviGraph, s: Scale, point_labels: str = "note") -> ReferenceHamiltonian:
    """Pitch 1, chord on 1, pitch 3, chord on 3, ... stepping by thirds."""
    from .music import NUMERALS

    names = _scale_point_labels(s, point_labels)
    seq = []
    for j in range(7):
        d = (2 * j) % 7
        seq.append(names[d])
        seq.append(NUMERALS[d])
    return ReferenceHamiltonian.of(g, [g.index(x) for x in seq])
