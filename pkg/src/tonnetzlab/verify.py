"""Invariant suite for catalog entries, with a deterministic text report."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from . import catalog as cat
from .canonical import are_isomorphic, vertex_orbits
from .cycles import cycle_table, enumerate_cycles, enumerate_hamiltonians
from .duads import duads, find_totals, letter_tables, synthemes
from .fixtures import pinned_reference, published_table
from .incidence import (
    IncidenceStructure,
    LeviGraph,
    biregularity,
    count_tetracycles,
    dual,
    girth,
    is_configuration,
    levi_from_incidence,
)
from .music import Scale
from .progression import Progression, chart_progression, minimal_trajectory
from .registry import Entry, get_entry

__all__ = ["CheckResult", "computed_tables", "isomorphism_witnesses", "verify_entry", "verify_all", "render_report", "MAJOR_PROGRESSION", "MINOR_PROGRESSION"]

MAJOR_PROGRESSION = Progression(("I", "VI", "IV", "II", "V"))
MINOR_PROGRESSION = Progression(("I", "VII", "III", "VI", "IV", "V"))
MINOR_FANO_PROGRESSION = Progression(("V", "VI", "IV", "V", "I"))


@dataclass(frozen=True)
class CheckResult:
    entry: str
    check: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.entry} {self.check}{tail}"


Check = Callable[[], tuple[bool, str]]


def _blocks_share_two(s: IncidenceStructure) -> bool:
    return any(len(set(a.points) & set(b.points)) >= 2 for a, b in combinations(s.blocks, 2))


def _generic(e: Entry, s: IncidenceStructure, g: LeviGraph) -> Iterator[tuple[str, Check]]:
    yield "incidences", lambda: (len(g.edges) == s.incidences(), f"{len(g.edges)} edges")
    rep = biregularity(g)
    yield "type", lambda: (rep.is_biregular and rep.symbol == e.symbol, rep.symbol)
    gi = girth(g)
    yield "girth", lambda: (gi == e.girth and gi % 2 == 0, str(gi))
    conf = is_configuration(g)
    yield "configuration", lambda: (
        conf == e.configuration and conf == (rep.is_biregular and rep.is_square and not _blocks_share_two(s)),
        "yes" if conf else "no",
    )
    yield "dual involution", lambda: (are_isomorphic(levi_from_incidence(dual(dual(s))), g) is not None, "")
    if e.self_dual:
        yield "self-dual", lambda: (are_isomorphic(levi_from_incidence(dual(s)), g) is not None, "")


def _table_check(key: str, g: LeviGraph, ref) -> tuple[bool, str]:
    t = cycle_table(g, ref)
    return t == published_table(key), f"{t.grand_total} cycles"


def _iso(g: LeviGraph, other: LeviGraph, what: str) -> tuple[bool, str]:
    phi = are_isomorphic(g, other)
    if phi is None:
        return False, f"not isomorphic to {what}"
    return True, f"witness {len(phi)} vertices"


def _specific(name: str, s: IncidenceStructure, g: LeviGraph, scale: Scale | None) -> Iterator[tuple[str, Check]]:
    if name == "eulerian":
        yield "CM lines", lambda: (
            set(g.neighbors("CM")) == {"Cm", "Em", "Am"},
            ", ".join(sorted(g.neighbors("CM"))),
        )

        def duality():
            pg = cat.build_pitch_class_graph()
            degrees = {len(a) for a in pg.adjacency}
            rep = cat.check_duality(pg, g)
            ok = degrees == {6} and len(pg.faces) == 24 and rep.n_edges == 36 and len(rep.vertex_map) == 12
            return ok, f"{rep.n_edges} edges, {len(pg.faces)} faces"

        yield "pitch-class duality", duality
    if name in ("pitch-major", "pitch-minor"):
        yield "isomorphic to eulerian", lambda: _iso(g, levi_from_incidence(cat.build_eulerian_tonnetz()), "eulerian")
    if name == "pitch-major":
        yield "isomorphic to pitch-minor", lambda: _iso(
            g, levi_from_incidence(cat.build_pitch_to_triad_tonnetz("minor")), "pitch-minor"
        )

        def hexacycles():
            corr = cat.minor_triads_from_hexacycles(g, cat.circle_of_fifths_reference(g))
            augs = {frozenset(int(p) for p in v) for v in corr.augmented.values()}
            ok = len(corr.minor_of) == 12 and augs == {frozenset({i, i + 4, i + 8}) for i in range(4)}
            return ok, f"{len(corr.minor_of)} minor, {len(corr.augmented)} augmented"

        yield "hexacycle triads", hexacycles
    if name == "diatonic-triads":
        def tetra():
            n, cyc = count_tetracycles(g)
            per = {b: sum(b in c for c in cyc) for b in s.block_labels}
            return n == 7 and set(per.values()) == {2}, f"{n} tetracycles"

        yield "tetracycles", tetra
        sc = scale or Scale.major("C")

        def progressions():
            major = chart_progression(levi_from_incidence(cat.build_diatonic_triad_tonnetz(Scale.major(sc.tonic))),
                                      MAJOR_PROGRESSION)
            minor = chart_progression(
                levi_from_incidence(cat.build_diatonic_triad_tonnetz(Scale.natural_minor(sc.tonic))), MINOR_PROGRESSION
            )
            ok = major.is_continuous and minor.breaks == (("I", "VII"), ("IV", "V"))
            return ok, "breaks " + " ".join(f"({a},{b})" for a, b in minor.breaks)

        yield "progressions", progressions
    if name == "diatonic-sevenths":
        sc = scale or Scale.major("C")
        yield "fano lines", lambda: (
            all(len(set(a.points) & set(b.points)) == 1 for a, b in combinations(s.blocks, 2)),
            "21 pairs",
        )
        yield "isomorphic to heawood", lambda: _iso(g, cat.heawood_graph(), "heawood")
        yield "cycle table", lambda: _table_check("heawood", g, cat.diatonic_seventh_reference(g, sc))

        def trajectories():
            major = minimal_trajectory(
                levi_from_incidence(cat.build_diatonic_seventh_tonnetz(Scale.major(sc.tonic))), MAJOR_PROGRESSION
            )
            minor = minimal_trajectory(
                levi_from_incidence(cat.build_diatonic_seventh_tonnetz(Scale.natural_minor(sc.tonic))),
                MINOR_FANO_PROGRESSION,
            )
            return major.is_unique_minimal and minor.is_unique_minimal, f"lengths {major.length}, {minor.length}"

        yield "unique minimal trajectories", trajectories
    if name == "pentatonic":
        yield "cycle table", lambda: _table_check("pentatonic", g, pinned_reference("pentatonic", g))
        yield "hamiltonians", lambda: (len(enumerate_hamiltonians(g)) == 24, "24")
        yield "point transitive", lambda: (
            len(vertex_orbits(g, range(g.n_white))) == 1,
            f"{len(vertex_orbits(g, range(g.n_white)))} orbit",
        )
    if name.startswith("odd-"):
        m = int(name[4:])
        yield "tetracycle-free", lambda: (count_tetracycles(g)[0] == 0, "")
        if m == 3:
            yield "single hexacycle", lambda: (len(enumerate_cycles(g)) == 1 and g.num_vertices == 6, "")
        if m == 5:
            yield "isomorphic to pentatonic", lambda: _iso(
                g, levi_from_incidence(cat.build_pentatonic_tonnetz()), "pentatonic"
            )
    if name == "duads-synthemes":
        def combinatorics():
            syn = synthemes()
            ok = len(duads()) == 15 and len(syn) == 15 and len(find_totals()) == 6
            ok &= all(sum(d in x for x in syn) == 3 for d in duads())
            ok &= all(len(set(a) & set(b)) <= 1 for a, b in combinations(syn, 2))
            ok &= all(len(set(a) & set(b)) == 1 for a, b in combinations(find_totals(), 2))
            return ok, "15 duads, 15 synthemes, 6 totals"

        yield "duads and totals", combinatorics

        def tables():
            t = letter_tables()
            inverse = all(
                k in t.number_duads[dt] for k, syn in t.letter_duads.items() for dt in ("".join(map(str, d)) for d in syn)
            )
            return inverse, "table IV inverts table II"

        yield "letter tables", tables
        yield "isomorphic to 8-cage", lambda: _iso(g, cat.tutte_eight_cage(), "tutte-8-cage")
        yield "cycle table", lambda: _table_check("duads-synthemes", g, pinned_reference("duads-synthemes", g))
    if name == "heptagon":
        yield "single 14-cycle", lambda: (
            [c.length for c in enumerate_cycles(g)] == [14] and {len(a) for a in g.adjacency} == {2},
            "",
        )
    if name == "clusters":
        yield "isomorphic to odd-7", lambda: _iso(g, levi_from_incidence(cat.build_odd_scale_tonnetz(7)), "odd-7")
        yield "tetracycle-free", lambda: (count_tetracycles(g)[0] == 0, "")
    if name == "heawood":
        def counts():
            cyc = enumerate_cycles(g)
            ham = sum(c.length == 14 for c in cyc)
            return len(cyc) == 213 and ham == 24, f"{len(cyc)} cycles, {ham} hamiltonians"

        yield "cycles", counts
    if name == "tutte-8-cage":
        def counts():
            cyc = enumerate_cycles(g)
            octa = sum(c.length == 8 for c in cyc)
            ham = sum(c.length == 30 for c in cyc)
            return len(cyc) == 41400 and octa == 90 and ham == 144, f"{len(cyc)} cycles, {octa} octacycles, {ham} hamiltonians"

        yield "cycles", counts


def verify_entry(name: str, scale: Scale | None = None, hexachord: Scale | None = None) -> list[CheckResult]:
    e = get_entry(name)
    try:
        s = e.structure(scale, hexachord)
        g = e.levi(scale, hexachord)
    except Exception as exc:  # a builder failure is itself a failed check
        return [CheckResult(name, "build", False, str(exc))]
    out = [CheckResult(name, "build", True, f"{s.num_points} points, {s.num_blocks} blocks")]
    checks = list(_generic(e, s, g)) + list(_specific(name, s, g, scale))
    for label, fn in checks:
        try:
            ok, detail = fn()
        except Exception as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, label, bool(ok), detail))
    return out


def verify_all(names=None, scale=None, hexachord=None) -> list[CheckResult]:
    from .registry import entry_names

    results = []
    for n in names or entry_names():
        results += verify_entry(n, scale, hexachord)
    return results


def computed_tables() -> dict:
    """The three tabulated cycle counts, recomputed under the fixed perimeters."""
    fano = levi_from_incidence(cat.build_diatonic_seventh_tonnetz(Scale.major("C")))
    pent = levi_from_incidence(cat.build_pentatonic_tonnetz())
    cr = levi_from_incidence(cat.build_duads_synthemes()[0])
    return {
        "heawood": cycle_table(fano, cat.diatonic_seventh_reference(fano, Scale.major("C"))),
        "pentatonic": cycle_table(pent, pinned_reference("pentatonic", pent)),
        "duads-synthemes": cycle_table(cr, pinned_reference("duads-synthemes", cr)),
    }


def isomorphism_witnesses() -> dict[str, dict[str, str]]:
    """Vertex bijections between the three {12_3} Levi graphs, keyed "a->b"."""
    graphs = {
        "pitch-major": levi_from_incidence(cat.build_pitch_to_triad_tonnetz("major")),
        "pitch-minor": levi_from_incidence(cat.build_pitch_to_triad_tonnetz("minor")),
        "eulerian": levi_from_incidence(cat.build_eulerian_tonnetz()),
    }
    out = {}
    for a, b in combinations(graphs, 2):
        phi = are_isomorphic(graphs[a], graphs[b])
        if phi is not None:
            out[f"{a}->{b}"] = phi
    return out


def render_report(results: list[CheckResult]) -> str:
    lines = [r.line() for r in results]
    failed = sum(not r.ok for r in results)
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n"
