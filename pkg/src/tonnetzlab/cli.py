"""Command line: build, verify, cycles, progress, compose, export, tables."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog as cat
from .compositions import COMPOSITIONS
from .cycles import CycleError, ReferenceHamiltonian, cycle_table, enumerate_cycles, find_reference_hamiltonian, reference_from_labels
from .duads import letter_tables
from .export import ExportError, export_csv, export_dot, export_json, export_midi, write_output
from .fixtures import pinned_reference, published_table
from .incidence import IncidenceError, IncidenceStructure, LeviGraph, levi_from_incidence, loads
from .music import MusicError, Scale
from .progression import NoTrajectoryError, Progression, ProgressionError, chart_progression, minimal_trajectory
from .registry import ENTRIES, get_entry
from .tessellation import TessellationError, tessellation_patch
from .verify import computed_tables, isomorphism_witnesses, render_report, verify_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# which published table, if any, a catalog entry reproduces
_TABLE_OF = {"diatonic-sevenths": "heawood", "heawood": "heawood", "pentatonic": "pentatonic", "odd-5": "pentatonic",
             "duads-synthemes": "duads-synthemes", "tutte-8-cage": "duads-synthemes"}
# preferred horizontal step for tessellation patches
_HORIZONTAL = {"diatonic-triads": 3, "diatonic-sevenths": -2}


class UsageError(Exception):
    pass


def _scale(text: str | None) -> Scale | None:
    return None if text is None else Scale.parse(text)


def _hexachord(text: str | None) -> Scale | None:
    if text is None:
        return None
    s = Scale.parse(text)
    if s.kind != "hexachord":
        raise UsageError("--hexachord needs six distinct notes")
    return s


def _load(name: str, args) -> tuple[str, IncidenceStructure | None, LeviGraph]:
    """A catalog entry name or a path to an incidence JSON document."""
    if name in ENTRIES:
        e = get_entry(name)
        scale, hexa = _scale(args.scale), _hexachord(getattr(args, "hexachord", None))
        return name, e.structure(scale, hexa), e.levi(scale, hexa)
    path = Path(name)
    if path.suffix == ".json" or path.exists():
        try:
            s = loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        return s.name or path.stem, s, levi_from_incidence(s)
    raise UsageError(f"unknown structure {name!r}; choose from {', '.join(ENTRIES)} or give a JSON file")


def _reference(name: str, g: LeviGraph, mode: str, scale: Scale | None, cycles):
    if mode == "auto":
        key = _TABLE_OF.get(name)
        if key is not None:
            ref = find_reference_hamiltonian(g, published_table(key), cycles)
            if ref is not None:
                return ref
        ham = next((c for c in cycles if c.length == g.num_vertices), None)
        return None if ham is None else ReferenceHamiltonian.of(g, ham)
    if mode == "fixture":
        if name == "eulerian":
            return cat.fused_triad_reference(g)
        if name == "pitch-major":
            return cat.circle_of_fifths_reference(g)
        if name == "diatonic-sevenths":
            return cat.diatonic_seventh_reference(g, scale or Scale.major("C"))
        if name in ("pentatonic", "duads-synthemes"):
            return pinned_reference(name, g)
        raise UsageError(f"no fixed reference for {name!r}; use --ref auto or list the perimeter labels")
    return reference_from_labels(g, [x.strip() for x in mode.split(",") if x.strip()])


def _emit(text: str | bytes, out: str | None) -> None:
    if out:
        write_output(text, out)
    elif isinstance(text, bytes):
        sys.stdout.buffer.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    _, s, g = _load(args.structure, args)
    fmt = args.format or "json"
    if fmt == "json":
        _emit(export_json(s), args.out)
    elif fmt == "dot":
        _emit(export_dot(g), args.out)
    else:
        raise UsageError(f"build writes json or dot, not {fmt}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = args.names or None
    if names:
        for n in names:
            get_entry(n)
    results = verify_all(names, _scale(args.scale), _hexachord(args.hexachord))
    report = render_report(results)
    sys.stdout.write(report)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        write_output(report, out / "report.txt")
        for n in names or list(ENTRIES):
            e = get_entry(n)
            write_output(export_json(e.structure(_scale(args.scale), _hexachord(args.hexachord))), out / f"{n}.json")
            write_output(export_dot(e.levi(_scale(args.scale), _hexachord(args.hexachord))), out / f"{n}.dot")
        if {"eulerian", "pitch-major", "pitch-minor"} & set(names or ENTRIES):
            witnesses = isomorphism_witnesses()
            write_output(json.dumps(witnesses, indent=2, ensure_ascii=False) + "\n", out / "witnesses.json")
        tables = computed_tables()
        for key, t in tables.items():
            write_output(export_csv(t), out / f"table-{key}.csv")
        if args.figures:
            from .plotting import plot_cycle_table, save_figure

            for key, t in tables.items():
                save_figure(plot_cycle_table(t, key), out / f"table-{key}.svg")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_cycles(args) -> int:
    name, _, g = _load(args.structure, args)
    try:
        cycles = enumerate_cycles(g)
    except CycleError as exc:
        raise UsageError(str(exc)) from None
    if not args.table:
        hist: dict[int, int] = {}
        for c in cycles:
            hist[c.length] = hist.get(c.length, 0) + 1
        lines = ["length,count"] + [f"{L},{n}" for L, n in sorted(hist.items())] + [f"total,{len(cycles)}"]
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    ref = _reference(name, g, args.ref, _scale(args.scale), cycles)
    if ref is None:
        sys.stderr.write(f"{name}: no Hamiltonian cycle, so no p-number table\n")
        return EXIT_FAIL
    t = cycle_table(g, ref, cycles)
    _emit(export_csv(t), args.out)
    if args.figure:
        from .plotting import plot_cycle_table, plot_levi_perimeter, save_figure

        save_figure(plot_cycle_table(t, name), args.figure)
        fig_path = Path(args.figure)
        save_figure(plot_levi_perimeter(g, ref), fig_path.with_name(fig_path.stem + "-perimeter" + fig_path.suffix))
    key = _TABLE_OF.get(name)
    if key is not None and t != published_table(key):
        sys.stderr.write(f"{name}: table differs from the published {key} table\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_progress(args) -> int:
    name, _, g = _load(args.structure, args)
    p = Progression.parse(args.chords)
    traj = minimal_trajectory(g, p) if args.minimal else chart_progression(g, p)
    lines = [
        f"structure: {name}",
        f"progression: {', '.join(p.chords)}",
        f"path: {' - '.join(traj.path)}",
        f"continuous: {'yes' if traj.is_continuous else 'no'}",
    ]
    if traj.breaks:
        lines.append("breaks: " + " ".join(f"({a},{b})" for a, b in traj.breaks))
    lines.append(f"minimal: {'yes' if traj.is_minimal else 'no'}")
    lines.append(f"unique minimal: {'yes' if traj.is_unique_minimal else 'no'}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if traj.is_continuous else EXIT_FAIL


def cmd_compose(args) -> int:
    if args.piece == "perimeter":
        score = COMPOSITIONS["perimeter"](_scale(args.scale))
    else:
        score = COMPOSITIONS["decacycle"](_hexachord(args.hexachord), pedal=args.pedal)
    fmt = args.format or ("midi" if args.out and args.out.endswith((".mid", ".midi")) else "json")
    if fmt == "midi":
        if not args.out:
            raise UsageError("MIDI output needs --out")
        _emit(export_midi(score), args.out)
    elif fmt == "json":
        _emit(score.to_json(), args.out)
    else:
        raise UsageError(f"compose writes json or midi, not {fmt}")
    return EXIT_OK


def cmd_export(args) -> int:
    name, s, g = _load(args.structure, args)
    fmt = args.format
    if fmt == "json":
        _emit(export_json(s), args.out)
    elif fmt == "dot":
        _emit(export_dot(g), args.out)
    elif fmt == "csv":
        cycles = enumerate_cycles(g)
        ref = _reference(name, g, args.ref, _scale(args.scale), cycles)
        if ref is None:
            raise UsageError(f"{name} has no Hamiltonian cycle")
        _emit(export_csv(cycle_table(g, ref, cycles)), args.out)
    elif fmt == "svg":
        if not args.out:
            raise UsageError("SVG output needs --out")
        from .plotting import plot_patch, save_figure

        if args.flavor == "face_centered":
            patch = tessellation_patch(cat.build_tripartite_tonnetz(), args.rows, args.cols, "face_centered")
        else:
            patch = tessellation_patch(s, args.rows, args.cols, "bipartite", _HORIZONTAL.get(name))
        save_figure(plot_patch(patch, name), args.out)
    elif fmt == "midi":
        raise UsageError("MIDI export is for scores; use `compose ... --format midi`")
    return EXIT_OK


def cmd_tables(args) -> int:
    t = letter_tables()
    text = {"1": t.render_table_i(), "2": t.render_table_ii(), "3": t.render_table_iii(), "4": t.render_table_iv()}
    _emit(t.render() if args.which == "all" else text[args.which], args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tonnetz", description="Musical incidence geometries and their cycles.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, structure=True):
        if structure:
            sp.add_argument("structure", help="catalog name or incidence JSON file")
        sp.add_argument("--scale", help="e.g. C:major, A:minor, or five notes")
        sp.add_argument("--hexachord", help="six notes, e.g. F#,G#,C#,D#,E,A#")
        sp.add_argument("--out", help="output path")

    sp = sub.add_parser("build", help="emit a catalog structure")
    common(sp)
    sp.add_argument("--format", choices=["json", "dot"])
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("verify", help="run the invariant suite")
    sp.add_argument("names", nargs="*", help="catalog entries (default: all)")
    sp.add_argument("--scale")
    sp.add_argument("--hexachord")
    sp.add_argument("--out", help="directory for the report and exports")
    sp.add_argument("--figures", action="store_true", help="also render cycle-table figures into --out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("cycles", help="count cycles, optionally by p-number")
    common(sp)
    sp.add_argument("--table", action="store_true", help="tabulate by (length, p-number)")
    sp.add_argument("--ref", default="auto", help="auto, fixture, or comma-separated perimeter labels")
    sp.add_argument("--figure", help="write a heatmap (and perimeter drawing) to this path")
    sp.set_defaults(func=cmd_cycles)

    sp = sub.add_parser("progress", help="chart a chord progression")
    common(sp)
    sp.add_argument("--chords", required=True, help="comma-separated vertex labels, e.g. I,VI,IV,II,V")
    sp.add_argument("--minimal", action="store_true", help="shortest walk instead of pivot charting")
    sp.set_defaults(func=cmd_progress)

    sp = sub.add_parser("compose", help="realize a cycle-based piece")
    sp.add_argument("piece", choices=sorted(COMPOSITIONS))
    sp.add_argument("--scale")
    sp.add_argument("--hexachord")
    sp.add_argument("--pedal", action="store_true", help="add the grounding B (decacycle)")
    sp.add_argument("--format", choices=["json", "midi"])
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("export", help="export a structure")
    common(sp)
    sp.add_argument("--format", required=True, choices=["dot", "csv", "json", "svg", "midi"])
    sp.add_argument("--ref", default="auto")
    sp.add_argument("--rows", type=int, default=4)
    sp.add_argument("--cols", type=int, default=6)
    sp.add_argument("--flavor", choices=["bipartite", "face_centered"], default="bipartite")
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("tables", help="print the letter tables of the six totals")
    sp.add_argument("which", nargs="?", default="all", choices=["all", "1", "2", "3", "4"])
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_tables)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        sys.stderr.write(f"tonnetz: {msg}\n")
        return EXIT_USAGE
    except (IncidenceError, MusicError, ProgressionError, CycleError, TessellationError, ExportError) as exc:
        sys.stderr.write(f"tonnetz: {exc}\n")
        return EXIT_FAIL if isinstance(exc, NoTrajectoryError) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
