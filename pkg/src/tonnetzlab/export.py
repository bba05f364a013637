"""Deterministic text and binary exporters: DOT, CSV, JSON and MIDI."""

from __future__ import annotations

import struct
from pathlib import Path

from .cycles import CycleTable
from .incidence import IncidenceStructure, LeviGraph, dumps
from .score import Score

__all__ = [
    "ExportError",
    "export_dot",
    "export_csv",
    "export_json",
    "export_midi",
    "write_output",
    "TICKS_PER_QUARTER",
    "VELOCITY",
    "MIDDLE_C",
]

TICKS_PER_QUARTER = 480
VELOCITY = 80
MIDDLE_C = 60  # C4


class ExportError(ValueError):
    pass


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: LeviGraph) -> str:
    lines = [f"graph {_quote(g.name or 'levi')} {{"]
    for v, lab in enumerate(g.labels):
        fill = "white" if v < g.n_white else "black"
        font = "black" if v < g.n_white else "white"
        lines.append(f"  {_quote(lab)} [style=filled, fillcolor={fill}, fontcolor={font}];")
    for u, w in sorted(g.edges):
        lines.append(f"  {_quote(g.labels[u])} -- {_quote(g.labels[w])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_csv(t: CycleTable, max_p: int | None = None) -> str:
    """Lengths as rows, p-numbers as columns, with row and column totals."""
    width = (t.max_p if max_p is None else max_p) + 1
    out = [",".join(["length"] + [f"p{p}" for p in range(width)] + ["total"])]
    for L in t.lengths:
        out.append(",".join(str(x) for x in [L, *t.row(L, width), t.row_total(L)]))
    cols = t.column_totals()
    out.append(",".join(["total"] + [str(cols.get(p, 0)) for p in range(width)] + [str(t.grand_total)]))
    return "\n".join(out) + "\n"


def export_json(s: IncidenceStructure | Score) -> str:
    if isinstance(s, Score):
        return s.to_json()
    return dumps(s)


def _varlen(n: int) -> bytes:
    out = [n & 0x7F]
    n >>= 7
    while n:
        out.append((n & 0x7F) | 0x80)
        n >>= 7
    return bytes(reversed(out))


def _ticks(beats: float) -> int:
    t = round(beats * TICKS_PER_QUARTER)
    if t <= 0:
        raise ExportError(f"duration {beats} beats rounds to {t} ticks")
    return t


def _note(pc: int, octave: int) -> int:
    n = MIDDLE_C + 12 * (octave - 4) + int(pc)
    if not 0 <= n <= 127:
        raise ExportError(f"pitch class {pc} in octave {octave} is outside the MIDI range")
    return n


def export_midi(sc: Score, octave: int = 4, pedal_octave: int = 3) -> bytes:
    """Format 0 SMF; each event is a chord-on / chord-off pair on channel 0.

    A pedal tone, when present, sounds for the whole piece an octave lower.
    """
    track = bytearray()
    pending = 0  # delta ticks before the next message

    def emit(status: int, note: int, vel: int):
        nonlocal pending
        track.extend(_varlen(pending) + bytes([status, note, vel]))
        pending = 0

    pedal = None if sc.pedal is None else _note(sc.pedal, pedal_octave)
    if pedal is not None and sc.events:
        emit(0x90, pedal, VELOCITY)
    for e in sc.events:
        notes = sorted(_note(p, octave) for p in e.pitches)
        for n in notes:
            emit(0x90, n, VELOCITY)
        pending += _ticks(e.beats)
        for n in notes:
            emit(0x80, n, 0)
    if pedal is not None and sc.events:
        emit(0x80, pedal, 0)
    track.extend(_varlen(pending) + b"\xff\x2f\x00")
    header = b"MThd" + struct.pack(">IHHH", 6, 0, 1, TICKS_PER_QUARTER)
    return header + b"MTrk" + struct.pack(">I", len(track)) + bytes(track)


def write_output(data: str | bytes, path: str | Path) -> Path:
    path = Path(path)
    try:
        if isinstance(data, bytes):
            path.write_bytes(data)
        else:
            path.write_text(data, encoding="utf-8")
    except OSError as exc:
        raise ExportError(f"cannot write {path}: {exc.strerror or exc}") from None
    return path
