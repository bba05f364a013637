"""Packaged reference data: the published cycle tables and pinned perimeters."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .cycles import CycleTable, ReferenceHamiltonian, reference_from_labels

__all__ = ["TABLE_KEYS", "published_table", "pinned_reference", "pinned_labels"]

TABLE_KEYS = ("heawood", "pentatonic", "duads-synthemes")


@lru_cache(maxsize=None)
def _load(name: str) -> dict:
    return json.loads(resources.files("tonnetzlab").joinpath("data").joinpath(name).read_text(encoding="utf-8"))


def published_table(key: str) -> CycleTable:
    """Cycle counts by (length, p) as printed for the seventh, pentatonic and
    twelve-tone tonnetze."""
    try:
        rows = _load("cycle_tables.json")[key]
    except KeyError:
        raise KeyError(f"no published table {key!r}; choose from {', '.join(TABLE_KEYS)}") from None
    return CycleTable.from_rows({int(k): v for k, v in rows.items()})


def pinned_labels(key: str) -> tuple[str, ...]:
    return tuple(_load("references.json")[key])


def pinned_reference(key: str, g, relabel: dict[str, str] | None = None) -> ReferenceHamiltonian:
    """The perimeter found once by search and stored; ``relabel`` maps the
    stored labels onto ``g``'s when the tones differ."""
    labels = pinned_labels(key)
    if relabel:
        labels = tuple(relabel.get(x, x) for x in labels)
    return reference_from_labels(g, labels)
