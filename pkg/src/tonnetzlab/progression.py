"""Chord progressions charted as walks through a Levi graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .incidence import LeviGraph

__all__ = [
    "ProgressionError",
    "NoTrajectoryError",
    "Progression",
    "Trajectory",
    "chart_progression",
    "minimal_trajectory",
]


class ProgressionError(ValueError):
    pass


class NoTrajectoryError(ProgressionError):
    pass


@dataclass(frozen=True)
class Progression:
    chords: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "chords", tuple(self.chords))
        if not self.chords:
            raise ProgressionError("a progression needs at least one chord")

    @classmethod
    def parse(cls, text: str) -> "Progression":
        return cls(tuple(c.strip() for c in text.split(",") if c.strip()))

    def reversed(self) -> "Progression":
        return Progression(self.chords[::-1])

    def __len__(self):
        return len(self.chords)


@dataclass(frozen=True)
class Trajectory:
    """A walk through the Levi graph.

    ``breaks`` lists the consecutive chord pairs with no common pitch; the path
    jumps straight across them, so it is only a genuine walk when continuous.
    """

    path: tuple[str, ...]
    pivots: tuple[str | None, ...]
    breaks: tuple[tuple[str, str], ...]
    is_minimal: bool
    is_unique_minimal: bool

    @property
    def is_continuous(self) -> bool:
        return not self.breaks

    @property
    def first_break(self) -> tuple[str, str] | None:
        return self.breaks[0] if self.breaks else None

    @property
    def length(self) -> int:
        return len(self.path) - 1


def _resolve(g: LeviGraph, p: Progression) -> list[int]:
    out = []
    for label in p.chords:
        hits = [i for i, lab in enumerate(g.labels) if lab == label]
        black = [i for i in hits if i >= g.n_white]
        if not hits:
            raise ProgressionError(f"chord {label!r} is not a vertex of {g.name or 'the graph'}")
        out.append((black or hits)[0])
    return out


def _bfs(adj, src: int) -> tuple[list[int], list[int]]:
    """Distances and shortest-path counts from ``src``."""
    n = len(adj)
    dist = [-1] * n
    ways = [0] * n
    dist[src], ways[src] = 0, 1
    q = deque([src])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
            if dist[w] == dist[u] + 1:
                ways[w] += ways[u]
    return dist, ways


def _shortest_path(adj, dist_to_target: list[int], a: int) -> list[int]:
    """Smallest-index shortest path from ``a`` given distances to the target."""
    path = [a]
    while dist_to_target[path[-1]] > 0:
        d = dist_to_target[path[-1]]
        path.append(min(w for w in adj[path[-1]] if dist_to_target[w] == d - 1))
    return path


def _segments(g: LeviGraph, verts: Sequence[int]):
    adj = g.adjacency
    cache: dict[int, tuple[list[int], list[int]]] = {}
    for a, b in zip(verts, verts[1:]):
        if b not in cache:
            cache[b] = _bfs(adj, b)
        dist, ways = cache[b]
        yield a, b, dist, ways


def minimal_trajectory(g: LeviGraph, p: Progression) -> Trajectory:
    """Concatenate shortest paths between consecutive chords.

    The walk is minimal by construction; it is the unique minimal one exactly
    when every segment has a single shortest path.
    """
    verts = _resolve(g, p)
    path = [verts[0]]
    counts = []
    pivots: list[str | None] = []
    for a, b, dist, ways in _segments(g, verts):
        if dist[a] < 0:
            raise NoTrajectoryError(f"no walk from {g.labels[a]} to {g.labels[b]}")
        seg = _shortest_path(g.adjacency, dist, a)
        counts.append(ways[a])
        pivots.append(g.labels[seg[1]] if len(seg) == 3 else None)
        path.extend(seg[1:])
    return Trajectory(
        path=tuple(g.labels[v] for v in path),
        pivots=tuple(pivots),
        breaks=(),
        is_minimal=True,
        is_unique_minimal=prod(counts) == 1,
    )


def chart_progression(g: LeviGraph, p: Progression) -> Trajectory:
    """Pivot each chord change on a shared pitch (lowest-indexed one)."""
    verts = _resolve(g, p)
    adj = g.adjacency
    path = [verts[0]]
    pivots: list[str | None] = []
    breaks = []
    minimal = True
    unique = True
    for a, b, dist, ways in _segments(g, verts):
        if a == b:
            pivots.append(None)
            continue
        common = sorted(set(adj[a]) & set(adj[b]))
        if not common:
            breaks.append((g.labels[a], g.labels[b]))
            pivots.append(None)
            path.append(b)
            minimal = unique = False
            continue
        pivots.append(g.labels[common[0]])
        path += [common[0], b]
        if len(common) > 1:
            unique = False
    return Trajectory(
        path=tuple(g.labels[v] for v in path),
        pivots=tuple(pivots),
        breaks=tuple(breaks),
        is_minimal=minimal,
        is_unique_minimal=minimal and unique,
    )
