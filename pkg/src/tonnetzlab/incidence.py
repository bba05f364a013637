"""Incidence structures, their Levi graphs and structural analyses.

An :class:`IncidenceStructure` is a list of labelled points and a list of
labelled blocks (point-index sets).  Its :class:`LeviGraph` is the bipartite
incidence graph: one white vertex per point, one black vertex per block.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "INFINITE",
    "IncidenceError",
    "Block",
    "IncidenceStructure",
    "LeviGraph",
    "BiregularityReport",
    "levi_from_incidence",
    "incidence_from_levi",
    "biregularity",
    "girth",
    "is_configuration",
    "dual",
    "count_tetracycles",
    "structure_to_dict",
    "structure_from_dict",
    "dumps",
    "loads",
]

INFINITE = math.inf


class IncidenceError(ValueError):
    """Raised when an incidence structure violates its invariants."""


@dataclass(frozen=True)
class Block:
    label: str
    points: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(sorted(self.points)))


@dataclass(frozen=True)
class IncidenceStructure:
    """Points plus labelled blocks; validated on construction.

    Blocks are stored as sorted index tuples, so two structures built from the
    same sets in a different order compare equal after :meth:`normalized`.
    """

    name: str
    point_labels: tuple[str, ...]
    blocks: tuple[Block, ...]

    def __post_init__(self):
        object.__setattr__(self, "point_labels", tuple(self.point_labels))
        object.__setattr__(
            self,
            "blocks",
            tuple(b if isinstance(b, Block) else Block(b[0], tuple(b[1])) for b in self.blocks),
        )
        self._validate()

    def _validate(self) -> None:
        seen: set[str] = set()
        for label in self.point_labels:
            if label in seen:
                raise IncidenceError(f"duplicate point label {label!r}")
            seen.add(label)
        n = len(self.point_labels)
        seen_blocks: set[str] = set()
        seen_sets: dict[tuple[int, ...], str] = {}
        for block in self.blocks:
            if block.label in seen_blocks:
                raise IncidenceError(f"duplicate block label {block.label!r}")
            seen_blocks.add(block.label)
            if len(set(block.points)) != len(block.points):
                raise IncidenceError(f"block {block.label!r} repeats a point")
            for p in block.points:
                if not 0 <= p < n:
                    raise IncidenceError(f"block {block.label!r} has point index {p} out of range")
            if block.points in seen_sets:
                raise IncidenceError(
                    f"block {block.label!r} duplicates the point set of block {seen_sets[block.points]!r}"
                )
            seen_sets[block.points] = block.label

    @classmethod
    def from_sets(cls, name: str, point_labels: Sequence[str], blocks: Iterable[tuple[str, Iterable[str]]]):
        """Build from blocks given as ``(label, point labels)`` pairs."""
        index = {p: i for i, p in enumerate(point_labels)}
        return cls(name, tuple(point_labels), tuple(Block(lab, tuple(index[p] for p in pts)) for lab, pts in blocks))

    @property
    def block_labels(self) -> tuple[str, ...]:
        return tuple(b.label for b in self.blocks)

    @property
    def num_points(self) -> int:
        return len(self.point_labels)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block(self, label: str) -> Block:
        for b in self.blocks:
            if b.label == label:
                return b
        raise KeyError(label)

    def block_point_labels(self, label: str) -> frozenset[str]:
        return frozenset(self.point_labels[i] for i in self.block(label).points)

    def blocks_through(self, point_label: str) -> tuple[str, ...]:
        i = self.point_labels.index(point_label)
        return tuple(b.label for b in self.blocks if i in b.points)

    def incidences(self) -> int:
        return sum(len(b.points) for b in self.blocks)

    def normalized(self) -> "IncidenceStructure":
        """Copy with blocks sorted by label; block order carries no meaning."""
        return IncidenceStructure(self.name, self.point_labels, tuple(sorted(self.blocks, key=lambda b: b.label)))

    def relabel(self, point_map=None, block_map=None, name: str | None = None) -> "IncidenceStructure":
        point_map = point_map or {}
        block_map = block_map or {}
        return IncidenceStructure(
            self.name if name is None else name,
            tuple(point_map.get(p, p) for p in self.point_labels),
            tuple(Block(block_map.get(b.label, b.label), b.points) for b in self.blocks),
        )


@dataclass(frozen=True)
class LeviGraph:
    """Bipartite incidence graph.

    Vertices ``0 .. n_white-1`` are the white (point) vertices and the rest are
    black (block) vertices.  ``edges`` holds ``(white, black)`` index pairs.
    """

    labels: tuple[str, ...]
    n_white: int
    edges: frozenset[tuple[int, int]]
    name: str = ""

    def __post_init__(self):
        n = len(self.labels)
        for u, v in self.edges:
            if not (0 <= u < self.n_white <= v < n):
                raise IncidenceError(f"edge ({u}, {v}) is not a white-black pair")

    @property
    def n_black(self) -> int:
        return len(self.labels) - self.n_white

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.labels]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def colors(self) -> tuple[int, ...]:
        return tuple(0 if i < self.n_white else 1 for i in range(len(self.labels)))

    @cached_property
    def _index(self) -> dict[str, int]:
        index: dict[str, int] = {}
        for i, lab in enumerate(self.labels):
            index[lab] = -1 if lab in index else i
        return index

    def index(self, label: str) -> int:
        i = self._index[label]
        if i < 0:
            raise KeyError(f"label {label!r} names both a point and a block")
        return i

    def neighbors(self, label: str) -> tuple[str, ...]:
        return tuple(self.labels[w] for w in self.adjacency[self.index(label)])

    def is_white(self, v: int) -> bool:
        return v < self.n_white

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class BiregularityReport:
    m: int
    n: int
    r: int | None
    k: int | None
    is_biregular: bool
    is_square: bool

    @property
    def symbol(self) -> str:
        if not self.is_biregular:
            return "not biregular"
        if self.is_square:
            return f"{{{self.m}_{self.r}}}"
        return f"{{{self.m}_{self.r}, {self.n}_{self.k}}}"


def levi_from_incidence(s: IncidenceStructure) -> LeviGraph:
    m = s.num_points
    edges = frozenset((p, m + j) for j, b in enumerate(s.blocks) for p in b.points)
    return LeviGraph(s.point_labels + s.block_labels, m, edges, s.name)


def incidence_from_levi(g: LeviGraph) -> IncidenceStructure:
    points = g.labels[: g.n_white]
    blocks = [[] for _ in range(g.n_black)]
    for u, v in g.edges:
        blocks[v - g.n_white].append(u)
    return IncidenceStructure(
        g.name, points, tuple(Block(g.labels[g.n_white + j], tuple(b)) for j, b in enumerate(blocks))
    )


def biregularity(g: LeviGraph) -> BiregularityReport:
    adj = g.adjacency
    white = {len(adj[v]) for v in range(g.n_white)}
    black = {len(adj[v]) for v in range(g.n_white, g.num_vertices)}
    m, n = g.n_white, g.n_black
    # an empty side is vacuously regular; take degree 0 for it
    ok = len(white) <= 1 and len(black) <= 1
    if not ok:
        return BiregularityReport(m, n, None, None, False, False)
    r = white.pop() if white else 0
    k = black.pop() if black else 0
    return BiregularityReport(m, n, r, k, True, m == n and r == k)


def girth(g) -> int | float:
    """Length of a shortest cycle, or :data:`INFINITE` for a forest.

    Accepts any object with an ``adjacency`` attribute.
    """
    adj = g.adjacency
    best = INFINITE
    for root in range(len(adj)):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_configuration(g: LeviGraph) -> bool:
    rep = biregularity(g)
    return rep.is_biregular and rep.is_square and girth(g) >= 6


def dual(s: IncidenceStructure) -> IncidenceStructure:
    """Swap points and blocks: block ``i`` of the dual holds the blocks through point ``i``."""
    through: list[list[int]] = [[] for _ in s.point_labels]
    for j, b in enumerate(s.blocks):
        for p in b.points:
            through[p].append(j)
    return IncidenceStructure(
        f"dual({s.name})" if s.name else "dual",
        s.block_labels,
        tuple(Block(lab, tuple(ts)) for lab, ts in zip(s.point_labels, through)),
    )


def _canonical_rotation(cycle: Sequence[int]) -> tuple[int, ...]:
    n = len(cycle)
    i = min(range(n), key=lambda j: cycle[j])
    fwd = tuple(cycle[(i + j) % n] for j in range(n))
    bwd = tuple(cycle[(i - j) % n] for j in range(n))
    return min(fwd, bwd)


def count_tetracycles(g) -> tuple[int, list[tuple[str, ...]]]:
    """All 4-cycles, each once, as label tuples in canonical rotation."""
    adj = [set(a) for a in g.adjacency]
    found: set[tuple[int, ...]] = set()
    for u, v in combinations(range(len(adj)), 2):
        common = sorted(adj[u] & adj[v])
        for a, b in combinations(common, 2):
            found.add(_canonical_rotation((u, a, v, b)))
    cycles = sorted(found)
    return len(cycles), [tuple(g.labels[i] for i in c) for c in cycles]


def structure_to_dict(s: IncidenceStructure) -> dict:
    return {
        "name": s.name,
        "points": list(s.point_labels),
        "blocks": [{"label": b.label, "points": list(b.points)} for b in s.blocks],
    }


def structure_from_dict(data: dict) -> IncidenceStructure:
    try:
        name = data["name"]
        points = data["points"]
        blocks = data["blocks"]
    except (KeyError, TypeError) as exc:
        raise IncidenceError(f"malformed incidence document: missing {exc}") from None
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise IncidenceError("'points' must be a list of strings")
    parsed = []
    for b in blocks:
        label, pts = b.get("label"), b.get("points")
        if not isinstance(label, str) or not isinstance(pts, list):
            raise IncidenceError(f"malformed block entry {b!r}")
        if len(set(pts)) != len(pts):
            raise IncidenceError(f"block {label!r} repeats a point")
        parsed.append(Block(label, tuple(int(p) for p in pts)))
    return IncidenceStructure(str(name), tuple(points), tuple(parsed))


def dumps(s: IncidenceStructure) -> str:
    return json.dumps(structure_to_dict(s), indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> IncidenceStructure:
    return structure_from_dict(json.loads(text))
