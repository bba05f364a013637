"""Exhaustive simple-cycle enumeration and p-number cycle tables.

The p-number of a cycle is the number of its edges that are not edges of a
chosen reference Hamiltonian cycle (the "perimeter").  On a cubic graph the
remaining edges form a perfect matching, the chords of the perimeter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

__all__ = [
    "MAX_VERTICES",
    "CycleError",
    "Cycle",
    "ReferenceHamiltonian",
    "CycleTable",
    "canonical_cycle",
    "enumerate_cycles",
    "enumerate_hamiltonians",
    "p_number",
    "cycle_table",
    "find_reference_hamiltonian",
    "reference_from_labels",
]

MAX_VERTICES = 64


class CycleError(ValueError):
    pass


def canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    """Smallest rotation/reflection, i.e. start at the minimum vertex and
    step towards its smaller cycle-neighbour."""
    n = len(vertices)
    i = min(range(n), key=lambda j: vertices[j])
    fwd = tuple(vertices[(i + j) % n] for j in range(n))
    bwd = tuple(vertices[(i - j) % n] for j in range(n))
    return min(fwd, bwd)


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle stored in canonical form.  Order: length, then vertices."""

    length: int = field(init=False, repr=False)
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", canonical_cycle(tuple(self.vertices)))
        object.__setattr__(self, "length", len(self.vertices))

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [tuple(sorted((vs[i], vs[(i + 1) % len(vs)]))) for i in range(len(vs))]

    def labels(self, g) -> tuple[str, ...]:
        return tuple(g.labels[v] for v in self.vertices)

    def walk_from(self, start: int, towards: int | None = None) -> tuple[int, ...]:
        """The cycle read starting at ``start`` (optionally stepping to ``towards`` first)."""
        vs = self.vertices
        i = vs.index(start)
        n = len(vs)
        fwd = tuple(vs[(i + j) % n] for j in range(n))
        if towards is None or fwd[1] == towards:
            return fwd
        return tuple(vs[(i - j) % n] for j in range(n))

    def is_valid_in(self, adj) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or len(vs) < 3:
            return False
        return all(vs[(i + 1) % len(vs)] in adj[vs[i]] for i in range(len(vs)))


def _neighbor_masks(adj) -> list[int]:
    masks = []
    for a in adj:
        m = 0
        for w in a:
            m |= 1 << w
        masks.append(m)
    return masks


def _check_size(adj) -> None:
    if len(adj) > MAX_VERTICES:
        raise CycleError(f"graph has {len(adj)} vertices; enumeration is capped at {MAX_VERTICES}")


def _cycle_paths(adj):
    """Yield each simple cycle once as a vertex tuple already in canonical form.

    Anchored at its smallest vertex ``s``; only vertices above ``s`` are
    entered, and a cycle is closed only when its second vertex is smaller than
    its last, so each undirected cycle appears exactly once.
    """
    n = len(adj)
    nbm = _neighbor_masks(adj)
    full = (1 << n) - 1
    for s in range(n):
        allowed = full ^ ((1 << (s + 1)) - 1)
        if bin(nbm[s] & allowed).count("1") < 2:
            continue
        for first in adj[s]:
            if first <= s:
                continue
            path = [s, first]
            visited = (1 << s) | (1 << first)
            stack = [nbm[first] & allowed & ~visited]
            while stack:
                cand = stack[-1]
                if not cand:
                    stack.pop()
                    visited &= ~(1 << path.pop())
                    continue
                low = cand & -cand
                stack[-1] = cand ^ low
                w = low.bit_length() - 1
                path.append(w)
                visited |= low
                if (nbm[w] >> s) & 1 and first < w:
                    yield tuple(path)
                stack.append(nbm[w] & allowed & ~visited)


def enumerate_cycles(g) -> list[Cycle]:
    """Every simple cycle of ``g`` exactly once, sorted by (length, vertices)."""
    adj = g.adjacency
    _check_size(adj)
    return sorted(Cycle(p) for p in _cycle_paths(adj))


def enumerate_hamiltonians(g) -> list[Cycle]:
    """All Hamiltonian cycles, by a dedicated search anchored at vertex 0."""
    adj = g.adjacency
    _check_size(adj)
    n = len(adj)
    if n < 3:
        return []
    nbm = _neighbor_masks(adj)
    out = []
    full = (1 << n) - 1

    def extend(v, visited, path):
        if visited == full:
            if nbm[v] & 1 and path[1] < v:
                out.append(Cycle(tuple(path)))
            return
        cand = nbm[v] & ~visited
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            path.append(w)
            extend(w, visited | low, path)
            path.pop()

    extend(0, 1, [0])
    return sorted(out)


@dataclass(frozen=True)
class ReferenceHamiltonian:
    cycle: Cycle
    n_vertices: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, g, cycle: Cycle | Sequence[int]) -> "ReferenceHamiltonian":
        if not isinstance(cycle, Cycle):
            cycle = Cycle(tuple(cycle))
        adj = tuple(tuple(a) for a in g.adjacency)
        if cycle.length != len(adj) or not cycle.is_valid_in(adj):
            raise CycleError("reference is not a Hamiltonian cycle of the graph")
        return cls(cycle, len(adj), adj)

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.cycle.edges())

    @property
    def chords(self) -> frozenset[tuple[int, int]]:
        on = self.edge_set
        return frozenset(
            (u, w) for u in range(self.n_vertices) for w in self.adjacency[u] if u < w and (u, w) not in on
        )

    def labels(self, g) -> tuple[str, ...]:
        return self.cycle.labels(g)


def p_number(c: Cycle, ref: ReferenceHamiltonian) -> int:
    on = ref.edge_set
    if not c.is_valid_in(ref.adjacency):
        raise CycleError("cycle does not belong to the reference's graph")
    return sum(1 for e in c.edges() if e not in on)


@dataclass(frozen=True)
class CycleTable:
    """Counts of cycles by (length, p-number)."""

    rows: Mapping[int, Mapping[int, int]]

    @classmethod
    def from_rows(cls, rows: Mapping[int, Sequence[int] | Mapping[int, int]]) -> "CycleTable":
        clean: dict[int, dict[int, int]] = {}
        for length, row in rows.items():
            items = row.items() if isinstance(row, Mapping) else enumerate(row)
            clean[int(length)] = {int(p): int(c) for p, c in items if c}
        return cls(clean)

    def __eq__(self, other):
        if not isinstance(other, CycleTable):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return tuple(sorted((L, tuple(sorted((p, c) for p, c in row.items() if c))) for L, row in self.rows.items()))

    @property
    def lengths(self) -> list[int]:
        return sorted(L for L, row in self.rows.items() if any(row.values()))

    @property
    def max_p(self) -> int:
        return max((p for row in self.rows.values() for p, c in row.items() if c), default=0)

    def count(self, length: int, p: int) -> int:
        return self.rows.get(length, {}).get(p, 0)

    def row_total(self, length: int) -> int:
        return sum(self.rows.get(length, {}).values())

    def row_totals(self) -> dict[int, int]:
        return {L: self.row_total(L) for L in self.lengths}

    def column_totals(self) -> dict[int, int]:
        return {p: sum(self.count(L, p) for L in self.lengths) for p in range(self.max_p + 1)}

    @property
    def grand_total(self) -> int:
        return sum(self.row_total(L) for L in self.lengths)

    def row(self, length: int, width: int | None = None) -> list[int]:
        width = self.max_p + 1 if width is None else width
        return [self.count(length, p) for p in range(width)]


def _edge_masks(adj):
    index = {}
    for u in range(len(adj)):
        for w in adj[u]:
            if u < w:
                index[(u, w)] = len(index)
    return index


def _mask_of(vertices: Sequence[int], index) -> int:
    m = 0
    n = len(vertices)
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        m |= 1 << index[(a, b) if a < b else (b, a)]
    return m


def cycle_table(g, ref: ReferenceHamiltonian, cycles: Iterable[Cycle] | None = None) -> CycleTable:
    adj = g.adjacency
    if ref.n_vertices != len(adj) or ref.adjacency != tuple(tuple(a) for a in adj):
        raise CycleError("reference Hamiltonian belongs to a different graph")
    cycles = enumerate_cycles(g) if cycles is None else cycles
    index = _edge_masks(adj)
    off = ~_mask_of(ref.cycle.vertices, index)
    rows: dict[int, dict[int, int]] = {}
    for c in cycles:
        p = (_mask_of(c.vertices, index) & off).bit_count()
        row = rows.setdefault(c.length, {})
        row[p] = row.get(p, 0) + 1
    return CycleTable(rows)


def find_reference_hamiltonian(g, target: CycleTable, cycles: Sequence[Cycle] | None = None):
    """First Hamiltonian (in enumeration order) whose table equals ``target``.

    Returns ``None`` when no Hamiltonian reproduces it.
    """
    cycles = enumerate_cycles(g) if cycles is None else list(cycles)
    hist: dict[int, int] = {}
    for c in cycles:
        hist[c.length] = hist.get(c.length, 0) + 1
    if hist != target.row_totals():
        return None
    for h in (c for c in cycles if c.length == len(g.adjacency)):
        ref = ReferenceHamiltonian.of(g, h)
        if cycle_table(g, ref, cycles) == target:
            return ref
    return None


def reference_from_labels(g, labels: Sequence[str]) -> ReferenceHamiltonian:
    try:
        vs = tuple(g.index(lab) if hasattr(g, "index") else g.labels.index(lab) for lab in labels)
    except (KeyError, ValueError) as exc:
        raise CycleError(f"unknown vertex label in reference: {exc}") from None
    return ReferenceHamiltonian.of(g, vs)
