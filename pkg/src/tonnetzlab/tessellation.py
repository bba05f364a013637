"""Finite patches of the hexagonal tilings of the plane labelled by a tonnetz.

Hexagonal cells sit on a triangular lattice in axial coordinates ``(q, r)``
and are split into three classes by ``(q - r) mod 3``.  A cell of class k sits
at ``(k, 0) + i*(1, 1) + j*(2, -1)`` and is labelled ``a*i + b*j + c_k (mod n)``;
a labelling is accepted only if every cell's neighbours are exactly its
incident elements.

* ``bipartite``: class 0 holds points, class 1 blocks, class 2 is empty, so
  the filled cells form a honeycomb covering the Levi graph.
* ``face_centered``: three vertex classes (pitches, major and minor triads);
  each triad is ringed by its pitches and by the triads sharing two of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from .catalog import TripartiteTonnetz
from .incidence import IncidenceStructure, levi_from_incidence

__all__ = [
    "TessellationError",
    "Cell",
    "TessellationPatch",
    "HEX_DIRECTIONS",
    "HORIZONTAL",
    "tessellation_patch",
    "solve_labelling",
    "incident_labels",
]

# flat-topped hexagons; listed counter-clockwise starting from the right-hand upper neighbour
HEX_DIRECTIONS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))
HORIZONTAL = (2, -1)  # two columns to the right, same height, same class: j + 1


class TessellationError(ValueError):
    pass


@dataclass(frozen=True)
class Cell:
    q: int
    r: int
    kind: int | None  # class index, None for an empty cell
    label: str | None

    @property
    def center(self) -> tuple[float, float]:
        return 1.5 * self.q, 3**0.5 * (self.r + self.q / 2)


@dataclass(frozen=True)
class _Labelling:
    classes: tuple[tuple[str, ...] | None, ...]  # labels per class, None = hole
    a: int
    b: int
    offsets: tuple[int, ...]
    n: int

    def index(self, q: int, r: int) -> tuple[int, int | None]:
        k = (q - r) % 3
        if self.classes[k] is None:
            return k, None
        j = (q - r - k) // 3
        return k, (self.a * (r + j) + self.b * j + self.offsets[k]) % self.n

    def label(self, q: int, r: int) -> str | None:
        k, i = self.index(q, r)
        return None if i is None else self.classes[k][i]


@dataclass(frozen=True)
class TessellationPatch:
    rows: int
    cols: int
    flavor: str
    cells: tuple[Cell, ...]
    neighbours: dict[tuple[int, int], tuple[str | None, ...]]  # six slots, HEX_DIRECTIONS order
    class_names: tuple[str, ...]
    rule: tuple[int, int, tuple[int, ...]]

    def cell_at(self, q: int, r: int) -> Cell:
        for c in self.cells:
            if (c.q, c.r) == (q, r):
                return c
        raise KeyError((q, r))

    @property
    def horizontal_step(self) -> int:
        """Index change when moving to the next same-class cell on the right."""
        return self.rule[1]


def _bipartite_model(s: IncidenceStructure):
    g = levi_from_incidence(s)
    n = s.num_points
    if s.num_blocks != n:
        raise TessellationError("a bipartite patch needs as many blocks as points")
    nbrs = {}
    for v in range(g.num_vertices):
        k = 0 if v < n else 1
        nbrs[(k, v % n)] = {(1 - k, w % n) for w in g.adjacency[v]}
    return (s.point_labels, s.block_labels, None), n, nbrs, ("point", "block")


def _tripartite_model(t: TripartiteTonnetz):
    n = 12
    nbrs = {}
    for v in range(len(t.labels)):
        nbrs[(t.colors[v], v % n)] = {(t.colors[w], w % n) for w in t.adjacency[v]}
    classes = tuple(tuple(t.labels[k * n : (k + 1) * n]) for k in range(3))
    return classes, n, nbrs, t.CLASSES


def solve_labelling(classes, n: int, nbrs, horizontal: int | None = None) -> _Labelling:
    """Brute-force the affine rule; ``horizontal`` pins the index step along
    :data:`HORIZONTAL` to pick among symmetric solutions."""
    live = [k for k in range(3) if classes[k] is not None]
    for a, b in product(range(n), repeat=2):
        if horizontal is not None and (b - horizontal) % n:
            continue
        for rest in product(range(n), repeat=len(live) - 1):
            offsets = [0, 0, 0]
            for k, c in zip(live[1:], rest):
                offsets[k] = c
            lab = _Labelling(tuple(classes), a, b, tuple(offsets), n)
            if _consistent(lab, live, n, nbrs):
                return lab
    raise TessellationError("no affine labelling of the plane realizes this structure")


def _consistent(lab: _Labelling, live, n, nbrs) -> bool:
    # every index must occur in every class
    if gcd(lab.a, lab.b, n) != 1:
        return False
    # the rule is affine, so a cell's neighbourhood depends only on (class, index):
    # read it off at the class origin (k, 0) and shift
    for k in live:
        base = lab.index(k, 0)[1]
        ring = [lab.index(k + dq, dr) for dq, dr in HEX_DIRECTIONS]
        live_ring = [(kk, j) for kk, j in ring if j is not None]
        for i in range(n):
            got = [(kk, (j + i - base) % n) for kk, j in live_ring]
            # each incident element exactly once around the cell
            if len(got) != len(nbrs[(k, i)]) or set(got) != nbrs[(k, i)]:
                return False
    return True


def _offset_to_axial(row: int, col: int) -> tuple[int, int]:
    return col, row - (col - (col & 1)) // 2


def tessellation_patch(
    t: IncidenceStructure | TripartiteTonnetz,
    rows: int,
    cols: int,
    flavor: str = "bipartite",
    horizontal: int | None = None,
) -> TessellationPatch:
    """Label a ``rows`` x ``cols`` block of hexagons (odd columns shifted down)."""
    if rows < 1 or cols < 1:
        raise TessellationError("patch needs at least one row and one column")
    if flavor == "bipartite":
        if not isinstance(t, IncidenceStructure):
            raise TessellationError("bipartite patches are drawn from an incidence structure")
        classes, n, nbrs, names = _bipartite_model(t)
    elif flavor == "face_centered":
        if not isinstance(t, TripartiteTonnetz):
            raise TessellationError("face-centred patches need the tripartite tonnetz")
        classes, n, nbrs, names = _tripartite_model(t)
    else:
        raise TessellationError(f"unknown flavor {flavor!r}")
    lab = solve_labelling(classes, n, nbrs, horizontal)
    cells = []
    neighbours = {}
    for row, col in product(range(rows), range(cols)):
        q, r = _offset_to_axial(row, col)
        k, _ = lab.index(q, r)
        label = lab.label(q, r)
        cells.append(Cell(q, r, None if label is None else k, label))
        neighbours[(q, r)] = tuple(lab.label(q + dq, r + dr) for dq, dr in HEX_DIRECTIONS)
    return TessellationPatch(rows, cols, flavor, tuple(cells), neighbours, tuple(names), (lab.a, lab.b, lab.offsets))


def incident_labels(t: IncidenceStructure | TripartiteTonnetz, label: str) -> frozenset[str]:
    """Labels of the elements incident with ``label`` in the source structure."""
    if isinstance(t, TripartiteTonnetz):
        return frozenset(t.neighbors(label))
    g = levi_from_incidence(t)
    return frozenset(g.neighbors(label))
