"""Canonical labelling and isomorphism for small vertex-coloured graphs.

Colour refinement plus individualisation.  The search tree is explored in
full except for two sound prunings: children in the same orbit of the
automorphisms found so far (restricted to those fixing the current path), and
abandoning a subtree once one of its leaves reproduces an earlier certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


__all__ = [
    "CanonicalForm",
    "canonical_form",
    "canonical_labeling",
    "are_isomorphic",
    "find_isomorphism",
    "automorphism_generators",
    "vertex_orbits",
]

Adjacency = Sequence[Sequence[int]]


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes


def _refine(adj: Adjacency, colors: list[int]) -> list[int]:
    """Coarsest equitable refinement; cell indices are ordered invariantly."""
    ncells = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        colors = [rank[s] for s in sig]
        if len(rank) == ncells:
            return colors
        ncells = len(rank)


def _certificate(adj: Adjacency, init: Sequence[int], perm: Sequence[int]) -> tuple:
    n = len(adj)
    inv = [0] * n
    for v, p in enumerate(perm):
        inv[p] = v
    cols = tuple(init[inv[i]] for i in range(n))
    edges = tuple(sorted((perm[u], perm[w]) for u in range(n) for w in adj[u] if perm[u] < perm[w]))
    return cols, edges


def _orbits(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, adj: Adjacency, colors: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.init = list(colors)  # raw values go into the certificate
        self.best: tuple | None = None
        self.best_perm: list[int] | None = None
        self.best_path: list[int] | None = None
        self.leaves: dict[tuple, tuple[list[int], list[int]]] = {}
        self.autos: list[tuple[int, ...]] = []

    def run(self):
        self._visit(list(self.init), [])
        return self

    def _record(self, perm: list[int], path: list[int]) -> int | None:
        """Handle a leaf; return the level to jump back to, if any."""
        cert = _certificate(self.adj, self.init, perm)
        seen = self.leaves.get(cert)
        if seen is not None:
            other_perm, other_path = seen
            inv = [0] * self.n
            for v, p in enumerate(other_perm):
                inv[p] = v
            auto = tuple(inv[perm[v]] for v in range(self.n))
            if any(auto[v] != v for v in range(self.n)):
                self.autos.append(auto)
            level = 0
            while level < len(path) and path[level] == other_path[level]:
                level += 1
            return level
        self.leaves[cert] = (perm, list(path))
        if self.best is None or cert < self.best:
            self.best, self.best_perm, self.best_path = cert, perm, list(path)
        return None

    def _visit(self, colors: list[int], path: list[int]) -> int | None:
        colors = _refine(self.adj, colors)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = next((c for c in sorted(counts) if counts[c] > 1), None)
        if target is None:
            return self._record(colors, path)
        cell = [v for v in range(self.n) if colors[v] == target]
        depth = len(path)
        done: list[int] = []
        for v in cell:
            if done:
                fixing = [g for g in self.autos if all(g[p] == p for p in path)]
                if fixing:
                    orb = _orbits(self.n, fixing)
                    if any(orb[v] == orb[u] for u in done):
                        continue
            child = [2 * c for c in colors]
            child[v] -= 1
            path.append(v)
            jump = self._visit(child, path)
            path.pop()
            done.append(v)
            if jump is not None and jump < depth:
                return jump
        return None


def _as_graph(g) -> tuple[Adjacency, Sequence[int]]:
    return g.adjacency, getattr(g, "colors", (0,) * len(g.adjacency))


def canonical_labeling(adj: Adjacency, colors: Sequence[int] | None = None) -> tuple[list[int], bytes]:
    """Return ``(perm, certificate)`` where ``perm[v]`` is v's canonical position."""
    colors = colors if colors is not None else [0] * len(adj)
    s = _Search(adj, colors).run()
    if s.best is None:
        return [], b""
    cols, edges = s.best
    n = len(adj)
    width = 2 if n < 65536 else 4
    out = bytearray(n.to_bytes(4, "big"))
    for c in cols:
        out += c.to_bytes(width, "big")
    for u, w in edges:
        out += u.to_bytes(width, "big") + w.to_bytes(width, "big")
    return s.best_perm, bytes(out)


def canonical_form(g, respect_colors: bool = True) -> CanonicalForm:
    adj, colors = _as_graph(g)
    _, cert = canonical_labeling(adj, colors if respect_colors else None)
    return CanonicalForm(cert)


def find_isomorphism(adj1: Adjacency, col1: Sequence[int], adj2: Adjacency, col2: Sequence[int]) -> list[int] | None:
    """Vertex map ``phi`` with ``phi[v]`` in graph 2, or ``None``."""
    if len(adj1) != len(adj2):
        return None
    if sorted(len(a) for a in adj1) != sorted(len(a) for a in adj2):
        return None
    if sorted(col1) != sorted(col2):
        return None
    p1, c1 = canonical_labeling(adj1, col1)
    p2, c2 = canonical_labeling(adj2, col2)
    if c1 != c2:
        return None
    inv2 = [0] * len(p2)
    for v, p in enumerate(p2):
        inv2[p] = v
    return [inv2[p1[v]] for v in range(len(adj1))]


def are_isomorphic(g1, g2, respect_colors: bool = True) -> dict[str, str] | None:
    """Witness bijection from ``g1`` labels to ``g2`` labels, or ``None``.

    With ``respect_colors=False`` the vertex classes are ignored, so an
    isomorphism may exchange points and blocks.
    """
    adj1, col1 = _as_graph(g1)
    adj2, col2 = _as_graph(g2)
    if not respect_colors:
        col1, col2 = [0] * len(adj1), [0] * len(adj2)
    phi = find_isomorphism(adj1, col1, adj2, col2)
    if phi is None:
        return None
    return {g1.labels[v]: g2.labels[phi[v]] for v in range(len(adj1))}


def automorphism_generators(g, respect_colors: bool = True) -> list[tuple[int, ...]]:
    """Automorphisms met during the canonical search (not necessarily a full generating set)."""
    adj, colors = _as_graph(g)
    return _Search(adj, colors if respect_colors else [0] * len(adj)).run().autos


def vertex_orbits(g, vertices: Sequence[int] | None = None, respect_colors: bool = True) -> list[list[int]]:
    """Orbits of the automorphism group on ``vertices``.

    Decided exactly: two vertices share an orbit iff individualising each of
    them yields isomorphic coloured graphs.
    """
    adj, colors = _as_graph(g)
    colors = list(colors) if respect_colors else [0] * len(adj)
    vertices = list(range(len(adj))) if vertices is None else list(vertices)
    top = max(colors, default=0) + 1

    def marked(v):
        c = list(colors)
        c[v] = top
        return c

    certs: dict[bytes, list[int]] = {}
    for v in vertices:
        _, cert = canonical_labeling(adj, marked(v))
        certs.setdefault(cert, []).append(v)
    return sorted(certs.values())
