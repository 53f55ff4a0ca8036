"""Facial adjacency semantics: colorings, verification, available colors."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .embed import PlaneGraph


@dataclass
class Coloring:
    """Partial or total map from edge ids to colors ``1..k``."""

    assignment: dict[int, int] = field(default_factory=dict)
    k: int = 7

    def __post_init__(self) -> None:
        self.assignment = {int(e): int(c) for e, c in self.assignment.items()}
        for e, c in self.assignment.items():
            if not 1 <= c <= self.k:
                raise ValueError(f"color {c} of edge {e} outside 1..{self.k}")

    def __getitem__(self, e: int) -> int:
        return self.assignment[e]

    def __contains__(self, e: object) -> bool:
        return e in self.assignment

    def __iter__(self) -> Iterator[int]:
        return iter(self.assignment)

    def __len__(self) -> int:
        return len(self.assignment)

    def get(self, e: int, default=None):
        return self.assignment.get(e, default)

    def items(self):
        return self.assignment.items()

    def is_total(self, G: PlaneGraph) -> bool:
        return all(e in self.assignment for e in G.edges())

    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    def restricted(self, edges: Iterable[int]) -> "Coloring":
        keep = set(edges)
        return Coloring({e: c for e, c in self.assignment.items() if e in keep}, self.k)


@dataclass(frozen=True)
class Violation:
    e: int
    f: int
    face: int
    distance: int


@dataclass(frozen=True)
class MedialSubgraph:
    """Graph on an edge subset, adjacency = facial distance at most ``ell``."""

    vertices: tuple[int, ...]
    adjacency: Mapping[int, frozenset[int]]
    ell: int = 2

    def degree(self, e: int) -> int:
        return len(self.adjacency[e])

    def edges(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a in self.vertices for b in self.adjacency[a] if a < b)


def _as_map(phi) -> Mapping[int, int]:
    return phi.assignment if isinstance(phi, Coloring) else phi


def conflicts(G: PlaneGraph, ell: int, phi) -> list[Violation]:
    """Every pair of colored edges within facial distance ``ell`` sharing a
    color, once per face at its least distance there."""
    col = _as_map(phi)
    found: dict[tuple[int, int, int], int] = {}
    for walk in G.faces:
        es = [G.edge_of(d) for d in walk.darts]
        n = len(es)
        for i, e in enumerate(es):
            ce = col.get(e)
            if ce is None:
                continue
            for s in range(1, min(ell, n - 1) + 1):
                f = es[(i + s) % n]
                if f == e or col.get(f) != ce:
                    continue
                key = (min(e, f), max(e, f), walk.face)
                dist = min(s, n - s)
                if dist < found.get(key, n + 1):
                    found[key] = dist
    return [Violation(a, b, face, d) for (a, b, face), d in sorted(found.items())]


def verify(G: PlaneGraph, ell: int, phi) -> list[Violation]:
    """Violations of an ``ell``-facial edge coloring; empty means valid."""
    col = _as_map(phi)
    missing = [e for e in G.edges() if e not in col]
    if missing:
        raise ValueError(f"coloring is partial: edges {missing[:5]} uncolored")
    if isinstance(phi, Coloring):
        bad = [c for c in col.values() if not 1 <= c <= phi.k]
        if bad:
            raise ValueError(f"colors {bad[:5]} outside palette")
    return conflicts(G, ell, col)


def is_valid(G: PlaneGraph, ell: int, phi) -> bool:
    return not verify(G, ell, phi)


def build_2medial(G: PlaneGraph, H: Iterable[int], ell: int = 2) -> MedialSubgraph:
    hs = sorted(set(H))
    for e in hs:
        if not G.has_edge(e):
            raise KeyError(f"unknown edge {e}")
    hset = set(hs)
    nbrs = G._facial_neighbors(ell)
    adjacency = {e: frozenset(nbrs[e] & hset) for e in hs}
    return MedialSubgraph(tuple(hs), adjacency, ell)


def available_colors(G: PlaneGraph, ell: int, phi, e: int, k: int | None = None) -> set[int]:
    col = _as_map(phi)
    if k is None:
        k = phi.k if isinstance(phi, Coloring) else 7
    if e in col:
        raise ValueError(f"edge {e} is already colored")
    taken = {col[f] for f in G.l_facial_neighborhood(e, ell) if f in col}
    return set(range(1, k + 1)) - taken


def lists_from_partial(
    G: PlaneGraph, ell: int, phi, H: Iterable[int], k: int | None = None
) -> tuple[MedialSubgraph, dict[int, set[int]]]:
    m = build_2medial(G, H, ell)
    return m, {e: available_colors(G, ell, phi, e, k) for e in m.vertices}


def vertex_conflicts(M: PlaneGraph, ell: int, col: Mapping[int, int]) -> list[tuple[int, int]]:
    """Pairs of distinct vertices of ``M`` at facial distance at most
    ``ell`` on some face that share a color (``ell``-facial vertex
    coloring)."""
    bad = set()
    for walk in M.faces:
        vs = [M.vertex_of(d) for d in walk.darts]
        n = len(vs)
        for i, x in enumerate(vs):
            for s in range(1, min(ell, n - 1) + 1):
                y = vs[(i + s) % n]
                if x != y and col[x] == col[y]:
                    bad.add((min(x, y), max(x, y)))
    return sorted(bad)


def is_valid_vertex_coloring(M: PlaneGraph, ell: int, col: Mapping[int, int]) -> bool:
    return not vertex_conflicts(M, ell, col)
