"""List coloring: free-vertex cores, Gallai trees and an exact L-coloring solver."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from . import kernel
from .facial import MedialSubgraph


@dataclass(frozen=True)
class ListGraph:
    """Simple graph with a color list on every vertex."""

    adj: Mapping[Hashable, frozenset]
    lists: Mapping[Hashable, frozenset]

    def __post_init__(self) -> None:
        adj = {v: frozenset(ns) for v, ns in self.adj.items()}
        lists = {v: frozenset(ls) for v, ls in self.lists.items()}
        for v, ns in adj.items():
            if v in ns:
                raise ValueError(f"self-loop at {v}")
            for u in ns:
                if v not in adj.get(u, ()):
                    raise ValueError(f"adjacency {v}-{u} is not symmetric")
        if set(lists) != set(adj):
            raise ValueError("lists must be given for exactly the graph's vertices")
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "lists", lists)

    @classmethod
    def from_medial(cls, m: MedialSubgraph, lists: Mapping[int, Iterable]) -> "ListGraph":
        return cls(dict(m.adjacency), {v: frozenset(lists[v]) for v in m.vertices})

    @classmethod
    def from_edges(cls, vertices: Iterable, edges: Iterable[tuple], lists: Mapping) -> "ListGraph":
        adj: dict = {v: set() for v in vertices}
        for a, b in edges:
            adj[a].add(b)
            adj[b].add(a)
        return cls(adj, lists)

    @property
    def vertices(self) -> list:
        return sorted(self.adj, key=_key)

    def degree(self, v) -> int:
        return len(self.adj[v])

    def induced(self, keep: Iterable) -> "ListGraph":
        ks = set(keep)
        return ListGraph({v: self.adj[v] & ks for v in ks}, {v: self.lists[v] for v in ks})

    def __len__(self) -> int:
        return len(self.adj)


def _key(v):
    return (type(v).__name__, v)


def core_order(g: ListGraph, pick=None) -> tuple[ListGraph, list]:
    """Core plus the order in which free vertices were removed.

    ``pick`` chooses the next free vertex to remove; the lowest id by
    default.
    """
    alive = set(g.adj)
    deg = {v: len(g.adj[v]) for v in alive}
    removed = []
    while True:
        free = [v for v in alive if len(g.lists[v]) > deg[v]]
        if not free:
            break
        v = min(free, key=_key) if pick is None else pick(free)
        alive.discard(v)
        removed.append(v)
        for u in g.adj[v]:
            if u in alive:
                deg[u] -= 1
    return g.induced(alive), removed


def core(g: ListGraph) -> ListGraph:
    return core_order(g)[0]


def _components(adj: Mapping) -> list[set]:
    seen: set = set()
    comps = []
    for s in sorted(adj, key=_key):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    comp.add(u)
                    stack.append(u)
        comps.append(comp)
    return comps


def _blocks(adj: Mapping) -> list[set]:
    disc: dict = {}
    low: dict = {}
    out: list[set] = []
    stack: list[tuple] = []
    counter = [0]

    def dfs(v, parent):
        disc[v] = low[v] = counter[0]
        counter[0] += 1
        for u in sorted(adj[v], key=_key):
            if u == parent:
                continue
            if u not in disc:
                stack.append((v, u))
                dfs(u, v)
                low[v] = min(low[v], low[u])
                if low[u] >= disc[v]:
                    block = set()
                    while True:
                        a, b = stack.pop()
                        block.update((a, b))
                        if (a, b) == (v, u):
                            break
                    out.append(block)
            elif disc[u] < disc[v]:
                stack.append((v, u))
                low[v] = min(low[v], disc[u])

    for v in sorted(adj, key=_key):
        if v not in disc:
            dfs(v, None)
            if not adj[v]:
                out.append({v})
    return out


def is_gallai_tree(adj: Mapping) -> bool:
    """True iff every block is complete or an odd cycle (connected input)."""
    if isinstance(adj, ListGraph):
        adj = adj.adj
    if len(_components(adj)) > 1:
        raise ValueError("Gallai-tree test needs a connected graph")
    for block in _blocks(adj):
        n = len(block)
        degs = [len(adj[v] & block) for v in block]
        complete = all(d == n - 1 for d in degs)
        odd_cycle = n % 2 == 1 and n >= 3 and all(d == 2 for d in degs)
        if not (complete or odd_cycle):
            return False
    return True


def theorem_applies(g: ListGraph) -> bool:
    """Degree-choosability hypotheses: lists at least as large as degrees and,
    in every component, either some list strictly larger or a block that is
    neither complete nor an odd cycle."""
    if any(len(g.lists[v]) < g.degree(v) for v in g.adj):
        return False
    for comp in _components(g.adj):
        if any(len(g.lists[v]) > g.degree(v) for v in comp):
            continue
        if is_gallai_tree(g.induced(comp).adj):
            return False
    return True


def solve_exact(g: ListGraph, budget: int = -1) -> dict | None:
    """Exact L-coloring of ``g`` (no core preprocessing)."""
    verts = g.vertices
    if not verts:
        return {}
    palette = sorted({c for v in verts for c in g.lists[v]}, key=_key)
    cidx = {c: i for i, c in enumerate(palette)}
    vidx = {v: i for i, v in enumerate(verts)}
    adj = [sum(1 << vidx[u] for u in g.adj[v]) for v in verts]
    allowed = [sum(1 << cidx[c] for c in g.lists[v]) for v in verts]
    status, colors, _ = kernel.search(adj, allowed, budget)
    if status == kernel.BUDGET:
        raise TimeoutError("list-coloring search budget exhausted")
    if status != kernel.FOUND:
        return None
    return {v: palette[colors[vidx[v]]] for v in verts}


def l_color(g: ListGraph) -> dict | None:
    """A proper coloring with every color taken from the vertex's list, or
    ``None`` when none exists.  Free vertices are peeled off first and
    colored greedily in reverse removal order."""
    c, removed = core_order(g)
    coloring = solve_exact(c)
    if coloring is None:
        return None
    for v in reversed(removed):
        taken = {coloring[u] for u in g.adj[v] if u in coloring}
        choice = sorted(g.lists[v] - taken, key=_key)
        # a free vertex always keeps a color
        coloring[v] = choice[0]
    return coloring


def is_proper_list_coloring(g: ListGraph, coloring: Mapping) -> bool:
    if set(coloring) != set(g.adj):
        return False
    for v, c in coloring.items():
        if c not in g.lists[v]:
            return False
        if any(coloring[u] == c for u in g.adj[v]):
            return False
    return True
