"""Shared graph corpus for the test suite."""

from __future__ import annotations

import random
from functools import lru_cache

from lfec import genio
from lfec.embed import PlaneGraph


def subdivide(G: PlaneGraph, rng: random.Random, p: float) -> PlaneGraph:
    """Subdivide each edge once with probability ``p`` (dart level, so loops
    and parallel edges are fine)."""
    rot = {v: list(G.rotation(v)) for v in G.vertices()}
    table = dict(G.edge_table())
    nd = max(G.darts()) + 1
    ne = max(table) + 1
    nv = max(rot) + 1
    for e in list(table):
        if rng.random() < p:
            a, b = table[e]
            table[e] = (a, nd)
            table[ne] = (nd + 1, b)
            rot[nv] = [nd, nd + 1]
            nd, ne, nv = nd + 2, ne + 1, nv + 1
    return PlaneGraph(rot, table)


def dual(G: PlaneGraph) -> PlaneGraph:
    return PlaneGraph({w.face: list(w.darts) for w in G.faces}, G.edge_table())


def named() -> dict[str, PlaneGraph]:
    out = {f"cycle{n}": genio.cycle(n) for n in range(3, 9)}
    out.update({f"wheel{n}": genio.wheel(n) for n in range(3, 9)})
    out.update({f"prism{n}": genio.prism(n) for n in range(3, 8)})
    out.update(cube=genio.cube(), dodecahedron=genio.dodecahedron(), octahedron=genio.octahedron())
    out.update({f"tight{l}": genio.tight_family(l) for l in range(1, 5)})
    out.update({f"subk4_{l}": genio.subdivided_k4(l) for l in range(1, 5)})
    return out


def random_graph(seed: int, max_edges: int) -> PlaneGraph:
    """Connected plane multigraph with at most ``max_edges`` edges drawn from
    three shapes: sparse simple, multigraph, subdivided cubic dual."""
    rng = random.Random(seed)
    while True:
        shape = rng.randrange(3)
        if shape == 0:
            n = rng.randint(3, max(3, min(30, max_edges)))
            hi = min(3 * n - 6 if n > 2 else n, max_edges)
            if hi < n - 1:
                continue
            G = genio.random_planar(n, rng.randrange(10**6), edges=rng.randint(n - 1, hi))
        elif shape == 1:
            n = rng.randint(3, max(3, min(20, max_edges // 2)))
            hi = min(3 * n - 6 if n > 2 else n, max_edges)
            if hi < n - 1:
                continue
            G = genio.random_multigraph(n, rng.randrange(10**6), edges=rng.randint(n - 1, hi), extra=rng.randint(0, 4))
        else:
            n = rng.randint(4, max(4, min(14, max_edges // 3 + 2)))
            G = dual(genio.random_planar(n, rng.randrange(10**6), edges=3 * n - 6))
            G = subdivide(G, rng, rng.uniform(0, 0.5))
        if 0 < G.n_edges <= max_edges and G.is_connected():
            return G


@lru_cache(maxsize=None)
def random_corpus(count: int, max_edges: int, base_seed: int = 0) -> tuple[PlaneGraph, ...]:
    return tuple(random_graph(base_seed * 100003 + s, max_edges) for s in range(count))


def small_corpus(max_edges: int, count: int = 60) -> list[PlaneGraph]:
    gs = [g for g in named().values() if g.n_edges <= max_edges]
    return gs + list(random_corpus(count, max_edges, 7))
