"""Brute-force oracles, written independently of the package internals."""

from __future__ import annotations

import itertools

import numpy as np

from lfec.embed import PlaneGraph


def walks(G: PlaneGraph) -> list[list[int]]:
    """Facial walks as edge sequences, traced from sigma and twin alone."""
    seen: set[int] = set()
    out = []
    for d0 in sorted(G.darts()):
        if d0 in seen:
            continue
        seq, d = [], d0
        while d not in seen:
            seen.add(d)
            seq.append(G.edge_of(d))
            d = G.sigma(G.twin(d))
        out.append(seq)
    return out


def facial_distance(G: PlaneGraph, e: int, f: int) -> float:
    """Step forward along every walk from every occurrence of ``e``."""
    best = float("inf")
    for seq in walks(G):
        n = len(seq)
        for i, x in enumerate(seq):
            if x != e:
                continue
            for s in range(n):
                if seq[(i + s) % n] == f:
                    best = min(best, s, n - s)
    return best


def neighbour_pairs(G: PlaneGraph, ell: int) -> list[tuple[int, int]]:
    es = G.edges()
    return [(a, b) for a, b in itertools.combinations(es, 2) if facial_distance(G, a, b) <= ell]


def min_colors_enum(G: PlaneGraph, ell: int, kmax: int = 9, chunk: int = 1 << 20) -> int | None:
    """Least k whose k^|E| colorings contain a valid one, by exhaustive
    numpy enumeration (meant for at most ~8 edges)."""
    es = G.edges()
    m = len(es)
    if m == 0:
        return 0
    idx = {e: i for i, e in enumerate(es)}
    pairs = [(idx[a], idx[b]) for a, b in neighbour_pairs(G, ell)]
    for k in range(1, kmax + 1):
        total = k**m
        powers = k ** np.arange(m, dtype=np.int64)
        for start in range(0, total, chunk):
            codes = np.arange(start, min(total, start + chunk), dtype=np.int64)
            cols = (codes[:, None] // powers[None, :]) % k
            ok = np.ones(len(codes), dtype=bool)
            for a, b in pairs:
                ok &= cols[:, a] != cols[:, b]
            if ok.any():
                return k
    return None


def list_colorable(adj: dict, lists: dict) -> bool:
    """Exhaustive search over list assignments, vertices in sorted order."""
    vs = sorted(adj)
    col: dict = {}

    def go(i: int) -> bool:
        if i == len(vs):
            return True
        v = vs[i]
        for c in sorted(lists[v]):
            if all(col.get(u) != c for u in adj[v]):
                col[v] = c
                if go(i + 1):
                    return True
                del col[v]
        return False

    return go(0)


def min_colors_backtrack(G: PlaneGraph, ell: int, kmax: int = 12) -> int | None:
    """Least k by plain backtracking in edge-id order, first edge fixed to
    color 0; independent of the package's search kernel."""
    es = G.edges()
    if not es:
        return 0
    nb = {e: set() for e in es}
    for a, b in neighbour_pairs(G, ell):
        nb[a].add(b)
        nb[b].add(a)
    for k in range(1, kmax + 1):
        col: dict[int, int] = {}

        def go(i: int, top: int) -> bool:
            if i == len(es):
                return True
            e = es[i]
            # colors above top+1 are symmetric to top+1
            for c in range(min(k, top + 2)):
                if all(col.get(f) != c for f in nb[e]):
                    col[e] = c
                    if go(i + 1, max(top, c)):
                        return True
                    del col[e]
            return False

        if go(0, -1):
            return k
    return None
