"""Exact l-facial chromatic index by branch and bound on the facial
adjacency graph of all edges."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import kernel
from .embed import PlaneGraph
from .facial import Coloring


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass
class SolveReport:
    chi: int | None
    witness: Coloring | None
    nodes_explored: int
    elapsed: float
    status: str = "optimal"  # optimal | above_kmax | unknown
    lower_bound: int = 0
    clique: tuple[int, ...] = field(default=())


def _adjacency(G: PlaneGraph, ell: int) -> tuple[list[int], list[int]]:
    edges = G.edges()
    idx = {e: i for i, e in enumerate(edges)}
    nbrs = G._facial_neighbors(ell)
    return edges, [sum(1 << idx[f] for f in nbrs[e]) for e in edges]


def greedy_clique(adj: list[int]) -> list[int]:
    """Largest clique found by greedy extension from every seed vertex,
    highest degree first."""
    n = len(adj)
    deg = [bin(a).count("1") for a in adj]
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    best: list[int] = []
    for seed in order:
        clique = [seed]
        common = adj[seed]
        for v in order:
            if common >> v & 1:
                clique.append(v)
                common &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _search_k(adj: list[int], k: int, clique: list[int], budget: int, backend: str | None):
    full = (1 << k) - 1
    allowed = [full] * len(adj)
    for i, v in enumerate(clique):
        allowed[v] = 1 << i
    return kernel.search(adj, allowed, budget, backend)


def is_k_colorable(
    G: PlaneGraph,
    ell: int,
    k: int,
    *,
    symmetry: bool = True,
    budget: int = -1,
    backend: str | None = None,
) -> Coloring | None:
    """An ``ell``-facial edge coloring with at most ``k`` colors or ``None``
    if none exists.  Raises :class:`SearchBudgetExceeded` on budget."""
    edges, adj = _adjacency(G, ell)
    if not edges:
        return Coloring({}, max(k, 0))
    if k < 1:
        return None
    clique = greedy_clique(adj) if symmetry else []
    if len(clique) > k:
        return None
    status, colors, _ = _search_k(adj, k, clique, budget, backend)
    if status == kernel.BUDGET:
        raise SearchBudgetExceeded(f"node budget {budget} exhausted at k={k}")
    if status != kernel.FOUND:
        return None
    return Coloring({e: colors[i] + 1 for i, e in enumerate(edges)}, k)


def _probe(args):
    adj, k, clique, budget, backend = args
    return k, _search_k(adj, k, clique, budget, backend)


def min_colors(
    G: PlaneGraph,
    ell: int = 2,
    kmax: int | None = None,
    *,
    symmetry: bool = True,
    budget: int = -1,
    jobs: int = 1,
    backend: str | None = None,
) -> SolveReport:
    """Least ``k <= kmax`` admitting an ``ell``-facial edge coloring.

    ``kmax`` defaults to ``3 ell + 3``.  With ``jobs > 1`` the candidate
    values of ``k`` are probed in parallel processes and the least feasible
    one is kept, so ``chi`` does not depend on scheduling.
    """
    t0 = time.perf_counter()
    if kmax is None:
        kmax = 3 * ell + 3
    edges, adj = _adjacency(G, ell)
    if not edges:
        return SolveReport(0, Coloring({}, 0), 0, time.perf_counter() - t0)
    clique = greedy_clique(adj) if symmetry else []
    lower = max(len(clique), 1)
    nodes = 0
    ks = list(range(lower, kmax + 1))
    results: dict[int, tuple[int, list[int], int]] = {}
    if jobs > 1 and len(ks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for k, res in pool.map(_probe, [(adj, k, clique, budget, backend) for k in ks]):
                results[k] = res
    chi = None
    witness = None
    unknown = False
    for k in ks:
        res = results.get(k) or _search_k(adj, k, clique, budget, backend)
        status, colors, n = res
        nodes += n
        if status == kernel.BUDGET:
            unknown = True
            break
        if status == kernel.FOUND:
            chi = k
            witness = Coloring({e: colors[i] + 1 for i, e in enumerate(edges)}, k)
            break
    elapsed = time.perf_counter() - t0
    if unknown:
        return SolveReport(None, None, nodes, elapsed, "unknown", lower, tuple(edges[v] for v in clique))
    if chi is None:
        return SolveReport(None, None, nodes, elapsed, "above_kmax", lower, tuple(edges[v] for v in clique))
    return SolveReport(chi, witness, nodes, elapsed, "optimal", lower, tuple(edges[v] for v in clique))
