"""Compiled kernel against the pure-Python kernel on exact 2-facial
colorability queries.

    python benchmarks/bench_kernel.py [--repeat N]

Each row decides k-colorability at k = chi - 1 (infeasible, full search)
and k = chi (feasible) and reports the best of N timings per backend.
Graphs in ``data/`` are read as well.
"""

from __future__ import annotations

import argparse
import pathlib
import time

from lfec import exact, genio, kernel
from lfec.exact import _adjacency, _search_k, greedy_clique

CASES = [
    ("dodecahedron", genio.dodecahedron()),
    ("prism(7)", genio.prism(7)),
    ("tight_family(2)", genio.tight_family(2)),
    ("subdivided_k4(3)", genio.subdivided_k4(3)),
    ("random_planar(14)", genio.random_planar(14, 3)),
    ("random_multigraph(12)", genio.random_multigraph(12, 5, edges=20)),
]
# random corpus graphs whose chi exceeds the clique bound and needs a deep search
DATA = pathlib.Path(__file__).with_name("data")
CASES += [(p.stem, genio.read_pg(p)) for p in sorted(DATA.glob("*.pg"))]


def timed(adj, k, clique, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        status, _, nodes = _search_k(adj, k, clique, -1, backend)
        best = min(best, time.perf_counter() - t)
    return status, nodes, best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernel.BACKEND != "cython":
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'graph':24} {'|E|':>4} {'k':>3} {'status':>10} {'nodes':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, G in CASES:
        chi = exact.min_colors(G, 2).chi
        _, adj = _adjacency(G, 2)
        clique = greedy_clique(adj)
        # below the clique size the pinned colors leave the palette
        for k in sorted({max(chi - 1, len(clique)), chi}):
            st_py, nodes, t_py = timed(adj, k, clique, "python", args.repeat)
            if kernel.BACKEND == "cython":
                st_cy, nodes_cy, t_cy = timed(adj, k, clique, "cython", args.repeat)
                assert (st_cy, nodes_cy) == (st_py, nodes), name
                cy, sp = f"{t_cy:10.5f}", f"{t_py / t_cy:8.1f}"
            else:
                cy, sp = f"{'-':>10}", f"{'-':>8}"
            status = {kernel.FOUND: "found", kernel.INFEASIBLE: "none"}[st_py]
            print(f"{name:24} {G.n_edges:4d} {k:3d} {status:>10} {nodes:8d} {t_py:10.5f} {cy} {sp}")


if __name__ == "__main__":
    main()
