"""Pure-Python list-coloring search (fallback for the compiled kernel).

Vertices are ``0..n-1``; ``adj[v]`` and ``allowed[v]`` are bitmasks over
vertices and colors.  The search is DSATUR-style: branch on the uncolored
vertex with the fewest remaining colors, ties broken by most uncolored
neighbours then lowest index; colors are tried in increasing order.  The
compiled kernel follows exactly the same order so both return the same
witness and node count.
"""

from __future__ import annotations

import sys
from typing import Sequence

FOUND = 1
INFEASIBLE = 0
BUDGET = -1


def search(adj: Sequence[int], allowed: Sequence[int], budget: int = -1) -> tuple[int, list[int], int]:
    n = len(adj)
    color = [-1] * n
    nodes = 0
    adj = list(adj)
    allowed = list(allowed)

    def rec(remaining: int) -> int:
        nonlocal nodes
        if remaining == 0:
            return FOUND
        nodes += 1
        if 0 <= budget < nodes:
            return BUDGET
        best = -1
        best_avail = 0
        best_cnt = 1 << 30
        best_deg = -1
        for v in range(n):
            if color[v] >= 0:
                continue
            used = 0
            deg = 0
            m = adj[v]
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                if color[u] >= 0:
                    used |= 1 << color[u]
                else:
                    deg += 1
            avail = allowed[v] & ~used
            cnt = bin(avail).count("1")
            if cnt == 0:
                return INFEASIBLE
            if cnt < best_cnt or (cnt == best_cnt and deg > best_deg):
                best, best_avail, best_cnt, best_deg = v, avail, cnt, deg
        m = best_avail
        while m:
            low = m & -m
            c = low.bit_length() - 1
            m ^= low
            color[best] = c
            r = rec(remaining - 1)
            if r != INFEASIBLE:
                return r
        color[best] = -1
        return INFEASIBLE

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    status = rec(n)
    if status != FOUND:
        color = [-1] * n
    return status, color, nodes
