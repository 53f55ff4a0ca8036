# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled list-coloring search; same branching order as ``_kernel_py``.

Limited to 64 vertices and 64 colors (one machine word per mask).
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

MAX_VERTICES = 64
MAX_COLORS = 64

cdef struct State:
    int n
    uint64_t* adj
    uint64_t* allowed
    int* color
    long long nodes
    long long budget


cdef int _rec(State* s, int remaining) nogil:
    cdef int v, u, c, cnt, deg, best, best_cnt, best_deg, r
    cdef uint64_t used, avail, m, best_avail
    if remaining == 0:
        return 1
    s.nodes += 1
    if s.budget >= 0 and s.nodes > s.budget:
        return -1
    best = -1
    best_avail = 0
    best_cnt = 1 << 30
    best_deg = -1
    for v in range(s.n):
        if s.color[v] >= 0:
            continue
        used = 0
        deg = 0
        m = s.adj[v]
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            if s.color[u] >= 0:
                used |= (<uint64_t>1) << s.color[u]
            else:
                deg += 1
        avail = s.allowed[v] & ~used
        cnt = __builtin_popcountll(avail)
        if cnt == 0:
            return 0
        if cnt < best_cnt or (cnt == best_cnt and deg > best_deg):
            best = v
            best_avail = avail
            best_cnt = cnt
            best_deg = deg
    m = best_avail
    while m:
        c = __builtin_ctzll(m)
        m &= m - 1
        s.color[best] = c
        r = _rec(s, remaining - 1)
        if r != 0:
            return r
    s.color[best] = -1
    return 0


def search(adj, allowed, long long budget=-1):
    cdef int n = len(adj)
    cdef int i, status
    cdef State s
    if n > MAX_VERTICES:
        raise ValueError("compiled kernel handles at most 64 vertices")
    s.n = n
    s.nodes = 0
    s.budget = budget
    s.adj = <uint64_t*>malloc(max(n, 1) * sizeof(uint64_t))
    s.allowed = <uint64_t*>malloc(max(n, 1) * sizeof(uint64_t))
    s.color = <int*>malloc(max(n, 1) * sizeof(int))
    try:
        for i in range(n):
            if allowed[i] >> MAX_COLORS:
                raise ValueError("compiled kernel handles at most 64 colors")
            s.adj[i] = <uint64_t>adj[i]
            s.allowed[i] = <uint64_t>allowed[i]
            s.color[i] = -1
        with nogil:
            status = _rec(&s, n)
        if status == 1:
            colors = [s.color[i] for i in range(n)]
        else:
            colors = [-1] * n
        return status, colors, s.nodes
    finally:
        free(s.adj)
        free(s.allowed)
        free(s.color)
