# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel: one fixed-k backtracking round.

Mirror of ``_kernel_py.search_round``, node for node.  Any change to the
search semantics must be made in both modules; the parity tests compare
statuses, colorings, and every counter on a shared corpus.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

STATUS_FOUND = 0
STATUS_EXHAUSTED = 1
STATUS_BUDGET = 2

ctypedef unsigned long long u64


cdef struct Ctx:
    int n
    int k
    u64 full
    u64 colored
    u64 *adj
    u64 *out
    u64 *cls          # class_masks, size k+1
    int *order
    int *color
    int *nonsink
    int n_nonsink
    long long budget  # < 0 means unlimited
    long long nodes
    int max_depth
    long long pp
    long long pd


cdef int _rec(Ctx *s, int pos, int max_used) noexcept:
    cdef int v = s.order[pos]
    cdef u64 bit = (<u64>1) << v
    cdef u64 adjm = s.adj[v]
    cdef int top = max_used + 1
    cdef int depth = pos + 1
    cdef int c, cc, new_max, st, i, u, ok
    cdef u64 out, outside
    if top > s.k:
        top = s.k
    for c in range(1, top + 1):
        if s.cls[c] & adjm:
            s.pp += 1
            continue
        if s.budget >= 0 and s.nodes >= s.budget:
            return STATUS_BUDGET
        s.nodes += 1
        s.cls[c] |= bit
        s.colored |= bit
        s.color[v] = c
        if depth > s.max_depth:
            s.max_depth = depth
        new_max = c if c > max_used else max_used
        ok = 1
        for i in range(s.n_nonsink):
            u = s.nonsink[i]
            out = s.out[u]
            if (out & ~s.colored) != 0 and new_max < s.k:
                continue
            outside = s.full ^ out
            ok = 0
            for cc in range(1, new_max + 1):
                if (s.cls[cc] & outside) == 0:
                    ok = 1
                    break
            if not ok:
                break
        if ok:
            if depth == s.n:
                s.cls[c] &= ~bit
                s.colored &= ~bit
                return STATUS_FOUND
            st = _rec(s, pos + 1, new_max)
            if st != STATUS_EXHAUSTED:
                if st == STATUS_BUDGET:
                    s.color[v] = 0
                s.cls[c] &= ~bit
                s.colored &= ~bit
                return st
        else:
            s.pd += 1
        s.cls[c] &= ~bit
        s.colored &= ~bit
        s.color[v] = 0
    return STATUS_EXHAUSTED


def search_round(int n, int k, order, adj_masks, out_masks, nonsink, long long budget):
    """Compiled twin of ``_kernel_py.search_round``; same contract."""
    cdef Ctx s
    cdef int i, status
    cdef list colors = None
    s.n = n
    s.k = k
    s.full = ((<u64>1) << n) - 1
    s.colored = 0
    s.budget = budget
    s.nodes = 0
    s.max_depth = 0
    s.pp = 0
    s.pd = 0
    s.n_nonsink = len(nonsink)
    s.adj = <u64 *>malloc(n * sizeof(u64))
    s.out = <u64 *>malloc(n * sizeof(u64))
    s.cls = <u64 *>malloc((k + 1) * sizeof(u64))
    s.order = <int *>malloc(n * sizeof(int))
    s.color = <int *>malloc(n * sizeof(int))
    s.nonsink = <int *>malloc((s.n_nonsink if s.n_nonsink else 1) * sizeof(int))
    if (s.adj == NULL or s.out == NULL or s.cls == NULL or s.order == NULL
            or s.color == NULL or s.nonsink == NULL):
        free(s.adj); free(s.out); free(s.cls)
        free(s.order); free(s.color); free(s.nonsink)
        raise MemoryError()
    try:
        for i in range(n):
            s.adj[i] = adj_masks[i]
            s.out[i] = out_masks[i]
            s.order[i] = order[i]
            s.color[i] = 0
        for i in range(s.n_nonsink):
            s.nonsink[i] = nonsink[i]
        memset(s.cls, 0, (k + 1) * sizeof(u64))
        status = _rec(&s, 0, 0)
        if status == STATUS_FOUND:
            colors = [s.color[i] for i in range(n)]
        return (status, colors, s.nodes, s.max_depth, s.pp, s.pd)
    finally:
        free(s.adj)
        free(s.out)
        free(s.cls)
        free(s.order)
        free(s.color)
        free(s.nonsink)
