# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Twin of ``_kernel_py``: identical branching and propagation order, so both
backends return byte-identical results.  See the pure module for the rule
documentation.
"""

import time

from cpython cimport array
import array

STATUS_DONE = 0
STATUS_TIMEOUT = 2

DEF CHECK_EVERY = 4096


cdef class _Searcher:
    cdef int n, d1, d2, qhead, ntrail
    cdef long long limit, nodes
    cdef double deadline
    cdef bint has_deadline
    cdef int[::1] indptr, indices
    cdef int[::1] color, zc, kc, counted, trail, pending
    cdef list masks

    def __init__(self, int n, indptr, indices, int d1, int d2, limit, deadline):
        self.n = n
        self.d1 = d1
        self.d2 = d2
        self.limit = limit
        self.has_deadline = deadline is not None
        self.deadline = deadline if deadline is not None else 0.0
        self.indptr = array.array('i', indptr)
        self.indices = array.array('i', list(indices) + [0])  # never empty
        self.color = array.array('i', [-1] * n)
        self.zc = array.array('i', [0] * n)
        self.kc = array.array('i', [0] * n)
        self.counted = array.array('i', [0] * n)
        self.trail = array.array('i', [0] * (n + 1))
        self.pending = array.array('i', [0] * (n + 1))
        self.ntrail = 0
        self.qhead = 0
        self.nodes = 0
        self.masks = []

    cdef bint enqueue(self, int v, int c):
        if self.color[v] >= 0:
            return self.color[v] == c
        self.color[v] = c
        self.trail[self.ntrail] = v
        self.ntrail += 1
        self.pending[self.qhead] = v  # see note: pending shares stack layout
        self.qhead += 1
        return True

    # The pending queue is stored as the slice pending[qtail:qhead]; qtail is
    # tracked per propagate call.
    cdef bint propagate(self):
        cdef int qtail = 0
        cdef int w, c, budget, i, j, u, x
        cdef int[::1] cnt
        while qtail < self.qhead:
            w = self.pending[qtail]
            qtail += 1
            c = self.color[w]
            cnt = self.zc if c == 0 else self.kc
            budget = self.d1 if c == 0 else self.d2
            for i in range(self.indptr[w], self.indptr[w + 1]):
                cnt[self.indices[i]] += 1
            self.counted[w] = 1
            if cnt[w] > budget:
                return False
            for i in range(self.indptr[w], self.indptr[w + 1]):
                u = self.indices[i]
                if self.color[u] == c and cnt[u] > budget:
                    return False
            if cnt[w] == budget:
                for i in range(self.indptr[w], self.indptr[w + 1]):
                    u = self.indices[i]
                    if self.color[u] < 0 and not self.enqueue(u, 1 - c):
                        return False
            for i in range(self.indptr[w], self.indptr[w + 1]):
                u = self.indices[i]
                if self.color[u] == c and cnt[u] == budget:
                    for j in range(self.indptr[u], self.indptr[u + 1]):
                        x = self.indices[j]
                        if self.color[x] < 0 and not self.enqueue(x, 1 - c):
                            return False
        self.qhead = 0
        return True

    cdef void undo_to(self, int mark):
        cdef int v, i
        cdef int[::1] cnt
        self.qhead = 0
        while self.ntrail > mark:
            self.ntrail -= 1
            v = self.trail[self.ntrail]
            if self.counted[v]:
                cnt = self.zc if self.color[v] == 0 else self.kc
                for i in range(self.indptr[v], self.indptr[v + 1]):
                    cnt[self.indices[i]] -= 1
                self.counted[v] = 0
            self.color[v] = -1

    cdef void record(self):
        # masks can exceed 64 bits, so build a Python int explicitly
        cdef int v
        cdef object m = 0
        for v in range(self.n):
            if self.color[v] == 1:
                m |= (<object> 1) << v
        self.masks.append(m)

    cdef int dfs(self, int lo):
        cdef int v, c, mark, r
        self.nodes += 1
        if self.has_deadline and self.nodes % CHECK_EVERY == 0:
            if time.monotonic() > self.deadline:
                return STATUS_TIMEOUT
        v = lo
        while v < self.n and self.color[v] >= 0:
            v += 1
        if v == self.n:
            self.record()
            return 1 if len(self.masks) >= self.limit else 0
        for c in range(2):
            mark = self.ntrail
            if self.enqueue(v, c) and self.propagate():
                r = self.dfs(v + 1)
                if r:
                    return r
            self.undo_to(mark)
        return 0

    def run(self, precolor):
        cdef int v
        ok = True
        for v in range(self.n):
            if precolor[v] >= 0 and not self.enqueue(v, precolor[v]):
                ok = False
                break
        if ok and self.propagate():
            if self.dfs(0) == STATUS_TIMEOUT:
                return STATUS_TIMEOUT, self.masks
        return STATUS_DONE, self.masks


# The pending "queue" above grows only while enqueueing and is consumed from
# qtail; since every enqueued vertex also goes on the trail, its size is
# bounded by n and the shared counter layout is safe.


def search(n, indptr, indices, d1, d2, precolor, limit, deadline):
    if n == 0:
        return STATUS_DONE, [0]
    s = _Searcher(n, indptr, indices, d1, d2, limit, deadline)
    return s.run(precolor)


def brute(n, indptr, indices, d1, d2, precolor):
    cdef int f, v, i, j, ok
    cdef unsigned long long it, kmask, zmask, full, base_k, total
    cdef unsigned long long[64] adj
    cdef int[64] free_v
    if n > 20:
        raise ValueError("brute-force kernel limited to 20 vertices")
    for v in range(n):
        adj[v] = 0
        for i in range(indptr[v], indptr[v + 1]):
            adj[v] |= 1ULL << indices[i]
    base_k = 0
    f = 0
    for v in range(n):
        if precolor[v] == 1:
            base_k |= 1ULL << v
        if precolor[v] < 0:
            free_v[f] = v
            f += 1
    full = (1ULL << n) - 1
    total = 1ULL << f
    it = 0
    while it < total:
        kmask = base_k
        for j in range(f):
            if (it >> (f - 1 - j)) & 1:
                kmask |= 1ULL << free_v[j]
        zmask = full & ~kmask
        ok = 1
        for v in range(n):
            if (kmask >> v) & 1:
                if _popcount(adj[v] & kmask) > d2:
                    ok = 0
                    break
            elif _popcount(adj[v] & zmask) > d1:
                ok = 0
                break
        if ok:
            return True, int(kmask)
        it += 1
    return False, 0


cdef inline int _popcount(unsigned long long x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c
