"""Pure-Python search kernels.

Mirror of the compiled kernels in ``_kernel_c.pyx``; both must implement the
exact same branching and propagation order so that the two backends return
byte-identical results.  Vertices are compact indices 0..n-1 (ascending-id
order is established by the caller).

Propagation rules, applied to a fixpoint after every assignment:
  - a Zero vertex whose Zero-neighbor count equals d1 forces its unassigned
    neighbors to K (for d1 = 0 this is plain independence),
  - a K vertex whose K-neighbor count equals d2 forces its unassigned
    neighbors to Zero,
  - a vertex whose same-color neighbor count exceeds its budget is a
    conflict and triggers backtracking.
"""

from __future__ import annotations

import time

STATUS_DONE = 0
STATUS_TIMEOUT = 2

_CHECK_EVERY = 4096


def search(n, indptr, indices, d1, d2, precolor, limit, deadline):
    """Enumerate valid total colorings extending ``precolor``.

    Branches on the lowest unassigned vertex, Zero before K, so solutions
    come out in lexicographic order.  Stops after ``limit`` solutions.
    Returns ``(status, masks)`` where each mask has bit v set iff vertex v
    is colored K.
    """
    color = [-1] * n
    zc = [0] * n
    kc = [0] * n
    # counted[v] is set once v's increments have been applied to its
    # neighbors; undo only reverses counted vertices
    counted = [False] * n
    trail = []
    pending = []
    qhead = 0
    nodes = 0

    def enqueue(v, c):
        if color[v] >= 0:
            return color[v] == c
        color[v] = c
        trail.append(v)
        pending.append(v)
        return True

    def propagate():
        nonlocal qhead
        while qhead < len(pending):
            w = pending[qhead]
            qhead += 1
            c = color[w]
            cnt = zc if c == 0 else kc
            budget = d1 if c == 0 else d2
            for i in range(indptr[w], indptr[w + 1]):
                cnt[indices[i]] += 1
            counted[w] = True
            if cnt[w] > budget:
                return False
            for i in range(indptr[w], indptr[w + 1]):
                u = indices[i]
                if color[u] == c and cnt[u] > budget:
                    return False
            if cnt[w] == budget:
                for i in range(indptr[w], indptr[w + 1]):
                    u = indices[i]
                    if color[u] < 0 and not enqueue(u, 1 - c):
                        return False
            for i in range(indptr[w], indptr[w + 1]):
                u = indices[i]
                if color[u] == c and cnt[u] == budget:
                    for j in range(indptr[u], indptr[u + 1]):
                        x = indices[j]
                        if color[x] < 0 and not enqueue(x, 1 - c):
                            return False
        del pending[:]
        qhead = 0
        return True

    def undo_to(mark):
        nonlocal qhead
        del pending[:]
        qhead = 0
        while len(trail) > mark:
            v = trail.pop()
            if counted[v]:
                cnt = zc if color[v] == 0 else kc
                for i in range(indptr[v], indptr[v + 1]):
                    cnt[indices[i]] -= 1
                counted[v] = False
            color[v] = -1

    masks = []

    def record():
        m = 0
        for v in range(n):
            if color[v] == 1:
                m |= 1 << v
        masks.append(m)

    def dfs(lo):
        nonlocal nodes
        nodes += 1
        if nodes % _CHECK_EVERY == 0 and deadline is not None:
            if time.monotonic() > deadline:
                return STATUS_TIMEOUT
        v = lo
        while v < n and color[v] >= 0:
            v += 1
        if v == n:
            record()
            return 1 if len(masks) >= limit else 0
        for c in (0, 1):
            mark = len(trail)
            if enqueue(v, c) and propagate():
                r = dfs(v + 1)
                if r:
                    return r
            undo_to(mark)
        return 0

    ok = True
    for v in range(n):
        if precolor[v] >= 0 and not enqueue(v, precolor[v]):
            ok = False
            break
    if ok and propagate():
        r = dfs(0)
        if r == STATUS_TIMEOUT:
            return STATUS_TIMEOUT, masks
    return STATUS_DONE, masks


def brute(n, indptr, indices, d1, d2, precolor):
    """Exhaustive scan over all total assignments extending ``precolor``.

    Returns ``(found, mask)`` with the lexicographically first valid
    coloring (ascending vertex order, Zero before K).
    """
    free = [v for v in range(n) if precolor[v] < 0]
    adj = [0] * n
    for v in range(n):
        m = 0
        for i in range(indptr[v], indptr[v + 1]):
            m |= 1 << indices[i]
        adj[v] = m
    base_k = 0
    for v in range(n):
        if precolor[v] == 1:
            base_k |= 1 << v
    f = len(free)
    full = (1 << n) - 1
    for it in range(1 << f):
        kmask = base_k
        for j in range(f):
            # free[0] is the most significant bit: counting up in ``it``
            # walks assignments in lexicographic order
            if (it >> (f - 1 - j)) & 1:
                kmask |= 1 << free[j]
        zmask = full & ~kmask
        ok = True
        for v in range(n):
            if (kmask >> v) & 1:
                if bin(adj[v] & kmask).count("1") > d2:
                    ok = False
                    break
            elif bin(adj[v] & zmask).count("1") > d1:
                ok = False
                break
        if ok:
            return True, kmask
    return False, 0
