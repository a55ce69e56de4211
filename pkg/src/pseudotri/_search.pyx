# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel; same search as ``_search_py`` on 64-bit masks."""

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXK = 64
    MAXN = 64


cdef struct Ctx:
    int n
    int K
    int ca[MAXK]
    int cb[MAXK]
    u64 conflict[MAXK]
    u64 left[MAXN][MAXN]
    u64 adj[MAXN]
    u64 suffix[MAXK + 1]
    int target
    long long nodes
    long long budget
    int npre
    int prefix[MAXK]
    int pointed_only
    # flattened per-level lists
    int settle_start[MAXK + 2]
    int settle_items[MAXK]
    int complete_start[MAXK + 2]
    int complete_items[MAXN]


cdef inline bint _pointed(Ctx* c, int v, u64 nb) nogil:
    cdef u64 m = nb
    cdef u64 low
    cdef int u
    if nb == 0:
        return True
    while m:
        low = m & (~m + 1)
        u = __builtin_ctzll(m)
        if (nb & ~c.left[v][u] & ~low) == 0:
            return True
        m ^= low
    return False


cdef bint _connected(Ctx* c) nogil:
    cdef u64 seen = 1, frontier = 1, nxt, m, low
    cdef u64 full = (<u64>1 << c.n) - 1 if c.n < 64 else <u64>0xFFFFFFFFFFFFFFFF
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & (~m + 1)
            nxt |= c.adj[__builtin_ctzll(m)]
            m ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


cdef int _rec(Ctx* c, list out, int k, u64 inc, u64 blocked, int edges, int x,
              u64 npmask, u64 full_vertices) except -1:
    cdef int i, v, cc, a, b, nx, forced
    cdef u64 oa, ob, nmask
    cdef bint killed
    c.nodes += 1
    if c.budget and c.nodes > c.budget:
        return 1
    for i in range(c.complete_start[k], c.complete_start[k + 1]):
        v = c.complete_items[i]
        if __builtin_popcountll(c.adj[v]) < 2:
            return 0
    for i in range(c.settle_start[k], c.settle_start[k + 1]):
        cc = c.settle_items[i]
        if (inc >> cc) & 1 or (blocked >> cc) & 1:
            continue
        a = c.ca[cc]
        b = c.cb[cc]
        killed = ((not (npmask >> a) & 1) and not _pointed(c, a, c.adj[a] | (<u64>1 << b))) or \
                 ((not (npmask >> b) & 1) and not _pointed(c, b, c.adj[b] | (<u64>1 << a)))
        if not killed:
            return 0
    if edges + __builtin_popcountll(c.suffix[k] & ~blocked) < c.target + x:
        return 0
    if k == c.K:
        if edges == c.target + x and _connected(c):
            out.append((inc, full_vertices & ~npmask))
        return 0
    forced = c.prefix[k] if k < c.npre else -1
    if forced != 0 and not (blocked >> k) & 1:
        a = c.ca[k]
        b = c.cb[k]
        oa = c.adj[a]
        ob = c.adj[b]
        c.adj[a] = oa | (<u64>1 << b)
        c.adj[b] = ob | (<u64>1 << a)
        nx = x
        nmask = npmask
        if not (npmask >> a) & 1 and not _pointed(c, a, c.adj[a]):
            nx += 1
            nmask |= <u64>1 << a
        if not (npmask >> b) & 1 and not _pointed(c, b, c.adj[b]):
            nx += 1
            nmask |= <u64>1 << b
        if not c.pointed_only or nx == x:
            if _rec(c, out, k + 1, inc | (<u64>1 << k), blocked | c.conflict[k],
                    edges + 1, nx, nmask, full_vertices):
                c.adj[a] = oa
                c.adj[b] = ob
                return 1
        c.adj[a] = oa
        c.adj[b] = ob
    if forced != 1:
        return _rec(c, out, k + 1, inc, blocked, edges, x, npmask, full_vertices)
    return 0


def run(p, bint pointed_only, tuple prefix, long long budget):
    cdef Ctx c
    cdef int i, j, pos
    cdef int n = p.n
    cdef int K = len(p.cand)
    if K > MAXK or n > MAXN:
        raise ValueError("problem too large for the compiled kernel")
    c.n = n
    c.K = K
    c.target = 2 * n - 3
    c.nodes = 0
    c.budget = budget
    c.pointed_only = pointed_only
    c.npre = len(prefix)
    for i in range(c.npre):
        c.prefix[i] = prefix[i]
    for i in range(K):
        c.ca[i] = p.cand[i][0]
        c.cb[i] = p.cand[i][1]
        c.conflict[i] = p.conflict[i]
    for i in range(K + 1):
        c.suffix[i] = p.suffix[i]
    for i in range(n):
        c.adj[i] = p.base_adj[i]
        for j in range(n):
            c.left[i][j] = p.left[i][j]
    pos = 0
    for i in range(K + 1):
        c.settle_start[i] = pos
        for j in p.settle_at[i]:
            c.settle_items[pos] = j
            pos += 1
    c.settle_start[K + 1] = pos
    pos = 0
    for i in range(K + 1):
        c.complete_start[i] = pos
        for j in p.complete_at[i]:
            c.complete_items[pos] = j
            pos += 1
    c.complete_start[K + 1] = pos
    cdef u64 full_vertices = (<u64>1 << n) - 1 if n < 64 else <u64>0xFFFFFFFFFFFFFFFF
    out = []
    status = _rec(&c, out, 0, 0, 0, len(p.hull_edges), 0, 0, full_vertices)
    return out, c.nodes, status == 0
