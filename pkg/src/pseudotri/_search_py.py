"""Pure-Python backtracking kernel; mirrors ``_search.pyx`` line for line."""
from __future__ import annotations


class _OutOfBudget(Exception):
    pass


def _pointed(v: int, nb: int, left) -> bool:
    if nb == 0:
        return True
    lv = left[v]
    m = nb
    while m:
        low = m & -m
        u = low.bit_length() - 1
        if nb & ~lv[u] & ~low == 0:
            return True
        m ^= low
    return False


def _connected(n: int, adj: list[int]) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def run(p, pointed_only: bool, prefix: tuple, budget: int):
    n = p.n
    K = len(p.cand)
    cand = p.cand
    conflict = p.conflict
    left = p.left
    settle_at = p.settle_at
    complete_at = p.complete_at
    suffix = p.suffix
    target = 2 * n - 3
    full_vertices = (1 << n) - 1
    adj = list(p.base_adj)
    out: list[tuple[int, int]] = []
    nodes = 0
    npre = len(prefix)

    def rec(k: int, inc: int, blocked: int, edges: int, x: int, npmask: int) -> None:
        nonlocal nodes
        nodes += 1
        if budget and nodes > budget:
            raise _OutOfBudget
        for v in complete_at[k]:
            if adj[v].bit_count() < 2:
                return
        for c in settle_at[k]:
            if (inc >> c) & 1 or (blocked >> c) & 1:
                continue
            a, b = cand[c]
            killed = ((not npmask >> a & 1) and not _pointed(a, adj[a] | 1 << b, left)) or \
                     ((not npmask >> b & 1) and not _pointed(b, adj[b] | 1 << a, left))
            if not killed:
                return
        if edges + (suffix[k] & ~blocked).bit_count() < target + x:
            return
        if k == K:
            if edges == target + x and _connected(n, adj):
                out.append((inc, full_vertices & ~npmask))
            return
        forced = prefix[k] if k < npre else -1
        if forced != 0 and not (blocked >> k) & 1:
            a, b = cand[k]
            oa, ob = adj[a], adj[b]
            adj[a] = oa | 1 << b
            adj[b] = ob | 1 << a
            nx, nmask = x, npmask
            if not npmask >> a & 1 and not _pointed(a, adj[a], left):
                nx += 1
                nmask |= 1 << a
            if not npmask >> b & 1 and not _pointed(b, adj[b], left):
                nx += 1
                nmask |= 1 << b
            if not pointed_only or nx == x:
                rec(k + 1, inc | 1 << k, blocked | conflict[k], edges + 1, nx, nmask)
            adj[a], adj[b] = oa, ob
        if forced != 1:
            rec(k + 1, inc, blocked, edges, x, npmask)

    try:
        rec(0, 0, 0, len(p.hull_edges), 0, 0)
    except _OutOfBudget:
        return out, nodes, False
    return out, nodes, True
