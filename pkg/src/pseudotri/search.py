"""Backtracking kernel front end: problem setup and backend selection.

The compiled backend (``_search``) handles problems with at most 64
candidate edges; anything larger, or any run with ``PSEUDOTRI_PURE=1`` in
the environment, uses the pure-Python backend with identical logic.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from .geom import PointSet, orient, segments_cross
from . import _search_py

try:
    if os.environ.get("PSEUDOTRI_PURE", "") not in ("", "0"):
        raise ImportError("pure backend forced")
    from . import _search as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

COMPILED_MAX_CANDIDATES = 64


class BudgetExceeded(RuntimeError):
    """The node budget ran out; ``partial`` holds results found so far."""

    def __init__(self, nodes: int, partial: list):
        super().__init__(f"search budget exhausted after {nodes} nodes "
                         f"({len(partial)} results so far)")
        self.nodes = nodes
        self.partial = partial


@dataclass(frozen=True)
class SearchProblem:
    n: int
    hull_edges: tuple[tuple[int, int], ...]
    cand: tuple[tuple[int, int], ...]
    conflict: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    base_adj: tuple[int, ...]
    settle_at: tuple[tuple[int, ...], ...]
    complete_at: tuple[tuple[int, ...], ...]
    suffix: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.cand)

    def edges_of(self, inc: int) -> list[tuple[int, int]]:
        out = list(self.hull_edges)
        out += [self.cand[c] for c in range(len(self.cand)) if inc >> c & 1]
        return sorted(out)


def build_problem(ps: PointSet) -> SearchProblem:
    n = ps.n
    pts = ps.points
    hull = set(ps.hull_edges())
    rank = {v: r for r, v in enumerate(sorted(range(n), key=lambda i: pts[i]))}
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in hull]
    pairs.sort(key=lambda e: sorted((rank[e[0]], rank[e[1]])))
    K = len(pairs)
    conflict = []
    for i, (a, b) in enumerate(pairs):
        m = 0
        for j, (c, d) in enumerate(pairs):
            if i != j and segments_cross(pts[a], pts[b], pts[c], pts[d]):
                m |= 1 << j
        conflict.append(m)
    left = tuple(
        tuple(sum(1 << w for w in range(n) if orient(pts[v], pts[u], pts[w]) > 0)
              for u in range(n))
        for v in range(n))
    base_adj = [0] * n
    for a, b in hull:
        base_adj[a] |= 1 << b
        base_adj[b] |= 1 << a
    last = [-1] * n
    for i, (a, b) in enumerate(pairs):
        last[a] = max(last[a], i)
        last[b] = max(last[b], i)
    settle_at: list[list[int]] = [[] for _ in range(K + 1)]
    for i, (a, b) in enumerate(pairs):
        s = max(last[a], last[b], conflict[i].bit_length() - 1)
        settle_at[s + 1].append(i)
    complete_at: list[list[int]] = [[] for _ in range(K + 1)]
    for v in ps.interior:
        complete_at[last[v] + 1].append(v)
    full = (1 << K) - 1
    suffix = tuple(full & ~((1 << k) - 1) for k in range(K + 1))
    return SearchProblem(
        n=n,
        hull_edges=tuple(sorted(hull)),
        cand=tuple(pairs),
        conflict=tuple(conflict),
        left=left,
        base_adj=tuple(base_adj),
        settle_at=tuple(tuple(s) for s in settle_at),
        complete_at=tuple(tuple(c) for c in complete_at),
        suffix=suffix,
    )


def backend_name(problem: SearchProblem | None = None) -> str:
    if _compiled is None:
        return "python"
    if problem is not None and problem.k > COMPILED_MAX_CANDIDATES:
        return "python"
    return "cython"


def run(problem: SearchProblem, pointed_only: bool = False, prefix: tuple = (),
        budget: int | None = None, backend: str | None = None) -> list[tuple[int, int]]:
    """All ``(candidate_mask, pointed_vertex_mask)`` leaves, in depth-first order.

    ``prefix`` forces the include (1) / exclude (0) decision for the first
    candidates, which is how the tree is split between workers.
    """
    name = backend or backend_name(problem)
    if name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled backend not available")
        if problem.k > COMPILED_MAX_CANDIDATES:
            raise ValueError(f"{problem.k} candidates exceed the compiled limit")
        impl = _compiled
    else:
        impl = _search_py
    out, nodes, done = impl.run(problem, bool(pointed_only), tuple(prefix), int(budget or 0))
    if not done:
        raise BudgetExceeded(nodes, out)
    return out


def split_prefixes(problem: SearchProblem, depth: int) -> list[tuple[int, ...]]:
    """Decision prefixes of length ``depth`` in the order the DFS visits them."""
    depth = min(depth, problem.k)
    out: list[tuple[int, ...]] = [()]
    for k in range(depth):
        nxt = []
        for pre in out:
            inc = sum(1 << i for i, d in enumerate(pre) if d)
            blocked = 0
            for i in range(k):
                if inc >> i & 1:
                    blocked |= problem.conflict[i]
            if not blocked >> k & 1:
                nxt.append(pre + (1,))
            nxt.append(pre + (0,))
        out = nxt
    return out
