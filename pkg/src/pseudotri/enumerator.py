"""Brute-force enumeration of pseudo-triangulations and stratified counts.

This is the oracle every formula in ``counters`` is checked against.
"""
from __future__ import annotations

import json
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .geom import PointSet
from .ptgraph import InteriorSubset, PseudoTriangulation, validate
from .search import SearchProblem, build_problem, run, split_prefixes

DEFAULT_CAP = 11


@dataclass
class CountTable:
    """Counts keyed by interior subsets; every subset of ``interior`` is present."""

    n: int
    interior: tuple[int, ...]
    counts: dict[InteriorSubset, int] = field(default_factory=dict)
    descriptor: str = ""

    @classmethod
    def empty(cls, n: int, interior: Iterable[int], descriptor: str = "") -> "CountTable":
        interior = tuple(sorted(interior))
        counts = {InteriorSubset(c): 0
                  for r in range(len(interior) + 1) for c in combinations(interior, r)}
        return cls(n, interior, counts, descriptor)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, w) -> int:
        if not isinstance(w, InteriorSubset):
            w = InteriorSubset.of(w)
        return self.counts[w]

    def keys(self) -> list[InteriorSubset]:
        return sorted(self.counts, key=lambda w: (len(w), w.members))

    def merge(self, other: "CountTable") -> "CountTable":
        if other.interior != self.interior:
            raise ValueError("tables over different interior sets")
        out = CountTable(self.n, self.interior, dict(self.counts), self.descriptor)
        for k, v in other.counts.items():
            out.counts[k] = out.counts.get(k, 0) + v
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "interior": list(self.interior),
            "counts": [{"w": list(w.members), "count": str(self.counts[w])} for w in self.keys()],
            "total": str(self.total),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @classmethod
    def from_json(cls, obj: dict) -> "CountTable":
        counts = {InteriorSubset.of(row["w"]): int(row["count"]) for row in obj["counts"]}
        tbl = cls(int(obj["n"]), tuple(obj["interior"]), counts)
        if "total" in obj and int(obj["total"]) != tbl.total:
            raise ValueError("total does not match the sum of counts")
        return tbl

    @classmethod
    def loads(cls, text: str) -> "CountTable":
        return cls.from_json(json.loads(text))


def _check_cap(ps: PointSet, cap: int | None) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if ps.n > limit:
        raise ValueError(f"{ps.n} points exceed the enumeration cap of {limit}")
    if cap is not None and cap > DEFAULT_CAP:
        warnings.warn(f"enumeration cap raised to {cap}; counts grow exponentially",
                      stacklevel=3)


def _run_chunk(args):
    problem, pointed_only, prefix = args
    return run(problem, pointed_only=pointed_only, prefix=prefix)


def leaves(ps: PointSet, pointed_only: bool = False, budget: int | None = None,
           workers: int = 1, cap: int | None = None) -> tuple[SearchProblem, list]:
    """Raw kernel output: the problem plus ``(candidate_mask, pointed_mask)`` pairs."""
    _check_cap(ps, cap)
    problem = build_problem(ps)
    if workers <= 1:
        return problem, run(problem, pointed_only=pointed_only, budget=budget)
    prefixes = split_prefixes(problem, max(1, (4 * workers).bit_length()))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_chunk, [(problem, pointed_only, q) for q in prefixes]))
    return problem, [x for part in parts for x in part]


def enumerate_pt(ps: PointSet, budget: int | None = None, pointed_only: bool = False,
                 workers: int = 1, cap: int | None = None) -> Iterator[PseudoTriangulation]:
    """Every pseudo-triangulation of ``ps`` once, in a fixed depth-first order."""
    problem, found = leaves(ps, pointed_only, budget, workers, cap)
    for inc, _ in found:
        yield validate(ps, problem.edges_of(inc))


def stratify(ps: PointSet, pointed_only: bool = False, budget: int | None = None,
             workers: int = 1, cap: int | None = None) -> CountTable:
    """Counts keyed by the set of pointed interior vertices.

    Leaves are certified by the kernel's edge-count test, which is exact for
    connected plane graphs; ``enumerate_pt`` is the fully validated path.
    """
    _, found = leaves(ps, pointed_only, budget, workers, cap)
    interior_mask = sum(1 << i for i in ps.interior)
    tbl = CountTable.empty(ps.n, ps.interior, _descriptor(ps))
    by_mask: dict[int, int] = {}
    for _, pm in found:
        key = pm & interior_mask
        by_mask[key] = by_mask.get(key, 0) + 1
    for key, c in by_mask.items():
        tbl.counts[InteriorSubset.from_mask(key)] += c
    return tbl


def stratify_by_tip(ps: PointSet, budget: int | None = None, workers: int = 1,
                    cap: int | None = None) -> CountTable:
    """Pointed pseudo-triangulations of a single chain keyed by the tip's interior neighbours."""
    p = ps.tip
    problem, found = leaves(ps, True, budget, workers, cap)
    tip_bits = [(c, a if b == p else b) for c, (a, b) in enumerate(problem.cand) if p in (a, b)]
    tbl = CountTable.empty(ps.n, ps.interior, _descriptor(ps) + " by tip")
    by_mask: dict[int, int] = {}
    for inc, _ in found:
        key = 0
        for c, v in tip_bits:
            if inc >> c & 1:
                key |= 1 << v
        by_mask[key] = by_mask.get(key, 0) + 1
    for key, c in by_mask.items():
        tbl.counts[InteriorSubset.from_mask(key)] += c
    return tbl


def _descriptor(ps: PointSet) -> str:
    if ps.family is None:
        return f"{ps.n} points"
    return f"{ps.family.kind} {ps.family.params}"


def convex_triangulations(polygon: tuple[int, ...]) -> Iterator[frozenset]:
    """Diagonal sets of all triangulations of a convex polygon given in cyclic order."""
    k = len(polygon)
    if k < 3:
        yield frozenset()
        return
    a, b = polygon[0], polygon[-1]
    for j in range(1, k - 1):
        c = polygon[j]
        own = set()
        if j > 1:
            own.add((min(a, c), max(a, c)))
        if j < k - 2:
            own.add((min(b, c), max(b, c)))
        for left in convex_triangulations(polygon[:j + 1]):
            for right in convex_triangulations(polygon[j:]):
                yield frozenset(own) | left | right


def enumerate_convex_TW(l: int, w: Iterable[int]) -> int:
    """Triangulations of the convex polygon 0..l+1, q whose q-neighbours in 1..l lie in ``w``."""
    w = set(w)
    if not w <= set(range(1, l + 1)):
        raise ValueError(f"w must be a subset of 1..{l}")
    q = l + 2
    count = 0
    for diags in convex_triangulations(tuple(range(l + 2)) + (q,)):
        if all(a in w for a, b in diags if b == q):
            count += 1
    return count
