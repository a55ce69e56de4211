"""Plane graphs on a point set, faces, pointedness and pseudo-triangulation checks."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cmp_to_key
from pathlib import Path
from typing import Iterable, Iterator

from .geom import PointSet, orient, segments_cross

Edge = tuple[int, int]


def edge_key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


class ValidationError(ValueError):
    """Base class; ``witness`` names the offending object."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class CrossingEdges(ValidationError):
    pass


class MissingHullEdge(ValidationError):
    pass


class FaceNotPseudoTriangle(ValidationError):
    pass


class IsolatedOrDegreeOneVertex(ValidationError):
    pass


class EdgeCountMismatch(ValidationError):
    pass


class DisconnectedGraph(ValidationError):
    pass


@dataclass(frozen=True, order=True)
class InteriorSubset:
    """A sorted set of vertex indices; ``mask`` is the canonical integer key."""

    members: tuple[int, ...] = ()

    @classmethod
    def of(cls, items: Iterable[int] = ()) -> "InteriorSubset":
        return cls(tuple(sorted(set(items))))

    @classmethod
    def from_mask(cls, mask: int) -> "InteriorSubset":
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return cls(tuple(out))

    @property
    def mask(self) -> int:
        m = 0
        for i in self.members:
            m |= 1 << i
        return m

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, i) -> bool:
        return i in self.members

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class PlaneGraph:
    pointset: PointSet
    edges: frozenset

    @classmethod
    def of(cls, ps: PointSet, edges: Iterable) -> "PlaneGraph":
        return cls(ps, frozenset(edge_key(a, b) for a, b in edges))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.pointset.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def crossing_pair(self) -> tuple[Edge, Edge] | None:
        pts = self.pointset.points
        es = sorted(self.edges)
        for i, (a, b) in enumerate(es):
            for c, d in es[i + 1:]:
                if segments_cross(pts[a], pts[b], pts[c], pts[d]):
                    return (a, b), (c, d)
        return None


@dataclass(frozen=True)
class Face:
    boundary: tuple[int, ...]
    corners: tuple[int, ...]

    @property
    def is_pseudo_triangle(self) -> bool:
        return len(self.corners) == 3 and len(set(self.boundary)) == len(self.boundary)


@dataclass(frozen=True)
class PseudoTriangulation:
    graph: PlaneGraph
    faces: tuple[Face, ...]
    pointed: tuple[bool, ...]
    signature: InteriorSubset
    _key: tuple = field(default=(), repr=False, compare=False)

    @property
    def pointset(self) -> PointSet:
        return self.graph.pointset

    @property
    def edges(self) -> frozenset:
        return self.graph.edges

    @property
    def is_pointed(self) -> bool:
        return all(self.pointed)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.graph.edges)


def _angular_cmp(origin):
    ox, oy = origin

    def half(p):
        dx, dy = p[0] - ox, p[1] - oy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        return -orient(origin, p, q)

    return cmp


def rotation_system(g: PlaneGraph) -> list[list[int]]:
    """Neighbours of every vertex sorted counter-clockwise by exact angle."""
    pts = g.pointset.points
    rot = []
    for v, nbrs in enumerate(g.adjacency()):
        cmp = _angular_cmp(pts[v])
        rot.append(sorted(nbrs, key=cmp_to_key(lambda a, b: cmp(pts[a], pts[b]))))
    return rot


def _pointed_from_rotation(pts, v: int, ring: list[int]) -> bool:
    if len(ring) <= 1:
        return True
    k = len(ring)
    return any(orient(pts[v], pts[ring[i]], pts[ring[(i + 1) % k]]) < 0 for i in range(k))


def _trace_faces(g: PlaneGraph, rot: list[list[int]]) -> list[tuple[int, ...]]:
    pos = [{u: i for i, u in enumerate(r)} for r in rot]
    seen: set[tuple[int, int]] = set()
    cycles = []
    for a, b in sorted(g.edges):
        for u, v in ((a, b), (b, a)):
            if (u, v) in seen:
                continue
            cyc = []
            x, y = u, v
            while (x, y) not in seen:
                seen.add((x, y))
                cyc.append(x)
                ring = rot[y]
                w = ring[(pos[y][x] - 1) % len(ring)]
                x, y = y, w
            cycles.append(tuple(cyc))
    return cycles


def _area2(pts, cyc) -> int:
    s = 0
    for i in range(len(cyc)):
        (x0, y0), (x1, y1) = pts[cyc[i]], pts[cyc[(i + 1) % len(cyc)]]
        s += x0 * y1 - x1 * y0
    return s


def _face_from_cycle(pts, cyc) -> Face:
    k = len(cyc)
    corners = []
    for i in range(k):
        a, v, b = cyc[i - 1], cyc[i], cyc[(i + 1) % k]
        if a != b and orient(pts[a], pts[v], pts[b]) > 0:
            corners.append(v)
    return Face(tuple(cyc), tuple(corners))


def faces_of(g: PlaneGraph) -> list[Face]:
    """Bounded faces, each traced counter-clockwise; the outer face is dropped.

    Every clockwise cycle is treated as an outer boundary, so a disconnected
    graph yields one fewer face than it has holes; connectivity is checked
    separately by ``validate``.
    """
    pts = g.pointset.points
    rot = rotation_system(g)
    return [_face_from_cycle(pts, c) for c in _trace_faces(g, rot) if _area2(pts, c) > 0]


def is_pointed(g: PlaneGraph, v: int) -> bool:
    """True iff some angular gap between consecutive edges at ``v`` exceeds pi."""
    ring = rotation_system(g)[v]
    if len(ring) < 2:
        raise IsolatedOrDegreeOneVertex(f"vertex {v} has degree {len(ring)}", witness=v)
    return _pointed_from_rotation(g.pointset.points, v, ring)


def _connected(n: int, adj: list[list[int]]) -> bool:
    seen = [False] * n
    seen[0] = True
    todo = deque([0])
    while todo:
        v = todo.popleft()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                todo.append(u)
    return all(seen)


def validate(ps: PointSet, edges: Iterable, check_crossings: bool = True) -> PseudoTriangulation:
    """Check that ``edges`` form a pseudo-triangulation of ``ps`` and return its record.

    ``check_crossings=False`` skips the quadratic crossing test for callers
    that already guarantee a non-crossing edge set.
    """
    g = PlaneGraph.of(ps, edges)
    n = ps.n
    for a, b in g.edges:
        if a == b or not (0 <= a < n and 0 <= b < n):
            raise ValidationError(f"bad edge ({a}, {b})", witness=(a, b))
    if check_crossings:
        pair = g.crossing_pair()
        if pair is not None:
            raise CrossingEdges(f"edges {pair[0]} and {pair[1]} cross", witness=pair)
    for e in ps.hull_edges():
        if e not in g.edges:
            raise MissingHullEdge(f"hull edge {e} missing", witness=e)
    adj = g.adjacency()
    for v in range(n):
        if len(adj[v]) < 2:
            raise IsolatedOrDegreeOneVertex(f"vertex {v} has degree {len(adj[v])}", witness=v)
    if not _connected(n, adj):
        raise DisconnectedGraph("graph is not connected")

    pts = ps.points
    rot = rotation_system(g)
    faces = []
    for cyc in _trace_faces(g, rot):
        if _area2(pts, cyc) < 0:
            continue
        face = _face_from_cycle(pts, cyc)
        if not face.is_pseudo_triangle:
            raise FaceNotPseudoTriangle(
                f"face {face.boundary} has {len(face.corners)} corners", witness=face)
        faces.append(face)
    pointed = tuple(_pointed_from_rotation(pts, v, rot[v]) for v in range(n))
    x = pointed.count(False)
    if len(g.edges) != 2 * n - 3 + x or len(faces) != n - 2 + x:
        raise EdgeCountMismatch(
            f"{len(g.edges)} edges and {len(faces)} faces with {x} non-pointed vertices",
            witness=(len(g.edges), len(faces), x))
    sig = InteriorSubset(tuple(v for v in ps.interior if pointed[v]))
    return PseudoTriangulation(g, tuple(faces), pointed, sig)


def is_pseudo_triangulation(ps: PointSet, edges: Iterable) -> bool:
    try:
        validate(ps, edges)
    except ValidationError:
        return False
    return True


def tip_signature(t: PseudoTriangulation) -> InteriorSubset:
    """Interior vertices joined to the tip of a single chain."""
    ps = t.pointset
    p = ps.tip
    return InteriorSubset.of(b if a == p else a for a, b in t.edges
                             if p in (a, b) and ps.n - 3 >= (b if a == p else a) >= 1)


# -- edge-set text format ---------------------------------------------------

def format_edges(edges: Iterable) -> str:
    return "".join(f"{a} {b}\n" for a, b in sorted(edge_key(a, b) for a, b in edges))


def parse_edges(text: str) -> list[Edge]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        a, b = map(int, line.split())
        if a >= b:
            raise ValueError(f"edge line {line!r} must satisfy i < j")
        out.append((a, b))
    return out


def read_edges(path: str | Path) -> list[Edge]:
    return parse_edges(Path(path).read_text())
