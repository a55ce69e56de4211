"""Exact integer planar geometry and generators for the point-set families.

All predicates work on Python integers (or ``Fraction`` during construction),
so nothing in the pipeline is ever rounded.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence


class Point(NamedTuple):
    x: int
    y: int


class Orientation(enum.IntEnum):
    RIGHT = -1
    COLLINEAR = 0
    LEFT = 1


LEFT = Orientation.LEFT
RIGHT = Orientation.RIGHT
COLLINEAR = Orientation.COLLINEAR


class DegenerateInput(ValueError):
    """Raised when a point set is not in general position."""

    def __init__(self, message: str, triple: tuple[int, int, int] | None = None):
        super().__init__(message)
        self.triple = triple


class ConstructionError(RuntimeError):
    pass


def orient(a, b, c) -> int:
    """Sign of the determinant of (b - a, c - a): +1 left turn, -1 right, 0 collinear."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def orientation(a, b, c) -> Orientation:
    return Orientation(orient(a, b, c))


def segments_cross(a, b, c, d) -> bool:
    """Proper crossing of segments ab and cd; shared endpoints do not count.

    Assumes general position, so touching without sharing an endpoint
    cannot happen.
    """
    if a == c or a == d or b == c or b == d:
        return False
    return (orient(a, b, c) * orient(a, b, d) < 0
            and orient(c, d, a) * orient(c, d, b) < 0)


def convex_hull(points: Sequence) -> list[int]:
    """Indices of the hull vertices in counter-clockwise order (monotone chain)."""
    order = sorted(range(len(points)), key=lambda i: (points[i][0], points[i][1]))
    if len(order) < 3:
        return order

    def half(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and orient(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = half(order)
    upper = half(reversed(order))
    return lower[:-1] + upper[:-1]


def find_collinear(points: Sequence) -> tuple[int, int, int] | None:
    for i, j, k in combinations(range(len(points)), 3):
        if orient(points[i], points[j], points[k]) == 0:
            return (i, j, k)
    return None


@dataclass(frozen=True)
class FamilySpec:
    """Which generator produced a point set, and with which parameters.

    ``kind`` is one of ``convex``, ``almost-convex``, ``single-chain``,
    ``double-chain``. ``params`` is ``(n,)``, ``(v, hosts)``, ``(l,)`` or
    ``(l, m)`` respectively.
    """

    kind: str
    params: tuple

    def __post_init__(self):
        kinds = ("convex", "almost-convex", "single-chain", "double-chain")
        if self.kind not in kinds:
            raise ValueError(f"unknown family kind {self.kind!r}")


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point, ...]
    hull: tuple[int, ...]
    interior: tuple[int, ...]
    family: FamilySpec | None = None
    _hull_set: frozenset = field(default=frozenset(), repr=False, compare=False)

    @classmethod
    def from_points(cls, pts: Iterable, family: FamilySpec | None = None) -> "PointSet":
        points = tuple(Point(int(x), int(y)) for x, y in pts)
        if len(points) < 3:
            raise DegenerateInput(f"need at least 3 points, got {len(points)}")
        if len(set(points)) != len(points):
            raise DegenerateInput("duplicate points")
        bad = find_collinear(points)
        if bad is not None:
            i, j, k = bad
            raise DegenerateInput(
                f"points {i}, {j}, {k} are collinear: "
                f"{tuple(points[i])}, {tuple(points[j])}, {tuple(points[k])}",
                triple=bad,
            )
        hull = tuple(convex_hull(points))
        hull_set = frozenset(hull)
        interior = tuple(i for i in range(len(points)) if i not in hull_set)
        return cls(points, hull, interior, family, hull_set)

    @property
    def n(self) -> int:
        return len(self.points)

    def is_hull(self, i: int) -> bool:
        return i in self._hull_set

    def hull_edges(self) -> list[tuple[int, int]]:
        h = self.hull
        return [tuple(sorted((h[k], h[(k + 1) % len(h)]))) for k in range(len(h))]

    # -- single chain helpers --------------------------------------------
    @property
    def tip(self) -> int:
        if self.family is None or self.family.kind != "single-chain":
            raise ValueError("point set is not a single chain")
        return self.n - 1

    @property
    def chain_length(self) -> int:
        """Number of interior points of a single chain (called l)."""
        if self.family is None or self.family.kind != "single-chain":
            raise ValueError("point set is not a single chain")
        return self.family.params[0]


def _to_integer_points(pts: Sequence[tuple[Fraction, Fraction]]) -> list[Point]:
    den = 1
    for x, y in pts:
        den = math.lcm(den, Fraction(x).denominator, Fraction(y).denominator)
    return [Point(int(Fraction(x) * den), int(Fraction(y) * den)) for x, y in pts]


# -- generators -------------------------------------------------------------

def make_convex(n: int) -> PointSet:
    """``n`` points on the parabola y = x^2, all on the hull."""
    if n < 3:
        raise ValueError(f"convex position needs n >= 3, got {n}")
    return PointSet.from_points([(x, x * x) for x in range(n)], FamilySpec("convex", (n,)))


def _regular_polygon(v: int, radius: int) -> list[Point]:
    return [
        Point(round(radius * math.cos(2 * math.pi * k / v + 0.1)),
              round(radius * math.sin(2 * math.pi * k / v + 0.1)))
        for k in range(v)
    ]


def _is_polygon_order(hull: list[int], v: int) -> bool:
    """True iff ``hull`` is a rotation of 0..v-1."""
    if sorted(hull) != list(range(v)):
        return False
    k = hull.index(0)
    return hull[k:] + hull[:k] == list(range(v))


def validate_closeness(ps: PointSet | Sequence, p: int, edge: tuple[int, int]) -> bool:
    """True iff no segment between two other points separates ``p`` from ``edge``.

    A segment separates ``p`` from the hull edge ``(q, r)`` exactly when it
    meets the open triangle ``(p, q, r)``; the check runs over all point pairs.
    """
    pts = ps.points if isinstance(ps, PointSet) else ps
    q, r = edge
    P, Q, R = pts[p], pts[q], pts[r]
    s = orient(P, Q, R)
    if s == 0:
        return False

    def strictly_inside(X):
        return orient(P, Q, X) == s and orient(Q, R, X) == s and orient(R, P, X) == s

    others = [i for i in range(len(pts)) if i not in (p, q, r)]
    for i in others:
        if strictly_inside(pts[i]):
            return False
    for a, b in combinations([i for i in range(len(pts)) if i != p], 2):
        if {a, b} == {q, r}:
            continue
        A, B = pts[a], pts[b]
        if a in (q, r) or b in (q, r):
            # segment from a triangle corner enters the triangle iff the other
            # end lies strictly inside that corner's wedge
            corner, far = (A, B) if a in (q, r) else (B, A)
            other = R if corner == Q else Q
            if orient(corner, other, far) == orient(corner, other, P) and \
                    orient(corner, P, far) == orient(corner, P, other):
                return False
            continue
        if (segments_cross(A, B, P, Q) or segments_cross(A, B, Q, R)
                or segments_cross(A, B, R, P)):
            return False
    return True


def make_almost_convex(v: int, hosts: Iterable[int] = ()) -> PointSet:
    """A convex ``v``-gon with one interior point close to each host edge.

    Host ``h`` names the hull edge ``(h, h+1 mod v)``. Interior points are
    pushed towards the host edge midpoint until every closeness certificate
    holds; the certificate, not the construction, is what is guaranteed.
    """
    hosts = list(hosts)
    if v < 3:
        raise ValueError(f"need v >= 3, got {v}")
    if len(set(hosts)) != len(hosts):
        raise ValueError(f"duplicate host edges in {hosts}")
    if any(not 0 <= h < v for h in hosts):
        raise ValueError(f"host edges must lie in 0..{v - 1}")
    hosts = sorted(hosts)
    family = FamilySpec("almost-convex", (v, tuple(hosts)))
    base = _regular_polygon(v, 64 * v)
    if not _is_polygon_order(convex_hull(base), v) or find_collinear(base):
        raise ConstructionError(f"could not build a convex {v}-gon")

    for depth in range(3, 40):
        for skew in (0, 1, -1, 2, -2):
            pts = [(Fraction(x), Fraction(y)) for x, y in base]
            for h in hosts:
                q, r = base[h], base[(h + 1) % v]
                mx, my = Fraction(q.x + r.x, 2), Fraction(q.y + r.y, 2)
                dx, dy = r.x - q.x, r.y - q.y
                # left normal points inside a counter-clockwise polygon
                eps = Fraction(1, 2 ** depth)
                tang = Fraction(skew, 16)
                pts.append((mx - dy * eps + dx * eps * tang, my + dx * eps + dy * eps * tang))
            ints = _to_integer_points(pts)
            if find_collinear(ints):
                continue
            ok = all(validate_closeness(ints, v + k, (h, (h + 1) % v))
                     for k, h in enumerate(hosts))
            if ok and _is_polygon_order(convex_hull(ints), v):
                return PointSet.from_points(ints, family)
    raise ConstructionError(f"closeness certificate failed for v={v}, hosts={hosts}")


def make_single_chain(l: int) -> PointSet:
    """Convex chain 0..l+1 capped below by the edge (0, l+1), tip above.

    Index ``l + 2`` is the tip; interior points are exactly 1..l.
    """
    if l < 0:
        raise ValueError(f"need l >= 0, got {l}")
    half = l + 1
    chain = [(2 * k - half, half * half - (2 * k - half) ** 2) for k in range(l + 2)]
    family = FamilySpec("single-chain", (l,))
    y = 2 * (2 * half) ** 2 + 1
    for _ in range(1000):
        pts = chain + [(1, y)]
        if find_collinear(pts) is None:
            ps = PointSet.from_points(pts, family)
            if _tip_sees_chain(ps):
                return ps
        y += 1
    raise ConstructionError(f"no valid tip position for l={l}")


def _tip_sees_chain(ps: PointSet) -> bool:
    l = ps.n - 3
    pts = ps.points
    p = pts[l + 2]
    if sorted(ps.hull) != sorted({0, l + 1, l + 2}):
        return False
    for k in range(l + 1):
        a, b = pts[k], pts[k + 1]
        if orient(a, b, p) <= 0:
            return False
        for j in range(ps.n):
            if j in (k, k + 1, l + 2):
                continue
            X = pts[j]
            if orient(p, a, X) == orient(a, b, X) == orient(b, p, X):
                return False
    return True


def make_double_chain(l: int, m: int) -> PointSet:
    """Convex 4-gon with a top chain of ``l`` and a bottom chain of ``m`` points.

    Top chain indices 0..l+1 run left to right (0 and l+1 are hull corners),
    bottom chain indices l+2..l+m+3 likewise. The chains sag towards each
    other and stay strictly on their side of both diagonals.
    """
    if l < 0 or m < 0:
        raise ValueError("chain lengths must be non-negative")
    d = (l + 1) * (m + 1)
    family = FamilySpec("double-chain", (l, m))
    for bump in range(1000):
        h = 3 * d * d + 1 + bump
        top = [(-d + k * (2 * d // (l + 1)), h - d * d + (-d + k * (2 * d // (l + 1))) ** 2)
               for k in range(l + 2)]
        bot = [(-d + j * (2 * d // (m + 1)), -h + d * d - (-d + j * (2 * d // (m + 1))) ** 2)
               for j in range(m + 2)]
        pts = top + bot
        if find_collinear(pts) is not None:
            continue
        ps = PointSet.from_points(pts, family)
        if _double_chain_ok(ps, l, m):
            return ps
    raise ConstructionError(f"could not place double chain ({l}, {m})")


def _double_chain_ok(ps: PointSet, l: int, m: int) -> bool:
    corners = {0, l + 1, l + 2, l + m + 3}
    if set(ps.hull) != corners:
        return False
    pts = ps.points
    tl, tr, bl, br = pts[0], pts[l + 1], pts[l + 2], pts[l + m + 3]
    # top interior above both diagonals, bottom interior below both
    for k in range(1, l + 1):
        X = pts[k]
        if orient(bl, tr, X) <= 0 or orient(tl, br, X) <= 0:
            return False
    for j in range(l + 3, l + m + 3):
        X = pts[j]
        if orient(bl, tr, X) >= 0 or orient(tl, br, X) >= 0:
            return False
    return True


def make_family(spec: FamilySpec) -> PointSet:
    kind, params = spec.kind, spec.params
    if kind == "convex":
        return make_convex(*params)
    if kind == "almost-convex":
        return make_almost_convex(params[0], params[1])
    if kind == "single-chain":
        return make_single_chain(*params)
    return make_double_chain(*params)


# -- text format ------------------------------------------------------------

def format_points(ps: PointSet | Sequence) -> str:
    pts = ps.points if isinstance(ps, PointSet) else ps
    lines = []
    if isinstance(ps, PointSet) and ps.family is not None:
        lines.append(f"# family {ps.family.kind} {_format_params(ps.family)}")
    lines.append(str(len(pts)))
    lines += [f"{x} {y}" for x, y in pts]
    return "\n".join(lines) + "\n"


def _format_params(spec: FamilySpec) -> str:
    if spec.kind == "almost-convex":
        v, hosts = spec.params
        return f"{v} hosts={','.join(map(str, hosts))}"
    return " ".join(map(str, spec.params))


def _parse_family(comment: str) -> FamilySpec | None:
    words = comment.split()
    if len(words) < 3 or words[0] != "family":
        return None
    kind, rest = words[1], words[2:]
    if kind == "almost-convex":
        hosts = rest[1].split("=", 1)[1] if len(rest) > 1 else ""
        return FamilySpec(kind, (int(rest[0]), tuple(int(h) for h in hosts.split(",") if h)))
    return FamilySpec(kind, tuple(int(w) for w in rest))


def parse_points(text: str) -> PointSet:
    family = None
    rows: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            family = family or _parse_family(line[1:])
            continue
        rows.append(line)
    if not rows:
        raise ValueError("empty point-set file")
    n = int(rows[0])
    if len(rows) - 1 != n:
        raise ValueError(f"header says {n} points, found {len(rows) - 1}")
    pts = []
    for row in rows[1:]:
        x, y = row.split()
        pts.append((int(x), int(y)))
    return PointSet.from_points(pts, family)


def read_points(path: str | Path) -> PointSet:
    return parse_points(Path(path).read_text())


def write_points(ps: PointSet, path: str | Path) -> None:
    Path(path).write_text(format_points(ps))
