"""Executable versions of the constructive proofs on single and double chains.

Single chain convention: chain vertices ``0..l+1`` left to right, tip
``p = l + 2``. Every map here works by relabelling edge sets and then
re-validating, so a wrong case analysis surfaces as a ``ConstructionError``
instead of a silently wrong object.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .geom import ConstructionError, FamilySpec, PointSet, find_collinear, make_single_chain, \
    orient, segments_cross, convex_hull, validate_closeness
from .ptgraph import PseudoTriangulation, ValidationError, edge_key, tip_signature, validate


class BadEar(ValueError):
    def __init__(self, vertex: int):
        super().__init__(f"bad ear at chain vertex {vertex}")
        self.vertex = vertex


@dataclass(frozen=True)
class EndPointVector:
    entries: tuple[int, ...]
    variant: str  # "W" or "W-minus-v"


ShuffleWord = tuple  # 0 = pseudo-triangle kept by the top part, 1 = by the bottom part


def _chain_params(t: PseudoTriangulation) -> tuple[int, int]:
    ps = t.pointset
    return ps.chain_length, ps.tip


def _edges(es: Iterable) -> frozenset:
    return frozenset(edge_key(a, b) for a, b in es)


def _relabel(es: Iterable, f: Callable[[int], int]) -> set:
    return {edge_key(f(a), f(b)) for a, b in es}


def _pointed_pt(ps: PointSet, es: Iterable) -> PseudoTriangulation:
    t = validate(ps, es)
    if not t.is_pointed:
        raise ConstructionError("result is not pointed")
    return t


# -- flips ----------------------------------------------------------------------

def flip(t: PseudoTriangulation, e: tuple[int, int]) -> PseudoTriangulation:
    """Pointed flip: drop ``e`` and insert the unique edge that restores a pointed PT."""
    ps = t.pointset
    e = edge_key(*e)
    if e not in t.edges:
        raise ValueError(f"edge {e} not in the pseudo-triangulation")
    if e in set(ps.hull_edges()):
        raise ValueError(f"hull edge {e} cannot be flipped")
    rest = t.edges - {e}
    pts = ps.points
    found = []
    for a in range(ps.n):
        for b in range(a + 1, ps.n):
            f = (a, b)
            if f == e or f in rest:
                continue
            if any(segments_cross(pts[a], pts[b], pts[c], pts[d]) for c, d in rest):
                continue
            try:
                cand = validate(ps, rest | {f}, check_crossings=False)
            except ValidationError:
                continue
            if cand.is_pointed:
                found.append(cand)
    if len(found) != 1:
        raise ConstructionError(f"flip of {e} has {len(found)} pointed results")
    return found[0]


# -- end-point vectors ----------------------------------------------------------

def _pseudo_edge_ends(t: PseudoTriangulation, v: int) -> tuple[int, int]:
    """Corners joined by the pseudo-edge on which ``v`` is reflex."""
    for face in t.faces:
        if v in face.boundary and v not in face.corners:
            cyc = face.boundary
            k = len(cyc)
            i = cyc.index(v)
            j = i
            while cyc[j % k] not in face.corners:
                j += 1
            h = i
            while cyc[h % k] not in face.corners:
                h -= 1
            return cyc[h % k], cyc[j % k]
    raise ConstructionError(f"vertex {v} is not reflex in any face")


def _triangle_below(t: PseudoTriangulation, a: int, b: int) -> int:
    """Third vertex of the face on the far side of chain edge (a, b) from the tip."""
    ps = t.pointset
    pts = ps.points
    side = orient(pts[a], pts[b], pts[ps.tip])
    # faces run counter-clockwise, so the face left of a -> b is on a's left
    if side > 0:
        a, b = b, a
    for face in t.faces:
        cyc = face.boundary
        k = len(cyc)
        for i in range(k):
            if cyc[i] == a and cyc[(i + 1) % k] == b:
                if k != 3:
                    raise ConstructionError(f"face below ({a}, {b}) is not a triangle")
                return cyc[(i + 2) % k]
    raise ConstructionError(f"edge ({a}, {b}) missing")


def end_point_vector(t: PseudoTriangulation, variant: str = "W",
                     v: int | None = None) -> EndPointVector:
    """End-point vector of a pointed pseudo-triangulation of a single chain.

    ``variant="W"``: for each tip neighbour, the non-tip corner of its reflex
    pseudo-edge. ``variant="W-minus-v"``: the first entry is instead the apex
    of the triangle below chain edge ``(v-1, v)``, where ``v`` is smaller
    than every tip neighbour.
    """
    l, p = _chain_params(t)
    if not t.is_pointed:
        raise ValueError("end-point vectors need a pointed pseudo-triangulation")
    w = list(tip_signature(t))
    entries = []
    if variant == "W":
        for u in w:
            a, b = _pseudo_edge_ends(t, u)
            if p not in (a, b):
                raise ConstructionError(f"pseudo-edge through {u} does not reach the tip")
            entries.append(b if a == p else a)
        return EndPointVector(tuple(entries), "W")
    if variant != "W-minus-v":
        raise ValueError(f"unknown variant {variant!r}")
    if v is None or v in w or (w and v > w[0]) or not 1 <= v <= l:
        raise ValueError(f"v={v} must be an interior vertex below every tip neighbour {w}")
    entries.append(_triangle_below(t, v - 1, v))
    for u in w:
        a, b = _pseudo_edge_ends(t, u)
        entries.append(b if a == p else a)
    return EndPointVector(tuple(entries), "W-minus-v")


# -- the W -> W \ {v} bijection -------------------------------------------------

def _rule_y(v: int, w: list[int], x: tuple[int, ...]) -> int:
    if len(w) > 1 and w[1] == v + 1 and x[1] > w[1]:
        return x[1]
    return v + 1


def bijection_forward(t: PseudoTriangulation) -> PseudoTriangulation:
    """Map an element of PPT_W not using (v, l+1), v = min W, to PPT_{W \\ {v}}."""
    l, p = _chain_params(t)
    w = list(tip_signature(t))
    if not w or not t.is_pointed:
        raise ValueError("need a pointed pseudo-triangulation with a tip neighbour")
    v = w[0]
    if edge_key(v, l + 1) in t.edges:
        raise ValueError(f"edge ({v}, {l + 1}) present; outside the bijection's domain")
    x = end_point_vector(t, "W").entries
    x1 = x[0]
    flipped = flip(t, (p, v))
    if x1 > v:
        return flipped
    new = flipped.edges - t.edges
    (a, b), = new
    y = b if a == v else a
    if v not in (a, b) or y != _rule_y(v, w, x):
        raise ConstructionError(f"flip of ({p}, {v}) produced {new}, expected an edge ({v}, y)")
    s1 = set(range(x1, v + 1))
    s2 = set(range(l + 3)) - set(range(x1 + 1, v + 1))
    t1 = {e for e in flipped.edges if set(e) <= s1}
    t2 = {e for e in flipped.edges if set(e) <= s2}
    if t1 | t2 | {edge_key(v, y)} != set(flipped.edges):
        raise ConstructionError("flipped triangulation does not split into the three pieces")
    if x1 > 0:
        out = _relabel(t1, lambda k: k - 1)
        out |= _relabel(t2, lambda k: v if k == x1 else k)
        out |= {edge_key(x1 - 1, v - 1), edge_key(v - 1, v), edge_key(x1 - 1, v)}
    else:
        out = _relabel(t1, lambda k: l + 1 if k == 0 else k - 1)
        out |= _relabel(t2 - {edge_key(0, p)}, lambda k: v if k == 0 else k)
        out |= {edge_key(0, p), edge_key(l + 1, v - 1), edge_key(v - 1, v), edge_key(v, l + 1)}
    return _pointed_pt(t.pointset, out)


def bijection_inverse(t: PseudoTriangulation, v: int) -> PseudoTriangulation:
    """Inverse of ``bijection_forward``: PPT_{W \\ {v}} back to PPT_W, v below W \\ {v}."""
    l, p = _chain_params(t)
    y = end_point_vector(t, "W-minus-v", v).entries
    y1 = y[0]
    if y1 in (v - 1, v):
        raise ConstructionError(f"invalid end-point vector {y}")
    if v < y1 < l + 1:
        back = flip(t, (v - 1, v))
        if back.edges - t.edges != {edge_key(p, v)}:
            raise ConstructionError(f"flip of ({v - 1}, {v}) did not produce ({p}, {v})")
        return back
    if y1 < v - 1:
        x1 = y1 + 1
        s1 = set(range(y1, v))
        s2 = set(range(l + 3)) - set(range(y1 + 1, v))
        t1 = {e for e in t.edges if set(e) <= s1}
        t2 = {e for e in t.edges if set(e) <= s2}
        if t1 | t2 | {edge_key(v - 1, v)} != set(t.edges):
            raise ConstructionError("pseudo-triangulation does not split at triangle "
                                    f"({y1}, {v - 1}, {v})")
        base = _relabel(t1, lambda k: k + 1) | _relabel(t2, lambda k: x1 if k == v else k)
    elif y1 == l + 1:
        s1 = {l + 1} | set(range(0, v))
        s2 = {p} | set(range(v, l + 2))
        t1 = {e for e in t.edges if set(e) <= s1}
        t2 = {e for e in t.edges if set(e) <= s2}
        if t1 | t2 | {edge_key(v - 1, v), edge_key(0, p)} != set(t.edges):
            raise ConstructionError("pseudo-triangulation does not split at triangle "
                                    f"({l + 1}, {v - 1}, {v})")
        base = _relabel(t1, lambda k: 0 if k == l + 1 else k + 1)
        base |= _relabel(t2, lambda k: 0 if k == v else k) | {edge_key(0, p)}
    else:
        raise ConstructionError(f"invalid end-point vector {y}")
    # insert the triangle at v, then flip its edge (v, y) into the tip edge
    ps = t.pointset
    for yy in [v + 1] + list(range(v + 2, l + 2)):
        try:
            pre = _pointed_pt(ps, base | {edge_key(v, yy)})
        except (ValidationError, ConstructionError):
            continue
        back = flip(pre, (v, yy))
        if back.edges - pre.edges != {edge_key(p, v)}:
            raise ConstructionError(f"flip of ({v}, {yy}) did not produce ({p}, {v})")
        return back
    raise ConstructionError("no completing edge at v")


# -- choice reconstruction ------------------------------------------------------

def reconstruct_from_choice(l: int, tri: Iterable, missing: Iterable,
                            ps: PointSet | None = None) -> PseudoTriangulation:
    """The pointed pseudo-triangulation compatible with a triangulation and missing edges.

    ``tri`` holds the diagonals of a triangulation of the convex polygon 0..l+1;
    ``missing`` is a set of chain edges (i, i+1) to drop.
    """
    ps = ps or make_single_chain(l)
    p = l + 2
    diags = _edges(tri)
    missing = _edges(missing)
    chain = {(i, i + 1) for i in range(l + 1)}
    if not missing <= chain:
        raise ValueError(f"missing edges must be chain edges, got {sorted(missing - chain)}")
    poly = diags | chain | {(0, l + 1)}
    nbrs: dict[int, set[int]] = {k: set() for k in range(l + 2)}
    for a, b in poly:
        nbrs[a].add(b)
        nbrs[b].add(a)
    for k in range(1, l + 1):
        if (k - 1, k) in missing and (k, k + 1) in missing and edge_key(k - 1, k + 1) in poly \
                and nbrs[k] == {k - 1, k + 1}:
            raise BadEar(k)
    out = set(poly - missing) | {(0, p), (l + 1, p)}
    for i, j in sorted(missing):
        apex = (nbrs[i] & nbrs[j]).pop()
        out.add(edge_key(p, i) if apex < i else edge_key(p, j))
    return _pointed_pt(ps, out)


def choice_of(t: PseudoTriangulation) -> tuple[frozenset, frozenset] | None:
    """The (diagonals, missing edges) choice compatible with ``t``, if there is one."""
    l, p = _chain_params(t)
    chain = {(i, i + 1) for i in range(l + 1)}
    inner = {e for e in t.edges if p not in e}
    diags = inner - chain - {(0, l + 1)}
    if len(diags) != l - 1:
        return None
    return frozenset(diags), frozenset(chain - inner)


# -- double chain ---------------------------------------------------------------

def _double_params(ps: PointSet) -> tuple[int, int]:
    if ps.family is None or ps.family.kind != "double-chain":
        raise ValueError("point set is not a double chain")
    return ps.family.params


def decompose_double_chain(t: PseudoTriangulation,
                           top_ps: PointSet | None = None,
                           bottom_ps: PointSet | None = None
                           ) -> tuple[PseudoTriangulation, PseudoTriangulation, ShuffleWord]:
    """Contract each chain to a point; returns (T_B, T_C, word).

    T_B lives on the single chain formed by the top vertices (tip = the
    contracted bottom), T_C on the bottom vertices (tip = the contracted top).
    """
    l, m = _double_params(t.pointset)
    top = set(range(l + 2))
    off = l + 2
    tb_tip, tc_tip = l + 2, m + 2
    eb, ec, mixed = set(), set(), []
    for a, b in t.edges:
        if a in top and b in top:
            eb.add((a, b))
        elif a not in top and b not in top:
            ec.add((a - off, b - off))
        else:
            mixed.append((a, b - off))
    mixed.sort()
    for a, b in mixed:
        eb.add(edge_key(a, tb_tip))
        ec.add(edge_key(b, tc_tip))
    word = []
    for (a0, b0), (a1, b1) in zip(mixed, mixed[1:]):
        if a1 == a0 and b1 > b0:
            word.append(1)
        elif b1 == b0 and a1 > a0:
            word.append(0)
        else:
            raise ConstructionError(f"middle face between {(a0, b0)} and {(a1, b1)} "
                                    "has two vertices on each chain")
    top_ps = top_ps or make_single_chain(l)
    bottom_ps = bottom_ps or make_single_chain(m)
    return validate(top_ps, eb), validate(bottom_ps, ec), tuple(word)


def compose_double_chain(tb: PseudoTriangulation, tc: PseudoTriangulation, word: ShuffleWord,
                         ps: PointSet | None = None) -> PseudoTriangulation:
    """Inverse of ``decompose_double_chain`` for one shuffle word."""
    l, m = tb.pointset.n - 3, tc.pointset.n - 3
    ps = ps or make_double_chain_cached(l, m)
    off = l + 2
    a_seq = sorted(a for a, b in tb.edges if b == l + 2)
    b_seq = sorted(a for a, b in tc.edges if b == m + 2)
    i, j = len(a_seq) - 2, len(b_seq) - 2
    word = tuple(word)
    if len(word) != i + j + 2 or word.count(0) != i + 1 or any(s not in (0, 1) for s in word):
        raise ValueError(f"word {word} does not interleave {i + 1} top and {j + 1} bottom faces")
    out = {e for e in tb.edges if l + 2 not in e}
    out |= {(a + off, b + off) for a, b in tc.edges if m + 2 not in (a, b)}
    s = r = 0
    out.add((a_seq[0], b_seq[0] + off))
    for sym in word:
        if sym == 0:
            s += 1
        else:
            r += 1
        out.add((a_seq[s], b_seq[r] + off))
    return validate(ps, out)


_dc_cache: dict[tuple[int, int], PointSet] = {}


def make_double_chain_cached(l: int, m: int) -> PointSet:
    from .geom import make_double_chain
    if (l, m) not in _dc_cache:
        _dc_cache[(l, m)] = make_double_chain(l, m)
    return _dc_cache[(l, m)]


def tip_degree(t: PseudoTriangulation) -> int:
    """Number of interior edges at the tip of a single chain."""
    return len(tip_signature(t))


# -- almost convex: deleting and moving an interior point ------------------------

def delete_point(ps: PointSet, p: int) -> tuple[PointSet, dict[int, int]]:
    """``ps`` without ``p``; the dict maps old indices to new ones."""
    keep = [i for i in range(ps.n) if i != p]
    fam = ps.family
    if fam is not None and fam.kind == "almost-convex":
        v, hosts = fam.params
        host = hosts[p - v]
        fam = FamilySpec("almost-convex", (v, tuple(h for h in hosts if h != host)))
    out = PointSet.from_points([ps.points[i] for i in keep], fam)
    return out, {old: new for new, old in enumerate(keep)}


def move_point_out(ps: PointSet, p: int, edge: tuple[int, int]) -> PointSet:
    """Move interior point ``p`` just outside hull edge ``edge``, keeping all indices.

    The result has ``p`` on the hull between the edge's endpoints and every
    other interior point still close to its own hull edge.
    """
    q, r = edge
    Q, R = ps.points[q], ps.points[r]
    mx, my = Fraction(Q.x + R.x, 2), Fraction(Q.y + R.y, 2)
    dx, dy = R.x - Q.x, R.y - Q.y
    # outward normal of a counter-clockwise hull edge q -> r is (dy, -dx)
    if orient(Q, R, ps.points[p]) < 0:
        dx, dy = -dx, -dy
    for depth in range(4, 40):
        eps = Fraction(1, 2 ** depth)
        new = (mx + dy * eps, my - dx * eps)
        pts = [(Fraction(x), Fraction(y)) for x, y in ps.points]
        pts[p] = new
        den = 1
        for x, y in pts:
            den = math.lcm(den, x.denominator, y.denominator)
        ints = [(int(x * den), int(y * den)) for x, y in pts]
        if find_collinear(ints) is not None:
            continue
        hull = convex_hull(ints)
        if len(hull) != len(ps.hull) + 1 or p not in hull:
            continue
        others = [i for i in ps.interior if i != p]
        if all(_still_close(ints, i, hull) for i in others):
            return PointSet.from_points(ints)
    raise ConstructionError(f"could not move point {p} across {edge}")


def _still_close(pts, i, hull) -> bool:
    k = len(hull)
    return any(validate_closeness(pts, i, (hull[s], hull[(s + 1) % k])) for s in range(k))
