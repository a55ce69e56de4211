"""Exact counts for the structured families, all in Python integers.

Naming follows the usual notation: ``t(v, i)`` triangulations of a set in
almost-convex position with ``v`` hull and ``i`` interior points,
``s(v, j, k)`` pseudo-triangulations with a prescribed pointed set of size
``k`` among ``j + k`` interior points, ``a(l, i)`` pointed
pseudo-triangulations of a single chain with ``i`` tip edges, and the rook
path arrays ``E`` and ``F`` for the double chain.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable

DOUBLE_CHAIN_SUBSET_CAP = 24

# -- Catalan / Motzkin --------------------------------------------------------

_catalan: list[int] = [1]


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan index must be >= 0, got {n}")
    while len(_catalan) <= n:
        k = len(_catalan)
        _catalan.append(_catalan[-1] * 2 * (2 * k - 1) // (k + 1))
    return _catalan[n]


def _difference_rows(alpha: int, beta: int, v: int, i: int) -> list[int]:
    """Values f(v, 0..i) for f(v, i) = alpha f(v+1, i-1) - beta f(v, i-1), f(v, 0) = C_{v-2}.

    Works one row at a time so only O(i) integers are alive at once.
    """
    row = [catalan(u - 2) for u in range(v, v + i + 1)]
    out = [row[0]]
    for _ in range(i):
        row = [alpha * row[k + 1] - beta * row[k] for k in range(len(row) - 1)]
        out.append(row[0])
    return out


_motzkin: list[int] = []


def motzkin(n: int) -> int:
    """M_n, generated as t(3, n) by the difference recursion."""
    if n < 0:
        raise ValueError(f"motzkin index must be >= 0, got {n}")
    if n >= len(_motzkin):
        _motzkin[:] = _difference_rows(1, 1, 3, max(n, 2 * len(_motzkin)))
    return _motzkin[n]


# -- almost convex ------------------------------------------------------------

def _check_v(v: int, i: int) -> None:
    if v < 3:
        raise ValueError(f"need v >= 3, got {v}")
    if i < 0:
        raise ValueError(f"need i >= 0, got {i}")


@lru_cache(maxsize=None)
def t_almost_convex(v: int, i: int) -> int:
    """Triangulations: t(v, i) = t(v+1, i-1) - t(v, i-1)."""
    _check_v(v, i)
    return _difference_rows(1, 1, v, i)[i]


@lru_cache(maxsize=None)
def ppt_almost_convex(v: int, i: int) -> int:
    """Pointed pseudo-triangulations: ppt(v, i) = 2 ppt(v+1, i-1) - ppt(v, i-1)."""
    _check_v(v, i)
    return _difference_rows(2, 1, v, i)[i]


@lru_cache(maxsize=None)
def pt_almost_convex(v: int, i: int) -> int:
    """All pseudo-triangulations: pt(v, i) = 3 pt(v+1, i-1) - 2 pt(v, i-1)."""
    _check_v(v, i)
    return _difference_rows(3, 2, v, i)[i]


def t_array(r: int, i: int) -> int:
    """The difference array of the Catalan numbers, t(r + 2, i), defined for r >= 0 and any i.

    Rows r >= 1 with i <= r + 2 are triangulation counts; the rest only
    continue the recursion.
    """
    if r < 0 or i < 0:
        raise ValueError(f"need r, i >= 0, got r={r}, i={i}")
    return _difference_rows(1, 1, r + 2, i)[i]


@lru_cache(maxsize=None)
def s_almost_convex(v: int, j: int, k: int) -> int:
    """Pseudo-triangulations with a given pointed set of size k, j interior points non-pointed."""
    if v < 3 or j < 0 or k < 0:
        raise ValueError(f"bad parameters v={v}, j={j}, k={k}")
    if k > 0:
        return 2 * s_almost_convex(v + 1, j, k - 1) - s_almost_convex(v, j, k - 1)
    if j > 0:
        return s_almost_convex(v + 1, j - 1, 0) - s_almost_convex(v, j - 1, 0)
    return catalan(v - 2)


# -- single chain -------------------------------------------------------------

def _subset(l: int, w: Iterable[int]) -> tuple[int, ...]:
    w = tuple(sorted(set(w)))
    if w and (w[0] < 1 or w[-1] > l):
        raise ValueError(f"subset {w} not inside 1..{l}")
    return w


@lru_cache(maxsize=None)
def _count_tw(l: int, w: tuple[int, ...]) -> int:
    if not w:
        return catalan(l)
    v = w[-1]
    w1 = w[:-1]
    # triangulations using (q, v) split into the polygons q,0..v and q,v..l+1;
    # with v = max(w) the right part has no allowed interior q-neighbours
    return _count_tw(l, w1) + _count_tw(v - 1, w1) * catalan(l - v)


def count_TW(l: int, w: Iterable[int]) -> int:
    """Triangulations of the convex polygon q,0..l+1 whose interior q-neighbours lie in w."""
    return _count_tw(l, _subset(l, w))


def ppt_W_single_chain(l: int, w: Iterable[int]) -> int:
    """Pointed pseudo-triangulations of a single chain with tip neighbourhood exactly w."""
    return count_TW(l, w)


def pt_W_single_chain(l: int, w: Iterable[int]) -> int:
    """Pseudo-triangulations of a single chain with pointed interior set exactly w."""
    w = _subset(l, w)
    return sum(_count_tw(l, sub) for r in range(len(w) + 1) for sub in combinations(w, r))


@lru_cache(maxsize=None)
def a_single_chain(l: int, i: int) -> int:
    """a(l, i): pointed pseudo-triangulations of a single chain with i tip-interior edges."""
    if l < 0 or i < 0:
        raise ValueError(f"a(l, i) needs l, i >= 0, got l={l}, i={i}")
    if i > l:
        return 0
    if i == 0:
        return catalan(l)
    if i == 1:
        return (l + 1) * catalan(l)
    return comb(l + 1, i) * catalan(l) - a_single_chain(l - 1, i - 2)


_a_rows: list[int] = [1]
_b_rows: list[int] = [1]


def ppt_single_chain(l: int) -> int:
    """a_l = 2^{l+1} C_l - a_{l-1}, a_0 = 1."""
    if l < 0:
        raise ValueError("l must be >= 0")
    while len(_a_rows) <= l:
        k = len(_a_rows)
        _a_rows.append(2 ** (k + 1) * catalan(k) - _a_rows[-1])
    return _a_rows[l]


def ppt_single_chain_closed(l: int) -> int:
    """a_l = 2 sum_j (-1)^(l-j) C_j 2^j - (-1)^l."""
    return 2 * sum((-1) ** (l - j) * catalan(j) * 2 ** j for j in range(l + 1)) - (-1) ** l


def pt_single_chain(l: int) -> int:
    """b_l with 2 b_l = 3^{l+1} C_l - b_{l-1}, b_0 = 1."""
    if l < 0:
        raise ValueError("l must be >= 0")
    while len(_b_rows) <= l:
        k = len(_b_rows)
        twice = 3 ** (k + 1) * catalan(k) - _b_rows[-1]
        assert twice % 2 == 0
        _b_rows.append(twice // 2)
    return _b_rows[l]


# -- double chain -------------------------------------------------------------

def shuffle_coeff(l: int, m: int, v: int, w: int, i: int, j: int) -> int:
    """t^{v,w}_{i,j} = binom(l - v + i + m - w + j + 2, l - v + i + 1)."""
    if not (0 <= i <= v <= l and 0 <= j <= w <= m):
        raise ValueError(f"need i <= v <= l and j <= w <= m, got {(l, m, v, w, i, j)}")
    return comb(l - v + i + m - w + j + 2, l - v + i + 1)


def pt_VW_double_chain(l: int, m: int, V: Iterable[int], W: Iterable[int]) -> int:
    """Pseudo-triangulations whose pointed top set is V (in 1..l) and bottom set is W (in 1..m)."""
    V, W = _subset(l, V), _subset(m, W)
    v, w = len(V), len(W)
    top = [sum(count_TW(l, s) for s in combinations(V, i)) for i in range(v + 1)]
    bot = [sum(count_TW(m, s) for s in combinations(W, j)) for j in range(w + 1)]
    return sum(shuffle_coeff(l, m, v, w, i, j) * top[i] * bot[j]
               for i in range(v + 1) for j in range(w + 1))


def ppt_double_chain(l: int, m: int) -> int:
    """Pointed pseudo-triangulations: sum of a(l,i) a(m,j) binom(i+j+2, i+1)."""
    return sum(a_single_chain(l, i) * a_single_chain(m, j) * comb(i + j + 2, i + 1)
               for i in range(l + 1) for j in range(m + 1))


def pt_double_chain(l: int, m: int, method: str = "grouped",
                    cap: int = DOUBLE_CHAIN_SUBSET_CAP) -> int:
    """All pseudo-triangulations, summed over the pointed sets V and W.

    ``method="subsets"`` literally sums over all 2^(l+m) pairs (V, W) and is
    capped; ``"grouped"`` collapses subsets of equal size through a(l, i).
    """
    if method == "subsets":
        if l + m > cap:
            raise ValueError(f"l + m = {l + m} exceeds the subset-sum cap {cap}")
        return sum(pt_VW_double_chain(l, m, V, W)
                   for r in range(l + 1) for V in combinations(range(1, l + 1), r)
                   for s in range(m + 1) for W in combinations(range(1, m + 1), s))
    if method != "grouped":
        raise ValueError(f"unknown method {method!r}")
    total = 0
    for i in range(l + 1):
        for j in range(m + 1):
            inner = sum(comb(l - i, v - i) * comb(m - j, w - j) * shuffle_coeff(l, m, v, w, i, j)
                        for v in range(i, l + 1) for w in range(j, m + 1))
            total += a_single_chain(l, i) * a_single_chain(m, j) * inner
    return total


def triangulations_double_chain(l: int, m: int) -> int:
    return catalan(l) * catalan(m) * comb(l + m + 2, l + 1)


# -- rook paths ---------------------------------------------------------------

@lru_cache(maxsize=None)
def E_rook(l: int, m: int) -> int:
    """E^{l,m} = sum_{i,j} binom(l,i) binom(m,j) binom(i+j+2, i+1)."""
    if l < 0 or m < 0:
        raise ValueError("E needs l, m >= 0")
    row_m = _binomial_row(m)
    total = 0
    lrow = _binomial_row(l)
    for i in range(l + 1):
        c = i + 2  # binom(i + j + 2, i + 1) at j = 0, then stepped in j
        inner = 0
        for j in range(m + 1):
            inner += row_m[j] * c
            c = c * (i + j + 3) // (j + 2)
        total += lrow[i] * inner
    return total


def _binomial_row(n: int) -> list[int]:
    row = [1]
    for k in range(n):
        row.append(row[-1] * (n - k) // (k + 1))
    return row


@lru_cache(maxsize=None)
def F_rook(l: int, m: int) -> int:
    """F^{l,m} evaluated as its defining quadruple sum."""
    if l < 0 or m < 0:
        raise ValueError("F needs l, m >= 0")
    total = 0
    for v in range(l + 1):
        for w in range(m + 1):
            cw = comb(l, v) * comb(m, w)
            for i in range(v + 1):
                for j in range(w + 1):
                    total += cw * comb(v, i) * comb(w, j) * comb(l + m - i - j + 2, l - i + 1)
    return total


def rook_paths(a: int, b: int) -> int:
    """Monotone rook paths from (0,0) to (a,b), by direct dynamic programming."""
    grid = [[0] * (b + 1) for _ in range(a + 1)]
    col_sums = [0] * (b + 1)
    for x in range(a + 1):
        row_sum = 0
        for y in range(b + 1):
            val = 1 if x == y == 0 else row_sum + col_sums[y]
            grid[x][y] = val
            row_sum += val
            col_sums[y] += val
    return grid[a][b]


def f_identity_offsets(nmax: int = 12, deltas: Iterable[int] = range(-2, 3)) -> dict:
    """Which index shifts make the three F identities hold for all n <= nmax.

    Returns ``{identity: [deltas that hold]}``; an empty list means no shift
    in range works.
    """
    deltas = list(deltas)

    def edge_formula(k):
        return Fraction(k + 6) * Fraction(3) ** (k - 1)

    def row_formula(k):
        return Fraction(5) ** (k - 1) - Fraction(3) ** (k - 1)

    out: dict[str, list[int]] = {"edge": [], "row_sum": [], "recurrence": []}
    for d in deltas:
        if all(F_rook(l, 0) == edge_formula(l + d) == F_rook(0, l)
               for l in range(nmax + 1)):
            out["edge"].append(d)
        if all(sum(F_rook(l, n - l) for l in range(n + 1)) == row_formula(n + d)
               for n in range(nmax + 1)):
            out["row_sum"].append(d)
        # the recurrence is shift invariant; a shift only moves where it starts
        if d >= 0 and all(F_rook(l + 1, m + 1) == 3 * F_rook(l, m + 1)
                          + 3 * F_rook(l + 1, m) - 5 * F_rook(l, m)
                          for l in range(d, nmax) for m in range(d, nmax)):
            out["recurrence"].append(d)
    return out


def f_edge_closed_form(l: int) -> int:
    """F^{l,0} = 2 (l + 3) 3^{l-1}, the form the defining sum actually has."""
    return 2 * (l + 3) * 3 ** l // 3
