from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from pseudotri import harness as H
from pseudotri.geom import (make_almost_convex, make_convex, make_double_chain,
                            make_single_chain)
from pseudotri.ptgraph import ValidationError, validate
from pseudotri.search import (BudgetExceeded, backend_name, build_problem, run,
                              split_prefixes)

from conftest import compiled

SMALL = [make_convex(6), make_single_chain(2), make_double_chain(0, 1),
         make_almost_convex(4, (0, 2)), make_almost_convex(3, (0, 1))]


def subset_oracle(ps):
    """Every subset of non-hull segments, kept if it completes the hull to a valid PT."""
    hull = ps.hull_edges()
    cand = [e for e in combinations(range(ps.n), 2) if e not in set(hull)]
    found = set()
    for r in range(len(cand) + 1):
        for sub in combinations(cand, r):
            try:
                t = validate(ps, hull + list(sub))
            except ValidationError:
                continue
            found.add((t.edges, t.is_pointed))
    return found


def kernel_set(ps, pointed_only=False, backend=None):
    problem = build_problem(ps)
    out = set()
    for inc, pm in run(problem, pointed_only, backend=backend):
        es = frozenset(problem.edges_of(inc)) | frozenset(problem.hull_edges)
        out.add((es, pm == (1 << ps.n) - 1))
    return out


@pytest.mark.parametrize("ps", SMALL, ids=lambda ps: str(ps.family))
def test_kernel_matches_subset_oracle(ps):
    oracle = subset_oracle(ps)
    assert kernel_set(ps) == oracle
    assert kernel_set(ps, pointed_only=True) == {x for x in oracle if x[1]}


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(4, 6))
def test_kernel_matches_subset_oracle_random(seed, n):
    ps = H.random_point_set(n, random.Random(seed), box=40)
    assert kernel_set(ps) == subset_oracle(ps)


@pytest.mark.parametrize("n", range(3, 10))
def test_convex_counts_are_catalan(n):
    from pseudotri.counters import catalan
    assert len(run(build_problem(make_convex(n)))) == catalan(n - 2)


@compiled
@pytest.mark.parametrize("ps", SMALL + [make_single_chain(4), make_double_chain(1, 2)],
                         ids=lambda ps: str(ps.family))
def test_backends_agree_leaf_for_leaf(ps):
    problem = build_problem(ps)
    for pointed in (False, True):
        assert run(problem, pointed, backend="cython") == run(problem, pointed, backend="python")


@pytest.mark.parametrize("depth", [1, 3, 6])
def test_split_prefixes_partition_the_search(depth):
    problem = build_problem(make_single_chain(4))
    whole = run(problem)
    parts = [x for pre in split_prefixes(problem, depth) for x in run(problem, prefix=pre)]
    assert parts == whole


def test_budget_exceeded_keeps_partial_results():
    problem = build_problem(make_single_chain(5))
    with pytest.raises(BudgetExceeded) as err:
        run(problem, budget=50)
    assert err.value.nodes > 50
    assert isinstance(err.value.partial, list)


def test_backend_name():
    assert backend_name() in ("cython", "python")
    big = build_problem(make_convex(13))
    assert big.k == 65 and backend_name(big) == "python"
    with pytest.raises(RuntimeError if backend_name() == "python" else ValueError):
        run(big, backend="cython")
