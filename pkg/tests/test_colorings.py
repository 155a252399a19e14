import random

import pytest

from equicolor import (
    ListAssignment,
    PartialColoring,
    build_graph,
    dominates,
    greedy_extend_full,
    greedy_maximal,
    is_proper,
    maximal_independent_superset,
)
from equicolor.errors import ImproperSeed, NotIndependent, OutOfRange, PaletteTooSmall

from conftest import complete, cycle, random_graph


def test_is_proper_examples():
    c4 = cycle(4)
    assert is_proper(c4, PartialColoring(4, 2, [0, 1, 0, 1]))
    k3 = complete(3)
    assert not is_proper(k3, PartialColoring(3, 2, [0, 0, None]))
    assert is_proper(k3, PartialColoring(3, 2))


def test_counts_cache():
    f = PartialColoring(5, 3, [0, 0, 1, None, None])
    assert f.counts() == (2, 1, 0)
    f.assign(3, 2)
    f.unassign(0)
    assert f.counts() == (1, 1, 1)
    assert f.domain_size == 3
    with pytest.raises(OutOfRange):
        f.assign(4, 3)


def test_greedy_on_triangle_blocks():
    k3 = complete(3)
    lists = ListAssignment.of([[0, 1]] * 3)
    out = greedy_maximal(k3, lists, PartialColoring(3, 2))
    assert out.as_list() == [0, 1, None]


def test_greedy_with_roomy_lists_is_total():
    for seed in range(10):
        g = random_graph(8, 0.4, seed)
        lists = ListAssignment.of(
            [range(g.degree(v) + 1) for v in range(g.n)]
        )
        k = max(lists.max_color() + 1, 1)
        out = greedy_maximal(g, lists, PartialColoring(g.n, k))
        assert out.is_total()


def test_greedy_fixed_point():
    g = random_graph(8, 0.3, 5)
    lists = ListAssignment.of([[0, 1, 2]] * 8)
    once = greedy_maximal(g, lists, PartialColoring(8, 3))
    twice = greedy_maximal(g, lists, once)
    assert once == twice


def test_greedy_rejects_improper_seed():
    k3 = complete(3)
    lists = ListAssignment.uniform(3, 3)
    with pytest.raises(ImproperSeed):
        greedy_maximal(k3, lists, PartialColoring(3, 3, [0, 0, None]))


def test_greedy_maximal_blocked_vertices_see_all_their_colors():
    for seed in range(25):
        g = random_graph(8, 0.5, seed)
        rng = random.Random(seed)
        lists = ListAssignment.of([
            rng.sample(range(5), rng.randint(1, 4)) for _ in range(g.n)
        ])
        out = greedy_maximal(g, lists, PartialColoring(g.n, 5))
        for v in range(g.n):
            if out.is_assigned(v):
                continue
            nbr_colors = {out.get(w) for w in g.adjacency(v)}
            assert lists[v] <= nbr_colors
            assert len(lists[v]) <= len(nbr_colors & lists[v])


def test_extend_full_examples():
    c5 = cycle(5)
    out = greedy_extend_full(c5, 3)
    assert out.is_total() and is_proper(c5, out)
    k4 = complete(4)
    seeded = greedy_extend_full(k4, 4, PartialColoring(4, 4, [0, None, None, None]))
    assert seeded.get(0) == 0 and seeded.is_total() and is_proper(k4, seeded)
    with pytest.raises(PaletteTooSmall):
        greedy_extend_full(c5, 2)


def test_extend_full_random_properness():
    # properness over a spread of random (graph, seed) pairs
    count = 0
    for gseed in range(50):
        g = random_graph(10, 0.35, gseed)
        rng = random.Random(gseed)
        k = g.max_degree + 1 + rng.randint(0, 2)
        for sseed in range(20):
            srng = random.Random(1000 * gseed + sseed)
            seed = PartialColoring(g.n, k)
            for v in range(g.n):
                if srng.random() < 0.4:
                    options = [
                        c for c in range(k)
                        if all(seed.get(w) != c for w in g.adjacency(v))
                    ]
                    if options:
                        seed.assign(v, srng.choice(options))
            out = greedy_extend_full(g, k, seed)
            assert out.is_total() and is_proper(g, out)
            assert all(
                out.get(v) == seed.get(v) for v in range(g.n) if seed.is_assigned(v)
            )
            count += 1
    assert count == 1000


def test_maximal_independent_superset_examples():
    c4 = cycle(4)
    assert maximal_independent_superset(c4, {0}) == frozenset({0, 2})
    assert maximal_independent_superset(complete(4), {1}) == frozenset({1})
    assert maximal_independent_superset(build_graph(3, []), set()) == frozenset({0, 1, 2})
    with pytest.raises(NotIndependent):
        maximal_independent_superset(c4, {0, 1})


def test_maximal_independent_superset_is_maximal():
    for seed in range(30):
        g = random_graph(9, 0.3, seed)
        out = maximal_independent_superset(g, set())
        assert all(not g.has_edge(u, v) for u in out for v in out if u < v)
        for v in range(g.n):
            if v not in out:
                assert any(w in out for w in g.adjacency(v))


def test_dominates():
    f = PartialColoring(4, 2, [0, 0, 1, None])
    h = PartialColoring(4, 2, [0, None, 1, None])
    assert dominates(f, h, [0, 1])
    assert not dominates(h, f, [0, 1])
    assert dominates(f, f, [0, 1])
    # extension always dominates
    g = PartialColoring(4, 2, [0, 0, 1, 1])
    assert dominates(g, f, [0, 1])
    # empty dominates nothing but is dominated by all
    empty = PartialColoring(4, 2)
    assert dominates(f, empty, [0, 1])
    f2 = PartialColoring(3, 2, [0, 0, 1])
    h2 = PartialColoring(3, 2, [0, 1, 1])
    assert not dominates(f2, h2, [0, 1])
