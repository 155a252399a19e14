import random

import pytest

from equicolor import (
    PartialColoring,
    build_graph,
    build_one_ended_subforest,
    dominates,
    dominating_delta_coloring,
    forest_recolor,
    is_proper,
)
from equicolor.errors import (
    ComponentMissesAnchor,
    ImproperSeed,
    PaletteTooSmall,
    RegularGallaiComponent,
)
from equicolor.oracle import domination_exists
from equicolor.colorings import ListAssignment

from conftest import complete, cycle, path, petersen, random_graph, star


def test_forest_p3():
    g = path(3)
    forest = build_one_ended_subforest(g, {1})
    assert forest.parent == {0: 1, 2: 1}
    assert forest.heights == (0, 1, 0)


def test_forest_all_anchors():
    g = cycle(4)
    forest = build_one_ended_subforest(g, range(4))
    assert forest.parent == {}
    assert forest.heights == (0, 0, 0, 0)


def test_forest_missing_anchor():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ComponentMissesAnchor):
        build_one_ended_subforest(g, {0})
    with pytest.raises(ComponentMissesAnchor):
        build_one_ended_subforest(g, set())


def test_forest_invariants_random():
    for seed in range(20):
        g = random_graph(12, 0.2, seed)
        rng = random.Random(seed)
        anchors = {rng.choice(comp) for comp in _comps(g)}
        forest = build_one_ended_subforest(g, anchors)
        forest.validate(g)
        # every chain reaches an anchor within n steps
        for v in range(g.n):
            x, steps = v, 0
            while x not in forest.anchors:
                x = forest.parent[x]
                steps += 1
                assert steps <= g.n


def _comps(g):
    from equicolor import components
    return components(g)


def test_forest_recolor_all_anchored_is_maximalize():
    g = cycle(4)
    forest = build_one_ended_subforest(g, range(4))
    seed = PartialColoring(4, 2, [0, None, None, None])
    f, psi = forest_recolor(g, forest, seed, 2)
    assert is_proper(g, f)
    assert f.get(0) == 0
    assert all(psi[v] == v for v in range(4) if f.get(v) == seed.get(v))


def test_forest_recolor_star():
    g = star(4)
    forest = build_one_ended_subforest(g, {0})
    f, _ = forest_recolor(g, forest, PartialColoring(5, 4), 4)
    assert all(f.is_assigned(v) for v in range(1, 5))
    assert is_proper(g, f)


def test_forest_recolor_path_example():
    g = path(4)
    forest = build_one_ended_subforest(g, {3})
    seed = PartialColoring(4, 2, [None, 0, None, None])
    f, psi = forest_recolor(g, forest, seed, 2)
    assert all(f.is_assigned(v) for v in (0, 1, 2))
    assert is_proper(g, f)
    assert f.count_of(0) >= 1
    assert psi[1] == 1 and f.get(1) == 0


def test_forest_recolor_witness_injection():
    # the witness map restricted to a class covers the seed class, and a
    # system of distinct representatives exists because parents are unique
    for seed_idx in range(25):
        g = random_graph(10, 0.25, seed_idx)
        rng = random.Random(seed_idx)
        k = max(g.max_degree, 1)
        anchors = {min(comp) for comp in _comps(g)}
        forest = build_one_ended_subforest(g, anchors)
        seed = PartialColoring(g.n, k)
        for v in range(g.n):
            if rng.random() < 0.5:
                options = [
                    c for c in range(k)
                    if all(seed.get(w) != c for w in g.adjacency(v))
                ]
                if options:
                    seed.assign(v, rng.choice(options))
        f, psi = forest_recolor(g, forest, seed, k)
        assert is_proper(g, f)
        assert dominates(f, seed, range(k))
        for alpha in range(k):
            targets = [y for y in range(g.n) if seed.get(y) == alpha]
            sources = [v for v in range(g.n) if f.get(v) == alpha]
            image = {psi[v] for v in sources}
            assert set(targets) <= image
            # distinct representatives: pick one preimage per target
            used = set()
            for y in targets:
                pick = next(v for v in sources if psi[v] == y and v not in used)
                used.add(pick)


def test_forest_recolor_rejects_bad_seed():
    g = path(3)
    forest = build_one_ended_subforest(g, {0})
    with pytest.raises(ImproperSeed):
        forest_recolor(g, forest, PartialColoring(3, 2, [0, 0, None]), 2)
    with pytest.raises(PaletteTooSmall):
        forest_recolor(star(3), build_one_ended_subforest(star(3), {0}),
                       PartialColoring(4, 2), 2)


def test_delta_coloring_tree():
    g = path(5)
    seed = PartialColoring(5, 2, [0, None, None, None, None])
    f = dominating_delta_coloring(g, seed, 2)
    assert f.is_total() and is_proper(g, f)
    assert f.count_of(0) >= 1


def test_delta_coloring_rejects_regular_gallai():
    with pytest.raises(RegularGallaiComponent):
        dominating_delta_coloring(complete(4), PartialColoring(4, 3), 3)
    with pytest.raises(RegularGallaiComponent):
        dominating_delta_coloring(cycle(5), PartialColoring(5, 2), 2)


def test_delta_coloring_petersen():
    g = petersen()
    seed = PartialColoring(10, 3, [0] + [None] * 9)
    f = dominating_delta_coloring(g, seed, 3)
    assert f.is_total() and is_proper(g, f)
    assert f.count_of(0) >= 1
    assert domination_exists(g, ListAssignment.uniform(10, 3), seed)


def test_delta_coloring_even_cycle():
    g = cycle(6)
    seed = PartialColoring(6, 2, [0, None, 0, None, None, None])
    f = dominating_delta_coloring(g, seed, 2)
    assert f.is_total() and is_proper(g, f)
    assert f.count_of(0) >= 2


def test_delta_coloring_mixed_components():
    # a tree component (case a) plus an even cycle (case b)
    g = build_graph(9, [(0, 1), (1, 2),
                        (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 3)])
    seed = PartialColoring(9, 2, [0, None, None, 1, None, None, None, None, None])
    f = dominating_delta_coloring(g, seed, 2)
    assert f.is_total() and is_proper(g, f)
    assert dominates(f, seed, range(2))


def test_delta_coloring_oracle_agreement_small():
    for seed_idx in range(40):
        g = random_graph(7, 0.3, seed_idx)
        k = max(g.max_degree, 3)
        rng = random.Random(seed_idx)
        seed = PartialColoring(g.n, k)
        for v in range(g.n):
            if rng.random() < 0.4:
                options = [
                    c for c in range(k)
                    if all(seed.get(w) != c for w in g.adjacency(v))
                ]
                if options:
                    seed.assign(v, rng.choice(options))
        try:
            f = dominating_delta_coloring(g, seed, k)
        except RegularGallaiComponent:
            continue
        assert f.is_total() and is_proper(g, f)
        assert dominates(f, seed, range(k))
        assert domination_exists(g, ListAssignment.uniform(g.n, k), seed,
                                 budget=_budget())


def _budget():
    from equicolor.oracle import OracleBudget
    return OracleBudget(max_vertices=10, max_palette=8)
