import random

import pytest

from equicolor import (
    DominationInstance,
    ListAssignment,
    PartialColoring,
    build_graph,
    color_all_but_one,
    dominates,
    dominating_full_coloring,
    is_proper,
    large_list_shortcut,
)
from equicolor.colorings import is_proper_list_coloring
from equicolor.errors import GallaiTree, ImproperSeed, NotConnected, NotDegreeList, OutOfRange
from equicolor.oracle import canonical_graphs, domination_exists, _components_local
from equicolor.graphs import is_gallai_tree

from conftest import (
    cycle,
    path,
    random_degree_lists,
    random_partial_list_coloring,
)


def test_all_but_one_single_vertex():
    g = build_graph(1, [])
    inst = DominationInstance(g, ListAssignment.of([[0]]), PartialColoring(1, 1), pivot=0)
    out = color_all_but_one(inst)
    assert out.domain_size == 0


def test_all_but_one_edge_forced():
    g = path(2)
    inst = DominationInstance(
        g, ListAssignment.of([[0], [0]]), PartialColoring(2, 1), pivot=0
    )
    out = color_all_but_one(inst)
    assert out.get(1) == 0 and not out.is_assigned(0)


def test_all_but_one_c4():
    g = cycle(4)
    lists = ListAssignment.of([[0, 1]] * 4)
    seed = PartialColoring(4, 2, [0, None, None, None])
    inst = DominationInstance(g, lists, seed, pivot=2)
    out = color_all_but_one(inst)
    assert all(out.is_assigned(v) for v in (0, 1, 3))
    assert is_proper_list_coloring(g, lists, out)
    assert out.count_of(0) >= 1


def test_all_but_one_requires_pivot():
    g = path(2)
    inst = DominationInstance(g, ListAssignment.of([[0], [0]]), PartialColoring(2, 1))
    with pytest.raises(OutOfRange):
        color_all_but_one(inst)


def test_validation_errors():
    g = build_graph(4, [(0, 1), (2, 3)])
    lists = ListAssignment.uniform(4, 2)
    with pytest.raises(NotConnected):
        dominating_full_coloring(DominationInstance(g, lists, PartialColoring(4, 2)))
    g2 = cycle(4)
    with pytest.raises(NotDegreeList):
        dominating_full_coloring(DominationInstance(
            g2, ListAssignment.of([[0], [0, 1], [0, 1], [0, 1]]),
            PartialColoring(4, 2),
        ))
    with pytest.raises(ImproperSeed):
        dominating_full_coloring(DominationInstance(
            g2, ListAssignment.uniform(4, 2),
            PartialColoring(4, 2, [0, 0, None, None]),
        ))
    with pytest.raises(GallaiTree):
        dominating_full_coloring(DominationInstance(
            cycle(5), ListAssignment.uniform(5, 2), PartialColoring(5, 2),
        ))


def test_full_coloring_c4_plain():
    g = cycle(4)
    lists = ListAssignment.of([[0, 1]] * 4)
    out = dominating_full_coloring(DominationInstance(g, lists, PartialColoring(4, 2)))
    assert out.is_total() and is_proper_list_coloring(g, lists, out)


def test_full_coloring_c4_dominating():
    g = cycle(4)
    lists = ListAssignment.of([[0, 1]] * 4)
    seed = PartialColoring(4, 2, [0, None, 0, None])
    out = dominating_full_coloring(DominationInstance(g, lists, seed))
    assert out.count_of(0) == 2
    assert out.as_list() in ([0, 1, 0, 1], [1, 0, 1, 0])
    assert out.as_list() == [0, 1, 0, 1]


def test_large_list_shortcut():
    g = path(3)
    lists = ListAssignment.of([[0], [0, 1, 2], [1]])
    inst = DominationInstance(g, lists, PartialColoring(3, 3))
    out = large_list_shortcut(inst)
    assert out is not None and out.is_total()
    assert is_proper_list_coloring(g, lists, out)
    # all lists exactly degree-sized: shortcut does not apply
    g2 = cycle(4)
    inst2 = DominationInstance(
        g2, ListAssignment.of([[0, 1]] * 4), PartialColoring(4, 2)
    )
    assert large_list_shortcut(inst2) is None
    # single vertex with a nonempty list is colored directly
    g3 = build_graph(1, [])
    out3 = large_list_shortcut(DominationInstance(
        g3, ListAssignment.of([[2]]), PartialColoring(1, 3)
    ))
    assert out3 is not None and out3.get(0) == 2


def test_unequal_list_swap_construction():
    # 2-connected, not a cycle or clique, equal degrees but unequal lists:
    # exercises the color-shift route with a forced recursion
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    lists = ListAssignment.of([[0, 1, 2], [0, 1], [0, 1, 2], [0, 1]])
    rng = random.Random(5)
    for _ in range(20):
        seed = random_partial_list_coloring(g, lists, 3, rng)
        out = dominating_full_coloring(DominationInstance(g, lists, seed))
        assert out.is_total() and is_proper_list_coloring(g, lists, out)
        assert dominates(out, seed, lists.union_colors())


def test_even_cycle_block():
    g = cycle(6)
    lists = ListAssignment.of([[3, 5]] * 6)
    seed = PartialColoring(6, 6, [3, None, None, None, None, None])
    out = dominating_full_coloring(DominationInstance(g, lists, seed))
    assert out.is_total() and is_proper_list_coloring(g, lists, out)
    assert out.count_of(3) == 3


def test_regular_block_base_case():
    # complete bipartite K_{3,3} is 3-regular, 2-connected, not a clique or
    # odd cycle; equal 3-lists drive the exhaustive regular-block search
    g = build_graph(6, [(a, 3 + b) for a in range(3) for b in range(3)])
    lists = ListAssignment.of([[0, 1, 2]] * 6)
    seed = PartialColoring(6, 3, [0, None, None, 1, None, 2])
    out = dominating_full_coloring(DominationInstance(g, lists, seed))
    assert out.is_total() and is_proper_list_coloring(g, lists, out)
    assert dominates(out, seed, [0, 1, 2])


def test_exhaustive_small_graphs_against_oracle():
    checked = 0
    for n in range(2, 7):
        for g in canonical_graphs(n):
            if len(_components_local(g)) != 1:
                continue
            if is_gallai_tree(g, range(g.n)):
                continue
            for sd in range(8):
                rng = random.Random(n * 997 + sd)
                lists = random_degree_lists(g, rng)
                k = max(lists.max_color() + 1, 1)
                seed = random_partial_list_coloring(g, lists, k, rng)
                inst = DominationInstance(g, lists, seed)
                out = dominating_full_coloring(inst)
                assert out.is_total()
                assert is_proper_list_coloring(g, lists, out)
                assert dominates(out, seed, lists.union_colors())
                assert domination_exists(g, lists, seed)
                checked += 1
    assert checked >= 500


def test_recursion_depth_linear():
    # long even cycle: recursion peels one vertex per level
    g = cycle(40)
    lists = ListAssignment.of([[0, 1]] * 40)
    out = dominating_full_coloring(DominationInstance(g, lists, PartialColoring(40, 2)))
    assert out.is_total() and is_proper(g, out)
