import random

import pytest

from equicolor import ListAssignment, PartialColoring, build_graph


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def star(leaves):
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def bowtie():
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def complete_bipartite(a, b):
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return build_graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def random_partial_list_coloring(g, lists, k, rng, density=0.5):
    """Proper partial coloring within the lists, seeded."""
    seed = PartialColoring(g.n, k)
    for v in range(g.n):
        if rng.random() < density:
            options = [
                c for c in lists[v]
                if c < k and all(seed.get(w) != c for w in g.adjacency(v))
            ]
            if options:
                seed.assign(v, rng.choice(sorted(options)))
    return seed


def random_degree_lists(g, rng, extra_max=2, spread=2):
    """Seeded degree-list assignment (every list at least the degree)."""
    top = g.max_degree + extra_max + spread
    return ListAssignment.of([
        rng.sample(range(top), min(top, g.degree(v) + rng.randint(0, extra_max)))
        for v in range(g.n)
    ])


@pytest.fixture
def rng():
    return random.Random(20260809)
