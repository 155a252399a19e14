"""Immutable finite simple undirected graphs and their structural queries.

Vertices are dense integers 0..n-1.  Graphs are immutable after
construction and safe to share across threads; all hot loops index
plain tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    EmptyGraph,
    NotAComponent,
    OutOfRange,
    SelfLoop,
)


class Graph:
    __slots__ = ("n", "_adj", "_sets", "_degrees", "_edge_count", "_max_degree")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        # internal constructor; use build_graph for validated input
        self.n = n
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._sets = tuple(frozenset(nbrs) for nbrs in self._adj)
        self._degrees = tuple(len(nbrs) for nbrs in self._adj)
        self._edge_count = sum(self._degrees) // 2
        self._max_degree = max(self._degrees, default=0)

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def max_degree(self) -> int:
        return self._max_degree

    def vertices(self) -> range:
        return range(self.n)

    def adjacency(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Return (subgraph, mapping) where mapping[new_id] = old_id."""
        keep = sorted(set(vertices))
        index = {old: new for new, old in enumerate(keep)}
        adj = [[index[w] for w in self._adj[old] if w in index] for old in keep]
        return Graph(len(keep), adj), tuple(keep)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._edge_count})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated simple graph.

    Rejects out-of-range endpoints, self-loops and duplicate edges
    (duplicates signal generator bugs, so they are errors rather than
    silently deduplicated).
    """
    if n < 0:
        raise OutOfRange(f"vertex count must be nonnegative, got {n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) outside vertex range [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, adj)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum vertex."""
    seen = [False] * g.n
    out: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.adjacency(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def component_of(g: Graph, v: int) -> frozenset[int]:
    seen = {v}
    queue = [v]
    while queue:
        u = queue.pop()
        for w in g.adjacency(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal subgraphs without a cut-vertex), cut vertices, and
    the block-cut tree edges (block index, cut vertex)."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    tree_edges: tuple[tuple[int, int], ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Iterative Hopcroft-Tarjan articulation point / biconnected component search.

    Isolated vertices form singleton blocks; bridges form 2-vertex blocks.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[frozenset[int]] = []
    timer = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        if g.degree(root) == 0:
            blocks.append(frozenset((root,)))
            disc[root] = timer
            timer += 1
            continue
        edge_stack: list[tuple[int, int]] = []
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent, next adjacency index)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack.pop()
            nbrs = g.adjacency(v)
            advanced = False
            while i < len(nbrs):
                w = nbrs[i]
                i += 1
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((v, parent, i))
                    stack.append((w, v, 0))
                    advanced = True
                    break
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            # v finished: every tree edge (parent, v) with low[v] >= disc[parent]
            # closes one biconnected component
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    members: set[int] = set()
                    while edge_stack:
                        a, b = edge_stack.pop()
                        members.add(a)
                        members.add(b)
                        if (a, b) == (parent, v):
                            break
                    blocks.append(frozenset(members))
    # a vertex is a cut vertex iff it lies in at least 2 blocks
    count: dict[int, int] = {}
    for b in blocks:
        for v in b:
            count[v] = count.get(v, 0) + 1
    cuts = {v for v, c in count.items() if c >= 2}
    tree_edges = tuple(
        (i, v) for i, b in enumerate(blocks) for v in sorted(b) if v in cuts
    )
    return BlockDecomposition(tuple(blocks), frozenset(cuts), tree_edges)


def _block_is_clique(g: Graph, block: frozenset[int]) -> bool:
    m = sum(1 for v in block for w in g.adjacency(v) if w in block and w > v)
    s = len(block)
    return m == s * (s - 1) // 2


def _block_is_odd_cycle(g: Graph, block: frozenset[int]) -> bool:
    s = len(block)
    if s < 3 or s % 2 == 0:
        return False
    return all(sum(1 for w in g.adjacency(v) if w in block) == 2 for v in block)


def is_gallai_tree(g: Graph, component: Iterable[int]) -> bool:
    """True iff every block of the (connected) component induces a clique or
    an odd cycle.  Single edges count as cliques."""
    comp = frozenset(component)
    if not comp:
        raise NotAComponent("empty vertex set is not a component")
    v0 = min(comp)
    if not (0 <= v0 < g.n):
        raise OutOfRange(f"vertex {v0} outside range")
    if component_of(g, v0) != comp:
        raise NotAComponent(f"{sorted(comp)} is not a connected component")
    sub, mapping = g.induced_subgraph(comp)
    dec = block_decomposition(sub)
    for block in dec.blocks:
        if _block_is_clique(sub, block) or _block_is_odd_cycle(sub, block):
            continue
        return False
    return True


def contains_clique(g: Graph, q: int) -> bool:
    """True iff some q vertices are pairwise adjacent.

    Neighborhood-restricted branch and bound; fine for q up to around the
    max degree plus one.
    """
    if q < 1:
        raise OutOfRange(f"clique size must be >= 1, got {q}")
    if q == 1:
        return g.n >= 1
    if q == 2:
        return g.edge_count >= 1
    order = sorted(range(g.n), key=g.degree, reverse=True)

    def extend(size: int, candidates: list[int]) -> bool:
        if size == q:
            return True
        if size + len(candidates) < q:
            return False
        for i, v in enumerate(candidates):
            if g.degree(v) < q - 1:
                continue
            nxt = [w for w in candidates[i + 1:] if g.has_edge(v, w)]
            if extend(size + 1, nxt):
                return True
        return False

    eligible = [v for v in order if g.degree(v) >= q - 1]
    return extend(0, eligible)


def average_degree(g: Graph) -> Fraction:
    """Exact average degree 2|E|/|V|."""
    if g.n == 0:
        raise EmptyGraph("average degree of the empty graph is undefined")
    return Fraction(2 * g.edge_count, g.n)
