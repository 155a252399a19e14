"""Brute-force ground truth on tiny instances.

Everything here is deliberately naive: exhaustive enumeration with early
exits, independent of the engine code it cross-checks.  The module also
provides labeled and up-to-isomorphism atlases of small graphs for the
exhaustive verification sweeps.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Optional

from .colorings import ListAssignment, PartialColoring
from .errors import BudgetExceeded
from .graphs import Graph, build_graph


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 10
    max_palette: int = 6
    max_list_size: int = 8
    time_cap_s: Optional[float] = None

    def check_graph(self, g: Graph) -> None:
        if g.n > self.max_vertices:
            raise BudgetExceeded(f"{g.n} vertices exceed cap {self.max_vertices}")

    def check_palette(self, k: int) -> None:
        if k > self.max_palette:
            raise BudgetExceeded(f"palette {k} exceeds cap {self.max_palette}")

    def check_lists(self, lists: ListAssignment) -> None:
        worst = max((len(l) for l in lists.lists), default=0)
        if worst > self.max_list_size:
            raise BudgetExceeded(f"list size {worst} exceeds cap {self.max_list_size}")

    def deadline(self) -> Optional[float]:
        return None if self.time_cap_s is None else time.monotonic() + self.time_cap_s


def _check_deadline(deadline: Optional[float]) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded("time cap exhausted")


def enumerate_proper_colorings(
    g: Graph,
    palette: Optional[int] = None,
    lists: Optional[ListAssignment] = None,
    budget: OracleBudget = OracleBudget(),
) -> Iterator[tuple[int, ...]]:
    """All total proper colorings, lexicographic by assignment vector.

    Exactly one of palette (uniform colors) or lists must be given.
    """
    if (palette is None) == (lists is None):
        raise ValueError("pass exactly one of palette or lists")
    budget.check_graph(g)
    if palette is not None:
        budget.check_palette(palette)
        allowed = [tuple(range(palette)) for _ in range(g.n)]
    else:
        budget.check_lists(lists)
        allowed = [tuple(sorted(lists[v])) for v in range(g.n)]
    deadline = budget.deadline()
    n = g.n
    if n == 0:
        yield ()
        return
    assign: list[int] = []

    def backtrack(v: int) -> Iterator[tuple[int, ...]]:
        _check_deadline(deadline)
        if v == n:
            yield tuple(assign)
            return
        for c in allowed[v]:
            if any(w < v and assign[w] == c for w in g.adjacency(v)):
                continue
            assign.append(c)
            yield from backtrack(v + 1)
            assign.pop()

    yield from backtrack(0)


def count_proper_colorings(g: Graph, k: int, budget: OracleBudget = OracleBudget()) -> int:
    """Number of proper k-colorings, with closed forms for paths and cycles."""
    shape = _path_or_cycle(g)
    if shape == "path" and g.n >= 1:
        return k * (k - 1) ** (g.n - 1)
    if shape == "cycle":
        return (k - 1) ** g.n + (k - 1) * (1 if g.n % 2 == 0 else -1)
    return sum(1 for _ in enumerate_proper_colorings(g, palette=k, budget=budget))


def _path_or_cycle(g: Graph) -> Optional[str]:
    if g.n == 0 or len(_components_local(g)) != 1:
        return None
    degs = sorted(g.degree(v) for v in range(g.n))
    if g.n >= 3 and all(d == 2 for d in degs):
        return "cycle"
    if g.n == 1 and g.edge_count == 0:
        return "path"
    if g.n >= 2 and degs[:2] == [1, 1] and all(d == 2 for d in degs[2:]):
        return "path"
    return None


def _components_local(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(comp)
    return out


def equitable_exists(g: Graph, k: int, budget: OracleBudget = OracleBudget()) -> bool:
    """True iff some proper k-coloring has class sizes within 1 of each
    other (empty classes count)."""
    budget.check_graph(g)
    budget.check_palette(k)
    deadline = budget.deadline()
    n = g.n
    ceiling = -(-n // k)
    assign: list[int] = []
    counts = [0] * k

    def backtrack(v: int) -> bool:
        _check_deadline(deadline)
        if v == n:
            return max(counts) - min(counts) <= 1
        for c in range(k):
            if counts[c] >= ceiling:
                continue
            if any(w < v and assign[w] == c for w in g.adjacency(v)):
                continue
            assign.append(c)
            counts[c] += 1
            if backtrack(v + 1):
                return True
            counts[c] -= 1
            assign.pop()
        return False

    if n == 0:
        return True
    return backtrack(0)


def domination_exists(
    g: Graph,
    lists: ListAssignment,
    seed: PartialColoring,
    budget: OracleBudget = OracleBudget(),
) -> bool:
    """True iff some total proper list coloring has class counts at least
    the seed's on every color."""
    budget.check_graph(g)
    budget.check_lists(lists)
    deadline = budget.deadline()
    n = g.n
    k = seed.k
    need = [seed.count_of(c) for c in range(k)]
    allowed = [tuple(sorted(c for c in lists[v] if c < k)) for v in range(n)]
    assign: list[int] = []

    def backtrack(v: int) -> bool:
        _check_deadline(deadline)
        deficit = sum(d for d in need if d > 0)
        if deficit > n - v:
            return False
        if v == n:
            return deficit == 0
        for c in allowed[v]:
            if any(w < v and assign[w] == c for w in g.adjacency(v)):
                continue
            assign.append(c)
            need[c] -= 1
            if backtrack(v + 1):
                return True
            need[c] += 1
            assign.pop()
        return False

    return backtrack(0)


def _oracle_connected_domains(g: Graph, m: int) -> list[tuple[int, ...]]:
    """All connected vertex sets of size <= m, each exactly once, sorted by
    (size, members).  Vertices skipped at a branch stay excluded below it."""

    out: list[tuple[int, ...]] = []

    def grow(
        members: tuple[int, ...],
        ext: list[int],
        banned: frozenset[int],
        minv: int,
    ) -> None:
        out.append(tuple(sorted(members)))
        if len(members) == m:
            return
        for i, u in enumerate(ext):
            new_banned = banned | frozenset(ext[:i])
            new_ext = ext[i + 1:] + [
                w for w in g.adjacency(u)
                if w > minv and w not in members and w not in ext
                and w not in new_banned
            ]
            grow(members + (u,), new_ext, new_banned, minv)

    for v in range(g.n):
        grow((v,), [u for u in g.adjacency(v) if u > v], frozenset(), v)
    return sorted(out, key=lambda d: (len(d), d))


def improving_move_exists(
    g: Graph,
    f: PartialColoring,
    m: int,
    budget: OracleBudget = OracleBudget(),
) -> bool:
    """Exhaustive scan over all connected domains of size <= m and all
    recolorings of them; true iff an admissible move exists.

    Admissibility is re-derived from first principles here: the recoloring
    keeps the graph properly colored, some strictly growing class starts
    strictly below every strictly shrinking class, and that class stays no
    larger than any shrinking class after the move.
    """
    budget.check_graph(g)
    budget.check_palette(f.k)
    deadline = budget.deadline()
    k = f.k
    counts = f.counts()
    for dom in _oracle_connected_domains(g, m):
        _check_deadline(deadline)
        current = tuple(f.get(v) for v in dom)
        for colors in product(range(k), repeat=len(dom)):
            if colors == current:
                continue
            new = dict(zip(dom, colors))
            ok = True
            for v, c in new.items():
                for w in g.adjacency(v):
                    if new.get(w, f.get(w)) == c:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            deltas = [0] * k
            for v, c in new.items():
                deltas[c] += 1
                deltas[f.get(v)] -= 1
            losing = [b for b in range(k) if deltas[b] < 0]
            if not losing:
                continue
            pre = min(counts[b] for b in losing)
            post = min(counts[b] + deltas[b] for b in losing)
            if any(
                deltas[a] > 0 and counts[a] < pre and counts[a] + deltas[a] <= post
                for a in range(k)
            ):
                return True
    return False


# ---------------------------------------------------------------------------
# small-graph atlases


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def _vertex_signature(g: Graph, v: int) -> tuple:
    nbr_degs = tuple(sorted(g.degree(w) for w in g.adjacency(v)))
    triangles = sum(
        1 for a, b in combinations(g.adjacency(v), 2) if g.has_edge(a, b)
    )
    return (g.degree(v), triangles, nbr_degs)


def _graph_invariant(g: Graph) -> tuple:
    return (g.n, g.edge_count, tuple(sorted(_vertex_signature(g, v) for v in range(g.n))))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test for tiny graphs."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    sig_g = [_vertex_signature(g, v) for v in range(g.n)]
    sig_h = [_vertex_signature(h, v) for v in range(h.n)]
    if sorted(sig_g) != sorted(sig_h):
        return False
    n = g.n
    order = sorted(range(n), key=lambda v: (sig_g.count(sig_g[v]), -g.degree(v)))
    mapping = [-1] * n
    used = [False] * n

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or sig_g[v] != sig_h[w]:
                continue
            ok = True
            for u in order[:i]:
                if g.has_edge(v, u) != h.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if backtrack(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return backtrack(0)


_ATLAS_CACHE: dict[int, list[Graph]] = {}


def canonical_graphs(n: int) -> list[Graph]:
    """All simple graphs on n vertices up to isomorphism.

    Built by augmenting the (n-1)-atlas with every possible neighborhood of
    a new vertex and deduplicating through invariant buckets plus exact
    isomorphism tests.  Sizes 1, 2, 4, 11, 34, 156, 1044, 12346 for
    n = 1..8.
    """
    if n in _ATLAS_CACHE:
        return _ATLAS_CACHE[n]
    if n <= 0:
        out = [build_graph(0, [])]
    elif n == 1:
        out = [build_graph(1, [])]
    else:
        prev = canonical_graphs(n - 1)
        buckets: dict[tuple, list[Graph]] = {}
        out = []
        for base in prev:
            base_edges = base.edges()
            for mask in range(1 << (n - 1)):
                edges = base_edges + [
                    (i, n - 1) for i in range(n - 1) if mask >> i & 1
                ]
                cand = build_graph(n, edges)
                inv = _graph_invariant(cand)
                bucket = buckets.setdefault(inv, [])
                if any(are_isomorphic(cand, other) for other in bucket):
                    continue
                bucket.append(cand)
                out.append(cand)
    _ATLAS_CACHE[n] = out
    return out


def connected_canonical_graphs(n: int) -> list[Graph]:
    return [g for g in canonical_graphs(n) if len(_components_local(g)) == 1]


def colorings_up_to_color_permutation(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Proper total k-colorings with colors in first-use order, one
    representative per palette-permutation class."""
    n = g.n
    if n == 0:
        yield ()
        return
    assign: list[int] = []

    def backtrack(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(assign)
            return
        limit = min(used + 1, k)
        for c in range(limit):
            if any(w < v and assign[w] == c for w in g.adjacency(v)):
                continue
            assign.append(c)
            yield from backtrack(v + 1, max(used, c + 1))
            assign.pop()

    yield from backtrack(0, 0)
