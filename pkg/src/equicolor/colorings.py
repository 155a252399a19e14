"""Partial colorings, list assignments, greedy maximal constructions, and
the per-color-count domination order."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ImproperSeed, NotIndependent, OutOfRange, PaletteTooSmall
from .graphs import Graph


@dataclass(frozen=True)
class Palette:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise OutOfRange(f"palette size must be >= 1, got {self.size}")

    def colors(self) -> range:
        return range(self.size)


def palette_size(k) -> int:
    size = k.size if isinstance(k, Palette) else int(k)
    if size < 1:
        raise OutOfRange(f"palette size must be >= 1, got {size}")
    return size


class PartialColoring:
    """Map from a subset of vertices to colors 0..k-1 with cached class counts."""

    __slots__ = ("k", "_assign", "_counts", "_domain_size")

    def __init__(self, n: int, k, assignment: Optional[Sequence[Optional[int]]] = None):
        self.k = palette_size(k)
        self._assign: list[Optional[int]] = [None] * n if assignment is None else list(assignment)
        if len(self._assign) != n:
            raise OutOfRange(f"assignment length {len(self._assign)} != n {n}")
        self._counts = [0] * self.k
        self._domain_size = 0
        for c in self._assign:
            if c is None:
                continue
            if not (0 <= c < self.k):
                raise OutOfRange(f"color {c} outside palette of size {self.k}")
            self._counts[c] += 1
            self._domain_size += 1

    @property
    def n(self) -> int:
        return len(self._assign)

    @property
    def domain_size(self) -> int:
        return self._domain_size

    def get(self, v: int) -> Optional[int]:
        return self._assign[v]

    def is_assigned(self, v: int) -> bool:
        return self._assign[v] is not None

    def assign(self, v: int, c: int) -> None:
        if not (0 <= c < self.k):
            raise OutOfRange(f"color {c} outside palette of size {self.k}")
        old = self._assign[v]
        if old is not None:
            self._counts[old] -= 1
            self._domain_size -= 1
        self._assign[v] = c
        self._counts[c] += 1
        self._domain_size += 1

    def unassign(self, v: int) -> None:
        old = self._assign[v]
        if old is not None:
            self._counts[old] -= 1
            self._domain_size -= 1
            self._assign[v] = None

    def counts(self) -> tuple[int, ...]:
        return tuple(self._counts)

    def count_of(self, c: int) -> int:
        return self._counts[c] if 0 <= c < self.k else 0

    def domain(self) -> list[int]:
        return [v for v, c in enumerate(self._assign) if c is not None]

    def is_total(self) -> bool:
        return self._domain_size == len(self._assign)

    def gap(self) -> int:
        return max(self._counts) - min(self._counts)

    def as_list(self) -> list[Optional[int]]:
        return list(self._assign)

    def copy(self) -> "PartialColoring":
        return PartialColoring(self.n, self.k, self._assign)

    def restricted_to(self, vertices: Iterable[int]) -> "PartialColoring":
        keep = set(vertices)
        return PartialColoring(
            self.n, self.k,
            [c if v in keep else None for v, c in enumerate(self._assign)],
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PartialColoring)
            and self.k == other.k
            and self._assign == other._assign
        )

    def __repr__(self) -> str:
        return f"PartialColoring(n={self.n}, k={self.k}, dom={self._domain_size})"


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex finite color sets."""

    lists: tuple[frozenset[int], ...]

    @classmethod
    def uniform(cls, n: int, k) -> "ListAssignment":
        full = frozenset(range(palette_size(k)))
        return cls(tuple(full for _ in range(n)))

    @classmethod
    def of(cls, lists: Iterable[Iterable[int]]) -> "ListAssignment":
        return cls(tuple(frozenset(l) for l in lists))

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def union_colors(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for l in self.lists:
            out |= l
        return out

    def max_color(self) -> int:
        u = self.union_colors()
        return max(u) if u else -1

    def is_degree_list(self, g: Graph) -> bool:
        return all(len(self.lists[v]) >= g.degree(v) for v in range(g.n))

    def restrict(self, v: int, forbidden: Iterable[int]) -> "ListAssignment":
        lists = list(self.lists)
        lists[v] = lists[v] - frozenset(forbidden)
        return ListAssignment(tuple(lists))


def is_proper(g: Graph, f: PartialColoring) -> bool:
    """No edge with both endpoints assigned the same color."""
    for u in range(g.n):
        cu = f.get(u)
        if cu is None:
            continue
        for w in g.adjacency(u):
            if w > u and f.get(w) == cu:
                return False
    return True


def is_proper_list_coloring(g: Graph, lists: ListAssignment, f: PartialColoring) -> bool:
    return is_proper(g, f) and all(
        f.get(v) in lists[v] for v in range(g.n) if f.is_assigned(v)
    )


def _check_seed(g: Graph, lists: ListAssignment, seed: PartialColoring) -> None:
    if seed.n != g.n:
        raise ImproperSeed(f"seed covers {seed.n} vertices, graph has {g.n}")
    if not is_proper(g, seed):
        raise ImproperSeed("seed coloring is not proper")
    for v in range(g.n):
        c = seed.get(v)
        if c is not None and c not in lists[v]:
            raise ImproperSeed(f"seed color {c} at vertex {v} not in its list")


def greedy_maximal(
    g: Graph,
    lists: ListAssignment,
    seed: PartialColoring,
    order: Optional[Sequence[int]] = None,
) -> PartialColoring:
    """Inclusion-maximal proper partial list coloring extending the seed.

    Visits uncolored vertices in the given order (identity by default) and
    assigns the smallest list color not present on already-colored
    neighbors.  A vertex left uncolored has every list color represented
    in its colored neighborhood, so the result is inclusion-maximal.
    """
    _check_seed(g, lists, seed)
    out = seed.copy()
    for v in (range(g.n) if order is None else order):
        if out.is_assigned(v):
            continue
        taken = {out.get(w) for w in g.adjacency(v)}
        free = [c for c in lists[v] if c not in taken]
        if free:
            out.assign(v, min(free))
    return out


def greedy_extend_full(
    g: Graph,
    k,
    seed: Optional[PartialColoring] = None,
    order: Optional[Sequence[int]] = None,
) -> PartialColoring:
    """Total proper k-coloring extending the seed; needs k >= max degree + 1."""
    size = palette_size(k)
    if size <= g.max_degree:
        raise PaletteTooSmall(
            f"need k >= max degree + 1 = {g.max_degree + 1}, got {size}"
        )
    if seed is None:
        seed = PartialColoring(g.n, size)
    out = greedy_maximal(g, ListAssignment.uniform(g.n, size), seed, order)
    assert out.is_total(), "greedy cannot block when every list exceeds the degree"
    return out


def maximal_independent_superset(g: Graph, j: Iterable[int]) -> frozenset[int]:
    """Maximal independent set containing the given independent set."""
    j = frozenset(j)
    for v in j:
        if not (0 <= v < g.n):
            raise OutOfRange(f"vertex {v} outside range")
        if any(w in j for w in g.adjacency(v)):
            raise NotIndependent(f"input set has an edge at vertex {v}")
    seed = PartialColoring(g.n, 1, [0 if v in j else None for v in range(g.n)])
    colored = greedy_maximal(g, ListAssignment.uniform(g.n, 1), seed)
    return frozenset(v for v in range(g.n) if colored.is_assigned(v))


def dominates(f: PartialColoring, h: PartialColoring, colors: Iterable[int]) -> bool:
    """True iff f's class counts are >= h's for every listed color."""
    return all(f.count_of(a) >= h.count_of(a) for a in colors)
