"""Local recoloring dynamics that drive a proper coloring toward equitable
class sizes for palettes of size at least max degree + 1.

The engine repeatedly applies small recoloring moves (domains of up to three
vertices inside one component).  A move is *admissible* when it keeps the
coloring proper, some strictly growing class starts strictly below every
strictly shrinking class, and after the move that witness class is still no
larger than any shrinking class.  The last condition rules out overshoot
swaps that could cycle; it is exactly what keeps the class-size distribution
monotone in the more-equitable order, so the convergence ledger's budget
bounds the total movement and hence the number of steps.

The fast path scans three structured move patterns (single vertex into a
minimum class, solo-neighbor pair, solo-neighbor triple with a spare color).
If none applies while the class gap is at least 2, the driver escalates to
exhaustive search over connected domains of growing size, then to restarts
from fresh randomized greedy colorings, and finally reports a stall rather
than guessing.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .colorings import PartialColoring, greedy_extend_full, is_proper, palette_size
from .distributions import (
    ColorDistribution,
    ConvergenceLedger,
    discrepancy,
    d_plus as dist_d_plus,
    is_more_equitable,
    l1_distance,
)
from .errors import (
    ImproperSeed,
    NotSeparated,
    OutOfRange,
    PaletteTooSmall,
    SignatureMismatch,
    Stalled,
    UnacceptableMove,
    debug_checks_enabled,
)
from .graphs import Graph, component_of


@dataclass(frozen=True)
class RecoloringMove:
    """Finite partial recoloring with a nonempty connected domain."""

    assignments: tuple[tuple[int, int], ...]  # sorted (vertex, color) pairs

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.assignments)

    @property
    def size(self) -> int:
        return len(self.assignments)

    def color_of(self, v: int) -> Optional[int]:
        for u, c in self.assignments:
            if u == v:
                return c
        return None

    def as_dict(self) -> dict[int, int]:
        return dict(self.assignments)


def make_move(g: Graph, assignments: dict[int, int]) -> RecoloringMove:
    """Validated move: nonempty domain inside a single connected component."""
    if not assignments:
        raise OutOfRange("recoloring move must have a nonempty domain")
    for v in assignments:
        if not (0 <= v < g.n):
            raise OutOfRange(f"vertex {v} outside range")
    dom = sorted(assignments)
    comp = component_of(g, dom[0])
    if any(v not in comp for v in dom):
        raise OutOfRange("move domain spans more than one connected component")
    return RecoloringMove(tuple((v, assignments[v]) for v in dom))


def apply_move(f: PartialColoring, move: RecoloringMove) -> PartialColoring:
    out = f.copy()
    for v, c in move.assignments:
        out.assign(v, c)
    return out


def delta_alpha(f: PartialColoring, move: RecoloringMove, alpha: int) -> int:
    """Signed count change of class alpha within the move's domain."""
    gained = sum(1 for _, c in move.assignments if c == alpha)
    lost = sum(1 for v, _ in move.assignments if f.get(v) == alpha)
    return gained - lost


def move_deltas(f: PartialColoring, move: RecoloringMove) -> list[int]:
    out = [0] * f.k
    for v, c in move.assignments:
        out[c] += 1
        old = f.get(v)
        if old is not None:
            out[old] -= 1
    return out


def d_plus(f: PartialColoring, move: RecoloringMove) -> frozenset[int]:
    deltas = move_deltas(f, move)
    return frozenset(a for a in range(f.k) if deltas[a] > 0)


def d_minus(f: PartialColoring, move: RecoloringMove) -> frozenset[int]:
    deltas = move_deltas(f, move)
    return frozenset(a for a in range(f.k) if deltas[a] < 0)


def is_acceptable(g: Graph, f: PartialColoring, move: RecoloringMove) -> bool:
    """True iff applying the move keeps the coloring proper.

    Only the domain and its neighborhood are inspected.
    """
    new = move.as_dict()
    for v, c in move.assignments:
        for w in g.adjacency(v):
            if new.get(w, f.get(w)) == c:
                return False
    return True


def improves(g: Graph, f: PartialColoring, move: RecoloringMove) -> Optional[int]:
    """Witness color for the improvement predicate, if any.

    A witness is a strictly growing class whose current count is strictly
    below every strictly shrinking class.  Among valid witnesses the one
    with minimum count (ties: smallest color) is returned.
    """
    if not is_acceptable(g, f, move):
        return None
    deltas = move_deltas(f, move)
    counts = f.counts()
    losing = [b for b in range(f.k) if deltas[b] < 0]
    cap = min(counts[b] for b in losing) if losing else None
    witnesses = [
        a for a in range(f.k)
        if deltas[a] > 0 and (cap is None or counts[a] < cap)
    ]
    if not witnesses:
        return None
    return min(witnesses, key=lambda a: (counts[a], a))


def admissible_witness(g: Graph, f: PartialColoring, move: RecoloringMove) -> Optional[int]:
    """Witness for admissibility: improvement plus no-overshoot.

    The witness class, after the move, must still be no larger than every
    strictly shrinking class after the move.
    """
    if not is_acceptable(g, f, move):
        return None
    deltas = move_deltas(f, move)
    counts = f.counts()
    losing = [b for b in range(f.k) if deltas[b] < 0]
    pre_cap = min(counts[b] for b in losing) if losing else None
    post_cap = min(counts[b] + deltas[b] for b in losing) if losing else None
    witnesses = [
        a for a in range(f.k)
        if deltas[a] > 0
        and (pre_cap is None or counts[a] < pre_cap)
        and (post_cap is None or counts[a] + deltas[a] <= post_cap)
    ]
    if not witnesses:
        return None
    return min(witnesses, key=lambda a: (counts[a], a))


@dataclass(frozen=True)
class MovePolicy:
    """Search policy for a single move lookup."""

    m: int = 3                 # domain size cap
    patterns_first: bool = True


def _solo_targets(g: Graph, f: PartialColoring, y: int, min_colors: set[int]) -> list[int]:
    """Vertices x adjacent to y, in a non-minimum class, for which y is the
    unique neighbor colored f(y)."""
    alpha = f.get(y)
    out = []
    for x in g.adjacency(y):
        if f.get(x) in min_colors:
            continue
        if sum(1 for w in g.adjacency(x) if f.get(w) == alpha) == 1:
            out.append(x)
    return out


def _pattern_moves(g: Graph, f: PartialColoring) -> Iterable[RecoloringMove]:
    """Candidate moves from the three structured patterns, in scan order.

    Every yielded move still goes through the admissibility check; the
    generators only have to be cheap and deterministic.
    """
    counts = f.counts()
    a = min(counts)
    min_colors = {c for c in range(f.k) if counts[c] == a}

    # pattern 1: move one vertex of an overfull class into a minimum class
    for x in range(g.n):
        beta = f.get(x)
        if beta is None or counts[beta] < a + 2:
            continue
        taken = {f.get(w) for w in g.adjacency(x)}
        for alpha in sorted(min_colors):
            if alpha != beta and alpha not in taken:
                yield RecoloringMove(((x, alpha),))
                break

    # patterns 2 and 3 need the solo-neighbor structure around minimum classes
    if len(min_colors) == 0:
        return
    for y in range(g.n):
        alpha = f.get(y)
        if alpha not in min_colors:
            continue
        solo = _solo_targets(g, f, y, min_colors)
        if not solo:
            continue
        y_taken = {f.get(w) for w in g.adjacency(y)}
        # pattern 2: x takes y's color, y slides into another minimum class
        for x in solo:
            if counts[f.get(x)] < a + 2:
                continue
            for alpha2 in sorted(min_colors):
                if alpha2 != alpha and alpha2 not in y_taken:
                    pairs = tuple(sorted(((x, alpha), (y, alpha2))))
                    yield RecoloringMove(pairs)
                    break
        # pattern 3: two non-adjacent solo targets take y's color while y
        # moves to a color absent from its neighborhood outside the pair
        for x, x2 in combinations(sorted(solo), 2):
            if g.has_edge(x, x2):
                continue
            nbr_colors_outside = {
                f.get(w) for w in g.adjacency(y) if w not in (x, x2)
            }
            found_gamma = False
            for gamma in range(f.k):
                if gamma == alpha or gamma in nbr_colors_outside:
                    continue
                found_gamma = True
                triple = tuple(sorted(((x, alpha), (x2, alpha), (y, gamma))))
                yield RecoloringMove(triple)
                break
            # no spare color forces a neighbor in every other class beyond
            # the pair itself, so the degree must exceed the palette; this
            # can only happen when the palette is at most the max degree
            assert found_gamma or g.degree(y) >= f.k + 1


def _connected_domains(g: Graph, m: int) -> Iterable[tuple[int, ...]]:
    """All connected vertex sets of size <= m, each exactly once.  Vertices
    skipped at a branch stay excluded below it."""

    def grow(members: tuple[int, ...], ext: list[int], banned: frozenset[int], minv: int):
        yield tuple(sorted(members))
        if len(members) == m:
            return
        for i, u in enumerate(ext):
            new_banned = banned | frozenset(ext[:i])
            new_ext = ext[i + 1:] + [
                w for w in g.adjacency(u)
                if w > minv and w not in members and w not in ext
                and w not in new_banned
            ]
            yield from grow(members + (u,), new_ext, new_banned, minv)

    for v in range(g.n):
        yield from grow((v,), [u for u in g.adjacency(v) if u > v], frozenset(), v)


def _exhaustive_move(
    g: Graph,
    f: PartialColoring,
    m: int,
    ledger_a: Optional[int] = None,
) -> Optional[RecoloringMove]:
    """First admissible move over all connected domains of size <= m.

    When ledger_a is given, moves must additionally satisfy the per-step
    ledger hypothesis (total count movement at most ledger_a times the
    smallest gain over growing classes), so oversized escalation moves can
    never poison the ledger.
    """
    k = f.k
    for dom in _connected_domains(g, m):
        current = tuple(f.get(v) for v in dom)
        for colors in product(range(k), repeat=len(dom)):
            if colors == current:
                continue
            move = RecoloringMove(tuple(zip(dom, colors)))
            if admissible_witness(g, f, move) is None:
                continue
            if ledger_a is not None:
                deltas = move_deltas(f, move)
                gains = [d for d in deltas if d > 0]
                if gains and sum(abs(d) for d in deltas) > ledger_a * min(gains):
                    continue
            return move
    return None


def find_improving_move(
    g: Graph, f: PartialColoring, policy: MovePolicy = MovePolicy()
) -> Optional[RecoloringMove]:
    """First admissible move under the policy, scanning patterns before the
    exhaustive fallback.  None when no admissible move of size <= policy.m
    exists."""
    if not f.is_total():
        raise ImproperSeed("move search requires a total coloring")
    if policy.patterns_first and policy.m >= 1:
        for move in _pattern_moves(g, f):
            if move.size <= policy.m and admissible_witness(g, f, move) is not None:
                return move
    return _exhaustive_move(g, f, policy.m)


@dataclass(frozen=True)
class Batch:
    """Separated moves sharing one (growing, shrinking) signature."""

    moves: tuple[RecoloringMove, ...]
    grows: frozenset[int]
    shrinks: frozenset[int]
    m: int

    @property
    def size(self) -> int:
        return len(self.moves)


def select_separated_batch(
    g: Graph,
    f: PartialColoring,
    candidates: Sequence[RecoloringMove],
) -> Batch:
    """Greedy maximal sub-collection with pairwise disjoint, pairwise
    non-adjacent domains, preserving input order.

    All candidates must share one signature (same growing and shrinking
    color sets with respect to f); otherwise SignatureMismatch is raised.
    """
    if not candidates:
        return Batch((), frozenset(), frozenset(), 0)
    sig = (d_plus(f, candidates[0]), d_minus(f, candidates[0]))
    if not sig[0] or not sig[1]:
        raise SignatureMismatch(
            "batch signature needs nonempty growing and shrinking color sets"
        )
    m = max(mv.size for mv in candidates)
    kept: list[RecoloringMove] = []
    blocked: set[int] = set()
    for mv in candidates:
        if (d_plus(f, mv), d_minus(f, mv)) != sig:
            raise SignatureMismatch("candidates do not share one signature")
        dom = mv.domain
        if any(v in blocked for v in dom):
            continue
        if any(w in blocked for v in dom for w in g.adjacency(v)):
            continue
        kept.append(mv)
        blocked.update(dom)
    return Batch(tuple(kept), sig[0], sig[1], m)


def _check_batch(g: Graph, f: PartialColoring, batch: Batch) -> None:
    seen: set[int] = set()
    for mv in batch.moves:
        if not is_acceptable(g, f, mv):
            raise UnacceptableMove(f"move on {mv.domain} breaks properness")
        for v in mv.domain:
            if v in seen:
                raise NotSeparated(f"vertex {v} in two move domains")
            if any(w in seen for w in g.adjacency(v)):
                raise NotSeparated(f"edge between move domains at vertex {v}")
        seen.update(mv.domain)


def apply_monotone_prefix(
    g: Graph, f: PartialColoring, batch: Batch
) -> tuple[PartialColoring, int]:
    """Apply the longest batch prefix whose result stays weakly more
    equitable than f's distribution; return the new coloring and the prefix
    length."""
    _check_batch(g, f, batch)
    if not batch.moves:
        return f.copy(), 0
    base = ColorDistribution.from_coloring(f)
    counts = list(f.counts())
    best = 0
    for t, mv in enumerate(batch.moves, start=1):
        for c, d in enumerate(move_deltas(f, mv)):
            counts[c] += d
        if is_more_equitable(base, ColorDistribution(counts), strict=False):
            best = t
    out = f.copy()
    for mv in batch.moves[:best]:
        for v, c in mv.assignments:
            out.assign(v, c)
    after = ColorDistribution.from_coloring(out)
    l1 = l1_distance(base, after)
    changed = sum(
        1 for v in range(g.n) if out.get(v) != f.get(v)
    )
    m = batch.m if batch.m else 1
    assert Fraction(changed, g.n) <= m * l1, "distance bound violated"
    for alpha in dist_d_plus(base, after):
        gain = after.value(alpha) - base.value(alpha)
        assert l1 <= 2 * m * gain, "l1-vs-gain bound violated"
    return out, best


# ---------------------------------------------------------------------------
# driver


@dataclass(frozen=True)
class DriverConfig:
    m_max: int = 6
    retries: int = 8
    batch_mode: bool = False
    seed: int = 0
    a_param: int = 6


@dataclass
class TraceRecord:
    kind: str                      # "move" | "batch" | "restart"
    step: int
    vertices: tuple[int, ...]
    new_colors: tuple[int, ...]
    witness: Optional[int]
    counts: tuple[int, ...]
    l1: Fraction
    cumulative: Fraction

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "step": self.step,
            "vertices": list(self.vertices),
            "new_colors": list(self.new_colors),
            "witness": self.witness,
            "counts": list(self.counts),
            "l1": str(self.l1),
            "cumulative": str(self.cumulative),
        }


@dataclass
class DynamicsTrace:
    """Observability record for one driver run."""

    n: int
    k: int
    initial_counts: tuple[int, ...]
    records: list[TraceRecord] = field(default_factory=list)
    ledgers: list[ConvergenceLedger] = field(default_factory=list)

    @property
    def ledger(self) -> ConvergenceLedger:
        return self.ledgers[-1]

    @property
    def step_count(self) -> int:
        return sum(1 for r in self.records if r.kind != "restart")

    @property
    def restarts(self) -> int:
        return sum(1 for r in self.records if r.kind == "restart")

    def to_jsonl(self) -> str:
        header = {
            "kind": "header",
            "n": self.n,
            "k": self.k,
            "initial_counts": list(self.initial_counts),
        }
        lines = [json.dumps(header)]
        lines.extend(json.dumps(r.to_dict()) for r in self.records)
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["step", "disc", "l1", "cumulative"])
        k = self.k
        for r in self.records:
            total = sum(r.counts)
            disc = max(abs(Fraction(c, total) - Fraction(1, k)) for c in r.counts)
            writer.writerow([r.step, float(disc), float(r.l1), float(r.cumulative)])
        return buf.getvalue()


def _distribution(f: PartialColoring) -> ColorDistribution:
    return ColorDistribution.from_coloring(f)


def _gather_signature_batch(
    g: Graph, f: PartialColoring, cap: int = 64
) -> Optional[Batch]:
    """Collect admissible pattern moves, group them by signature, and return
    a separated batch from the largest group."""
    groups: dict[tuple[frozenset[int], frozenset[int]], list[RecoloringMove]] = {}
    for move in _pattern_moves(g, f):
        if admissible_witness(g, f, move) is None:
            continue
        sig = (d_plus(f, move), d_minus(f, move))
        groups.setdefault(sig, []).append(move)
        if sum(len(v) for v in groups.values()) >= cap:
            break
    if not groups:
        return None
    sig, moves = max(groups.items(), key=lambda kv: len(kv[1]))
    return select_separated_batch(g, f, moves)


def equitable_k_coloring(
    g: Graph,
    k,
    f0: Optional[PartialColoring] = None,
    config: DriverConfig = DriverConfig(),
) -> tuple[PartialColoring, DynamicsTrace]:
    """Total proper k-coloring with class sizes within 1 of each other,
    for k >= max degree + 1, plus the full dynamics trace.

    The trace's ledger certifies the cumulative movement budget with A = 6;
    the driver additionally asserts that the fraction of recolored vertices
    is at most (1+A)^(k+1)/(2A) times the initial discrepancy.
    """
    size = palette_size(k)
    if size <= g.max_degree:
        raise PaletteTooSmall(
            f"need k >= max degree + 1 = {g.max_degree + 1}, got {size}"
        )
    if f0 is not None:
        if not is_proper(g, f0):
            raise ImproperSeed("initial coloring is not proper")
        if f0.k != size:
            raise ImproperSeed(f"initial coloring uses palette {f0.k}, expected {size}")
        f = f0 if f0.is_total() else greedy_extend_full(g, size, f0)
        f = f.copy()
    else:
        f = greedy_extend_full(g, size)
    if g.n == 0:
        trace = DynamicsTrace(0, size, tuple([0] * size))
        trace.ledgers.append(ConvergenceLedger(Fraction(config.a_param), size, Fraction(0)))
        return f, trace

    trace = DynamicsTrace(g.n, size, f.counts())
    a_param = Fraction(config.a_param)
    debug = debug_checks_enabled()

    start = f.copy()
    dist = _distribution(f)
    ledger = ConvergenceLedger.for_initial(a_param, dist)
    trace.ledgers.append(ledger)
    # each applied step moves at least one vertex between classes, so its
    # l1 step is at least 2/n and the ledger budget caps the step count
    step_cap = ledger.bound() * g.n / 2
    attempt = 0
    steps_in_segment = 0

    while f.gap() >= 2:
        if steps_in_segment > step_cap:
            raise Stalled(
                "step cap exceeded while the ledger accepted every step; "
                "this indicates a driver bug",
                coloring=f, gap=f.gap(),
            )
        applied = False
        if config.batch_mode:
            batch = _gather_signature_batch(g, f)
            if batch is not None and batch.size > 0:
                new_f, t = apply_monotone_prefix(g, f, batch)
                if t > 0:
                    new_dist = _distribution(new_f)
                    witnesses = sorted(
                        dist_d_plus(dist, new_dist),
                        key=lambda c: (new_f.counts()[c], c),
                    )
                    witness = witnesses[0] if witnesses else None
                    ledger.record(dist, new_dist, witness)
                    changed = [v for v in range(g.n) if new_f.get(v) != f.get(v)]
                    trace.records.append(TraceRecord(
                        "batch", len(trace.records), tuple(changed),
                        tuple(new_f.get(v) for v in changed), witness,
                        new_f.counts(), l1_distance(dist, new_dist),
                        ledger.cumulative,
                    ))
                    f, dist = new_f, new_dist
                    steps_in_segment += 1
                    applied = True
        if not applied:
            move = find_improving_move(g, f, MovePolicy(m=3))
            if move is None:
                for m in range(4, config.m_max + 1):
                    move = _exhaustive_move(g, f, m, ledger_a=config.a_param)
                    if move is not None:
                        break
            if move is None:
                attempt += 1
                if attempt > config.retries:
                    raise Stalled(
                        f"no admissible move up to size {config.m_max} after "
                        f"{config.retries} restarts",
                        coloring=f, gap=f.gap(),
                    )
                order = list(range(g.n))
                random.Random(config.seed * 1_000_003 + attempt).shuffle(order)
                f = greedy_extend_full(g, size, order=order)
                start = f.copy()
                dist = _distribution(f)
                ledger = ConvergenceLedger.for_initial(a_param, dist)
                trace.ledgers.append(ledger)
                step_cap = ledger.bound() * g.n / 2
                steps_in_segment = 0
                trace.records.append(TraceRecord(
                    "restart", len(trace.records), (), (), None,
                    f.counts(), Fraction(0), Fraction(0),
                ))
                continue
            witness = admissible_witness(g, f, move)
            new_f = apply_move(f, move)
            new_dist = _distribution(new_f)
            ledger.record(dist, new_dist, witness)
            if debug:
                assert is_proper(g, new_f), "applied move broke properness"
                assert is_more_equitable(dist, new_dist, strict=True)
            trace.records.append(TraceRecord(
                "move", len(trace.records), move.domain,
                tuple(c for _, c in move.assignments), witness,
                new_f.counts(), l1_distance(dist, new_dist), ledger.cumulative,
            ))
            f, dist = new_f, new_dist
            steps_in_segment += 1

    assert f.is_total() and f.gap() <= 1
    # stability: recolored fraction within the guaranteed budget of the
    # (possibly restarted) segment start
    changed = sum(1 for v in range(g.n) if f.get(v) != start.get(v))
    start_disc = discrepancy(_distribution(start))
    budget = Fraction((1 + config.a_param) ** (size + 1), 2) * start_disc
    assert Fraction(changed, g.n) <= budget, "stability bound violated"
    return f, trace
