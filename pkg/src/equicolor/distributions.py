"""Exact-arithmetic color distributions, the more-equitable order, and the
convergence ledger.

A distribution is stored as integer counts over a common positive total, so
every comparison below is exact.  The ledger certifies, step by step, that a
sequence of distributions is monotone in the more-equitable order, that each
step's l1 movement is at most A times the gain of every strictly growing
color, and that the cumulative l1 movement stays within the guaranteed
budget (1+A)^(k+1)/A times the initial discrepancy.  A budget violation is
reported as a driver bug, never silently absorbed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import (
    BoundViolation,
    HypothesisViolation,
    MonotonicityViolation,
    NotComparable,
    OutOfRange,
    PaletteMismatch,
    debug_checks_enabled,
)


class ColorDistribution:
    """Exact rational distribution over colors 0..k-1: counts over a total."""

    __slots__ = ("counts", "total")

    def __init__(self, counts: Iterable[int], total: Optional[int] = None):
        self.counts = tuple(int(c) for c in counts)
        if any(c < 0 for c in self.counts):
            raise OutOfRange("negative count in distribution")
        s = sum(self.counts)
        self.total = s if total is None else int(total)
        if self.total < 1:
            raise OutOfRange(f"total must be >= 1, got {self.total}")
        if s != self.total:
            raise OutOfRange(f"counts sum to {s}, expected total {self.total}")

    @classmethod
    def from_coloring(cls, f) -> "ColorDistribution":
        """Pushforward of a total coloring under normalized counting."""
        if not f.is_total():
            raise OutOfRange("pushforward distribution requires a total coloring")
        return cls(f.counts(), f.domain_size)

    @property
    def k(self) -> int:
        return len(self.counts)

    def value(self, color: int) -> Fraction:
        return Fraction(self.counts[color], self.total)

    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.total) for c in self.counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColorDistribution):
            return NotImplemented
        return self.k == other.k and all(
            self.counts[a] * other.total == other.counts[a] * self.total
            for a in range(self.k)
        )

    def __hash__(self) -> int:
        return hash(self.values())

    def __repr__(self) -> str:
        return f"ColorDistribution({self.counts}/{self.total})"


def discrepancy(d: ColorDistribution) -> Fraction:
    """Maximum deviation of a color's mass from the uniform share 1/k."""
    share = Fraction(1, d.k)
    return max(abs(Fraction(c, d.total) - share) for c in d.counts)


def _check_same_palette(d1: ColorDistribution, d2: ColorDistribution) -> None:
    if d1.k != d2.k:
        raise PaletteMismatch(f"palette sizes differ: {d1.k} vs {d2.k}")


def l1_distance(d1: ColorDistribution, d2: ColorDistribution) -> Fraction:
    _check_same_palette(d1, d2)
    return sum(
        (abs(Fraction(a, d1.total) - Fraction(b, d2.total))
         for a, b in zip(d1.counts, d2.counts)),
        Fraction(0),
    )


def rearranged(d: ColorDistribution) -> tuple[Fraction, ...]:
    """The distribution's values sorted nondecreasingly."""
    return tuple(sorted(d.values()))


def d_plus(omega: ColorDistribution, eta: ColorDistribution) -> frozenset[int]:
    _check_same_palette(omega, eta)
    return frozenset(
        a for a in range(omega.k)
        if eta.counts[a] * omega.total > omega.counts[a] * eta.total
    )


def d_minus(omega: ColorDistribution, eta: ColorDistribution) -> frozenset[int]:
    _check_same_palette(omega, eta)
    return frozenset(
        a for a in range(omega.k)
        if eta.counts[a] * omega.total < omega.counts[a] * eta.total
    )


def _strict_witnesses(omega: ColorDistribution, eta: ColorDistribution) -> list[int]:
    """Colors a gaining mass with eta(a) <= eta(b) for every losing color b."""
    gain = d_plus(omega, eta)
    lose = d_minus(omega, eta)
    if not gain:
        return []
    cap = min(eta.counts[b] for b in lose) if lose else None
    return sorted(
        a for a in gain if cap is None or eta.counts[a] <= cap
    )


def is_more_equitable(
    omega: ColorDistribution, eta: ColorDistribution, strict: bool = True
) -> bool:
    """Strict mode: eta is strictly more equitable than omega.  Lax mode also
    accepts equality."""
    _check_same_palette(omega, eta)
    if omega == eta:
        return not strict
    return bool(_strict_witnesses(omega, eta))


def initial_sums_witness(
    omega: ColorDistribution, eta: ColorDistribution
) -> tuple[int, int]:
    """For strictly comparable distributions, return (l, a) such that the
    first l sorted values of eta dominate those of omega and the prefix-sum
    gap is at least eta(a) - omega(a) for the witness color a.

    l is 1-indexed.  Raises NotComparable unless eta is strictly more
    equitable than omega.
    """
    _check_same_palette(omega, eta)
    if omega == eta:
        raise NotComparable("distributions are equal")
    witnesses = _strict_witnesses(omega, eta)
    if not witnesses:
        raise NotComparable("no witness color: eta is not more equitable than omega")
    alpha = min(witnesses, key=lambda a: (eta.counts[a], a))
    eta_sorted = rearranged(eta)
    target = eta.value(alpha)
    ell = next(i for i, v in enumerate(eta_sorted, start=1) if v == target)

    omega_sorted = rearranged(omega)
    assert all(omega_sorted[i] <= eta_sorted[i] for i in range(ell)), \
        "sorted prefix domination must hold for the constructed index"
    prefix_gap = sum(eta_sorted[:ell], Fraction(0)) - sum(omega_sorted[:ell], Fraction(0))
    assert prefix_gap >= eta.value(alpha) - omega.value(alpha), \
        "prefix-sum gap must cover the witness gain"

    if debug_checks_enabled():
        _debug_scan_witness(omega, eta, ell, alpha)
    return ell, alpha


def _debug_scan_witness(omega, eta, ell, alpha) -> None:
    # exhaustive recheck: the returned pair must be among all valid (l, a)
    omega_sorted, eta_sorted = rearranged(omega), rearranged(eta)
    valid = []
    for l in range(1, omega.k + 1):
        if any(omega_sorted[i] > eta_sorted[i] for i in range(l)):
            continue
        gap = sum(eta_sorted[:l], Fraction(0)) - sum(omega_sorted[:l], Fraction(0))
        for a in d_plus(omega, eta):
            if gap >= eta.value(a) - omega.value(a):
                valid.append((l, a))
    assert (ell, alpha) in valid, f"constructed witness {(ell, alpha)} not valid"


@dataclass
class LedgerStep:
    l1: Fraction
    witness: Optional[int]
    gain: Fraction
    prefix_sums: Optional[tuple[Fraction, ...]] = None

    def to_dict(self) -> dict:
        out = {
            "l1": str(self.l1),
            "witness": self.witness,
            "gain": str(self.gain),
        }
        if self.prefix_sums is not None:
            out["prefix_sums"] = [str(s) for s in self.prefix_sums]
        return out


@dataclass
class ConvergenceLedger:
    """Running certificate for a monotone improvement sequence."""

    a_param: Fraction
    k: int
    disc0: Fraction
    cumulative: Fraction = field(default_factory=lambda: Fraction(0))
    steps: list[LedgerStep] = field(default_factory=list)

    def __post_init__(self):
        self.a_param = Fraction(self.a_param)
        if self.a_param < 1:
            raise OutOfRange(f"A must be >= 1, got {self.a_param}")
        self.disc0 = Fraction(self.disc0)

    @classmethod
    def for_initial(cls, a_param, d0: ColorDistribution) -> "ConvergenceLedger":
        return cls(Fraction(a_param), d0.k, discrepancy(d0))

    def bound(self) -> Fraction:
        return (1 + self.a_param) ** (self.k + 1) / self.a_param * self.disc0

    def record(
        self,
        before: ColorDistribution,
        after: ColorDistribution,
        witness: Optional[int] = None,
    ) -> "ConvergenceLedger":
        """Assert the step hypotheses and accumulate the l1 movement.

        Raises MonotonicityViolation if the step is not weakly more
        equitable, HypothesisViolation if some growing color's gain is too
        small relative to the l1 step (or the passed witness is not a
        growing color), and BoundViolation if the cumulative total exceeds
        the budget.
        """
        if before.k != self.k or after.k != self.k:
            raise PaletteMismatch("ledger palette size mismatch")
        step_index = len(self.steps)
        if not is_more_equitable(before, after, strict=False):
            raise MonotonicityViolation(
                f"step {step_index} is not monotone", step=(before, after)
            )
        step_l1 = l1_distance(before, after)
        if step_l1 == 0:
            self.steps.append(LedgerStep(Fraction(0), witness, Fraction(0)))
            return self
        gain_set = d_plus(before, after)
        if witness is not None and witness not in gain_set:
            raise HypothesisViolation(
                f"step {step_index}: witness {witness} does not gain mass",
                step=(before, after),
            )
        min_gain = min(after.value(a) - before.value(a) for a in gain_set)
        if step_l1 > self.a_param * min_gain:
            raise HypothesisViolation(
                f"step {step_index}: l1 step {step_l1} exceeds "
                f"A * minimal gain {self.a_param * min_gain}",
                step=(before, after),
            )
        self.cumulative += step_l1
        if self.cumulative > self.bound():
            raise BoundViolation(
                f"step {step_index}: cumulative {self.cumulative} exceeds "
                f"budget {self.bound()}; the driver violated its contract",
                step=(before, after),
            )
        gain = (
            after.value(witness) - before.value(witness)
            if witness is not None
            else min_gain
        )
        prefix = None
        if debug_checks_enabled():
            sorted_after = rearranged(after)
            prefix = tuple(
                sum(sorted_after[:l], Fraction(0)) for l in range(1, self.k + 1)
            )
        self.steps.append(LedgerStep(step_l1, witness, gain, prefix))
        return self

    def observed_ratio(self) -> Optional[Fraction]:
        """Cumulative movement over initial discrepancy, for probing how
        loose the exponential budget is in practice."""
        if self.disc0 == 0:
            return None
        return self.cumulative / self.disc0

    def to_json_dict(self) -> dict:
        return {
            "A": str(self.a_param),
            "k": self.k,
            "disc0": str(self.disc0),
            "cumulative": str(self.cumulative),
            "bound": str(self.bound()),
            "observed_ratio": (
                None if self.observed_ratio() is None else str(self.observed_ratio())
            ),
            "steps": [s.to_dict() for s in self.steps],
        }
