import random
from fractions import Fraction

import pytest

from equicolor import (
    ColorDistribution,
    ConvergenceLedger,
    discrepancy,
    initial_sums_witness,
    is_more_equitable,
    l1_distance,
    rearranged,
)
from equicolor.distributions import d_plus
from equicolor.errors import (
    BoundViolation,
    HypothesisViolation,
    MonotonicityViolation,
    NotComparable,
    OutOfRange,
    PaletteMismatch,
)


def test_distribution_validation():
    d = ColorDistribution((2, 2, 2))
    assert d.total == 6 and d.k == 3
    with pytest.raises(OutOfRange):
        ColorDistribution((1, 2), total=4)
    with pytest.raises(OutOfRange):
        ColorDistribution((0, 0), total=0)


def test_discrepancy_examples():
    assert discrepancy(ColorDistribution((2, 2, 2))) == 0
    assert discrepancy(ColorDistribution((3, 2, 1))) == Fraction(1, 6)
    assert discrepancy(ColorDistribution((6, 0, 0))) == Fraction(2, 3)


def test_l1_examples():
    d1 = ColorDistribution((3, 2, 1))
    assert l1_distance(d1, d1) == 0
    assert l1_distance(ColorDistribution((1, 0)), ColorDistribution((0, 1))) == 2
    assert l1_distance(d1, ColorDistribution((2, 2, 2))) == Fraction(1, 3)
    with pytest.raises(PaletteMismatch):
        l1_distance(d1, ColorDistribution((1, 1)))


def test_l1_cross_totals():
    assert l1_distance(ColorDistribution((1, 1)), ColorDistribution((2, 2))) == 0
    assert l1_distance(ColorDistribution((1, 0)), ColorDistribution((1, 3))) == Fraction(3, 2)


def test_rearranged_examples():
    assert rearranged(ColorDistribution((3, 1, 2))) == (
        Fraction(1, 6), Fraction(2, 6), Fraction(3, 6))
    uniform = ColorDistribution((2, 2, 2))
    assert rearranged(uniform) == tuple(uniform.values())
    assert rearranged(ColorDistribution((0, 0, 6))) == (0, 0, 1)


def test_more_equitable_examples():
    uniform = ColorDistribution((2, 2, 2))
    skew = ColorDistribution((3, 2, 1))
    assert is_more_equitable(skew, uniform)
    assert is_more_equitable(skew, skew, strict=False)
    assert not is_more_equitable(skew, skew, strict=True)
    w = ColorDistribution((5, 3, 2))
    e = ColorDistribution((4, 4, 2))
    assert is_more_equitable(w, e)
    assert not is_more_equitable(ColorDistribution((2, 1)), ColorDistribution((1, 2)))


def test_more_equitable_is_antisymmetric_and_irreflexive():
    rng = random.Random(11)
    for _ in range(500):
        k = rng.randint(2, 5)
        total = rng.randint(k, 14)
        a = _random_counts(rng, k, total)
        b = _random_counts(rng, k, total)
        da, db = ColorDistribution(a), ColorDistribution(b)
        assert not is_more_equitable(da, da, strict=True)
        if da != db and is_more_equitable(da, db, strict=True):
            assert not is_more_equitable(db, da, strict=True)


def _random_counts(rng, k, total):
    cuts = sorted(rng.randint(0, total) for _ in range(k - 1))
    out = []
    prev = 0
    for c in cuts:
        out.append(c - prev)
        prev = c
    out.append(total - prev)
    return out


def test_rearrangement_contraction_random():
    rng = random.Random(7)
    for _ in range(2000):
        k = rng.randint(1, 6)
        t1 = rng.randint(k, 30)
        t2 = rng.randint(k, 30)
        a = ColorDistribution(_random_counts(rng, k, t1))
        b = ColorDistribution(_random_counts(rng, k, t2))
        sorted_l1 = sum(
            (abs(x - y) for x, y in zip(rearranged(a), rearranged(b))),
            Fraction(0),
        )
        assert sorted_l1 <= l1_distance(a, b)


def test_initial_sums_witness_examples():
    w = ColorDistribution((5, 3, 2))
    e = ColorDistribution((4, 4, 2))
    assert initial_sums_witness(w, e) == (2, 1)
    with pytest.raises(NotComparable):
        initial_sums_witness(ColorDistribution((2, 1)), ColorDistribution((1, 2)))
    skew = ColorDistribution((3, 2, 1))
    uniform = ColorDistribution((2, 2, 2))
    ell, alpha = initial_sums_witness(skew, uniform)
    assert ell == 1 and alpha == 2


def test_initial_sums_witness_postconditions_random():
    rng = random.Random(3)
    done = 0
    while done < 300:
        k = rng.randint(2, 5)
        total = rng.randint(k, 16)
        a = ColorDistribution(_random_counts(rng, k, total))
        b = ColorDistribution(_random_counts(rng, k, total))
        if a == b or not is_more_equitable(a, b):
            continue
        ell, alpha = initial_sums_witness(a, b)
        ra, rb = rearranged(a), rearranged(b)
        assert all(ra[i] <= rb[i] for i in range(ell))
        gap = sum(rb[:ell], Fraction(0)) - sum(ra[:ell], Fraction(0))
        assert gap >= b.value(alpha) - a.value(alpha)
        assert alpha in d_plus(a, b)
        done += 1


def test_ledger_example_bound():
    led = ConvergenceLedger(Fraction(6), 2, Fraction(1, 2))
    assert led.bound() == Fraction(343, 12)


def test_ledger_accepts_equal_steps():
    d = ColorDistribution((2, 0))
    led = ConvergenceLedger.for_initial(6, d)
    led.record(d, d)
    assert led.cumulative == 0 and len(led.steps) == 1


def test_ledger_rejects_hypothesis_violation():
    # a step whose l1 movement exceeds A times the witness gain
    led = ConvergenceLedger(Fraction(1), 2, Fraction(1, 2))
    before = ColorDistribution((8, 0))
    after = ColorDistribution((4, 4))
    with pytest.raises(HypothesisViolation):
        led.record(before, after, witness=1)


def test_ledger_rejects_bad_witness():
    led = ConvergenceLedger(Fraction(6), 2, Fraction(1, 2))
    with pytest.raises(HypothesisViolation):
        led.record(ColorDistribution((2, 0)), ColorDistribution((1, 1)), witness=0)


def test_ledger_rejects_non_monotone():
    led = ConvergenceLedger(Fraction(6), 3, Fraction(1))
    before = ColorDistribution((2, 2, 2))
    after = ColorDistribution((3, 2, 1))
    with pytest.raises(MonotonicityViolation):
        led.record(before, after, witness=0)


def test_ledger_bound_violation_is_detectable():
    # force a tiny budget by lying about disc0: the ledger must catch it
    led = ConvergenceLedger(Fraction(6), 2, Fraction(0))
    assert led.bound() == 0
    with pytest.raises(BoundViolation):
        led.record(ColorDistribution((2, 0)), ColorDistribution((1, 1)), witness=1)


def _admissible_transfer(rng, counts):
    """One random class-mass transfer that keeps the sequence monotone and
    within the per-step budget (single or double target, one source)."""
    k = len(counts)
    order = sorted(range(k), key=lambda c: counts[c])
    alpha = order[0]
    beta = max(range(k), key=lambda c: counts[c])
    if counts[beta] - counts[alpha] < 2:
        return None
    d = rng.randint(1, (counts[beta] - counts[alpha]) // 2)
    new = list(counts)
    new[alpha] += d
    new[beta] -= d
    return new, alpha


def test_ledger_end_to_end_random_monotone_sequences():
    rng = random.Random(99)
    for _ in range(200):
        k = rng.randint(2, 5)
        total = rng.randint(2 * k, 60)
        counts = _random_counts(rng, k, total)
        d0 = ColorDistribution(counts)
        led = ConvergenceLedger.for_initial(6, d0)
        cur = counts
        for _ in range(40):
            step = _admissible_transfer(rng, cur)
            if step is None:
                break
            new, alpha = step
            led.record(ColorDistribution(cur), ColorDistribution(new), witness=alpha)
            cur = new
        assert led.cumulative <= led.bound()


def test_ledger_json_round_trip():
    d0 = ColorDistribution((4, 0))
    led = ConvergenceLedger.for_initial(6, d0)
    led.record(d0, ColorDistribution((3, 1)), witness=1)
    data = led.to_json_dict()
    assert data["A"] == "6" and data["k"] == 2
    assert len(data["steps"]) == 1
    assert data["steps"][0]["witness"] == 1
