"""Approximate selection: prefix scheme, pairing scheme, hyperpair groups, sampling.

Every routine here returns an element guaranteed to sit outside both the top i
and the bottom j of the instance (the randomized one may instead report a
detected failure, never a wrong element).  The "arbitrary subset" each scheme
is free to choose is fixed as the instance prefix so runs are deterministic
and replayable.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .core import CountingComparator, Element, Instance, Rng, SelectionOutcome
from .exact import _fr_smallest, select_mom

ExactSelector = Callable[[Sequence[Element], int, CountingComparator], Element]

_LAS_VEGAS_CAP = 100


@dataclass(slots=True)
class HyperpairConfig:
    """Grouping geometry for the hyperpair scheme."""

    group_size: int
    pool_size: int
    subset_size: int

    @classmethod
    def for_instance(cls, n: int, i: int, j: int, group_size: int) -> "HyperpairConfig":
        if group_size < 2 or group_size & (group_size - 1):
            raise ValueError(f"group size must be a power of 2 >= 2, got {group_size}")
        pool = i + -(-(j + 1) // group_size)
        subset = group_size * pool
        if subset > n:
            raise ValueError(
                f"group_size * pool_size <= n violated: {group_size} * {pool} > {n}"
            )
        return cls(group_size=group_size, pool_size=pool, subset_size=subset)


@dataclass(slots=True)
class A2Params:
    """Working-set size m, sample size r and target sample rank k."""

    m: int
    r: int
    k: int


def _round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def yao_select(
    instance: Instance,
    exact: ExactSelector = select_mom,
    cmp: CountingComparator | None = None,
) -> SelectionOutcome:
    """Prefix scheme: the (i+1)-th largest of the first i+j+1 elements.

    Whatever beats it inside the subset gives the i guard above; whatever it
    beats gives the j guard below.
    """
    if cmp is None:
        cmp = CountingComparator()
    start = cmp.comparisons
    subset = instance.elements[: instance.i + instance.j + 1]
    x = exact(subset, instance.i + 1, cmp)
    return SelectionOutcome(element=x, comparisons=cmp.comparisons - start)


def a1_select(
    instance: Instance,
    exact: ExactSelector = select_mom,
    cmp: CountingComparator | None = None,
) -> SelectionOutcome:
    """Pairing scheme: pre-compare disjoint pairs, then select among winners.

    Applies on i <= j <= n - 2i - 1; outside that range it degrades to the
    plain prefix scheme.  Uses the first 2i + j + 1 elements, pays exactly
    m = i + floor((j+1)/2) pairing comparisons, and selects the (i+1)-th
    largest of the pair winners (plus the unplayed leftover when j is even).
    """
    if cmp is None:
        cmp = CountingComparator()
    n, i, j = instance.n, instance.i, instance.j
    if not i <= j <= n - 2 * i - 1:
        return yao_select(instance, exact, cmp)
    start = cmp.comparisons
    m = i + (j + 1) // 2
    subset = instance.elements[: 2 * i + j + 1]
    less = cmp.less
    pool = []
    for pair in range(m):
        a = subset[2 * pair]
        b = subset[2 * pair + 1]
        pool.append(b if less(a, b) else a)
    if j % 2 == 0:
        pool.append(subset[2 * m])
    x = exact(pool, i + 1, cmp)
    return SelectionOutcome(element=x, comparisons=cmp.comparisons - start)


def _group_max(group: Sequence[Element], cmp: CountingComparator) -> Element:
    """Balanced knockout maximum: len(group) - 1 comparisons."""
    less = cmp.less
    round_ = list(group)
    while len(round_) > 1:
        nxt = []
        for pos in range(0, len(round_), 2):
            a = round_[pos]
            b = round_[pos + 1]
            nxt.append(b if less(a, b) else a)
        round_ = nxt
    return round_[0]


def hyperpair_select(
    instance: Instance,
    group_size: int,
    exact: ExactSelector = select_mom,
    cmp: CountingComparator | None = None,
) -> SelectionOutcome:
    """Hyperpair scheme: knockout maxima of groups of a power-of-two size.

    Takes the first group_size * m elements with m = i + ceil((j+1)/group_size),
    spends exactly group_size - 1 comparisons per group on tournaments, and
    selects the (i+1)-th largest group maximum.  With group_size = 2 and odd j
    this reproduces the pairing scheme exactly.  Out-of-range parameters raise;
    there is deliberately no silent fallback here.
    """
    if cmp is None:
        cmp = CountingComparator()
    n, i, j = instance.n, instance.i, instance.j
    config = HyperpairConfig.for_instance(n, i, j, group_size)
    start = cmp.comparisons
    subset = instance.elements[: config.subset_size]
    maxima = [
        _group_max(subset[base : base + group_size], cmp)
        for base in range(0, config.subset_size, group_size)
    ]
    x = exact(maxima, i + 1, cmp)
    return SelectionOutcome(element=x, comparisons=cmp.comparisons - start)


def a2_params(i: int, j: int, n: int) -> A2Params:
    """Sampling parameters: m = i+j+2(i+j)^(3/4), r = m^(3/4), k = j*m^(-1/4) + sqrt(m)/2.

    Real-valued formulas are rounded half-up; k is clamped into [1, r].
    """
    if i < 0:
        raise ValueError(f"i >= 0 violated: i = {i}")
    if j < 0:
        raise ValueError(f"j >= 0 violated: j = {j}")
    if i + j < 16:
        raise ValueError(f"i + j >= 16 violated: {i} + {j} < 16")
    m = _round_half_up(i + j + 2.0 * (i + j) ** 0.75)
    if m > n:
        raise ValueError(f"i + j + 2(i+j)^(3/4) <= n violated: {m} > {n}")
    r = _round_half_up(m**0.75)
    k = max(1, min(r, _round_half_up(j * m**-0.25 + m**0.5 / 2.0)))
    half_root = m**0.5 / 2.0
    assert math.ceil(half_root) <= k <= r - math.floor(half_root), (m, r, k)
    return A2Params(m=m, r=r, k=k)


def a2_once(
    instance: Instance,
    exact: ExactSelector | None = None,
    cmp: CountingComparator | None = None,
    rng: Rng | None = None,
) -> SelectionOutcome:
    """One Monte Carlo round: sample, select the k-th smallest, verify.

    Draws r indices from the first m elements uniformly with replacement,
    selects the k-th smallest of the sampled multiset, then checks the
    candidate against every working-set element: it is returned only if at
    least i elements are larger and at least j smaller, otherwise the outcome
    is flagged failed.  A wrong element can never escape.

    The sample selector defaults to the seeded sampling selector so the whole
    round stays within m + O(m^(3/4)) comparisons; pass exact (e.g.
    select_mom) to force a specific one.  Relations of sampled elements to
    the candidate are resolved by the selection pass itself, so only
    never-sampled elements are compared afterwards.
    """
    if rng is None:
        raise ValueError("a2_once requires an Rng")
    if cmp is None:
        cmp = CountingComparator()
    params = a2_params(instance.i, instance.j, instance.n)
    m, r, k = params.m, params.r, params.k
    working = instance.elements[:m]
    idxs = rng.sample_with_replacement(m, r)
    sample = [working[q] for q in idxs]

    start = cmp.comparisons
    if exact is None:
        x = _fr_smallest(sample, 0, r - 1, k - 1, cmp)
    else:
        x = exact(sample, r - k + 1, cmp)
    # The selection pass already resolved every sampled element against x;
    # tallying those sides is bookkeeping, not new order queries.
    smaller = 0
    larger = 0
    for v in set(sample):
        if v < x:
            smaller += 1
        elif v != x:
            larger += 1
    sampled = set(idxs)
    less = cmp.less
    for q in range(m):
        if q in sampled:
            continue
        if less(working[q], x):
            smaller += 1
        else:
            larger += 1
    ok = larger >= instance.i and smaller >= instance.j
    return SelectionOutcome(
        element=x, comparisons=cmp.comparisons - start, failed=not ok
    )


def a2_las_vegas(
    instance: Instance,
    exact: ExactSelector | None = None,
    cmp: CountingComparator | None = None,
    rng: Rng | None = None,
    max_repetitions: int = _LAS_VEGAS_CAP,
) -> SelectionOutcome:
    """Repeat the Monte Carlo round with fresh samples until it succeeds.

    The returned outcome is never failed; its tally is cumulative across
    repetitions.  The repetition cap only guards against implementation bugs:
    with the failure probability bounded well below 1/2, reaching it honestly
    is astronomically unlikely.
    """
    if cmp is None:
        cmp = CountingComparator()
    start = cmp.comparisons
    for rep in range(1, max_repetitions + 1):
        out = a2_once(instance, exact, cmp, rng)
        if not out.failed:
            return SelectionOutcome(
                element=out.element,
                comparisons=cmp.comparisons - start,
                failed=False,
                repetitions=rep,
            )
    raise RuntimeError(
        f"sampling selection failed {max_repetitions} consecutive times; "
        "this points at a broken sampler or comparator"
    )
