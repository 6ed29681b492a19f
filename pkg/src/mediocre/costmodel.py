"""Closed-form comparison-cost constants, published-table generation and lower bounds.

The per-element cost of selecting the (alpha*n)-th largest with the best known
non-recursive deterministic selector is modelled by g(alpha, l); the fine-tuned
f(alpha) takes the better of two adjacent l values and is optionally capped by
the flat worst-case bounds 3 or 2.95.  From f the per-element constants of the
prefix scheme (Yao) and of the pairing/hyperpair schemes follow in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

Variant = Literal["plain", "cap3", "cap295"]

_CAPS: dict[str, float] = {"plain": math.inf, "cap3": 3.0, "cap295": 2.95}

# Percentile grids of the published tables.
F_TABLE_PERCENTILES = range(1, 34)
HYPER4_PERCENTILES = range(9, 17)


@dataclass(slots=True)
class CostPoint:
    """One row of the fine-tuned cost table."""

    alpha: float
    l_star: int
    g_l: float
    g_l1: float
    f: float
    variant: Variant = "cap3"


@dataclass(slots=True)
class InstanceConstants:
    """Per-element comparison constants on the standard instance families.

    c_a1/c_yao live on 0 < alpha < 1/3 (pairs), c_a4/c_yao4 on
    0 < alpha <= 1/5 (groups of four); fields outside their domain are None.
    """

    alpha: float
    c_a1: float | None
    c_yao: float | None
    c_a4: float | None
    c_yao4: float | None


def g(alpha: float, l: int) -> float:
    """Cost constant 1 + (l+2) * (alpha + (1-alpha)/2^l)."""
    if not 0.0 < alpha <= 0.5:
        raise ValueError(f"0 < alpha <= 1/2 violated: alpha = {alpha}")
    if l < 0:
        raise ValueError(f"l >= 0 violated: l = {l}")
    return 1.0 + (l + 2) * (alpha + (1.0 - alpha) / 2.0**l)


def l_star(alpha: float) -> int:
    """Tuning integer near log2(1/alpha) + log2(log2(1/alpha)).

    The published cost tables use the largest integer strictly below the
    expression when it is integral (their 0.25 row reads l = 2, not 3), with
    a floor of 1 so that alpha = 1/2 still yields l = 1.  Non-integral values
    reduce to the plain floor.
    """
    if not 0.0 < alpha <= 0.5:
        raise ValueError(f"0 < alpha <= 1/2 violated: alpha = {alpha}")
    x = math.log2(1.0 / alpha)
    return max(1, math.ceil(x + math.log2(x)) - 1)


def f(alpha: float, variant: Variant = "cap3") -> float:
    """Fine-tuned cost constant: best of g at l_star and l_star + 1, capped.

    Defined on (0, 1); arguments above 1/2 reduce through the symmetry
    f(alpha) = f(1 - alpha).
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"0 < alpha < 1 violated: alpha = {alpha}")
    if alpha > 0.5:
        alpha = 1.0 - alpha
    l = l_star(alpha)
    return min(g(alpha, l), g(alpha, l + 1), _CAPS[variant])


def cost_point(alpha: float, variant: Variant = "cap3") -> CostPoint:
    """f-table row at alpha (alpha in (0, 1/2])."""
    l = l_star(alpha)
    return CostPoint(
        alpha=alpha,
        l_star=l,
        g_l=g(alpha, l),
        g_l1=g(alpha, l + 1),
        f=f(alpha, variant),
        variant=variant,
    )


def instance_constants(alpha: float) -> InstanceConstants:
    """All four scheme constants at alpha, evaluated with the cap-3 variant."""
    if not 0.0 < alpha < 1.0 / 3.0:
        raise ValueError(f"0 < alpha < 1/3 violated: alpha = {alpha}")
    c_a1 = (1.0 + f(2.0 * alpha)) / 2.0
    c_yao = (1.0 - alpha) * f(alpha / (1.0 - alpha))
    if alpha <= 0.2:
        c_a4 = (3.0 + f(4.0 * alpha)) / 4.0
        c_yao4 = (1.0 - 3.0 * alpha) * f(alpha / (1.0 - 3.0 * alpha))
    else:
        c_a4 = None
        c_yao4 = None
    return InstanceConstants(alpha=alpha, c_a1=c_a1, c_yao=c_yao, c_a4=c_a4, c_yao4=c_yao4)


def lower_bound(i: int, j: int) -> int:
    """ceil(log2((i+j+1)! / (i! j!))) in exact integer arithmetic.

    The ratio equals (j+1) * C(i+j+1, i), an exact integer, and
    ceil(log2(N)) of a positive integer is (N-1).bit_length(), so the result
    is exact at every power-of-two boundary for any magnitude.
    """
    if i < 0:
        raise ValueError(f"i >= 0 violated: i = {i}")
    if j < 0:
        raise ValueError(f"j >= 0 violated: j = {j}")
    ratio = (j + 1) * math.comb(i + j + 1, i)
    return (ratio - 1).bit_length()


def f_table() -> list[CostPoint]:
    """The 33 published f-table rows, alpha = s/100 for s = 1..33."""
    return [cost_point(s / 100.0) for s in F_TABLE_PERCENTILES]


def constants_table() -> list[tuple[float, float, float]]:
    """(alpha, c_a1, c_yao) for the 33 percentiles."""
    rows = []
    for s in F_TABLE_PERCENTILES:
        ic = instance_constants(s / 100.0)
        rows.append((ic.alpha, ic.c_a1, ic.c_yao))
    return rows


def hyper4_table() -> list[tuple[float, float, float]]:
    """(alpha, c_a4, c_yao4) for percentiles 9..16."""
    rows = []
    for s in HYPER4_PERCENTILES:
        ic = instance_constants(s / 100.0)
        rows.append((ic.alpha, ic.c_a4, ic.c_yao4))
    return rows


def tables(which: str) -> list[tuple]:
    """Row data for the named table: 'f', 'constants' or 'hyper4'."""
    if which == "f":
        return [(p.alpha, p.l_star, p.g_l, p.g_l1, p.f) for p in f_table()]
    if which == "constants":
        return constants_table()
    if which == "hyper4":
        return hyper4_table()
    raise ValueError(f"unknown table {which!r}: expected f, constants or hyper4")


def curve(alpha_from: float, alpha_to: float, step: float) -> list[tuple[float, float, float]]:
    """(alpha, c_a1, c_yao) sampled on an inclusive grid inside (0, 1/3)."""
    if step <= 0.0:
        raise ValueError(f"step > 0 violated: step = {step}")
    if not 0.0 < alpha_from < alpha_to:
        raise ValueError(
            f"0 < alpha_from < alpha_to violated: from = {alpha_from}, to = {alpha_to}"
        )
    if alpha_to >= 1.0 / 3.0:
        raise ValueError(f"alpha_to < 1/3 violated: to = {alpha_to}")
    count = int(math.floor((alpha_to - alpha_from) / step + 1e-9)) + 1
    rows = []
    for idx in range(count):
        # snap away accumulated binary drift so grid points that coincide
        # with table percentiles evaluate identically
        ic = instance_constants(round(alpha_from + idx * step, 12))
        rows.append((ic.alpha, ic.c_a1, ic.c_yao))
    return rows
