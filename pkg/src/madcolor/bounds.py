"""Sufficient mad thresholds for (1,...,1,0,...,0)-colorability, exact."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def bound_ours(a: int, b: int) -> Fraction:
    """4a/3 + b."""
    if a < 1 or b < 0:
        raise ValueError("need a >= 1 and b >= 0")
    return Fraction(4 * a + 3 * b, 3)


def bound_dkmr(a: int, b: int, d: int) -> Fraction:
    """Dorbec-Kaiser-Montassier-Raspaud: a + b + d a (a+1) / ((a+d+1)(a+1) + a b)."""
    if a < 1 or b < 0 or d < 1:
        raise ValueError("need a >= 1, b >= 0, d >= 1")
    return a + b + Fraction(d * a * (a + 1), (a + d + 1) * (a + 1) + a * b)


def bound_havet_sereni(a: int, d: int) -> Fraction:
    """Havet-Sereni for (d_1,...,d_a): a + a d / (a + d)."""
    if a < 1 or d < 1:
        raise ValueError("need a >= 1 and d >= 1")
    return a + Fraction(a * d, a + d)


@dataclass(frozen=True)
class BoundRow:
    a: int
    b: int
    ours: Fraction
    dkmr_d1: Fraction
    havet_sereni_d1: Fraction | None

    @property
    def improved(self) -> bool:
        return self.ours > self.dkmr_d1


@dataclass(frozen=True)
class ReferenceBound:
    """A sharp literature threshold quoted for comparison."""

    name: str
    a: int
    b: int
    defect: int
    value: Fraction


def bounds_table(a_max: int, b_max: int) -> list[BoundRow]:
    if a_max < 1 or b_max < 0:
        raise ValueError("need a_max >= 1 and b_max >= 0")
    return [
        BoundRow(a, b, bound_ours(a, b), bound_dkmr(a, b, 1),
                 bound_havet_sereni(a, 1) if b == 0 else None)
        for a in range(1, a_max + 1)
        for b in range(b_max + 1)
    ]


def reference_bounds(d_max: int = 3) -> list[ReferenceBound]:
    """Borodin-Kostochka and Borodin-Kostochka-Yancey sharp thresholds.

    (d, 0)-colorability is a = 1 defect-d class plus b = 1 independent class;
    (1, 1)-colorability is a = 2, b = 0.
    """
    rows = [ReferenceBound("BK11 (1,0)", 1, 1, 1, Fraction(12, 5))]
    rows += [ReferenceBound(f"BK14 ({d},0)", 1, 1, d, 3 - Fraction(1, d + 1)) for d in range(2, d_max + 1)]
    rows.append(ReferenceBound("BKY13 (1,1)", 2, 0, 1, Fraction(14, 5)))
    return rows
