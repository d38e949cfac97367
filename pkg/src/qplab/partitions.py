"""Two-color partition families: declarative rules, enumeration and counting.

A family is described by a smallest-part anchor plus one rule per
(color, parity) cell.  Three independent computations hang off that data:

* ``enumerate_family`` lists the actual partitions, choosing the smallest
  value first and then filling the four cells in turn;
* ``count_family`` / ``brute_force_series`` count through cached products of
  per-value factors, which scales far beyond listing range;
* the generating-function templates in :mod:`qplab.family_gf` re-derive the
  same series through the q-engine.

The identity catalog compares these routes against each other, so keeping
them structurally separate is the point, not an accident.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .series import Series, div_one_minus, mul_one_minus

BLUE = "b"
GREEN = "g"
ODD = "odd"
EVEN = "even"

DEFAULT_ENUMERATION_BUDGET = 30

#: counting modes: every part weighs +1, even parts weigh -1, even blue
#: parts weigh -1, or every part weighs -1 (for parity-of-length statistics)
WEIGHT_NONE = "none"
WEIGHT_EVEN_PARTS = "even_parts"
WEIGHT_EVEN_BLUE_PARTS = "even_blue_parts"
WEIGHT_ALL_PARTS = "all_parts"


class PartitionError(ValueError):
    """Raised for requests outside a family's or the budget's range."""


@dataclass(frozen=True)
class ColoredPart:
    value: int
    color: str

    def __post_init__(self):
        if self.value < 1:
            raise PartitionError("part values must be positive")
        if self.color not in (BLUE, GREEN):
            raise PartitionError(f"unknown color {self.color!r}")

    @property
    def parity(self) -> str:
        return EVEN if self.value % 2 == 0 else ODD

    def sort_key(self) -> tuple[int, int]:
        # canonical: larger values first, blue before green at equal value
        return (-self.value, 0 if self.color == BLUE else 1)

    def __str__(self) -> str:
        return f"{self.value}{self.color}"


class TwoColorPartition:
    """An immutable multiset of colored parts in canonical order."""

    __slots__ = ("_parts",)

    def __init__(self, parts):
        self._parts = tuple(sorted(parts, key=ColoredPart.sort_key))

    @property
    def parts(self) -> tuple[ColoredPart, ...]:
        return self._parts

    @property
    def total(self) -> int:
        return sum(p.value for p in self._parts)

    @property
    def smallest(self) -> Optional[int]:
        return self._parts[-1].value if self._parts else None

    def count(self, color: str | None = None, parity: str | None = None) -> int:
        return sum(
            1
            for p in self._parts
            if (color is None or p.color == color)
            and (parity is None or p.parity == parity)
        )

    def text(self) -> str:
        """Listing format: parts as <value><color> joined by '+'.

        The empty partition renders as the empty string.
        """
        return "+".join(str(p) for p in self._parts)

    def sort_key(self):
        return tuple(p.sort_key() for p in self._parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, TwoColorPartition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"TwoColorPartition({self.text() or 'empty'})"


def partition_weight(partition: TwoColorPartition, mode: str) -> int:
    """The +-1 weight a partition contributes under the given counting mode."""
    if mode == WEIGHT_NONE:
        return 1
    if mode == WEIGHT_EVEN_PARTS:
        return -1 if partition.count(parity=EVEN) % 2 else 1
    if mode == WEIGHT_EVEN_BLUE_PARTS:
        return -1 if partition.count(color=BLUE, parity=EVEN) % 2 else 1
    if mode == WEIGHT_ALL_PARTS:
        return -1 if len(partition.parts) % 2 else 1
    raise PartitionError(f"unknown weight mode {mode!r}")


@dataclass(frozen=True)
class CellRule:
    """What one (color, parity) cell of a family permits.

    `min_offset` positions the cell's minimum at smallest+offset for anchored
    families; unanchored families use the absolute minimum of the parity.
    """

    allowed: bool = False
    distinct: bool = False
    min_offset: int = 0


@dataclass(frozen=True)
class Anchor:
    """Requires the smallest value to be odd and held by specific colors."""

    colors: tuple[str, ...] = (BLUE,)
    blue_exactly_one: bool = False


@dataclass(frozen=True)
class FamilySpec:
    name: str
    anchor: Optional[Anchor]
    blue_odd: CellRule
    blue_even: CellRule
    green_odd: CellRule
    green_even: CellRule
    weight: str = WEIGHT_EVEN_PARTS

    def cell(self, color: str, parity: str) -> CellRule:
        return {
            (BLUE, ODD): self.blue_odd,
            (BLUE, EVEN): self.blue_even,
            (GREEN, ODD): self.green_odd,
            (GREEN, EVEN): self.green_even,
        }[(color, parity)]


_CELLS = ((BLUE, ODD), (BLUE, EVEN), (GREEN, ODD), (GREEN, EVEN))


FAMILIES: dict[str, FamilySpec] = {
    # all parts distinct within each color, even parts blue only
    "E": FamilySpec(
        "E",
        None,
        blue_odd=CellRule(True, True),
        blue_even=CellRule(True, True),
        green_odd=CellRule(True, True),
        green_even=CellRule(False),
    ),
    # even parts blue only, repetition free-for-all
    "F": FamilySpec(
        "F",
        None,
        blue_odd=CellRule(True, False),
        blue_even=CellRule(True, False),
        green_odd=CellRule(True, False),
        green_even=CellRule(False),
    ),
    # evens blue and distinct, smallest odd and blue
    "Tomega": FamilySpec(
        "Tomega",
        Anchor(),
        blue_odd=CellRule(True, False, 0),
        blue_even=CellRule(True, True, 1),
        green_odd=CellRule(True, False, 0),
        green_even=CellRule(False),
    ),
    # additionally the blue odds are distinct
    "Tpsi": FamilySpec(
        "Tpsi",
        Anchor(blue_exactly_one=True),
        blue_odd=CellRule(True, True, 0),
        blue_even=CellRule(True, True, 1),
        green_odd=CellRule(True, False, 0),
        green_even=CellRule(False),
    ),
    # odds blue only, evens distinct in each color, weighted by even blues
    "Tnu": FamilySpec(
        "Tnu",
        Anchor(),
        blue_odd=CellRule(True, False, 0),
        blue_even=CellRule(True, True, 1),
        green_odd=CellRule(False),
        green_even=CellRule(True, True, 1),
        weight=WEIGHT_EVEN_BLUE_PARTS,
    ),
    # smallest odd with a blue copy, even blues at least 3 above it
    "A": FamilySpec(
        "A",
        Anchor(),
        blue_odd=CellRule(True, False, 0),
        blue_even=CellRule(True, True, 3),
        green_odd=CellRule(True, False, 0),
        green_even=CellRule(True, True, 1),
    ),
    # smallest odd exactly once in blue, other blue odds 2 above it,
    # even blues 4 above it (hence 5 by parity)
    "B": FamilySpec(
        "B",
        Anchor(blue_exactly_one=True),
        blue_odd=CellRule(True, False, 2),
        blue_even=CellRule(True, True, 5),
        green_odd=CellRule(True, False, 0),
        green_even=CellRule(True, True, 1),
    ),
    # smallest odd in both colors, even blues at least 5 above it
    "C": FamilySpec(
        "C",
        Anchor(colors=(BLUE, GREEN)),
        blue_odd=CellRule(True, False, 0),
        blue_even=CellRule(True, True, 5),
        green_odd=CellRule(True, False, 0),
        green_even=CellRule(True, True, 1),
    ),
}


def _cell_start(spec: FamilySpec, color: str, parity: str, smallest: Optional[int]) -> int:
    """Minimum value the cell's generator may use (anchor copies excluded)."""
    rule = spec.cell(color, parity)
    if spec.anchor is None or smallest is None:
        return 1 if parity == ODD else 2
    start = smallest + rule.min_offset
    anchored_here = parity == ODD and color in spec.anchor.colors
    repeat_forbidden = rule.distinct or (color == BLUE and spec.anchor.blue_exactly_one)
    if anchored_here and repeat_forbidden and start <= smallest:
        # the anchor already holds this value and it must not recur
        start = smallest + 2
    return start


def _part_weight(mode: str, color: str, value: int) -> int:
    if mode == WEIGHT_ALL_PARTS:
        return -1
    if value % 2 == 0 and (
        mode == WEIGHT_EVEN_PARTS or (mode == WEIGHT_EVEN_BLUE_PARTS and color == BLUE)
    ):
        return -1
    return 1


def _cell_product(spec: FamilySpec, smallest: Optional[int], order: int, mode: str) -> Series:
    """Product of per-value factors over all four cells, truncated to order."""
    out = Series.one(order)
    for color, parity in _CELLS:
        rule = spec.cell(color, parity)
        if not rule.allowed:
            continue
        for v in range(_cell_start(spec, color, parity, smallest), order + 1, 2):
            w = _part_weight(mode, color, v)
            if rule.distinct:
                out = mul_one_minus(out, -w, v)  # (1 + w q^v)
            else:
                out = div_one_minus(out, w, v)  # 1/(1 - w q^v)
    return out


@lru_cache(maxsize=None)
def _family_series(spec: FamilySpec, order: int, mode: str) -> Series:
    if spec.anchor is None:
        return _cell_product(spec, None, order, mode)
    total = Series.zero(order)
    s = 1
    while True:
        base = s * len(spec.anchor.colors)
        if base > order:
            break
        anchor_weight = 1
        if mode == WEIGHT_ALL_PARTS and len(spec.anchor.colors) % 2 == 1:
            anchor_weight = -1
        prod = _cell_product(spec, s, order - base, mode)
        shifted = Series([0] * base + list(prod.coeffs))
        total = total + shifted.scale(anchor_weight)
        s += 2
    return total


def family_series(
    spec: FamilySpec,
    order: int,
    mode: str = WEIGHT_NONE,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> Series:
    """Counting series of the family under the given weight mode."""
    if order < 0:
        raise PartitionError("order must be nonnegative")
    if order > budget:
        raise PartitionError(
            f"order {order} exceeds the enumeration budget {budget}"
        )
    if mode not in (WEIGHT_NONE, WEIGHT_EVEN_PARTS, WEIGHT_EVEN_BLUE_PARTS, WEIGHT_ALL_PARTS):
        raise PartitionError(f"unknown weight mode {mode!r}")
    return _family_series(spec, order, mode)


def brute_force_series(
    spec: FamilySpec,
    order: int,
    use_weight: bool = False,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> Series:
    """Series whose q^n coefficient is count_family(spec, n, use_weight)."""
    mode = spec.weight if use_weight else WEIGHT_NONE
    return family_series(spec, order, mode, budget)


def count_family(
    spec: FamilySpec,
    n: int,
    use_weight: bool = False,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> int:
    """Number of family partitions of n, signed when use_weight is set."""
    if n < 0:
        raise PartitionError("n must be nonnegative")
    if n > budget:
        raise PartitionError(f"n {n} exceeds the enumeration budget {budget}")
    return brute_force_series(spec, n, use_weight, budget).coeff(n)


def statistic_counts(
    spec: FamilySpec, n: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> tuple[int, int, int, int]:
    """(X0, X1, X2, X3): counts split by parity of #even parts and of #parts."""
    if n < 0 or n > budget:
        raise PartitionError(f"n must lie in 0..{budget}")
    plain = family_series(spec, n, WEIGHT_NONE, budget).coeff(n)
    even_signed = family_series(spec, n, WEIGHT_EVEN_PARTS, budget).coeff(n)
    length_signed = family_series(spec, n, WEIGHT_ALL_PARTS, budget).coeff(n)
    if (plain + even_signed) % 2 or (plain + length_signed) % 2:
        raise PartitionError("weighted and plain counts disagree in parity")
    x0, x1 = (plain + even_signed) // 2, (plain - even_signed) // 2
    x2, x3 = (plain + length_signed) // 2, (plain - length_signed) // 2
    return x0, x1, x2, x3


# ----------------------------------------------------------------------
# explicit enumeration

def _cell_selections(min_value: int, budget: int, distinct: bool) -> Iterator[list[int]]:
    """All value multisets (ascending) of one cell with sum <= budget."""

    def rec(v: int, rem: int) -> Iterator[list[int]]:
        yield []
        vv = v
        while vv <= rem:
            max_count = 1 if distinct else rem // vv
            for count in range(1, max_count + 1):
                for rest in rec(vv + 2, rem - count * vv):
                    yield [vv] * count + rest
            vv += 2

    yield from rec(min_value, budget)


def _assign_cells(spec: FamilySpec, smallest: Optional[int], total: int) -> Iterator[list[ColoredPart]]:
    def rec(idx: int, remaining: int) -> Iterator[list[ColoredPart]]:
        if idx == len(_CELLS):
            if remaining == 0:
                yield []
            return
        color, parity = _CELLS[idx]
        rule = spec.cell(color, parity)
        if not rule.allowed:
            yield from rec(idx + 1, remaining)
            return
        start = _cell_start(spec, color, parity, smallest)
        for values in _cell_selections(start, remaining, rule.distinct):
            used = sum(values)
            for rest in rec(idx + 1, remaining - used):
                yield [ColoredPart(v, color) for v in values] + rest

    yield from rec(0, total)


def enumerate_family(spec: FamilySpec, n: int) -> list[TwoColorPartition]:
    """Every family partition of n exactly once, in canonical order.

    Chooses the smallest value first (when the family anchors one), then
    assigns the remaining weight to the four cells.
    """
    if n < 0:
        raise PartitionError("n must be nonnegative")
    found: list[TwoColorPartition] = []
    if spec.anchor is None:
        found.extend(TwoColorPartition(parts) for parts in _assign_cells(spec, None, n))
    else:
        for s in range(1, n + 1, 2):
            anchor_parts = [ColoredPart(s, color) for color in spec.anchor.colors]
            remaining = n - s * len(spec.anchor.colors)
            if remaining < 0:
                break
            for parts in _assign_cells(spec, s, remaining):
                found.append(TwoColorPartition(anchor_parts + parts))
    found.sort(key=TwoColorPartition.sort_key)
    return found


# ----------------------------------------------------------------------
# companion counts used by the catalog

@lru_cache(maxsize=None)
def _overpartition_count(remaining: int, max_part: int, odd_only: bool) -> int:
    if remaining == 0:
        return 1
    if max_part < 1:
        return 0
    total = _overpartition_count(remaining, max_part - 1, odd_only)
    if odd_only and max_part % 2 == 0:
        return total
    copies = 1
    while copies * max_part <= remaining:
        # the first occurrence of this part size may be overlined
        total += 2 * _overpartition_count(
            remaining - copies * max_part, max_part - 1, odd_only
        )
        copies += 1
    return total


def count_overpartitions(n: int, odd_only: bool = False) -> int:
    """Overpartitions of n, optionally restricted to odd parts."""
    if n < 0:
        raise PartitionError("n must be nonnegative")
    return _overpartition_count(n, n, odd_only)


@lru_cache(maxsize=None)
def _bounded_odd_count(remaining: int, min_value: int, odd_cap: int, distinct: bool) -> int:
    """Partitions with parts >= min_value and every odd part < odd_cap."""
    if remaining == 0:
        return 1
    total = 0
    for v in range(min_value, remaining + 1):
        if v % 2 == 1 and v >= odd_cap:
            continue
        total += _bounded_odd_count(
            remaining - v, v + 1 if distinct else v, odd_cap, distinct
        )
    return total


def count_ady(n: int, distinct: bool, allow_zero_part: bool = False) -> int:
    """Nonempty partitions of n with every odd part below twice the smallest.

    With `distinct` and `allow_zero_part`, parts are distinct nonnegative
    integers, so a single zero part may join (and then no odd part survives
    the bound).  The empty partition is never counted; for n = 0 the only
    admissible object is the bare zero part.
    """
    if n < 0:
        raise PartitionError("n must be nonnegative")
    if allow_zero_part and not distinct:
        raise PartitionError("a zero part is only meaningful for distinct parts")
    total = 0
    for s in range(1, n + 1):
        total += _bounded_odd_count(n - s, s + 1 if distinct else s, 2 * s, distinct)
    if distinct and allow_zero_part:
        if n == 0:
            total += 1
        else:
            total += _bounded_odd_count(n, 1, 0, True)
    return total


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n
