"""Generating functions for the two-color families, derived in the q-engine.

For the six anchored families the series is a genuine sum over the smallest
part; E and F have no such decomposition and are plain Pochhammer products.
Signed variants weight even parts (even blue parts for Tnu) by -1, which
flips the sign of the corresponding Pochhammer arguments.
"""

from __future__ import annotations

from .series import Series
from .qengine import (
    LENGTH_INF,
    Parameter,
    PochFactor,
    TermTemplate,
    poch_infinite,
    sum_over_smallest,
)

FAMILY_NAMES = ("E", "F", "Tomega", "Tpsi", "Tnu", "A", "B", "C")


def _inf(sign: int, slope: int, offset: int, den: bool = False) -> PochFactor:
    return PochFactor(sign, slope, offset, 2, LENGTH_INF, den)


def family_template(name: str, signed: bool) -> TermTemplate | None:
    """The smallest-part template, or None for the product-form families."""
    s = 1 if signed else -1
    templates = {
        # q^(2n+1) (s q^(2n+2);q^2)_inf / (q^(2n+1);q^2)_inf^2
        "Tomega": TermTemplate(2, 1, (_inf(s, 2, 2), _inf(1, 2, 1, True), _inf(1, 2, 1, True))),
        # q^(2n+1) (-q^(2n+3);q^2)_inf (s q^(2n+2);q^2)_inf / (q^(2n+1);q^2)_inf
        "Tpsi": TermTemplate(2, 1, (_inf(-1, 2, 3), _inf(s, 2, 2), _inf(1, 2, 1, True))),
        # q^(2n+1) (-q^(2n+2);q^2)_inf (s q^(2n+2);q^2)_inf / (q^(2n+1);q^2)_inf
        "Tnu": TermTemplate(2, 1, (_inf(-1, 2, 2), _inf(s, 2, 2), _inf(1, 2, 1, True))),
        # q^(2n+1) (s q^(2n+4), s q^(2n+2);q^2)_inf / (q^(2n+1);q^2)_inf^2
        "A": TermTemplate(
            2, 1, (_inf(s, 2, 4), _inf(s, 2, 2), _inf(1, 2, 1, True), _inf(1, 2, 1, True))
        ),
        # q^(2n+1) (s q^(2n+6), s q^(2n+2);q^2)_inf
        #   / ((q^(2n+3);q^2)_inf (q^(2n+1);q^2)_inf)
        "B": TermTemplate(
            2, 1, (_inf(s, 2, 6), _inf(s, 2, 2), _inf(1, 2, 3, True), _inf(1, 2, 1, True))
        ),
        # q^(4n+2) (s q^(2n+6), s q^(2n+2);q^2)_inf / (q^(2n+1);q^2)_inf^2
        "C": TermTemplate(
            4, 2, (_inf(s, 2, 6), _inf(s, 2, 2), _inf(1, 2, 1, True), _inf(1, 2, 1, True))
        ),
    }
    return templates.get(name)


def _product(order: int, numerators, denominators=()) -> Series:
    out = Series.one(order)
    for sign, exponent, step in numerators:
        out = out * poch_infinite(Parameter.monomial(exponent, sign), step, order)
    for sign, exponent, step in denominators:
        out = out * poch_infinite(Parameter.monomial(exponent, sign), step, order).invert()
    return out


def family_gf_series(name: str, signed: bool, order: int) -> Series:
    """Evaluate the family's generating function to the given order."""
    if name not in FAMILY_NAMES:
        raise KeyError(f"unknown family {name!r}")
    template = family_template(name, signed)
    if template is not None:
        return sum_over_smallest(template, order)
    if name == "E":
        # distinct per color, evens blue: (s q^2;q^2)_inf (-q;q^2)_inf^2
        return _product(order, [(1 if signed else -1, 2, 2), (-1, 1, 2), (-1, 1, 2)])
    # F: evens blue with repetition: 1 / ((q;q^2)_inf^2 (s q^2;q^2)_inf)
    return _product(
        order, [], [(1, 1, 2), (1, 1, 2), (-1 if signed else 1, 2, 2)]
    )
