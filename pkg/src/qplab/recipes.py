"""Recipe trees: declarative descriptions of how to compute one side of an
identity.

Keeping the two sides of every catalog entry as data rather than code means
the CLI can print exactly what was evaluated, and the registry can tell
enumeration-backed recipes (which must respect the enumeration budget) from
pure series recipes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .series import Series
from .qengine import (
    Parameter,
    TermTemplate,
    phi21,
    poch_finite,
    poch_infinite,
    rational_series,
    sum_over_smallest,
)
from .mocktheta import MockThetaForm, mock_theta, theta_squares
from . import partitions
from .family_gf import family_gf_series


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Monomial:
    exponent: int
    coefficient: int = 1


@dataclass(frozen=True)
class Add:
    terms: tuple["Recipe", ...]


@dataclass(frozen=True)
class Scale:
    factor: int
    node: "Recipe"


@dataclass(frozen=True)
class Mul:
    factors: tuple["Recipe", ...]


@dataclass(frozen=True)
class Inv:
    node: "Recipe"


@dataclass(frozen=True)
class NegVar:
    node: "Recipe"


@dataclass(frozen=True)
class PochInf:
    sign: int
    exponent: int
    step: int


@dataclass(frozen=True)
class PochFin:
    sign: int
    exponent: int
    step: int
    length: int


@dataclass(frozen=True)
class RationalGF:
    numerator: tuple[int, ...]
    denominator: tuple[tuple[int, int, int], ...]  # (sign, exponent, multiplicity)


@dataclass(frozen=True)
class SmallestPartSum:
    template: TermTemplate


@dataclass(frozen=True)
class Phi21:
    a: Parameter
    b: Parameter
    c: Parameter
    step: int
    z: Parameter


@dataclass(frozen=True)
class Mock:
    function: str
    form: str = "defining"
    sign: int = 1


@dataclass(frozen=True)
class Theta:
    alternating: bool = False


@dataclass(frozen=True)
class FamilyCounts:
    """Enumeration-side counting series of a registered family."""

    family: str
    mode: str = partitions.WEIGHT_NONE


@dataclass(frozen=True)
class FamilyGF:
    """Template-side generating function of a registered family."""

    family: str
    signed: bool = False


@dataclass(frozen=True)
class Overpartitions:
    odd_only: bool = False


@dataclass(frozen=True)
class AdyCounts:
    distinct: bool
    allow_zero: bool = False


@dataclass(frozen=True)
class CoefficientFormula:
    """sum_n (+-1)^n c(n) q^n for a named closed coefficient formula."""

    name: str  # "n" or "floor((n+2)/3)"
    alternating: bool = False


@dataclass(frozen=True)
class CubicProgression:
    """sum_n (+-1)^n (n+1) (a(n) + b(n) q + c(n) q^2) q^(3n+offset).

    a, b, c are affine in n, given as (slope, intercept) pairs.
    """

    offset: int
    a: tuple[int, int]
    b: tuple[int, int]
    c: tuple[int, int]
    alternating: bool = False


Recipe = Union[
    Const,
    Monomial,
    Add,
    Scale,
    Mul,
    Inv,
    NegVar,
    PochInf,
    PochFin,
    RationalGF,
    SmallestPartSum,
    Phi21,
    Mock,
    Theta,
    FamilyCounts,
    FamilyGF,
    Overpartitions,
    AdyCounts,
    CoefficientFormula,
    CubicProgression,
]

_FORMULAS = {
    "n": lambda n: n,
    "floor((n+2)/3)": lambda n: (n + 2) // 3 if n else 0,
}


def evaluate(node: Recipe, order: int) -> Series:
    """Evaluate a recipe tree to a series of the given order."""
    if isinstance(node, Const):
        return Series.one(order).scale(node.value)
    if isinstance(node, Monomial):
        return Series.monomial(node.exponent, order, node.coefficient)
    if isinstance(node, Add):
        out = Series.zero(order)
        for term in node.terms:
            out = out + evaluate(term, order)
        return out
    if isinstance(node, Scale):
        return evaluate(node.node, order).scale(node.factor)
    if isinstance(node, Mul):
        out = Series.one(order)
        for factor in node.factors:
            out = out * evaluate(factor, order)
        return out
    if isinstance(node, Inv):
        return evaluate(node.node, order).invert()
    if isinstance(node, NegVar):
        return evaluate(node.node, order).negate_variable()
    if isinstance(node, PochInf):
        return poch_infinite(Parameter.monomial(node.exponent, node.sign), node.step, order)
    if isinstance(node, PochFin):
        return poch_finite(
            Parameter.monomial(node.exponent, node.sign), node.step, node.length, order
        )
    if isinstance(node, RationalGF):
        return rational_series(node.numerator, node.denominator, order)
    if isinstance(node, SmallestPartSum):
        return sum_over_smallest(node.template, order)
    if isinstance(node, Phi21):
        return phi21(node.a, node.b, node.c, node.step, node.z, order)
    if isinstance(node, Mock):
        return mock_theta(MockThetaForm(node.function, node.form, node.sign), order)
    if isinstance(node, Theta):
        return theta_squares(order, node.alternating)
    if isinstance(node, FamilyCounts):
        spec = partitions.FAMILIES[node.family]
        return partitions.family_series(spec, order, node.mode, budget=max(order, 1))
    if isinstance(node, FamilyGF):
        return family_gf_series(node.family, node.signed, order)
    if isinstance(node, Overpartitions):
        return Series(
            [partitions.count_overpartitions(n, node.odd_only) for n in range(order + 1)]
        )
    if isinstance(node, AdyCounts):
        return Series(
            [
                partitions.count_ady(n, node.distinct, node.allow_zero)
                for n in range(order + 1)
            ]
        )
    if isinstance(node, CoefficientFormula):
        f = _FORMULAS[node.name]
        return Series(
            [
                (-1) ** n * f(n) if node.alternating else f(n)
                for n in range(order + 1)
            ]
        )
    if isinstance(node, CubicProgression):
        out = [0] * (order + 1)
        n = 0
        while 3 * n + node.offset <= order:
            sign = -1 if node.alternating and n % 2 else 1
            for shift, (slope, intercept) in enumerate((node.a, node.b, node.c)):
                e = 3 * n + node.offset + shift
                if e <= order:
                    out[e] += sign * (n + 1) * (slope * n + intercept)
            n += 1
        return Series(out)
    raise TypeError(f"unknown recipe node {node!r}")


def uses_enumeration(node: Recipe) -> bool:
    """True when any leaf counts actual partition objects."""
    if isinstance(node, (FamilyCounts, Overpartitions, AdyCounts)):
        return True
    if isinstance(node, Add):
        return any(uses_enumeration(t) for t in node.terms)
    if isinstance(node, Mul):
        return any(uses_enumeration(f) for f in node.factors)
    if isinstance(node, (Scale, Inv, NegVar)):
        return uses_enumeration(node.node)
    return False


# ----------------------------------------------------------------------
# rendering

def _mono_str(sign: int, exponent: int) -> str:
    s = "-" if sign < 0 else ""
    if exponent == 0:
        return f"{s}1"
    return f"{s}q" if exponent == 1 else f"{s}q^{exponent}"


def _param_str(p: Parameter) -> str:
    return "0" if p.is_zero else _mono_str(p.sign, p.exponent)


def _poly_str(coeffs) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mag = "" if abs(c) == 1 and i else str(abs(c))
        var = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
        glue = "*" if mag and var else ""
        term = f"{mag}{glue}{var}"
        terms.append(f"- {term}" if c < 0 else (f"+ {term}" if terms else term))
    return " ".join(terms) or "0"


def _affine_str(slope: int, intercept: int, var: str = "n") -> str:
    if slope == 0:
        return str(intercept)
    head = var if slope == 1 else f"{slope}{var}"
    if intercept == 0:
        return head
    return f"{head}{'+' if intercept > 0 else '-'}{abs(intercept)}"


def render(node: Recipe) -> str:
    """Human-readable formula for a recipe tree."""
    if isinstance(node, Const):
        return str(node.value)
    if isinstance(node, Monomial):
        c = "" if node.coefficient == 1 else f"{node.coefficient}*"
        return f"{c}{_mono_str(1, node.exponent)}"
    if isinstance(node, Add):
        return " + ".join(render(t) for t in node.terms)
    if isinstance(node, Scale):
        return f"{node.factor}*({render(node.node)})"
    if isinstance(node, Mul):
        return " * ".join(f"({render(f)})" for f in node.factors)
    if isinstance(node, Inv):
        return f"1/({render(node.node)})"
    if isinstance(node, NegVar):
        return f"[q -> -q]({render(node.node)})"
    if isinstance(node, PochInf):
        return f"({_mono_str(node.sign, node.exponent)}; q^{node.step})_inf"
    if isinstance(node, PochFin):
        return f"({_mono_str(node.sign, node.exponent)}; q^{node.step})_{node.length}"
    if isinstance(node, RationalGF):
        den = " ".join(
            f"(1{'+' if s < 0 else '-'}q^{e})^{m}" if m > 1 else f"(1{'+' if s < 0 else '-'}q^{e})"
            for s, e, m in node.denominator
        )
        return f"[{_poly_str(node.numerator)}] / {den}"
    if isinstance(node, SmallestPartSum):
        t = node.template
        parts = []
        for f in t.factors:
            e = _affine_str(f.exp_slope, f.exp_offset)
            body = f"({'-' if f.sign < 0 else ''}q^({e}); q^{f.step})_{f.length}"
            parts.append(f"1/{body}" if f.denominator else body)
        sgn = "(-1)^n " if t.alternating else ""
        return (
            f"sum_n {sgn}q^({_affine_str(t.prefix_slope, t.prefix_offset)}) "
            + " ".join(parts)
        )
    if isinstance(node, Phi21):
        return (
            f"2phi1({_param_str(node.a)}, {_param_str(node.b)}; {_param_str(node.c)}; "
            f"q^{node.step}, {_param_str(node.z)})"
        )
    if isinstance(node, Mock):
        arg = "-q" if node.sign < 0 else "q"
        return f"{node.function}[{node.form}]({arg})"
    if isinstance(node, Theta):
        return "1 + 2 sum (-1)^n q^(n^2)" if node.alternating else "1 + 2 sum q^(n^2)"
    if isinstance(node, FamilyCounts):
        return f"counts[{node.family}, weight={node.mode}]"
    if isinstance(node, FamilyGF):
        return f"gf[{node.family}{', signed' if node.signed else ''}]"
    if isinstance(node, Overpartitions):
        return "overpartition counts" + (" (odd parts)" if node.odd_only else "")
    if isinstance(node, AdyCounts):
        kind = "distinct" if node.distinct else "repeated"
        zero = " + optional zero part" if node.allow_zero else ""
        return f"counts[odd parts < 2*smallest, {kind}{zero}]"
    if isinstance(node, CoefficientFormula):
        sgn = "(-1)^n " if node.alternating else ""
        return f"sum_n {sgn}{node.name} q^n"
    if isinstance(node, CubicProgression):
        sgn = "(-1)^n " if node.alternating else ""
        return (
            f"sum_n {sgn}(n+1)[({_affine_str(*node.a)}) + ({_affine_str(*node.b)})q "
            f"+ ({_affine_str(*node.c)})q^2] q^(3n+{node.offset})"
        )
    raise TypeError(f"unknown recipe node {node!r}")
