"""Third-order mock theta functions omega, psi, nu in several guises.

Each function is available through its defining q-series, through an
alternative single-sum ("fine") representation, and for omega and nu through
the smallest-part style sums ("ady") that tie them to restricted partitions:

    omega(q) = sum_{n>=0} q^(2n^2+2n) / (q;q^2)_{n+1}^2
    psi(q)   = sum_{n>=1} q^(n^2) / (q;q^2)_n
    nu(q)    = sum_{n>=0} (-q)^n (q;q^2)_n

psi's sum is taken from n = 1 so that its constant term vanishes; the n = 0
convention would add a constant 1 that none of its other representations
carry.  The routes are computationally independent, which is what makes the
cross-checks in the identity catalog meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import Series, div_one_minus, mul_one_minus
from .qengine import Parameter, QEngineError, phi21, poch_infinite

FUNCTIONS = ("omega", "psi", "nu")
FORMS = ("defining", "fine", "ady")


@dataclass(frozen=True)
class MockThetaForm:
    """Selects a mock theta function, a computation route and the argument sign.

    The ady route exists only for omega at +q (where it equals q*omega(q))
    and for nu at -q (where it equals nu(-q)).
    """

    function: str
    form: str = "defining"
    argument_sign: int = 1

    def __post_init__(self):
        if self.function not in FUNCTIONS:
            raise QEngineError(f"unknown mock theta function {self.function!r}")
        if self.form not in FORMS:
            raise QEngineError(f"unknown mock theta form {self.form!r}")
        if self.argument_sign not in (-1, 1):
            raise QEngineError("argument sign must be -1 or +1")
        if self.form == "ady" and (self.function, self.argument_sign) not in (
            ("omega", 1),
            ("nu", -1),
        ):
            raise QEngineError(
                "the ady form exists only for omega at +q and nu at -q"
            )


def omega(order: int) -> Series:
    """omega(q) by its defining sum; terms vanish once 2n^2+2n > order."""
    total = Series.zero(order)
    inv_poch = div_one_minus(Series.one(order), 1, 1)  # 1/(q;q^2)_1
    n = 0
    while 2 * n * n + 2 * n <= order:
        total = total + (inv_poch * inv_poch).shifted(2 * n * n + 2 * n)
        inv_poch = div_one_minus(inv_poch, 1, 2 * n + 3)
        n += 1
    return total


def omega_fine(order: int) -> Series:
    """omega(q) = sum_{n>=0} q^n / (q;q^2)_{n+1}, built by term ratios."""
    term = div_one_minus(Series.one(order), 1, 1)
    total = Series.zero(order)
    for n in range(order + 1):
        total = total + term
        term = div_one_minus(term, 1, 2 * n + 3).shifted(1)
    return total


def omega_ady(order: int) -> Series:
    """sum_{n>=1} q^n / ((1-q^n) (q^(n+1);q)_n (q^(2n+2);q^2)_inf) = q*omega(q)."""
    term = poch_infinite(Parameter.monomial(4), 2, order).invert()
    term = div_one_minus(div_one_minus(term, 1, 1), 1, 2).shifted(1)
    total = Series.zero(order)
    n = 1
    while n <= order:
        total = total + term
        # term ratio: q (1-q^n) / (1-q^(2n+1))
        term = div_one_minus(mul_one_minus(term, 1, n), 1, 2 * n + 1).shifted(1)
        n += 1
    return total


def psi(order: int) -> Series:
    """psi(q) by its defining sum from n = 1; constant term is zero."""
    total = Series.zero(order)
    if order < 1:
        return total
    term = div_one_minus(Series.one(order), 1, 1).shifted(1)  # q/(1-q)
    n = 1
    while n * n <= order:
        total = total + term
        term = div_one_minus(term, 1, 2 * n + 1).shifted(2 * n + 1)
        n += 1
    return total


def psi_fine(order: int) -> Series:
    """psi(q) = sum_{n>=0} (-q^2;q^2)_n q^(n+1), built by term ratios."""
    term = Series.monomial(1, order)
    total = Series.zero(order)
    for n in range(order):
        total = total + term
        term = mul_one_minus(term, -1, 2 * n + 2).shifted(1)
    return total


def nu(order: int, sign: int = 1) -> Series:
    """nu(q) (sign=+1) or nu(-q) (sign=-1) by the defining sum.

    The -q evaluation is computed directly as sum q^n (-q;q^2)_n rather than
    by flipping signs afterwards, so the two routes can be cross-checked.
    """
    if sign not in (-1, 1):
        raise QEngineError("sign must be -1 or +1")
    term = Series.one(order)
    total = Series.zero(order)
    for n in range(order + 1):
        total = total + term
        term = mul_one_minus(term, sign, 2 * n + 1).shifted(1)
        if sign == 1:
            term = -term
    return total


def nu_fine(order: int, sign: int = 1) -> Series:
    """nu through the generic 2phi1 evaluator instead of direct summation."""
    if sign == 1:
        return phi21(
            Parameter.monomial(1),
            Parameter.monomial(2),
            Parameter.zero(),
            2,
            Parameter.monomial(1, -1),
            order,
        )
    return phi21(
        Parameter.monomial(1, -1),
        Parameter.monomial(2),
        Parameter.zero(),
        2,
        Parameter.monomial(1),
        order,
    )


def nu_ady(order: int) -> Series:
    """sum_{n>=0} q^n (-q^(n+1);q)_n (-q^(2n+2);q^2)_inf = nu(-q)."""
    term = poch_infinite(Parameter.monomial(2, -1), 2, order)
    total = Series.zero(order)
    n = 0
    while n <= order:
        total = total + term
        # term ratio: q (1+q^(2n+1)) / (1+q^(n+1))
        term = div_one_minus(mul_one_minus(term, -1, 2 * n + 1), -1, n + 1).shifted(1)
        n += 1
    return total


def theta_squares(order: int, alternating: bool = False) -> Series:
    """1 + 2*sum_{n>=1} (+-1)^n q^(n^2): the square-supported theta series."""
    out = [0] * (order + 1)
    out[0] = 1
    n = 1
    while n * n <= order:
        out[n * n] = -2 if alternating and n % 2 == 1 else 2
        n += 1
    return Series(out)


_DISPATCH = {
    ("omega", "defining"): omega,
    ("omega", "fine"): omega_fine,
    ("psi", "defining"): psi,
    ("psi", "fine"): psi_fine,
}


def mock_theta(spec: MockThetaForm, order: int) -> Series:
    """Evaluate the requested function, route and argument sign."""
    if spec.form == "ady":
        return omega_ady(order) if spec.function == "omega" else nu_ady(order)
    if spec.function == "nu":
        base = nu if spec.form == "defining" else nu_fine
        return base(order, spec.argument_sign)
    base = _DISPATCH[(spec.function, spec.form)](order)
    if spec.argument_sign == -1:
        base = base.negate_variable()
    return base
