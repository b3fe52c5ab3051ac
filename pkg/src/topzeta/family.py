"""The two-parameter family (x^b y, x^a + y^(b+1)) and pole realization.

Its minimal principalization is a chain of a - b exceptional curves with
numerical data (b+1, 2), (b+2, 3), ..., (a, a-b+1); the last one carries the
pole -(a-b+1)/a.  Running over all a > b >= 0 realizes every rational number
in [-1, 0) together with the values -1 - 1/i, and those are the only
rational numbers attainable as poles in two variables.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InternalInvariantError, OutOfRange, ParameterOrder
from .poly import BiPoly, frac_str


def build(a: int, b: int) -> list[BiPoly]:
    """Generators (x^b y, x^a + y^(b+1))."""
    if not (a > b >= 0):
        raise ParameterOrder(f"need a > b >= 0, got a={a}, b={b}")
    g1 = BiPoly.monomial(b, 1)
    g2 = BiPoly.monomial(a, 0) + BiPoly.monomial(0, b + 1)
    return [g1, g2]


def expected_chain(a: int, b: int) -> list[tuple[int, int]]:
    """Predicted numerical data (N, nu) along the chain, in birth order."""
    if not (a > b >= 0):
        raise ParameterOrder(f"need a > b >= 0, got a={a}, b={b}")
    return [(b + i, i + 1) for i in range(1, a - b + 1)]


def admissible(s0: Fraction) -> bool:
    """Membership in Q intersect ([-1, 0) union {-1 - 1/i : i >= 1})."""
    s0 = Fraction(s0)
    if -1 <= s0 < 0:
        return True
    if s0 < -1:
        step = -1 - s0   # would be 1/i
        return step.numerator == 1
    return False


def realize_pole(s0: Fraction) -> tuple[int, int]:
    """Parameters (a, b) whose family ideal has a pole exactly at s0.

    Write -s0 = p/q in lowest terms and take the least k with p*k >= 2 and
    b = qk - pk + 1 >= 0, a = qk; the construction is re-validated against
    the zeta function of the resulting ideal on every call.
    """
    s0 = Fraction(s0)
    if not admissible(s0):
        raise OutOfRange(f"{frac_str(s0)} is not realizable as a pole")
    p, q = -s0.numerator, s0.denominator
    k = 1
    while p * k < 2 or q * k - p * k + 1 < 0:
        k += 1
        if k > 2 * q + 2:
            raise OutOfRange(f"no parameters realize {frac_str(s0)}")
    a, b = q * k, q * k - p * k + 1

    from .principalize import principalize
    from .zeta import pole_report
    report = pole_report(principalize(build(a, b)).diagram)
    if s0 not in report.pole_locations():
        raise InternalInvariantError(
            f"claimed realization (a={a}, b={b}) has poles "
            f"{sorted(report.pole_locations())}, not {frac_str(s0)}")
    return a, b
