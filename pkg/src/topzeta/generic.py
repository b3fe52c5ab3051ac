"""Generic members of the linear system spanned by the generators.

A general combination lambda_1 f_1 + ... + lambda_l f_l shares the numerical
data of the principalization: its vanishing order along every divisor is the
minimum of the generators' orders, and its strict transform crosses each
exceptional curve in n simple points away from the existing diagram points.
Genericity of a concrete sample is certified, not assumed: a failed check
triggers a deterministic resample within a fixed budget.

The certified counts feed two exact identities per exceptional curve E with
m diagram neighbors and ratio nu/N:

    sum(alpha_i) + n (1 - nu/N) = m + n - 2
    sum(alpha_i) = m - 2 + nu n / N
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .blowup import (
    carrier_intersections,
    divisor_order_of,
    point_zero_data,
    restrict_residual_to,
    union_zero_data,
    zero_count,
    zeros_in_birth,
)
from .diagram import alphas
from .errors import DegenerateLambda, InternalInvariantError, RetriesExhausted
from .poly import BiPoly, uni_gcd
from .principalize import PrincipalizationResult

RETRY_BUDGET = 16


def sample_lambda(count: int, seed: int, attempt: int) -> list[Fraction]:
    """Deterministic nonzero coefficients; attempt 0 is all ones."""
    if count < 2:
        raise ValueError("a combination needs at least two coefficients")
    if attempt == 0:
        return [Fraction(1)] * count
    rng = random.Random(f"{seed}:{attempt}")
    return [Fraction(rng.randint(1, 9)) for _ in range(count)]


@dataclass
class DivisorCheck:
    ident: str
    N_from_generic: int
    N_min: int
    n: int | None = None           # None for strict branches
    relation_lhs: Fraction | None = None
    relation_rhs: Fraction | None = None

    @property
    def min_property_ok(self) -> bool:
        return self.N_from_generic == self.N_min


@dataclass
class GenericCheckReport:
    lam: list[Fraction]
    retries: int
    per_divisor: dict[str, DivisorCheck] = field(default_factory=dict)

    def n_table(self) -> dict[str, int]:
        return {d: c.n for d, c in self.per_divisor.items()
                if c.n is not None}


def _member(result: PrincipalizationResult,
            lam: list[Fraction]) -> BiPoly:
    g = BiPoly.zero()
    for c, f in zip(lam, result.gens):
        g = g + f.scale(c)
    return g


def verify_min_property(result: PrincipalizationResult,
                        lam: list[Fraction]) -> dict[str, DivisorCheck]:
    """Order of the combination along each divisor versus the minimum over
    generators; inequality marks the sample as degenerate."""
    member = _member(result, lam)
    if member.is_zero():
        raise DegenerateLambda("combination is identically zero")
    state = result.state
    out: dict[str, DivisorCheck] = {}
    idents = list(state.divisor_order) + [
        c.ident for c in state.carriers if c.through_origin]
    for ident in idents:
        got = divisor_order_of(state, member, ident)
        want = min(divisor_order_of(state, g, ident) for g in result.gens)
        out[ident] = DivisorCheck(ident=ident, N_from_generic=got, N_min=want)
    return out


def count_n(result: PrincipalizationResult, lam: list[Fraction],
            ident: str) -> int:
    """Distinct crossings of the generic member's strict transform with one
    exceptional curve, deduplicated across the atlas.

    Certifies along the way that every restriction is squarefree and that
    no crossing sits at an existing diagram point; violations raise
    DegenerateLambda so the caller can resample.
    """
    state = result.state
    pieces = restrict_residual_to(state, ident, lam)
    data = None
    for piece in pieces:
        if piece.poly.is_zero():
            raise DegenerateLambda(
                f"combination vanishes along {ident}")
        if piece.axis[0] == "x":
            if uni_gcd(piece.poly, piece.poly.derivative()).degree() > 0:
                raise DegenerateLambda(
                    f"restriction to {ident} is not squarefree")
            data = union_zero_data(data, zeros_in_birth(piece.pm, piece.poly))
        elif piece.poly.eval(0) == 0:
            # point-owned appearance: one crossing, must be simple
            if piece.poly.derivative().eval(0) == 0:
                raise DegenerateLambda(
                    f"multiple crossing at the owned point of {ident}")
            data = union_zero_data(data, point_zero_data(piece.pm))
    poly, inf = data if data is not None else (None, False)

    corners = state.corner_registry()[ident]
    excluded_inf = any(lam0 is None for lam0 in corners)
    hits = carrier_intersections(state)
    branch_data = [v for (c, d), v in hits.items() if d == ident]
    if poly is not None:
        for lam0 in corners:
            if lam0 is not None and poly.eval(lam0) == 0:
                raise DegenerateLambda(
                    f"crossing at a corner of {ident}")
        for bpoly, binf in branch_data:
            if uni_gcd(poly, bpoly).degree() > 0:
                raise DegenerateLambda(
                    f"crossing at a branch point of {ident}")
            if inf and binf:
                raise DegenerateLambda(
                    f"crossing at the infinite branch point of {ident}")
    if inf and excluded_inf:
        raise DegenerateLambda(
            f"crossing at the infinite corner of {ident}")
    return zero_count(data)


def verify_relations(result: PrincipalizationResult,
                     lam: list[Fraction]) -> GenericCheckReport:
    """Both identities, exactly, for every exceptional divisor.

    A mismatch here is an engine bug, not sample degeneracy: the counts were
    already certified.
    """
    checks = verify_min_property(result, lam)
    for ident, c in checks.items():
        if not c.min_property_ok:
            raise DegenerateLambda(
                f"order along {ident}: {c.N_from_generic} != min "
                f"{c.N_min}")
    diagram = result.diagram
    for v in diagram.exceptional():
        n = count_n(result, lam, v.ident)
        table = alphas(diagram, v.ident)
        m = len(table)
        total = sum((a for _, a in table), Fraction(0))
        r = diagram.ratio(v.ident)
        lhs = total + n * (1 - r)
        rhs = Fraction(m + n - 2)
        if lhs != rhs or total != m - 2 + r * n:
            raise InternalInvariantError(
                f"numerical-data relation fails at {v.ident}: "
                f"sum(alpha) = {total}, m = {m}, n = {n}, ratio = {r}")
        check = checks[v.ident]
        check.n = n
        check.relation_lhs = total
        check.relation_rhs = Fraction(m - 2) + r * n
    return GenericCheckReport(lam=list(lam), retries=0, per_divisor=checks)


def certify_generic(result: PrincipalizationResult,
                    seed: int = 0) -> GenericCheckReport:
    """First accepted sample within the retry budget, with its full report."""
    l = len(result.gens)
    last = None
    for attempt in range(RETRY_BUDGET):
        lam = sample_lambda(l, seed, attempt)
        try:
            report = verify_relations(result, lam)
            report.retries = attempt
            return report
        except DegenerateLambda as exc:
            last = exc
    raise RetriesExhausted(
        f"no generic sample within {RETRY_BUDGET} attempts: {last}")
