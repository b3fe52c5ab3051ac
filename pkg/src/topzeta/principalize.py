"""Minimal principalization driver: bad-point detection and the blow-up loop.

A point over the origin is bad when the total transform fails to be a
normal-crossings monomial there: the residual (weak-transform) ideal still
vanishes, a strict branch of the curve part is singular or tangent to the
exceptional locus, a branch passes through a crossing of two exceptional
curves, or two branches meet.  Blowing up bad points until none remain is
the minimal principalization in dimension two; bad points are processed in
a fixed order so runs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .blowup import (
    BlowUpEvent,
    ChartState,
    Occurrence,
    PointRecord,
    blow_up,
    initial_state,
)
from .diagram import IntersectionDiagram, diagram_from_state
from .errors import (
    CenterNotRational,
    InternalInvariantError,
    StepBudgetExceeded,
)
from .poly import (
    BiPoly,
    UniPoly,
    rational_roots,
    squarefree_part,
    uni_gcd,
    uni_to_str,
)

DEFAULT_MAX_STEPS = 512


def _rational_points_of(locator: UniPoly, occ: Occurrence,
                        context: str) -> list[Fraction]:
    """Rational zeros of a locator polynomial on an occurrence; refuse the
    run when irrational zeros remain."""
    roots, cofactor = rational_roots(locator)
    if cofactor.degree() > 0:
        var = "y" if occ.axis[0] == "x" else "x"
        raise CenterNotRational(
            f"{uni_to_str(squarefree_part(cofactor), var)} "
            f"({context} on {occ.ident})")
    return [r for r, _ in roots]


def _bad_values_on_occurrence(state: ChartState,
                              occ: Occurrence) -> list[tuple[Fraction, str]]:
    """(parameter value, reason) pairs for bad points on the owned part of
    one divisor appearance, reasons deterministic.

    A fully owned appearance extracts rational zeros of each locator
    polynomial and refuses irrational ones; a point-owned appearance only
    evaluates the locators at t = 0.
    """
    chart = occ.chart
    pointwise = occ.mode == "point"
    found: list[tuple[Fraction, str]] = []

    def emit(locator: UniPoly, context: str, reason: str):
        if pointwise:
            if locator.eval(0) == 0:
                found.append((Fraction(0), reason))
        elif locator.degree() > 0:
            for t in _rational_points_of(locator, occ, context):
                found.append((t, reason))

    # (a) residual ideal vanishes: common zeros of the restrictions
    restrictions = [chart.restrict(r, occ.axis) for r in chart.residual]
    locator = UniPoly()
    for rho in restrictions:
        locator = uni_gcd(locator, rho)
    if locator.is_zero():
        raise InternalInvariantError(
            f"residual ideal vanishes along divisor {occ.ident}")
    emit(locator, "residual zero locus", "residual-vanishes")

    carrier_restrictions: list[tuple[str, UniPoly]] = []
    for c in state.carriers:
        eq = chart.carriers.get(c.ident)
        if eq is None:
            continue
        sigma = chart.restrict(eq, occ.axis)
        if sigma.is_zero():
            raise InternalInvariantError(
                f"carrier {c.ident} contains divisor {occ.ident}")
        carrier_restrictions.append((c.ident, sigma))

    # (b)/(c) singular or tangential branch: multiple zeros of a restriction
    for ident, sigma in carrier_restrictions:
        if sigma.degree() <= 0:
            continue
        emit(uni_gcd(sigma, sigma.derivative()),
             f"tangency of {ident}", f"branch-tangent:{ident}")

    # (d) two branches meet on the divisor
    for i in range(len(carrier_restrictions)):
        for j in range(i + 1, len(carrier_restrictions)):
            ki, si = carrier_restrictions[i]
            kj, sj = carrier_restrictions[j]
            emit(uni_gcd(si, sj), f"crossing {ki}/{kj}",
                 f"branches-meet:{ki}:{kj}")

    # (c) branch through a crossing of two exceptional divisors
    corner_axis = "y" if occ.axis[0] == "x" else "x"
    corner_values = []
    for other in state.divisor_order:
        if other == occ.ident:
            continue
        ax = chart.axis_of(other)
        if ax is not None and ax[0] == corner_axis:
            corner_values.append((other, ax[1]))
    if pointwise:
        corner_values = [(o, t) for o, t in corner_values if t == 0]
    for other, t_corner in corner_values:
        for ident, sigma in carrier_restrictions:
            if sigma.eval(t_corner) == 0:
                found.append((t_corner, f"branch-at-corner:{ident}:{other}"))

    found.sort(key=lambda item: (item[0], item[1]))
    return found


def _point_identity(state: ChartState, chart, coords) -> frozenset:
    """Chart-independent identity of a point: the set of (divisor, birth
    coordinate) pairs over the divisors through it."""
    pairs = []
    for d in chart.divisors_through(coords):
        axis = chart.axis_of(d)
        pm = chart.pms.get(d)
        if axis is None or pm is None:
            continue
        t = coords[1] if axis[0] == "x" else coords[0]
        pairs.append((d, pm.to_birth(t)))
    return frozenset(pairs)


def find_bad_points(state: ChartState) -> list[PointRecord]:
    """All points over the origin violating the normal-crossings-monomial
    condition, ordered by chart path then coordinate, deduplicated.

    Raises CenterNotRational when a bad point is algebraic of degree > 1.
    """
    if not state.log:
        chart = state.leaves[0]
        reasons = []
        if all(r.constant_term() == 0 for r in chart.residual):
            reasons.append("residual-vanishes")
        total_mult = sum(
            m for v in chart.carriers.values()
            if (m := v.mult_at_origin()) != 0
        )
        if total_mult >= 2:
            reasons.append("curve-part-not-normal-crossings")
        if reasons:
            return [PointRecord(0, (Fraction(0), Fraction(0)), (),
                                tuple(reasons))]
        return []

    per_leaf: dict[int, list] = {}
    for occ in state.occurrences():
        for t, reason in _bad_values_on_occurrence(state, occ):
            coords = occ.param_point(t)
            per_leaf.setdefault(occ.leaf_index, []).append(
                (coords, reason, occ))

    records: list[PointRecord] = []
    identities: list[frozenset] = []
    for leaf_index in sorted(per_leaf):
        hits = sorted(per_leaf[leaf_index],
                      key=lambda h: (h[0][0], h[0][1], h[1]))
        for coords, reason, occ in hits:
            ident = _point_identity(state, occ.chart, coords)
            merged = False
            for i, known in enumerate(identities):
                if known & ident:
                    if not ident <= known:
                        identities[i] = known | ident
                    if reason not in records[i].reasons:
                        records[i] = PointRecord(
                            records[i].leaf_index, records[i].coords,
                            records[i].divisors,
                            records[i].reasons + (reason,))
                    merged = True
                    break
            if not merged:
                identities.append(ident)
                records.append(PointRecord(
                    leaf_index, coords,
                    tuple(occ.chart.divisors_through(coords)), (reason,)))
    return records


@dataclass
class PrincipalizationResult:
    state: ChartState
    diagram: IntersectionDiagram
    log: list[BlowUpEvent]
    step_count: int

    @property
    def gens(self) -> list[BiPoly]:
        return self.state.gens


def principalize(gens: Iterable[BiPoly],
                 max_steps: int = DEFAULT_MAX_STEPS) -> PrincipalizationResult:
    """Blow up the first bad point until none remain.

    Every performed blow-up had a bad center; the reasons are recorded in
    the log as the minimality witness.
    """
    state = initial_state(list(gens))
    steps = 0
    while True:
        bad = find_bad_points(state)
        if not bad:
            break
        if steps >= max_steps:
            raise StepBudgetExceeded(
                f"no principalization within {max_steps} blow-ups")
        blow_up(state, bad[0])
        steps += 1
    state.complete = True
    diagram = diagram_from_state(state)
    return PrincipalizationResult(state, diagram, list(state.log), steps)


@dataclass
class MinimalityReport:
    passed: bool
    failures: list[str]


def verify_minimality(result: PrincipalizationResult) -> MinimalityReport:
    """Replay the log and confirm each center was bad when it was chosen."""
    state = initial_state(list(result.gens))
    failures: list[str] = []
    for event in result.log:
        bad = find_bad_points(state)
        leaf_index = next(
            (i for i, ch in enumerate(state.leaves)
             if ch.path == event.chart_path), None)
        if leaf_index is None:
            failures.append(f"step {event.step}: chart not found in replay")
            break
        chart = state.leaves[leaf_index]
        ident = _point_identity(state, chart, event.center)
        is_bad = any(
            (not ident and b.leaf_index == leaf_index
             and b.coords == event.center)
            or (ident and ident & _point_identity(
                state, state.leaves[b.leaf_index], b.coords))
            for b in bad
        )
        if not is_bad:
            failures.append(
                f"step {event.step}: center {event.center} in chart "
                f"{event.chart_path} was not a bad point")
        blow_up(state, PointRecord(leaf_index, event.center, (), ()))
    return MinimalityReport(passed=not failures, failures=failures)
