"""Diagram-only pole classification and its cross-check against the exact
pole set.

A candidate -nu/N of a minimal principalization is a pole exactly when some
component witnesses one of five local shapes: a weak-transform component
with s0 = -1/N; an exceptional curve with no neighbor; one neighbor with
alpha != -1; two neighbors with alpha_1 + alpha_2 != 0; or at least three
neighbors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import IntersectionDiagram, alphas
from .errors import NonMinimalDiagram, NotACandidate
from .poly import frac_str
from .zeta import candidate_poles, pole_report


@dataclass(frozen=True)
class ConditionHit:
    condition: int
    witness: str


@dataclass
class Verdict:
    s0: Fraction
    is_pole: bool
    hits: list[ConditionHit] = field(default_factory=list)


def classify(diagram: IntersectionDiagram, s0: Fraction,
             assume_minimal: bool = False) -> Verdict:
    """Apply the five-condition test to one candidate value.

    Aggregates over every component attaining -nu/N = s0; a value is a pole
    as soon as one component witnesses a condition.
    """
    if not (diagram.minimal or assume_minimal):
        raise NonMinimalDiagram(
            "pole classification requires a minimal principalization")
    s0 = Fraction(s0)
    if s0 not in set(candidate_poles(diagram)):
        raise NotACandidate(f"{frac_str(s0)} is not a candidate pole")
    hits: list[ConditionHit] = []
    for v in diagram.vertices:
        if Fraction(-v.nu, v.N) != s0:
            continue
        if v.kind == "strict-branch":
            hits.append(ConditionHit(1, v.ident))
            continue
        table = alphas(diagram, v.ident)
        m = len(table)
        if m == 0:
            hits.append(ConditionHit(2, v.ident))
        elif m == 1 and table[0][1] != -1:
            hits.append(ConditionHit(3, v.ident))
        elif m == 2 and table[0][1] + table[1][1] != 0:
            hits.append(ConditionHit(4, v.ident))
        elif m >= 3:
            hits.append(ConditionHit(5, v.ident))
    return Verdict(s0=s0, is_pole=bool(hits), hits=hits)


def poles_by_criterion(diagram: IntersectionDiagram,
                       assume_minimal: bool = False) -> set[Fraction]:
    """The classification applied to every candidate."""
    return {
        s0 for s0 in candidate_poles(diagram)
        if classify(diagram, s0, assume_minimal=assume_minimal).is_pole
    }


@dataclass
class CrossCheckReport:
    passed: bool
    criterion_poles: set[Fraction]
    exact_poles: set[Fraction]
    detail: str = ""


def cross_check(diagram: IntersectionDiagram,
                assume_minimal: bool = False) -> CrossCheckReport:
    """Assert that the classification agrees with direct pole extraction."""
    by_criterion = poles_by_criterion(diagram, assume_minimal=assume_minimal)
    report = pole_report(diagram)
    exact = report.pole_locations()
    if by_criterion == exact:
        return CrossCheckReport(True, by_criterion, exact)
    detail = (
        f"criterion {{{', '.join(frac_str(p) for p in sorted(by_criterion))}}}"
        f" != exact {{{', '.join(frac_str(p) for p in sorted(exact))}}};"
        f" zeta = {report.zeta}"
    )
    return CrossCheckReport(False, by_criterion, exact, detail)
