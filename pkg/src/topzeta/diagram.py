"""Decorated intersection diagrams and their structural validators.

Vertices are the components of the total-transform support over the origin
with numerical data (N, nu); edges are intersection points.  The degenerate
case where no blow-up is needed is stored explicitly (origin_case) because
the zeta function needs the branches through the origin there.

Validators check the known constraints on the numerical data of a minimal
principalization: bounds on alpha = nu_i - (nu/N) N_i, the sign pattern of
the alphas, the ordered-tree property of the ratios nu/N, and nu <= N + 1.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .blowup import ChartState, carrier_intersections, zero_count
from .errors import InternalInvariantError, MalformedDiagram
from .poly import frac_str


@dataclass(frozen=True)
class Vertex:
    ident: str
    kind: str  # "exceptional" | "strict-branch"
    N: int
    nu: int


def _id_key(ident: str) -> tuple:
    m = re.fullmatch(r"([A-Za-z]+)(\d+)", ident)
    if m:
        return (m.group(1), int(m.group(2)))
    return (ident, 0)


@dataclass
class IntersectionDiagram:
    vertices: list[Vertex]
    edges: set[frozenset]
    origin_case: Optional[list[str]] = None  # branch vertex ids
    minimal: bool = False

    def __post_init__(self):
        self.vertices = sorted(self.vertices, key=lambda v: _id_key(v.ident))
        self._by_id = {v.ident: v for v in self.vertices}
        if len(self._by_id) != len(self.vertices):
            raise MalformedDiagram("duplicate vertex identifiers")
        for e in self.edges:
            if len(e) != 2:
                raise MalformedDiagram(f"edge {set(e)} is not a pair")
            for v in e:
                if v not in self._by_id:
                    raise MalformedDiagram(f"edge endpoint {v} is unknown")
        if self.origin_case is not None:
            for b in self.origin_case:
                if b not in self._by_id:
                    raise MalformedDiagram(f"origin branch {b} is unknown")

    # -- queries --

    def vertex(self, ident: str) -> Vertex:
        return self._by_id[ident]

    def exceptional(self) -> list[Vertex]:
        return [v for v in self.vertices if v.kind == "exceptional"]

    def strict_branches(self) -> list[Vertex]:
        return [v for v in self.vertices if v.kind == "strict-branch"]

    def neighbors(self, ident: str) -> list[str]:
        out = [next(iter(e - {ident})) for e in self.edges if ident in e]
        return sorted(out, key=_id_key)

    def degree(self, ident: str) -> int:
        return sum(1 for e in self.edges if ident in e)

    def ratio(self, ident: str) -> Fraction:
        v = self._by_id[ident]
        return Fraction(v.nu, v.N)

    def is_equivalent_to(self, other: "IntersectionDiagram") -> bool:
        """Same canonical shape: identical vertex lists and edge sets."""
        return (self.vertices == other.vertices
                and self.edges == other.edges
                and self.origin_case == other.origin_case)


# --- construction from a completed state -------------------------------------

def diagram_from_state(state: ChartState) -> IntersectionDiagram:
    """Derive the dual graph of a (completed) run.

    Strict-branch vertices are the intersection points of the carriers'
    strict transforms with the fiber over the origin; the carrier exponent
    supplies their N.  Conjugate points each count as a vertex.
    """
    if not state.log:
        branches = [
            Vertex(f"S{i + 1}", "strict-branch", rec.N, 1)
            for i, rec in enumerate(state.strict_records)
        ]
        edges: set[frozenset] = set()
        if len(branches) == 2:
            edges.add(frozenset((branches[0].ident, branches[1].ident)))
        elif len(branches) > 2:
            raise InternalInvariantError(
                "degenerate case with more than two branches")
        return IntersectionDiagram(
            vertices=branches, edges=edges,
            origin_case=[b.ident for b in branches], minimal=True)

    vertices = [Vertex(d, state.divisors[d].kind, state.divisors[d].N,
                       state.divisors[d].nu)
                for d in state.divisor_order]
    edges = set(state.adjacency)

    corners = state.corner_registry()
    hits = carrier_intersections(state)
    serial = 0
    for c in state.carriers:
        for d in state.divisor_order:
            data = hits.get((c.ident, d))
            count = zero_count(data)
            if not count:
                continue
            poly, inf = data
            for lam, _partner in corners[d].items():
                if lam is None:
                    if inf:
                        raise InternalInvariantError(
                            f"branch of {c.ident} at a corner of {d}")
                elif poly.eval(lam) == 0:
                    raise InternalInvariantError(
                        f"branch of {c.ident} at a corner of {d}")
            for _ in range(count):
                serial += 1
                ident = f"S{serial}"
                vertices.append(Vertex(ident, "strict-branch",
                                       c.exponent, 1))
                edges.add(frozenset((ident, d)))
    return IntersectionDiagram(vertices=vertices, edges=edges,
                               origin_case=None, minimal=True)


# --- alpha table -------------------------------------------------------------

def alphas(diagram: IntersectionDiagram,
           ident: str) -> list[tuple[str, Fraction]]:
    """alpha_i = nu_i - (nu/N) N_i per neighbor of an exceptional vertex,
    sorted by neighbor identity."""
    v = diagram.vertex(ident)
    if v.kind != "exceptional":
        raise MalformedDiagram(f"{ident} is not an exceptional vertex")
    r = diagram.ratio(ident)
    out = []
    for n in diagram.neighbors(ident):
        w = diagram.vertex(n)
        out.append((n, Fraction(w.nu) - r * w.N))
    return out


@dataclass
class Report:
    name: str
    passed: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def _report(name: str, failures: list[str]) -> Report:
    return Report(name=name, passed=not failures, failures=failures)


# --- validators ---------------------------------------------------------------

def validate_alpha_bounds(diagram: IntersectionDiagram) -> Report:
    """-1 <= alpha_i < 1 for every neighbor of every exceptional vertex;
    alpha_i = -1 only with a single neighbor."""
    failures = []
    for v in diagram.exceptional():
        table = alphas(diagram, v.ident)
        m = len(table)
        for n, a in table:
            if not (-1 <= a < 1):
                failures.append(
                    f"{v.ident}: alpha toward {n} is {frac_str(a)}")
            if a == -1 and m != 1:
                failures.append(
                    f"{v.ident}: alpha = -1 with {m} neighbors")
    return _report("alpha-bounds", failures)


def validate_alpha_signs(diagram: IntersectionDiagram) -> Report:
    """Sign pattern of the alphas: at most one negative; for three or more
    neighbors at most one nonpositive; for two neighbors the ratio nu/N sits
    below the larger neighbor ratio whenever it sits above the smaller."""
    failures = []
    for v in diagram.exceptional():
        table = alphas(diagram, v.ident)
        m = len(table)
        neg = [n for n, a in table if a < 0]
        if len(neg) > 1:
            failures.append(f"{v.ident}: several negative alphas {neg}")
        if m >= 3:
            nonpos = [n for n, a in table if a <= 0]
            if len(nonpos) > 1:
                failures.append(
                    f"{v.ident}: several nonpositive alphas {nonpos}")
        if m == 2:
            r = diagram.ratio(v.ident)
            (n1, _), (n2, _) = table
            for a, b in ((n1, n2), (n2, n1)):
                if diagram.ratio(a) < r and not r < diagram.ratio(b):
                    failures.append(
                        f"{v.ident}: ratio not between neighbors {a}, {b}")
    return _report("two-neighbor-ordering", failures)


def validate_ordered_tree(diagram: IntersectionDiagram) -> Report:
    """The minimal-ratio part is connected and ratios strictly increase along
    any path leaving it."""
    failures = []
    if not diagram.vertices:
        return _report("ordered-tree", failures)
    rmin = min(diagram.ratio(v.ident) for v in diagram.vertices)
    core = {v.ident for v in diagram.vertices if diagram.ratio(v.ident) == rmin}
    # connectivity of the core
    start = sorted(core, key=_id_key)[0]
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for n in diagram.neighbors(cur):
            if n in core and n not in seen:
                seen.add(n)
                stack.append(n)
    if seen != core:
        failures.append(f"minimal-ratio part disconnected: {sorted(core)}")
    # strict increase outward (breadth-first from the core)
    dist = {v: 0 for v in core}
    frontier = sorted(core, key=_id_key)
    while frontier:
        nxt = []
        for cur in frontier:
            for n in diagram.neighbors(cur):
                if n in dist:
                    continue
                if not diagram.ratio(n) > diagram.ratio(cur):
                    failures.append(
                        f"ratio does not increase from {cur} to {n}")
                dist[n] = dist[cur] + 1
                nxt.append(n)
        frontier = nxt
    return _report("ordered-tree", failures)


def validate_nu_bound(diagram: IntersectionDiagram) -> Report:
    """nu <= N + 1 on every exceptional vertex."""
    failures = [
        f"{v.ident}: nu = {v.nu} > N + 1 = {v.N + 1}"
        for v in diagram.exceptional() if v.nu > v.N + 1
    ]
    return _report("nu-bound", failures)


def validate_tree_shape(diagram: IntersectionDiagram) -> Report:
    """Exceptional subgraph is a tree; strict branches hang off it."""
    failures = []
    exc = {v.ident for v in diagram.exceptional()}
    exc_edges = [e for e in diagram.edges if e <= exc]
    if exc:
        if len(exc_edges) != len(exc) - 1:
            failures.append(
                f"{len(exc_edges)} edges among {len(exc)} exceptional vertices")
        start = sorted(exc, key=_id_key)[0]
        seen = {start}
        stack = [start]
        while stack:
            cur = stack.pop()
            for n in diagram.neighbors(cur):
                if n in exc and n not in seen:
                    seen.add(n)
                    stack.append(n)
        if seen != exc:
            failures.append("exceptional subgraph disconnected")
    for v in diagram.strict_branches():
        if diagram.degree(v.ident) < 1 and diagram.origin_case is None:
            failures.append(f"strict branch {v.ident} is isolated")
        if v.nu != 1:
            failures.append(f"strict branch {v.ident} has nu = {v.nu}")
    if diagram.origin_case is None:
        for e in diagram.edges:
            if all(diagram.vertex(v).kind == "strict-branch" for v in e):
                failures.append(f"strict branches meet: {sorted(e)}")
    return _report("tree-shape", failures)


def validate_all(diagram: IntersectionDiagram) -> list[Report]:
    return [
        validate_alpha_bounds(diagram),
        validate_alpha_signs(diagram),
        validate_ordered_tree(diagram),
        validate_nu_bound(diagram),
        validate_tree_shape(diagram),
    ]


# --- serialization ------------------------------------------------------------

def export_json(diagram: IntersectionDiagram) -> str:
    payload = {
        "vertices": [
            {"id": v.ident, "kind": v.kind, "N": v.N, "nu": v.nu}
            for v in diagram.vertices
        ],
        "edges": sorted(
            (sorted(e, key=_id_key) for e in diagram.edges),
            key=lambda pair: (_id_key(pair[0]), _id_key(pair[1])),
        ),
        "origin_case": (
            None if diagram.origin_case is None else {
                "branches": [
                    {"id": b, "N": diagram.vertex(b).N}
                    for b in sorted(diagram.origin_case, key=_id_key)
                ]
            }
        ),
    }
    return json.dumps(payload, indent=2)


def load_json(text: str) -> IntersectionDiagram:
    try:
        payload = json.loads(text)
        vertices = [
            Vertex(v["id"], v["kind"], int(v["N"]), int(v["nu"]))
            for v in payload["vertices"]
        ]
        edges = {frozenset(e) for e in payload["edges"]}
        oc = payload.get("origin_case")
        origin = None if oc is None else [b["id"] for b in oc["branches"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedDiagram(f"cannot parse diagram JSON: {exc}") from exc
    return IntersectionDiagram(vertices=vertices, edges=edges,
                               origin_case=origin, minimal=False)


def export_dot(diagram: IntersectionDiagram) -> str:
    lines = ["graph principalization {"]
    for v in diagram.vertices:
        shape = "ellipse" if v.kind == "exceptional" else "box"
        lines.append(
            f'  "{v.ident}" [shape={shape}, label="{v.ident} ({v.N},{v.nu})"];'
        )
    for e in sorted(
        (sorted(e, key=_id_key) for e in diagram.edges),
        key=lambda pair: (_id_key(pair[0]), _id_key(pair[1])),
    ):
        lines.append(f'  "{e[0]}" -- "{e[1]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
