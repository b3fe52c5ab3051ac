"""Deterministic ideal corpus used by the relation, structure, and
criterion suites.

Entries principalize over Q; inputs that need an irrational center are kept
in a separate list with the reason they are excluded.
"""

from __future__ import annotations

from topzeta import parse_poly
from topzeta.family import build
from topzeta.poly import BiPoly


def family_entries() -> list[tuple[str, list[BiPoly]]]:
    out = []
    for b in range(0, 10):
        for a in range(b + 1, 11):
            out.append((f"family-{a}-{b}", build(a, b)))
    return out


def monomial_entries() -> list[tuple[str, list[BiPoly]]]:
    """Pairs (x^a y^b, x^c y^d); small complete block plus larger spot
    checks with exponents up to 6."""
    quads = [
        (a, b, c, d)
        for a in range(3) for b in range(3)
        for c in range(3) for d in range(3)
        if a + b >= 1 and c + d >= 1 and (a, b) < (c, d)
    ]
    quads += [
        (6, 1, 0, 5), (5, 0, 2, 3), (6, 6, 1, 1), (4, 2, 2, 4),
        (0, 6, 6, 0), (6, 0, 0, 6), (3, 6, 6, 3), (1, 4, 6, 2),
    ]
    out = []
    for a, b, c, d in quads:
        gens = [BiPoly.monomial(a, b), BiPoly.monomial(c, d)]
        out.append((f"monomial-{a}{b}{c}{d}", gens))
    return out


MIXED_TEXTS = [
    ("golden", ["x^4*y", "x^7 + x*y^4"]),
    ("two-lines-deep", ["y^2 - x^2", "x^5"]),
    ("two-lines-deep-y", ["y^2 - x^2", "y^5"]),
    ("cusp-axis", ["y^2 - x^3", "x*y"]),
    ("cusp-pair", ["y^2 - x^3", "y^3 - x^4"]),
    ("node-and-line", ["x*y", "y^2 - x^3 - x^2"]),
    ("triple-line", ["y^3", "x^4 + x*y^2"]),
    ("double-tangent", ["x^2*y + y^4", "x^3"]),
    ("square-line", ["(x + y)^2*y", "x^3"]),
    ("quartic-split", ["y^2 - x^4", "x^6"]),
    ("cube-diff", ["x^3 - y^3", "x*y^2"]),
    ("quartic-diff", ["x^4 - y^4", "x*y^3"]),
    ("shared-cusp", ["(y^2 - x^3)*x", "(y^2 - x^3)*y"]),
    ("shared-conic", ["(x^2 + y^2)*x^2", "(x^2 + y^2)*y^2"]),
    ("three-lines", ["y*(y - x)*(y + x)", "x^4"]),
    ("wide-angle", ["x*y^2", "(x + y)^3"]),
    ("deep-monomialish", ["x^2*y^2", "x^5 + y^5"]),
    ("square-member", ["x^2 + 2*x*y", "y^2"]),
    ("three-gens", ["x^3", "x*y^2", "y^4"]),
    ("three-gens-mixed", ["x^2*y", "x*y^2", "x^4 + y^4"]),
]


def mixed_entries() -> list[tuple[str, list[BiPoly]]]:
    return [(name, [parse_poly(t) for t in texts])
            for name, texts in MIXED_TEXTS]


#: Inputs excluded from the corpus: the minimal principalization needs a
#: center that is not Q-rational, which the engine refuses by contract.
EXCLUDED = [
    ("irrational-sqrt2", ["x^3", "y^2 - 2*x^2"],
     "residual zeros on the first exceptional curve sit at y^2 = 2"),
    ("imaginary-pair", ["y^2 + x^2", "x^5"],
     "residual zeros on the first exceptional curve sit at y^2 = -1"),
]


def corpus() -> list[tuple[str, list[BiPoly]]]:
    entries = mixed_entries() + family_entries() + monomial_entries()
    assert len(entries) >= 50
    return entries


#: Principal (single-generator) inputs: embedded curve resolutions.
CURVE_TEXTS = [
    ("smooth-line", ["x"]),
    ("double-line", ["x^2"]),
    ("monomial-23", ["x^2*y^3"]),
    ("cusp", ["y^2 - x^3"]),
    ("node", ["y^2 - x^2 - x^3"]),
    ("conj-node", ["x^2 + y^2"]),
    ("tacnode", ["(y - x^2)*(y + x^2)"]),
    ("e8", ["y^3 - x^5"]),
    ("three-lines", ["x*y*(x - y)"]),
]


def curve_entries() -> list[tuple[str, list[BiPoly]]]:
    return [(name, [parse_poly(t) for t in texts])
            for name, texts in CURVE_TEXTS]
