"""Exact univariate and bivariate polynomial arithmetic over the rationals.

A bivariate polynomial is a dict mapping exponent pairs (a, b) to nonzero
Fraction coefficients; the zero polynomial has an empty dict.  This sparse
exact representation makes identity tests reliable, which everything
downstream (transform factorizations, gcd extraction, zero counting)
depends on.

Univariate polynomials are coefficient tuples indexed by degree.  They show
up as restrictions of bivariate data to an exceptional line and as numerators
of zeta functions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .errors import (
    DegreeCapExceeded,
    NonRationalLiteralError,
    ParseError,
    UnknownVariableError,
)

DEGREE_CAP = 64

#: Multiplicity of the zero polynomial at any point.
INFINITE_MULT = math.inf


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial over Q, coefficients indexed by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([Fraction(c)])

    @classmethod
    def var(cls) -> "UniPoly":
        return cls([0, 1])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with deg(0) = -1."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def scale(self, c) -> "UniPoly":
        c = Fraction(c)
        return UniPoly([a * c for a in self.coeffs])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.leading()
        for k in range(dq, -1, -1):
            c = rem[k + other.degree()] / lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(quo), UniPoly(rem)

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def divexact(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact univariate division")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, t) -> Fraction:
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def compose_affine(self, scale, offset) -> "UniPoly":
        """p(scale*t + offset) as a polynomial in t."""
        arg = UniPoly([Fraction(offset), Fraction(scale)])
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * arg + UniPoly.const(c)
        return acc

    def reversed(self) -> "UniPoly":
        """Coefficients in reverse order: zeros become reciprocals of the
        nonzero zeros of self."""
        return UniPoly(tuple(reversed(self.coeffs)))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for d in range(self.degree(), -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            if d == 0:
                mono = str(abs(c))
            else:
                var = "s" if d == 1 else f"s^{d}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append((" - " if c < 0 else " + ") + mono)
        return "".join(parts)

    __repr__ = __str__


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor in Q[t]."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def uni_gcd_many(polys: Iterable[UniPoly]) -> UniPoly:
    g = UniPoly()
    for p in polys:
        g = uni_gcd(g, p)
    return g


def squarefree_part(p: UniPoly) -> UniPoly:
    """p divided by gcd(p, p'), monic; carries one copy of each root."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    g = uni_gcd(p, p.derivative())
    return p.divexact(g).monic()


def distinct_root_count(p: UniPoly) -> int:
    """Number of distinct complex zeros, computed without root extraction."""
    if p.is_zero():
        raise ValueError("zero polynomial has no root count")
    return squarefree_part(p).degree()


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: UniPoly) -> tuple[list[tuple[Fraction, int]], UniPoly]:
    """All rational roots with multiplicities, plus the root-free cofactor.

    The cofactor is monic; it is nonconstant exactly when p has irrational
    (or complex) zeros.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots: list[tuple[Fraction, int]] = []
    # strip the root at 0 first
    k = 0
    while k <= p.degree() and p.coeffs[k] == 0:
        k += 1
    if k:
        roots.append((Fraction(0), k))
        p = UniPoly(p.coeffs[k:])
    if p.degree() <= 0:
        return roots, p.monic()
    den_lcm = 1
    for c in p.coeffs:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in p.coeffs]
    content = 0
    for v in ints:
        content = math.gcd(content, v)
    ints = [v // content for v in ints]
    a0, an = ints[0], ints[-1]
    cands: set[Fraction] = set()
    for num in _divisors(a0):
        for den in _divisors(an):
            cands.add(Fraction(num, den))
            cands.add(Fraction(-num, den))
    for r in sorted(cands):
        mult = 0
        while p.degree() > 0 and p.eval(r) == 0:
            p = p.divexact(UniPoly([-r, 1]))
            mult += 1
        if mult:
            roots.append((r, mult))
    roots.sort(key=lambda rm: rm[0])
    return roots, p.monic()


# ---------------------------------------------------------------------------
# bivariate
# ---------------------------------------------------------------------------

def _grlex_key(e: tuple[int, int]) -> tuple[int, int]:
    return (e[0] + e[1], e[0])


class BiPoly:
    """Sparse bivariate polynomial over Q in variables x, y."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        t: dict[tuple[int, int], Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    t[(int(e[0]), int(e[1]))] = c
        self.terms = t

    # -- constructors --

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): Fraction(1)})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "BiPoly":
        return cls({(a, b): Fraction(c)})

    # -- basic queries --

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0, 0), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(a + b for a, b in self.terms)

    def mult_at_origin(self):
        """Lowest total degree of a term; INFINITE_MULT for zero."""
        if not self.terms:
            return INFINITE_MULT
        return min(a + b for a, b in self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- arithmetic --

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if not self.terms or not other.terms:
            return BiPoly()
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return BiPoly(out)

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power")
        acc = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def scale(self, c) -> "BiPoly":
        c = Fraction(c)
        return BiPoly({e: v * c for e, v in self.terms.items()})

    # -- structure --

    def lead_grlex(self) -> tuple[tuple[int, int], Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def monic_grlex(self) -> "BiPoly":
        if self.is_zero():
            return self
        _, c = self.lead_grlex()
        return self.scale(1 / c)

    def divexact(self, d: "BiPoly") -> "BiPoly":
        """Exact division; raises ValueError when d does not divide self."""
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = BiPoly(dict(self.terms))
        (de, dc) = d.lead_grlex()
        quo: dict[tuple[int, int], Fraction] = {}
        while not rem.is_zero():
            (re, rc) = rem.lead_grlex()
            ea, eb = re[0] - de[0], re[1] - de[1]
            if ea < 0 or eb < 0:
                raise ValueError("inexact bivariate division")
            c = rc / dc
            quo[(ea, eb)] = quo.get((ea, eb), Fraction(0)) + c
            rem = rem - d * BiPoly.monomial(ea, eb, c)
        return BiPoly(quo)

    def divides(self, other: "BiPoly") -> bool:
        try:
            other.divexact(self)
            return True
        except ValueError:
            return False

    def x_order(self) -> int:
        """Largest k with x^k dividing self (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        return min(a for a, _ in self.terms)

    def y_order(self) -> int:
        if not self.terms:
            return 0
        return min(b for _, b in self.terms)

    def divide_x_power(self, k: int) -> "BiPoly":
        return BiPoly({(a - k, b): c for (a, b), c in self.terms.items()})

    def divide_y_power(self, k: int) -> "BiPoly":
        return BiPoly({(a, b - k): c for (a, b), c in self.terms.items()})

    # -- substitutions used by the blow-up kernel --

    def subst_chart_a(self) -> "BiPoly":
        """Pullback under (x, y) -> (x, x*y): monomial map (a,b) -> (a+b, b)."""
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in self.terms.items():
            e = (a + b, b)
            out[e] = out.get(e, Fraction(0)) + c
        return BiPoly(out)

    def subst_chart_b(self) -> "BiPoly":
        """Pullback under (x, y) -> (x*y, y): monomial map (a,b) -> (a, a+b)."""
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in self.terms.items():
            e = (a, a + b)
            out[e] = out.get(e, Fraction(0)) + c
        return BiPoly(out)

    def translate(self, dx, dy) -> "BiPoly":
        """p(x + dx, y + dy)."""
        dx, dy = Fraction(dx), Fraction(dy)
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in self.terms.items():
            for i in range(a + 1):
                ci = c * math.comb(a, i) * dx ** (a - i)
                if ci == 0:
                    continue
                for j in range(b + 1):
                    cij = ci * math.comb(b, j) * dy ** (b - j)
                    if cij == 0:
                        continue
                    e = (i, j)
                    out[e] = out.get(e, Fraction(0)) + cij
        return BiPoly(out)

    def mult_at_point(self, pt: tuple[Fraction, Fraction]):
        """Lowest total degree of the Taylor expansion at pt."""
        if pt == (0, 0):
            return self.mult_at_origin()
        return self.translate(pt[0], pt[1]).mult_at_origin()

    # -- restrictions and evaluation --

    def restrict_x(self, alpha) -> UniPoly:
        """p(alpha, t) as a univariate polynomial in t = y."""
        alpha = Fraction(alpha)
        out: dict[int, Fraction] = {}
        for (a, b), c in self.terms.items():
            v = c * alpha ** a
            if v:
                out[b] = out.get(b, Fraction(0)) + v
        deg = max(out) if out else -1
        return UniPoly([out.get(i, Fraction(0)) for i in range(deg + 1)])

    def restrict_y(self, beta) -> UniPoly:
        """p(t, beta) as a univariate polynomial in t = x."""
        beta = Fraction(beta)
        out: dict[int, Fraction] = {}
        for (a, b), c in self.terms.items():
            v = c * beta ** b
            if v:
                out[a] = out.get(a, Fraction(0)) + v
        deg = max(out) if out else -1
        return UniPoly([out.get(i, Fraction(0)) for i in range(deg + 1)])

    def eval(self, px, py) -> Fraction:
        px, py = Fraction(px), Fraction(py)
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            total += c * px ** a * py ** b
        return total

    def derivative_x(self) -> "BiPoly":
        return BiPoly({(a - 1, b): c * a for (a, b), c in self.terms.items() if a})

    def derivative_y(self) -> "BiPoly":
        return BiPoly({(a, b - 1): c * b for (a, b), c in self.terms.items() if b})

    # -- conversion to/from Q[x][y], used by the gcd machinery --

    def y_coefficients(self) -> list[UniPoly]:
        """Coefficients of self as a polynomial in y over Q[x]."""
        dy = max((b for _, b in self.terms), default=-1)
        rows: list[dict[int, Fraction]] = [dict() for _ in range(dy + 1)]
        for (a, b), c in self.terms.items():
            rows[b][a] = c
        out = []
        for row in rows:
            deg = max(row) if row else -1
            out.append(UniPoly([row.get(i, Fraction(0)) for i in range(deg + 1)]))
        return out

    @classmethod
    def from_y_coefficients(cls, coeffs: list[UniPoly]) -> "BiPoly":
        terms: dict[tuple[int, int], Fraction] = {}
        for b, up in enumerate(coeffs):
            for a, c in enumerate(up.coeffs):
                if c:
                    terms[(a, b)] = c
        return cls(terms)

    # -- printing --

    def __str__(self) -> str:
        return poly_to_str(self)

    def __repr__(self) -> str:
        return f"BiPoly({poly_to_str(self)})"


# ---------------------------------------------------------------------------
# gcd and squarefree machinery over Q[x, y]
# ---------------------------------------------------------------------------

def _content_primitive_y(p: BiPoly) -> tuple[UniPoly, list[UniPoly]]:
    """Content in Q[x] and primitive coefficient list of p in (Q[x])[y]."""
    coeffs = p.y_coefficients()
    cont = uni_gcd_many(c for c in coeffs if not c.is_zero())
    prim = [c.divexact(cont) if not c.is_zero() else c for c in coeffs]
    return cont, prim


def _pseudo_rem(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
    """Pseudo-remainder of a by b in (Q[x])[y], both as coefficient lists."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        la = a[-1]
        # multiply a by lb, subtract la * y^(da-db) * b
        a = [c * lb for c in a]
        for i in range(db + 1):
            a[da - db + i] = a[da - db + i] - la * b[i]
        while a and a[-1].is_zero():
            a.pop()
    return a


def _primitive(coeffs: list[UniPoly]) -> list[UniPoly]:
    cont = uni_gcd_many(c for c in coeffs if not c.is_zero())
    return [c.divexact(cont) if not c.is_zero() else c for c in coeffs]


def gcd_bi(p: BiPoly, q: BiPoly) -> BiPoly:
    """Greatest common divisor in Q[x, y], normalized monic in graded-lex.

    Content/primitive-part recursion over Q[x][y] with a primitive
    pseudo-remainder sequence; no external algebra system needed.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if p.is_zero():
        return q.monic_grlex()
    if q.is_zero():
        return p.monic_grlex()
    cp, ap = _content_primitive_y(p)
    cq, aq = _content_primitive_y(q)
    cont = uni_gcd(cp, cq)
    if len(ap) - 1 < len(aq) - 1:
        ap, aq = aq, ap
    while aq:
        r = _pseudo_rem(ap, aq)
        ap, aq = aq, _primitive(r) if r else []
    prim_gcd = BiPoly.from_y_coefficients(_primitive(ap))
    cont_lift = BiPoly.from_y_coefficients([cont])
    return (prim_gcd * cont_lift).monic_grlex()


def gcd_bi_many(polys: Iterable[BiPoly]) -> BiPoly:
    g = BiPoly.zero()
    for p in polys:
        if p.is_zero():
            continue
        g = p.monic_grlex() if g.is_zero() else gcd_bi(g, p)
        if g.is_constant():
            break
    if g.is_zero():
        raise ValueError("gcd of all-zero family")
    return g


def squarefree_decomposition(h: BiPoly) -> list[tuple[BiPoly, int]]:
    """Write h (up to a constant) as a product of pairwise coprime squarefree
    factors with exponents.

    Multivariate Musser recursion: gcd(h, h_x, h_y) collects each factor to
    exponent one less.
    """
    if h.is_zero() or h.is_constant():
        return []
    hx, hy = h.derivative_x(), h.derivative_y()
    g = gcd_bi_many([hx, hy, h])
    c = h.divexact(g).monic_grlex()
    out: list[tuple[BiPoly, int]] = []
    i = 1
    while not c.is_constant():
        y = gcd_bi(g, c) if not g.is_constant() else BiPoly.const(1)
        f = c.divexact(y).monic_grlex()
        if not f.is_constant():
            out.append((f, i))
        c = y.monic_grlex()
        g = g.divexact(y)
        i += 1
    return out


# ---------------------------------------------------------------------------
# parsing and printing
# ---------------------------------------------------------------------------

_EXPONENT_CAP = 256


class _Parser:
    def __init__(self, text: str, names: tuple[str, str]):
        self.text = text
        self.pos = 0
        self.names = names

    def error(self, msg: str, cls=ParseError):
        raise cls(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        if self.pos < len(self.text) and self.text[self.pos] == ".":
            self.error("decimal literals are not rational", NonRationalLiteralError)
        return int(self.text[start:self.pos])

    def parse_expr(self) -> BiPoly:
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        elif self.peek() == "+":
            self.pos += 1
        acc = self.parse_term().scale(sign)
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                acc = acc + self.parse_term()
            elif ch == "-":
                self.pos += 1
                acc = acc - self.parse_term()
            else:
                return acc

    def parse_term(self) -> BiPoly:
        acc = self.parse_factor()
        while self.peek() == "*":
            self.pos += 1
            acc = acc * self.parse_factor()
        return acc

    def parse_factor(self) -> BiPoly:
        base = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            if self.peek() == "-":
                self.error("exponent must be a nonnegative integer")
            k = self.take_int()
            if k > _EXPONENT_CAP:
                raise DegreeCapExceeded(f"exponent {k} exceeds cap {_EXPONENT_CAP}")
            return base ** k
        return base

    def parse_atom(self) -> BiPoly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        if ch == "-":
            self.pos += 1
            return -self.parse_atom()
        if ch.isdigit():
            num = self.take_int()
            if self.peek() == "/":
                mark = self.pos
                self.pos += 1
                if not self.peek().isdigit():
                    self.pos = mark
                    self.error("'/' outside a rational literal")
                den = self.take_int()
                if den == 0:
                    self.error("zero denominator in rational literal",
                               NonRationalLiteralError)
                return BiPoly.const(Fraction(num, den))
            return BiPoly.const(num)
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start:self.pos]
            if name == self.names[0]:
                return BiPoly.x()
            if name == self.names[1]:
                return BiPoly.y()
            self.pos = start
            self.error(f"unknown variable {name!r}", UnknownVariableError)
        if ch == "":
            self.error("unexpected end of input")
        self.error(f"unexpected character {ch!r}")


def parse_poly(text: str, names: tuple[str, str] = ("x", "y")) -> BiPoly:
    """Parse ASCII polynomial text into a BiPoly.

    Grammar: integers, rational literals a/b, the two declared variables,
    operators + - * ^ and parentheses.  Multiplication is always explicit.
    """
    p = _Parser(text, names)
    result = p.parse_expr()
    p.skip_ws()
    if p.pos != len(text):
        p.error("trailing input")
    if result.total_degree() > DEGREE_CAP:
        raise DegreeCapExceeded(
            f"total degree {result.total_degree()} exceeds cap {DEGREE_CAP}"
        )
    return result


def _monomial_str(a: int, b: int, c: Fraction,
                  names: tuple[str, str]) -> str:
    parts = []
    if a:
        parts.append(names[0] if a == 1 else f"{names[0]}^{a}")
    if b:
        parts.append(names[1] if b == 1 else f"{names[1]}^{b}")
    cs = str(abs(c))
    if not parts:
        return cs
    if abs(c) != 1:
        parts.insert(0, cs)
    return "*".join(parts)


def poly_to_str(p: BiPoly, names: tuple[str, str] = ("x", "y")) -> str:
    """Canonical text form; graded-lex descending, round-trips via parse_poly."""
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)
    out = []
    for (a, b), c in items:
        mono = _monomial_str(a, b, c, names)
        if not out:
            out.append(("-" if c < 0 else "") + mono)
        else:
            out.append((" - " if c < 0 else " + ") + mono)
    return "".join(out)


def mult_at_point(p: BiPoly, pt: tuple[Fraction, Fraction]):
    """Multiplicity of p at a rational point: min total degree after recentering.

    Returns INFINITE_MULT for the zero polynomial.
    """
    return p.mult_at_point((Fraction(pt[0]), Fraction(pt[1])))


def frac_str(q: Fraction) -> str:
    """Lowest-terms display: '-2/5', integers without denominator."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def uni_to_str(p: UniPoly, var: str) -> str:
    """Display a univariate polynomial in a named variable."""
    return str(p).replace("s", var)
