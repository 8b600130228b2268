"""Exact univariate polynomial arithmetic over the rationals.

The scalar field is ``fractions.Fraction`` (re-exported as ``Rational``),
so every operation here is exact: no rounding, ever.  Polynomials are
dense, stored lowest degree first.  Greatest common divisors are computed
on denominator-cleared integer coefficient lists with a primitive
pseudo-remainder sequence, which keeps coefficients small at the degrees
(at most five) this package cares about.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "Polynomial",
    "poly_gcd",
    "squarefree_part",
    "squarefree_decomposition",
    "coprime_basis",
]


# ---------------------------------------------------------------------------
# integer coefficient-list helpers (engine for gcd computations)
# ---------------------------------------------------------------------------

def _int_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _int_content(c: Sequence[int]) -> int:
    g = 0
    for a in c:
        g = math.gcd(g, a)
        if g == 1:
            break
    return g


def _int_primitive(c: Sequence[int]) -> list[int]:
    """Divide out the content; normalize the leading coefficient positive."""
    c = _int_trim(list(c))
    if not c:
        return []
    g = _int_content(c)
    if c[-1] < 0:
        g = -g
    return [a // g for a in c]


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        lead = r[-1]
        r = [x * lb for x in r]
        shift = dr - db
        for i, bi in enumerate(b):
            r[shift + i] -= lead * bi
        r = _int_trim(r)
    return r


def _int_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive gcd of integer polynomials (positive leading coefficient)."""
    a = _int_primitive(a)
    b = _int_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_pseudo_rem(a, b)
        a, b = b, _int_primitive(r)
    return a


# ---------------------------------------------------------------------------
# public polynomial type
# ---------------------------------------------------------------------------

class Polynomial:
    """Dense univariate polynomial with ``Fraction`` coefficients.

    Immutable; the zero polynomial has an empty coefficient tuple and
    degree -1.  All arithmetic is exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction helpers ------------------------------------------------

    @classmethod
    def constant(cls, c: Rational | int) -> "Polynomial":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[Rational | int]) -> "Polynomial":
        """Monic polynomial with the given roots (with multiplicity)."""
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Rational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Polynomial is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | Rational | int") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        out = Polynomial([1])
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        d, lead = other.degree, other.leading
        while len(r) - 1 >= d and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            c = r[-1] / lead
            k = len(r) - 1 - d
            q[k] = c
            for i, oc in enumerate(other.coeffs):
                r[k + i] -= c * oc
        return Polynomial(q), Polynomial(r)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient self/other, raising if the division is not exact."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "Polynomial") -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def __call__(self, x: Rational | int) -> Rational:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.leading
        if lead == 1:
            return self
        return Polynomial([c / lead for c in self.coeffs])

    # -- rendering ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = "t"
            else:
                mono = f"t^{i}"
            mag = abs(c)
            if mag == 1 and mono:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


# ---------------------------------------------------------------------------
# gcd, squarefree part, coprime basis
# ---------------------------------------------------------------------------

def _clear_denominators(p: Polynomial) -> list[int]:
    m = math.lcm(*(c.denominator for c in p.coeffs)) if p.coeffs else 1
    return [int(c * m) for c in p.coeffs]


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(p, 0) is monic(p)."""
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    g = _int_gcd(_clear_denominators(p), _clear_denominators(q))
    return Polynomial(g).monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    """Monic polynomial with the same roots as p, each root simple.

    Equals monic(p / gcd(p, p')); no factorization takes place.
    """
    if p.is_zero:
        raise ValueError("squarefree part of the zero polynomial is undefined")
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).monic()


def squarefree_decomposition(p: Polynomial) -> list[tuple[int, Polynomial]]:
    """Yun decomposition: pairs (k, f) with monic(p) = product of f**k.

    The factors f are monic, squarefree and pairwise coprime, so every
    root of a factor tagged k has multiplicity exactly k in p.
    """
    if p.is_zero:
        raise ValueError("squarefree decomposition of the zero polynomial is undefined")
    f = p.monic()
    out: list[tuple[int, Polynomial]] = []
    if f.is_constant:
        return out
    u = poly_gcd(f, f.derivative())
    v = f.exact_div(u).monic()
    w = f.derivative().exact_div(u)
    k = 1
    while v.degree > 0:
        z = w - v.derivative()
        h = poly_gcd(v, z)
        if h.degree > 0:
            out.append((k, h))
        v = v.exact_div(h).monic()
        w = z.exact_div(h)
        k += 1
    return out


def coprime_basis(ps: Sequence[Polynomial]) -> list[Polynomial]:
    """Pairwise-coprime monic polynomials multiplying out to the inputs.

    Every input must be monic, squarefree and nonconstant; every input is
    then a product of a subset of the returned basis, with each basis
    element appearing at most once.  Computed by repeated pairwise gcd
    splitting; no irreducible factorization is performed.  The result is
    sorted by (degree, coefficients from the leading term down) so that
    equal inputs always produce the identical basis.
    """
    for p in ps:
        if p.is_zero or p.is_constant:
            raise ValueError(f"coprime_basis requires nonconstant inputs, got {p}")
        if p.leading != 1:
            raise ValueError(f"coprime_basis requires monic inputs, got {p}")
        if poly_gcd(p, p.derivative()).degree > 0:
            raise ValueError(f"coprime_basis requires squarefree inputs, got {p}")

    basis: list[Polynomial] = []
    queue = list(ps)
    while queue:
        p = queue.pop()
        if p.is_constant:
            continue
        for i, b in enumerate(basis):
            g = poly_gcd(p, b)
            if g.degree > 0:
                if g != b:
                    basis[i] = g
                    queue.append(b.exact_div(g))
                q = p.exact_div(g)
                if not q.is_constant:
                    queue.append(q)
                break
        else:
            basis.append(p)

    def key(b: Polynomial):
        return (b.degree, tuple(reversed(b.coeffs)))

    return sorted(basis, key=key)
