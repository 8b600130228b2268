"""Segre symbols: computation, canonical form, normal forms, generators.

The Segre symbol of a pencil records the exponents of the elementary
divisors of U - lambda*V, grouping entries that share a root inside round
brackets.  It is computed here without any root finding or factorization:
the squarefree decompositions of the invariant factors feed a coprime
basis, and exact exponent valuations of each basis element recover the
groups.  A basis element of degree g contributes g identical groups, one
per (possibly irrational or complex) root.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .pencil import (
    Matrix,
    QuadricPencil,
    _int_matrix_det,
    as_matrix,
    congruent,
    invariant_factors,
)
from .polynomial import Polynomial, Rational, coprime_basis, squarefree_decomposition

__all__ = [
    "ExplicitRoot",
    "SymbolicRoot",
    "Group",
    "SegreSymbol",
    "canonicalize",
    "compute_symbol",
    "elementary_block",
    "build_normal_form",
    "random_instance",
]


@dataclass(frozen=True)
class ExplicitRoot:
    value: Rational

    def describe(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class SymbolicRoot:
    """Root number ``index`` of a coprime-basis polynomial, never evaluated."""

    poly: Polynomial
    index: int

    def describe(self) -> str:
        return f"root #{self.index + 1} of {self.poly}"


RootDescriptor = Union[ExplicitRoot, SymbolicRoot, None]


@dataclass(frozen=True)
class Group:
    """One root group: exponent multiset plus an optional root descriptor."""

    exponents: tuple[int, ...]
    root: RootDescriptor = None

    def __post_init__(self):
        if not self.exponents:
            raise ValueError("a group needs at least one exponent")
        if any(not isinstance(e, int) or e < 1 for e in self.exponents):
            raise ValueError(f"exponents must be positive integers: {self.exponents}")
        object.__setattr__(self, "exponents", tuple(sorted(self.exponents, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.exponents)

    @property
    def bracketed(self) -> bool:
        return len(self.exponents) >= 2

    def sort_key(self):
        # descending by (weight, exponent sequence, size)
        return (-self.weight, tuple(-e for e in self.exponents), -len(self.exponents))

    def render(self) -> str:
        digits = "".join(str(e) for e in self.exponents)
        return f"({digits})" if self.bracketed else digits


_SYMBOL_TOKEN = re.compile(r"\(([1-9]+)\)|([1-9])|(.)")


class SegreSymbol:
    """Ordered multiset of root groups.

    Equality and hashing ignore root descriptors: two symbols are equal
    exactly when their canonicalized exponent structures coincide, which
    is what congruence and pencil-basis invariance preserve.
    """

    __slots__ = ("groups",)

    def __init__(self, groups: Sequence[Group]):
        object.__setattr__(self, "groups", tuple(groups))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("SegreSymbol is immutable")

    @classmethod
    def parse(cls, text: str) -> "SegreSymbol":
        """Parse ``[..]`` notation: bare digits are singleton groups,
        parenthesized digit runs are bracketed groups."""
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"symbol must be enclosed in square brackets: {text!r}")
        groups: list[Group] = []
        for m in _SYMBOL_TOKEN.finditer(s[1:-1]):
            run, digit, bad = m.groups()
            if bad is not None:
                raise ValueError(f"unexpected character {bad!r} in symbol {text!r}")
            if run is not None:
                groups.append(Group(tuple(int(ch) for ch in run)))
            else:
                groups.append(Group((int(digit),)))
        if not groups:
            raise ValueError(f"empty symbol: {text!r}")
        return cls(groups)

    @property
    def weight(self) -> int:
        return sum(g.weight for g in self.groups)

    def canonical(self) -> "SegreSymbol":
        return SegreSymbol(sorted(self.groups, key=Group.sort_key))

    def exponent_structure(self) -> tuple[tuple[int, ...], ...]:
        """The multiset of group exponent multisets, canonically ordered."""
        return tuple(g.exponents for g in self.canonical().groups)

    def unbracketed_ones(self) -> int:
        return sum(1 for g in self.groups if g.exponents == (1,))

    def render(self) -> str:
        return "[" + "".join(g.render() for g in self.groups) + "]"

    def root_descriptions(self) -> list[str]:
        return [g.root.describe() if g.root is not None else "unspecified" for g in self.groups]

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            other = SegreSymbol.parse(other)
        if not isinstance(other, SegreSymbol):
            return NotImplemented
        return self.exponent_structure() == other.exponent_structure()

    def __hash__(self) -> int:
        return hash(self.exponent_structure())

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SegreSymbol.parse({self.render()!r})"


def canonicalize(s: SegreSymbol | str) -> SegreSymbol:
    """Canonical ordering: exponents descending inside each group, groups
    descending by (weight, exponent sequence, size).  Idempotent."""
    if isinstance(s, str):
        s = SegreSymbol.parse(s)
    return s.canonical()


# ---------------------------------------------------------------------------
# pencil -> symbol
# ---------------------------------------------------------------------------

def _valuation(base: Polynomial, target: Polynomial) -> int:
    v = 0
    q, r = divmod(target, base)
    while r.is_zero:
        v += 1
        target = q
        q, r = divmod(target, base)
    return v


def compute_symbol(p: QuadricPencil) -> SegreSymbol:
    """Segre symbol of a nondegenerate pencil (select a member first).

    Works entirely over the rationals: the squarefree pieces of the
    invariant factors are refined into a coprime basis that stands in for
    the set of distinct roots, so irrational and complex roots never need
    to be found.  Each basis element has a uniform exponent in every
    invariant factor, recovered by exact division.
    """
    inv = invariant_factors(p)
    nontrivial = inv.nontrivial
    if not nontrivial:
        return SegreSymbol(())
    pieces = [f for d in nontrivial for _, f in squarefree_decomposition(d)]
    basis = coprime_basis(pieces)
    groups: list[Group] = []
    for b in basis:
        exps = [v for d in nontrivial if (v := _valuation(b, d)) > 0]
        root_count = b.degree
        for i in range(root_count):
            root: RootDescriptor
            if root_count == 1:
                root = ExplicitRoot(-b.coeffs[0])
            else:
                root = SymbolicRoot(b, i)
            groups.append(Group(tuple(exps), root))
    return SegreSymbol(groups).canonical()


# ---------------------------------------------------------------------------
# symbol -> pencil
# ---------------------------------------------------------------------------

def elementary_block(e: int, alpha: Rational | int) -> tuple[Matrix, Matrix]:
    """The e x e symmetric pair whose pencil has the single elementary
    divisor (lambda - alpha)^e: alpha on the antidiagonal with a run of
    ones just below it, paired with the exchange matrix."""
    a = Fraction(alpha)
    u = [[Fraction(0)] * e for _ in range(e)]
    v = [[Fraction(0)] * e for _ in range(e)]
    for i in range(e):
        for j in range(e):
            if i + j == e - 1:
                u[i][j] = a
                v[i][j] = Fraction(1)
            elif i + j == e:
                u[i][j] = Fraction(1)
    return as_matrix(u), as_matrix(v)


def _block_diag(blocks: Sequence[Matrix]) -> Matrix:
    size = sum(len(b) for b in blocks)
    out = [[Fraction(0)] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, c in enumerate(row):
                out[offset + i][offset + j] = c
        offset += len(b)
    return as_matrix(out)


def build_normal_form(
    s: SegreSymbol | str, roots: Sequence[Rational | int]
) -> QuadricPencil:
    """Block-diagonal pencil realizing the symbol with the given roots.

    Takes one rational root per group (in canonical group order); a group
    contributes its root to one block per exponent.  Roots of distinct
    groups must be pairwise distinct, otherwise the groups would merge.
    """
    s = canonicalize(s)
    rs = [Fraction(r) for r in roots]
    if len(rs) != len(s.groups):
        raise ValueError(f"{s.render()} needs {len(s.groups)} roots, got {len(rs)}")
    if len(set(rs)) != len(rs):
        raise ValueError("roots of distinct groups must be pairwise distinct")
    ublocks: list[Matrix] = []
    vblocks: list[Matrix] = []
    for g, r in zip(s.groups, rs):
        for e in g.exponents:
            bu, bv = elementary_block(e, r)
            ublocks.append(bu)
            vblocks.append(bv)
    return QuadricPencil(_block_diag(ublocks), _block_diag(vblocks))


def random_instance(s: SegreSymbol | str, seed: int) -> QuadricPencil:
    """Seeded random pencil with the given symbol.

    Builds a normal form on distinct small integer roots, then applies a
    random rational congruence with entries in -3..3 (resampled until the
    determinant is nonzero).  Bit-identical output for a fixed seed.
    """
    s = canonicalize(s)
    rng = random.Random(seed)
    roots = rng.sample(range(-9, 10), len(s.groups))
    normal = build_normal_form(s, roots)
    size = normal.size
    while True:
        a = [[rng.randint(-3, 3) for _ in range(size)] for _ in range(size)]
        if _int_matrix_det(a) != 0:
            break
    return congruent(normal, as_matrix(a))
