"""Pencil-level exact linear algebra for pairs of symmetric matrices.

A ``QuadricPencil`` holds two symmetric rational matrices (U, V) spanning
the pencil x*U + y*V.  This module computes the determinant polynomial
|U - lambda*V|, the invariant factors of U - lambda*V via gcds of minors,
selects a nonsingular member, and reports degeneracy when no member is
nonsingular.

Internally all polynomial determinants run on denominator-cleared integer
matrices: each minor is evaluated at small integer points and recovered by
interpolation, and gcd chains terminate early once they reach a constant.
Monic normalization makes the integer scaling invisible to the results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DegeneratePencilError, InternalConsistencyError, NoSmoothMemberError
from .polynomial import Polynomial, Rational, _int_gcd, _int_primitive, _int_trim

Matrix = tuple[tuple[Fraction, ...], ...]

__all__ = [
    "Matrix",
    "QuadricPencil",
    "InvariantFactors",
    "DegeneracyReport",
    "as_matrix",
    "identity",
    "diagonal",
    "mat_mul",
    "transpose",
    "congruent",
    "change_basis",
    "rational_det",
    "det_poly",
    "invariant_factors",
    "select_nonsingular_member",
    "degeneracy_report",
]


# ---------------------------------------------------------------------------
# small exact matrix helpers
# ---------------------------------------------------------------------------

def as_matrix(rows: Iterable[Iterable[Rational | int | str]]) -> Matrix:
    out = tuple(tuple(Fraction(c) for c in row) for row in rows)
    if any(len(row) != len(out) for row in out):
        raise ValueError("matrix must be square")
    return out


def identity(size: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(size)) for i in range(size)
    )


def diagonal(entries: Sequence[Rational | int]) -> Matrix:
    es = [Fraction(e) for e in entries]
    return tuple(
        tuple(es[i] if i == j else Fraction(0) for j in range(len(es)))
        for i in range(len(es))
    )


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_scale(a: Matrix, c: Fraction) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def _int_matrix_det(m: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_det(m: Matrix) -> Fraction:
    mult = math.lcm(*(c.denominator for row in m for c in row))
    im = [[int(c * mult) for c in row] for row in m]
    return Fraction(_int_matrix_det(im), mult ** len(m))


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [row[:] for row in rows if any(row)]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / pr[c]
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


# ---------------------------------------------------------------------------
# pencil type
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadricPencil:
    """Pair of symmetric rational matrices spanning a pencil of quadrics.

    ``n`` is the ambient projective dimension: the matrices are
    (n+1) x (n+1).  Values are immutable; every operation on pencils is a
    pure function, so concurrent use needs no coordination.
    """

    u: Matrix
    v: Matrix

    def __post_init__(self):
        u = as_matrix(self.u)
        v = as_matrix(self.v)
        if len(u) != len(v):
            raise ValueError("U and V must have the same size")
        for name, m in (("U", u), ("V", v)):
            for i in range(len(m)):
                for j in range(i):
                    if m[i][j] != m[j][i]:
                        raise ValueError(f"{name} is not symmetric")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def size(self) -> int:
        return len(self.u)

    @property
    def n(self) -> int:
        return self.size - 1

    def member(self, x: Rational | int, y: Rational | int) -> Matrix:
        """The matrix x*U + y*V."""
        return _mat_add(_mat_scale(self.u, Fraction(x)), _mat_scale(self.v, Fraction(y)))


def congruent(p: QuadricPencil, a: Matrix) -> QuadricPencil:
    """Apply the congruence (U, V) -> (A^T U A, A^T V A)."""
    a = as_matrix(a)
    at = transpose(a)
    return QuadricPencil(mat_mul(at, mat_mul(p.u, a)), mat_mul(at, mat_mul(p.v, a)))


def change_basis(
    p: QuadricPencil,
    a: Rational | int,
    b: Rational | int,
    c: Rational | int,
    d: Rational | int,
) -> QuadricPencil:
    """Replace (U, V) by (a*U + b*V, c*U + d*V); requires ad - bc != 0."""
    if Fraction(a) * Fraction(d) - Fraction(b) * Fraction(c) == 0:
        raise ValueError("pencil basis change must be invertible")
    return QuadricPencil(p.member(a, b), p.member(c, d))


# ---------------------------------------------------------------------------
# polynomial minors by evaluation and interpolation
# ---------------------------------------------------------------------------

_EVAL_NODES = (0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5)
_INV_VANDERMONDE: dict[int, list[list[Fraction]]] = {}


def _inverse_vandermonde(npts: int) -> list[list[Fraction]]:
    cached = _INV_VANDERMONDE.get(npts)
    if cached is not None:
        return cached
    xs = _EVAL_NODES[:npts]
    # rows of the inverse, computed from the Lagrange basis polynomials
    inv = [[Fraction(0)] * npts for _ in range(npts)]
    for j, xj in enumerate(xs):
        num = Polynomial([1])
        den = Fraction(1)
        for xk in xs:
            if xk != xj:
                num = num * Polynomial([-xk, 1])
                den *= xj - xk
        for i in range(npts):
            inv[i][j] = num.coeffs[i] / den if i <= num.degree else Fraction(0)
    _INV_VANDERMONDE[npts] = inv
    return inv


def _cleared_int_pair(p: QuadricPencil) -> tuple[list[list[int]], list[list[int]], int]:
    mult = math.lcm(
        *(c.denominator for row in p.u for c in row),
        *(c.denominator for row in p.v for c in row),
    )
    iu = [[int(c * mult) for c in row] for row in p.u]
    iv = [[int(c * mult) for c in row] for row in p.v]
    return iu, iv, mult


def _poly_minor(
    iu: list[list[int]],
    iv: list[list[int]],
    rows: Sequence[int],
    cols: Sequence[int],
) -> list[int]:
    """Integer coefficients of det(U - t*V) restricted to rows x cols."""
    k = len(rows)
    npts = k + 1
    vals = []
    for t in _EVAL_NODES[:npts]:
        m = [[iu[r][c] - t * iv[r][c] for c in cols] for r in rows]
        vals.append(_int_matrix_det(m))
    inv = _inverse_vandermonde(npts)
    coeffs = []
    for row in inv:
        c = sum(f * v for f, v in zip(row, vals))
        if c.denominator != 1:  # determinant of an integer matrix pencil
            raise InternalConsistencyError("minor interpolation produced a non-integer")
        coeffs.append(int(c))
    return _int_trim(coeffs)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def det_poly(p: QuadricPencil) -> Polynomial:
    """The determinant |U - lambda*V|, exact and unnormalized.

    Degree is at most n+1, with equality exactly when det V != 0.
    Computed by evaluating the determinant at n+2 integer points and
    interpolating, which avoids symbolic cofactor blowup.
    """
    iu, iv, mult = _cleared_int_pair(p)
    idx = list(range(p.size))
    coeffs = _poly_minor(iu, iv, idx, idx)
    scale = Fraction(1, mult ** p.size)
    return Polynomial([c * scale for c in coeffs])


@dataclass(frozen=True)
class InvariantFactors:
    """Divisibility chain d_1 | d_2 | ... | d_{n+1} of U - lambda*V.

    Each d_i is monic (constants allowed); d_i = D_i / D_{i-1} where D_i
    is the monic gcd of all i x i minors.
    """

    factors: tuple[Polynomial, ...]

    def __post_init__(self):
        for a, b in zip(self.factors, self.factors[1:]):
            if not a.divides(b):
                raise InternalConsistencyError(
                    f"invariant factors fail the divisibility chain: {a} | {b}"
                )

    @property
    def nontrivial(self) -> tuple[Polynomial, ...]:
        return tuple(f for f in self.factors if f.degree > 0)

    def product(self) -> Polynomial:
        out = Polynomial([1])
        for f in self.factors:
            out = out * f
        return out


def invariant_factors(p: QuadricPencil) -> InvariantFactors:
    """Invariant factors of U - lambda*V by gcds of minors.

    Raises ``DegeneratePencilError`` when |U - lambda*V| vanishes
    identically; callers route that case to degeneracy classification.
    """
    iu, iv, mult = _cleared_int_pair(p)
    size = p.size
    idx = list(range(size))

    full = _poly_minor(iu, iv, idx, idx)
    if not full:
        raise DegeneratePencilError("determinant of the pencil vanishes identically")

    gcds: list[list[int]] = [[] for _ in range(size + 1)]
    gcds[0] = [1]
    gcds[size] = _int_primitive(full)
    for k in range(size - 1, 0, -1):
        if len(gcds[k + 1]) == 1:
            # D_{k+1} is constant and D_k divides it
            gcds[k] = [1]
            continue
        g: list[int] = []
        for rows in combinations(idx, k):
            for cols in combinations(idx, k):
                minor = _poly_minor(iu, iv, rows, cols)
                if not minor:
                    continue
                g = _int_gcd(g, minor) if g else _int_primitive(minor)
                if len(g) == 1:
                    break
            if g and len(g) == 1:
                break
        gcds[k] = g if g else [1]

    big = [Polynomial(c).monic() for c in gcds]
    factors = tuple(big[i].exact_div(big[i - 1]) for i in range(1, size + 1))
    return InvariantFactors(factors)


def select_nonsingular_member(p: QuadricPencil) -> QuadricPencil:
    """An equivalent pencil (U', V') spanning the same quadrics with det V' != 0.

    Sweeps the candidates V' = U + t*V over t = 0, 1, -1, 2, -2, ... after
    first trying V itself.  With det V = 0 the polynomial det(U + t*V) has
    degree at most n, so n+1 singular sweep values certify that the binary
    determinant form vanishes identically, and ``NoSmoothMemberError`` is
    raised.
    """
    if rational_det(p.v) != 0:
        return p
    sweep = [0]
    step = 1
    while len(sweep) < p.size:
        sweep += [step, -step]
        step += 1
    for t in sweep[: p.size]:
        w = p.member(1, t)
        if rational_det(w) != 0:
            return QuadricPencil(p.v, w)
    raise NoSmoothMemberError("no member of the pencil is nonsingular")


@dataclass(frozen=True)
class DegeneracyReport:
    """What can be said once no nonsingular member exists.

    ``common_kernel_dim`` is dim(ker U intersect ker V); a positive value
    means the base locus is a cone.  Kronecker minimal indices are not
    computed: detection is all the classification downstream needs.
    """

    common_kernel_dim: int
    is_cone: bool
    verdict: str = "not a Segre quartic surface"


def degeneracy_report(p: QuadricPencil) -> DegeneracyReport:
    try:
        select_nonsingular_member(p)
    except NoSmoothMemberError:
        pass
    else:
        raise ValueError("pencil has a nonsingular member; nothing to report")
    stacked = [list(row) for row in p.u] + [list(row) for row in p.v]
    r0 = p.size - _rank(stacked)
    return DegeneracyReport(common_kernel_dim=r0, is_cone=r0 > 0)
