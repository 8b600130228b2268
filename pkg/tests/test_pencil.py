import random
from fractions import Fraction

import pytest

from segre.errors import DegeneratePencilError, NoSmoothMemberError
from segre.pencil import (
    QuadricPencil,
    as_matrix,
    change_basis,
    congruent,
    degeneracy_report,
    det_poly,
    diagonal,
    identity,
    invariant_factors,
    rational_det,
    select_nonsingular_member,
)
from segre.polynomial import Polynomial
from segre.symbol import build_normal_form


def linear(root):
    return Polynomial([-Fraction(root), 1])


def product(factors):
    out = Polynomial([1])
    for f in factors:
        out = out * f
    return out


def cofactor_det(mat):
    """Independent determinant oracle: recursive cofactor expansion."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = Polynomial()
    for j in range(n):
        if mat[0][j].is_zero:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in mat[1:]]
        term = mat[0][j] * cofactor_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def poly_matrix(p: QuadricPencil):
    lam = Polynomial([0, 1])
    return [
        [Polynomial([u]) - lam * Polynomial([v]) for u, v in zip(urow, vrow)]
        for urow, vrow in zip(p.u, p.v)
    ]


class TestDetPoly:
    def test_diagonal(self):
        p = QuadricPencil(diagonal([1, 2, 3, 4, 5]), identity(5))
        expected = product([Polynomial([a, -1]) for a in (1, 2, 3, 4, 5)])
        assert det_poly(p) == expected

    def test_2111_normal_pair(self):
        # block determinant -(a1-t)^2 times the three diagonal factors
        p = build_normal_form("[2111]", [2, 3, 4, 5])
        expected = -1 * product(
            [Polynomial([2, -1]), Polynomial([2, -1])]
            + [Polynomial([a, -1]) for a in (3, 4, 5)]
        )
        assert det_poly(p) == expected

    def test_32_normal_pair(self):
        # block determinants -a^3 and -a^2 multiply to (2-t)^3 (3-t)^2
        p = build_normal_form("[32]", [2, 3])
        expected = product([Polynomial([2, -1])] * 3 + [Polynomial([3, -1])] * 2)
        assert det_poly(p) == expected

    def test_degree_drops_when_v_singular(self):
        p = QuadricPencil(diagonal([1, 2, 3, 4, 5]), diagonal([1, 1, 1, 1, 0]))
        assert det_poly(p).degree == 4

    def test_against_cofactor_oracle(self):
        rng = random.Random(3)
        for _ in range(5):
            m = [[rng.randint(-4, 4) for _ in range(5)] for _ in range(5)]
            u = as_matrix([[m[i][j] + m[j][i] for j in range(5)] for i in range(5)])
            n = [[rng.randint(-4, 4) for _ in range(5)] for _ in range(5)]
            v = as_matrix([[n[i][j] + n[j][i] for j in range(5)] for i in range(5)])
            p = QuadricPencil(u, v)
            assert det_poly(p) == cofactor_det(poly_matrix(p))

    def test_degree_full_iff_v_nonsingular(self):
        rng = random.Random(17)
        for _ in range(10):
            m = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(5)]
            u = as_matrix([[m[i][j] + m[j][i] for j in range(5)] for i in range(5)])
            n = [[rng.randint(-2, 2) for _ in range(5)] for _ in range(5)]
            vr = [[n[i][j] + n[j][i] for j in range(5)] for i in range(5)]
            if rng.random() < 0.5:  # force det V = 0 half the time
                for k in range(5):
                    vr[0][k] = vr[k][0] = 0
            p = QuadricPencil(u, as_matrix(vr))
            assert (det_poly(p).degree == 5) == (rational_det(as_matrix(vr)) != 0)


class TestInvariantFactors:
    def test_repeated_diagonal_eigenvalue(self):
        p = QuadricPencil(diagonal([1, 1, 2, 3, 4]), identity(5))
        inv = invariant_factors(p)
        assert inv.factors[:3] == (Polynomial([1]),) * 3
        assert inv.factors[3] == linear(1)
        assert inv.factors[4] == product([linear(a) for a in (1, 2, 3, 4)])

    def test_2111_single_nontrivial_factor(self):
        p = build_normal_form("[2111]", [2, 3, 4, 5])
        inv = invariant_factors(p)
        assert inv.factors[:4] == (Polynomial([1]),) * 4
        assert inv.factors[4] == product(
            [linear(2), linear(2), linear(3), linear(4), linear(5)]
        )

    def test_scalar_pencil(self):
        p = QuadricPencil(diagonal([2] * 5), identity(5))
        inv = invariant_factors(p)
        assert all(f == linear(2) for f in inv.factors)

    def test_product_is_monic_determinant(self):
        p = build_normal_form("[(21)2]", [2, 5])
        inv = invariant_factors(p)
        assert inv.product() == det_poly(p).monic()

    def test_congruence_invariance(self):
        rng = random.Random(11)
        base = build_normal_form("[(31)1]", [1, 4])
        want = invariant_factors(base).factors
        for _ in range(5):
            while True:
                a = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(5)]
                if rational_det(as_matrix(a)) != 0:
                    break
            moved = congruent(base, as_matrix(a))
            assert invariant_factors(moved).factors == want

    def test_degenerate_raises(self):
        zero = diagonal([0] * 5)
        p = QuadricPencil(diagonal([1, 0, 0, 0, 0]), zero)
        with pytest.raises(DegeneratePencilError):
            invariant_factors(p)


class TestSelectNonsingularMember:
    def test_nonsingular_v_unchanged(self):
        p = QuadricPencil(diagonal([1, 2, 3, 4, 5]), identity(5))
        assert select_nonsingular_member(p) is p

    def test_swap_when_only_u_nonsingular(self):
        p = QuadricPencil(identity(5), diagonal([1, 1, 1, 1, 0]))
        sel = select_nonsingular_member(p)
        assert sel.u == p.v and sel.v == p.u

    def test_sweep_hits_u_plus_v(self):
        u = diagonal([1, 1, 1, 1, 0])
        v = diagonal([0, 1, 1, 1, 1])
        p = QuadricPencil(u, v)
        sel = select_nonsingular_member(p)
        assert sel.u == v
        assert sel.v == p.member(1, 1)
        assert rational_det(sel.v) != 0

    def test_no_smooth_member(self):
        # both forms miss X4 entirely: common kernel vector e4
        u = diagonal([1, 2, 3, 4, 0])
        v = diagonal([5, 1, 2, 7, 0])
        with pytest.raises(NoSmoothMemberError):
            select_nonsingular_member(QuadricPencil(u, v))


class TestDegeneracyReport:
    def test_common_kernel_is_cone(self):
        u = diagonal([1, 2, 3, 4, 0])
        v = diagonal([5, 1, 2, 7, 0])
        rep = degeneracy_report(QuadricPencil(u, v))
        assert rep.common_kernel_dim == 1
        assert rep.is_cone
        assert rep.verdict == "not a Segre quartic surface"

    def test_rejects_pencil_with_smooth_member(self):
        p = QuadricPencil(diagonal([1, 2, 3, 4, 5]), identity(5))
        with pytest.raises(ValueError):
            degeneracy_report(p)


class TestChangeBasis:
    def test_requires_invertible(self):
        p = QuadricPencil(diagonal([1, 2, 3, 4, 5]), identity(5))
        with pytest.raises(ValueError):
            change_basis(p, 1, 2, 2, 4)

    def test_spans_same_pencil(self):
        p = QuadricPencil(diagonal([1, 2, 3, 4, 5]), identity(5))
        q = change_basis(p, 1, 1, 0, 1)
        assert q.u == p.member(1, 1)
        assert q.v == p.v


class TestValidation:
    def test_rejects_asymmetric(self):
        m = [[0, 1, 0, 0, 0]] + [[0] * 5 for _ in range(4)]
        with pytest.raises(ValueError):
            QuadricPencil(as_matrix(m), identity(5))

    def test_rejects_size_mismatch(self):
        with pytest.raises(ValueError):
            QuadricPencil(identity(4), identity(5))
