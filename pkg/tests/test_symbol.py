import random
from fractions import Fraction

import pytest

from segre.catalog import CATALOG_ORDER
from segre.pencil import QuadricPencil, as_matrix, congruent, diagonal, identity, rational_det, select_nonsingular_member
from segre.symbol import (
    ExplicitRoot,
    Group,
    SegreSymbol,
    SymbolicRoot,
    build_normal_form,
    canonicalize,
    compute_symbol,
    elementary_block,
    random_instance,
)


class TestParseRender:
    @pytest.mark.parametrize(
        "text,groups",
        [
            ("[11111]", [(1,), (1,), (1,), (1,), (1,)]),
            ("[2111]", [(2,), (1,), (1,), (1,)]),
            ("[(11)3]", [(1, 1), (3,)]),
            ("[(12)(11)]", [(2, 1), (1, 1)]),
        ],
    )
    def test_parse(self, text, groups):
        s = SegreSymbol.parse(text)
        assert [g.exponents for g in s.groups] == groups

    @pytest.mark.parametrize("bad", ["2111", "[21a1]", "[]", "[(0)]", "[10]", "[(]"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            SegreSymbol.parse(bad)

    def test_round_trip_through_parser(self):
        for text in CATALOG_ORDER:
            s = canonicalize(text)
            assert SegreSymbol.parse(s.render()) == s
            assert s.render() == text  # catalog keys are stored canonically

    def test_group_validation(self):
        with pytest.raises(ValueError):
            Group(())
        with pytest.raises(ValueError):
            Group((0, 1))


class TestCanonicalize:
    def test_reordering(self):
        assert canonicalize("[12(11)]").render() == "[2(11)1]"
        assert SegreSymbol.parse("[12(11)]") == SegreSymbol.parse("[(11)12]")
        assert SegreSymbol.parse("[12(11)]") == SegreSymbol.parse("[(11)21]")

    def test_already_canonical(self):
        assert canonicalize("[(11)(11)1]").render() == "[(11)(11)1]"

    def test_identity(self):
        assert canonicalize("[11111]").render() == "[11111]"

    def test_idempotent(self):
        for text in CATALOG_ORDER:
            once = canonicalize(text)
            assert canonicalize(once).render() == once.render()

    def test_exponents_sorted_inside_group(self):
        assert canonicalize("[(13)1]").render() == "[(31)1]"
        assert SegreSymbol.parse("[(13)1]") == SegreSymbol.parse("[1(13)]")


class TestComputeSymbol:
    def test_five_distinct_eigenvalues(self):
        p = QuadricPencil(diagonal([1, 2, 3, 4, 5]), identity(5))
        assert compute_symbol(p) == "[11111]"

    def test_repeated_eigenvalue_gives_bracket(self):
        p = QuadricPencil(diagonal([1, 1, 2, 3, 4]), identity(5))
        assert compute_symbol(p) == "[(11)111]"

    def test_2111_normal_pair(self):
        assert compute_symbol(build_normal_form("[2111]", [2, 3, 4, 5])) == "[2111]"

    def test_32_merges_to_bracket_on_equal_roots(self):
        # the [(32)] pair is the [32] pair with both roots equal
        assert compute_symbol(build_normal_form("[(32)]", [2])) == "[(32)]"

    def test_scalar_pencil(self):
        p = QuadricPencil(diagonal([2] * 5), identity(5))
        assert compute_symbol(p) == "[(11111)]"

    def test_simple_irrational_spectrum_is_one_basis_element(self):
        # leading 2x2 block [[1,1],[1,-1]] has eigenvalues +-sqrt(2); with
        # five simple roots nothing forces a split, so one quintic carries
        # all five symbolic root descriptors
        w = [[Fraction(0)] * 5 for _ in range(5)]
        w[0][0], w[0][1], w[1][0], w[1][1] = (Fraction(c) for c in (1, 1, 1, -1))
        for k, c in enumerate((3, 4, 5), start=2):
            w[k][k] = Fraction(c)
        sym = compute_symbol(QuadricPencil(as_matrix(w), identity(5)))
        assert sym == "[11111]"
        assert all(isinstance(g.root, SymbolicRoot) for g in sym.groups)
        assert {g.root.poly.degree for g in sym.groups} == {5}
        assert sorted(g.root.index for g in sym.groups) == [0, 1, 2, 3, 4]

    def test_forced_split_keeps_irrational_pair_whole(self):
        # double eigenvalue 3 forces (t-3) out of the basis; the pair
        # +-sqrt(2) stays inside an unfactored cubic with root 4
        w = [[Fraction(0)] * 5 for _ in range(5)]
        w[0][0], w[0][1], w[1][0], w[1][1] = (Fraction(c) for c in (1, 1, 1, -1))
        w[2][2] = w[3][3] = Fraction(3)
        w[4][4] = Fraction(4)
        sym = compute_symbol(QuadricPencil(as_matrix(w), identity(5)))
        assert sym == "[(11)111]"
        explicit = [g for g in sym.groups if isinstance(g.root, ExplicitRoot)]
        assert [(g.exponents, g.root.value) for g in explicit] == [((1, 1), 3)]
        symbolic = [g for g in sym.groups if isinstance(g.root, SymbolicRoot)]
        assert len(symbolic) == 3
        assert {g.root.poly.degree for g in symbolic} == {3}


class TestNormalForm:
    def test_block_shapes(self):
        bu, bv = elementary_block(3, 7)
        assert bu == as_matrix([[0, 0, 7], [0, 7, 1], [7, 1, 0]])
        assert bv == as_matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])

    def test_single_block_symbol(self):
        p = build_normal_form("[5]", [1])
        assert p.size == 5
        assert compute_symbol(p) == "[5]"

    def test_requires_one_root_per_group(self):
        with pytest.raises(ValueError):
            build_normal_form("[2111]", [2, 3])

    def test_rejects_duplicate_roots(self):
        with pytest.raises(ValueError):
            build_normal_form("[2111]", [2, 2, 4, 5])

    def test_round_trip_all_catalog_symbols(self):
        for text in CATALOG_ORDER:
            sym = canonicalize(text)
            roots = list(range(1, len(sym.groups) + 1))
            assert compute_symbol(build_normal_form(sym, roots)) == sym


class TestRandomInstance:
    def test_deterministic(self):
        a = random_instance("[11111]", 7)
        b = random_instance("[11111]", 7)
        assert a.u == b.u and a.v == b.v

    def test_round_trip(self):
        assert compute_symbol(random_instance("[11111]", 7)) == "[11111]"
        assert compute_symbol(random_instance("[(14)]", 0)) == "[(41)]"

    def test_congruence_invariance(self):
        rng = random.Random(5)
        base = random_instance("[(21)11]", 3)
        want = compute_symbol(base)
        for _ in range(5):
            while True:
                a = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(5)]
                if rational_det(as_matrix(a)) != 0:
                    break
            assert compute_symbol(congruent(base, as_matrix(a))) == want

    def test_pencil_basis_invariance(self):
        base = random_instance("[311]", 9)
        want = compute_symbol(base).exponent_structure()
        moved = QuadricPencil(base.member(2, 3), base.member(1, 2))
        sel = select_nonsingular_member(moved)
        assert compute_symbol(sel).exponent_structure() == want

    def test_weight_invariant(self):
        for text in CATALOG_ORDER:
            assert compute_symbol(random_instance(text, 1)).weight == 5
