import pytest

from segre.catalog import (
    CATALOG,
    CATALOG_ORDER,
    TABLE1_ORDER,
    TABLE2_ROWS,
    TABLE3_ORDER,
    AutE,
    SingularityType,
    class_degree,
    transitions,
)
from segre.classify import classify_symbol
from segre.symbol import SegreSymbol, canonicalize


def sings(text):
    return tuple(SingularityType.parse(p) for p in text.split("+")) if text else ()


class TestSingularityType:
    def test_euler_numbers(self):
        assert SingularityType("A", 1).euler == 2
        assert SingularityType("A", 4).euler == 5
        assert SingularityType("D", 4).euler == 6
        assert SingularityType("D", 5).euler == 7

    def test_validation(self):
        with pytest.raises(ValueError):
            SingularityType("A", 0)
        with pytest.raises(ValueError):
            SingularityType("D", 3)
        with pytest.raises(ValueError):
            SingularityType("E", 6)


class TestClassDegree:
    def test_smooth(self):
        assert class_degree([]) == 12

    def test_one_node(self):
        assert class_degree(sings("A1")) == 10

    def test_table_row_with_three_points(self):
        assert class_degree(sings("A1+A1+A2")) == 5

    def test_d5(self):
        assert class_degree(sings("D5")) == 5

    def test_rejects_overflow(self):
        with pytest.raises(ValueError):
            class_degree(sings("D5+D5"))


class TestCatalogData:
    def test_sixteen_symbols(self):
        assert len(CATALOG) == 16
        assert set(CATALOG_ORDER) == set(CATALOG)

    def test_keys_are_canonical(self):
        for key in CATALOG:
            assert canonicalize(key).render() == key

    def test_tables_cover_catalog(self):
        t1 = set(TABLE1_ORDER)
        t2 = {r.symbol for r in TABLE2_ROWS}
        t3 = set(TABLE3_ORDER)
        assert t1 | t2 | t3 == set(CATALOG)
        assert len(TABLE1_ORDER) == 10 and len(TABLE2_ROWS) == 10 and len(TABLE3_ORDER) == 2
        # a symbol sits in the first table exactly when it has a bare 1
        for key in CATALOG:
            has_bare_one = SegreSymbol.parse(key).unbracketed_ones() > 0
            assert (key in t1) == has_bare_one
        # and in the second exactly when a bracketed group contains a 1
        for key in CATALOG:
            bracketed_one = any(
                1 in g.exponents and g.bracketed for g in SegreSymbol.parse(key).groups
            )
            assert (key in t2) == bracketed_one

    def test_planes_never_exceed_lines(self):
        for row in CATALOG.values():
            assert row.planes_in_dual <= row.lines_total

    def test_cone_covered_rows_have_no_planes(self):
        for r in TABLE2_ROWS:
            assert CATALOG[r.symbol].planes_in_dual == 0

    def test_flagged_discrepancy(self):
        assert CATALOG["[2111]"].printed_class_discrepancy == 8
        assert CATALOG["[2111]"].class_degree == 10
        others = [r for r in CATALOG.values() if r.symbol != "[2111]"]
        assert all(r.printed_class_discrepancy is None for r in others)

    def test_ambiguous_aut_rows(self):
        assert CATALOG["[(31)1]"].aut_e is AutE.C_STAR_OR_TRIVIAL
        assert CATALOG["[(41)]"].aut_e is AutE.C_STAR_OR_TRIVIAL


class TestClassify:
    def test_smooth_row(self):
        r = classify_symbol("[11111]")
        assert r.is_segre
        assert r.class_degree == 12
        assert r.lines_total == 16
        assert r.planes_in_dual == 16
        assert r.q_star_count == 5
        assert r.genus == 1 and r.embedding_degree == 4

    def test_cone_rejection(self):
        r = classify_symbol("[(32)]")
        assert not r.is_segre
        assert r.reason == "cone"

    def test_reducible_rejection(self):
        r = classify_symbol("[(111)11]")
        assert not r.is_segre
        assert r.reason == "reducible"

    def test_no_cover_row(self):
        r = classify_symbol("[23]")
        assert r.is_segre
        assert r.singularities == sings("A1+A2")
        assert r.class_degree == 7
        assert r.lines_total == 6
        assert r.planes_in_dual == 3
        assert r.covers == ()

    def test_order_insensitive(self):
        r = classify_symbol("[1112]")
        assert r.symbol.render() == "[2111]"
        assert r.class_degree == 10
        assert r.singularities == sings("A1")

    def test_rejects_wrong_weight(self):
        with pytest.raises(ValueError):
            classify_symbol("[1111]")

    def test_discrepancy_note_present(self):
        r = classify_symbol("[2111]")
        assert any("8" in n and "10" in n for n in r.notes)


class TestTransitions:
    def test_smooth_degenerates_to_one_node(self):
        assert [t.render() for t in transitions("[11111]")] == ["[2111]"]

    def test_line_cubic_transition(self):
        assert [t.render() for t in transitions("[221]")] == ["[41]"]

    def test_no_listed_transition(self):
        assert transitions("[5]") == []

    def test_rejects_non_catalog(self):
        with pytest.raises(ValueError):
            transitions("[(32)]")

    def test_edges_stay_in_catalog_and_class_monotone(self):
        for src in CATALOG_ORDER:
            for dst in transitions(src):
                key = dst.render()
                assert key in CATALOG
                delta = CATALOG[key].class_degree - CATALOG[src].class_degree
                if (src, key) == ("[3(11)]", "[(31)1]"):
                    assert delta == 1  # the one class increase
                else:
                    assert delta <= 0
