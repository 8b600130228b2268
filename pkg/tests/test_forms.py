from fractions import Fraction

import pytest

from segre.errors import DegreeError, ParseError, ZeroFormError
from segre.forms import (
    parse_quadratic_form,
    pencil_from_json,
    pencil_to_json,
    render_form,
)
from segre.pencil import QuadricPencil, diagonal, identity
from segre.symbol import build_normal_form


class TestParse:
    def test_cross_and_square_terms(self):
        f = parse_quadratic_form("2*X0*X1 + X2^2 + X3^2 + X4^2")
        m = f.matrix
        assert m[0][1] == m[1][0] == 1
        assert m[2][2] == m[3][3] == m[4][4] == 1
        assert m[0][0] == 0 and m[1][1] == 0

    def test_fractional_coefficient_and_halving(self):
        f = parse_quadratic_form("3/2*X3^2 - X0*X4")
        m = f.matrix
        assert m[3][3] == Fraction(3, 2)
        assert m[0][4] == m[4][0] == Fraction(-1, 2)

    def test_implicit_multiplication(self):
        a = parse_quadratic_form("2X0X1 + X2^2")
        b = parse_quadratic_form("2*X0*X1 + X2^2")
        assert a.matrix == b.matrix

    def test_collects_repeated_monomials(self):
        f = parse_quadratic_form("X0*X1 + X1*X0 + X0^2 - X0^2")
        assert f.matrix[0][1] == 1
        assert f.matrix[0][0] == 0

    def test_degree_errors(self):
        with pytest.raises(DegreeError):
            parse_quadratic_form("X0^3")
        with pytest.raises(DegreeError):
            parse_quadratic_form("X0")
        with pytest.raises(DegreeError):
            parse_quadratic_form("X0^2 + 5")
        with pytest.raises(DegreeError):
            parse_quadratic_form("X0^2*X1")

    def test_unknown_variable(self):
        with pytest.raises(ParseError):
            parse_quadratic_form("X5^2")
        with pytest.raises(ParseError):
            parse_quadratic_form("Y0^2")

    def test_zero_form(self):
        with pytest.raises(ZeroFormError):
            parse_quadratic_form("X0^2 - X0^2")

    def test_syntax_errors(self):
        for bad in ("", "X0^2 +", "* X0^2", "X0^2 X1^2", "1/0*X0^2"):
            with pytest.raises(ParseError):
                parse_quadratic_form(bad)


class TestRenderRoundTrip:
    def test_round_trip_examples(self):
        for text in (
            "2*X0*X1 + X2^2 + X3^2 + X4^2",
            "3/2*X3^2 - X0*X4",
            "4*X0*X2 + 2*X1^2 + 2*X1*X2 + 6*X3*X4 + X4^2",
        ):
            m = parse_quadratic_form(text).matrix
            rendered = render_form(m)
            assert parse_quadratic_form(rendered).matrix == m

    def test_normal_form_equations(self):
        p = build_normal_form("[2111]", [2, 3, 4, 5])
        assert render_form(p.u) == "4*X0*X1 + X1^2 + 3*X2^2 + 4*X3^2 + 5*X4^2"
        assert render_form(p.v) == "2*X0*X1 + X2^2 + X3^2 + X4^2"


class TestPencilJson:
    def test_round_trip(self):
        p = QuadricPencil(diagonal([1, 2, 3, 4, 5]), identity(5))
        text = pencil_to_json(p)
        q = pencil_from_json(text)
        assert q.u == p.u and q.v == p.v

    def test_rational_strings(self):
        p = QuadricPencil(diagonal([Fraction(1, 2), 2, 3, 4, 5]), identity(5))
        q = pencil_from_json(pencil_to_json(p))
        assert q.u[0][0] == Fraction(1, 2)

    def test_rejects_bad_documents(self):
        with pytest.raises(ParseError):
            pencil_from_json("not json")
        with pytest.raises(ParseError):
            pencil_from_json('{"U": [["1"]]}')
        with pytest.raises(ParseError):
            pencil_from_json('{"U": [["1"]], "V": [["1"]]}')
