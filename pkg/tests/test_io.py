"""Text formats: graphs, bounds, partial drawings, representations."""

from __future__ import annotations

from fractions import Fraction

import pytest

from intrep import Graph
from intrep.io import (
    InputFormatError,
    format_bounds,
    format_graph,
    format_rep_proper,
    format_rep_unit,
    parse_bounds,
    parse_graph,
    parse_partial_proper,
    parse_partial_unit,
)

NEG_INF = float("-inf")
POS_INF = float("inf")


class TestGraphFormat:
    def test_round_trip(self):
        g = Graph.from_edges(4, [(0, 1), (1, 3)])
        assert parse_graph(format_graph(g)).adj == g.adj

    def test_comments_and_blanks(self):
        text = "# header comment\n\n3 2  # inline\n0 1\n\n1 2 # last\n"
        g = parse_graph(text)
        assert g.n == 3 and g.m == 2

    def test_empty_file(self):
        with pytest.raises(InputFormatError):
            parse_graph("# nothing here\n")

    def test_bad_header(self):
        with pytest.raises(InputFormatError) as exc:
            parse_graph("3\n")
        assert "line 1" in str(exc.value)

    def test_edge_count_mismatch(self):
        with pytest.raises(InputFormatError) as exc:
            parse_graph("3 2\n0 1\n")
        assert "header says 2" in str(exc.value)

    def test_bad_edge_line(self):
        with pytest.raises(InputFormatError) as exc:
            parse_graph("2 1\n0 1 2\n")
        assert "line 2" in str(exc.value)

    def test_out_of_range_edge(self):
        with pytest.raises(InputFormatError):
            parse_graph("2 1\n0 5\n")

    def test_isolated_vertices(self):
        g = parse_graph("4 1\n2 3\n")
        assert g.adj[0] == () and g.has_edge(2, 3)


class TestBoundsFormat:
    def test_round_trip(self):
        lbs = {0: Fraction(1, 2), 3: Fraction(-2)}
        ubs = {0: Fraction(5), 1: Fraction(7, 3)}
        text = format_bounds(lbs, ubs, order=(1, 0))
        lbs2, ubs2, order = parse_bounds(text, 5)
        assert lbs2 == lbs and ubs2 == ubs and order == (1, 0)

    def test_infinities_drop_out(self):
        lbs, ubs, order = parse_bounds("0 -inf inf\n1 0 inf\n", 2)
        assert lbs == {1: Fraction(0)} and ubs == {} and order is None

    def test_order_line(self):
        lbs, ubs, order = parse_bounds("order 2 0 1\n", 3)
        assert order == (2, 0, 1) and not lbs and not ubs

    def test_duplicate_order_rejected(self):
        with pytest.raises(InputFormatError):
            parse_bounds("order 0\norder 0\n", 1)

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(InputFormatError) as exc:
            parse_bounds("0 1 2\n0 1 2\n", 1)
        assert "duplicate" in str(exc.value)

    def test_reversed_infinities_rejected(self):
        with pytest.raises(InputFormatError):
            parse_bounds("0 inf 0\n", 1)
        with pytest.raises(InputFormatError):
            parse_bounds("0 0 -inf\n", 1)

    def test_vertex_out_of_range(self):
        with pytest.raises(InputFormatError):
            parse_bounds("7 0 1\n", 3)

    def test_rationals_parsed_exactly(self):
        lbs, ubs, _ = parse_bounds("0 -3/4 11/6\n", 1)
        assert lbs == {0: Fraction(-3, 4)} and ubs == {0: Fraction(11, 6)}


class TestPartialFormats:
    def test_proper_partial(self):
        got = parse_partial_proper("0 0 3/2\n2 1 2\n", 3)
        assert got == {
            0: (Fraction(0), Fraction(3, 2)),
            2: (Fraction(1), Fraction(2)),
        }

    def test_proper_partial_needs_three_tokens(self):
        with pytest.raises(InputFormatError):
            parse_partial_proper("0 1\n", 2)

    def test_unit_partial_two_or_three_tokens(self):
        got = parse_partial_unit("0 1/2\n1 2 3\n", 2)
        assert got == {0: Fraction(1, 2), 1: Fraction(2)}

    def test_unit_partial_rejects_non_unit(self):
        with pytest.raises(InputFormatError) as exc:
            parse_partial_unit("0 0 3/2\n", 1)
        assert "unit length" in str(exc.value)

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(InputFormatError):
            parse_partial_unit("0 0\n0 1\n", 1)

    def test_vertex_out_of_range(self):
        with pytest.raises(InputFormatError):
            parse_partial_proper("9 0 1\n", 3)


class TestRepFormats:
    def test_unit_rep_lines(self):
        text = format_rep_unit({1: Fraction(1, 2), 0: Fraction(0)})
        assert text == "0 0 1\n1 1/2 3/2\n"

    def test_proper_rep_lines(self):
        text = format_rep_proper({0: (Fraction(0), Fraction(5, 4))})
        assert text == "0 0 5/4\n"

    def test_unit_rep_reparses(self):
        ell = {0: Fraction(-1, 3), 1: Fraction(2)}
        got = parse_partial_unit(format_rep_unit(ell), 2)
        assert got == ell

    def test_empty_mappings(self):
        assert format_rep_unit({}) == ""
        assert format_bounds({}, {}) == ""
