"""Proper-interval partial representation extension."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from intrep import Graph, InvalidPartialError, extend_proper, validate_partial
from intrep.oracle import check_valid_proper, oracle_extendible_proper
from intrep.properext import predrawn_order

from conftest import complete_graph, path_graph


def F(num, den: int = 1) -> Fraction:
    return Fraction(num, den)


def paw() -> Graph:
    # z(0)-y(1), y-u(2), y-w(3), u-w
    return Graph.from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)])


class TestValidatePartial:
    def test_accepts_valid_pins(self):
        g = path_graph(3)
        ivs = validate_partial(g, {0: (F(0), F(1))})
        assert ivs == {0: (F(0), F(1))}

    def test_rejects_unknown_vertex(self):
        with pytest.raises(InvalidPartialError):
            validate_partial(path_graph(2), {5: (F(0), F(1))})

    def test_rejects_backwards_interval(self):
        with pytest.raises(InvalidPartialError):
            validate_partial(path_graph(2), {0: (F(1), F(0))})

    def test_rejects_containment_between_pins(self):
        g = path_graph(2)
        with pytest.raises(InvalidPartialError):
            validate_partial(
                g, {0: (F(0), F(3)), 1: (F(1), F(2))}
            )

    def test_rejects_pins_contradicting_edges(self):
        g = path_graph(2)
        with pytest.raises(InvalidPartialError):
            validate_partial(g, {0: (F(0), F(1)), 1: (F(2), F(3))})

    def test_rejects_pins_contradicting_nonedges(self):
        g = Graph.from_edges(2, [])
        with pytest.raises(InvalidPartialError):
            validate_partial(g, {0: (F(0), F(2)), 1: (F(1), F(3))})


class TestPredrawnOrder:
    def test_lex_by_left_then_right(self):
        ivs = {
            2: (F(0), F(2)),
            0: (F(0), F(1)),
            1: (F(-1), F(5)),
        }
        assert predrawn_order(ivs) == [1, 0, 2]

    def test_empty(self):
        assert predrawn_order({}) == []


class TestExtendProper:
    def test_no_pins_any_proper_graph(self):
        g = path_graph(4)
        got = extend_proper(g, {})
        assert got is not None
        assert check_valid_proper(got, g).ok

    def test_not_proper_graph_inextendible(self):
        claw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert extend_proper(claw, {}) is None

    def test_pins_preserved(self):
        g = path_graph(3)
        pins = {1: (F(2), F(7, 2))}
        got = extend_proper(g, pins)
        assert got is not None
        assert got[1] == pins[1]
        assert check_valid_proper(got, g).ok

    def test_paw_touching_pins_inextendible(self):
        """Touching pre-drawn intervals squeeze the hinge vertex.

        u = [0,1] and w = [1,2] touch at 1; the hinge y meets both plus z,
        and either endpoint order forces a containment at the zero-width
        gap, so no extension exists even though the graph is proper
        interval and the pins alone are consistent.
        """
        got = extend_proper(paw(), {2: (F(0), F(1)), 3: (F(1), F(2))})
        assert got is None
        ok, _ = oracle_extendible_proper(
            paw(), {2: (F(0), F(1)), 3: (F(1), F(2))}
        )
        assert not ok

    def test_paw_separated_pins_extendible(self):
        got = extend_proper(paw(), {2: (F(0), F(1)), 3: (F(1, 2), F(3, 2))})
        assert got is not None
        assert check_valid_proper(got, paw()).ok

    def test_interleaved_component_blocks_inextendible(self):
        # P3 (0-1-2) pinned to span [0,5]; isolated vertex 3 pinned inside
        g = Graph.from_edges(4, [(0, 1), (1, 2)])
        partial = {
            0: (F(0), F(1)),
            2: (F(4), F(5)),
            3: (F(2), F(3)),
        }
        assert extend_proper(g, partial) is None
        ok, _ = oracle_extendible_proper(g, partial)
        assert not ok

    def test_separated_component_blocks_extendible(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2)])
        partial = {
            0: (F(0), F(1)),
            2: (F(2), F(3)),
            3: (F(10), F(11)),
        }
        got = extend_proper(g, partial)
        assert got is not None
        assert check_valid_proper(got, g).ok
        for v, iv in partial.items():
            assert got[v] == iv

    def test_unlocated_components_placed_clear(self):
        # only one of three components pinned; the rest must land apart
        g = Graph.from_edges(5, [(0, 1), (2, 3)])
        partial = {0: (F(0), F(2))}
        got = extend_proper(g, partial)
        assert got is not None
        assert check_valid_proper(got, g).ok

    def test_invalid_partial_raises(self):
        g = path_graph(2)
        with pytest.raises(InvalidPartialError):
            extend_proper(g, {0: (F(0), F(5)), 1: (F(1), F(2))})

    def test_matches_oracle_on_random_small(self):
        rng = random.Random(41)
        from intrep.randgen import random_garbage_partial, random_proper_instance

        agreements = 0
        for _ in range(60):
            n = rng.randint(2, 5)
            if rng.random() < 0.5:
                g, _ = random_proper_instance(n, rng, p_break=0.3)
            else:
                edges = [
                    (u, v)
                    for u in range(n)
                    for v in range(u + 1, n)
                    if rng.random() < 0.5
                ]
                g = Graph.from_edges(n, edges)
            lefts = random_garbage_partial(n, rng, p_keep=0.5)
            partial = {
                v: (x, x + Fraction(rng.randint(1, 6), 2))
                for v, x in lefts.items()
            }
            try:
                got = extend_proper(g, partial)
            except InvalidPartialError:
                ok, _ = oracle_extendible_proper(g, partial)
                assert not ok
                continue
            ok, witness = oracle_extendible_proper(g, partial)
            assert ok == (got is not None), (g.edges, partial)
            if got is not None:
                v = check_valid_proper(got, g)
                assert v.ok, v.failures
                for u, iv in partial.items():
                    assert got[u] == iv
            agreements += 1
        assert agreements >= 30
