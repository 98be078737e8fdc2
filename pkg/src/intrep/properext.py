"""Extending partial representations by proper intervals.

A partial representation pre-draws some vertices as closed intervals of
arbitrary positive length.  The task: place the remaining vertices so the
whole family represents the graph — intervals intersect exactly for edges —
and no interval properly contains another, keeping every pre-drawn interval
untouched.

The decision is construction-based.  Valid vertex orders of a connected
proper interval graph are unique up to reversal and permutation inside
groups of indistinguishable vertices, so per component only two directions
need attention.  For a fixed direction, once free twins are collapsed (a
free twin of a pre-drawn vertex can copy its interval verbatim; of the
remaining groups each is either all pre-drawn or one free vertex), the
interleaving of all 2k endpoints is the unique linear order determined by
the edges: right endpoints follow the vertex order and r_i lands
immediately before l_{j+1}, where j is the rightmost closed neighbor of
v_i.  Free endpoint values may then be chosen anywhere inside their gap
between neighboring pre-drawn values — any strictly increasing choice gives
the same pairwise comparisons — so placing each run equidistantly (and at
the forced value when its gap has zero width) succeeds exactly when some
extension with this direction exists.  A final exact verification of the
produced representation decides; failures in both directions are
conclusive.

Components occupy disjoint stretches of the line.  Pre-drawn intervals of
one component must therefore form a contiguous block in the left-to-right
order of all pre-drawn intervals; blocks fix the component order, gaps
between neighboring blocks are split at their midpoint to bound each
component's spill-over, and the outermost components get padding 1.
Components with no pre-drawn vertex are appended to the right, each laid
out inside its own unit-width slot.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .graph import Graph, connected_components, indistinguishable_groups
from .oracle import check_valid_proper
from .ordering import NotProperIntervalError, compute_proper_ordering

Interval = tuple[Fraction, Fraction]


class InvalidPartialError(Exception):
    """The pre-drawn intervals are not a representation of their own graph."""


def validate_partial(
    graph: Graph, partial: Mapping[int, tuple[Fraction, Fraction]]
) -> dict[int, Interval]:
    """Coerce to exact rationals and check the pre-drawn family itself.

    Every pre-drawn interval needs l < r; every pre-drawn pair must
    intersect exactly if it is an edge and stay containment-free.  Raises
    :class:`InvalidPartialError` otherwise — such an input is broken, not
    merely inextendible.
    """
    ivs: dict[int, Interval] = {}
    for v, (lo, hi) in partial.items():
        if not 0 <= v < graph.n:
            raise InvalidPartialError(f"pre-drawn vertex {v} is not in the graph")
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise InvalidPartialError(f"vertex {v}: interval [{lo},{hi}] needs l < r")
        ivs[v] = (lo, hi)
    items = sorted(ivs)
    for a in items:
        la, ra = ivs[a]
        for b in items:
            if b <= a:
                continue
            lb, rb = ivs[b]
            meets = lb <= ra and la <= rb
            if graph.has_edge(a, b) != meets:
                kind = "edge" if graph.has_edge(a, b) else "nonedge"
                raise InvalidPartialError(
                    f"{kind} ({a},{b}) vs intervals [{la},{ra}], [{lb},{rb}]"
                )
            if (la, ra) != (lb, rb) and (
                (lb <= la and ra <= rb) or (la <= lb and rb <= ra)
            ):
                raise InvalidPartialError(f"containment between {a} and {b}")
    return ivs


def predrawn_order(partial: Mapping[int, tuple[Fraction, Fraction]]) -> list[int]:
    """Pre-drawn vertices left to right: by left endpoint, then right, then id."""
    return sorted(partial, key=lambda v: (partial[v][0], partial[v][1], v))


def _endpoint_sequence(graph: Graph, vorder: Sequence[int]) -> list[tuple[int, int]]:
    """The unique endpoint interleaving for a vertex order of a component.

    Returns 2k events ``(side, vertex)`` with side 0 = left, 1 = right.
    Left endpoints follow the vertex order; r_i goes immediately before
    l_{j+1} for j = the rightmost closed neighbor of v_i, ties between
    right endpoints by vertex order, and r's whose j is last are appended.
    """
    k = len(vorder)
    rank = {v: i for i, v in enumerate(vorder)}
    after: list[list[int]] = [[] for _ in range(k + 1)]  # r's to emit before l of rank t
    for i, v in enumerate(vorder):
        j = max((rank[u] for u in graph.adj[v] if u in rank), default=i)
        j = max(j, i)
        after[j + 1].append(v)
    events: list[tuple[int, int]] = []
    for t, v in enumerate(vorder):
        events.extend((1, u) for u in after[t])
        events.append((0, v))
    events.extend((1, u) for u in after[k])
    return events


def _place_events(
    events: list[tuple[int, int]],
    pins: dict[tuple[int, int], Fraction],
    walls: tuple[Fraction, Fraction],
) -> dict[tuple[int, int], Fraction] | None:
    """Assign values to an endpoint sequence around its pinned entries.

    Pinned values must be non-decreasing along the sequence.  Each maximal
    run of free endpoints lives strictly inside the gap between its
    neighboring pinned values (the walls stand in at the outer ends) and is
    spread equidistantly — a gap of zero width forces that exact value.
    Returns None when the pins contradict the sequence.
    """
    values: dict[tuple[int, int], Fraction] = dict(pins)
    lo_wall, hi_wall = walls
    anchors: list[tuple[int, Fraction]] = []
    for idx, ev in enumerate(events):
        if ev in pins:
            anchors.append((idx, pins[ev]))
    for (_, a), (_, b) in zip(anchors, anchors[1:]):
        if a > b:
            return None
    bounds = [(-1, lo_wall), *anchors, (len(events), hi_wall)]
    for (i0, a), (i1, b) in zip(bounds, bounds[1:]):
        m = i1 - i0 - 1
        if m <= 0:
            continue
        if a == b:
            for t in range(1, m + 1):
                values[events[i0 + t]] = a
        else:
            if a > b:
                return None
            step = (b - a) / (m + 1)
            for t in range(1, m + 1):
                values[events[i0 + t]] = a + t * step
    return values


def _collapse(
    local: Graph, pins: dict[int, Interval]
) -> tuple[list[int], dict[int, int]]:
    """Remove in-group freedom: every kept group is all-pre-drawn or one free.

    Returns the kept vertices and a map sending each dropped free vertex to
    the group mate whose interval it will copy.
    """
    groups = indistinguishable_groups(local)
    kept: list[int] = []
    copy_of: dict[int, int] = {}
    for members in groups.groups:
        drawn = [v for v in members if v in pins]
        free = [v for v in members if v not in pins]
        if drawn:
            kept.extend(drawn)
            source = min(drawn, key=lambda v: (pins[v], v))
            for v in free:
                copy_of[v] = source
        else:
            rep = free[0]
            kept.append(rep)
            for v in free[1:]:
                copy_of[v] = rep
    kept.sort()
    return kept, copy_of


def _extend_component(
    local: Graph,
    pins: dict[int, Interval],
    walls: tuple[Fraction, Fraction],
) -> dict[int, Interval] | None:
    """One located component: both directions, construct, verify exactly."""
    kept, copy_of = _collapse(local, pins)
    core = local.induced(kept)
    to_core = {v: i for i, v in enumerate(kept)}
    core_pins = {to_core[v]: pins[v] for v in kept if v in pins}
    groups = indistinguishable_groups(core)
    ordering = compute_proper_ordering(core, groups)
    for direction in (ordering, ordering.reversed()):
        vorder: list[int] = []
        for gid in direction.sequence:
            members = list(groups.groups[gid])
            members.sort(
                key=lambda v: (core_pins[v], v) if v in core_pins else (0,)
            )
            vorder.extend(members)
        events = _endpoint_sequence(core, vorder)
        ev_pins = {}
        for v, (lo, hi) in core_pins.items():
            ev_pins[(0, v)] = lo
            ev_pins[(1, v)] = hi
        values = _place_events(events, ev_pins, walls)
        if values is None:
            continue
        placed = {v: (values[(0, v)], values[(1, v)]) for v in range(core.n)}
        if not check_valid_proper(placed, core).ok:
            continue
        out = {kept[v]: iv for v, iv in placed.items()}
        for v, src in copy_of.items():
            out[v] = out[src]
        return out
    return None


def _free_component(local: Graph, slot: tuple[Fraction, Fraction]) -> dict[int, Interval]:
    """Canonical representation of an unconstrained component inside a slot."""
    kept, copy_of = _collapse(local, {})
    core = local.induced(kept)
    to_core = {v: i for i, v in enumerate(kept)}
    groups = indistinguishable_groups(core)
    ordering = compute_proper_ordering(core, groups)
    vorder = [v for gid in ordering.sequence for v in groups.groups[gid]]
    events = _endpoint_sequence(core, vorder)
    values = _place_events(events, {}, slot)
    assert values is not None
    placed = {v: (values[(0, v)], values[(1, v)]) for v in range(core.n)}
    out = {kept[v]: iv for v, iv in placed.items()}
    for v, src in copy_of.items():
        out[v] = out[src]
    return out


def extend_proper(
    graph: Graph, partial: Mapping[int, tuple[Fraction, Fraction]]
) -> dict[int, Interval] | None:
    """Extend a partial proper-interval representation, or decide none exists.

    Returns a full representation (containment-free closed intervals whose
    intersections are exactly the edges) agreeing with every pre-drawn
    interval, or None when the partial representation is inextendible.
    Raises :class:`InvalidPartialError` when the pre-drawn intervals are not
    themselves a valid representation of the graph they induce, and decides
    None for graphs that are not proper interval graphs at all.
    """
    ivs = validate_partial(graph, partial)
    comps = connected_components(graph)
    comp_of: dict[int, int] = {}
    for ci, vs in enumerate(comps):
        for v in vs:
            comp_of[v] = ci

    # pre-drawn intervals of each component must form one contiguous block
    seen: set[int] = set()
    run: int | None = None
    for v in predrawn_order(ivs):
        c = comp_of[v]
        if c != run:
            if c in seen:
                return None
            if run is not None:
                seen.add(run)
            run = c
    located = sorted(
        {comp_of[v] for v in ivs},
        key=lambda ci: min(ivs[v][0] for v in comps[ci] if v in ivs),
    )

    hull = {
        ci: (
            min(ivs[v][0] for v in comps[ci] if v in ivs),
            max(ivs[v][1] for v in comps[ci] if v in ivs),
        )
        for ci in located
    }
    out: dict[int, Interval] = {}
    try:
        for t, ci in enumerate(located):
            lo = hull[ci][0] - 1 if t == 0 else (hull[located[t - 1]][1] + hull[ci][0]) / 2
            hi = (
                hull[ci][1] + 1
                if t == len(located) - 1
                else (hull[ci][1] + hull[located[t + 1]][0]) / 2
            )
            vs = comps[ci]
            local_pins = {i: ivs[v] for i, v in enumerate(vs) if v in ivs}
            got = _extend_component(graph.induced(vs), local_pins, (lo, hi))
            if got is None:
                return None
            out.update({vs[i]: iv for i, iv in got.items()})
        base = max((r for _, r in out.values()), default=Fraction(0)) + 1
        for ci in range(len(comps)):
            if ci in hull:
                continue
            vs = comps[ci]
            got = _free_component(graph.induced(vs), (base, base + 1))
            out.update({vs[i]: iv for i, iv in got.items()})
            base += 1
    except NotProperIntervalError:
        return None

    verdict = check_valid_proper(out, graph)
    assert verdict.ok, f"constructed an invalid extension: {verdict.failures}"
    for v, iv in ivs.items():
        assert out[v] == iv, f"pre-drawn vertex {v} moved"
    return out
