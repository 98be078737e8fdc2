"""Driver for leftmost bounded unit representations of whole instances.

An instance is a proper interval graph with per-vertex rational lower/upper
bounds on the left endpoints and a prescribed left-to-right order of its
connected components.  Per component the driver tries both directions of the
(unique up to reversal) group ordering, solves each direction for the
leftmost representation honoring the lower bounds only, checks the upper
bounds on the result (if the leftmost violates them, every representation of
that direction does), and keeps the direction with the smaller extent, ties
to forward.  The chosen extent feeds the next component as a strict floor.
Minimizing each extent greedily minimizes every later extent as well, so
a failure here means no representation with this component order exists.

Two interchangeable engines compute the leftmost representation of a
directed component: ``lp`` builds a difference-constraint system and takes
its least solution, ``shift`` runs the combinatorial descent on the pruned
component and expands the groups afterwards.  Both produce identical exact
rationals on the same grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Sequence

from .graph import (
    Graph,
    GroupPartition,
    PrunedGraph,
    connected_components,
    indistinguishable_groups,
    prune,
)
from .grid import NEG_INF, POS_INF, Bound, GridSpec, compute_epsilon, is_finite
from .lpsolve import solve_component_lp
from .ordering import (
    NotProperIntervalError,
    ProperOrdering,
    compute_proper_ordering,
    order_with_bounds,
)
from .shifting import TraceEvent, expand_pruned, solve_component_shift

MODES = ("lp", "shift")


@dataclass(frozen=True)
class BoundRepInstance:
    """A graph plus left-endpoint bounds and an optional component order.

    ``comp_order`` lists component indices (components sorted by smallest
    vertex) left to right; None means unspecified.
    """

    graph: Graph
    lbounds: dict[int, Bound] = field(default_factory=dict)
    ubounds: dict[int, Bound] = field(default_factory=dict)
    comp_order: tuple[int, ...] | None = None

    def all_bounds(self) -> list[Bound]:
        return list(self.lbounds.values()) + list(self.ubounds.values())

    def lb(self, v: int) -> Bound:
        return self.lbounds.get(v, NEG_INF)

    def ub(self, v: int) -> Bound:
        return self.ubounds.get(v, POS_INF)


@dataclass
class SolveStats:
    left_shifts: int = 0
    long_events: int = 0
    components: int = 0


@dataclass
class SolveResult:
    feasible: bool
    ell: dict[int, Fraction] | None
    extent: Fraction | None
    eps: GridSpec
    mode: str
    stats: SolveStats
    comp_order: tuple[int, ...] | None = None
    directions: tuple[str, ...] = ()
    failed_component: int | None = None
    trace: list[TraceEvent] | None = None


@dataclass(frozen=True)
class ComponentContext:
    """Everything reusable about one connected component."""

    index: int
    vertices: tuple[int, ...]  # global ids, ascending
    graph: Graph  # local ids = positions in ``vertices``
    lbounds: dict[int, Bound]
    ubounds: dict[int, Bound]
    groups: GroupPartition
    ordering: ProperOrdering
    pruned: PrunedGraph

    def signature(self) -> tuple:
        """Exact structural identity: equal-signature components are
        interchangeable in a component order."""
        bounds = tuple(
            (self.lbounds.get(v, NEG_INF), self.ubounds.get(v, POS_INF))
            for v in range(self.graph.n)
        )
        return (self.graph.n, tuple(self.graph.edges), bounds)


@dataclass
class ComponentSolve:
    ell: dict[int, Fraction]  # local ids
    extent: Fraction
    direction: str
    left_shifts: int = 0
    long_events: int = 0
    trace: list[TraceEvent] | None = None


def prepare_components(instance: BoundRepInstance) -> list[ComponentContext]:
    """Split, order-certify, and prune every component once.

    Raises :class:`NotProperIntervalError` (with a witness in global ids)
    when the graph is not a proper interval graph.
    """
    out: list[ComponentContext] = []
    for index, comp in enumerate(connected_components(instance.graph)):
        local = instance.graph.induced(comp)
        lbs = {
            i: instance.lbounds[v] for i, v in enumerate(comp) if v in instance.lbounds
        }
        ubs = {
            i: instance.ubounds[v] for i, v in enumerate(comp) if v in instance.ubounds
        }
        groups = indistinguishable_groups(local)
        try:
            ordering = compute_proper_ordering(local, groups)
        except NotProperIntervalError as exc:
            raise NotProperIntervalError(comp[exc.witness]) from None
        pruned = prune(local, lbs, groups)
        out.append(
            ComponentContext(
                index=index,
                vertices=tuple(comp),
                graph=local,
                lbounds=lbs,
                ubounds=ubs,
                groups=groups,
                ordering=ordering,
                pruned=pruned,
            )
        )
    return out


def _ub_ok(ell: Mapping[int, Fraction], ubounds: Mapping[int, Bound]) -> bool:
    for v, ub in ubounds.items():
        if is_finite(ub) and ell[v] > ub:
            return False
    return True


def solve_component_best(
    ctx: ComponentContext,
    *,
    mode: str,
    eps: GridSpec,
    e_prev: Fraction | None = None,
    reduced: bool = True,
    paranoid: bool = False,
    want_trace: bool = False,
) -> ComponentSolve | None:
    """Solve one component: both directions, upper bounds, smaller extent.

    Upper bounds are checked per direction before choosing, so a direction
    with the smaller extent never masks the other's feasibility.  Returns
    None when neither direction admits a representation.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    # The chain floor (or, for an unconstrained component, the anchor at 0)
    # binds the first vertex of the order; order constraints then hold every
    # vertex of the component above it.  Expansion recomputes member
    # positions from their direct floors, so it needs that floor folded into
    # every vertex explicitly.
    floor: Fraction | None = None
    if e_prev is not None:
        floor = e_prev + eps.eps
    elif not any(is_finite(b) for b in ctx.lbounds.values()):
        floor = Fraction(0)
    exp_lbounds: Mapping[int, Bound] = ctx.lbounds
    if floor is not None:
        exp_lbounds = {
            v: max(ctx.lbounds[v], floor)
            if v in ctx.lbounds and is_finite(ctx.lbounds[v])
            else floor
            for v in range(ctx.graph.n)
        }
    best: ComponentSolve | None = None
    for ordering in (ctx.ordering, ctx.ordering.reversed()):
        shifts = 0
        events = 0
        trace: list[TraceEvent] | None = None
        if mode == "lp":
            vorder = order_with_bounds(ordering, ctx.lbounds)
            solved = solve_component_lp(
                ctx.graph,
                vorder,
                ctx.lbounds,
                ctx.ubounds,
                eps=eps,
                e_prev=e_prev,
                reduced=reduced,
            )
            if solved is None:
                continue
            ell, extent = solved
        else:
            porder = list(ordering.sequence)
            raw_trace: list[TraceEvent] | None = [] if want_trace else None
            res = solve_component_shift(
                ctx.pruned.graph,
                porder,
                ctx.pruned.lbound,
                eps=eps,
                e_prev=e_prev,
                trace=raw_trace,
                paranoid=paranoid,
            )
            ell = expand_pruned(res.ell, ctx.pruned, porder, exp_lbounds, eps)
            extent = res.e_t
            shifts = res.stats.left_shifts
            events = res.stats.long_events
            if raw_trace is not None:
                trace = [
                    replace(ev, vertex=ctx.pruned.rep_of[ev.vertex])
                    for ev in raw_trace
                ]
            if not _ub_ok(ell, ctx.ubounds):
                continue
        cand = ComponentSolve(
            ell=ell,
            extent=extent,
            direction=ordering.direction,
            left_shifts=shifts,
            long_events=events,
            trace=trace,
        )
        if best is None or cand.extent < best.extent:
            best = cand
    return best


def solve_boundrep_prescribed(
    instance: BoundRepInstance,
    comp_order: Sequence[int] | None = None,
    *,
    mode: str = "shift",
    eps: GridSpec | None = None,
    reduced: bool = True,
    paranoid: bool = False,
    want_trace: bool = False,
    contexts: list[ComponentContext] | None = None,
) -> SolveResult:
    """Decide and construct for a fixed left-to-right component order.

    ``comp_order`` defaults to the instance's own, or to the only component.
    Raises ValueError when the order is missing/invalid for a disconnected
    graph, and :class:`NotProperIntervalError` when the graph is not a
    proper interval graph.
    """
    if contexts is None:
        contexts = prepare_components(instance)
    if eps is None:
        eps = compute_epsilon(instance.all_bounds(), instance.graph.n, mode)
    if comp_order is None:
        comp_order = instance.comp_order
    if comp_order is None:
        if len(contexts) != 1:
            raise ValueError("a component order is required for disconnected graphs")
        comp_order = (0,)
    comp_order = tuple(comp_order)
    if sorted(comp_order) != list(range(len(contexts))):
        raise ValueError("component order must be a permutation of the components")
    stats = SolveStats(components=len(contexts))

    for v, lb in instance.lbounds.items():
        ub = instance.ubounds.get(v, POS_INF)
        if is_finite(lb) and is_finite(ub) and lb > ub:
            return SolveResult(
                feasible=False,
                ell=None,
                extent=None,
                eps=eps,
                mode=mode,
                stats=stats,
                comp_order=comp_order,
                failed_component=None,
            )

    ell: dict[int, Fraction] = {}
    directions: list[str] = []
    trace: list[TraceEvent] = []
    e_prev: Fraction | None = None
    for ci in comp_order:
        ctx = contexts[ci]
        solved = solve_component_best(
            ctx,
            mode=mode,
            eps=eps,
            e_prev=e_prev,
            reduced=reduced,
            paranoid=paranoid,
            want_trace=want_trace,
        )
        stats.left_shifts += 0 if solved is None else solved.left_shifts
        stats.long_events += 0 if solved is None else solved.long_events
        if solved is None:
            return SolveResult(
                feasible=False,
                ell=None,
                extent=None,
                eps=eps,
                mode=mode,
                stats=stats,
                comp_order=comp_order,
                directions=tuple(directions),
                failed_component=ci,
            )
        for i, value in solved.ell.items():
            ell[ctx.vertices[i]] = value
        if solved.trace:
            trace.extend(
                replace(ev, vertex=ctx.vertices[ev.vertex]) for ev in solved.trace
            )
        directions.append(solved.direction)
        e_prev = solved.extent
    return SolveResult(
        feasible=True,
        ell=ell,
        extent=e_prev,
        eps=eps,
        mode=mode,
        stats=stats,
        comp_order=comp_order,
        directions=tuple(directions),
        trace=trace if want_trace else None,
    )
