"""Higher-level pipelines on top of the bounded-representation solver.

``repext_unit`` extends a partial *unit*-interval representation: some
vertices are pre-drawn as unit intervals [l, l+1] and the rest must be
placed without moving them.  Pre-drawn positions become equal lower and
upper bounds, components containing pre-drawn vertices are laid out in the
forced left-to-right order of their pre-drawn spans, unconstrained
components are appended to the right, and the whole chain is handed to the
bounded-representation solver.  The solver's leftmost placements shift
every component as far left as possible, so a failure anywhere proves
inextendibility for the forced order — and the order itself is forced
because each component occupies one contiguous stretch of the line.

``solve_boundrep`` searches over component orders when none is prescribed:
depth-first in lexicographic order with memoization on the multiset of
used component signatures.  Feasibility from a given frontier extent is
antitone in that extent, so each failed multiset stores the smallest extent
it failed from and prunes any revisit at or above it.  Interchangeable
components (equal signatures) are tried only once per level.  The first
order found is the lexicographically smallest feasible one.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .graph import Graph
from .grid import GridSpec, compute_epsilon
from .oracle import check_valid
from .properext import InvalidPartialError
from .solver import (
    BoundRepInstance,
    SolveResult,
    SolveStats,
    prepare_components,
    solve_boundrep_prescribed,
    solve_component_best,
)


def repext_unit(
    graph: Graph,
    located: Mapping[int, Fraction],
    *,
    mode: str = "shift",
    eps: GridSpec | None = None,
) -> dict[int, Fraction] | None:
    """Extend a partial unit-interval representation, or decide none exists.

    ``located`` maps pre-drawn vertices to the left endpoints of their unit
    intervals.  Returns left endpoints for all vertices (pre-drawn ones
    unchanged) or None.  Raises :class:`InvalidPartialError` when the
    pre-drawn intervals alone already misrepresent their induced subgraph.
    """
    pins = {v: Fraction(x) for v, x in located.items()}
    for v in pins:
        if not 0 <= v < graph.n:
            raise InvalidPartialError(f"pre-drawn vertex {v} is not in the graph")
    vs = sorted(pins)
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            d = abs(pins[u] - pins[v])
            if graph.has_edge(u, v):
                if d > 1:
                    raise InvalidPartialError(
                        f"edge ({u},{v}) pre-drawn {d} > 1 apart"
                    )
            elif d <= 1:
                raise InvalidPartialError(
                    f"nonedge ({u},{v}) pre-drawn only {d} apart"
                )

    instance = BoundRepInstance(
        graph=graph,
        lbounds=dict(pins),
        ubounds=dict(pins),
    )
    contexts = prepare_components(instance)
    with_pins = [
        (min(pins[v] for v in ctx.vertices if v in pins), ctx.index)
        for ctx in contexts
        if any(v in pins for v in ctx.vertices)
    ]
    with_pins.sort()
    order = [ci for _, ci in with_pins]
    pinned_cis = set(order)
    order += [ctx.index for ctx in contexts if ctx.index not in pinned_cis]

    result = solve_boundrep_prescribed(
        instance, order, mode=mode, eps=eps, contexts=contexts
    )
    if not result.feasible:
        return None
    ell = result.ell
    assert ell is not None
    verdict = check_valid(ell, graph, eps=result.eps)
    assert verdict.ok, f"extension is invalid: {verdict.failures}"
    for v, x in pins.items():
        assert ell[v] == x, f"pre-drawn vertex {v} moved"
    return ell


def solve_boundrep(
    instance: BoundRepInstance,
    *,
    mode: str = "shift",
    eps: GridSpec | None = None,
    reduced: bool = True,
) -> SolveResult:
    """Bounded representation without a prescribed component order.

    Searches the component orders depth-first (lexicographically smallest
    first) and returns the solve for the first feasible order, infeasible
    otherwise.  Equal components — same local edges and bounds — are
    interchangeable: only the first of each kind is tried per level, and a
    multiset of used kinds that failed from some frontier extent is never
    retried at an equal or larger extent.
    """
    contexts = prepare_components(instance)
    if eps is None:
        eps = compute_epsilon(instance.all_bounds(), instance.graph.n, mode)
    k = len(contexts)
    sig_ids: list[int] = []
    interned: dict[tuple, int] = {}
    for ctx in contexts:
        sig_ids.append(interned.setdefault(ctx.signature(), len(interned)))

    failed: dict[tuple[int, ...], Fraction | float] = {}

    def dfs(used: int, e_prev: Fraction | None) -> list[int] | None:
        if used == (1 << k) - 1:
            return []
        key = tuple(sorted(sig_ids[ci] for ci in range(k) if used >> ci & 1))
        cur = e_prev if e_prev is not None else float("-inf")
        bar = failed.get(key)
        if bar is not None and cur >= bar:
            return None
        tried: set[int] = set()
        for ci in range(k):
            if used >> ci & 1 or sig_ids[ci] in tried:
                continue
            tried.add(sig_ids[ci])
            sol = solve_component_best(
                contexts[ci], mode=mode, eps=eps, e_prev=e_prev, reduced=reduced
            )
            if sol is None:
                continue
            rest = dfs(used | 1 << ci, sol.extent)
            if rest is not None:
                return [ci, *rest]
        old = failed.get(key)
        failed[key] = cur if old is None else min(old, cur)
        return None

    order = dfs(0, None)
    if order is None:
        return SolveResult(
            feasible=False,
            ell=None,
            extent=None,
            eps=eps,
            mode=mode,
            stats=SolveStats(components=k),
            comp_order=None,
        )
    return solve_boundrep_prescribed(
        instance, order, mode=mode, eps=eps, reduced=reduced, contexts=contexts
    )
