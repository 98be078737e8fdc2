"""Leftmost bounded unit representations via difference constraints.

For a fixed valid vertex order of a connected component, the set of valid
grid representations satisfying the lower bounds is exactly the solution set
of a difference-constraint system; its least solution is the leftmost
representation.  Upper bounds never enter the system: the least solution is
pointwise minimal, so it satisfies the upper bounds iff any representation
does, and a single post-hoc check decides feasibility.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .constraints import DifferenceSystem
from .graph import Graph
from .grid import NEG_INF, POS_INF, Bound, GridSpec, as_steps, is_finite, steps_per_unit


def _bound(bounds: Mapping[int, Bound] | Sequence[Bound] | None, v: int, default: float) -> Bound:
    if bounds is None:
        return default
    if isinstance(bounds, Mapping):
        return bounds.get(v, default)
    return bounds[v]


def rightmost_prior_nonneighbor(graph: Graph, order: Sequence[int]) -> list[int]:
    """``p[j]``: largest depth < j holding a non-neighbor of ``order[j]``, or -1.

    In a valid order of a connected graph the earlier neighbors of depth j
    occupy exactly the depths ``p[j]+1 .. j-1`` (a run ending at j-1, never
    empty for j >= 1); the shape is verified and violations rejected.
    """
    n = len(order)
    rank = {v: d for d, v in enumerate(order)}
    out: list[int] = []
    for j, v in enumerate(order):
        earlier = [rank[w] for w in graph.adj[v] if rank[w] < j]
        cnt = len(earlier)
        if cnt and (max(earlier) != j - 1 or min(earlier) != j - cnt):
            raise ValueError(
                f"earlier neighbors of depth {j} are not a run ending at {j - 1}"
            )
        if j > 0 and cnt == 0:
            raise ValueError(
                f"depth {j} has no earlier neighbor: order invalid or graph disconnected"
            )
        out.append(j - 1 - cnt)
    return out


def build_constraints(
    graph: Graph,
    order: Sequence[int],
    lbounds: Mapping[int, Bound] | Sequence[Bound],
    *,
    eps: GridSpec | Fraction,
    e_prev: Fraction | None = None,
    reduced: bool = True,
) -> DifferenceSystem:
    """Difference system whose least solution is the leftmost representation.

    Variables are depths (positions in ``order``); values are eps-steps.
    Constraints: consecutive depths ordered; edge pairs within one unit
    (``K`` steps); nonedge pairs separated by at least ``K + 1`` steps; the
    previous component's extent ``e_prev`` folds into depth 0's floor with a
    +1 step margin; if nothing floors the component, depth 0 is floored at 0.

    Reduced mode emits O(n) arcs via the rightmost-prior-nonneighbor
    structure; full mode emits one arc per pair.  Equal least solutions.
    """
    n = graph.n
    if len(order) != n:
        raise ValueError("order must cover the whole (component) graph")
    K, _ = steps_per_unit(eps)
    system = DifferenceSystem(n)
    for i in range(n - 1):
        system.add_constraint(i + 1, i, 0)
    if reduced:
        p = rightmost_prior_nonneighbor(graph, order)
        for j in range(1, n):
            if p[j] >= 0:
                system.add_constraint(j, p[j], K + 1)
            if p[j] + 1 != j:
                system.add_constraint(p[j] + 1, j, -K)
    else:
        for i in range(n):
            vi = order[i]
            for j in range(i + 1, n):
                if graph.has_edge(vi, order[j]):
                    system.add_constraint(i, j, -K)
                else:
                    system.add_constraint(j, i, K + 1)
    for d, v in enumerate(order):
        lb = _bound(lbounds, v, NEG_INF)
        if is_finite(lb):
            system.add_source(d, as_steps(lb, K))
    if e_prev is not None:
        system.add_source(0, as_steps(e_prev, K) + 1)
    if not system.floors:
        system.add_source(0, 0)
    return system


def solve_component_lp(
    graph: Graph,
    order: Sequence[int],
    lbounds: Mapping[int, Bound] | Sequence[Bound],
    ubounds: Mapping[int, Bound] | Sequence[Bound] | None = None,
    *,
    eps: GridSpec | Fraction,
    e_prev: Fraction | None = None,
    reduced: bool = True,
) -> tuple[dict[int, Fraction], Fraction] | None:
    """Leftmost representation of one component for one fixed order.

    Returns ``(positions, extent)`` with ``extent = last position + 1``, or
    None when the upper bounds reject the least solution (and hence every
    representation of this order).
    """
    K, _ = steps_per_unit(eps)
    system = build_constraints(
        graph, order, lbounds, eps=eps, e_prev=e_prev, reduced=reduced
    )
    vals = system.least_solution()
    if any(v is None for v in vals):
        raise AssertionError("component variable unreachable from its floors")
    for d, v in enumerate(order):
        ub = _bound(ubounds, v, POS_INF)
        if is_finite(ub) and vals[d] > as_steps(ub, K):
            return None
    ell = {v: Fraction(vals[d], K) for d, v in enumerate(order)}
    return ell, ell[order[-1]] + 1
