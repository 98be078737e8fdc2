"""Combinatorial construction of leftmost bounded unit representations.

The engine works on a *pruned* connected component (no two vertices with
equal closed neighborhoods) whose valid order ``v_0 ◁ … ◁ v_{k-1}`` is
fixed, with per-vertex rational lower bounds (group maxima).  Positions are
kept as integer multiples of eps; on the shift grid ``eps = eps'/n^2`` one
unit is ``K = L * n^2`` steps (``L = 1/eps'``), so for instances whose bound
denominators are small the step integers stay machine sized.  Exact rational
arithmetic is confined to two event kinds, counted by ``long_events``:

* preprocessing converts each finite lower bound to the step grid once, and
* each vertex is *settled* once at the end, when its final step count is
  translated back into a global rational position.

Algorithm.  An initial valid representation comes from the staircase
heights ``c`` (least integer solution of: consecutive +1, non-neighbors at
least ``n+1`` apart, neighbors at most ``n`` apart), refined to
``P_d = c_d * n - pos_d`` slots of width ``1/n^2`` where ``pos``
topologically orders the touching pairs; a single global right-shift then
lifts everything far enough to satisfy all bounds.  From there the engine
runs a monotone descent: repeatedly drop a vertex onto the maximum of its
current supports

    lbound(d)                 (converted bound, when finite)
    z[d-1]                    (its predecessor in the order)
    z[p(d)] + K + 1           (rightmost earlier non-neighbor)
    z[b(d)] - K               (rightmost neighbor)

using a FIFO worklist seeded with every vertex; each actual drop is one
``left_shifts`` tick and re-queues the dependants of the dropped vertex.
Dropping a vertex onto its support maximum can never break a constraint in
which it appears on the larger side, so every intermediate state is a valid
representation.  Because a support cycle would need t arcs of weight K+1 and
s of weight -K with t(K+1) = sK — forcing t >= K, far beyond the component
size — there are no zero-weight support cycles, hence exactly one state in
which every vertex sits on its support maximum.  The descent can only stop
there, and that state is the leftmost representation.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .graph import Graph, PrunedGraph
from .grid import NEG_INF, Bound, GridSpec, as_steps, is_finite, steps_per_unit
from .lpsolve import rightmost_prior_nonneighbor


@dataclass
class ShiftStats:
    """Operation counters for one component solve."""

    left_shifts: int = 0
    long_events: int = 0


@dataclass(frozen=True)
class TraceEvent:
    """One engine step, in global coordinates (trace mode only)."""

    step: int
    phase: int  # 0 = setup, 1 = descent, 2 = settle
    vertex: int
    old: Fraction | None
    new: Fraction
    fixed: bool


@dataclass
class ShiftResult:
    ell: dict[int, Fraction]
    e_t: Fraction
    stats: ShiftStats
    trace: list[TraceEvent] | None = None


def staircase_heights(graph: Graph, order: Sequence[int], n_units: int) -> list[int]:
    """Least integer heights ``c``: consecutive vertices differ by at least
    1, a non-adjacent pair by at least ``n_units + 1``, an adjacent pair by
    at most ``n_units``.

    Solved by plain relaxation sweeps (small ints, self-contained).
    """
    k = len(order)
    p = rightmost_prior_nonneighbor(graph, order)
    c = [0] * k
    for _ in range(k + 3):
        changed = False
        for j in range(1, k):
            lo = c[j - 1] + 1
            if p[j] >= 0:
                lo = max(lo, c[p[j]] + n_units + 1)
            if lo > c[j]:
                c[j] = lo
                changed = True
            back = c[j] - n_units
            tgt = p[j] + 1
            if tgt != j and back > c[tgt]:
                c[tgt] = back
                changed = True
        if not changed:
            return c
    raise AssertionError("staircase heights failed to stabilize")


def initial_representation(graph: Graph, order: Sequence[int], n_units: int) -> list[int]:
    """Initial slot positions (one int per depth), valid and order-realizing.

    ``P_d = c_d * n - pos_d`` in slots of width ``1/n^2``, where ``pos``
    topologically orders the touching pairs (edges with ``c_j - c_i = n``):
    exactly those pairs sit one full unit apart, and lowering later touching
    vertices slightly more keeps each such pair strictly within a unit.
    """
    k = len(order)
    n = n_units
    c = staircase_heights(graph, order, n)
    p = rightmost_prior_nonneighbor(graph, order)
    touch: list[list[int]] = [[] for _ in range(k)]
    indeg = [0] * k
    for j in range(1, k):
        for i in range(p[j] + 1, j):
            if c[j] - c[i] == n:
                touch[i].append(j)
                indeg[j] += 1
    ready = [(c[d], d) for d in range(k) if indeg[d] == 0]
    heapq.heapify(ready)
    pos = [0] * k
    seen = 0
    while ready:
        _, d = heapq.heappop(ready)
        pos[d] = seen
        seen += 1
        for t in touch[d]:
            indeg[t] -= 1
            if indeg[t] == 0:
                heapq.heappush(ready, (c[t], t))
    if seen != k:
        raise AssertionError("touching pairs formed a cycle")
    return [c[d] * n - pos[d] for d in range(k)]


def _rightmost_neighbor(graph: Graph, order: Sequence[int]) -> list[int]:
    """Per depth, the largest depth holding a neighbor (may be smaller)."""
    rank = {v: d for d, v in enumerate(order)}
    out = []
    for v in order:
        if not graph.adj[v]:
            out.append(-1)
        else:
            out.append(max(rank[w] for w in graph.adj[v]))
    return out


def solve_component_shift(
    graph: Graph,
    order: Sequence[int],
    lbounds: Mapping[int, Bound] | Sequence[Bound],
    *,
    eps: GridSpec,
    e_prev: Fraction | None = None,
    trace: list[TraceEvent] | None = None,
    paranoid: bool = False,
) -> ShiftResult:
    """Leftmost representation of a pruned component for one fixed order.

    ``eps`` must be a shift-mode grid of the whole graph (``K = L * n^2``).
    Upper bounds are not consulted here; callers check them on the expanded
    representation.  ``trace`` (when given) collects per-step events; the
    rational conversions it performs are presentation only and are not
    counted as long events.  ``paranoid`` re-validates the full geometry
    after every single drop (tests only; quadratic per step).
    """
    if eps.mode != "shift":
        raise ValueError("the shifting engine requires a shift-mode grid")
    n = eps.n
    L = eps.L
    K = eps.K
    assert K == L * n * n
    k = graph.n
    if len(order) != k or k == 0:
        raise ValueError("order must cover the component")
    if k > n:
        raise ValueError("component larger than the grid's graph")
    stats = ShiftStats()

    def lb_of(v: int) -> Bound:
        if isinstance(lbounds, Mapping):
            return lbounds.get(v, NEG_INF)
        return lbounds[v]

    # -- fold the chain constraint, anchor if nothing is bounded -----------
    lb_frac: list[Bound] = [lb_of(v) for v in order]
    if e_prev is not None:
        chained = e_prev + eps.eps
        lb_frac[0] = chained if not is_finite(lb_frac[0]) else max(lb_frac[0], chained)
    if not any(is_finite(b) for b in lb_frac):
        lb_frac[0] = Fraction(0)

    if k == 1:
        value = Fraction(lb_frac[0])
        stats.long_events += 2  # conversion + settling, degenerate component
        if trace is not None:
            trace.append(TraceEvent(0, 2, order[0], None, value, True))
        return ShiftResult({order[0]: value}, value + 1, stats, trace)

    # -- preprocessing: grid conversion, clamp, translation ----------------
    # Translating by c_units whole units keeps the arithmetic near zero
    # without changing the geometry; clamping a bound more than n + 1 units
    # below the largest one is harmless because within one component no
    # vertex can end up that far below the topmost lower bound.
    lbe: list[int | None] = [None] * k  # translated bounds, eps-steps
    alphas = []
    raw: list[int | None] = [None] * k
    for d in range(k):
        if is_finite(lb_frac[d]):
            raw[d] = as_steps(lb_frac[d], K)
            alphas.append(raw[d] // K)
    c_units = max(alphas) - (n + 1)
    for d in range(k):
        if raw[d] is not None:
            au, bs = divmod(raw[d], K)
            lbe[d] = max(au - c_units, 0) * K + bs
            stats.long_events += 1

    # -- initial representation + global right shift, in eps-steps ---------
    slots = initial_representation(graph, order, n)
    z = [s * L for s in slots]
    deficit = 0
    for d in range(k):
        if lbe[d] is not None:
            deficit = max(deficit, lbe[d] - z[d])
    if deficit > 0:
        z = [x + deficit for x in z]

    p_left = rightmost_prior_nonneighbor(graph, order)
    v_right = _rightmost_neighbor(graph, order)

    # reverse dependencies: whose support maximum may drop when d drops
    dep_sets: list[set[int]] = [set() for _ in range(k)]
    for d in range(k - 1):
        dep_sets[d].add(d + 1)
    for j in range(k):
        if p_left[j] >= 0:
            dep_sets[p_left[j]].add(j)
        if v_right[j] >= 0:
            dep_sets[v_right[j]].add(j)
    deps = [sorted(s) for s in dep_sets]

    rank = {v: d for d, v in enumerate(order)}
    adj_depth = [{rank[w] for w in graph.adj[v]} for v in order]

    def validate_state() -> None:
        for d in range(k - 1):
            assert z[d] <= z[d + 1], "order lost"
        for i in range(k):
            if lbe[i] is not None:
                assert z[i] >= lbe[i], "bound violated"
            for j in range(i + 1, k):
                if j in adj_depth[i]:
                    assert z[j] - z[i] <= K, "edge stretched"
                else:
                    assert z[j] - z[i] >= K + 1, "nonedge too close"

    if paranoid:
        validate_state()

    def restore(steps: int) -> Fraction:
        return Fraction(steps + c_units * K, K)

    step_counter = 0
    if trace is not None:
        for d in range(k):
            trace.append(
                TraceEvent(step_counter, 0, order[d], None, restore(z[d]), False)
            )
            step_counter += 1

    # -- monotone descent to the unique everyone-blocked state -------------
    # Termination: every drop lowers an integer bounded below, and the only
    # quiescent state is the leftmost representation.  The guard exists to
    # turn a hypothetical implementation bug into a clean failure instead of
    # a hang; it is far above any descent the test suite exercises.
    work = deque(range(k))
    queued = [True] * k
    guard = 50_000_000 + 1000 * k * k
    pops = 0
    dropped = 0
    K1 = K + 1
    while work:
        pops += 1
        if pops > guard:
            raise RuntimeError("leftward descent failed to converge (internal error)")
        d = work.popleft()
        queued[d] = False
        s = lbe[d]
        if d > 0 and (s is None or z[d - 1] > s):
            s = z[d - 1]
        a = p_left[d]
        if a >= 0:
            t = z[a] + K1
            if s is None or t > s:
                s = t
        b = v_right[d]
        if b >= 0:
            t = z[b] - K
            if s is None or t > s:
                s = t
        assert s is not None and s <= z[d], "support above current position"
        if s < z[d]:
            old = z[d]
            z[d] = s
            dropped += 1
            if trace is not None:
                trace.append(TraceEvent(step_counter, 1, order[d], restore(old), restore(s), False))
            step_counter += 1
            for t in deps[d]:
                if not queued[t]:
                    queued[t] = True
                    work.append(t)
            if paranoid:
                validate_state()
    stats.left_shifts = dropped

    # -- settle: one exact conversion per vertex ---------------------------
    ell: dict[int, Fraction] = {}
    for d in range(k):
        value = restore(z[d])
        ell[order[d]] = value
        stats.long_events += 1
        if trace is not None:
            trace.append(TraceEvent(step_counter, 2, order[d], None, value, True))
            step_counter += 1
    return ShiftResult(ell, ell[order[-1]] + 1, stats, trace)


# ---------------------------------------------------------------------------
# expansion of pruned solutions to all group members
# ---------------------------------------------------------------------------


def expand_pruned(
    pruned_ell: Mapping[int, Fraction],
    pruned: PrunedGraph,
    pruned_order: Sequence[int],
    lbounds: Mapping[int, Bound] | Sequence[Bound],
    eps: GridSpec | Fraction,
) -> dict[int, Fraction]:
    """Expand a leftmost pruned representation to the full component.

    Each member v of the group behind pruned vertex g is placed at

        max(lbound(v), ell[g_left] + 1 + eps, ell[g_right] - 1)

    where g_left is the rightmost earlier non-adjacent group and g_right the
    rightmost group adjacent to v (including g itself when the group has
    other members).  Members are emitted in ascending-bound order, so the
    expansion is monotone inside the group; every member lands within
    [ell[g] - 1, ell[g]] and the group representative reproduces exactly its
    pruned position.
    """
    _, eps_frac = steps_per_unit(eps)

    def lb_of(v: int) -> Bound:
        if isinstance(lbounds, Mapping):
            return lbounds.get(v, NEG_INF)
        return lbounds[v]

    g = pruned.graph
    p_left = rightmost_prior_nonneighbor(g, pruned_order)
    v_right = _rightmost_neighbor(g, pruned_order)
    out: dict[int, Fraction] = {}
    for d, pv in enumerate(pruned_order):
        base = Fraction(pruned_ell[pv])
        members = sorted(pruned.back_map[pv], key=lambda v: (lb_of(v), v))
        left_term: Fraction | None = None
        if p_left[d] >= 0:
            left_term = Fraction(pruned_ell[pruned_order[p_left[d]]]) + 1 + eps_frac
        right_value: Fraction | None = None
        if v_right[d] >= 0:
            right_value = Fraction(pruned_ell[pruned_order[v_right[d]]])
        if len(members) >= 2:
            right_value = base if right_value is None else max(right_value, base)
        prev: Fraction | None = None
        for v in members:
            terms: list[Fraction] = []
            lb = lb_of(v)
            if is_finite(lb):
                terms.append(Fraction(lb))
            if left_term is not None:
                terms.append(left_term)
            if right_value is not None:
                terms.append(right_value - 1)
            value = max(terms) if terms else base
            if v == pruned.rep_of[pv]:
                assert not terms or value == base, (
                    "expansion does not reproduce the representative position"
                )
                value = base
            assert base - 1 <= value <= base, "expansion left the unit sandwich"
            assert prev is None or prev <= value, "expansion broke in-group order"
            prev = value
            out[v] = value
    return out


# ---------------------------------------------------------------------------
# obstruction links
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ObstructionLinks:
    """Which constraint blocks each vertex from a small left shift.

    ``left[v]`` names the rightmost prior non-neighbor touching v across the
    required gap (ell[u] + 1 + eps = ell[v]); ``right[v]`` names the
    rightmost neighbor whose unit interval v's interval touches on the right
    (ell[v] + 1 = ell[u]).
    """

    left: dict[int, int]
    right: dict[int, int]

    def arcs(self) -> list[tuple[int, int]]:
        out = [(v, u) for v, u in self.left.items()]
        out += [(v, u) for v, u in self.right.items()]
        return sorted(set(out))

    def successors(self, v: int) -> list[int]:
        out = []
        if v in self.left:
            out.append(self.left[v])
        if v in self.right:
            out.append(self.right[v])
        return out

    def has_cycle(self) -> bool:
        color: dict[int, int] = {}
        nodes = set(self.left) | set(self.right)
        nodes |= set(self.left.values()) | set(self.right.values())

        def dfs(x: int) -> bool:
            color[x] = 1
            for y in self.successors(x):
                st = color.get(y, 0)
                if st == 1:
                    return True
                if st == 0 and dfs(y):
                    return True
            color[x] = 2
            return False

        return any(color.get(x, 0) == 0 and dfs(x) for x in nodes)

    def is_fixed(
        self,
        v: int,
        ell: Mapping[int, Fraction],
        lbounds: Mapping[int, Bound] | Sequence[Bound],
    ) -> bool:
        """Vertex cannot move: some link path ends at a bound-tight vertex."""

        def lb_of(u: int) -> Bound:
            if isinstance(lbounds, Mapping):
                return lbounds.get(u, NEG_INF)
            return lbounds[u]

        seen = set()
        stack = [v]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            lb = lb_of(x)
            if is_finite(lb) and ell[x] == lb:
                return True
            stack.extend(self.successors(x))
        return False


def obstruction_digraph(
    ell: Mapping[int, Fraction],
    graph: Graph,
    order: Sequence[int],
    eps: GridSpec | Fraction,
) -> ObstructionLinks:
    """Touching constraints of a representation realizing ``order``."""
    _, eps_frac = steps_per_unit(eps)
    p_left = rightmost_prior_nonneighbor(graph, order)
    v_right = _rightmost_neighbor(graph, order)
    left: dict[int, int] = {}
    right: dict[int, int] = {}
    for d, v in enumerate(order):
        if p_left[d] >= 0:
            u = order[p_left[d]]
            if Fraction(ell[u]) + 1 + eps_frac == Fraction(ell[v]):
                left[v] = u
        if v_right[d] >= 0:
            u = order[v_right[d]]
            if Fraction(ell[v]) + 1 == Fraction(ell[u]):
                right[v] = u
    return ObstructionLinks(left=left, right=right)
