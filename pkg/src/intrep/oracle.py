"""Independent brute-force oracles and validity checkers.

Everything in this module is deliberately naive: all-pairs constraint checks,
band propagation by iterated tightening, ascending lexicographic search, and
exhaustive order enumeration.  It shares *no* constraint-building or solving
code with the production engines — agreement between the two is the primary
bug detector for the whole package.  (Shared inputs are limited to the graph
types and the certified group orderings, which are themselves exhaustively
tested.)

The lexicographically smallest feasible grid assignment taken in ◁ order is
also the pointwise-smallest one: valid representations of a fixed order are
closed under pointwise minimum, so the leftmost representation exists and the
ascending-first search returns exactly it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .graph import Graph, connected_components, indistinguishable_groups
from .grid import NEG_INF, POS_INF, Bound, GridSpec, is_finite
from .ordering import compute_proper_ordering, order_with_bounds


# ---------------------------------------------------------------------------
# validity checkers
# ---------------------------------------------------------------------------


@dataclass
class Verdict:
    """Outcome of a validity check; ``failures`` lists every violation found."""

    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:  # pragma: no cover - convenience
        return self.ok


def _bound(bounds: Mapping[int, Bound] | Sequence[Bound] | None, v: int, default: float) -> Bound:
    if bounds is None:
        return default
    if isinstance(bounds, Mapping):
        return bounds.get(v, default)
    return bounds[v]


def check_valid(
    ell: Mapping[int, Fraction],
    graph: Graph,
    lbounds: Mapping[int, Bound] | Sequence[Bound] | None = None,
    ubounds: Mapping[int, Bound] | Sequence[Bound] | None = None,
    order: Sequence[int] | None = None,
    eps: GridSpec | Fraction | None = None,
) -> Verdict:
    """All-pairs validity of a unit-interval representation.

    Checks, in order: coverage of all vertices; edge pairs within distance 1;
    nonedge pairs separated by more than 1 (at least ``1 + eps`` when a grid
    is given); grid membership; bounds; and realization of ``order`` (left
    endpoints non-decreasing along it).
    """
    failures: list[str] = []
    if set(ell) != set(range(graph.n)):
        failures.append("representation does not cover exactly the vertex set")
        return Verdict(False, failures)
    eps_frac: Fraction | None = None
    if eps is not None:
        eps_frac = eps.eps if isinstance(eps, GridSpec) else Fraction(eps)
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            d = abs(Fraction(ell[u]) - Fraction(ell[v]))
            if graph.has_edge(u, v):
                if d > 1:
                    failures.append(f"edge ({u},{v}) has |gap|={d} > 1")
            else:
                if eps_frac is not None:
                    if d < 1 + eps_frac:
                        failures.append(
                            f"nonedge ({u},{v}) has |gap|={d} < 1+eps={1 + eps_frac}"
                        )
                elif d <= 1:
                    failures.append(f"nonedge ({u},{v}) has |gap|={d} <= 1")
    if eps_frac is not None:
        k = 1 / eps_frac
        if k.denominator != 1:
            raise ValueError("eps must divide 1")
        for v in range(graph.n):
            if (Fraction(ell[v]) * k.numerator).denominator != 1:
                failures.append(f"vertex {v} position {ell[v]} off the eps grid")
    for v in range(graph.n):
        lb = _bound(lbounds, v, NEG_INF)
        ub = _bound(ubounds, v, POS_INF)
        if is_finite(lb) and ell[v] < lb:
            failures.append(f"vertex {v} below lower bound: {ell[v]} < {lb}")
        if is_finite(ub) and ell[v] > ub:
            failures.append(f"vertex {v} above upper bound: {ell[v]} > {ub}")
    if order is not None:
        for a, b in zip(order, list(order)[1:]):
            if ell[a] > ell[b]:
                failures.append(f"order violated: ell[{a}]={ell[a]} > ell[{b}]={ell[b]}")
    return Verdict(not failures, failures)


def check_valid_proper(
    intervals: Mapping[int, tuple[Fraction, Fraction]], graph: Graph
) -> Verdict:
    """All-pairs validity of a proper (non-unit) interval representation.

    Closed intervals must intersect exactly for edges and no interval may
    properly contain another (identical intervals are allowed — they can only
    be valid for indistinguishable vertices, which the edge checks enforce).
    """
    failures: list[str] = []
    if set(intervals) != set(range(graph.n)):
        failures.append("representation does not cover exactly the vertex set")
        return Verdict(False, failures)
    for v, (lo, hi) in intervals.items():
        if not lo < hi:
            failures.append(f"vertex {v} interval [{lo},{hi}] is not proper (l < r)")
    for u in range(graph.n):
        lu, ru = intervals[u]
        for v in range(u + 1, graph.n):
            lv, rv = intervals[v]
            meets = lv <= ru and lu <= rv
            if graph.has_edge(u, v) != meets:
                kind = "edge" if graph.has_edge(u, v) else "nonedge"
                failures.append(
                    f"{kind} ({u},{v}) vs intervals [{lu},{ru}], [{lv},{rv}]"
                )
            inside_uv = lv <= lu and ru <= rv and (lu, ru) != (lv, rv)
            inside_vu = lu <= lv and rv <= ru and (lu, ru) != (lv, rv)
            if inside_uv or inside_vu:
                failures.append(f"containment between {u} and {v}")
    return Verdict(not failures, failures)


# ---------------------------------------------------------------------------
# leftmost representation by banded lexicographic search
# ---------------------------------------------------------------------------


def _eps_of(eps: GridSpec | Fraction) -> Fraction:
    return eps.eps if isinstance(eps, GridSpec) else Fraction(eps)


def _to_steps(x: Bound, k: int) -> int:
    q = Fraction(x) * k
    if q.denominator != 1:
        raise ValueError(f"bound {x} is not on the grid (K={k})")
    return q.numerator


def brute_force_leftmost(
    graph: Graph,
    order: Sequence[int],
    lbounds: Mapping[int, Bound] | Sequence[Bound],
    ubounds: Mapping[int, Bound] | Sequence[Bound] | None = None,
    *,
    eps: GridSpec | Fraction,
) -> dict[int, Fraction] | None:
    """Pointwise-minimum valid grid representation realizing ``order``.

    ``graph`` must be connected and ``order`` a valid vertex order of it with
    at least one finite lower bound (callers fold chain constraints and
    anchors into the bounds first).  Search window: ``n + 1`` units around the
    finite lower bounds, which provably contains the leftmost representation.
    Returns None when no valid representation satisfies the bounds.
    """
    n = graph.n
    eps_frac = _eps_of(eps)
    kq = 1 / eps_frac
    if kq.denominator != 1:
        raise ValueError("eps must divide 1")
    K = kq.numerator
    lbe: list[int | None] = [None] * n
    ube: list[int | None] = [None] * n
    for d, v in enumerate(order):
        lb = _bound(lbounds, v, NEG_INF)
        ub = _bound(ubounds, v, POS_INF) if ubounds is not None else POS_INF
        if is_finite(lb):
            lbe[d] = _to_steps(lb, K)
        if is_finite(ub):
            ube[d] = _to_steps(ub, K)
    finite = [x for x in lbe if x is not None]
    if not finite:
        raise ValueError("at least one finite lower bound required")
    wlo = min(finite) - (n + 1) * K
    whi = max(finite) + (n + 1) * K
    lo = [wlo if lbe[d] is None else max(lbe[d], wlo) for d in range(n)]
    hi = [whi if ube[d] is None else min(ube[d], whi) for d in range(n)]
    adjd = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                adjd[i][j] = graph.has_edge(order[i], order[j])

    # iterated tightening of the bands to a fixpoint (naive Bellman)
    for _ in range(2 * n + 4):
        changed = False
        for i in range(n - 1):
            if lo[i + 1] < lo[i]:
                lo[i + 1] = lo[i]
                changed = True
            if hi[i] > hi[i + 1]:
                hi[i] = hi[i + 1]
                changed = True
        for i in range(n):
            for j in range(i + 1, n):
                if adjd[i][j]:
                    if lo[i] < lo[j] - K:
                        lo[i] = lo[j] - K
                        changed = True
                    if hi[j] > hi[i] + K:
                        hi[j] = hi[i] + K
                        changed = True
                else:
                    if lo[j] < lo[i] + K + 1:
                        lo[j] = lo[i] + K + 1
                        changed = True
                    if hi[i] > hi[j] - K - 1:
                        hi[i] = hi[j] - K - 1
                        changed = True
        if not changed:
            break
    else:
        raise AssertionError("band tightening did not stabilize on a valid order")
    if any(lo[d] > hi[d] for d in range(n)):
        return None

    pos = [0] * n

    def extend(d: int, blo: list[int], bhi: list[int]) -> bool:
        if d == n:
            return True
        start = blo[d] if d == 0 else max(blo[d], pos[d - 1])
        for x in range(start, bhi[d] + 1):
            ok = True
            for j in range(d):
                gap = x - pos[j]
                if adjd[j][d]:
                    if gap > K:
                        ok = False
                        break
                elif gap < K + 1:
                    ok = False
                    break
            if not ok:
                continue
            nlo, nhi = list(blo), list(bhi)
            viable = True
            for f in range(d + 1, n):
                l2 = max(nlo[f], x)
                h2 = nhi[f]
                if adjd[d][f]:
                    h2 = min(h2, x + K)
                else:
                    l2 = max(l2, x + K + 1)
                if l2 > h2:
                    viable = False
                    break
                nlo[f], nhi[f] = l2, h2
            if not viable:
                continue
            pos[d] = x
            if extend(d + 1, nlo, nhi):
                return True
        return False

    if not extend(0, lo, hi):
        return None
    return {order[d]: Fraction(pos[d], K) for d in range(n)}


# ---------------------------------------------------------------------------
# oracle driver mirroring the prescribed-order solving contract
# ---------------------------------------------------------------------------


def oracle_boundrep(
    graph: Graph,
    lbounds: Mapping[int, Bound] | Sequence[Bound],
    ubounds: Mapping[int, Bound] | Sequence[Bound] | None = None,
    comp_order: Sequence[int] | None = None,
    *,
    eps: GridSpec | Fraction,
) -> dict[int, Fraction] | None:
    """Solve a prescribed-component-order instance by brute force.

    Contract per component, mirroring the production drivers but computed
    independently: try both directions of the certified group ordering with
    in-group members sorted by ascending lower bound, take each direction's
    leftmost representation (bounds enforced inside the search), keep the
    feasible direction with the smaller rightmost extent, ties to forward.
    """
    eps_frac = _eps_of(eps)
    comps = connected_components(graph)
    if comp_order is None:
        if len(comps) != 1:
            raise ValueError("comp_order required for disconnected graphs")
        comp_order = [0]
    if sorted(comp_order) != list(range(len(comps))):
        raise ValueError("comp_order must be a permutation of the components")

    for v in range(graph.n):
        lb, ub = _bound(lbounds, v, NEG_INF), _bound(ubounds, v, POS_INF)
        if is_finite(lb) and is_finite(ub) and lb > ub:
            return None

    result: dict[int, Fraction] = {}
    e_prev: Fraction | None = None
    for ci in comp_order:
        vertices = comps[ci]
        local = graph.induced(vertices)
        ordering = compute_proper_ordering(local)
        local_lb = {
            i: _bound(lbounds, v, NEG_INF) for i, v in enumerate(vertices)
        }
        local_ub = {
            i: _bound(ubounds, v, POS_INF) for i, v in enumerate(vertices)
        }
        best: tuple[Fraction, dict[int, Fraction]] | None = None
        for cand in (ordering, ordering.reversed()):
            seq = order_with_bounds(cand, local_lb)
            lbs = dict(local_lb)
            first = seq[0]
            if e_prev is not None:
                chained = e_prev + eps_frac
                cur = lbs.get(first, NEG_INF)
                lbs[first] = chained if not is_finite(cur) else max(cur, chained)
            if not any(is_finite(b) for b in lbs.values()):
                lbs[first] = Fraction(0)
            rep = brute_force_leftmost(local, seq, lbs, local_ub, eps=eps_frac)
            if rep is None:
                continue
            e_t = rep[seq[-1]] + 1
            if best is None or e_t < best[0]:
                best = (e_t, rep)
        if best is None:
            return None
        e_prev = best[0]
        for i, v in enumerate(vertices):
            result[v] = best[1][i]
    return result


# ---------------------------------------------------------------------------
# representation poset utilities
# ---------------------------------------------------------------------------


def infimum(*reps: Mapping[int, Fraction]) -> dict[int, Fraction]:
    """Pointwise minimum of representations over the same vertex set."""
    if not reps:
        raise ValueError("need at least one representation")
    keys = set(reps[0])
    for r in reps[1:]:
        if set(r) != keys:
            raise ValueError("representations cover different vertex sets")
    return {v: min(Fraction(r[v]) for r in reps) for v in keys}


@dataclass
class PosetReport:
    """Results of the sampled order-theoretic checks around a leftmost rep."""

    feasible: bool
    leftmost: dict[int, Fraction] | None
    minimum_is_sink: bool
    chains_terminate_at_minimum: bool
    chain_steps: int
    visited: list[dict[int, Fraction]]


def poset_properties(
    graph: Graph,
    order: Sequence[int],
    lbounds: Mapping[int, Bound] | Sequence[Bound],
    ubounds: Mapping[int, Bound] | Sequence[Bound] | None = None,
    *,
    eps: GridSpec | Fraction,
    rng: random.Random | None = None,
    n_samples: int = 4,
    n_perturbations: int = 10,
) -> PosetReport:
    """Sampled checks that the leftmost representation is the poset minimum.

    Starting points are random valid upward perturbations of the leftmost
    representation; from each, single-vertex eps-left-shifts (always the
    smallest shiftable ◁-index) are applied until none applies.  Every chain
    must terminate exactly at the leftmost representation, and the leftmost
    itself must admit no shift.
    """
    rng = rng or random.Random(0)
    eps_frac = _eps_of(eps)
    leftmost = brute_force_leftmost(graph, order, lbounds, ubounds, eps=eps_frac)
    if leftmost is None:
        return PosetReport(False, None, True, True, 0, [])

    def valid(rep: Mapping[int, Fraction]) -> bool:
        return check_valid(rep, graph, lbounds, ubounds, order, eps_frac).ok

    assert valid(leftmost), "oracle produced an invalid leftmost representation"
    sink_ok = True
    for v in order:
        down = dict(leftmost)
        down[v] = down[v] - eps_frac
        if valid(down):
            sink_ok = False

    visited: list[dict[int, Fraction]] = [dict(leftmost)]
    chains_ok = True
    total_steps = 0
    for _ in range(n_samples):
        rep = dict(leftmost)
        for _ in range(n_perturbations):
            v = rng.choice(list(order))
            up = dict(rep)
            up[v] = up[v] + eps_frac * rng.randint(1, 3)
            if valid(up):
                rep = up
        visited.append(dict(rep))
        budget = sum(int((rep[v] - leftmost[v]) / eps_frac) for v in order) + 1
        for _ in range(budget):
            moved = False
            for v in order:
                down = dict(rep)
                down[v] = down[v] - eps_frac
                if valid(down):
                    rep = down
                    visited.append(dict(rep))
                    total_steps += 1
                    moved = True
                    break
            if not moved:
                break
        else:
            chains_ok = False  # did not stall within the descent budget
        if rep != leftmost:
            chains_ok = False
    return PosetReport(True, leftmost, sink_ok, chains_ok, total_steps, visited)


# ---------------------------------------------------------------------------
# exhaustive proper-interval order enumeration (small n)
# ---------------------------------------------------------------------------


def enumerate_valid_orders(graph: Graph) -> list[list[int]]:
    """All vertex orders with every closed neighborhood contiguous (n <= ~8).

    Independent of the production recognizer: plain DFS over permutations
    with a necessary prefix condition (the already-placed neighbors of the
    next vertex must form a suffix of the prefix), then an exact final check.
    """
    n = graph.n
    adjs = [set(graph.adj[v]) for v in range(n)]
    out: list[list[int]] = []
    prefix: list[int] = []
    placed_pos: dict[int, int] = {}

    def full_check(seq: list[int]) -> bool:
        pos = {v: i for i, v in enumerate(seq)}
        for v in range(n):
            ps = [pos[v]] + [pos[w] for w in adjs[v]]
            if max(ps) - min(ps) + 1 != len(ps):
                return False
        return True

    def dfs() -> None:
        d = len(prefix)
        if d == n:
            if full_check(prefix):
                out.append(list(prefix))
            return
        for u in range(n):
            if u in placed_pos:
                continue
            earlier = [placed_pos[w] for w in adjs[u] if w in placed_pos]
            if earlier and (max(earlier) != d - 1 or max(earlier) - min(earlier) + 1 != len(earlier)):
                continue
            placed_pos[u] = d
            prefix.append(u)
            dfs()
            prefix.pop()
            del placed_pos[u]

    dfs()
    return out


# ---------------------------------------------------------------------------
# brute-force proper-interval partial-representation extension
# ---------------------------------------------------------------------------


LexVal = tuple[Fraction, int]
"""A rational plus a multiple of one shared infinitesimal: (q, k) = q + k·δ."""


def _lex_feasible(
    n_endpoints: int,
    weak: list[tuple[int, int]],
    strict: list[tuple[int, int]],
    pins: dict[int, LexVal],
) -> list[LexVal] | None:
    """Least solution of ``x_a <= x_b`` / ``x_a < x_b`` constraints with pins.

    Solved over rationals extended with an infinitesimal: values are lex
    pairs (q, k) meaning q + k·δ.  The least solution is grown from an anchor
    far below every pin, arcs relaxed to a fixpoint; pinned variables must
    come out exactly at their pins.  Returns the exact lex values (so callers
    can chain them through further systems losslessly) or None.
    """
    if pins:
        anchor = (min(q for q, _ in pins.values()) - n_endpoints - 1, 0)
    else:
        anchor = (Fraction(0), 0)
    val: list[LexVal] = [anchor] * n_endpoints
    for e, p in pins.items():
        val[e] = p
    arcs = [(a, b, 0) for a, b in weak] + [(a, b, 1) for a, b in strict]
    for _ in range(n_endpoints + 2):
        changed = False
        for a, b, w in arcs:
            cand = (val[a][0], val[a][1] + w)
            if cand > val[b]:
                if b in pins and cand > pins[b]:
                    return None
                val[b] = cand
                changed = True
        if not changed:
            break
    else:
        return None  # strict cycle: values kept growing
    for e, p in pins.items():
        if val[e] != p:
            return None
    return val


def materialize_lex(values: Iterable[LexVal]) -> Fraction:
    """A δ small enough that substituting it preserves every lex comparison.

    With δ below (minimum gap between distinct rational parts) / (2·(max
    multiplier + 1)), both strict order and distinctness of the lex pairs
    survive into the plain rationals q + k·δ.
    """
    vals = list(values)
    max_k = max((abs(k) for _, k in vals), default=0) + 1
    qs = sorted({q for q, _ in vals})
    min_gap = min((b - a for a, b in zip(qs, qs[1:])), default=Fraction(1))
    return min_gap / (2 * max_k)


def oracle_extendible_proper(
    graph: Graph,
    partial: Mapping[int, tuple[Fraction, Fraction]],
) -> tuple[bool, dict[int, tuple[Fraction, Fraction]] | None]:
    """Exhaustive decision of proper-interval partial extension (n <= ~7).

    Enumerates, per component, every valid vertex order; for each order the
    endpoint constraints (interleaving forced by edges, strictness for
    distinguishable pairs, pre-drawn pins) are solved exactly over rationals
    with infinitesimals.  Components are laid out left to right following the
    order of their pre-drawn extents; components whose pre-drawn blocks
    interleave make the instance inextendible.  Each component keeps the
    feasible order whose placement ends leftmost — the next component only
    couples to this one through that fence, so minimizing it is complete —
    and fences stay exact lex values until one final materialization.
    """
    comps = connected_components(graph)
    drawn = sorted(partial, key=lambda v: (partial[v][0], partial[v][1], v))
    comp_of = {}
    for ci, vs in enumerate(comps):
        for v in vs:
            comp_of[v] = ci
    # pre-drawn blocks of each component must be contiguous in the global
    # lexicographic endpoint order
    seen_done: set[int] = set()
    run: int | None = None
    for v in drawn:
        c = comp_of[v]
        if c != run:
            if c in seen_done:
                return (False, None)
            if run is not None:
                seen_done.add(run)
            run = c
    located = [ci for ci in range(len(comps)) if any(comp_of[v] == ci for v in drawn)]
    located.sort(key=lambda ci: min(partial[v][0] for v in comps[ci] if v in partial))

    raw: dict[int, tuple[LexVal, LexVal]] = {}
    cursor: LexVal | None = None  # everything new must start after this

    def solve_component(
        ci: int, low_fence: LexVal | None
    ) -> dict[int, tuple[LexVal, LexVal]] | None:
        vs = comps[ci]
        local = graph.induced(vs)
        k = local.n
        pins: dict[int, LexVal] = {}
        pinned_iv: dict[int, tuple[Fraction, Fraction]] = {}
        for i, v in enumerate(vs):
            if v in partial:
                lo, hi = Fraction(partial[v][0]), Fraction(partial[v][1])
                pins[i] = (lo, 0)
                pins[i + k] = (hi, 0)
                pinned_iv[i] = (lo, hi)
        # Same-group pairs must be either identical or strictly ordered in
        # both endpoints (anything in between is a containment).  A free
        # member of a group can always copy a pinned mate's interval verbatim
        # (their constraints against third vertices are identical), so every
        # member gets an *effective* interval — its own pin, a copied mate
        # pin, or the group's shared free block — and the pair relation is
        # read off: equal effective intervals are tied together, distinct
        # ones are strictly ordered.
        local_groups = indistinguishable_groups(local)
        eff: dict[int, tuple[Fraction, Fraction] | None] = {}
        for members in local_groups.groups:
            drawn_m = [m for m in members if m in pinned_iv]
            if drawn_m:
                mate = min(drawn_m, key=lambda m: (pinned_iv[m], m))
                for m in members:
                    eff[m] = pinned_iv.get(m, pinned_iv[mate])
            else:
                for m in members:
                    eff[m] = None
        best: tuple[LexVal, dict[int, tuple[LexVal, LexVal]]] | None = None
        for seq in enumerate_valid_orders(local):
            rank = {v: i for i, v in enumerate(seq)}
            weak: list[tuple[int, int]] = []
            strict: list[tuple[int, int]] = []
            for a in range(k):
                strict.append((a, a + k))  # l_a < r_a
            for a in range(k):
                for b in range(a + 1, k):
                    u, v = (a, b) if rank[a] < rank[b] else (b, a)
                    same = local_groups.group_of[u] == local_groups.group_of[v]
                    if same and eff[u] == eff[v]:
                        weak.extend(
                            [(u, v), (v, u), (u + k, v + k), (v + k, u + k)]
                        )
                    elif local.has_edge(u, v):
                        # matching endpoints strictly ordered along the vertex
                        # order (equality would imply a containment)
                        strict.append((u, v))
                        strict.append((u + k, v + k))
                        weak.append((v, u + k))  # intervals meet: l_v <= r_u
                    else:
                        strict.append((u + k, v))  # disjoint: r_u < l_v
            if low_fence is not None:
                # every endpoint of this component must lie above the fence:
                # pin an artificial variable at the fence value
                fence_var = 2 * k
                vals = _lex_feasible(
                    2 * k + 1,
                    weak,
                    strict + [(fence_var, e) for e in range(2 * k)],
                    {**pins, fence_var: low_fence},
                )
            else:
                vals = _lex_feasible(2 * k, weak, strict, pins)
            if vals is None:
                continue
            top = max(vals[i + k] for i in range(k))
            if best is None or top < best[0]:
                best = (top, {v: (vals[i], vals[i + k]) for i, v in enumerate(vs)})
        return None if best is None else best[1]

    order = located + [ci for ci in range(len(comps)) if ci not in located]
    for ci in order:
        got = solve_component(ci, cursor)
        if got is None:
            return (False, None)
        raw.update(got)
        cursor = max(r for _, r in got.values())
    delta = materialize_lex(v for lo_hi in raw.values() for v in lo_hi)
    placed = {
        v: (lo[0] + lo[1] * delta, hi[0] + hi[1] * delta)
        for v, (lo, hi) in raw.items()
    }
    verdict = check_valid_proper(placed, graph)
    if not verdict.ok:
        raise AssertionError(
            f"oracle materialized an invalid extension: {verdict.failures}"
        )
    for v, (lo, hi) in partial.items():
        if placed[v] != (Fraction(lo), Fraction(hi)):
            raise AssertionError(f"oracle moved pre-drawn vertex {v}")
    return (True, placed)
