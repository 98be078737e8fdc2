"""Proper-interval recognition and canonical vertex orderings.

A linear order of the vertices is *valid* when every closed neighborhood is a
contiguous run of the order (the umbrella property); a connected graph admits
such an order iff it is a proper interval graph, and the order is then unique
up to reversal and permutations inside indistinguishability groups.  We
therefore represent an ordering as a sequence of *groups*.

Recognition runs three lexicographic-BFS sweeps (each later sweep breaks ties
by the previous sweep's order) and then *certifies* the candidate with
:func:`validate_ordering`; a positive answer never depends on the sweep
heuristics.  On certification failure the graph has no valid order and a
witness vertex (one whose closed neighborhood is not contiguous in the
candidate) is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from .graph import Graph, GroupPartition, indistinguishable_groups
from .grid import NEG_INF, Bound


class NotProperIntervalError(Exception):
    """The graph admits no valid vertex order.

    Attributes:
        witness: a vertex whose closed neighborhood cannot be made contiguous.
    """

    def __init__(self, witness: int):
        super().__init__(
            f"not a proper interval graph (witness vertex {witness}: its closed "
            "neighborhood cannot be consecutive in any vertex order)"
        )
        self.witness = witness


@dataclass(frozen=True)
class ProperOrdering:
    """A valid order presented as a sequence of group indices.

    ``sequence`` lists indices into ``groups.groups``; all linear extensions
    (any in-group permutation) are valid orders, and so is the reversal.
    """

    groups: GroupPartition
    sequence: tuple[int, ...]
    direction: str = "forward"

    def reversed(self) -> "ProperOrdering":
        flip = "reversed" if self.direction == "forward" else "forward"
        return replace(self, sequence=tuple(reversed(self.sequence)), direction=flip)

    def vertices(self) -> list[int]:
        """Default linear extension: in-group members by ascending id."""
        return [v for gi in self.sequence for v in self.groups.groups[gi]]


def order_with_bounds(
    ordering: ProperOrdering,
    lbounds: Mapping[int, Bound] | Sequence[Bound],
) -> list[int]:
    """Concrete vertex order: groups in sequence, members by ascending lbound.

    In-group ties (equal bounds, or several unbounded members) break by
    ascending vertex id.  Sorting members by lower bound is what makes the
    leftmost representation of this particular linear extension the best one
    across all extensions.
    """

    def lb(v: int) -> Bound:
        if isinstance(lbounds, Mapping):
            return lbounds.get(v, NEG_INF)
        return lbounds[v]

    out: list[int] = []
    for gi in ordering.sequence:
        out.extend(sorted(ordering.groups.groups[gi], key=lambda v: (lb(v), v)))
    return out


def validate_ordering(g: Graph, order: Sequence[int]) -> bool:
    """True iff every closed neighborhood is contiguous in ``order``."""
    return _first_violation(g, order) is None


def _first_violation(g: Graph, order: Sequence[int]) -> int | None:
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for v in range(g.n):
        ps = [pos[v]] + [pos[w] for w in g.adj[v]]
        if max(ps) - min(ps) + 1 != len(ps):
            return v
    return None


def _lbfs(g: Graph, key: Sequence[int]) -> list[int]:
    """Lexicographic BFS; max-label ties go to the vertex with largest key.

    Cells of equal label are kept as lists sorted by descending key; picking
    a vertex splits every cell containing one of its unvisited neighbors into
    (neighbors, rest), neighbors in front.
    """
    n = g.n
    cells: dict[int, list[int]] = {0: sorted(range(n), key=lambda v: -key[v])}
    nxt: dict[int, int | None] = {0: None}
    prv: dict[int, int | None] = {0: None}
    cell_of = [0] * n
    head: int | None = 0
    fresh = 1
    picked = [False] * n
    out: list[int] = []

    def unlink(cid: int) -> None:
        nonlocal head
        p, q = prv[cid], nxt[cid]
        if p is not None:
            nxt[p] = q
        else:
            head = q
        if q is not None:
            prv[q] = p
        del cells[cid], nxt[cid], prv[cid]

    for _ in range(n):
        assert head is not None
        u = cells[head].pop(0)
        if not cells[head]:
            unlink(head)
        picked[u] = True
        out.append(u)
        affected: dict[int, list[int]] = {}
        for w in g.adj[u]:
            if not picked[w]:
                affected.setdefault(cell_of[w], []).append(w)
        for cid, movers in affected.items():
            if len(movers) == len(cells[cid]):
                continue  # whole cell would move: label order unchanged
            movers_set = set(movers)
            stay = [v for v in cells[cid] if v not in movers_set]
            moved = [v for v in cells[cid] if v in movers_set]
            nid = fresh
            fresh += 1
            cells[nid] = moved
            cells[cid] = stay
            # insert nid immediately before cid
            p = prv[cid]
            prv[nid], nxt[nid] = p, cid
            prv[cid] = nid
            if p is not None:
                nxt[p] = nid
            else:
                head = nid
            for v in moved:
                cell_of[v] = nid
    return out


def compute_proper_ordering(
    g: Graph, groups: GroupPartition | None = None
) -> ProperOrdering:
    """Compute a canonical valid ordering of a *connected* graph.

    Raises :class:`NotProperIntervalError` when none exists.  The returned
    orientation is deterministic: the first group's smallest member is no
    larger than the last group's.
    """
    if groups is None:
        groups = indistinguishable_groups(g)
    if g.n == 0:
        raise ValueError("empty graph")
    sigma = _lbfs(g, [-v for v in range(g.n)])
    for _ in range(2):
        rank = [0] * g.n
        for i, v in enumerate(sigma):
            rank[v] = i
        sigma = _lbfs(g, rank)
    bad = _first_violation(g, sigma)
    if bad is not None:
        raise NotProperIntervalError(bad)
    seq: list[int] = []
    for v in sigma:
        gi = groups.group_of[v]
        if not seq or seq[-1] != gi:
            seq.append(gi)
    if sorted(seq) != sorted(set(seq)) or len(seq) != len(groups.groups):
        raise AssertionError("group members not contiguous in a certified order")
    ordering = ProperOrdering(groups=groups, sequence=tuple(seq))
    first = groups.groups[seq[0]][0]
    last = groups.groups[seq[-1]][0]
    if last < first:
        ordering = replace(
            ordering, sequence=tuple(reversed(seq)), direction="forward"
        )
    return ordering
