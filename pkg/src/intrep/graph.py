"""Simple undirected graphs, components, indistinguishable vertices, pruning.

Vertices are ``0..n-1``.  Two vertices are *indistinguishable* when their
closed neighborhoods coincide (such vertices are necessarily adjacent); the
relation is an equivalence and its classes are the *groups* of the graph.
Pruning keeps one representative per group, carrying the largest lower bound
of the group; solvers may then run on the pruned graph and expand afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .grid import NEG_INF, Bound, is_finite


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from an edge list; rejects loops, duplicates, bad ids."""
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(n=n, adj=tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.adj[v]) | {v}

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; local ids follow the order of ``vertices``."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("duplicate vertices")
        edges = [
            (index[u], index[v])
            for u in vertices
            for v in self.adj[u]
            if u < v and v in index
        ]
        return Graph.from_edges(len(vertices), edges)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class GroupPartition:
    """Partition of the vertices into indistinguishability groups.

    ``groups`` are sorted internally and ordered by smallest member;
    ``group_of[v]`` is the index of v's group.
    """

    groups: tuple[tuple[int, ...], ...]
    group_of: tuple[int, ...]


def indistinguishable_groups(g: Graph) -> GroupPartition:
    """Group vertices by equal closed neighborhoods (exact comparison)."""
    buckets: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        key = tuple(sorted(g.closed_neighborhood(v)))
        buckets.setdefault(key, []).append(v)
    groups = sorted((tuple(sorted(vs)) for vs in buckets.values()), key=lambda t: t[0])
    group_of = [0] * g.n
    for gi, members in enumerate(groups):
        for v in members:
            group_of[v] = gi
    return GroupPartition(groups=tuple(groups), group_of=tuple(group_of))


@dataclass(frozen=True)
class PrunedGraph:
    """One representative per group, with group-max lower bounds.

    Attributes:
        graph: the pruned graph; vertex ``i`` corresponds to group ``i`` of
            ``groups`` (groups ordered by smallest member).
        lbound: per pruned vertex, the max lower bound over its group.
        rep_of: original id of each pruned vertex (smallest member attaining
            the group-max lower bound).
        back_map: per pruned vertex, the original members of its group.
        groups: the partition that was pruned.
    """

    graph: Graph
    lbound: tuple[Bound, ...]
    rep_of: tuple[int, ...]
    back_map: tuple[tuple[int, ...], ...]
    groups: GroupPartition


def prune(
    g: Graph,
    lbounds: Mapping[int, Bound] | Sequence[Bound],
    groups: GroupPartition | None = None,
) -> PrunedGraph:
    """Collapse each indistinguishability group to one representative.

    The representative carries the group's largest lower bound (smallest id
    attaining it); group adjacency is inherited (well-defined because group
    members have identical closed neighborhoods).
    """

    def lb(v: int) -> Bound:
        if isinstance(lbounds, Mapping):
            return lbounds.get(v, NEG_INF)
        return lbounds[v]

    if groups is None:
        groups = indistinguishable_groups(g)
    k = len(groups.groups)
    lbs: list[Bound] = []
    reps: list[int] = []
    for members in groups.groups:
        best = max((lb(v) for v in members), default=NEG_INF)
        attaining = [v for v in members if lb(v) == best] if is_finite(best) else [
            v for v in members if not is_finite(lb(v))
        ]
        lbs.append(best)
        reps.append(min(attaining))
    edges = set()
    for gi in range(k):
        u = groups.groups[gi][0]
        for w in g.adj[u]:
            gj = groups.group_of[w]
            if gj != gi:
                edges.add((min(gi, gj), max(gi, gj)))
    return PrunedGraph(
        graph=Graph.from_edges(k, sorted(edges)),
        lbound=tuple(lbs),
        rep_of=tuple(reps),
        back_map=tuple(groups.groups),
        groups=groups,
    )
