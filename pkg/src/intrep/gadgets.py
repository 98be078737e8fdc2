"""Instances that encode 3-Partition as bounded representation problems.

Given 3k sizes A_0..A_{3k-1} with M/4 < A_i < M/2 and sum k·M, the gadget
builds k+1 single-vertex *anchor* components pinned (equal lower and upper
bound) at 0, M+2, 2(M+2), ..., k(M+2), plus one path component P_{2·A_i}
per size, every path vertex bounded into [1, k(M+2)].

A unit representation of the path on 2A vertices needs a window of left
endpoints at least (A-1)(1+eps) wide, two paths in the same anchor gap must
clear each other by 1+eps, and each gap between consecutive anchors offers
a window of M - 2eps.  Hence a gap can host three paths exactly when their
sizes sum to at most M; four paths never fit (each size exceeds M/4) and a
gap with two or fewer paths would overflow another gap.  So a feasible
component order exists if and only if the sizes split into k triples each
summing to exactly M — deciding the instance decides 3-Partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .graph import Graph
from .grid import Bound
from .solver import BoundRepInstance


class InvalidThreePartitionError(Exception):
    """The sizes do not form a 3-Partition instance in canonical form."""


class DecodeError(Exception):
    """A representation of the gadget does not decode to a partition."""


@dataclass(frozen=True)
class GadgetMeta:
    """Layout of a generated gadget."""

    k: int
    m: int
    sizes: tuple[int, ...]
    path_vertices: tuple[tuple[int, ...], ...]  # per size, its path's vertex ids
    anchors: tuple[int, ...]  # anchor vertex ids, left to right

    @property
    def gap(self) -> int:
        """Distance between consecutive anchor positions."""
        return self.m + 2

    def anchor_position(self, j: int) -> int:
        return j * self.gap


def _check_sizes(k: int, m: int, sizes: Sequence[int]) -> tuple[int, ...]:
    if not (isinstance(k, int) and k >= 1):
        raise InvalidThreePartitionError(f"k must be a positive integer, got {k!r}")
    if not (isinstance(m, int) and m >= 1):
        raise InvalidThreePartitionError(f"M must be a positive integer, got {m!r}")
    out = []
    for a in sizes:
        if not isinstance(a, int):
            raise InvalidThreePartitionError(f"size {a!r} is not an integer")
        if not (4 * a > m and 2 * a < m):
            raise InvalidThreePartitionError(
                f"size {a} violates M/4 < A < M/2 for M={m}"
            )
        out.append(a)
    if len(out) != 3 * k:
        raise InvalidThreePartitionError(
            f"need exactly 3k={3 * k} sizes, got {len(out)}"
        )
    if sum(out) != k * m:
        raise InvalidThreePartitionError(
            f"sizes sum to {sum(out)}, need k*M={k * m}"
        )
    return tuple(out)


def gen_gadget(
    k: int, m: int, sizes: Sequence[int]
) -> tuple[BoundRepInstance, GadgetMeta]:
    """Build the bounded-representation instance for a 3-Partition input.

    Vertices: the paths first (each P_{2A_i} consecutively numbered in path
    order), then the k+1 anchors.  No component order is prescribed —
    finding one is exactly the hard part.
    """
    sizes = _check_sizes(k, m, sizes)
    edges: list[tuple[int, int]] = []
    paths: list[tuple[int, ...]] = []
    off = 0
    for a in sizes:
        ids = tuple(range(off, off + 2 * a))
        paths.append(ids)
        edges.extend((u, u + 1) for u in ids[:-1])
        off += 2 * a
    anchors = tuple(range(off, off + k + 1))
    n = off + k + 1
    graph = Graph.from_edges(n, edges)

    lbounds: dict[int, Bound] = {}
    ubounds: dict[int, Bound] = {}
    top = k * (m + 2)
    for ids in paths:
        for v in ids:
            lbounds[v] = Fraction(1)
            ubounds[v] = Fraction(top)
    for j, v in enumerate(anchors):
        lbounds[v] = Fraction(j * (m + 2))
        ubounds[v] = Fraction(j * (m + 2))

    meta = GadgetMeta(k=k, m=m, sizes=sizes, path_vertices=tuple(paths), anchors=anchors)
    return BoundRepInstance(graph=graph, lbounds=lbounds, ubounds=ubounds), meta


def decode_partition(
    meta: GadgetMeta, ell: Mapping[int, Fraction]
) -> list[tuple[int, int, int]]:
    """Read the 3-Partition solution off a valid representation.

    Each path must lie strictly inside one anchor gap; gap j collects the
    paths whose size-triple sums to M.  Returns k triples of 0-based size
    indices, sorted within and across triples.
    """
    gap = meta.gap
    groups: list[list[int]] = [[] for _ in range(meta.k)]
    for t, ids in enumerate(meta.path_vertices):
        lo = min(ell[v] for v in ids)
        hi = max(ell[v] for v in ids)
        j = int(lo // gap)
        if not (0 <= j < meta.k and j * gap < lo and hi < (j + 1) * gap):
            raise DecodeError(f"path {t} does not sit inside one anchor gap")
        groups[j].append(t)
    for j, members in enumerate(groups):
        if len(members) != 3:
            raise DecodeError(f"anchor gap {j} holds {len(members)} paths, not 3")
        if sum(meta.sizes[t] for t in members) != meta.m:
            raise DecodeError(f"anchor gap {j} sums to the wrong total")
    return [tuple(sorted(members)) for members in groups]


def has_three_partition(k: int, m: int, sizes: Sequence[int]) -> bool:
    """Exhaustive 3-Partition decision (small instances only).

    Canonical search: the smallest unassigned index leads its triple, the
    two partners are chosen from the rest, so each set partition is visited
    once.
    """
    sizes = _check_sizes(k, m, sizes)
    idx = list(range(3 * k))

    def go(remaining: list[int]) -> bool:
        if not remaining:
            return True
        head, rest = remaining[0], remaining[1:]
        for i in range(len(rest)):
            for j in range(i + 1, len(rest)):
                if sizes[head] + sizes[rest[i]] + sizes[rest[j]] == m:
                    nxt = [x for t, x in enumerate(rest) if t != i and t != j]
                    if go(nxt):
                        return True
        return False

    return go(idx)
