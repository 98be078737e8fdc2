"""Difference-constraint systems and their pointwise-least solutions.

A system holds constraints ``x_q >= x_p + c`` plus per-variable floors
``x_v >= b``.  A feasible system has a unique least solution over the floors
(the longest-path closure: each variable is the maximum over all constraint
walks from floored variables).  A system is infeasible exactly when its
constraint digraph contains a positive-weight cycle; the cycle is reported as
a certificate.

Weights and floors may be ints or Fractions (mixed freely).  Variables not
bounded below by any floor come out as ``None`` ("unbounded below").
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

Weight = int | Fraction


class InfeasibleSystemError(Exception):
    """The system admits no solution; ``cycle`` certifies a positive cycle."""

    def __init__(self, cycle: list[int]):
        super().__init__(
            f"infeasible difference system: positive-weight cycle through "
            f"variables {cycle}"
        )
        self.cycle = cycle


class DifferenceSystem:
    """Mutable collection of difference constraints over ``n`` variables."""

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        self.n = n
        self.out: list[list[tuple[int, Weight]]] = [[] for _ in range(n)]
        self.floors: dict[int, Weight] = {}

    def add_constraint(self, q: int, p: int, c: Weight) -> None:
        """Require ``x_q >= x_p + c``."""
        self.out[p].append((q, c))

    def add_source(self, v: int, b: Weight) -> None:
        """Require ``x_v >= b`` (max-merged with earlier floors on v)."""
        cur = self.floors.get(v)
        if cur is None or b > cur:
            self.floors[v] = b

    @property
    def arcs(self) -> list[tuple[int, int, Weight]]:
        """All constraints as (q, p, c) triples, i.e. x_q >= x_p + c."""
        return [(q, p, c) for p in range(self.n) for (q, c) in self.out[p]]

    def _find_positive_cycle(self) -> list[int] | None:
        """Detect a positive cycle (floors are irrelevant to cycle existence).

        Fast path: queue-based relaxation from an all-zero start; values
        stabilize iff no positive cycle exists.  When the per-node enqueue
        cap trips, the (rare, infeasible) instance is re-run synchronously to
        extract a clean certificate.
        """
        n = self.n
        val: list[Weight] = [0] * n
        count = [0] * n
        inq = [True] * n
        q = deque(range(n))
        while q:
            p = q.popleft()
            inq[p] = False
            base = val[p]
            for t, w in self.out[p]:
                cand = base + w
                if cand > val[t]:
                    val[t] = cand
                    if not inq[t]:
                        count[t] += 1
                        if count[t] > n + 1:
                            return self._extract_cycle_sync()
                        inq[t] = True
                        q.append(t)
        return None

    def _extract_cycle_sync(self) -> list[int]:
        """Synchronous Bellman rounds; textbook positive-cycle extraction."""
        n = self.n
        val: list[Weight] = [0] * n
        pred = [-1] * n
        arcs = self.arcs
        last: int | None = None
        for _ in range(n + 1):
            last = None
            for q_, p_, c_ in arcs:
                cand = val[p_] + c_
                if cand > val[q_]:
                    val[q_] = cand
                    pred[q_] = p_
                    last = q_
            if last is None:
                raise AssertionError("cycle vanished between detection passes")
        assert last is not None
        x = last
        for _ in range(n):
            x = pred[x]
        cyc = [x]
        y = pred[x]
        while y != x:
            cyc.append(y)
            y = pred[y]
        cyc.reverse()
        return cyc

    def least_solution(self) -> list[Weight | None]:
        """Pointwise-least solution; ``None`` marks unbounded-below variables.

        Raises :class:`InfeasibleSystemError` on a positive cycle (even one
        not reachable from any floor: such a cycle already contradicts
        itself).
        """
        cyc = self._find_positive_cycle()
        if cyc is not None:
            raise InfeasibleSystemError(cyc)
        val: list[Weight | None] = [None] * self.n
        inq = [False] * self.n
        q: deque[int] = deque()
        for v in sorted(self.floors):
            val[v] = self.floors[v]
            inq[v] = True
            q.append(v)
        while q:
            p = q.popleft()
            inq[p] = False
            base = val[p]
            assert base is not None
            for t, w in self.out[p]:
                cand = base + w
                if val[t] is None or cand > val[t]:
                    val[t] = cand
                    if not inq[t]:
                        inq[t] = True
                        q.append(t)
        return val
