"""Seeded generators for random instances, bounds, and partial drawings.

Everything is driven by an explicit ``random.Random`` so tests and benches
are reproducible byte for byte.  Graphs are generated geometry-first: pick
nondecreasing rational left endpoints, connect vertices whose endpoints lie
within 1 — the result is a unit representation and its graph, so sampled
sub-drawings are extendible by construction.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Mapping

from .graph import Graph
from .grid import Bound
from .solver import BoundRepInstance

BOUND_DENOMS = (1, 2, 3, 4, 6)


def _as_rng(seed_or_rng: int | random.Random) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def random_proper_instance(
    n: int,
    seed_or_rng: int | random.Random,
    *,
    max_step_num: int = 6,
    step_denom: int = 4,
    p_twin: float = 0.1,
    p_break: float = 0.0,
) -> tuple[Graph, dict[int, Fraction]]:
    """A proper interval graph together with the unit drawing that made it.

    Left endpoints start at 0 and grow by random steps of num/step_denom
    with num in [1, max_step_num]; steps of 0 create twins, steps above
    step_denom exceed 1 and cut the graph into components (probability
    p_break).  Edge rule: |l_u - l_v| <= 1.
    """
    rng = _as_rng(seed_or_rng)
    ell: dict[int, Fraction] = {}
    pos = Fraction(0)
    for v in range(n):
        if v > 0:
            if rng.random() < p_break:
                pos += Fraction(rng.randint(step_denom + 1, 3 * step_denom), step_denom)
            elif rng.random() < p_twin:
                pass  # twin: same left endpoint as its predecessor
            else:
                pos += Fraction(rng.randint(1, max_step_num), step_denom)
        ell[v] = pos
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if ell[v] - ell[u] > 1:
                break
            edges.append((u, v))
    return Graph.from_edges(n, edges), ell


def random_bounds(
    n: int,
    seed_or_rng: int | random.Random,
    *,
    p_lb: float = 0.5,
    p_ub: float = 0.25,
    spread: int = 12,
) -> tuple[dict[int, Bound], dict[int, Bound]]:
    """Random rational bounds with denominators from BOUND_DENOMS.

    Upper bounds are usually placed above the vertex's lower bound but may
    land anywhere, so infeasible instances occur — deciding them is part of
    what gets tested.
    """
    rng = _as_rng(seed_or_rng)
    lbounds: dict[int, Bound] = {}
    ubounds: dict[int, Bound] = {}
    for v in range(n):
        if rng.random() < p_lb:
            d = rng.choice(BOUND_DENOMS)
            lbounds[v] = Fraction(rng.randint(-spread, spread * d), d)
        if rng.random() < p_ub:
            d = rng.choice(BOUND_DENOMS)
            base = lbounds.get(v, Fraction(0))
            ubounds[v] = base + Fraction(rng.randint(-d, spread * d), d)
    return lbounds, ubounds


def random_partial(
    ell: Mapping[int, Fraction],
    seed_or_rng: int | random.Random,
    *,
    p_keep: float = 0.4,
) -> dict[int, Fraction]:
    """Sample a sub-drawing of a full unit drawing (always extendible)."""
    rng = _as_rng(seed_or_rng)
    return {v: pos for v, pos in ell.items() if rng.random() < p_keep}


def random_garbage_partial(
    n: int,
    seed_or_rng: int | random.Random,
    *,
    p_keep: float = 0.4,
    spread: int = 8,
) -> dict[int, Fraction]:
    """Arbitrary pinned positions with no regard for the graph."""
    rng = _as_rng(seed_or_rng)
    out: dict[int, Fraction] = {}
    for v in range(n):
        if rng.random() < p_keep:
            d = rng.choice(BOUND_DENOMS)
            out[v] = Fraction(rng.randint(0, spread * d), d)
    return out


def bench_instance(n: int, seed: int = 0) -> BoundRepInstance:
    """A dense connected staircase with integer floors, for benchmarking.

    The first vertex is floored at 0 and the last at n//2 — well beyond the
    natural span of the dense drawing, so solving has to stretch the layout
    and the shifting engine earns its keep.  Always feasible (no ceilings).
    """
    rng = random.Random(seed)
    graph, _ = random_proper_instance(
        n, rng, max_step_num=2, step_denom=4, p_twin=0.0, p_break=0.0
    )
    lbounds: dict[int, Bound] = {0: Fraction(0), n - 1: Fraction(n // 2)}
    for v in rng.sample(range(1, n - 1), k=max(1, n // 20)):
        lbounds[v] = Fraction(rng.randint(0, n // 2))
    return BoundRepInstance(graph=graph, lbounds=lbounds, ubounds={})
