"""Proper and unit interval representations under position constraints.

The package decides and constructs representations of proper (= unit)
interval graphs when parts of the drawing are already fixed:

* :func:`compute_proper_ordering` — recognition plus the canonical vertex
  ordering, unique up to reversal and in-group permutation;
* :func:`solve_boundrep_prescribed` / :func:`solve_boundrep` — leftmost
  unit representation under per-vertex lower/upper bounds, for a prescribed
  or searched component order, with an exact difference-constraint engine
  (``mode="lp"``) and a combinatorial shifting engine (``mode="shift"``);
* :func:`extend_proper` — extend pre-drawn intervals to a proper
  representation of the whole graph;
* :func:`repext_unit` — the same for unit intervals, via bound pinning;
* :func:`gen_gadget` — instances whose feasibility encodes 3-Partition;
* :mod:`intrep.oracle` — brute-force reference implementations.

All coordinates are exact rationals on an explicit epsilon-grid.
"""

from .gadgets import (
    DecodeError,
    GadgetMeta,
    InvalidThreePartitionError,
    decode_partition,
    gen_gadget,
    has_three_partition,
)
from .graph import Graph, GroupPartition, connected_components, indistinguishable_groups
from .grid import (
    NEG_INF,
    POS_INF,
    Bound,
    GridPoint,
    GridSpec,
    compute_epsilon,
    snap_to_grid,
)
from .ordering import (
    NotProperIntervalError,
    ProperOrdering,
    compute_proper_ordering,
    order_with_bounds,
)
from .pipeline import repext_unit, solve_boundrep
from .properext import InvalidPartialError, extend_proper, validate_partial
from .solver import (
    BoundRepInstance,
    SolveResult,
    SolveStats,
    solve_boundrep_prescribed,
)

__version__ = "0.1.0"

__all__ = [
    "Bound",
    "BoundRepInstance",
    "DecodeError",
    "GadgetMeta",
    "Graph",
    "GridPoint",
    "GridSpec",
    "GroupPartition",
    "InvalidPartialError",
    "InvalidThreePartitionError",
    "NEG_INF",
    "NotProperIntervalError",
    "POS_INF",
    "ProperOrdering",
    "SolveResult",
    "SolveStats",
    "__version__",
    "compute_epsilon",
    "compute_proper_ordering",
    "connected_components",
    "decode_partition",
    "extend_proper",
    "gen_gadget",
    "has_three_partition",
    "indistinguishable_groups",
    "order_with_bounds",
    "repext_unit",
    "snap_to_grid",
    "solve_boundrep",
    "solve_boundrep_prescribed",
    "validate_partial",
]
