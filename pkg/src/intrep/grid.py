"""Exact rational grids for unit-interval representations.

All interval positions are exact rationals (`fractions.Fraction`); bounds may
additionally be the IEEE infinities, used purely as order sentinels (they are
compared against Fractions but never enter arithmetic).

A representation lives on an epsilon-grid: every left endpoint is an integer
multiple of ``eps``, where ``eps`` divides ``eps_prime = 1 / lcm(denominators
of all finite bounds)``.  Two grid granularities are used:

* the direct least-solution solver works at ``eps = eps_prime / n``,
* the shifting solver works at ``eps = eps_prime / n**2`` (its unit circle is
  split into ``n**2`` slots of width ``Delta = 1 / n**2``, each slot being a
  whole number of eps-steps).

``K = 1 / eps`` is always a positive integer, so a position ``x`` on the grid
is represented exactly by the integer ``x * K``.  ``GridPoint`` splits that
integer into ``(alpha, beta) = divmod(x * K, K)``: the unit cell and the
offset inside it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping

#: Order sentinels for absent bounds.  They are *only* compared, never added.
NEG_INF = float("-inf")
POS_INF = float("inf")

#: A bound: a finite Fraction or one of the infinity sentinels.
Bound = Fraction | float


def is_finite(x: Bound) -> bool:
    """True for actual rationals, False for the infinity sentinels.

    Finite floats are rejected outright: exact arithmetic only ever sees
    Fractions, and a stray float would silently poison it.
    """
    if isinstance(x, float):
        if x == NEG_INF or x == POS_INF:
            return False
        raise ValueError(f"finite bounds must be Fractions, got float {x!r}")
    return True


def parse_rational(text: str) -> Bound:
    """Parse ``p/q``, an integer, a decimal, or ``-inf``/``+inf``/``inf``."""
    s = text.strip()
    low = s.lower()
    if low in ("-inf", "-infinity"):
        return NEG_INF
    if low in ("inf", "+inf", "infinity", "+infinity"):
        return POS_INF
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(x: Bound) -> str:
    """Inverse of :func:`parse_rational`: ``p/q``, ``p``, or ``±inf``."""
    if isinstance(x, float):
        if x == NEG_INF:
            return "-inf"
        if x == POS_INF:
            return "+inf"
        raise ValueError(f"not a bound value: {x!r}")
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class GridSpec:
    """The grid a representation lives on.

    Attributes:
        eps_prime: coarse step, ``1 / lcm`` of all finite bound denominators
            (1 when there are none).
        eps: fine step; ``eps_prime / n`` in ``lp`` mode, ``eps_prime / n**2``
            in ``shift`` mode.
        n: number of vertices of the whole graph the grid was computed for.
        mode: ``"lp"`` or ``"shift"``.
    """

    eps_prime: Fraction
    eps: Fraction
    n: int
    mode: str

    @property
    def K(self) -> int:
        """Steps per unit: ``1 / eps`` (always an integer)."""
        k = 1 / self.eps
        assert k.denominator == 1
        return k.numerator

    @property
    def L(self) -> int:
        """Denominator lcm: ``1 / eps_prime`` (always an integer)."""
        l = 1 / self.eps_prime
        assert l.denominator == 1
        return l.numerator


def compute_epsilon(bounds: Iterable[Bound], n: int, mode: str = "lp") -> GridSpec:
    """Build the :class:`GridSpec` for an instance.

    ``bounds`` may contain infinities; only finite values contribute their
    denominators.  ``n`` is the vertex count of the *whole* graph.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if mode not in ("lp", "shift"):
        raise ValueError(f"unknown grid mode: {mode!r}")
    denoms = [Fraction(b).denominator for b in bounds if is_finite(b)]
    big = lcm(*denoms) if denoms else 1
    eps_prime = Fraction(1, big)
    eps = eps_prime / (n if mode == "lp" else n * n)
    return GridSpec(eps_prime=eps_prime, eps=eps, n=n, mode=mode)


def steps_per_unit(eps: "GridSpec | Fraction") -> tuple[int, Fraction]:
    """Normalize an eps argument to ``(K, eps)`` with ``K = 1/eps`` integral."""
    eps_frac = eps.eps if isinstance(eps, GridSpec) else Fraction(eps)
    k = 1 / eps_frac
    if k.denominator != 1 or k.numerator < 1:
        raise ValueError(f"eps must be the reciprocal of a positive integer, got {eps_frac}")
    return k.numerator, eps_frac


def as_steps(x: Bound, k: int) -> int:
    """Exact conversion of a finite grid value to integer eps-steps."""
    q = Fraction(x) * k
    if q.denominator != 1:
        raise ValueError(f"{x} is not on the 1/{k} grid")
    return q.numerator


@dataclass(frozen=True)
class GridPoint:
    """A grid position split as ``value = alpha + beta * eps``, 0 <= beta < K."""

    alpha: int
    beta: int


class NotOnGridError(ValueError):
    """Raised when a value is not an integer multiple of the grid step."""


def to_grid_point(x: Fraction, spec: GridSpec) -> GridPoint:
    """Exact conversion; raises :class:`NotOnGridError` for off-grid values."""
    q = Fraction(x) * spec.K
    if q.denominator != 1:
        raise NotOnGridError(f"{x} is not on the eps={spec.eps} grid")
    alpha, beta = divmod(q.numerator, spec.K)
    return GridPoint(alpha, beta)


def from_grid_point(p: GridPoint, spec: GridSpec) -> Fraction:
    """Inverse of :func:`to_grid_point`."""
    return Fraction(p.alpha * spec.K + p.beta, spec.K)


def round_down(x: Fraction, step: Fraction) -> Fraction:
    """Largest integer multiple of ``step`` that is <= ``x``."""
    q = Fraction(x) / step
    return (q.numerator // q.denominator) * step


def round_down_to_grid(x: Fraction, spec: GridSpec) -> GridPoint:
    """Round ``x`` down to the grid and return the resulting point."""
    q = Fraction(x) * spec.K
    total = q.numerator // q.denominator
    alpha, beta = divmod(total, spec.K)
    return GridPoint(alpha, beta)


def snap_to_grid(
    ell: Mapping[int, Fraction],
    spec: GridSpec,
    lbounds: Mapping[int, Bound] | None = None,
    ubounds: Mapping[int, Bound] | None = None,
) -> dict[int, Fraction]:
    """Snap a valid off-grid representation onto the eps-grid.

    Each position is split as ``ell_v = floor_{eps_prime}(ell_v) + frac_v``;
    the distinct fractional parts are ranked ascending and replaced by
    ``rank * eps`` (the smallest part, usually 0, gets 0).  This keeps every
    coordinate within its eps_prime cell, preserves the relative order of all
    endpoints (strict gaps stay strict with at least one eps of clearance,
    touching pairs stay touching), and therefore preserves validity, the
    realized ordering and any bounds on the eps_prime grid.

    When bounds are supplied they are re-checked defensively.
    """
    floors: dict[int, Fraction] = {}
    fracs: dict[int, Fraction] = {}
    for v, x in ell.items():
        f = round_down(Fraction(x), spec.eps_prime)
        floors[v] = f
        fracs[v] = Fraction(x) - f
    ranking = {frac: i for i, frac in enumerate(sorted(set(fracs.values())))}
    if len(ranking) > int(spec.eps_prime / spec.eps):
        raise ValueError("more distinct fractional parts than grid slots")
    snapped = {v: floors[v] + ranking[fracs[v]] * spec.eps for v in ell}
    if lbounds is not None:
        for v, x in snapped.items():
            lb = lbounds.get(v, NEG_INF)
            if is_finite(lb) and x < lb:
                raise ValueError(f"snap drove vertex {v} below its lower bound")
    if ubounds is not None:
        for v, x in snapped.items():
            ub = ubounds.get(v, POS_INF)
            if is_finite(ub) and x > ub:
                raise ValueError(f"snap drove vertex {v} above its upper bound")
    return snapped
