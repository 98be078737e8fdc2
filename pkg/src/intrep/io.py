"""Plain-text input and output formats.

All numbers are exact rationals: ``3/4``, ``-2``, ``1.5`` are accepted on
input, and output always uses the ``p/q`` / integer form of ``Fraction``.
``#`` starts a comment anywhere on a line; blank lines are ignored.

Graph file        first data line ``n m``, then m lines ``u v``.
Bounds file       lines ``v lb ub`` (``-inf`` / ``inf`` for absent sides),
                  plus an optional line ``order c0 c1 ...`` prescribing the
                  component order.
Proper partial    lines ``v l r`` — the pre-drawn interval of v.
Unit partial      lines ``v l`` or ``v l r`` with r - l = 1 exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .graph import Graph
from .grid import NEG_INF, POS_INF, Bound, format_rational, is_finite, parse_rational


class InputFormatError(Exception):
    """The text being parsed does not follow the documented format."""


Interval = tuple[Fraction, Fraction]


def _data_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputFormatError(f"line {lineno}: {what} {token!r} is not an integer")


def _parse_rational(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise InputFormatError(f"line {lineno}: {token!r} is not a rational number")


def parse_graph(text: str) -> Graph:
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise InputFormatError("empty graph file")
    if len(header) != 2:
        raise InputFormatError(f"line {lineno}: expected 'n m', got {' '.join(header)!r}")
    n = _parse_int(header[0], lineno, "vertex count")
    m = _parse_int(header[1], lineno, "edge count")
    edges: list[tuple[int, int]] = []
    for lineno, parts in lines:
        if len(parts) != 2:
            raise InputFormatError(f"line {lineno}: expected 'u v', got {' '.join(parts)!r}")
        u = _parse_int(parts[0], lineno, "vertex")
        v = _parse_int(parts[1], lineno, "vertex")
        edges.append((u, v))
    if len(edges) != m:
        raise InputFormatError(f"header says {m} edges, file has {len(edges)}")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise InputFormatError(str(exc))


def format_graph(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def _parse_bound(token: str, lineno: int) -> Bound:
    try:
        return parse_rational(token)
    except ValueError:
        raise InputFormatError(f"line {lineno}: {token!r} is not a bound")


def parse_bounds(
    text: str, n: int
) -> tuple[dict[int, Bound], dict[int, Bound], tuple[int, ...] | None]:
    """Bounds plus the optional prescribed component order."""
    lbounds: dict[int, Bound] = {}
    ubounds: dict[int, Bound] = {}
    order: tuple[int, ...] | None = None
    for lineno, parts in _data_lines(text):
        if parts[0] == "order":
            if order is not None:
                raise InputFormatError(f"line {lineno}: second 'order' line")
            order = tuple(_parse_int(t, lineno, "component") for t in parts[1:])
            continue
        if len(parts) != 3:
            raise InputFormatError(
                f"line {lineno}: expected 'v lb ub', got {' '.join(parts)!r}"
            )
        v = _parse_int(parts[0], lineno, "vertex")
        if not 0 <= v < n:
            raise InputFormatError(f"line {lineno}: vertex {v} out of range")
        if v in lbounds or v in ubounds:
            raise InputFormatError(f"line {lineno}: duplicate bounds for vertex {v}")
        lb = _parse_bound(parts[1], lineno)
        ub = _parse_bound(parts[2], lineno)
        if lb == POS_INF or ub == NEG_INF:
            raise InputFormatError(f"line {lineno}: bounds for {v} are the wrong way around")
        if is_finite(lb):
            lbounds[v] = lb
        if is_finite(ub):
            ubounds[v] = ub
    return lbounds, ubounds, order


def format_bounds(
    lbounds: Mapping[int, Bound],
    ubounds: Mapping[int, Bound],
    order: Iterable[int] | None = None,
) -> str:
    lines = []
    for v in sorted(set(lbounds) | set(ubounds)):
        lb = lbounds.get(v, NEG_INF)
        ub = ubounds.get(v, POS_INF)
        lines.append(f"{v} {format_rational(lb)} {format_rational(ub)}")
    if order is not None:
        lines.append("order " + " ".join(str(c) for c in order))
    return "\n".join(lines) + "\n" if lines else ""


def parse_partial_proper(text: str, n: int) -> dict[int, Interval]:
    out: dict[int, Interval] = {}
    for lineno, parts in _data_lines(text):
        if len(parts) != 3:
            raise InputFormatError(
                f"line {lineno}: expected 'v l r', got {' '.join(parts)!r}"
            )
        v = _parse_int(parts[0], lineno, "vertex")
        if not 0 <= v < n:
            raise InputFormatError(f"line {lineno}: vertex {v} out of range")
        if v in out:
            raise InputFormatError(f"line {lineno}: vertex {v} drawn twice")
        out[v] = (_parse_rational(parts[1], lineno), _parse_rational(parts[2], lineno))
    return out


def parse_partial_unit(text: str, n: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for lineno, parts in _data_lines(text):
        if len(parts) not in (2, 3):
            raise InputFormatError(
                f"line {lineno}: expected 'v l' or 'v l r', got {' '.join(parts)!r}"
            )
        v = _parse_int(parts[0], lineno, "vertex")
        if not 0 <= v < n:
            raise InputFormatError(f"line {lineno}: vertex {v} out of range")
        if v in out:
            raise InputFormatError(f"line {lineno}: vertex {v} drawn twice")
        left = _parse_rational(parts[1], lineno)
        if len(parts) == 3 and _parse_rational(parts[2], lineno) - left != 1:
            raise InputFormatError(f"line {lineno}: interval for {v} is not unit length")
        out[v] = left
    return out


def format_rep_unit(ell: Mapping[int, Fraction]) -> str:
    lines = [f"{v} {ell[v]} {ell[v] + 1}" for v in sorted(ell)]
    return "\n".join(lines) + "\n" if lines else ""


def format_rep_proper(intervals: Mapping[int, Interval]) -> str:
    lines = [f"{v} {intervals[v][0]} {intervals[v][1]}" for v in sorted(intervals)]
    return "\n".join(lines) + "\n" if lines else ""
