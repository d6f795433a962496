"""The region bounded by a diagram and its decomposition into ordered rectangles.

Cells are the open unit boxes of the rank lattice: cell ``(i, j)`` sits
between row lines ``i, i+1`` and column lines ``j, j+1``.  The region is
the union of the bounded faces of the diagram; column lines and the
horizontal segments cut it into vertical runs, one rectangle each.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

from .sbd import SquareBridgeDiagram

__all__ = [
    "CellGrid",
    "Rectangle",
    "Bridge",
    "MergeRecord",
    "RegionDecomposition",
    "RegionError",
    "NotVertexConnected",
    "SplitLayoutUnsupported",
    "RegionNotSimplyConnected",
    "interior_cells",
    "decompose",
    "order",
    "satisfies_star",
    "touches",
    "rect_components",
    "cell_euler_characteristic",
    "insert_bridges",
    "merge",
    "decomposition",
]


class RegionError(ValueError):
    condition = "region"


class NotVertexConnected(RegionError):
    """The rectangles cannot be ordered so each one touches its predecessors."""


class SplitLayoutUnsupported(RegionError):
    """A split link whose pieces are not laid out left to right."""


class RegionNotSimplyConnected(RegionError):
    """The region has a hole, so the rectangle 3-cells cannot close up to a ball."""


@dataclass(frozen=True)
class CellGrid:
    """Interior cells of the region plus the horizontal cuts through column strips.

    ``cuts`` holds ``(row, strip)`` whenever ``h_row`` spans column strip
    ``strip``; rectangles never extend across a cut.
    """

    p: int
    q: int
    interior: frozenset[tuple[int, int]]
    cuts: frozenset[tuple[int, int]] = frozenset()

    def __contains__(self, cell) -> bool:
        return cell in self.interior

    def rows(self):
        return range(1, self.p)

    def cols(self):
        return range(1, self.q)

    def with_cells(self, cells: Iterable[tuple[int, int]]) -> CellGrid:
        return replace(self, interior=self.interior | frozenset(cells))

    def matrix(self) -> list[list[bool]]:
        return [[(i, j) in self.interior for j in self.cols()] for i in self.rows()]


@dataclass(frozen=True, order=True)
class Rectangle:
    """Axis-parallel lattice rectangle ``[col_lo, col_hi] x [row_lo, row_hi]``.

    Primitive rectangles span one column strip (``col_hi == col_lo + 1``);
    merged rectangles and bridges may span several.
    """

    col_lo: int
    row_lo: int
    col_hi: int
    row_hi: int
    index: int = field(default=0, compare=False)

    @property
    def strip(self) -> int:
        return self.col_lo

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.col_lo, self.row_lo, self.col_hi, self.row_hi)

    def corners(self) -> tuple[tuple[int, int], ...]:
        """Lattice corners as ``(row, col)`` in boundary order from the lower left."""
        return (
            (self.row_lo, self.col_lo),
            (self.row_lo, self.col_hi),
            (self.row_hi, self.col_hi),
            (self.row_hi, self.col_lo),
        )

    def cells(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.row_lo, self.row_hi)
            for j in range(self.col_lo, self.col_hi)
        ]

    def contains_point(self, row: int, col: int) -> bool:
        return self.row_lo <= row <= self.row_hi and self.col_lo <= col <= self.col_hi

    def relabel(self, index: int) -> Rectangle:
        return replace(self, index=index)

    def as_list(self) -> list[int]:
        return [self.col_lo, self.row_lo, self.col_hi, self.row_hi]


@dataclass(frozen=True)
class Bridge:
    """A rectangle synthesized to join two pieces of a split region."""

    rect: Rectangle
    joins: tuple[int, int]


@dataclass(frozen=True)
class MergeRecord:
    left: Rectangle
    right: Rectangle
    merged: Rectangle
    # shared edge on column line ``col`` between rows ``row_lo`` and ``row_hi``
    col: int
    row_lo: int
    row_hi: int
    pass_no: int


@dataclass(frozen=True)
class RegionDecomposition:
    p: int
    q: int
    cells: CellGrid
    rectangles: tuple[Rectangle, ...]
    bridges: tuple[Bridge, ...] = ()
    merges: tuple[MergeRecord, ...] = ()
    unmerged_count: int = 0

    @property
    def N(self) -> int:
        return len(self.rectangles)

    def rect(self, k: int) -> Rectangle:
        return self.rectangles[k - 1]


# -- region and rectangles ----------------------------------------------------


def interior_cells(d: SquareBridgeDiagram) -> CellGrid:
    """Cells enclosed by the diagram: everything the unbounded face cannot reach.

    Flood fill from a ring of cells around the grid; a step between
    neighbouring cells is blocked exactly when it crosses a diagram segment.
    """
    p, q = d.p, d.q
    hcut = {(s.row, j) for s in d.hsegs for j in range(s.col_lo, s.col_hi)}
    vcut = {(i, s.col) for s in d.vsegs for i in range(s.row_lo, s.row_hi)}
    outside = {(0, 0)}
    stack = [(0, 0)]
    while stack:
        i, j = stack.pop()
        steps = (
            (i + 1, j, (i + 1, j) in hcut),
            (i - 1, j, (i, j) in hcut),
            (i, j + 1, (i, j + 1) in vcut),
            (i, j - 1, (i, j) in vcut),
        )
        for a, b, blocked in steps:
            if 0 <= a <= p and 0 <= b <= q and not blocked and (a, b) not in outside:
                outside.add((a, b))
                stack.append((a, b))
    inside = {
        (i, j) for i in range(1, p) for j in range(1, q) if (i, j) not in outside
    }
    return CellGrid(p, q, frozenset(inside), frozenset(hcut))


def decompose(cells: CellGrid, d: SquareBridgeDiagram | None = None) -> list[Rectangle]:
    """Cut each column strip at the horizontal segments crossing it.

    Every maximal run of interior cells between two consecutive cuts is one
    rectangle; its bottom and top edges lie on diagram segments.
    """
    rects = []
    for j in cells.cols():
        i = 1
        while i < cells.p:
            if (i, j) not in cells:
                i += 1
                continue
            lo = i
            i += 1
            while i < cells.p and (i, j) in cells and (i, j) not in cells.cuts:
                i += 1
            rects.append(Rectangle(j, lo, j + 1, i))
    if d is not None:
        for r in rects:
            for row in (r.row_lo, r.row_hi):
                assert d.h(row).covers_strip(r.col_lo), (
                    f"rectangle {r.key} edge on row {row} is not on a diagram segment"
                )
    return rects


def touches(a: Rectangle, b: Rectangle) -> bool:
    """Closed rectangles meet; on the lattice this always involves a corner of one of them."""
    return (
        a.col_lo <= b.col_hi
        and b.col_lo <= a.col_hi
        and a.row_lo <= b.row_hi
        and b.row_lo <= a.row_hi
    )


def satisfies_star(rects: list[Rectangle]) -> bool:
    """Every rectangle after the first meets the union of those before it."""
    return all(
        any(touches(rects[k], rects[m]) for m in range(k)) for k in range(1, len(rects))
    )


def order(rects: Iterable[Rectangle], cells: CellGrid | None = None) -> list[Rectangle]:
    """Greedy ordering with the lexicographic ``(strip, row_lo)`` tie-break.

    Raises :class:`NotVertexConnected` if some rectangle never becomes eligible.
    """
    pool = sorted(rects, key=lambda r: r.key)
    if not pool:
        return []
    out = [pool.pop(0)]
    while pool:
        for k, r in enumerate(pool):
            if any(touches(r, s) for s in out):
                out.append(pool.pop(k))
                break
        else:
            raise NotVertexConnected(
                f"{len(pool)} rectangle(s) share no vertex with the rest of the region; "
                "the link is split (region P has several pieces) and bridging is disabled"
            )
    return [r.relabel(k) for k, r in enumerate(out, start=1)]


def rect_components(rects: list[Rectangle]) -> list[list[Rectangle]]:
    """Pieces of the union of closed rectangles, ordered by leftmost column."""
    parent = list(range(len(rects)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(len(rects)):
        for b in range(a + 1, len(rects)):
            if touches(rects[a], rects[b]):
                parent[find(a)] = find(b)
    groups: dict[int, list[Rectangle]] = {}
    for k, r in enumerate(rects):
        groups.setdefault(find(k), []).append(r)
    return sorted(groups.values(), key=lambda g: min((r.col_lo, r.row_lo) for r in g))


def cell_euler_characteristic(rects: list[Rectangle]) -> int:
    """Euler characteristic of the union of the closed rectangles (unit-cell complex)."""
    cells = {c for r in rects for c in r.cells()}
    verts, hedges, vedges = set(), set(), set()
    for i, j in cells:
        verts.update({(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)})
        hedges.update({(i, j), (i + 1, j)})
        vedges.update({(i, j), (i, j + 1)})
    return len(verts) - len(hedges) - len(vedges) + len(cells)


# -- split links --------------------------------------------------------------


def insert_bridges(
    d: SquareBridgeDiagram, cells: CellGrid, rects: list[Rectangle] | None = None
) -> tuple[CellGrid, list[Bridge]]:
    """Join the pieces of a split region by one bridge rectangle per gap.

    The pieces must sit left to right with disjoint column ranges.  The
    bridge between consecutive pieces spans the column gap from the right
    edge of one to the left edge of the next, and its rows run between the
    lower ends of the two facing vertical segments, so it touches both.
    """
    rects = decompose(cells) if rects is None else rects
    pieces = rect_components(rects)
    if len(pieces) < 2:
        return cells, []
    spans = [(min(r.col_lo for r in g), max(r.col_hi for r in g)) for g in pieces]
    for k in range(len(spans) - 1):
        if spans[k][1] >= spans[k + 1][0]:
            raise SplitLayoutUnsupported(
                f"split link: region pieces {k + 1} and {k + 2} overlap in columns "
                f"{spans[k + 1][0]}..{spans[k][1]}; bridges need the pieces laid out left "
                "to right with disjoint column ranges. Translate the sub-diagrams apart "
                "(this keeps the Legendrian type) and resubmit"
            )
    bridges = []
    new_cells: list[tuple[int, int]] = []
    for k in range(len(spans) - 1):
        right_col = spans[k][1]
        left_col = spans[k + 1][0]
        a = d.v(right_col).row_lo
        b = d.v(left_col).row_lo
        if a == b:
            raise SplitLayoutUnsupported(
                f"split link: no room for a bridge between pieces {k + 1} and {k + 2}"
            )
        rect = Rectangle(right_col, min(a, b), left_col, max(a, b))
        bridges.append(Bridge(rect, (k + 1, k + 2)))
        new_cells.extend(rect.cells())
    return cells.with_cells(new_cells), bridges


# -- merging ------------------------------------------------------------------


def _mergeable(r: Rectangle, s: Rectangle, d: SquareBridgeDiagram) -> bool:
    if r.col_hi != s.col_lo or (r.row_lo, r.row_hi) != (s.row_lo, s.row_hi):
        return False
    col = r.col_hi
    v = d.v(col)
    # the link must avoid the closed shared edge
    return not (v.row_lo <= r.row_hi and r.row_lo <= v.row_hi)


def merge(
    decomp: RegionDecomposition, d: SquareBridgeDiagram
) -> RegionDecomposition:
    """Fuse horizontally adjacent rectangles with equal row spans whose shared edge avoids the link.

    Scans left to right; each rectangle takes part in at most one fusion per
    pass, and passes repeat until nothing changes.  The result is reordered.
    """
    rects = sorted(decomp.rectangles, key=lambda r: r.key)
    records = list(decomp.merges)
    pass_no = 0
    while True:
        pass_no += 1
        used: set[int] = set()
        fused: list[tuple[int, int]] = []
        for a, r in enumerate(rects):
            if a in used:
                continue
            for b, s in enumerate(rects):
                if b == a or b in used or s.col_lo != r.col_hi:
                    continue
                if _mergeable(r, s, d):
                    used.update((a, b))
                    fused.append((a, b))
                    break
        if not fused:
            break
        out = [r for k, r in enumerate(rects) if k not in used]
        for a, b in fused:
            r, s = rects[a], rects[b]
            m = Rectangle(r.col_lo, r.row_lo, s.col_hi, r.row_hi)
            records.append(MergeRecord(r, s, m, r.col_hi, r.row_lo, r.row_hi, pass_no))
            out.append(m)
        rects = sorted(out, key=lambda r: r.key)
    return replace(decomp, rectangles=tuple(order(rects)), merges=tuple(records))


# -- pipeline entry -----------------------------------------------------------


def decomposition(
    d: SquareBridgeDiagram, *, bridge: bool = True, merge_rects: bool = True
) -> RegionDecomposition:
    """Cells, bridges, ordering and (optionally) merging for ``d``."""
    cells = interior_cells(d)
    rects = decompose(cells, d)
    bridges: list[Bridge] = []
    if bridge and len(rect_components(rects)) > 1:
        cells, bridges = insert_bridges(d, cells, rects)
        rects = rects + [b.rect for b in bridges]
    for piece in rect_components(rects):
        chi = cell_euler_characteristic(piece)
        if chi != 1:
            raise RegionNotSimplyConnected(
                f"the region bounded by the diagram has {1 - chi} hole(s); the rectangle "
                "cells then do not close up to a ball and the construction does not apply"
            )
    ordered = order(rects, cells)
    decomp = RegionDecomposition(
        d.p, d.q, cells, tuple(ordered), tuple(bridges), (), len(ordered)
    )
    if merge_rects:
        decomp = merge(decomp, d)
    return decomp
