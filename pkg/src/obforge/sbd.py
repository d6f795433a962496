"""Square bridge diagrams: parsing, validation, components and classical invariants.

A diagram is stored purely by ranks.  Row ``i`` stands for the line
``z = -y + a_i`` carrying the horizontal segment ``h_i`` and column ``j``
for the line ``z = y + b_j`` carrying the vertical segment ``v_j``.  The
lattice point ``(i, j)`` therefore sits at front coordinates
``y = (a_i - b_j)/2``, ``z = (a_i + b_j)/2``; every geometric question
asked below only needs the order of the ``a_i`` and ``b_j``.

Horizontal segments always pass over vertical ones.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "HSeg",
    "VSeg",
    "SquareBridgeDiagram",
    "OrientedComponent",
    "Junction",
    "ClassicalData",
    "DiagramError",
    "DiagramSyntaxError",
    "CollinearityError",
    "DanglingEndpointError",
    "CornerDegreeError",
    "DiagramTooSmallError",
    "parse",
    "emit",
    "from_segments",
    "from_grid",
    "components",
    "junctions",
    "crossing_sign",
    "is_left_cusp",
    "classical",
]


class DiagramError(ValueError):
    """A document that is not a valid square bridge diagram.

    ``condition`` names the violated defining condition (1)-(4) or
    ``"syntax"``.
    """

    condition = "syntax"


class DiagramSyntaxError(DiagramError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class CollinearityError(DiagramError):
    condition = "(2)"


class DanglingEndpointError(DiagramError):
    condition = "(3)"


class CornerDegreeError(DiagramError):
    condition = "(3)"


class DiagramTooSmallError(DiagramError):
    condition = "(1)"


@dataclass(frozen=True, order=True)
class HSeg:
    row: int
    col_lo: int
    col_hi: int

    def covers_col(self, j: int) -> bool:
        return self.col_lo <= j <= self.col_hi

    def covers_strip(self, j: int) -> bool:
        """True if the segment spans the column strip between lines j and j+1."""
        return self.col_lo <= j < self.col_hi


@dataclass(frozen=True, order=True)
class VSeg:
    col: int
    row_lo: int
    row_hi: int

    def covers_row(self, i: int) -> bool:
        return self.row_lo <= i <= self.row_hi


@dataclass(frozen=True)
class SquareBridgeDiagram:
    """Validated diagram; ``hsegs[i-1]`` lies on row ``i``, ``vsegs[j-1]`` on column ``j``.

    ``surgery`` holds the raw ``(component id, coefficient)`` pairs read from
    the document; they are checked against the components by
    :func:`obforge.openbook.surgery_spec`.
    """

    p: int
    q: int
    hsegs: tuple[HSeg, ...]
    vsegs: tuple[VSeg, ...]
    surgery: tuple[tuple[int, int], ...] = ()

    def h(self, i: int) -> HSeg:
        return self.hsegs[i - 1]

    def v(self, j: int) -> VSeg:
        return self.vsegs[j - 1]

    def corners(self) -> list[tuple[int, int]]:
        return sorted((s.row, c) for s in self.hsegs for c in (s.col_lo, s.col_hi))

    def without_surgery(self) -> SquareBridgeDiagram:
        return SquareBridgeDiagram(self.p, self.q, self.hsegs, self.vsegs)


@dataclass(frozen=True)
class OrientedComponent:
    """One closed loop of the diagram.

    ``corners`` is the cyclic traversal starting at the smallest corner and
    leaving it along its horizontal segment; ``corners[0] -> corners[1]`` is
    horizontal, ``corners[1] -> corners[2]`` vertical, and so on.
    ``orientation`` is ``+1`` for that canonical direction, ``-1`` if reversed.
    """

    id: int
    corners: tuple[tuple[int, int], ...]
    orientation: int = 1

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(sorted({r for r, _ in self.corners}))

    @property
    def cols(self) -> tuple[int, ...]:
        return tuple(sorted({c for _, c in self.corners}))

    def hsteps(self) -> list[tuple[int, int, int]]:
        """Horizontal moves as ``(row, col_from, col_to)``."""
        return [(a[0], a[1], b[1]) for a, b in _pairs(self.corners) if a[0] == b[0]]

    def vsteps(self) -> list[tuple[int, int, int]]:
        """Vertical moves as ``(col, row_from, row_to)``."""
        return [(a[1], a[0], b[0]) for a, b in _pairs(self.corners) if a[1] == b[1]]

    def reversed(self) -> OrientedComponent:
        # keep corners[0] first; the first move becomes vertical
        rev = (self.corners[0],) + tuple(reversed(self.corners[1:]))
        return OrientedComponent(self.id, rev, -self.orientation)


def _pairs(cyc):
    n = len(cyc)
    return [(cyc[k], cyc[(k + 1) % n]) for k in range(n)]


@dataclass(frozen=True)
class Junction:
    """Interior crossing of ``h_row`` (over) with ``v_col`` (under)."""

    row: int
    col: int
    over: int
    under: int
    sign: int


@dataclass(frozen=True)
class ClassicalData:
    left_cusps: tuple[int, ...]
    writhe: tuple[int, ...]
    tb: tuple[int, ...]
    junctions: tuple[Junction, ...] = ()
    linking: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        for w, c, t in zip(self.writhe, self.left_cusps, self.tb):
            assert t == w - c


# -- construction ------------------------------------------------------------


def _rank_map(values: Iterable[int]) -> dict[int, int]:
    return {v: k for k, v in enumerate(sorted(set(values)), start=1)}


def from_segments(
    hsegs: Iterable[tuple[int, int, int]],
    vsegs: Iterable[tuple[int, int, int]],
    surgery: Iterable[tuple[int, int]] = (),
) -> SquareBridgeDiagram:
    """Build and validate a diagram from ``(row, lo, hi)`` and ``(col, lo, hi)`` triples.

    Row and column labels may be any integers; they are compressed to ranks.
    ``lo``/``hi`` may be given in either order.
    """
    hs = [(r, min(a, b), max(a, b)) for r, a, b in hsegs]
    vs = [(c, min(a, b), max(a, b)) for c, a, b in vsegs]
    p, q = len(hs), len(vs)
    if p < 2 or q < 2:
        raise DiagramTooSmallError(
            f"condition (1): need at least 2 horizontal and 2 vertical segments, got p={p}, q={q}"
        )
    for kind, segs in (("horizontal", hs), ("vertical", vs)):
        seen = {}
        for s in segs:
            if s[0] in seen:
                what = "row" if kind == "horizontal" else "column"
                raise CollinearityError(
                    f"condition (2): two {kind} segments on {what} {s[0]}"
                )
            seen[s[0]] = s
        for s in segs:
            if s[1] == s[2]:
                raise DanglingEndpointError(
                    f"condition (3): degenerate {kind} segment on line {s[0]}"
                )
    row_rank = _rank_map(r for r, _, _ in hs)
    col_rank = _rank_map(c for c, _, _ in vs)
    hmap = {r: (lo, hi) for r, lo, hi in hs}
    vmap = {c: (lo, hi) for c, lo, hi in vs}

    # condition (3): endpoints of each segment are endpoints of a perpendicular one
    for r, lo, hi in hs:
        for c in (lo, hi):
            if c not in vmap or r not in vmap[c]:
                raise DanglingEndpointError(
                    f"condition (3): endpoint (row {r}, col {c}) of the horizontal "
                    f"segment on row {r} is not a corner of a vertical segment"
                )
    for c, lo, hi in vs:
        for r in (lo, hi):
            if r not in hmap or c not in hmap[r]:
                raise DanglingEndpointError(
                    f"condition (3): endpoint (row {r}, col {c}) of the vertical "
                    f"segment on column {c} is not a corner of a horizontal segment"
                )
    hsegs_n = tuple(
        sorted(HSeg(row_rank[r], col_rank[lo], col_rank[hi]) for r, lo, hi in hs)
    )
    vsegs_n = tuple(
        sorted(VSeg(col_rank[c], row_rank[lo], row_rank[hi]) for c, lo, hi in vs)
    )
    _check_degrees(hsegs_n, vsegs_n)
    if p != q:
        # unreachable once (3) holds: 2p corners = 2q corners
        raise DanglingEndpointError(f"condition (3): p={p} != q={q}")
    return SquareBridgeDiagram(p, q, hsegs_n, vsegs_n, tuple(surgery))


def _check_degrees(hsegs, vsegs) -> None:
    deg: dict[tuple[int, int], int] = {}
    for s in hsegs:
        for c in (s.col_lo, s.col_hi):
            deg[(s.row, c)] = deg.get((s.row, c), 0) + 1
    for s in vsegs:
        for r in (s.row_lo, s.row_hi):
            deg[(r, s.col)] = deg.get((r, s.col), 0) + 1
    for pt, d in deg.items():
        if d != 2:
            raise CornerDegreeError(f"condition (3): corner {pt} has degree {d}, expected 2")


def from_grid(xs: Iterable[int], os: Iterable[int]) -> SquareBridgeDiagram:
    """Diagram whose row ``i`` runs between columns ``xs[i-1]`` and ``os[i-1]``.

    ``xs`` and ``os`` are permutations of ``1..n`` with ``xs[k] != os[k]``;
    this is the usual grid-diagram encoding.
    """
    xs, os = list(xs), list(os)
    n = len(xs)
    hs = [(i + 1, xs[i], os[i]) for i in range(n)]
    rows_at: dict[int, list[int]] = {}
    for i in range(n):
        rows_at.setdefault(xs[i], []).append(i + 1)
        rows_at.setdefault(os[i], []).append(i + 1)
    vs = []
    for c, rows in rows_at.items():
        if len(rows) != 2:
            raise CornerDegreeError(f"condition (3): column {c} has {len(rows)} corners")
        vs.append((c, rows[0], rows[1]))
    return from_segments(hs, vs)


# -- text format -------------------------------------------------------------

_INT = re.compile(r"[+-]?\d+\Z")


def parse(text: str) -> SquareBridgeDiagram:
    """Parse an ``sbd v1`` document."""
    header_seen = False
    rows = cols = None
    hs: list[tuple[int, int, int]] = []
    vs: list[tuple[int, int, int]] = []
    surgery: list[tuple[int, int]] = []
    surgered: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not toks:
            continue
        words = [t for t, _ in toks]
        if not header_seen:
            if words != ["sbd", "v1"]:
                raise DiagramSyntaxError("expected header 'sbd v1'", lineno, toks[0][1])
            header_seen = True
            continue

        def ints(n):
            if len(toks) != n + 1:
                col = toks[min(len(toks), n + 1) - 1][1]
                raise DiagramSyntaxError(
                    f"'{words[0]}' takes {n} argument(s), got {len(toks) - 1}", lineno, col
                )
            out = []
            for tok, col in toks[1:]:
                if not _INT.match(tok):
                    raise DiagramSyntaxError(f"expected an integer, got {tok!r}", lineno, col)
                out.append(int(tok))
            return out

        key = words[0]
        if key == "rows":
            if rows is not None:
                raise DiagramSyntaxError("duplicate 'rows' declaration", lineno, toks[0][1])
            (rows,) = ints(1)
        elif key == "cols":
            if cols is not None:
                raise DiagramSyntaxError("duplicate 'cols' declaration", lineno, toks[0][1])
            (cols,) = ints(1)
        elif key == "h":
            hs.append(tuple(ints(3)))
        elif key == "v":
            vs.append(tuple(ints(3)))
        elif key == "surgery":
            if len(toks) != 3:
                raise DiagramSyntaxError("'surgery' takes 2 arguments", lineno, toks[0][1])
            if not _INT.match(words[1]):
                raise DiagramSyntaxError(
                    f"expected a component id, got {words[1]!r}", lineno, toks[1][1]
                )
            if words[2] not in ("+1", "-1"):
                raise DiagramSyntaxError(
                    f"surgery coefficient must be +1 or -1, got {words[2]!r}", lineno, toks[2][1]
                )
            cid = int(words[1])
            if cid in surgered:
                raise DiagramSyntaxError(
                    f"duplicate surgery declaration for component {cid}", lineno, toks[0][1]
                )
            surgered.add(cid)
            surgery.append((cid, int(words[2])))
        else:
            raise DiagramSyntaxError(f"unknown keyword {key!r}", lineno, toks[0][1])
    if not header_seen:
        raise DiagramSyntaxError("empty document, expected header 'sbd v1'", 1)
    last = len(text.splitlines()) or 1
    if rows is None or cols is None:
        raise DiagramSyntaxError("missing 'rows' or 'cols' declaration", last)
    if len(hs) != rows:
        raise DiagramSyntaxError(f"'rows {rows}' declared but {len(hs)} 'h' lines given", last)
    if len(vs) != cols:
        raise DiagramSyntaxError(f"'cols {cols}' declared but {len(vs)} 'v' lines given", last)
    return from_segments(hs, vs, sorted(surgery))


def emit(d: SquareBridgeDiagram) -> str:
    """Canonical ``sbd v1`` text for ``d``."""
    out = ["sbd v1", f"rows {d.p}", f"cols {d.q}"]
    out += [f"h {s.row} {s.col_lo} {s.col_hi}" for s in d.hsegs]
    out += [f"v {s.col} {s.row_lo} {s.row_hi}" for s in d.vsegs]
    out += [f"surgery {c} {k:+d}" for c, k in d.surgery]
    return "\n".join(out) + "\n"


# -- components ---------------------------------------------------------------


def components(d: SquareBridgeDiagram) -> list[OrientedComponent]:
    """Closed loops of ``d`` in canonical order with canonical orientation."""
    seen: set[tuple[int, int]] = set()
    loops = []
    for start in d.corners():
        if start in seen:
            continue
        # smallest unseen corner is the col_lo end of its row's segment
        cyc = [start]
        r, c = start
        horizontal = True
        while True:
            if horizontal:
                s = d.h(r)
                c = s.col_hi if c == s.col_lo else s.col_lo
            else:
                s = d.v(c)
                r = s.row_hi if r == s.row_lo else s.row_lo
            horizontal = not horizontal
            if (r, c) == start:
                break
            cyc.append((r, c))
        seen.update(cyc)
        loops.append(tuple(cyc))
    loops.sort(key=min)
    return [OrientedComponent(k, cyc) for k, cyc in enumerate(loops, start=1)]


def _directions(comps: list[OrientedComponent]):
    """Map row -> (component id, +-1 along cols) and col -> (id, +-1 along rows)."""
    hdir: dict[int, tuple[int, int]] = {}
    vdir: dict[int, tuple[int, int]] = {}
    for comp in comps:
        for (r0, c0), (r1, c1) in _pairs(comp.corners):
            if r0 == r1:
                hdir[r0] = (comp.id, 1 if c1 > c0 else -1)
            else:
                vdir[c0] = (comp.id, 1 if r1 > r0 else -1)
    return hdir, vdir


def crossing_sign(h_direction: int, v_direction: int) -> int:
    """Sign of a junction, horizontal strand over vertical.

    Moving toward larger columns along a row line is the front direction
    ``(-1, 1)`` in ``(y, z)``; toward larger rows along a column line is
    ``(1, 1)``.  The sign is that of ``over x under``, which reduces to
    ``-h_direction * v_direction``.
    """
    return -h_direction * v_direction


def is_left_cusp(d: SquareBridgeDiagram, row: int, col: int) -> bool:
    """Corner is a local minimum of ``y = (a_row - b_col)/2`` along the loop."""
    return d.h(row).col_hi == col and d.v(col).row_lo == row


def junctions(d: SquareBridgeDiagram, comps: list[OrientedComponent] | None = None) -> list[Junction]:
    comps = components(d) if comps is None else comps
    hdir, vdir = _directions(comps)
    out = []
    for s in d.hsegs:
        for j in range(s.col_lo + 1, s.col_hi):
            t = d.v(j)
            if t.row_lo < s.row < t.row_hi:
                (ci, sh), (cj, sv) = hdir[s.row], vdir[j]
                out.append(Junction(s.row, j, ci, cj, crossing_sign(sh, sv)))
    return out


def classical(d: SquareBridgeDiagram, comps: list[OrientedComponent] | None = None) -> ClassicalData:
    """Left cusps, self-writhe and Thurston-Bennequin number of every component."""
    comps = components(d) if comps is None else comps
    js = junctions(d, comps)
    n = len(comps)
    cusps = [0] * n
    writhe = [0] * n
    for comp in comps:
        cusps[comp.id - 1] = sum(1 for r, c in comp.corners if is_left_cusp(d, r, c))
    pair: dict[tuple[int, int], int] = {}
    for jn in js:
        if jn.over == jn.under:
            writhe[jn.over - 1] += jn.sign
        else:
            key = (min(jn.over, jn.under), max(jn.over, jn.under))
            pair[key] = pair.get(key, 0) + jn.sign
    # each pair of loops crosses an even number of times
    linking = tuple((a, b, s // 2) for (a, b), s in sorted(pair.items()))
    tb = tuple(w - c for w, c in zip(writhe, cusps))
    return ClassicalData(tuple(cusps), tuple(writhe), tb, tuple(js), linking)
