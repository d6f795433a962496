"""The ribbon of the rectangle skeleton, as a fatgraph.

Every row line ``i`` lifts to the Legendrian line ``{x = 1, z = -y + a_i}``
and every column line ``j`` to ``{x = -1, z = y + b_j}``.  The skeleton
arcs on those lines thicken to strips tangent to the contact planes (the
disks); at each rectangle corner a segment parallel to the x-axis joins the
two levels and thickens to a band.  With the page oriented by ``dα``, every
band meets a strip on the strip's edge facing the other level, and the
boundary runs along that edge toward larger columns on a row strip and
toward larger rows on a column strip.  So the rotation at a disk is just
the order of its bands along the arc, and the boundary walk is the usual
``alpha o sigma`` face permutation of an oriented ribbon graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .region import Rectangle, RegionDecomposition
from .sbd import OrientedComponent, SquareBridgeDiagram, components

__all__ = [
    "Disk",
    "Band",
    "Fatgraph",
    "SkeletonCycle",
    "PageStats",
    "EmbeddingGap",
    "build_skeleton",
    "torus_fatgraph",
    "kappa",
    "boundary_cycles",
    "boundary_components",
    "page_stats",
    "route",
    "rectangle_cycle",
    "embed_link",
    "page_framing",
    "handle_labels",
]

H, V = "H", "V"


class EmbeddingGap(AssertionError):
    """A curve that should lie on the skeleton leaves it."""


@dataclass(frozen=True)
class Disk:
    """A strip around one maximal skeleton arc; ``bands`` in rotation order."""

    index: int
    kind: str  # "H" (row line) or "V" (column line)
    line: int
    lo: int
    hi: int
    bands: tuple[int, ...]

    def covers(self, a: int, b: int) -> bool:
        return self.lo <= min(a, b) and max(a, b) <= self.hi


@dataclass(frozen=True)
class Band:
    index: int
    row: int
    col: int
    hdisk: int
    vdisk: int


@dataclass(frozen=True)
class Fatgraph:
    """Disks joined by bands.

    Darts are band ends: ``2*b`` is the row-strip end of band ``b`` and
    ``2*b + 1`` its column-strip end.
    """

    p: int
    q: int
    disks: tuple[Disk, ...]
    bands: tuple[Band, ...]

    @property
    def euler(self) -> int:
        return len(self.disks) - len(self.bands)

    def band_at(self, row: int, col: int) -> Band | None:
        return self._band_index().get((row, col))

    def _band_index(self):
        idx = self.__dict__.get("_bidx")
        if idx is None:
            idx = {(b.row, b.col): b for b in self.bands}
            object.__setattr__(self, "_bidx", idx)
        return idx

    def disk_on(self, kind: str, line: int, a: int, b: int) -> Disk | None:
        for dk in self.disks:
            if dk.kind == kind and dk.line == line and dk.covers(a, b):
                return dk
        return None

    def dart_disk(self, dart: int) -> int:
        b = self.bands[dart // 2]
        return b.vdisk if dart % 2 else b.hdisk

    def sigma(self, dart: int) -> int:
        """Next dart counterclockwise around the dart's disk."""
        dk = self.disks[self.dart_disk(dart)]
        k = dk.bands.index(dart // 2)
        nxt = dk.bands[(k + 1) % len(dk.bands)]
        return 2 * nxt + dart % 2

    def is_connected(self) -> bool:
        if not self.disks:
            return True
        adj: dict[int, set[int]] = {dk.index: set() for dk in self.disks}
        for b in self.bands:
            adj[b.hdisk].add(b.vdisk)
            adj[b.vdisk].add(b.hdisk)
        seen, stack = {0}, [0]
        while stack:
            for m in adj[stack.pop()]:
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        return len(seen) == len(self.disks)


@dataclass(frozen=True)
class SkeletonCycle:
    """A closed curve on the page.

    ``corners[k] -> corners[k+1]`` runs inside disk ``disks[k]``; the kinds
    alternate starting with ``first``.  At each corner the curve crosses the
    band there, entering through ``darts[2k]`` and leaving through
    ``darts[2k+1]``.
    """

    label: str
    corners: tuple[tuple[int, int], ...]
    first: str
    disks: tuple[int, ...]
    darts: tuple[int, ...]

    def kind(self, k: int) -> str:
        return self.first if k % 2 == 0 else (V if self.first == H else H)

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "corners": [list(c) for c in self.corners],
            "darts": list(self.darts),
        }


@dataclass(frozen=True)
class PageStats:
    euler: int
    boundary: int
    genus: int
    disks: int
    bands: int
    kappa: int


# -- construction -------------------------------------------------------------


def _merge_intervals(ivs):
    out = []
    for lo, hi in sorted(ivs):
        if out and lo <= out[-1][1]:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return out


def _assemble(p, q, hivs, vivs, points) -> Fatgraph:
    """Fatgraph from arc intervals per line and band lattice points."""
    arcs = []
    for kind, ivs in ((H, hivs), (V, vivs)):
        for line in sorted(ivs):
            for lo, hi in _merge_intervals(ivs[line]):
                arcs.append((kind, line, lo, hi))
    pts = sorted(points)
    bands = []
    members: list[list[int]] = [[] for _ in arcs]
    lookup: dict[tuple[str, int], list[int]] = {}
    for k, (kind, line, _, _) in enumerate(arcs):
        lookup.setdefault((kind, line), []).append(k)

    def find(kind, line, pos):
        for k in lookup.get((kind, line), ()):
            if arcs[k][2] <= pos <= arcs[k][3]:
                return k
        raise EmbeddingGap(f"no {kind}-arc on line {line} through {pos}")

    for b, (r, c) in enumerate(pts):
        hk, vk = find(H, r, c), find(V, c, r)
        bands.append(Band(b, r, c, hk, vk))
        members[hk].append(b)
        members[vk].append(b)
    disks = []
    for k, (kind, line, lo, hi) in enumerate(arcs):
        # row strips: increasing column; column strips: increasing row
        pos = (lambda b: pts[b][1]) if kind == H else (lambda b: pts[b][0])
        disks.append(Disk(k, kind, line, lo, hi, tuple(sorted(members[k], key=pos))))
    return Fatgraph(p, q, tuple(disks), tuple(bands))


def build_skeleton(decomp: RegionDecomposition) -> Fatgraph:
    """Fatgraph of the union of the boundaries of the retained rectangles."""
    hivs: dict[int, list] = {}
    vivs: dict[int, list] = {}
    points = set()
    for r in decomp.rectangles:
        for row in (r.row_lo, r.row_hi):
            hivs.setdefault(row, []).append((r.col_lo, r.col_hi))
        for col in (r.col_lo, r.col_hi):
            vivs.setdefault(col, []).append((r.row_lo, r.row_hi))
        points.update(r.corners())
    return _assemble(decomp.p, decomp.q, hivs, vivs, points)


def torus_fatgraph(p: int, q: int) -> Fatgraph:
    """Full ``p x q`` grid: every row and column line, a band at every lattice point."""
    if p < 2 or q < 2:
        raise ValueError("torus_fatgraph needs p >= 2 and q >= 2")
    hivs = {i: [(1, q)] for i in range(1, p + 1)}
    vivs = {j: [(1, p)] for j in range(1, q + 1)}
    points = {(i, j) for i in range(1, p + 1) for j in range(1, q + 1)}
    return _assemble(p, q, hivs, vivs, points)


def kappa(d: SquareBridgeDiagram) -> int:
    """Meetings of column lines with horizontal segments, endpoints included."""
    return sum(s.col_hi - s.col_lo + 1 for s in d.hsegs)


# -- boundary -----------------------------------------------------------------


def boundary_cycles(fg: Fatgraph) -> list[list[int]]:
    """Orbits of the boundary walk ``dart -> alpha(sigma(dart))``."""
    n = 2 * len(fg.bands)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = fg.sigma(d) ^ 1
        out.append(cyc)
    return out


def boundary_components(fg: Fatgraph) -> int:
    return len(boundary_cycles(fg))


def page_stats(fg: Fatgraph, k: int | None = None) -> PageStats:
    chi = fg.euler
    bnd = boundary_components(fg)
    twice = 2 - chi - bnd
    if twice < 0 or twice % 2:
        raise AssertionError(
            f"parity failure: chi={chi}, boundary={bnd} gives non-integer genus; "
            "the band attachment convention is inconsistent"
        )
    return PageStats(chi, bnd, twice // 2, len(fg.disks), len(fg.bands), len(fg.bands) if k is None else k)


# -- curves on the page -------------------------------------------------------


def route(
    fg: Fatgraph, corners: tuple[tuple[int, int], ...], label: str
) -> SkeletonCycle:
    """Route the rectilinear loop through ``corners`` along disks and bands."""
    n = len(corners)
    first = H if corners[0][0] == corners[1 % n][0] else V
    disks, kinds = [], []
    for k in range(n):
        (r0, c0), (r1, c1) = corners[k], corners[(k + 1) % n]
        if r0 == r1:
            dk = fg.disk_on(H, r0, c0, c1)
            kinds.append(H)
        elif c0 == c1:
            dk = fg.disk_on(V, c0, r0, r1)
            kinds.append(V)
        else:
            raise EmbeddingGap(f"{label}: {corners[k]} -> {corners[(k + 1) % n]} is not axis-parallel")
        if dk is None:
            raise EmbeddingGap(f"{label}: move {corners[k]} -> {corners[(k + 1) % n]} leaves the skeleton")
        disks.append(dk.index)
    if any(kinds[k] == kinds[(k + 1) % n] for k in range(n)):
        raise EmbeddingGap(f"{label}: moves do not alternate between row and column strips")
    darts = []
    for k in range(n):
        band = fg.band_at(*corners[k])
        if band is None:
            raise EmbeddingGap(f"{label}: no band at corner {corners[k]}")
        arrive = kinds[k - 1]
        darts += [2 * band.index + (arrive == V), 2 * band.index + (arrive == H)]
    return SkeletonCycle(label, tuple(corners), first, tuple(disks), tuple(darts))


def rectangle_cycle(fg: Fatgraph, r: Rectangle) -> SkeletonCycle:
    return route(fg, r.corners(), f"gamma_{r.index}")


def embed_link(
    d: SquareBridgeDiagram, fg: Fatgraph, comps: list[OrientedComponent] | None = None
) -> list[SkeletonCycle]:
    comps = components(d) if comps is None else comps
    return [route(fg, c.corners, f"L{c.id}") for c in comps]


# -- framing ------------------------------------------------------------------
#
# The curve lives in R^3 on the lifted skeleton: row moves at x = 1, column
# moves at x = -1, band crossings parallel to the x-axis.  Its page push-off
# is displaced along J(tangent), J the rotation of the contact plane
# {dz + x dy = 0} sending e1 = (1, 0, 0) to e2(x) = (0, 1, -x).  The page
# framing is the linking number of the curve with that push-off.


# Coordinates are scaled by SCALE so that the half-integer lattice and the
# push-off distance 1/PUSH both stay integral.
PUSH = 1000
SCALE = 2 * PUSH


def _lift(cyc: SkeletonCycle) -> list[tuple[int, int, int]]:
    pts = []
    for k, (r, c) in enumerate(cyc.corners):
        y, z = (r - c) * PUSH, (r + c) * PUSH
        x_in = SCALE if cyc.kind(k - 1) == H else -SCALE
        pts.append((x_in, y, z))
        pts.append((-x_in, y, z))
    return pts


def _plane_normal(a, b, at_x):
    """J applied to the direction of segment a -> b, in the plane at ``at_x`` (scaled)."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx != 0:
        s = 1 if dx > 0 else -1
        return (0, s, -(at_x // SCALE) * s)
    s = 1 if dy > 0 else -1
    return (-s, 0, 0)


def _pushoff(pts):
    # displacement SCALE/PUSH = 2 along the sum of the two adjacent normals
    n = len(pts)
    out = []
    for k in range(n):
        prev, cur, nxt = pts[k - 1], pts[k], pts[(k + 1) % n]
        n1 = _plane_normal(prev, cur, cur[0])
        n2 = _plane_normal(cur, nxt, cur[0])
        out.append(tuple(cur[m] + 2 * (n1[m] + n2[m]) for m in range(3)))
    return out


class _Degenerate(Exception):
    pass


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _linking(c1, c2, w):
    """Linking number from an oblique projection, counted both ways."""
    (ay, by), (az, bz) = w
    # (y - x*ay/by, z - x*az/bz), each axis rescaled by a positive factor
    proj = lambda P: (by * P[1] - ay * P[0], bz * P[2] - az * P[0])
    segs = lambda pts: [(pts[k], pts[(k + 1) % len(pts)]) for k in range(len(pts))]
    s1 = [(a3, b3, proj(a3), proj(b3)) for a3, b3 in segs(c1)]
    s2 = [(c3, d3, proj(c3), proj(d3)) for c3, d3 in segs(c2)]
    over1 = over2 = 0
    for a3, b3, a, b in s1:
        ax0, ax1 = min(a[0], b[0]), max(a[0], b[0])
        ay0, ay1 = min(a[1], b[1]), max(a[1], b[1])
        for c3, d3, c, d in s2:
            if max(c[0], d[0]) < ax0 or min(c[0], d[0]) > ax1:
                continue
            if max(c[1], d[1]) < ay0 or min(c[1], d[1]) > ay1:
                continue
            o1, o2 = _orient(a, b, c), _orient(a, b, d)
            o3, o4 = _orient(c, d, a), _orient(c, d, b)
            if 0 in (o1, o2, o3, o4):
                raise _Degenerate
            if (o1 > 0) == (o2 > 0) or (o3 > 0) == (o4 > 0):
                continue
            # depths at the crossing: x1 = a + o3/(o3-o4) (b-a), x2 = c + o1/(o1-o2) (d-c)
            n1, m1 = a3[0] * (o3 - o4) + o3 * (b3[0] - a3[0]), o3 - o4
            n2, m2 = c3[0] * (o1 - o2) + o1 * (d3[0] - c3[0]), o1 - o2
            diff = n1 * m2 - n2 * m1
            if m1 * m2 < 0:
                diff = -diff
            if diff == 0:
                raise _Degenerate
            u = (b[0] - a[0], b[1] - a[1])
            v = (d[0] - c[0], d[1] - c[1])
            cross = u[0] * v[1] - u[1] * v[0]
            # viewer on the +x side; the nearer strand is over
            if diff > 0:
                over1 += 1 if cross > 0 else -1
            else:
                over2 += 1 if cross < 0 else -1
    if over1 != over2:
        raise _Degenerate
    return over1


_VIEWS = [((1, 7), (1, 11)), ((2, 13), (-1, 17)), ((-1, 19), (3, 23)), ((3, 29), (5, 31))]


def page_framing(cyc: SkeletonCycle) -> int:
    """Framing the page induces on ``cyc``, relative to the Seifert framing.

    Computed as the linking number of the lifted curve with its push-off
    inside the page, counted on an oblique projection in exact arithmetic.
    """
    pts = _lift(cyc)
    shifted = _pushoff(pts)
    for w in _VIEWS:
        try:
            return _linking(pts, shifted, w)
        except _Degenerate:
            continue
    raise AssertionError(f"{cyc.label}: every projection direction was degenerate")


# -- handle labels --------------------------------------------------------------


def handle_labels(decomp: RegionDecomposition, fg: Fatgraph) -> dict[int, int]:
    """Band index -> handle number, for the bands that are not on the initial arc.

    Bands are taken in construction order (by the first rectangle having a
    corner there).  A band whose two disks are already joined closes a new
    cycle and becomes the next numbered 1-handle; the rest form a spanning
    tree of disks, the thickened initial arc labelled 0.  There are always
    exactly ``N`` handles, since the skeleton has first Betti number ``N``.
    """
    parent = list(range(len(fg.disks)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    seq = []
    for r in decomp.rectangles:
        for corner in r.corners():
            b = fg.band_at(*corner)
            if b.index not in seq:
                seq.append(b.index)
    labels = {}
    for b in seq:
        band = fg.bands[b]
        x, y = find(band.hdisk), find(band.vdisk)
        if x == y:
            labels[b] = len(labels) + 1
        else:
            parent[x] = y
    return labels
