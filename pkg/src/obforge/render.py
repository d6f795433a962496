"""Deterministic SVG for the four views of a pipeline run.

All coordinates are integers; elements are emitted in a fixed order so the
same input always gives the same bytes.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .region import RegionDecomposition
from .ribbon import H, Fatgraph, handle_labels
from .sbd import SquareBridgeDiagram, components, is_left_cusp, junctions

__all__ = ["VIEWS", "render_svg"]

VIEWS = ("diagram", "front", "region", "page")

S = 40  # lattice spacing, even so half steps stay integral
M = 40  # margin
GAP = 6  # half-width of the break in an under-strand


class _Canvas:
    def __init__(self, width: int, height: int, title: str):
        self.width, self.height = width, height
        self.items: list[str] = []
        self.title = title

    def add(self, tag: str, text: str | None = None, **attrs) -> None:
        parts = " ".join(f'{k.rstrip("_").replace("_", "-")}="{v}"' for k, v in attrs.items())
        if text is None:
            self.items.append(f"  <{tag} {parts}/>")
        else:
            self.items.append(f"  <{tag} {parts}>{escape(text)}</{tag}>")

    def line(self, x1, y1, x2, y2, **attrs):
        self.add("line", x1=x1, y1=y1, x2=x2, y2=y2, **attrs)

    def label(self, x, y, text, **attrs):
        attrs.setdefault("font_size", 12)
        self.add("text", text, x=x, y=y, text_anchor="middle", font_family="monospace", **attrs)

    def document(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">\n'
            f"  <title>{escape(self.title)}</title>\n"
        )
        return head + "\n".join(self.items) + "\n</svg>\n"


def _gx(col: int) -> int:
    return M + (col - 1) * S


def _gy(d: SquareBridgeDiagram, row: int) -> int:
    # rows grow upward
    return M + (d.p - row) * S


def _grid_canvas(d: SquareBridgeDiagram, title: str) -> _Canvas:
    return _Canvas(2 * M + (d.q - 1) * S, 2 * M + (d.p - 1) * S, title)


def _diagram(d: SquareBridgeDiagram) -> str:
    c = _grid_canvas(d, f"square bridge diagram {d.p}x{d.q}")
    under: dict[int, list[int]] = {}
    for jn in junctions(d):
        under.setdefault(jn.col, []).append(jn.row)
    for s in d.vsegs:
        x = _gx(s.col)
        ys = [_gy(d, s.row_lo)]
        for row in sorted(under.get(s.col, [])):
            y = _gy(d, row)
            ys += [y + GAP, y - GAP]
        ys.append(_gy(d, s.row_hi))
        for k in range(0, len(ys), 2):
            c.line(x, ys[k], x, ys[k + 1], stroke="black", stroke_width=2, class_="v")
    for s in d.hsegs:
        y = _gy(d, s.row)
        c.line(_gx(s.col_lo), y, _gx(s.col_hi), y, stroke="black", stroke_width=2, class_="h")
    for r, col in d.corners():
        c.add("circle", cx=_gx(col), cy=_gy(d, r), r=3, fill="black", class_="corner")
    return c.document()


def _front(d: SquareBridgeDiagram) -> str:
    # (row, col) sits at y = (row - col)/2, z = (row + col)/2
    h = S // 2
    c = _Canvas(2 * M + (d.p + d.q - 2) * h, 2 * M + (d.p + d.q - 2) * h, "front projection")

    def pt(r, col):
        return M + (r - col + d.q - 1) * h, M + (d.p + d.q - r - col) * h

    for comp in components(d):
        xy = " ".join(f"{x},{y}" for x, y in (pt(r, col) for r, col in comp.corners))
        c.add("polygon", points=xy, fill="none", stroke="black", stroke_width=2, class_=f"component-{comp.id}")
    for r, col in d.corners():
        x, y = pt(r, col)
        if is_left_cusp(d, r, col):
            c.add("circle", cx=x, cy=y, r=4, fill="red", class_="left-cusp")
        elif d.h(r).col_lo == col and d.v(col).row_hi == r:
            c.add("circle", cx=x, cy=y, r=4, fill="none", stroke="red", class_="right-cusp")
    return c.document()


def _region(d: SquareBridgeDiagram, decomp: RegionDecomposition) -> str:
    c = _grid_canvas(d, f"region with {decomp.N} rectangles")
    bridge_keys = {b.rect.key for b in decomp.bridges}
    for r in decomp.rectangles:
        x0, x1 = _gx(r.col_lo), _gx(r.col_hi)
        y0, y1 = _gy(d, r.row_hi), _gy(d, r.row_lo)
        fill = "#fde68a" if r.key in bridge_keys else "#dbeafe"
        c.add("rect", x=x0, y=y0, width=x1 - x0, height=y1 - y0, fill=fill, stroke="#1e3a8a", class_="rectangle")
        c.label((x0 + x1) // 2, (y0 + y1) // 2 + 4, str(r.index), class_="order")
    for s in d.hsegs:
        y = _gy(d, s.row)
        c.line(_gx(s.col_lo), y, _gx(s.col_hi), y, stroke="black", stroke_width=2)
    for s in d.vsegs:
        x = _gx(s.col)
        c.line(x, _gy(d, s.row_lo), x, _gy(d, s.row_hi), stroke="black", stroke_width=2)
    return c.document()


def _page(d: SquareBridgeDiagram, decomp: RegionDecomposition, fg: Fatgraph) -> str:
    c = _grid_canvas(d, f"page: {len(fg.disks)} disks, {len(fg.bands)} bands")
    w = 8
    for dk in fg.disks:
        if dk.kind == H:
            y = _gy(d, dk.line)
            x0, x1 = _gx(dk.lo), _gx(dk.hi)
            c.add("rect", x=x0 - w, y=y - w, width=x1 - x0 + 2 * w, height=2 * w,
                  fill="#e5e7eb", stroke="black", class_="disk")
        else:
            x = _gx(dk.line)
            y0, y1 = _gy(d, dk.hi), _gy(d, dk.lo)
            c.add("rect", x=x - w, y=y0 - w, width=2 * w, height=y1 - y0 + 2 * w,
                  fill="#f3f4f6", stroke="black", class_="disk")
    handles = handle_labels(decomp, fg)
    for b in fg.bands:
        x, y = _gx(b.col), _gy(d, b.row)
        c.add("rect", x=x - 4, y=y - 4, width=8, height=8, fill="#2563eb", class_="band")
        if b.index in handles:
            k = handles[b.index]
            c.label(x + 14, y - 10, f"{k},{k}", font_size=10, class_="handle")
    first = fg.disks[0] if fg.disks else None
    if first is not None:
        if first.kind == H:
            x, y = (_gx(first.lo) + _gx(first.hi)) // 2, _gy(d, first.line) + 22
        else:
            x, y = _gx(first.line) - 20, (_gy(d, first.lo) + _gy(d, first.hi)) // 2
        c.label(x, y, "0", font_size=10, class_="handle")
    return c.document()


def render_svg(
    view: str,
    d: SquareBridgeDiagram,
    decomp: RegionDecomposition | None = None,
    fg: Fatgraph | None = None,
) -> str:
    if view == "diagram":
        return _diagram(d)
    if view == "front":
        return _front(d)
    if view == "region":
        return _region(d, decomp)
    if view == "page":
        return _page(d, decomp, fg)
    raise ValueError(f"unknown view {view!r}; expected one of {', '.join(VIEWS)}")
