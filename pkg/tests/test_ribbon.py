import random

import pytest
from hypothesis import given

import obforge
from obforge import region, ribbon, sbd
from conftest import grid_diagrams
from oracles import torus_boundary, torus_euler


def page(d, **kw):
    dec = region.decomposition(d, **kw)
    fg = ribbon.build_skeleton(dec)
    return dec, fg, ribbon.page_stats(fg)


def test_u1_annulus(u1):
    dec, fg, st = page(u1)
    assert (len(fg.disks), len(fg.bands)) == (4, 4)
    assert (st.euler, st.boundary, st.genus) == (0, 2, 0)
    assert ribbon.kappa(u1) == 4


def test_tref_page(tref):
    dec, fg, st = page(tref)
    assert (st.disks, st.bands) == (10, 17)
    assert (st.euler, st.boundary, st.genus) == (-7, 3, 3)
    assert ribbon.kappa(tref) == 17
    assert st.euler == tref.p + tref.q - ribbon.kappa(tref)


def test_fig8_page(fig8):
    _, _, st = page(fig8)
    assert (st.euler, st.boundary, st.genus) == (-9, 5, 3)
    assert st.disks - st.bands == -9
    _, _, un = page(fig8, merge_rects=False)
    assert un.euler == -10 and un.bands > st.bands
    assert ribbon.kappa(fig8) == 22


@pytest.mark.parametrize("p", range(2, 10))
@pytest.mark.parametrize("q", range(2, 10))
def test_torus_page_boundary_is_gcd(p, q):
    fg = ribbon.torus_fatgraph(p, q)
    assert ribbon.boundary_components(fg) == torus_boundary(p, q)
    assert fg.euler == torus_euler(p, q)


def test_torus_genera_from_examples():
    assert ribbon.page_stats(ribbon.torus_fatgraph(5, 5)).genus == 6
    assert ribbon.page_stats(ribbon.torus_fatgraph(6, 6)).genus == 10


def test_rectangle_curves_have_framing_minus_one(fixture_name):
    d = obforge.fixture(fixture_name)
    dec, fg, _ = page(d)
    for r in dec.rectangles:
        assert ribbon.page_framing(ribbon.rectangle_cycle(fg, r)) == -1


def test_link_framing_is_tb(fixture_name):
    d = obforge.fixture(fixture_name)
    _, fg, _ = page(d)
    cycles = ribbon.embed_link(d, fg)
    assert tuple(ribbon.page_framing(c) for c in cycles) == sbd.classical(d).tb


def test_link_cycles_use_one_band_per_corner(tref, fig8):
    for d, n in ((tref, 10), (fig8, 12)):
        _, fg, _ = page(d)
        (cyc,) = ribbon.embed_link(d, fg)
        assert len(cyc.corners) == n
        assert len({x // 2 for x in cyc.darts}) == n


def test_u1_link_is_the_rectangle_curve(u1):
    dec, fg, _ = page(u1)
    (cyc,) = ribbon.embed_link(u1, fg)
    assert cyc.corners == ribbon.rectangle_cycle(fg, dec.rect(1)).corners


def test_cshape_breaks_the_disk_count():
    # a column line carrying two separate skeleton arcs
    d = obforge.fixture("cshape")
    un, fg, st = page(d, merge_rects=False)
    assert st.disks == 9 != d.p + d.q
    assert st.euler == 1 - un.N
    assert ribbon.kappa(d) == 12 != d.p + d.q + un.N - 1


def test_handle_labels_count_rectangles(tref):
    dec, fg, _ = page(tref)
    labels = ribbon.handle_labels(dec, fg)
    assert sorted(labels.values()) == list(range(1, 9))


def test_boundary_does_not_depend_on_order(fig8):
    dec, fg, st = page(fig8)
    rng = random.Random(7)
    for _ in range(5):
        rects = list(dec.rectangles)
        rng.shuffle(rects)
        other = ribbon.build_skeleton(region.RegionDecomposition(dec.p, dec.q, dec.cells, tuple(rects)))
        assert ribbon.boundary_components(other) == st.boundary


def test_route_off_skeleton_raises(u1):
    _, fg, _ = page(u1)
    with pytest.raises(ribbon.EmbeddingGap):
        ribbon.route(fg, ((1, 1), (1, 3), (2, 3), (2, 1)), "bogus")


@given(grid_diagrams())
def test_page_invariants(d):
    try:
        dec, fg, st = page(d)
    except region.SplitLayoutUnsupported:
        return
    assert st.euler == st.disks - st.bands == 1 - dec.N
    assert (2 - st.euler - st.boundary) % 2 == 0
    assert 2 - st.euler - st.boundary >= 0
    assert fg.is_connected()


@given(grid_diagrams(max_size=9))
def test_framings(d):
    try:
        dec, fg, _ = page(d)
    except region.SplitLayoutUnsupported:
        return
    for r in dec.rectangles:
        assert ribbon.page_framing(ribbon.rectangle_cycle(fg, r)) == -1
    framings = tuple(ribbon.page_framing(c) for c in ribbon.embed_link(d, fg))
    assert framings == sbd.classical(d).tb
