import pytest
from hypothesis import given

import obforge
from obforge import sbd
from conftest import grid_diagrams
from oracles import front_tb

U1_TEXT = "sbd v1\nrows 2\ncols 2\nh 1 1 2\nh 2 1 2\nv 1 1 2\nv 2 1 2\n"


def test_u1_parses_to_single_square():
    d = sbd.parse(U1_TEXT)
    assert (d.p, d.q) == (2, 2)
    (comp,) = sbd.components(d)
    assert comp.corners == ((1, 1), (1, 2), (2, 2), (2, 1))


def test_comments_and_blank_lines_are_ignored():
    text = "# leading\n\nsbd v1  # header\nrows 2\ncols 2\nh 1 1 2\nh 2 1 2\n\nv 1 1 2\nv 2 1 2 # tail\n"
    assert sbd.parse(text) == sbd.parse(U1_TEXT)


def test_ranks_are_normalized():
    text = "sbd v1\nrows 2\ncols 2\nh 10 3 7\nh 20 3 7\nv 3 10 20\nv 7 10 20\n"
    assert sbd.emit(sbd.parse(text)) == U1_TEXT


@pytest.mark.parametrize(
    "text, error, condition",
    [
        ("sbd v2\n", sbd.DiagramSyntaxError, "syntax"),
        ("sbd v1\nrows 2\ncols 2\nh 1 1 x\n", sbd.DiagramSyntaxError, "syntax"),
        ("sbd v1\nrows 1\ncols 1\nh 1 1 2\nv 1 1 2\n", sbd.DiagramTooSmallError, "(1)"),
        ("sbd v1\nrows 2\ncols 2\nh 1 1 2\nh 1 1 2\nv 1 1 2\nv 2 1 2\n", sbd.CollinearityError, "(2)"),
        ("sbd v1\nrows 2\ncols 2\nh 1 1 2\nh 2 1 3\nv 1 1 2\nv 2 1 2\n", sbd.DanglingEndpointError, "(3)"),
        ("sbd v1\nrows 2\ncols 2\nh 1 1 2\nh 2 1 2\nv 1 1 2\nv 2 1 2\nsurgery 1 +2\n", sbd.DiagramSyntaxError, "syntax"),
        (
            "sbd v1\nrows 2\ncols 2\nh 1 1 2\nh 2 1 2\nv 1 1 2\nv 2 1 2\nsurgery 1 +1\nsurgery 1 -1\n",
            sbd.DiagramSyntaxError,
            "syntax",
        ),
    ],
)
def test_invalid_documents(text, error, condition):
    with pytest.raises(error) as info:
        sbd.parse(text)
    assert info.value.condition == condition


def test_syntax_error_reports_position():
    with pytest.raises(sbd.DiagramSyntaxError) as info:
        sbd.parse("sbd v1\nrows 2\ncols 2\nh 1 1 two\n")
    assert (info.value.line, info.value.column) == (4, 7)


def test_surgery_lines_survive_round_trip(fig8):
    assert fig8.surgery == ((1, 1),)
    assert sbd.parse(sbd.emit(fig8)) == fig8


def test_component_counts():
    assert len(sbd.components(obforge.fixture("u1"))) == 1
    assert len(sbd.components(obforge.fixture("split"))) == 2
    (t,) = sbd.components(obforge.fixture("tref"))
    assert len(t.corners) == 10
    (f,) = sbd.components(obforge.fixture("fig8"))
    assert len(f.corners) == 12


def test_classical_u1(u1):
    cd = sbd.classical(u1)
    assert (cd.left_cusps, cd.writhe, cd.tb) == ((1,), (0,), (-1,))


def test_classical_fixtures_match_front_oracle(fixture_name):
    d = obforge.fixture(fixture_name)
    assert sbd.classical(d).tb == front_tb(d)


def test_frozen_tb_values():
    # oracle values recorded in the fixture files
    assert sbd.classical(obforge.fixture("tref")).tb == (1,)
    assert sbd.classical(obforge.fixture("fig8")).tb == (-3,)


def test_crossing_sign_table():
    assert sbd.crossing_sign(1, 1) == -1
    assert sbd.crossing_sign(1, -1) == 1
    assert sbd.crossing_sign(-1, -1) == -1


@given(grid_diagrams())
def test_emit_parse_round_trip(d):
    assert sbd.parse(sbd.emit(d)) == d


@given(grid_diagrams())
def test_every_corner_in_exactly_one_component(d):
    comps = sbd.components(d)
    seen = [c for comp in comps for c in comp.corners]
    assert sorted(seen) == sorted(d.corners())
    assert len(seen) == 2 * d.p


@given(grid_diagrams())
def test_tb_matches_front_oracle(d):
    cd = sbd.classical(d)
    assert cd.tb == front_tb(d)
    assert all(t == w - c for t, w, c in zip(cd.tb, cd.writhe, cd.left_cusps))


@pytest.mark.parametrize(
    "xs, os, poly",
    [((1, 5, 4, 3, 2), (4, 3, 2, 1, 5), (1, -1, 1)), ((2, 1, 5, 6, 3, 4), (6, 3, 2, 4, 5, 1), (1, -3, 1))],
    ids=["trefoil", "figure-eight"],
)
def test_fixture_knot_types(xs, os, poly):
    from oracles import alexander

    assert alexander(xs, os) == poly


def test_fixture_files_are_the_searched_grids():
    assert obforge.fixture("tref") == sbd.from_grid((1, 5, 4, 3, 2), (4, 3, 2, 1, 5))
    assert obforge.fixture("fig8").without_surgery() == sbd.from_grid((2, 1, 5, 6, 3, 4), (6, 3, 2, 4, 5, 1))
