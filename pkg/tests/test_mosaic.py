import itertools

import pytest
from hypothesis import given, strategies as st

from knotmosaic import tiles
from knotmosaic.enumeration import enumerate_mosaics
from knotmosaic.errors import NotAKnotMosaic, OutOfRange, ParseError
from knotmosaic.mosaic import (
    Mosaic,
    inject,
    inject_times,
    is_knot_mosaic,
    parse_tcode,
    serialize,
    submosaic,
    trace,
)

import mosaics as fx

P = parse_tcode


def test_parse_examples():
    m = P("000-021-034")
    assert m.n == 3
    assert m.rows() == [(0, 0, 0), (0, 2, 1), (0, 3, 4)]
    m = P("021-2(10)4-340")
    assert m[1, 1] == 10


@pytest.mark.parametrize("code", fx.APPENDIX_A)
def test_round_trip(code):
    assert serialize(P(code)) == code


@pytest.mark.parametrize("bad", ["", "00-0", "0a-00", "(11)0-00", "(1)0-00", "00-00-", "12-3(10)4", "0 0-00"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        P(bad)


def test_submosaic_examples():
    assert submosaic(P(fx.SUB_SOURCE), 3, (0, 1)) == P(fx.SUB_3_AT_0_1)
    assert submosaic(P(fx.TREFOIL_4), 2, (1, 2)) == P(fx.SUB_2_AT_1_2_OF_TREFOIL)
    m = P(fx.TREFOIL_4)
    assert submosaic(m, 4, (0, 0)) == m
    with pytest.raises(OutOfRange):
        submosaic(m, 2, (3, 0))
    with pytest.raises(OutOfRange):
        submosaic(m, 5, (0, 0))


def test_example_classification():
    assert not is_knot_mosaic(P(fx.NON_KNOT_4))
    for code in (fx.TREFOIL_4, fx.HOPF_4, fx.FIGURE_EIGHT_5, fx.BORROMEAN_6):
        assert is_knot_mosaic(P(code))
    for n in range(1, 6):
        assert is_knot_mosaic(Mosaic.blank(n))


def test_boundary_rule_exhaustive_small():
    for n in (1, 2):
        for cells in itertools.product(range(11), repeat=n * n):
            m = Mosaic(n, cells)
            on_boundary = any(
                tiles.has_connection(m[i, j], e)
                for i in range(n) for j in range(n)
                for e, hit in ((tiles.T, i == 0), (tiles.B, i == n - 1), (tiles.L, j == 0), (tiles.R, j == n - 1))
                if hit
            )
            if on_boundary:
                assert not is_knot_mosaic(m)


def test_profile_preserving_swaps_keep_validity():
    same_profile = {7: (8, 9, 10), 8: (7, 9, 10), 9: (7, 8, 10), 10: (7, 8, 9)}
    for code in fx.APPENDIX_A:
        m = P(code)
        for pos, t in enumerate(m.cells):
            for u in same_profile.get(t, ()):
                cells = list(m.cells)
                cells[pos] = u
                assert is_knot_mosaic(Mosaic(3, tuple(cells)))


def test_inject():
    assert inject(P(fx.TREFOIL_4)) == P(fx.TREFOIL_INJECTED)
    assert inject(Mosaic.blank(3)) == Mosaic.blank(4)
    assert inject_times(Mosaic.blank(1), 3) == Mosaic.blank(4)
    for code in fx.APPENDIX_A:
        assert is_knot_mosaic(inject(P(code)))


@given(st.lists(st.integers(0, 10), min_size=9, max_size=9))
def test_inject_preserves_validity_both_ways(cells):
    m = Mosaic(3, tuple(cells))
    assert is_knot_mosaic(m) == is_knot_mosaic(inject(m))


def test_rotation_round_trip_and_validity():
    for code in fx.APPENDIX_A + [fx.TREFOIL_4, fx.HOPF_4]:
        m = P(code)
        assert m.rotated(4) == m
        assert is_knot_mosaic(m.rotated(1))


def test_trace():
    assert trace(Mosaic.blank(3)) == trace(Mosaic.blank(3)).__class__(0, 0, ())
    s = trace(P("000-021-034"))
    assert (s.components, s.crossings) == (1, 0)
    s = trace(P(fx.HOPF_4))
    assert (s.components, s.crossings) == (2, 2)
    s = trace(P(fx.TREFOIL_4))
    assert (s.components, s.crossings) == (1, 3)
    assert trace(P(fx.BORROMEAN_6)).components == 3
    assert trace(P(fx.FIGURE_EIGHT_5)).components == 1
    with pytest.raises(NotAKnotMosaic):
        trace(P(fx.NON_KNOT_4))


def test_trace_uses_every_strand_once():
    for m in enumerate_mosaics(4):
        s = trace(m)
        assert sum(s.lengths) == sum(len(tiles.strands(t)) for t in m.cells)
