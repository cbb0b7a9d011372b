import pytest

from knotmosaic import oriented as om, tiles
from knotmosaic.enumeration import enumerate_mosaics
from knotmosaic.errors import CapExceeded, ParseError
from knotmosaic.mosaic import parse_tcode, trace

import mosaics as fx


def arc_tile(base, strand):
    return next(t for t, (b, d) in enumerate(tiles.ORIENTED_TILES) if b == base and d == (strand,))


def test_examples():
    tre = om.parse_oriented(fx.ORIENTED_TREFOIL)
    assert om.is_oriented_knot_mosaic(tre)
    assert om.forget_orientation(tre) == parse_tcode(fx.TREFOIL_4)
    odd = om.parse_oriented(fx.ORIENTED_NON_KNOT)
    assert not om.is_oriented_knot_mosaic(odd)
    # tile 22 carries a T10 here, where the unoriented non-knot has T9
    assert om.forget_orientation(odd) == parse_tcode("0540-4(10)41-9382-3640")
    assert tre.tcode() == fx.ORIENTED_TREFOIL


def test_parse_range():
    with pytest.raises(ParseError):
        om.parse_oriented("(29)0-00")


def test_circles():
    T, R, B, L = tiles.Edge
    # clockwise: top-left corner runs bottom -> right, and so on round
    cw = om.OrientedMosaic(2, (arc_tile(2, (B, R)), arc_tile(1, (L, B)), arc_tile(3, (R, T)), arc_tile(4, (T, L))))
    ccw = om.OrientedMosaic(2, (arc_tile(2, (R, B)), arc_tile(1, (B, L)), arc_tile(3, (T, R)), arc_tile(4, (L, T))))
    assert om.is_oriented_knot_mosaic(cw) and om.is_oriented_knot_mosaic(ccw)
    assert om.forget_orientation(cw) == parse_tcode("21-34")
    one_flipped = om.OrientedMosaic(2, (ccw.cells[0],) + cw.cells[1:])
    assert not om.is_oriented_knot_mosaic(one_flipped)
    assert om.enumerate_oriented(2) == [om.OrientedMosaic(2, (0,) * 4), min(cw, ccw), max(cw, ccw)]


def test_counts():
    assert len(om.enumerate_oriented(1)) == 1
    assert len(om.enumerate_oriented(2)) == 3
    assert om.brute_force_oriented_count(2) == 3
    with pytest.raises(CapExceeded):
        om.enumerate_oriented(4)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fibres(n):
    found = {}
    for m in om.enumerate_oriented(n):
        found.setdefault(om.forget_orientation(m), []).append(m)
    k = enumerate_mosaics(n)
    assert set(found) <= set(k)
    for m in k:
        assert len(found.get(m, [])) == 2 ** trace(m).components


def test_sign_conservation():
    for m in om.enumerate_oriented(3):
        n = m.n
        for i in range(n):
            for j in range(n):
                s = tiles.oriented_profile(m[i, j])
                if j + 1 < n:
                    assert s[1] + tiles.oriented_profile(m[i, j + 1])[3] == 0
                if i + 1 < n:
                    assert s[2] + tiles.oriented_profile(m[i + 1, j])[0] == 0


def test_enumeration_sorted():
    ms = om.enumerate_oriented(3)
    assert all(a < b for a, b in zip(ms, ms[1:]))
