import itertools

import pytest

from knotmosaic import tiles
from knotmosaic.errors import NoConnectionPoint
from knotmosaic.mosaic import parse_tcode
from knotmosaic.tiles import Edge

import mosaics as fx


def mask(*edges):
    return sum(1 << e for e in edges)


def test_profile_table():
    T, R, B, L = Edge
    expected = [0, mask(L, B), mask(R, B), mask(T, R), mask(T, L), mask(L, R), mask(T, B)] + [0xF] * 4
    assert [tiles.connection_profile(t) for t in range(11)] == expected


def test_profile_sizes():
    sizes = [bin(tiles.connection_profile(t)).count("1") for t in range(11)]
    assert sizes == [0] + [2] * 6 + [4] * 4


def test_rotate90_cycles():
    assert tiles.rotate90(0) == 0
    assert [tiles.rotate90(t) for t in (1, 2, 3, 4)] == [2, 3, 4, 1]
    assert tiles.rotate90(5) == 6 and tiles.rotate90(6) == 5
    assert tiles.rotate90(7) == 8 and tiles.rotate90(9) == 10
    for t in range(11):
        assert tiles.rotate(t, 4) == t


@pytest.mark.parametrize("t,e", list(itertools.product(range(11), Edge)))
def test_rotation_moves_profile_with_edges(t, e):
    # the edge e of the turned tile came from edge e.rotated(-1) of the original
    src = e.rotated(-1)
    assert tiles.has_connection(tiles.rotate90(t), e) == tiles.has_connection(t, src)
    assert tiles.connection_profile(tiles.rotate90(t)) == tiles.rotate_profile(tiles.connection_profile(t))


def test_strand_exit_examples():
    assert tiles.strand_exit(9, Edge.TOP) == Edge.BOTTOM
    assert tiles.strand_exit(7, Edge.LEFT) == Edge.BOTTOM
    assert tiles.strand_exit(8, Edge.TOP) == Edge.LEFT
    with pytest.raises(NoConnectionPoint):
        tiles.strand_exit(5, Edge.TOP)
    with pytest.raises(NoConnectionPoint):
        tiles.strand_exit(0, Edge.LEFT)


def test_strand_exit_is_involution():
    for t in range(11):
        for e in tiles.connection_edges(t):
            assert tiles.strand_exit(t, tiles.strand_exit(t, e)) == e


def test_strands_cover_profile():
    for t in range(11):
        ends = [e for pair in tiles.strands(t) for e in pair]
        assert len(ends) == len(set(ends))
        assert set(ends) == set(tiles.connection_edges(t))


def test_rotation_class_counts():
    assert len(tiles.rotation_classes()) == 5
    assert len(tiles.rotation_classes(tiles.NUM_ORIENTED_TILES, tiles.rotate90_oriented)) == 9


def test_oriented_tiles_coherent():
    assert len(tiles.ORIENTED_TILES) == 29
    for t in range(29):
        signs = tiles.oriented_profile(t)
        base = tiles.underlying(t)
        assert signs.count(tiles.OUT) == signs.count(tiles.IN)
        for e in Edge:
            assert (signs[e] != tiles.NONE) == tiles.has_connection(base, e)
    assert tiles.oriented_profile(0) == (0, 0, 0, 0)
    assert sum(1 for t in range(29) if tiles.underlying(t) == 5) == 2
    # every unoriented tile is hit; 2^strands orientations each
    for t in range(11):
        fibre = [u for u in range(29) if tiles.underlying(u) == t]
        assert len(fibre) == 2 ** len(tiles.strands(t))


def test_oriented_rotation_is_permutation_of_order_four():
    rot = tiles.ORIENTED_ROTATE90
    assert sorted(rot) == list(range(29))
    for t in range(29):
        u = t
        for _ in range(4):
            u = rot[u]
        assert u == t
        assert tiles.underlying(rot[t]) == tiles.rotate90(tiles.underlying(t))


# --- independent check of the profile table --------------------------------
# Search every assignment of corner masks to the four arc tiles and of the two
# straight masks to the line tiles (consistent with the rotation table) and
# keep those under which the reference mosaics classify as expected.

def _valid(cells, n, profiles):
    def has(t, e):
        return bool(profiles[t] >> e & 1)
    for i in range(n):
        for j in range(n):
            t = cells[i * n + j]
            for e, (di, dj) in ((Edge.TOP, (-1, 0)), (Edge.RIGHT, (0, 1)), (Edge.BOTTOM, (1, 0)), (Edge.LEFT, (0, -1))):
                if not has(t, e):
                    continue
                a, b = i + di, j + dj
                if not (0 <= a < n and 0 <= b < n):
                    return False
                if not has(cells[a * n + b], Edge((e + 2) % 4)):
                    return False
    return True


def test_profile_assignment_is_forced_by_examples():
    T, R, B, L = Edge
    corners = [mask(L, B), mask(R, B), mask(T, R), mask(T, L)]
    lines = [mask(L, R), mask(T, B)]
    good = [fx.TREFOIL_4, fx.HOPF_4, fx.FIGURE_EIGHT_5, fx.BORROMEAN_6]
    survivors = []
    for first_arc, first_line in itertools.product(corners, lines):
        profiles = [0] * 11
        m = first_arc
        for t in (1, 2, 3, 4):
            profiles[t] = m
            m = tiles.rotate_profile(m)
        profiles[5] = first_line
        profiles[6] = tiles.rotate_profile(first_line)
        for t in (7, 8, 9, 10):
            profiles[t] = 0xF
        ok = all(_valid(parse_tcode(c).cells, parse_tcode(c).n, profiles) for c in good)
        m = parse_tcode(fx.NON_KNOT_4)
        if ok and not _valid(m.cells, m.n, profiles):
            survivors.append(tuple(profiles))
    assert survivors == [tiles.PROFILES]
