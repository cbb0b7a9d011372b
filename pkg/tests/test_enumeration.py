import itertools
import os

import pytest

from knotmosaic import enumeration as en, tiles
from knotmosaic.errors import CapExceeded, NotAKnotMosaic
from knotmosaic.mosaic import Mosaic, inject, is_knot_mosaic, parse_tcode

import mosaics as fx


def test_small_lists():
    assert en.enumerate_mosaics(1) == [Mosaic.blank(1)]
    assert [m.tcode() for m in en.enumerate_mosaics(2)] == ["00-00", "21-34"]
    assert [m.tcode() for m in en.enumerate_mosaics(3)] == fx.APPENDIX_A


@pytest.mark.parametrize("n", [1, 2])
def test_brute_force_agrees(n):
    assert en.brute_force_count(n) == en.count(n) == en.dfs_count(n) == len(en.enumerate_mosaics(n))


@pytest.mark.parametrize("n", [3, 4])
def test_transfer_agrees_with_dfs(n):
    assert en.count(n) == len(en.enumerate_mosaics(n)) == en.dfs_count(n)


def test_enumeration_sorted_and_valid():
    for n in (2, 3, 4):
        ms = en.enumerate_mosaics(n)
        assert all(a < b for a, b in zip(ms, ms[1:]))
        assert all(is_knot_mosaic(m) for m in ms)


def test_inject_embeds():
    for n in (1, 2, 3):
        bigger = set(en.enumerate_mosaics(n + 1))
        images = {inject(m) for m in en.enumerate_mosaics(n)}
        assert len(images) == en.count(n)
        assert images <= bigger


def test_caps():
    with pytest.raises(CapExceeded):
        en.enumerate_mosaics(5)
    with pytest.raises(CapExceeded):
        en.enumerate_mosaics(6, allow_large=True)
    with pytest.raises(CapExceeded):
        en.brute_force_count(3)
    with pytest.raises(CapExceeded):
        en.count(11)


def test_strict_bound():
    for n in range(1, 8):
        assert en.count(n) < 11 ** (n * n)


def test_row_transfer_properties():
    t = en.RowTransfer.build(3)
    assert all(c > 0 for c in t.counts.values())
    # with nothing above or below, a strand would have to leave by a side
    assert t.counts[(0, 0)] == 1
    # strands entering columns 0 and 1 from above can only join each other
    assert t.counts[(0b011, 0)] == 1
    # an odd number of strands can never pair up inside a row
    assert all(bin(a).count("1") % 2 == bin(b).count("1") % 2 for a, b in t.counts)


# --- independent enumerator ---------------------------------------------------
# Build all valid rows first (left/right consistent, nothing on the outer
# sides), then stack rows whose shared edges agree.

def _rows(n):
    out = []
    for row in itertools.product(range(11), repeat=n):
        if tiles.has_connection(row[0], tiles.L) or tiles.has_connection(row[-1], tiles.R):
            continue
        if all(tiles.has_connection(a, tiles.R) == tiles.has_connection(b, tiles.L) for a, b in zip(row, row[1:])):
            out.append(row)
    return out


def _row_stack(n):
    rows = _rows(n)
    top = lambda r: tuple(tiles.has_connection(t, tiles.T) for t in r)  # noqa: E731
    bottom = lambda r: tuple(tiles.has_connection(t, tiles.B) for t in r)  # noqa: E731
    empty = (False,) * n
    out = []

    def grow(acc):
        if len(acc) == n:
            if bottom(acc[-1]) == empty:
                out.append(Mosaic(n, tuple(t for r in acc for t in r)))
            return
        want = bottom(acc[-1]) if acc else empty
        for r in rows:
            if top(r) == want:
                grow(acc + [r])

    grow([])
    return sorted(out)


def test_row_stacking_matches_dfs_n3():
    assert _row_stack(3) == en.enumerate_mosaics(3)


def test_row_stacking_matches_dfs_n4():
    assert _row_stack(4) == en.enumerate_mosaics(4)


def test_basis_lookup():
    b = en.basis(3)
    assert b.index(Mosaic.blank(3)) == 0
    for i, m in enumerate(b):
        assert b.index(m) == i and b.mosaic(i) == m
    with pytest.raises(NotAKnotMosaic):
        b.index(parse_tcode("210-000-000"))
    assert b.with_block(2, (1, 1), (2, 1, 3, 4)) == [1]


@pytest.mark.skipif(not os.environ.get("KNOTMOSAIC_SLOW"), reason="set KNOTMOSAIC_SLOW=1 to run")
def test_dfs_count_n5():
    assert en.dfs_count(5, allow_large=True) == en.count(5)
