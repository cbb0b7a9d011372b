"""Mosaic tiles: the 11 unoriented tiles and the 29 oriented tiles.

Edges are numbered clockwise from the top: ``TOP=0, RIGHT=1, BOTTOM=2,
LEFT=3``.  A connection profile is a 4-bit mask with bit ``e`` set when the
tile has a connection point at the midpoint of edge ``e``.

Tile drawings (unoriented)::

    T0  blank
    T1  arc left-bottom      T2  arc right-bottom
    T3  arc top-right        T4  arc top-left
    T5  horizontal line      T6  vertical line
    T7  arcs left-bottom + top-right
    T8  arcs right-bottom + top-left
    T9  crossing, vertical strand over
    T10 crossing, vertical strand under

All tables in this module are immutable module constants.
"""

from __future__ import annotations

from enum import IntEnum

from .errors import NoConnectionPoint

NUM_TILES = 11
NUM_ORIENTED_TILES = 29


class Edge(IntEnum):
    TOP = 0
    RIGHT = 1
    BOTTOM = 2
    LEFT = 3

    @property
    def opposite(self) -> "Edge":
        return Edge((self + 2) % 4)

    def rotated(self, quarter_turns: int = 1) -> "Edge":
        """Image of this edge under ``quarter_turns`` counter-clockwise turns."""
        return Edge((self - quarter_turns) % 4)


T, R, B, L = Edge.TOP, Edge.RIGHT, Edge.BOTTOM, Edge.LEFT

BLANK = 0
CROSSINGS = (9, 10)
DOUBLE_ARCS = (7, 8)

# Strand pairings; crossings list the vertical strand first.
_STRANDS: tuple[tuple[tuple[Edge, Edge], ...], ...] = (
    (),
    ((L, B),),
    ((R, B),),
    ((T, R),),
    ((T, L),),
    ((L, R),),
    ((T, B),),
    ((L, B), (T, R)),
    ((R, B), (T, L)),
    ((T, B), (L, R)),
    ((T, B), (L, R)),
)

# Which strand lies on top at a crossing: "vertical" or "horizontal".
OVER_STRAND = {9: "vertical", 10: "horizontal"}

_ROTATE90 = (0, 2, 3, 4, 1, 6, 5, 8, 7, 10, 9)


def _mask(edges) -> int:
    m = 0
    for e in edges:
        m |= 1 << e
    return m


PROFILES: tuple[int, ...] = tuple(
    _mask(e for pair in pairs for e in pair) for pairs in _STRANDS
)

# profile mask -> tiles carrying it, in tile order
TILES_BY_PROFILE: dict[int, tuple[int, ...]] = {}
for _t, _p in enumerate(PROFILES):
    TILES_BY_PROFILE.setdefault(_p, ())
    TILES_BY_PROFILE[_p] += (_t,)
del _t, _p

_EXIT = tuple(
    {a: b for pair in pairs for a, b in (pair, pair[::-1])} for pairs in _STRANDS
)


def check_tile(t: int) -> int:
    if not 0 <= t < NUM_TILES:
        raise ValueError(f"no tile T{t}")
    return t


def connection_profile(t: int) -> int:
    """Connection mask of tile ``t``."""
    return PROFILES[check_tile(t)]


def has_connection(t: int, edge: Edge) -> bool:
    return bool(PROFILES[t] >> edge & 1)


def connection_edges(t: int) -> tuple[Edge, ...]:
    return tuple(e for e in Edge if has_connection(t, e))


def rotate90(t: int) -> int:
    """Rotate a tile a quarter turn counter-clockwise."""
    return _ROTATE90[check_tile(t)]


def rotate(t: int, quarter_turns: int) -> int:
    for _ in range(quarter_turns % 4):
        t = _ROTATE90[t]
    return t


def rotate_profile(mask: int, quarter_turns: int = 1) -> int:
    """Rotate a connection mask counter-clockwise."""
    q = quarter_turns % 4
    return ((mask >> q) | (mask << (4 - q))) & 0xF


def strands(t: int) -> tuple[tuple[Edge, Edge], ...]:
    return _STRANDS[check_tile(t)]


def strand_exit(t: int, entry_edge: Edge) -> Edge:
    """Other endpoint of the strand of tile ``t`` entering at ``entry_edge``."""
    try:
        return _EXIT[check_tile(t)][Edge(entry_edge)]
    except KeyError:
        raise NoConnectionPoint(f"T{t} has no connection point on {Edge(entry_edge).name}") from None


def rotation_classes(num_tiles: int = NUM_TILES, rot=rotate90) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    classes = []
    for t in range(num_tiles):
        if t in seen:
            continue
        cls = [t]
        u = rot(t)
        while u != t:
            cls.append(u)
            u = rot(u)
        seen.update(cls)
        classes.append(tuple(cls))
    return classes


# ---------------------------------------------------------------------------
# Oriented tiles
#
# Each oriented tile is (underlying unoriented tile, directed strands), a
# directed strand being (start edge, end edge).  Listing order groups the
# tiles into rotation classes; inside a class each entry is the previous one
# turned a quarter counter-clockwise.

ORIENTED_TILES: tuple[tuple[int, tuple[tuple[Edge, Edge], ...]], ...] = (
    (0, ()),
    # straight lines
    (5, ((L, R),)),
    (6, ((B, T),)),
    (5, ((R, L),)),
    (6, ((T, B),)),
    # single arcs, two rotation classes
    (1, ((L, B),)),
    (2, ((B, R),)),
    (3, ((R, T),)),
    (4, ((T, L),)),
    (1, ((B, L),)),
    (2, ((R, B),)),
    (3, ((T, R),)),
    (4, ((L, T),)),
    # double arcs: two half-turn symmetric classes, then one of size 4
    (7, ((L, B), (R, T))),
    (8, ((B, R), (T, L))),
    (8, ((R, B), (L, T))),
    (7, ((T, R), (B, L))),
    (7, ((L, B), (T, R))),
    (8, ((B, R), (L, T))),
    (7, ((R, T), (B, L))),
    (8, ((T, L), (R, B))),
    # crossings (vertical strand listed as it appears, order irrelevant)
    (9, ((L, R), (B, T))),
    (10, ((B, T), (R, L))),
    (9, ((R, L), (T, B))),
    (10, ((T, B), (L, R))),
    (9, ((L, R), (T, B))),
    (10, ((B, T), (L, R))),
    (9, ((R, L), (B, T))),
    (10, ((T, B), (R, L))),
)

NONE, OUT, IN = 0, -1, 1


def underlying(t: int) -> int:
    """Forget the orientation of oriented tile ``t``."""
    return ORIENTED_TILES[t][0]


def oriented_profile(t: int) -> tuple[int, int, int, int]:
    """Signed profile ``(top, right, bottom, left)``: -1 start, +1 end, 0 none."""
    if not 0 <= t < NUM_ORIENTED_TILES:
        raise ValueError(f"no oriented tile {t}")
    signs = [NONE] * 4
    for start, end in ORIENTED_TILES[t][1]:
        signs[start] = OUT
        signs[end] = IN
    return tuple(signs)


def _rotate_oriented(t: int) -> int:
    base, directed = ORIENTED_TILES[t]
    turned = {(a.rotated(), b.rotated()) for a, b in directed}
    target = rotate90(base)
    for u, (ub, ud) in enumerate(ORIENTED_TILES):
        if ub == target and set(ud) == turned:
            return u
    raise AssertionError(f"oriented tile {t} has no rotated partner")


ORIENTED_ROTATE90: tuple[int, ...] = tuple(_rotate_oriented(t) for t in range(NUM_ORIENTED_TILES))


def rotate90_oriented(t: int) -> int:
    return ORIENTED_ROTATE90[t]
