"""Oriented mosaics over the 29 oriented tiles.

An oriented n-mosaic is valid when every signed connection point meets a
connection point of the opposite sign on the neighbouring tile.  Oriented
t-codes use the same grammar as unoriented ones, with tokens 0-28 and
multi-digit tokens in parentheses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import tiles
from .errors import CapExceeded, OutOfRange
from .mosaic import Mosaic, format_grid, parse_grid

ORIENTED_CAP = 3


@dataclass(frozen=True, order=True)
class OrientedMosaic:
    n: int
    cells: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.cells) != self.n * self.n:
            raise ValueError(f"{self.n}-mosaic needs {self.n * self.n} cells")
        for t in self.cells:
            if not 0 <= t < tiles.NUM_ORIENTED_TILES:
                raise ValueError(f"no oriented tile {t}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "OrientedMosaic":
        rows = [tuple(r) for r in rows]
        return cls(len(rows), tuple(t for r in rows for t in r))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise OutOfRange(f"cell ({i},{j}) outside {self.n}-mosaic")
        return self.cells[i * self.n + j]

    def tcode(self) -> str:
        return format_grid(self.n, self.cells)

    def __str__(self) -> str:
        return self.tcode()


def parse_oriented(text: str) -> OrientedMosaic:
    n, cells = parse_grid(text, tiles.NUM_ORIENTED_TILES)
    return OrientedMosaic(n, cells)


_SIGNS = tuple(tiles.oriented_profile(t) for t in range(tiles.NUM_ORIENTED_TILES))
_TOP, _RIGHT, _BOTTOM, _LEFT = 0, 1, 2, 3


def _edges_match(a: int, b: int) -> bool:
    # both absent, or one start meeting one end
    return a == -b


def is_oriented_knot_mosaic(m: OrientedMosaic) -> bool:
    n, c = m.n, m.cells
    for i in range(n):
        for j in range(n):
            s = _SIGNS[c[i * n + j]]
            right = _SIGNS[c[i * n + j + 1]][_LEFT] if j + 1 < n else 0
            below = _SIGNS[c[(i + 1) * n + j]][_TOP] if i + 1 < n else 0
            if not _edges_match(s[_RIGHT], right) or not _edges_match(s[_BOTTOM], below):
                return False
            if i == 0 and s[_TOP] or j == 0 and s[_LEFT]:
                return False
    return True


def forget_orientation(m: OrientedMosaic) -> Mosaic:
    return Mosaic(m.n, tuple(tiles.underlying(t) for t in m.cells))


@lru_cache(maxsize=None)
def _candidates(top: int, left: int, last_col: bool, last_row: bool) -> tuple[int, ...]:
    # top/left are the signs the neighbours present on the shared edge
    return tuple(
        t for t in range(tiles.NUM_ORIENTED_TILES)
        if _edges_match(_SIGNS[t][_TOP], top)
        and _edges_match(_SIGNS[t][_LEFT], left)
        and not (last_col and _SIGNS[t][_RIGHT])
        and not (last_row and _SIGNS[t][_BOTTOM])
    )


def enumerate_oriented(n: int) -> list[OrientedMosaic]:
    """All oriented knot n-mosaics in lex order of oriented tile index."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > ORIENTED_CAP:
        raise CapExceeded("enumerate_oriented", n, ORIENTED_CAP)
    cells = [0] * (n * n)
    out: list[OrientedMosaic] = []

    def walk(pos: int) -> None:
        i, j = divmod(pos, n)
        top = _SIGNS[cells[pos - n]][_BOTTOM] if i > 0 else 0
        left = _SIGNS[cells[pos - 1]][_RIGHT] if j > 0 else 0
        for t in _candidates(top, left, j == n - 1, i == n - 1):
            cells[pos] = t
            if pos == n * n - 1:
                out.append(OrientedMosaic(n, tuple(cells)))
            else:
                walk(pos + 1)

    walk(0)
    return out


def brute_force_oriented_count(n: int) -> int:
    """Check all 29^(n*n) grids; n <= 2."""
    if n > 2:
        raise CapExceeded("brute_force_oriented_count", n, 2)
    return sum(
        1 for cells in itertools.product(range(tiles.NUM_ORIENTED_TILES), repeat=n * n)
        if is_oriented_knot_mosaic(OrientedMosaic(n, cells))
    )
