"""Listing and counting knot n-mosaics.

Three independent routes:

* ``enumerate_mosaics`` / ``dfs_count``: cell-by-cell depth first search in
  row-major order, pruned by the connection points already fixed above and
  to the left.  Candidates are tried in tile order, so the output is in lex
  order.
* ``count``: a row transfer matrix over bottom-edge connection patterns.
* ``brute_force_count``: every one of the 11^(n*n) grids, for tiny n.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import tiles
from .errors import CapExceeded, NotAKnotMosaic
from .mosaic import Mosaic, is_knot_mosaic
from .tiles import Edge

ENUMERATE_CAP = 4
LARGE_ENUMERATE_CAP = 5
COUNT_CAP = 10
BRUTE_FORCE_CAP = 2


def _bit(t: int, e: Edge) -> bool:
    return bool(tiles.PROFILES[t] >> e & 1)


@lru_cache(maxsize=None)
def _candidates(need_top: bool, need_left: bool, last_col: bool, last_row: bool) -> tuple[int, ...]:
    """Tiles that fit a cell given its neighbours above and to the left."""
    return tuple(
        t for t in range(tiles.NUM_TILES)
        if _bit(t, Edge.TOP) == need_top
        and _bit(t, Edge.LEFT) == need_left
        and not (last_col and _bit(t, Edge.RIGHT))
        and not (last_row and _bit(t, Edge.BOTTOM))
    )


def _check_cap(n: int, allow_large: bool) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    cap = LARGE_ENUMERATE_CAP if allow_large else ENUMERATE_CAP
    if n > cap:
        raise CapExceeded("enumerate", n, cap)


def iter_mosaics(n: int, allow_large: bool = False) -> Iterator[Mosaic]:
    """Knot n-mosaics in lex order, generated lazily."""
    _check_cap(n, allow_large)
    size = n * n
    cells = [0] * size
    # explicit stack of (position, candidate tuple, next candidate index)
    stack: list[list] = []

    def options(pos: int) -> tuple[int, ...]:
        i, j = divmod(pos, n)
        need_top = i > 0 and _bit(cells[pos - n], Edge.BOTTOM)
        need_left = j > 0 and _bit(cells[pos - 1], Edge.RIGHT)
        return _candidates(need_top, need_left, j == n - 1, i == n - 1)

    stack.append([0, options(0), 0])
    while stack:
        frame = stack[-1]
        pos, opts, k = frame
        if k == len(opts):
            stack.pop()
            continue
        frame[2] = k + 1
        cells[pos] = opts[k]
        if pos == size - 1:
            yield Mosaic(n, tuple(cells))
        else:
            stack.append([pos + 1, options(pos + 1), 0])


def enumerate_mosaics(n: int, allow_large: bool = False) -> list[Mosaic]:
    """All knot n-mosaics, sorted in lex order."""
    return list(iter_mosaics(n, allow_large))


def dfs_count(n: int, allow_large: bool = False) -> int:
    """Count knot n-mosaics with the same search, without building them."""
    _check_cap(n, allow_large)
    size = n * n
    cells = [0] * size
    bottom = [tiles.PROFILES[t] >> Edge.BOTTOM & 1 for t in range(tiles.NUM_TILES)]
    right = [tiles.PROFILES[t] >> Edge.RIGHT & 1 for t in range(tiles.NUM_TILES)]
    table = {key: _candidates(*key) for key in itertools.product((False, True), repeat=4)}

    def walk(pos: int) -> int:
        i, j = divmod(pos, n)
        opts = table[(
            i > 0 and bool(bottom[cells[pos - n]]),
            j > 0 and bool(right[cells[pos - 1]]),
            j == n - 1,
            i == n - 1,
        )]
        if pos == size - 1:
            return len(opts)
        total = 0
        for t in opts:
            cells[pos] = t
            total += walk(pos + 1)
        return total

    return walk(0)


# ---------------------------------------------------------------------------
# transfer matrix


def _multiplicity(mask: int) -> int:
    return len(tiles.TILES_BY_PROFILE.get(mask, ()))


@dataclass(frozen=True)
class RowTransfer:
    """Number of valid tile rows for each (top pattern, bottom pattern).

    Bit ``j`` of a pattern is set when column ``j`` has a connection point on
    the row's top (resp. bottom) edge.  Rows never have a connection point on
    the outer left or right side.
    """

    n: int
    counts: dict[tuple[int, int], int]

    @classmethod
    def build(cls, n: int) -> "RowTransfer":
        counts: dict[tuple[int, int], int] = {}
        for top in range(1 << n):
            # state: (right connection carried into the next column, bottom bits so far)
            states = {(0, 0): 1}
            for j in range(n):
                up = top >> j & 1
                nxt: dict[tuple[int, int], int] = defaultdict(int)
                for (left, bits), ways in states.items():
                    for r in (0, 1):
                        if j == n - 1 and r:
                            continue
                        for b in (0, 1):
                            mask = up << Edge.TOP | r << Edge.RIGHT | b << Edge.BOTTOM | left << Edge.LEFT
                            mult = _multiplicity(mask)
                            if mult:
                                nxt[(r, bits | b << j)] += ways * mult
                states = nxt
            for (_, bits), ways in states.items():
                counts[(top, bits)] = counts.get((top, bits), 0) + ways
        return cls(n, counts)

    def step(self, vector: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for (top, bottom), c in self.counts.items():
            v = vector.get(top)
            if v:
                out[bottom] += v * c
        return dict(out)


def count(n: int) -> int:
    """|K(n)| by chaining row transfers from an empty top to an empty bottom."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > COUNT_CAP:
        raise CapExceeded("count", n, COUNT_CAP)
    transfer = RowTransfer.build(n)
    vector = {0: 1}
    for _ in range(n):
        vector = transfer.step(vector)
    return vector.get(0, 0)


def brute_force_count(n: int) -> int:
    """Test every grid of the 11^(n*n) with the validity predicate."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > BRUTE_FORCE_CAP:
        raise CapExceeded("brute_force_count", n, BRUTE_FORCE_CAP)
    return sum(
        1 for cells in itertools.product(range(tiles.NUM_TILES), repeat=n * n)
        if is_knot_mosaic(Mosaic(n, cells))
    )


# ---------------------------------------------------------------------------
# the lex-ordered basis


class Basis:
    """Lex-ordered K(n) with index lookup and a block index for moves."""

    def __init__(self, n: int, mosaics: list[Mosaic]):
        self.n = n
        self.mosaics = mosaics
        self._index = {m: i for i, m in enumerate(mosaics)}
        self._blocks: dict[tuple[int, int, int], dict[tuple[int, ...], list[int]]] = {}

    def __len__(self) -> int:
        return len(self.mosaics)

    def __iter__(self):
        return iter(self.mosaics)

    def __getitem__(self, i: int) -> Mosaic:
        return self.mosaics[i]

    def __contains__(self, m: Mosaic) -> bool:
        return m in self._index

    def index(self, m: Mosaic) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise NotAKnotMosaic(f"{m.tcode()} is not in the {self.n}-mosaic basis") from None

    def get(self, m: Mosaic) -> int | None:
        return self._index.get(m)

    def mosaic(self, i: int) -> Mosaic:
        return self.mosaics[i]

    def with_block(self, k: int, loc: tuple[int, int], block: tuple[int, ...]) -> list[int]:
        """Indices of basis mosaics whose k-submosaic at ``loc`` is ``block``."""
        key = (k, loc[0], loc[1])
        table = self._blocks.get(key)
        if table is None:
            n, (i0, j0) = self.n, loc
            table = defaultdict(list)
            for idx, m in enumerate(self.mosaics):
                c = m.cells
                table[tuple(c[(i0 + a) * n + j0 + b] for a in range(k) for b in range(k))].append(idx)
            table = dict(table)
            self._blocks[key] = table
        return table.get(block, [])


@lru_cache(maxsize=8)
def _basis(n: int, allow_large: bool) -> Basis:
    return Basis(n, enumerate_mosaics(n, allow_large))


def basis(n: int, allow_large: bool = False) -> Basis:
    """Shared, cached basis for K(n)."""
    _check_cap(n, allow_large)
    return _basis(n, n > ENUMERATE_CAP)
