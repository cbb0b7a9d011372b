"""n-mosaics: square grids of tiles, stored row-major.

The text form is the *t-code*: rows joined by ``-``, one token per cell,
token ``0``-``9`` or ``(10)``.  ``"000-021-034"`` is the 3-mosaic with a small
circle in its lower right 2x2 block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import tiles
from .errors import NotAKnotMosaic, OutOfRange, ParseError
from .tiles import Edge

_TOKEN = re.compile(r"\((\d+)\)|(\d)")


def tokenize_row(row: str, num_tiles: int) -> list[int]:
    out = []
    pos = 0
    while pos < len(row):
        m = _TOKEN.match(row, pos)
        if m is None:
            raise ParseError(f"bad token at {row[pos:]!r}")
        if m.group(1) is not None:
            if len(m.group(1)) < 2 or m.group(1).startswith("0"):
                raise ParseError(f"parenthesised token must be a multi-digit index: {m.group(0)!r}")
            value = int(m.group(1))
        else:
            value = int(m.group(2))
        if value >= num_tiles:
            raise ParseError(f"tile index {value} out of range")
        out.append(value)
        pos = m.end()
    return out


def parse_grid(text: str, num_tiles: int) -> tuple[int, tuple[int, ...]]:
    text = text.strip()
    if not text:
        raise ParseError("empty t-code")
    rows = [tokenize_row(r, num_tiles) for r in text.split("-")]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ParseError(f"t-code is not square: {n} rows but a row of length {len(r)}")
    return n, tuple(t for r in rows for t in r)


def format_token(t: int) -> str:
    return str(t) if t < 10 else f"({t})"


def format_grid(n: int, cells: Sequence[int]) -> str:
    return "-".join(
        "".join(format_token(t) for t in cells[i * n:(i + 1) * n]) for i in range(n)
    )


@dataclass(frozen=True, order=True)
class Mosaic:
    """An n-mosaic.  Ordering between equal-size mosaics is the lex order on
    row-major tile indices, which is also the quantum basis order."""

    n: int
    cells: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("mosaic size must be positive")
        if len(self.cells) != self.n * self.n:
            raise ValueError(f"{self.n}-mosaic needs {self.n * self.n} cells, got {len(self.cells)}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Mosaic":
        rows = [tuple(r) for r in rows]
        for r in rows:
            for t in r:
                tiles.check_tile(t)
        return cls(len(rows), tuple(t for r in rows for t in r))

    @classmethod
    def blank(cls, n: int) -> "Mosaic":
        return cls(n, (0,) * (n * n))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise OutOfRange(f"cell ({i},{j}) outside {self.n}-mosaic")
        return self.cells[i * self.n + j]

    def rows(self) -> list[tuple[int, ...]]:
        n = self.n
        return [self.cells[i * n:(i + 1) * n] for i in range(n)]

    def tcode(self) -> str:
        return format_grid(self.n, self.cells)

    def __str__(self) -> str:
        return self.tcode()

    def replace(self, k: int, loc: tuple[int, int], block: "Mosaic") -> "Mosaic":
        """Copy of this mosaic with the k-submosaic at ``loc`` set to ``block``."""
        _check_loc(self.n, k, loc)
        i0, j0 = loc
        cells = list(self.cells)
        for a in range(k):
            cells[(i0 + a) * self.n + j0:(i0 + a) * self.n + j0 + k] = block.cells[a * k:(a + 1) * k]
        return Mosaic(self.n, tuple(cells))

    def rotated(self, quarter_turns: int = 1) -> "Mosaic":
        """The whole mosaic turned counter-clockwise (tiles turned with it)."""
        m = self
        for _ in range(quarter_turns % 4):
            n = m.n
            # new[i][j] = old[j][n-1-i]
            m = Mosaic(n, tuple(
                tiles.rotate90(m.cells[j * n + (n - 1 - i)]) for i in range(n) for j in range(n)
            ))
        return m

    def crossings(self) -> int:
        return sum(1 for t in self.cells if t in tiles.CROSSINGS)


def parse_tcode(text: str) -> Mosaic:
    """Parse a t-code such as ``"021-2(10)4-340"``."""
    n, cells = parse_grid(text, tiles.NUM_TILES)
    return Mosaic(n, cells)


def serialize(m: Mosaic) -> str:
    return m.tcode()


def _check_loc(n: int, k: int, loc: tuple[int, int]) -> None:
    i, j = loc
    if not 1 <= k <= n:
        raise OutOfRange(f"submosaic size {k} not in 1..{n}")
    if not (0 <= i <= n - k and 0 <= j <= n - k):
        raise OutOfRange(f"location {loc} invalid for a {k}-submosaic of a {n}-mosaic")


def submosaic(m: Mosaic, k: int, loc: tuple[int, int]) -> Mosaic:
    _check_loc(m.n, k, loc)
    i0, j0 = loc
    n = m.n
    return Mosaic(k, tuple(
        m.cells[(i0 + a) * n + j0 + b] for a in range(k) for b in range(k)
    ))


def boundary_profile(n: int, cells: Sequence[int]) -> tuple[tuple[bool, ...], ...]:
    """Connection points along the outer edge: top row tops, right column
    rights, bottom row bottoms, left column lefts."""
    P = tiles.PROFILES
    top = tuple(bool(P[cells[j]] >> Edge.TOP & 1) for j in range(n))
    right = tuple(bool(P[cells[i * n + n - 1]] >> Edge.RIGHT & 1) for i in range(n))
    bottom = tuple(bool(P[cells[(n - 1) * n + j]] >> Edge.BOTTOM & 1) for j in range(n))
    left = tuple(bool(P[cells[i * n]] >> Edge.LEFT & 1) for i in range(n))
    return top, right, bottom, left


def interior_consistent(n: int, cells: Sequence[int]) -> bool:
    """Every connection point facing another cell of the grid is matched."""
    P = tiles.PROFILES
    for i in range(n):
        for j in range(n):
            p = P[cells[i * n + j]]
            if j + 1 < n and bool(p >> Edge.RIGHT & 1) != bool(P[cells[i * n + j + 1]] >> Edge.LEFT & 1):
                return False
            if i + 1 < n and bool(p >> Edge.BOTTOM & 1) != bool(P[cells[(i + 1) * n + j]] >> Edge.TOP & 1):
                return False
    return True


def is_knot_mosaic(m: Mosaic) -> bool:
    """True when every connection point meets one on the contiguous tile.

    A connection point on the outer edge of the grid has no contiguous tile
    and so is never suitably connected.
    """
    n = m.n
    if not interior_consistent(n, m.cells):
        return False
    return not any(any(side) for side in boundary_profile(n, m.cells))


def inject(m: Mosaic) -> Mosaic:
    """Embed an n-mosaic in the top-left of a blank (n+1)-mosaic."""
    n = m.n
    cells = []
    for row in m.rows():
        cells.extend(row)
        cells.append(0)
    cells.extend([0] * (n + 1))
    return Mosaic(n + 1, tuple(cells))


def inject_times(m: Mosaic, times: int) -> Mosaic:
    for _ in range(times):
        m = inject(m)
    return m


@dataclass(frozen=True)
class TraceSummary:
    components: int
    crossings: int
    lengths: tuple[int, ...] = ()  # strand passes per component, in discovery order


_STEP = {Edge.TOP: (-1, 0), Edge.RIGHT: (0, 1), Edge.BOTTOM: (1, 0), Edge.LEFT: (0, -1)}


def trace(m: Mosaic) -> TraceSummary:
    """Follow every strand of a knot mosaic and count closed curves."""
    if not is_knot_mosaic(m):
        raise NotAKnotMosaic(m.tcode())
    n = m.n
    visited: set[tuple[int, int]] = set()  # (cell, strand index)
    lengths = []
    for cell, t in enumerate(m.cells):
        for s, _ in enumerate(tiles.strands(t)):
            if (cell, s) in visited:
                continue
            length = 0
            c, strand = cell, s
            start_edge = tiles.strands(t)[s][0]
            entry = start_edge
            while (c, strand) not in visited:
                visited.add((c, strand))
                length += 1
                exit_edge = tiles.strand_exit(m.cells[c], entry)
                di, dj = _STEP[exit_edge]
                c = c + di * n + dj
                entry = exit_edge.opposite
                strand = next(k for k, pair in enumerate(tiles.strands(m.cells[c])) if entry in pair)
            lengths.append(length)
    return TraceSummary(len(lengths), m.crossings(), tuple(lengths))
