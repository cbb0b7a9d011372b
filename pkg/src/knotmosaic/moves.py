"""Mosaic moves.

A deterministic k-move at a location swaps two concrete k-mosaics ``N`` and
``N'`` wherever one of them sits at that location and fixes every other
mosaic, so it is an involution.  The generators of the ambient group are
produced from a table of move templates (planar isotopy moves P1-P11 and the
Reidemeister families R1, R2, R3) by resolving nondeterministic tiles,
applying the four simultaneous rotations and placing the result at every
location.
"""

from __future__ import annotations

import hashlib
import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Sequence, Union

from . import tiles
from .errors import ParseError, SizeMismatch
from .mosaic import Mosaic, boundary_profile, interior_consistent

# ---------------------------------------------------------------------------
# templates


@dataclass(frozen=True)
class NondetSymbol:
    name: str
    options: tuple[int, int]
    sync_label: str | None = None

    def rotated(self, quarter_turns: int) -> "NondetSymbol":
        if quarter_turns % 4 == 0:
            return self
        return NondetSymbol(
            f"{self.name}@{quarter_turns % 4}",
            tuple(tiles.rotate(t, quarter_turns) for t in self.options),
            self.sync_label,
        )


Cell = Union[int, NondetSymbol]


@dataclass(frozen=True)
class MoveTemplate:
    name: str
    k: int
    lhs: tuple[Cell, ...]
    rhs: tuple[Cell, ...]

    def symbols(self) -> list[NondetSymbol]:
        seen = {}
        for c in self.lhs + self.rhs:
            if isinstance(c, NondetSymbol):
                seen.setdefault(c.name, c)
        return list(seen.values())

    def rotated(self, quarter_turns: int = 1) -> "MoveTemplate":
        """Both patterns turned counter-clockwise together."""
        q = quarter_turns % 4
        lhs, rhs = self.lhs, self.rhs
        for _ in range(q):
            lhs, rhs = _rotate_cells(self.k, lhs), _rotate_cells(self.k, rhs)
        return MoveTemplate(self.name if q == 0 else f"{self.name}@{q}", self.k, lhs, rhs)

    def resolutions(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Every concrete (N, N') pair the template stands for (no rotation)."""
        variables: list[object] = []
        for pos in range(self.k * self.k):
            for c in (self.lhs[pos], self.rhs[pos]):
                if isinstance(c, NondetSymbol):
                    key = ("label", c.sync_label) if c.sync_label else ("cell", pos)
                    if key not in variables:
                        variables.append(key)
        out = []
        for bits in itertools.product((0, 1), repeat=len(variables)):
            choice = dict(zip(variables, bits))

            def resolve(c, pos):
                if isinstance(c, NondetSymbol):
                    key = ("label", c.sync_label) if c.sync_label else ("cell", pos)
                    return c.options[choice[key]]
                return c

            lhs = tuple(resolve(c, p) for p, c in enumerate(self.lhs))
            rhs = tuple(resolve(c, p) for p, c in enumerate(self.rhs))
            out.append((lhs, rhs))
        return out


def _rotate_cells(k: int, cells: Sequence[Cell]) -> tuple[Cell, ...]:
    out = []
    for i in range(k):
        for j in range(k):
            c = cells[j * k + (k - 1 - i)]
            out.append(c.rotated(1) if isinstance(c, NondetSymbol) else tiles.rotate90(c))
    return tuple(out)


# ---------------------------------------------------------------------------
# the move table file

_CELL_TOKEN = re.compile(r"\[([^\]]+)\]|\((\d+)\)|(\d)")
_SYMBOL_ENTRY = re.compile(r"^([^=\s]+)=T(\d+)\|T(\d+)(?::(\w+))?$")


@dataclass(frozen=True)
class MoveTable:
    templates: tuple[MoveTemplate, ...]
    version: str
    digest: str = field(repr=False)

    def __iter__(self):
        return iter(self.templates)

    def __len__(self):
        return len(self.templates)

    def __getitem__(self, name: str) -> MoveTemplate:
        for t in self.templates:
            if t.name == name:
                return t
        raise KeyError(name)

    @property
    def key(self) -> str:
        """Cache key identifying this table's contents."""
        return f"v{self.version}-{self.digest[:16]}"


def _parse_rows(text: str, k: int, symbols: dict[str, NondetSymbol], where: str) -> tuple[Cell, ...]:
    rows = text.strip().split("-")
    if len(rows) != k:
        raise ParseError(f"{where}: expected {k} rows, got {len(rows)}")
    cells: list[Cell] = []
    for row in rows:
        pos, count = 0, 0
        while pos < len(row):
            m = _CELL_TOKEN.match(row, pos)
            if m is None:
                raise ParseError(f"{where}: bad token at {row[pos:]!r}")
            if m.group(1):
                if m.group(1) not in symbols:
                    raise ParseError(f"{where}: undefined symbol {m.group(1)!r}")
                cells.append(symbols[m.group(1)])
            else:
                cells.append(tiles.check_tile(int(m.group(2) or m.group(3))))
            pos = m.end()
            count += 1
        if count != k:
            raise ParseError(f"{where}: row {row!r} has {count} cells, expected {k}")
    return tuple(cells)


def parse_move_table(text: str) -> MoveTable:
    templates = []
    version = "0"
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("version"):
            version = line.split()[1]
            continue
        where = f"line {lineno}"
        fields = [f.strip() for f in line.split(";")]
        if len(fields) not in (4, 5):
            raise ParseError(f"{where}: expected 4 or 5 ';'-separated fields")
        name, k_text, lhs_text, rhs_text = fields[:4]
        symbols = {}
        for entry in (fields[4].split() if len(fields) == 5 else []):
            m = _SYMBOL_ENTRY.match(entry)
            if m is None:
                raise ParseError(f"{where}: bad symbol entry {entry!r}")
            a, b = tiles.check_tile(int(m.group(2))), tiles.check_tile(int(m.group(3)))
            symbols[m.group(1)] = NondetSymbol(m.group(1), (a, b), m.group(4))
        k = int(k_text)
        templates.append(MoveTemplate(
            name, k,
            _parse_rows(lhs_text, k, symbols, f"{where} lhs"),
            _parse_rows(rhs_text, k, symbols, f"{where} rhs"),
        ))
    digest = hashlib.sha256(text.encode()).hexdigest()
    return MoveTable(tuple(templates), version, digest)


@lru_cache(maxsize=None)
def default_table() -> MoveTable:
    text = resources.files("knotmosaic").joinpath("data/moves.txt").read_text(encoding="utf-8")
    return parse_move_table(text)


def load_table(path: str | Path | None) -> MoveTable:
    if path is None:
        return default_table()
    return parse_move_table(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# deterministic moves


@dataclass(frozen=True, order=True)
class DeterministicMove:
    """``N <-> N'`` at ``loc`` acting on n-mosaics.

    The pair is stored sorted so that equality ignores which side was
    written first.
    """

    n: int
    k: int
    loc: tuple[int, int]
    N: tuple[int, ...]
    N2: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.N == self.N2:
            raise ValueError("degenerate move: both patterns are equal")
        if self.N2 < self.N:
            first, second = self.N2, self.N
            object.__setattr__(self, "N", first)
            object.__setattr__(self, "N2", second)

    @classmethod
    def make(cls, N: Mosaic, N2: Mosaic, loc: tuple[int, int], n: int, name: str = "") -> "DeterministicMove":
        if N.n != N2.n:
            raise SizeMismatch("patterns differ in size")
        return cls(n, N.n, tuple(loc), N.cells, N2.cells, name)

    def patterns(self) -> tuple[Mosaic, Mosaic]:
        return Mosaic(self.k, self.N), Mosaic(self.k, self.N2)

    def __call__(self, m: Mosaic) -> Mosaic:
        return apply(self, m)

    def label(self) -> str:
        a, b = self.patterns()
        return f"{self.name or 'move'}: {a.tcode()} <-> {b.tcode()} @({self.loc[0]},{self.loc[1]})"


def _block(m: Mosaic, k: int, loc: tuple[int, int]) -> tuple[int, ...]:
    n, (i0, j0) = m.n, loc
    c = m.cells
    return tuple(c[(i0 + a) * n + j0 + b] for a in range(k) for b in range(k))


def _put(m: Mosaic, k: int, loc: tuple[int, int], block: tuple[int, ...]) -> Mosaic:
    n, (i0, j0) = m.n, loc
    cells = list(m.cells)
    for a in range(k):
        cells[(i0 + a) * n + j0:(i0 + a) * n + j0 + k] = block[a * k:(a + 1) * k]
    return Mosaic(n, tuple(cells))


def apply(move: DeterministicMove, m: Mosaic) -> Mosaic:
    """Swap N and N' at the move's location; identity otherwise."""
    if move.n != m.n:
        raise SizeMismatch(f"{move.n}-move applied to a {m.n}-mosaic")
    current = _block(m, move.k, move.loc)
    if current == move.N:
        return _put(m, move.k, move.loc, move.N2)
    if current == move.N2:
        return _put(m, move.k, move.loc, move.N)
    return m


def expand_patterns(template: MoveTemplate) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Concrete unordered pattern pairs of a template, over all four rotations."""
    out = set()
    for q in range(4):
        for lhs, rhs in template.rotated(q).resolutions():
            if lhs != rhs:
                out.add((min(lhs, rhs), max(lhs, rhs)))
    return out


def expand(template: MoveTemplate, n: int) -> set[DeterministicMove]:
    k = template.k
    if k > n:
        return set()
    pairs = expand_patterns(template)
    return {
        DeterministicMove(n, k, (i, j), a, b, template.name)
        for a, b in pairs
        for i in range(n - k + 1)
        for j in range(n - k + 1)
    }


def generators(n: int, table: MoveTable | None = None) -> tuple[DeterministicMove, ...]:
    """All deterministic generators of the ambient group on n-mosaics, sorted."""
    return _generators(n, table or default_table())


@lru_cache(maxsize=16)
def _generators(n: int, table: MoveTable) -> tuple[DeterministicMove, ...]:
    moves: set[DeterministicMove] = set()
    for template in table:
        moves |= expand(template, n)
    return tuple(sorted(moves))


def template_problems(template: MoveTemplate) -> list[str]:
    """Structural defects of a template's resolutions (empty when sound).

    Each resolved pair must agree on the outer boundary and each side must be
    internally suitably connected; together these make the move map knot
    mosaics to knot mosaics.
    """
    problems = []
    k = template.k
    for lhs, rhs in template.resolutions():
        tag = f"{template.name} {Mosaic(k, lhs).tcode()} <-> {Mosaic(k, rhs).tcode()}"
        if boundary_profile(k, lhs) != boundary_profile(k, rhs):
            problems.append(f"{tag}: boundary differs")
        for side in (lhs, rhs):
            if not interior_consistent(k, side):
                problems.append(f"{tag}: {Mosaic(k, side).tcode()} not internally connected")
        if lhs == rhs:
            problems.append(f"{tag}: degenerate")
    return problems


# ---------------------------------------------------------------------------
# moves as permutations of a basis of knot mosaics


def as_transpositions(move: DeterministicMove, basis) -> list[tuple[int, int]]:
    """The move restricted to ``basis`` (lex-ordered K(n)) as disjoint swaps.

    ``basis`` is a sequence of mosaics or an ``enumeration.Basis``; the latter
    uses its block index so only mosaics carrying one of the two patterns are
    visited.  Pairs ``(a, b)`` have ``a < b`` and are sorted.  Raises
    ``ValueError`` if the move sends a basis element outside the basis.
    """
    from .enumeration import Basis

    if not isinstance(basis, Basis):
        basis = Basis(move.n, list(basis))
    if basis.n != move.n:
        raise SizeMismatch(f"{move.n}-move against a basis of {basis.n}-mosaics")
    pairs = []
    for a in basis.with_block(move.k, move.loc, move.N):
        m = basis[a]
        image = apply(move, m)
        b = basis.get(image)
        if b is None:
            raise ValueError(f"{move.label()} maps {m.tcode()} outside the basis")
        pairs.append((min(a, b), max(a, b)))
    for b in basis.with_block(move.k, move.loc, move.N2):
        if basis.get(apply(move, basis[b])) is None:
            raise ValueError(f"{move.label()} maps {basis[b].tcode()} outside the basis")
    return sorted(pairs)
