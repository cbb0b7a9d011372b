"""Knot n-type and knot mosaic type.

Two knot n-mosaics have the same knot n-type when the ambient group moves
one to the other, that is when they lie in the same orbit of the generator
graph.  Orbits are found with union-find over the generators' transposition
lists and cached on disk, keyed by n and the move table digest.
"""

from __future__ import annotations

import enum
import os
import tempfile
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from . import moves
from .enumeration import ENUMERATE_CAP, LARGE_ENUMERATE_CAP, Basis, basis as get_basis
from .errors import CapExceeded, NotAKnotMosaic, SizeMismatch
from .mosaic import Mosaic, inject_times, is_knot_mosaic, parse_tcode

ORBIT_CAP = ENUMERATE_CAP


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE_UP_TO_BOUND = "false_up_to_bound"
    UNKNOWN = "unknown"

    def __bool__(self) -> bool:
        return self is Verdict.TRUE


@dataclass(frozen=True)
class OrbitPartition:
    n: int
    basis: Basis
    class_of: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]

    def orbit_of(self, m: Mosaic) -> int:
        return self.class_of[self.basis.index(m)]

    def members(self, orbit_id: int) -> list[Mosaic]:
        return [self.basis[i] for i in self.orbits[orbit_id]]

    def representatives(self) -> list[Mosaic]:
        """Lex-least member of each orbit, in orbit id order."""
        return [self.basis[o[0]] for o in self.orbits]

    def sizes(self) -> list[int]:
        return [len(o) for o in self.orbits]


def cache_dir() -> Path:
    env = os.environ.get("MOSAIC_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "knotmosaic"


def _cache_path(n: int, table: moves.MoveTable) -> Path:
    return cache_dir() / f"orbits-n{n}-{table.key}.txt"


def _from_classes(n: int, b: Basis, groups: list[list[int]]) -> OrbitPartition:
    groups = sorted(sorted(g) for g in groups)
    class_of = [0] * len(b)
    for oid, g in enumerate(groups):
        for i in g:
            class_of[i] = oid
    return OrbitPartition(n, b, tuple(class_of), tuple(tuple(g) for g in groups))


def _read_cache(path: Path, n: int, b: Basis) -> OrbitPartition | None:
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError:
        return None
    groups = []
    try:
        for line in lines:
            if not line.strip() or line.startswith("#"):
                continue
            _, codes = line.split(":", 1)
            groups.append([b.index(parse_tcode(c)) for c in codes.split()])
    except (ValueError, NotAKnotMosaic):
        return None
    if sum(len(g) for g in groups) != len(b):
        return None
    return _from_classes(n, b, groups)


def _write_cache(path: Path, part: OrbitPartition) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(f"# orbits of knot {part.n}-mosaics\n")
            for oid, members in enumerate(part.orbits):
                fh.write(f"{oid}: " + " ".join(part.basis[i].tcode() for i in members) + "\n")
        os.replace(tmp, path)
    except OSError:
        pass  # the cache is an optimisation only


def compute_orbits(n: int, table: moves.MoveTable | None = None, allow_large: bool = False) -> OrbitPartition:
    """Union-find over every generator's transpositions (no cache)."""
    b = get_basis(n, allow_large)
    parent = list(range(len(b)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in moves.generators(n, table):
        for a, c in moves.as_transpositions(g, b):
            ra, rc = find(a), find(c)
            if ra != rc:
                parent[max(ra, rc)] = min(ra, rc)
    groups: dict[int, list[int]] = {}
    for i in range(len(b)):
        groups.setdefault(find(i), []).append(i)
    return _from_classes(n, b, list(groups.values()))


def orbits(n: int, table: moves.MoveTable | None = None, allow_large: bool = False,
           use_cache: bool = True) -> OrbitPartition:
    """Partition of K(n) into knot n-types."""
    cap = LARGE_ENUMERATE_CAP if allow_large else ORBIT_CAP
    if n > cap:
        raise CapExceeded("orbits", n, cap)
    table = table or moves.default_table()
    return _orbits(n, table, allow_large, use_cache)


@lru_cache(maxsize=8)
def _orbits(n: int, table: moves.MoveTable, allow_large: bool, use_cache: bool) -> OrbitPartition:
    if use_cache:
        path = _cache_path(n, table)
        b = get_basis(n, allow_large)
        part = _read_cache(path, n, b)
        if part is not None:
            return part
    part = compute_orbits(n, table, allow_large)
    if use_cache:
        _write_cache(_cache_path(n, table), part)
    return part


def _require_knot(*ms: Mosaic) -> None:
    for m in ms:
        if not is_knot_mosaic(m):
            raise NotAKnotMosaic(m.tcode())


def same_knot_type_n(m1: Mosaic, m2: Mosaic, table: moves.MoveTable | None = None,
                     allow_large: bool = False) -> bool:
    if m1.n != m2.n:
        raise SizeMismatch(f"{m1.n}-mosaic vs {m2.n}-mosaic")
    _require_knot(m1, m2)
    if m1 == m2:
        return True
    part = orbits(m1.n, table, allow_large)
    return part.orbit_of(m1) == part.orbit_of(m2)


def same_knot_type(m1: Mosaic, m2: Mosaic, max_pad: int = 0, table: moves.MoveTable | None = None,
                   allow_large: bool = False) -> Verdict:
    """Stabilised equivalence, testing paddings ``l = 0 .. max_pad``.

    The smaller mosaic is injected up to the larger size plus ``l``, the
    larger one ``l`` times.  A negative answer is only ever relative to the
    paddings that could be tested.
    """
    _require_knot(m1, m2)
    small, large = (m1, m2) if m1.n <= m2.n else (m2, m1)
    tested_all = True
    for pad in range(max_pad + 1):
        a = inject_times(small, large.n - small.n + pad)
        b = inject_times(large, pad)
        try:
            if same_knot_type_n(a, b, table, allow_large):
                return Verdict.TRUE
        except CapExceeded:
            tested_all = False
            break
    return Verdict.FALSE_UP_TO_BOUND if tested_all else Verdict.UNKNOWN


def mosaic_number(m: Mosaic, bound: int, max_pad: int = 0, table: moves.MoveTable | None = None,
                  allow_large: bool = False) -> int | None:
    """Smallest s <= bound with a knot s-mosaic of the same knot mosaic type.

    Each orbit representative of K(s) is tried for ascending s.  Returns
    ``None`` when no witness turns up within the bound and the caps.
    """
    _require_knot(m)
    for s in range(1, bound + 1):
        if s == m.n:
            return s
        try:
            reps = orbits(s, table, allow_large).representatives()
        except CapExceeded:
            return None
        for rep in reps:
            if same_knot_type(m, rep, max_pad, table, allow_large) is Verdict.TRUE:
                return s
    return None


def max_crossings(n: int, allow_large: bool = False) -> int:
    """Largest number of crossing tiles in any knot n-mosaic."""
    return max(m.crossings() for m in get_basis(n, allow_large))
