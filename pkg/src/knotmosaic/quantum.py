"""Quantum knot systems.

The Hilbert space of order n has the knot n-mosaics as an orthonormal basis,
ordered lexicographically.  Every ambient-group element permutes that basis,
so moves act on states by relabelling amplitudes.

States are stored sparsely, keyed by mosaic rather than by basis index, so a
state of order 5 or 6 never forces the whole basis to be enumerated.  Since
``Mosaic`` orders lexicographically, sorting the keys gives basis order.
Observables are keyed by basis index and need the basis of their order.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Number
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from . import moves
from .enumeration import Basis, basis as get_basis
from .equivalence import Verdict, orbits
from .errors import CapExceeded, NotAKnotMosaic, NotAnOrbit, NotHermitian, OutOfRange, ParseError, SizeMismatch
from .mosaic import Mosaic, is_knot_mosaic, parse_tcode

TOL = 1e-12
DENSE_CAP = 4096  # largest basis turned into a dense matrix


# ---------------------------------------------------------------------------
# basis helpers


def basis(n: int, allow_large: bool = False) -> Basis:
    return get_basis(n, allow_large)


def index(m: Mosaic) -> int:
    return get_basis(m.n).index(m)


def mosaic(i: int, n: int) -> Mosaic:
    return get_basis(n)[i]


# ---------------------------------------------------------------------------
# states


class QuantumKnotState:
    """Sparse superposition of knot n-mosaics.

    Zero amplitudes are dropped.  Construction does not normalise; use
    ``normalized`` or the ``superposition`` helper for unit vectors.
    """

    __slots__ = ("n", "_amps")

    def __init__(self, n: int, amplitudes: Mapping[Mosaic, complex]):
        amps = {}
        for m, c in amplitudes.items():
            if m.n != n:
                raise SizeMismatch(f"{m.n}-mosaic in a state of order {n}")
            if not is_knot_mosaic(m):
                raise NotAKnotMosaic(m.tcode())
            c = complex(c)
            if c != 0:
                amps[m] = amps.get(m, 0) + c
        self.n = n
        self._amps = {m: amps[m] for m in sorted(amps) if amps[m] != 0}

    @classmethod
    def basis_state(cls, m: Mosaic) -> "QuantumKnotState":
        return cls(m.n, {m: 1})

    @classmethod
    def superposition(cls, mosaics: Sequence[Mosaic], amplitudes: Sequence[complex] | None = None) -> "QuantumKnotState":
        if not mosaics:
            raise ValueError("empty superposition")
        if amplitudes is None:
            amplitudes = [1] * len(mosaics)
        terms: dict[Mosaic, complex] = {}
        for m, c in zip(mosaics, amplitudes, strict=True):
            terms[m] = terms.get(m, 0) + c
        return cls(mosaics[0].n, terms).normalized()

    @classmethod
    def from_vector(cls, b: Basis, vector: Sequence[complex]) -> "QuantumKnotState":
        return cls(b.n, {b[i]: c for i, c in enumerate(vector) if abs(c) > 0})

    @property
    def amplitudes(self) -> dict[Mosaic, complex]:
        return dict(self._amps)

    def items(self):
        return self._amps.items()

    def support(self) -> list[Mosaic]:
        return list(self._amps)

    def amplitude(self, m: Mosaic) -> complex:
        return self._amps.get(m, 0j)

    def norm_squared(self) -> float:
        return math.fsum(abs(c) ** 2 for c in self._amps.values())

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def is_normalized(self, tol: float = TOL) -> bool:
        return abs(self.norm_squared() - 1) < tol

    def normalized(self) -> "QuantumKnotState":
        r = self.norm()
        if r == 0:
            raise ValueError("cannot normalise the zero state")
        return QuantumKnotState(self.n, {m: c / r for m, c in self._amps.items()})

    def inner(self, other: "QuantumKnotState") -> complex:
        """<self|other>."""
        return sum((c.conjugate() * other.amplitude(m) for m, c in self._amps.items()), 0j)

    def indexed(self, b: Basis) -> dict[int, complex]:
        return {b.index(m): c for m, c in self._amps.items()}

    def to_vector(self, b: Basis) -> np.ndarray:
        v = np.zeros(len(b), dtype=complex)
        for i, c in self.indexed(b).items():
            v[i] = c
        return v

    def isclose(self, other: "QuantumKnotState", tol: float = 1e-12) -> bool:
        if self.n != other.n:
            return False
        keys = set(self._amps) | set(other._amps)
        return all(abs(self.amplitude(m) - other.amplitude(m)) < tol for m in keys)

    def __eq__(self, other) -> bool:
        return isinstance(other, QuantumKnotState) and self.n == other.n and self._amps == other._amps

    def __hash__(self):
        return hash((self.n, tuple(self._amps.items())))

    def __repr__(self) -> str:
        terms = " + ".join(f"({c:.6g})|{m.tcode()}>" for m, c in self._amps.items())
        return f"QuantumKnotState(n={self.n}, {terms or '0'})"


def _check_size(n1: int, n2: int) -> None:
    if n1 != n2:
        raise SizeMismatch(f"order {n1} vs order {n2}")


# ---------------------------------------------------------------------------
# unitary moves


@dataclass(frozen=True)
class UnitaryMove:
    """An involutive permutation of K(n), given by its action on mosaics."""

    n: int
    name: str
    act: Callable[[Mosaic], Mosaic] = field(compare=False)
    move: moves.DeterministicMove | None = None

    @classmethod
    def from_move(cls, move: moves.DeterministicMove) -> "UnitaryMove":
        return cls(move.n, move.label(), move.__call__, move)

    def __call__(self, m: Mosaic) -> Mosaic:
        if m.n != self.n:
            raise SizeMismatch(f"{self.n}-move applied to a {m.n}-mosaic")
        return self.act(m)

    def transpositions(self, b: Basis) -> list[tuple[int, int]]:
        """Disjoint index pairs swapped by this move on the basis."""
        _check_size(self.n, b.n)
        if self.move is not None:
            return moves.as_transpositions(self.move, b)
        pairs = []
        for a, m in enumerate(b):
            image = b.index(self.act(m))
            if a < image:
                pairs.append((a, image))
        return pairs

    def permutation(self, b: Basis) -> list[int]:
        perm = list(range(len(b)))
        for a, c in self.transpositions(b):
            perm[a], perm[c] = c, a
        return perm


def apply_unitary(g: UnitaryMove, psi: QuantumKnotState) -> QuantumKnotState:
    _check_size(g.n, psi.n)
    return QuantumKnotState(psi.n, {g.act(m): c for m, c in psi.items()})


@lru_cache(maxsize=8)
def generator_unitaries(n: int, table: moves.MoveTable | None = None) -> tuple[UnitaryMove, ...]:
    return tuple(UnitaryMove.from_move(g) for g in moves.generators(n, table))


@lru_cache(maxsize=8)
def generator_transpositions(n: int, table: moves.MoveTable | None = None) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Transposition lists of all generators on K(n); identities omitted."""
    b = get_basis(n)
    out = []
    for g in moves.generators(n, table):
        pairs = moves.as_transpositions(g, b)
        if pairs:
            out.append(tuple(pairs))
    return tuple(out)


# ---------------------------------------------------------------------------
# Hamiltonians and time evolution


@dataclass(frozen=True)
class Hamiltonian:
    """(pi/2) * sum over swapped pairs (a, b) of (|a> - |b>)(<a| - <b|)."""

    n: int
    pairs: tuple[tuple[int, int], ...]
    size: int
    scale: float = math.pi / 2

    def eigenvalues(self) -> list[float]:
        """Closed form: pi once per pair, 0 for everything else."""
        return sorted([0.0] * (self.size - len(self.pairs)) + [2 * self.scale] * len(self.pairs))

    def dense(self) -> np.ndarray:
        if self.size > DENSE_CAP:
            raise CapExceeded("dense Hamiltonian", self.size, DENSE_CAP)
        h = np.zeros((self.size, self.size))
        for a, b in self.pairs:
            h[a, a] += self.scale
            h[b, b] += self.scale
            h[a, b] -= self.scale
            h[b, a] -= self.scale
        return h


def hamiltonian(g: UnitaryMove, b: Basis | None = None) -> Hamiltonian:
    b = b or get_basis(g.n)
    return Hamiltonian(g.n, tuple(g.transpositions(b)), len(b))


def evolve(psi: QuantumKnotState, g: UnitaryMove, t: float) -> QuantumKnotState:
    """exp(-i H_g t) applied to ``psi`` in closed form (hbar = 1).

    Each swapped pair (a, b) evolves as a two-level system; states the move
    fixes are annihilated by H_g and stay put.
    """
    _check_size(g.n, psi.n)
    theta = math.pi * t / 2
    phase = cmath.exp(-1j * theta)
    cos, sin = math.cos(theta), math.sin(theta)
    out: dict[Mosaic, complex] = {}
    for m, c in psi.items():
        partner = g.act(m)
        if partner == m:
            out[m] = out.get(m, 0) + c
            continue
        if partner in psi._amps and m > partner:
            continue  # handled with the partner
        other = psi.amplitude(partner)
        out[m] = phase * (cos * c + 1j * sin * other)
        out[partner] = phase * (cos * other + 1j * sin * c)
    return QuantumKnotState(psi.n, out)


# ---------------------------------------------------------------------------
# the extra unitaries


def _check_cell(n: int, i: int, j: int, k: int = 1) -> None:
    if not (0 <= i <= n - k and 0 <= j <= n - k):
        raise OutOfRange(f"location ({i},{j}) invalid for a {k}x{k} block of a {n}-mosaic")


def tunneling(i: int, j: int, n: int) -> UnitaryMove:
    """Swap the two crossing tiles at one cell."""
    _check_cell(n, i, j)
    mv = moves.DeterministicMove(n, 1, (i, j), (9,), (10,), "tunneling")
    return UnitaryMove(n, f"tunneling@{i},{j}", mv.__call__, mv)


def hyperbolic(i: int, j: int, n: int) -> UnitaryMove:
    """Swap the two double-arc tiles at one cell."""
    _check_cell(n, i, j)
    mv = moves.DeterministicMove(n, 1, (i, j), (7,), (8,), "hyperbolic")
    return UnitaryMove(n, f"hyperbolic@{i},{j}", mv.__call__, mv)


def elliptic(i: int, j: int, n: int) -> UnitaryMove:
    """Swap a small circle with a blank 2x2 block."""
    _check_cell(n, i, j, 2)
    mv = moves.DeterministicMove(n, 2, (i, j), (0, 0, 0, 0), (2, 1, 3, 4), "elliptic")
    return UnitaryMove(n, f"elliptic@{i},{j}", mv.__call__, mv)


_MIRROR = {9: 10, 10: 9}


def _mirror(m: Mosaic) -> Mosaic:
    return Mosaic(m.n, tuple(_MIRROR.get(t, t) for t in m.cells))


def mirror(n: int) -> UnitaryMove:
    """Every crossing flipped at once."""
    return UnitaryMove(n, "mirror", _mirror)


# ---------------------------------------------------------------------------
# observables


def _as_number(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else v
    if isinstance(v, int):
        return v
    if isinstance(v, complex) and v.imag == 0:
        v = v.real
    if isinstance(v, float) and v.is_integer():
        return int(v)
    return v


def _close(a, b, tol: float = TOL) -> bool:
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return a == b
    return abs(complex(a) - complex(b)) < tol


def _conj(v):
    return v.conjugate() if isinstance(v, complex) else v


class Observable:
    """Hermitian operator on the order-n Hilbert space, stored by entries.

    ``entries`` maps basis index pairs (i, j) to values.  Integers and
    fractions are kept exact so commutation checks on 0/1 matrices need no
    tolerance.
    """

    def __init__(self, n: int, entries: Mapping[tuple[int, int], Number], size: int | None = None):
        self.n = n
        self.size = size if size is not None else len(get_basis(n))
        clean: dict[tuple[int, int], Number] = {}
        for (i, j), v in entries.items():
            if not (0 <= i < self.size and 0 <= j < self.size):
                raise OutOfRange(f"entry ({i},{j}) outside a basis of size {self.size}")
            v = _as_number(v)
            if v != 0:
                clean[(i, j)] = v
        for (i, j), v in clean.items():
            if not _close(_conj(v), clean.get((j, i), 0)):
                raise NotHermitian(f"entry ({i},{j}) = {v} but ({j},{i}) = {clean.get((j, i), 0)}")
        self.entries = clean
        self._rows: dict[int, dict[int, Number]] | None = None
        self._spectrum = None

    @classmethod
    def diagonal(cls, n: int, values: Mapping[int, Number], size: int | None = None) -> "Observable":
        return cls(n, {(i, i): v for i, v in values.items()}, size)

    @classmethod
    def projector(cls, n: int, indices: Iterable[int], size: int | None = None) -> "Observable":
        return cls.diagonal(n, {i: 1 for i in indices}, size)

    @classmethod
    def identity(cls, n: int) -> "Observable":
        size = len(get_basis(n))
        return cls.diagonal(n, {i: 1 for i in range(size)}, size)

    def rows(self) -> dict[int, dict[int, Number]]:
        if self._rows is None:
            rows: dict[int, dict[int, Number]] = {}
            for (i, j), v in self.entries.items():
                rows.setdefault(i, {})[j] = v
            self._rows = rows
        return self._rows

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self.entries)

    def support(self) -> list[int]:
        return sorted({i for i, _ in self.entries})

    def dense(self) -> np.ndarray:
        if self.size > DENSE_CAP:
            raise CapExceeded("dense observable", self.size, DENSE_CAP)
        a = np.zeros((self.size, self.size), dtype=complex)
        for (i, j), v in self.entries.items():
            a[i, j] = complex(v)
        return a

    def conjugated(self, perm: Sequence[int] | Mapping[int, int]) -> "Observable":
        """P Omega P^-1 for the permutation matrix sending |i> to |perm[i]>."""
        if isinstance(perm, Mapping):
            def image(i):
                return perm.get(i, i)
        else:
            image = perm.__getitem__
        return Observable(self.n, {(image(i), image(j)): v for (i, j), v in self.entries.items()}, self.size)

    def key(self) -> frozenset:
        return frozenset(self.entries.items())

    def __add__(self, other: "Observable") -> "Observable":
        _check_size(self.n, other.n)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return Observable(self.n, out, self.size)

    def __eq__(self, other) -> bool:
        return isinstance(other, Observable) and self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, self.key()))

    def __repr__(self) -> str:
        return f"Observable(n={self.n}, {len(self.entries)} entries)"

    def spectrum(self) -> list[tuple[float, np.ndarray | None, list[int]]]:
        """Eigenvalue groups as (value, eigenvector columns, support indices).

        Diagonal observables are handled exactly: each group is a set of basis
        indices and the vector slot is ``None``.  Otherwise the support block
        is diagonalised; basis states outside the support sit in eigenvalue 0.
        """
        if self._spectrum is None:
            self._spectrum = self._compute_spectrum()
        return self._spectrum

    def _compute_spectrum(self):
        if self.is_diagonal():
            groups: dict[Number, list[int]] = {}
            for (i, _), v in self.entries.items():
                groups.setdefault(v, []).append(i)
            return [(v, None, sorted(idx)) for v, idx in sorted(groups.items(), key=lambda kv: float(kv[0]))]
        support = self.support()
        pos = {s: k for k, s in enumerate(support)}
        block = np.zeros((len(support), len(support)), dtype=complex)
        for (i, j), v in self.entries.items():
            block[pos[i], pos[j]] = complex(v)
        vals, vecs = np.linalg.eigh(block)
        out = []
        start = 0
        for k in range(1, len(vals) + 1):
            if k == len(vals) or vals[k] - vals[start] > 1e-9:
                out.append((float(np.mean(vals[start:k])), vecs[:, start:k], support))
                start = k
        return out


def measure(psi: QuantumKnotState, omega: Observable) -> dict[float, float]:
    """Outcome distribution of measuring ``omega`` on ``psi``.

    p(lambda) = <psi|P_lambda|psi> / <psi|psi>.  Eigenvalue 0 is reported
    whenever it carries probability or belongs to the spectrum.
    """
    _check_size(psi.n, omega.n)
    total = psi.norm_squared()
    if total == 0:
        raise ValueError("cannot measure the zero state")
    b = get_basis(psi.n)
    amps = psi.indexed(b)
    out: dict[float, float] = {}
    covered = 0.0
    for value, vecs, idx in omega.spectrum():
        if vecs is None:
            w = math.fsum(abs(amps.get(i, 0)) ** 2 for i in idx)
        else:
            local = np.array([amps.get(i, 0) for i in idx], dtype=complex)
            w = float(np.sum(np.abs(vecs.conj().T @ local) ** 2))
        key = _outcome_key(value)
        out[key] = out.get(key, 0.0) + w / total
        covered += w
    rest = max(total - covered, 0.0) / total
    in_support = set(omega.support())
    if rest > 0 or len(in_support) < omega.size:
        out[0] = out.get(0, 0.0) + rest
    return dict(sorted(out.items()))


def _outcome_key(v):
    if isinstance(v, (int, Fraction)):
        return v
    v = float(v.real if isinstance(v, complex) else v)
    r = round(v)
    return int(r) if abs(v - r) < 1e-9 else v


def sample(psi: QuantumKnotState, omega: Observable, shots: int, seed: int = 0) -> dict:
    """Histogram of ``shots`` independent measurement outcomes."""
    if shots < 1:
        raise ValueError("shots must be at least 1")
    dist = measure(psi, omega)
    values = list(dist)
    probs = np.array([dist[v] for v in values], dtype=float)
    probs = np.clip(probs, 0, None)
    probs /= probs.sum()
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, probs)
    return {v: int(c) for v, c in zip(values, counts) if c}


def tile_observable(p: int, i: int, j: int, n: int) -> Observable:
    """Projector onto the basis mosaics carrying tile ``p`` at cell (i, j)."""
    _check_cell(n, i, j)
    if not 0 <= p <= 10:
        raise ValueError(f"no tile T{p}")
    b = get_basis(n)
    return Observable.projector(n, b.with_block(1, (i, j), (p,)), len(b))


def is_invariant(omega: Observable, n: int | None = None, table: moves.MoveTable | None = None) -> bool:
    """True when ``omega`` commutes with every generator of the ambient group.

    A generator permutes the basis, so commuting means the entry table is
    unchanged when both indices are relabelled.  Only rows touched by the
    swap need checking; Hermitian symmetry covers the columns.
    """
    n = omega.n if n is None else n
    _check_size(omega.n, n)
    rows = omega.rows()
    for pairs in generator_transpositions(n, table):
        perm = {}
        for a, c in pairs:
            perm[a], perm[c] = c, a
        for a, c in pairs:
            for src, dst in ((a, c), (c, a)):
                row_src, row_dst = rows.get(src, {}), rows.get(dst, {})
                if len(row_src) != len(row_dst):
                    return False
                for j, v in row_src.items():
                    if not _close(row_dst.get(perm.get(j, j), 0), v):
                        return False
    return True


def orbit_projector(orbit: Iterable[int], n: int, table: moves.MoveTable | None = None) -> Observable:
    members = tuple(sorted(set(orbit)))
    part = orbits(n, table)
    if not members or part.orbits[part.class_of[members[0]]] != members:
        raise NotAnOrbit(f"{list(members)} is not an orbit of K({n})")
    return Observable.projector(n, members, len(part.basis))


def group_average(omega: Observable, n: int | None = None, cap: int = 10_000,
                  table: moves.MoveTable | None = None) -> Observable:
    """Sum of the distinct conjugates of ``omega`` under the ambient group.

    The conjugates are closed up generator by generator; the result commutes
    with every generator.
    """
    n = omega.n if n is None else n
    _check_size(omega.n, n)
    perms = []
    for pairs in generator_transpositions(n, table):
        p = {}
        for a, c in pairs:
            p[a], p[c] = c, a
        perms.append((p, set(p)))
    seen = {omega.key(): omega}
    frontier = [omega]
    while frontier:
        nxt = []
        for obs in frontier:
            touched = {i for i, _ in obs.entries}
            for p, moved in perms:
                if not (touched & moved):
                    continue
                conj = obs.conjugated(p)
                k = conj.key()
                if k not in seen:
                    seen[k] = conj
                    if len(seen) > cap:
                        raise CapExceeded("group_average closure", len(seen), cap)
                    nxt.append(conj)
        frontier = nxt
    total: dict[tuple[int, int], Number] = {}
    for obs in seen.values():
        for k, v in obs.entries.items():
            total[k] = total.get(k, 0) + v
    return Observable(n, total, omega.size)


# ---------------------------------------------------------------------------
# equivalence of quantum knots


def amplitude_multiset(psi: QuantumKnotState, digits: int = 12) -> Counter:
    """Amplitudes with multiplicity; a basis permutation cannot change it."""
    return Counter((round(c.real, digits), round(c.imag, digits)) for _, c in psi.items())


def _state_key(psi: QuantumKnotState, digits: int = 12):
    return tuple((m, round(c.real, digits), round(c.imag, digits)) for m, c in psi.items())


def state_equivalent(psi1: QuantumKnotState, psi2: QuantumKnotState, n: int | None = None, depth: int = 2,
                     table: moves.MoveTable | None = None, frontier_cap: int = 200_000) -> Verdict:
    """Is some ambient-group element carrying ``psi1`` to ``psi2``?

    Returns TRUE on a witness, FALSE_UP_TO_BOUND only when a proof of
    inequivalence was found (amplitude multisets differ, or two basis states
    in different orbits) and UNKNOWN when the word search ran out.
    """
    n = psi1.n if n is None else n
    _check_size(psi1.n, n)
    _check_size(psi2.n, n)
    if amplitude_multiset(psi1) != amplitude_multiset(psi2):
        return Verdict.FALSE_UP_TO_BOUND
    if _state_key(psi1) == _state_key(psi2):
        return Verdict.TRUE
    if len(psi1.support()) == 1:
        (m1,), (m2,) = psi1.support(), psi2.support()
        try:
            part = orbits(n, table)
        except CapExceeded:
            pass
        else:
            return Verdict.TRUE if part.orbit_of(m1) == part.orbit_of(m2) else Verdict.FALSE_UP_TO_BOUND
    gens = moves.generators(n, table)
    target = _state_key(psi2)
    seen = {_state_key(psi1)}
    frontier = [psi1]
    for _ in range(depth):
        nxt = []
        for psi in frontier:
            for g in gens:
                support = psi.support()
                if all(moves.apply(g, m) == m for m in support):
                    continue
                image = QuantumKnotState(n, {moves.apply(g, m): c for m, c in psi.items()})
                k = _state_key(image)
                if k == target:
                    return Verdict.TRUE
                if k not in seen:
                    seen.add(k)
                    nxt.append(image)
                    if len(seen) > frontier_cap:
                        return Verdict.UNKNOWN
        frontier = nxt
    return Verdict.UNKNOWN


# ---------------------------------------------------------------------------
# files


def _parse_amplitude(re_text: str, im_text: str):
    if float(im_text) == 0:
        try:
            return _as_number(Fraction(re_text))
        except ValueError:
            return float(re_text)
    return complex(float(re_text), float(im_text))


def load_state(path: str | Path) -> tuple[QuantumKnotState, float]:
    """Read ``re im tcode`` lines; return the normalised state and the input norm."""
    terms: dict[Mosaic, complex] = {}
    n = None
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 're im tcode'")
        try:
            c = complex(float(parts[0]), float(parts[1]))
        except ValueError:
            raise ParseError(f"line {lineno}: bad amplitude") from None
        m = parse_tcode(parts[2])
        if n is None:
            n = m.n
        elif m.n != n:
            raise SizeMismatch(f"line {lineno}: {m.n}-mosaic in a file of {n}-mosaics")
        terms[m] = terms.get(m, 0) + c
    if n is None:
        raise ParseError("state file has no terms")
    state = QuantumKnotState(n, terms)
    norm = state.norm()
    return state.normalized(), norm


def load_observable(path: str | Path) -> Observable:
    """Read ``re im tcode tcode`` lines (upper triangle) into an observable."""
    raw_entries = []
    n = None
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ParseError(f"line {lineno}: expected 're im tcode tcode'")
        try:
            v = _parse_amplitude(parts[0], parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: bad value") from None
        a, c = parse_tcode(parts[2]), parse_tcode(parts[3])
        if n is None:
            n = a.n
        if a.n != n or c.n != n:
            raise SizeMismatch(f"line {lineno}: mosaic size differs from {n}")
        raw_entries.append((lineno, v, a, c))
    if n is None:
        raise ParseError("observable file has no entries")
    b = get_basis(n)
    entries: dict[tuple[int, int], Number] = {}
    for lineno, v, a, c in raw_entries:
        i, j = b.index(a), b.index(c)
        if i > j:
            i, j, v = j, i, _conj(v)
        if i == j and isinstance(v, complex) and v.imag != 0:
            raise NotHermitian(f"line {lineno}: diagonal entry must be real")
        entries[(i, j)] = entries.get((i, j), 0) + v
        if i != j:
            entries[(j, i)] = entries.get((j, i), 0) + _conj(v)
    return Observable(n, entries, len(b))
