"""Command line interface.

Exit status: 0 success, 1 domain failure (bad t-code, invalid mosaic, ...),
2 usage error, 3 a size cap was hit.  ``--json`` prints one JSON document
carrying ``"schema": 1``.

Rendering draws each tile as a 3x3 block of box-drawing characters:
arcs use rounded corners, the two double-arc tiles overlay two corners, a
crossing with the vertical strand on top shows an unbroken vertical bar and
the other crossing an unbroken horizontal bar.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import enumeration, equivalence, moves, oriented, quantum
from .errors import CapExceeded, MosaicError
from .mosaic import Mosaic, is_knot_mosaic, parse_tcode, trace

SCHEMA = 1

GLYPHS = {
    0: ("   ", "   ", "   "),
    1: ("   ", "─╮ ", " │ "),
    2: ("   ", " ╭─", " │ "),
    3: (" │ ", " ╰─", "   "),
    4: (" │ ", "─╯ ", "   "),
    5: ("   ", "───", "   "),
    6: (" │ ", " │ ", " │ "),
    7: (" ╰─", "─╮ ", " │ "),
    8: ("─╯ ", " ╭─", " │ "),
    9: (" │ ", "─│─", " │ "),
    10: (" │ ", "───", " │ "),
}


def render(m: Mosaic, frame: bool = True) -> list[str]:
    lines = []
    for row in m.rows():
        for k in range(3):
            body = "".join(GLYPHS[t][k] for t in row)
            lines.append(f"┃{body}┃" if frame else body)
    if frame:
        bar = "━" * (3 * m.n)
        lines = [f"┏{bar}┓"] + lines + [f"┗{bar}┛"]
    return lines


@dataclass
class CommandResult:
    code: int
    output: str = ""
    error: str = ""


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def _number(v):
    if isinstance(v, Fraction):
        return float(v) if v.denominator != 1 else int(v)
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return v


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _clean(x: float) -> float:
    return 0.0 if abs(x) < 1e-15 else x


def _state_lines(psi: quantum.QuantumKnotState) -> list[str]:
    return [f"{_clean(c.real):.15g} {_clean(c.imag):.15g} {m.tcode()}" for m, c in _terms(psi)]


def _terms(psi: quantum.QuantumKnotState):
    # rounding residue such as cos(pi/2) is not worth printing
    return [(m, c) for m, c in psi.items() if abs(c) >= 1e-15]


def _observable_lines(omega: quantum.Observable) -> list[str]:
    b = enumeration.basis(omega.n)
    out = []
    for (i, j), v in sorted(omega.entries.items()):
        if i > j:
            continue
        c = complex(v)
        out.append(f"{_fmt(c.real)} {_fmt(c.imag)} {b[i].tcode()} {b[j].tcode()}")
    return out


_MOVE_SPEC = re.compile(r"^(?P<name>[^@#]+?)(?:#(?P<variant>\d+))?(?:@(?P<i>\d+),(?P<j>\d+))?$")


def parse_move_spec(spec: str, n: int, table: moves.MoveTable) -> quantum.UnitaryMove:
    """Resolve a move argument into a unitary on order-n states.

    Accepted forms: ``NAME@i,j`` or ``NAME#r@i,j`` for a template (``r``
    picks the r-th concrete pattern pair, sorted; default 0),
    ``A<->B@i,j`` with explicit t-codes, ``tunneling@i,j``,
    ``hyperbolic@i,j``, ``elliptic@i,j`` and ``mirror``.
    """
    if spec == "mirror":
        return quantum.mirror(n)
    m = _MOVE_SPEC.match(spec)
    if m is None or m.group("i") is None:
        raise _UsageError(f"bad move {spec!r}; expected NAME@i,j\n")
    name, i, j = m.group("name"), int(m.group("i")), int(m.group("j"))
    if name == "tunneling":
        return quantum.tunneling(i, j, n)
    if name == "hyperbolic":
        return quantum.hyperbolic(i, j, n)
    if name == "elliptic":
        return quantum.elliptic(i, j, n)
    if "<->" in name:
        a, b = (parse_tcode(s) for s in name.split("<->"))
        return quantum.UnitaryMove.from_move(moves.DeterministicMove.make(a, b, (i, j), n, "explicit"))
    try:
        template = table[name]
    except KeyError:
        names = ", ".join(t.name for t in table)
        raise _UsageError(f"unknown move {name!r}; templates: {names}\n") from None
    pairs = sorted(moves.expand_patterns(template))
    r = int(m.group("variant") or 0)
    if r >= len(pairs):
        raise _UsageError(f"{name} has {len(pairs)} variants (0..{len(pairs) - 1})\n")
    a, b = pairs[r]
    k = template.k
    return quantum.UnitaryMove.from_move(
        moves.DeterministicMove.make(Mosaic(k, a), Mosaic(k, b), (i, j), n, f"{name}#{r}"))


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="knotmosaic", description="Knot mosaics and quantum knot systems.")
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.add_argument("--moves", metavar="FILE", help="move table to use instead of the built-in one")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check that t-codes are knot mosaics")
    s.add_argument("tcode", nargs="+")
    s.add_argument("--oriented", action="store_true", help="t-codes use the 29 oriented tiles")

    s = sub.add_parser("render", help="draw a mosaic with box-drawing characters")
    s.add_argument("tcode")
    s.add_argument("--format", choices=["box", "tcode"], default="box")

    s = sub.add_parser("enumerate", help="list knot n-mosaics in lex order")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["tcode", "json"], default="tcode")
    s.add_argument("--allow-large", action="store_true", help=f"permit n = {enumeration.LARGE_ENUMERATE_CAP}")

    s = sub.add_parser("count", help="number of knot n-mosaics")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--method", choices=["transfer", "dfs", "brute"], default="transfer")
    s.add_argument("--allow-large", action="store_true")

    s = sub.add_parser("orbits", help="knot n-types of K(n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--allow-large", action="store_true")
    s.add_argument("--no-cache", action="store_true")

    s = sub.add_parser("equiv", help="same knot mosaic type, up to a padding bound")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--max-pad", type=int, default=0)

    s = sub.add_parser("mosaic-number", help="smallest mosaic size found for a knot mosaic's type")
    s.add_argument("tcode")
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--max-pad", type=int, default=0)

    s = sub.add_parser("evolve", help="Schroedinger evolution under one move's Hamiltonian")
    s.add_argument("--state", required=True)
    s.add_argument("--move", required=True, help="NAME[#r]@i,j, A<->B@i,j, tunneling@i,j, ... or mirror")
    s.add_argument("--t", type=float, required=True)

    s = sub.add_parser("measure", help="measurement distribution or sampled histogram")
    s.add_argument("--state", required=True)
    s.add_argument("--obs", required=True)
    s.add_argument("--shots", type=int)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("invariant-check", help="does an observable commute with every generator")
    s.add_argument("--obs", required=True)
    s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("average", help="sum of an observable's conjugates under the ambient group")
    s.add_argument("--obs", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--cap", type=int, default=10_000)
    return p


def _emit(args, payload: dict, lines: list[str], code: int = 0) -> CommandResult:
    if args.json:
        doc = {"schema": SCHEMA, "command": args.command, **payload}
        return CommandResult(code, json.dumps(doc, ensure_ascii=False) + "\n")
    return CommandResult(code, "".join(line + "\n" for line in lines))


def _cmd_validate(args, table):
    results = []
    ok = True
    for text in args.tcode:
        if args.oriented:
            m = oriented.parse_oriented(text)
            valid = oriented.is_oriented_knot_mosaic(m)
        else:
            m = parse_tcode(text)
            valid = is_knot_mosaic(m)
        ok &= valid
        entry = {"tcode": m.tcode(), "n": m.n, "valid": valid}
        if valid and not args.oriented:
            summary = trace(m)
            entry.update(components=summary.components, crossings=summary.crossings)
        results.append(entry)
    lines = []
    for e in results:
        extra = f" components={e['components']} crossings={e['crossings']}" if "components" in e else ""
        lines.append(f"{e['tcode']}: {'valid' if e['valid'] else 'invalid'}{extra}")
    return _emit(args, {"results": results}, lines, 0 if ok else 1)


def _cmd_render(args, table):
    m = parse_tcode(args.tcode)
    lines = [m.tcode()] if args.format == "tcode" else render(m)
    return _emit(args, {"tcode": m.tcode(), "lines": render(m)}, lines)


def _cmd_enumerate(args, table):
    ms = enumeration.enumerate_mosaics(args.n, args.allow_large)
    codes = [m.tcode() for m in ms]
    if args.format == "json" and not args.json:
        return CommandResult(0, json.dumps({"schema": SCHEMA, "n": args.n, "mosaics": codes}) + "\n")
    return _emit(args, {"n": args.n, "count": len(codes), "mosaics": codes}, codes)


def _cmd_count(args, table):
    if args.method == "dfs":
        c = enumeration.dfs_count(args.n, args.allow_large)
    elif args.method == "brute":
        c = enumeration.brute_force_count(args.n)
    else:
        c = enumeration.count(args.n)
    return _emit(args, {"n": args.n, "method": args.method, "count": str(c)}, [str(c)])


def _cmd_orbits(args, table):
    part = equivalence.orbits(args.n, table, args.allow_large, use_cache=not args.no_cache)
    orbs = [[part.basis[i].tcode() for i in o] for o in part.orbits]
    lines = [f"{k}: " + " ".join(o) for k, o in enumerate(orbs)]
    return _emit(args, {"n": args.n, "orbits": orbs}, lines)


def _cmd_equiv(args, table):
    a, b = parse_tcode(args.a), parse_tcode(args.b)
    verdict = equivalence.same_knot_type(a, b, args.max_pad, table)
    words = {
        equivalence.Verdict.TRUE: "equivalent",
        equivalence.Verdict.FALSE_UP_TO_BOUND: f"not equivalent up to padding {args.max_pad}",
        equivalence.Verdict.UNKNOWN: "unknown (size cap reached)",
    }
    return _emit(args, {"a": a.tcode(), "b": b.tcode(), "max_pad": args.max_pad, "verdict": verdict.value},
                 [words[verdict]])


def _cmd_mosaic_number(args, table):
    m = parse_tcode(args.tcode)
    value = equivalence.mosaic_number(m, args.bound, args.max_pad, table)
    text = str(value) if value is not None else "unknown"
    return _emit(args, {"tcode": m.tcode(), "bound": args.bound, "mosaic_number": value}, [text])


def _cmd_evolve(args, table):
    psi, norm = quantum.load_state(args.state)
    g = parse_move_spec(args.move, psi.n, table)
    out = quantum.evolve(psi, g, args.t)
    payload = {
        "move": g.name, "t": args.t, "input_norm": norm,
        "state": [{"re": _clean(c.real), "im": _clean(c.imag), "tcode": m.tcode()} for m, c in _terms(out)],
    }
    return _emit(args, payload, _state_lines(out))


def _cmd_measure(args, table):
    psi, _ = quantum.load_state(args.state)
    omega = quantum.load_observable(args.obs)
    if args.shots is not None:
        hist = quantum.sample(psi, omega, args.shots, args.seed)
        lines = [f"{_fmt(_number(v))} {c}" for v, c in hist.items()]
        return _emit(args, {"shots": args.shots, "seed": args.seed,
                            "histogram": [[_number(v), c] for v, c in hist.items()]}, lines)
    dist = quantum.measure(psi, omega)
    lines = [f"{_fmt(_number(v))} {p:.15g}" for v, p in dist.items()]
    return _emit(args, {"distribution": [[_number(v), p] for v, p in dist.items()]}, lines)


def _cmd_invariant_check(args, table):
    omega = quantum.load_observable(args.obs)
    result = quantum.is_invariant(omega, args.n, table)
    return _emit(args, {"n": args.n, "invariant": result}, ["invariant" if result else "not invariant"])


def _cmd_average(args, table):
    omega = quantum.load_observable(args.obs)
    avg = quantum.group_average(omega, args.n, args.cap, table)
    lines = _observable_lines(avg)
    return _emit(args, {"n": args.n, "entries": lines}, lines)


_COMMANDS = {
    "validate": _cmd_validate,
    "render": _cmd_render,
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "orbits": _cmd_orbits,
    "equiv": _cmd_equiv,
    "mosaic-number": _cmd_mosaic_number,
    "evolve": _cmd_evolve,
    "measure": _cmd_measure,
    "invariant-check": _cmd_invariant_check,
    "average": _cmd_average,
}


def run(argv: list[str] | None = None) -> CommandResult:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        return CommandResult(2, error=str(e))
    except SystemExit as e:  # --help
        return CommandResult(int(e.code or 0))
    try:
        table = moves.load_table(args.moves)
        return _COMMANDS[args.command](args, table)
    except _UsageError as e:
        return CommandResult(2, error=str(e))
    except CapExceeded as e:
        return CommandResult(3, error=f"cap exceeded: {e}\n")
    except (MosaicError, OSError, ValueError) as e:
        return CommandResult(1, error=f"error: {e}\n")


def main(argv: list[str] | None = None) -> int:
    result = run(argv)
    sys.stdout.write(result.output)
    sys.stderr.write(result.error)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
