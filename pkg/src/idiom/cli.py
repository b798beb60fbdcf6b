"""Command-line entry point.

Exit status: 0 success, 1 a check failed (non-modular input, golden
mismatch), 2 bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import corpus
from .errors import IdiomError
from .goldie import goldie_nucleus, goldie_zeta
from .intervals import enumerate_intervals
from .lattice import Lattice, validate_idiom
from .nuclei import DEFAULT_CAP, Nucleus, chi, enumerate_nuclei, nucleus, xi
from .quotients import interval_of_quotients, quotient_idiom, saturated_elements
from .report import Report, emit_dot, emit_json, emit_text, lattice_report, nucleus_table
from .reproduce import EXAMPLES, reproduce
from .textio import emit_lattice, read_lattice


class UsageError(Exception):
    pass


def load(source: str) -> Lattice:
    """A lattice file path, or the name of a built-in corpus lattice."""
    path = Path(source)
    if path.exists():
        return read_lattice(path)
    if source in corpus.names():
        return corpus.get(source)
    raise UsageError(f"{source}: no such file or corpus lattice")


def parse_nucleus_arg(L: Lattice, words: Sequence[str], cap: Optional[int]) -> Nucleus:
    """``chi a b``, ``xi a b``, ``zeta`` or a table ``x:y x:y ...``."""
    head, rest = words[0], list(words[1:])
    if head in ("chi", "xi"):
        if len(rest) != 2:
            raise UsageError(f"{head} takes two elements")
        a, b = (L.index(x) for x in rest)
        return chi(L, a, b, cap) if head == "chi" else xi(L, [(a, b)], cap)
    if head == "zeta":
        if rest:
            raise UsageError("zeta takes no arguments")
        return goldie_zeta(L, cap)
    pairs = " ".join(words).replace(",", " ").split()
    mapping = {}
    for p in pairs:
        k, sep, v = p.partition(":")
        if not sep:
            raise UsageError(f"bad nucleus {' '.join(words)!r}")
        mapping[k] = v
    return nucleus(L, mapping)


def _print(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _require_idiom(L: Lattice) -> Optional[int]:
    rep = validate_idiom(L)
    if rep.is_idiom:
        return None
    witness = " ".join(L.label(x) for x in rep.first_violation)
    _print(f"{L.name}: not modular ({rep.violated_law} law fails at {witness})")
    return 1


def cmd_check(args) -> int:
    L = load(args.file)
    rep = validate_idiom(L)
    _print(f"lattice {L.name}: {L.size} elements")
    for key in ("is_lattice", "is_modular", "is_distributive", "is_boolean"):
        _print(f"{key}: {str(getattr(rep, key)).lower()}")
    if rep.violated_law:
        witness = " ".join(L.label(x) for x in rep.first_violation)
        _print(f"violation: {rep.violated_law} law at {witness}")
    return 0 if rep.is_idiom else 1


def cmd_nuclei(args) -> int:
    L = load(args.file)
    if (code := _require_idiom(L)) is not None:
        return code
    frame = enumerate_nuclei(L, args.cap)
    if args.count_only:
        _print(str(len(frame)))
    else:
        for j in frame:
            _print(j.fmt())
    return 0


def cmd_assembly(args) -> int:
    L = load(args.file)
    if (code := _require_idiom(L)) is not None:
        return code
    frame = enumerate_nuclei(L, args.cap)
    N = frame.as_lattice
    if args.emit_lattice:
        _print(emit_lattice(N))
        return 0
    rep = validate_idiom(N)
    _print(f"{N.name}: {len(N)} nuclei, distributive: {str(rep.is_distributive).lower()}")
    for label, j in zip(N.labels, frame):
        _print(f"{label} = {j.fmt()}")
    return 0


def cmd_goldie(args) -> int:
    L = load(args.file)
    if (code := _require_idiom(L)) is not None:
        return code
    g = goldie_nucleus(L, args.cap)
    rep = Report(f"goldie {L.name}", {
        "zeta": nucleus_table(L, g.zeta),
        "division_set": g.dset.label_pairs(),
        "free_set": g.fset.label_pairs(),
        "goldman": nucleus_table(L, g.goldman),
        "zeta_is_ddf": g.zeta_is_ddf,
        "cbd0": L.label(g.cbd0),
        "soc0": L.label(g.soc0),
        "C1": g.c1,
        "CSP": g.csp,
    })
    _print(emit_json(rep) if args.format == "json" else emit_text(rep))
    return 0


def cmd_quotients(args) -> int:
    L = load(args.file)
    if (code := _require_idiom(L)) is not None:
        return code
    j = parse_nucleus_arg(L, args.nucleus, args.cap)
    Q = quotient_idiom(L, j)
    _print(j.fmt())
    _print(emit_lattice(Q.induced_lattice))
    _print("interval\tQ_j\tSat_j")
    for I in enumerate_intervals(L):
        if I.trivial:
            continue
        q = interval_of_quotients(L, j, I)
        sat = " ".join(L.label(x) for x in saturated_elements(L, j, I))
        _print(f"{I.fmt(L)}\t[{L.label(q.lo)},{L.label(q.hi)}]\t{{{sat}}}")
    return 0


def cmd_reproduce(args) -> int:
    out = reproduce(args.name)
    for line in out.lines():
        _print(line)
    return out.exit_code


def cmd_report(args) -> int:
    L = load(args.file)
    if args.format == "dot":
        j = goldie_zeta(L, args.cap) if validate_idiom(L).is_idiom else None
        _print(emit_dot(L, j))
        return 0
    rep = lattice_report(L, args.cap)
    _print(emit_json(rep) if args.format == "json" else emit_text(rep))
    return 0 if rep.data["modular"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="idiom", description=(
        "Nuclei, division and free sets, and the Goldie nucleus on finite "
        "modular lattices. FILE is a lattice file or a built-in corpus name."))
    p.add_argument("--cap", type=int, default=None,
                   help=f"largest lattice size for nucleus enumeration (default {DEFAULT_CAP})")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="validate a lattice")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("nuclei", help="list all nuclei")
    s.add_argument("file")
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_nuclei)

    s = sub.add_parser("assembly", help="the frame of all nuclei")
    s.add_argument("file")
    s.add_argument("--emit-lattice", action="store_true",
                   help="print the frame in the lattice file format")
    s.set_defaults(func=cmd_assembly)

    s = sub.add_parser("goldie", help="Goldie and Goldman nuclei")
    s.add_argument("file")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_goldie)

    s = sub.add_parser("quotients", help="quotient idiom of a nucleus")
    s.add_argument("file")
    s.add_argument("--nucleus", nargs="+", required=True, metavar="NUCLEUS",
                   help="'chi a b', 'xi a b', 'zeta' or a table like '0:0 a:b ...'")
    s.set_defaults(func=cmd_quotients)

    s = sub.add_parser("reproduce", help="golden checks for a worked example")
    s.add_argument("name", choices=sorted(EXAMPLES))
    s.set_defaults(func=cmd_reproduce)

    s = sub.add_parser("report", help="full analysis of a lattice")
    s.add_argument("file")
    s.add_argument("--format", choices=("text", "json", "dot"), default="text")
    s.set_defaults(func=cmd_report)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, IdiomError, OSError) as exc:
        print(f"idiom: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
