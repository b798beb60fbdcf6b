"""Plain-text lattice files.

    lattice <name>
    elements: <label> <label> ...
    <label> < <label>        # one cover per line

Comments start with ``#`` and blank lines are ignored.  Emission writes the
Hasse diagram in index order, so parse/emit round-trips up to comments and
whitespace.
"""

from __future__ import annotations

from pathlib import Path

from .errors import LatticeSyntaxError
from .lattice import Lattice, build_lattice


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield lineno, line


def _col(line: str, token: str, start: int = 0) -> int:
    return line.index(token, start) + 1


def parse_lattice(text: str) -> Lattice:
    """Parse the lattice text format; errors carry 1-based line and column."""
    lines = list(_content_lines(text))
    if not lines:
        raise LatticeSyntaxError("empty input, expected 'lattice <name>'", 1, 1)

    lineno, line = lines[0]
    head = line.split()
    if head[0] != "lattice":
        raise LatticeSyntaxError("expected 'lattice <name>'", lineno, _col(line, head[0]))
    if len(head) != 2:
        col = _col(line, head[2]) if len(head) > 2 else len(line) + 1
        raise LatticeSyntaxError("expected exactly one lattice name", lineno, col)
    name = head[1]

    if len(lines) < 2:
        raise LatticeSyntaxError("missing 'elements:' header", lineno + 1, 1)
    lineno, line = lines[1]
    stripped = line.lstrip()
    if not stripped.startswith("elements:"):
        raise LatticeSyntaxError("missing 'elements:' header", lineno,
                                 len(line) - len(stripped) + 1)
    labels = stripped[len("elements:"):].split()
    if not labels:
        raise LatticeSyntaxError("no elements listed", lineno, len(line) + 1)

    covers = []
    for lineno, line in lines[2:]:
        parts = line.split()
        if len(parts) != 3 or parts[1] != "<":
            bad = parts[1] if len(parts) > 1 else parts[0]
            raise LatticeSyntaxError("expected '<label> < <label>'", lineno, _col(line, bad))
        covers.append((parts[0], parts[2]))
    return build_lattice(labels, covers, name=name)


def read_lattice(path) -> Lattice:
    return parse_lattice(Path(path).read_text(encoding="utf-8"))


def emit_lattice(L: Lattice) -> str:
    out = [f"lattice {L.name}", "elements: " + " ".join(L.labels)]
    out += [f"{L.label(x)} < {L.label(y)}" for x, y in L.covers()]
    return "\n".join(out) + "\n"


__all__ = ["parse_lattice", "read_lattice", "emit_lattice"]
