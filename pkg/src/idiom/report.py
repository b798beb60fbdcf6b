"""Structured analysis results rendered as text, JSON or Graphviz DOT."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from .goldie import goldie_nucleus
from .lattice import Lattice, validate_idiom
from .nuclei import Nucleus, enumerate_nuclei


@dataclass
class Report:
    """A titled, ordered mapping of JSON-compatible values."""

    title: str
    data: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"title": self.title, "data": self.data}

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["title"], d["data"])


def nucleus_table(L: Lattice, j: Nucleus) -> dict[str, str]:
    return {L.label(a): L.label(j(a)) for a in L}


def emit_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str) -> Report:
    return Report.from_dict(json.loads(text))


def _is_pair_list(v) -> bool:
    return all(isinstance(p, list) and len(p) == 2 and all(isinstance(s, str) for s in p)
               for p in v)


def _inline(v) -> Optional[str]:
    """One-line form for flat lists, or None if ``v`` needs nesting."""
    if isinstance(v, dict):
        return None if v else "(empty)"
    if not isinstance(v, list):
        return _scalar(v)
    if not v:
        return "(empty)"
    if _is_pair_list(v):
        return ", ".join(f"[{a},{b}]" for a, b in v)
    if not any(isinstance(x, (dict, list)) for x in v):
        return " ".join(_scalar(x) for x in v)
    return None


def _text_lines(value, indent: int):
    pad = "  " * indent
    if isinstance(value, dict):
        for k, v in value.items():
            flat = _inline(v)
            if flat is not None:
                yield f"{pad}{k}: {flat}"
            else:
                yield f"{pad}{k}:"
                yield from _text_lines(v, indent + 1)
    elif isinstance(value, list):
        for v in value:
            flat = _inline(v)
            if flat is not None:
                yield f"{pad}- {flat}"
            else:
                yield f"{pad}-"
                yield from _text_lines(v, indent + 1)
    else:
        yield pad + _scalar(value)


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    return str(v)


def emit_text(report: Report) -> str:
    return "\n".join([report.title, *_text_lines(report.data, 0)]) + "\n"


def _dot_id(label: str) -> str:
    return json.dumps(label, ensure_ascii=False)


def emit_dot(L: Lattice, j: Optional[Nucleus] = None) -> str:
    """Hasse diagram, bottom at the bottom; fixed points of ``j`` are filled."""
    lines = [f"digraph {_dot_id(L.name)} {{", "  rankdir=BT;",
             "  node [shape=circle];"]
    fixed = set(j.fixed) if j is not None else set()
    for x in L:
        attrs = ' style=filled fillcolor="lightblue"' if x in fixed else ""
        lines.append(f"  {_dot_id(L.label(x))} [label={_dot_id(L.label(x))}{attrs}];")
    for x, y in L.covers():
        lines.append(f"  {_dot_id(L.label(x))} -> {_dot_id(L.label(y))} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_report(L: Lattice, cap: Optional[int] = None) -> Report:
    """Validation, nucleus count and the Goldie analysis of one lattice."""
    rep = validate_idiom(L)
    data: dict[str, Any] = {
        "lattice": L.name,
        "elements": list(L.labels),
        "covers": [[L.label(x), L.label(y)] for x, y in L.covers()],
        "modular": rep.is_modular,
        "distributive": rep.is_distributive,
        "boolean": rep.is_boolean,
    }
    if not rep.is_idiom:
        data["violated_law"] = rep.violated_law
        data["first_violation"] = [L.label(x) for x in rep.first_violation]
        return Report(f"report {L.name}", data)
    g = goldie_nucleus(L, cap)
    data.update({
        "nucleus_count": len(enumerate_nuclei(L, cap)),
        "zeta": nucleus_table(L, g.zeta),
        "division_set": g.dset.label_pairs(),
        "free_set": g.fset.label_pairs(),
        "nonsingular": g.fset.label_pairs(),
        "goldman": nucleus_table(L, g.goldman),
        "zeta_is_ddf": g.zeta_is_ddf,
        "cbd0": L.label(g.cbd0),
        "soc0": L.label(g.soc0),
        "C1": g.c1,
        "CSP": g.csp,
    })
    return Report(f"report {L.name}", data)


__all__ = ["Report", "emit_json", "parse_json", "emit_text", "emit_dot",
           "lattice_report", "nucleus_table"]
