"""Golden checks for the three worked examples shipped with the package.

The expected interval listings live in ``data/goldens.json`` and are compared
against freshly computed sets, so any regression shows up as a diff.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib.resources import files

from .classes import IntervalSet, nonsingular_intervals
from .corpus import get
from .goldie import goldie_zeta
from .intervals import Interval, nontrivial_intervals
from .lattice import Lattice
from .nuclei import chi, dset_of, fset_of, nucleus_meet, xi

PASS, FAIL, WARNING = "PASS", "FAIL", "WARNING"


@dataclass(frozen=True)
class Check:
    status: str
    name: str
    detail: str = ""

    def line(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.status} {self.name}{tail}"


@dataclass
class Outcome:
    example: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks] + [
            f"{'PASS' if self.ok else 'FAIL'} reproduce {self.example}"]


@lru_cache(maxsize=1)
def goldens() -> dict:
    return json.loads((files("idiom") / "data" / "goldens.json").read_text(encoding="utf-8"))


def _golden_set(L: Lattice, pairs) -> IntervalSet:
    return IntervalSet.from_labels(L, [tuple(p) for p in pairs])


def _compare(out: Outcome, name: str, L: Lattice, got: IntervalSet, want: IntervalSet):
    if got == want:
        out.checks.append(Check(PASS, name, f"{len(got.nontrivial())} intervals"))
        return
    missing = sorted(want.members - got.members)
    extra = sorted(got.members - want.members)
    fmt = lambda ivs: " ".join(Interval(*iv).fmt(L) for iv in ivs) or "-"
    out.checks.append(Check(FAIL, name, f"missing {fmt(missing)}; unexpected {fmt(extra)}"))


def _expect(out: Outcome, name: str, cond: bool, detail: str = ""):
    out.checks.append(Check(PASS if cond else FAIL, name, detail))


def reproduce_exa1() -> Outcome:
    L, g = get("exa1"), goldens()["exa1"]
    ix = L.index
    out = Outcome("exa1")
    n = len(nontrivial_intervals(L))
    _expect(out, "nontrivial interval count", n == g["nontrivial_interval_count"], str(n))
    zeta = goldie_zeta(L)
    _compare(out, "D_zeta", L, dset_of(L, zeta), _golden_set(L, g["zeta_dset"]))
    _compare(out, "F_zeta", L, fset_of(L, zeta), _golden_set(L, g["zeta_fset"]))
    c_IR = chi(L, ix("I"), ix("R"))
    _compare(out, "D_zeta = F_chi(I,R)", L, fset_of(L, c_IR), dset_of(L, zeta))
    _expect(out, "zeta = chi(0,R)", zeta == chi(L, ix("0"), ix("R")))
    _expect(out, "zeta = xi over [I,R]", zeta == xi(L, [(ix("I"), ix("R"))]))
    meet4 = nucleus_meet(L, [chi(L, ix(a), ix("R")) for a in "STU0"])
    _expect(out, "zeta = chi(S,R) ^ chi(T,R) ^ chi(U,R) ^ chi(0,R)", zeta == meet4)
    _compare(out, "D_chi(I,R)", L, dset_of(L, c_IR), _golden_set(L, g["chi_I_R_dset"]))
    return out


def reproduce_ex2() -> Outcome:
    L, g = get("ex2"), goldens()["ex2"]
    ix = L.index
    out = Outcome("ex2")
    zeta = goldie_zeta(L)
    _compare(out, "D_zeta", L, dset_of(L, zeta), _golden_set(L, g["zeta_dset"]))
    _compare(out, "F_zeta", L, fset_of(L, zeta), _golden_set(L, g["zeta_fset"]))
    cS, cT, cU = (chi(L, ix(a), ix("1")) for a in "STU")
    _compare(out, "D_chi(S,1)", L, dset_of(L, cS), _golden_set(L, g["chi_S_1_dset"]))
    _compare(out, "D_zeta = F_chi(S,1)", L, fset_of(L, cS), dset_of(L, zeta))
    _expect(out, "chi(S,1) = chi(T,1) = chi(U,1)", cS == cT == cU, cS.fmt())
    _compare(out, "D_zeta = F_(chi(S,1) ^ chi(T,1) ^ chi(U,1))", L,
             fset_of(L, nucleus_meet(L, [cS, cT, cU])), dset_of(L, zeta))
    _compare(out, "F_zeta = F_chi(0,1)", L, fset_of(L, chi(L, L.bottom, L.top)),
             fset_of(L, zeta))
    return out


def reproduce_diamond() -> Outcome:
    L, g = get("diamond"), goldens()["diamond"]
    out = Outcome("diamond")
    lo, hi = (L.index(x) for x in g["zeta_dset_within"])
    inside = [iv for iv in nontrivial_intervals(L) if L.le(lo, iv.lo) and L.le(iv.hi, hi)]
    want = IntervalSet(L, inside)
    _compare(out, f"D_zeta = subintervals of {Interval(lo, hi).fmt(L)}", L,
             dset_of(L, goldie_zeta(L)), want)
    stated = _golden_set(L, g["nonsingular"])
    found = nonsingular_intervals(L)
    if found == stated:
        out.checks.append(Check(PASS, "nonsingular intervals"))
    else:
        out.checks.append(Check(
            WARNING, "nonsingular intervals",
            f"listed {stated.fmt()} but computed {found.fmt()}"))
    return out


EXAMPLES = {"exa1": reproduce_exa1, "ex2": reproduce_ex2, "diamond": reproduce_diamond}


def reproduce(name: str) -> Outcome:
    if name not in EXAMPLES:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    return EXAMPLES[name]()


__all__ = ["Check", "Outcome", "reproduce", "EXAMPLES", "goldens"]
