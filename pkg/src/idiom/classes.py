"""Sets of intervals: classification, division closure, free sets.

Every :class:`IntervalSet` contains all trivial intervals.  They satisfy
every closure clause vacuously, and both division sets and free sets of
nuclei always contain them; printers and human-facing listings use
:meth:`IntervalSet.nontrivial`.

Two clauses quantify over arbitrary families.  On a finite lattice both
reduce to their binary forms by folding, so the checks below are binary:

* pre-division: ``[a,x], [a,y] in S  =>  [a, x v y] in S``
* free clause (v): ``[x,b], [y,b] in S  =>  [x ^ y, b] in S``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import MissingTop, NotAFreeSeed
from .intervals import (
    Interval,
    enumerate_intervals,
    interval_index,
    similar_to,
)
from .lattice import Lattice, is_essential, meet_all


class IntervalSet:
    """An immutable set of intervals of one lattice."""

    def __init__(self, L: Lattice, members: Iterable = ()):
        self.lattice = L
        ms = {Interval(*iv) for iv in members}
        ms.update(Interval(x, x) for x in L)
        for iv in ms:
            if not L.le(iv.lo, iv.hi):
                raise ValueError(f"[{iv.lo},{iv.hi}] is not an interval of {L.name}")
        self.members = frozenset(ms)

    @classmethod
    def from_labels(cls, L: Lattice, pairs: Iterable[tuple[str, str]]) -> "IntervalSet":
        return cls(L, [(L.index(a), L.index(b)) for a, b in pairs])

    def __contains__(self, iv) -> bool:
        return Interval(*iv) in self.members

    def __iter__(self):
        idx = interval_index(self.lattice)
        return iter(sorted(self.members, key=idx.index))

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self.lattice == other.lattice and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __le__(self, other: "IntervalSet") -> bool:
        return self.members <= other.members

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.lattice, self.members | other.members)

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.lattice, self.members & other.members)

    def nontrivial(self) -> list[Interval]:
        return [iv for iv in self if not iv.trivial]

    def label_pairs(self, include_trivial: bool = False) -> list[list[str]]:
        L = self.lattice
        ivs = list(self) if include_trivial else self.nontrivial()
        return [[L.label(iv.lo), L.label(iv.hi)] for iv in ivs]

    def fmt(self) -> str:
        return "{" + ", ".join(iv.fmt(self.lattice) for iv in self.nontrivial()) + "}"

    def __repr__(self):
        return f"IntervalSet({self.lattice.name}, {self.fmt()})"

    @cached_property
    def flags(self) -> "SetFlags":
        return classify_set(self.lattice, self)


# clause checks: each returns a witness tuple or None ------------------------

def similarity_violation(S: IntervalSet):
    L = S.lattice
    for I in S.members:
        for J in similar_to(L, I):
            if J not in S.members:
                return (I, J)
    return None


def subinterval_violation(S: IntervalSet):
    L = S.lattice
    for I in S.members:
        elems = L.between(I.lo, I.hi)
        for x in elems:
            for y in elems:
                if L.le(x, y) and Interval(x, y) not in S.members:
                    return (I, Interval(x, y))
    return None


def lower_subinterval_violation(S: IntervalSet):
    L = S.lattice
    for I in S.members:
        for x in L.between(I.lo, I.hi):
            if Interval(I.lo, x) not in S.members:
                return (I, Interval(I.lo, x))
    return None


def abutting_violation(S: IntervalSet):
    by_lo: dict[int, list[int]] = {}
    for I in S.members:
        by_lo.setdefault(I.lo, []).append(I.hi)
    for a, highs in by_lo.items():
        for b in highs:
            for c in by_lo.get(b, ()):
                if Interval(a, c) not in S.members:
                    return (Interval(a, b), Interval(b, c))
    return None


def join_violation(S: IntervalSet):
    L = S.lattice
    by_lo: dict[int, list[int]] = {}
    for I in S.members:
        by_lo.setdefault(I.lo, []).append(I.hi)
    for a, highs in by_lo.items():
        for x in highs:
            for y in highs:
                if Interval(a, L.join[x][y]) not in S.members:
                    return (Interval(a, x), Interval(a, y))
    return None


def essential_extension_violation(S: IntervalSet):
    """[a,b] in S and b essential in [a,c] but [a,c] missing."""
    L = S.lattice
    for I in S.members:
        for c in L.up(I.hi):
            if Interval(I.lo, c) not in S.members and is_essential(L, I.hi, I.lo, c):
                return (I, Interval(I.lo, c))
    return None


def meet_violation(S: IntervalSet):
    L = S.lattice
    by_hi: dict[int, list[int]] = {}
    for I in S.members:
        by_hi.setdefault(I.hi, []).append(I.lo)
    for b, lows in by_hi.items():
        for x in lows:
            for y in lows:
                if Interval(L.meet[x][y], b) not in S.members:
                    return (Interval(x, b), Interval(y, b))
    return None


@dataclass(frozen=True)
class SetFlags:
    abstract: bool
    basic: bool
    congruence: bool
    predivision: bool
    division: bool
    free: bool
    stable: bool
    ddf: bool
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in
                ("abstract", "basic", "congruence", "predivision",
                 "division", "free", "stable", "ddf")}


def classify_set(L: Lattice, S) -> SetFlags:
    """Decide every class of the hierarchy for ``S`` by exhaustive checks."""
    if not isinstance(S, IntervalSet):
        S = IntervalSet(L, S)
    w = {}
    for name, fn in (("similarity", similarity_violation),
                     ("subinterval", subinterval_violation),
                     ("lower_subinterval", lower_subinterval_violation),
                     ("abutting", abutting_violation),
                     ("join", join_violation),
                     ("essential_extension", essential_extension_violation),
                     ("meet", meet_violation)):
        bad = fn(S)
        if bad is not None:
            w[name] = bad
    abstract = "similarity" not in w
    basic = abstract and "subinterval" not in w
    congruence = basic and "abutting" not in w
    predivision = basic and "join" not in w
    division = congruence and predivision
    free = (abstract and "lower_subinterval" not in w and "abutting" not in w
            and "essential_extension" not in w and "meet" not in w)
    stable = division and "essential_extension" not in w
    ddf = stable and "meet" not in w
    return SetFlags(abstract, basic, congruence, predivision, division,
                    free, stable, ddf, w)


def free_clauses_violated(S: IntervalSet) -> Optional[tuple[str, tuple]]:
    """First violated clause among those characterising free sets of nuclei."""
    for name, fn in (("(i) similarity", similarity_violation),
                     ("(ii) lower subintervals", lower_subinterval_violation),
                     ("(iv) essential extensions", essential_extension_violation),
                     ("(v) meets", meet_violation)):
        bad = fn(S)
        if bad is not None:
            return name, bad
    return None


def division_clauses_violated(S: IntervalSet) -> Optional[tuple[str, tuple]]:
    for name, fn in (("similarity", similarity_violation),
                     ("subintervals", subinterval_violation),
                     ("abutting", abutting_violation),
                     ("joins", join_violation)):
        bad = fn(S)
        if bad is not None:
            return name, bad
    return None


def division_closure(L: Lattice, seed=()) -> IntervalSet:
    """Least division set containing ``seed``.

    Iterates similarity, subintervals, abutting composition and binary
    joins at a common lower end until nothing changes.
    """
    members = {Interval(*iv) for iv in seed} | {Interval(x, x) for x in L}
    frontier = True
    while frontier:
        frontier = False
        new = set()
        for I in members:
            new.update(similar_to(L, I))
            elems = L.between(I.lo, I.hi)
            new.update(Interval(x, y) for x in elems for y in elems if L.le(x, y))
        by_lo: dict[int, set[int]] = {}
        for I in members | new:
            by_lo.setdefault(I.lo, set()).add(I.hi)
        for a, highs in by_lo.items():
            for b in highs:
                for c in by_lo.get(b, ()):
                    new.add(Interval(a, c))
                for c in highs:
                    new.add(Interval(a, L.join[b][c]))
        if not new <= members:
            members |= new
            frontier = True
    return IntervalSet(L, members)


def free_set_from_tops(L: Lattice, tops: Iterable[int]) -> IntervalSet:
    """Free set of the map ``a -> meet of the given elements above a``.

    Raises :class:`NotAFreeSeed` when that map does not preserve binary
    meets, i.e. is not a nucleus.
    """
    T = sorted(set(tops))
    if L.top not in T:
        raise MissingTop("the seed must contain the top element")
    j = [meet_all(L, (t for t in T if L.le(a, t))) for a in L]
    for a in L:
        for b in L:
            if j[L.meet[a][b]] != L.meet[j[a]][j[b]]:
                raise NotAFreeSeed(
                    f"induced map breaks j(a^b)=j(a)^j(b) at "
                    f"({L.label(a)},{L.label(b)})")
    return IntervalSet(L, [iv for iv in enumerate_intervals(L)
                           if L.meet[j[iv.lo]][iv.hi] == iv.lo])


def singular_like(L: Lattice) -> list[Interval]:
    """Nontrivial intervals [c,d] with c essential in [bottom, d]."""
    return [iv for iv in enumerate_intervals(L)
            if not iv.trivial and is_essential(L, iv.lo, L.bottom, iv.hi)]


def nonsingular_intervals(L: Lattice) -> IntervalSet:
    """All [a,b] such that no [a,x] with a <= x <= b is similar to a
    nontrivial [c,d] whose lower end is essential in [bottom, d]."""
    bad = set(singular_like(L))
    tainted = {I for I in enumerate_intervals(L)
               if any(J in bad for J in similar_to(L, I))}
    return IntervalSet(L, [iv for iv in enumerate_intervals(L)
                           if not any(Interval(iv.lo, x) in tainted
                                      for x in L.between(iv.lo, iv.hi))])
