"""Nuclei on a finite idiom and the frame of all of them.

A nucleus is an inflationary, idempotent map preserving binary meets.  It
is determined by its fixed set, which is meet-closed and contains the top;
conversely a meet-closed set ``S`` containing the top induces the closure
``a -> least element of S above a``, which is a nucleus exactly when it
preserves binary meets.  :func:`enumerate_nuclei` walks those sets.

A prenucleus here is a monotone inflator ``k`` with ``k(a) ^ b <= k(a ^ b)``.
Every meet-preserving inflator qualifies, the pointwise supremum of nuclei
on the corpus lattices always does (it is not always meet-preserving), and
iterating one to its fixpoint always yields a nucleus with the same free
set.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Optional, Sequence

from .classes import IntervalSet, division_clauses_violated, free_clauses_violated
from .errors import (
    InternalDisagreement,
    NotADivisionSet,
    NotAFreeSet,
    NotANucleus,
    SizeCapExceeded,
)
from .intervals import Interval, enumerate_intervals
from .lattice import Lattice, join_all, meet_all

log = logging.getLogger(__name__)

DEFAULT_CAP = 14


@dataclass(frozen=True)
class Nucleus:
    """A nucleus stored as its table ``a -> j(a)`` over element indices."""

    table: tuple
    lattice: Lattice = field(compare=False, repr=False)

    def __call__(self, a: int) -> int:
        return self.table[a]

    def __le__(self, other: "Nucleus") -> bool:
        L = self.lattice
        return all(L.le(x, y) for x, y in zip(self.table, other.table))

    def __lt__(self, other: "Nucleus") -> bool:
        return self != other and self <= other

    @property
    def fixed(self) -> list[int]:
        return [a for a, v in enumerate(self.table) if a == v]

    @classmethod
    def identity(cls, L: Lattice) -> "Nucleus":
        return cls(tuple(range(L.size)), L)

    @classmethod
    def constant_top(cls, L: Lattice) -> "Nucleus":
        return cls((L.top,) * L.size, L)

    @classmethod
    def from_fixed(cls, L: Lattice, fixed: Iterable[int]) -> "Nucleus":
        fixed = list(fixed)
        return cls(tuple(meet_all(L, (s for s in fixed if L.le(a, s))) for a in L), L)

    def fmt(self) -> str:
        L = self.lattice
        return "j: " + ", ".join(f"{L.label(a)}↦{L.label(v)}"
                                 for a, v in enumerate(self.table))

    def __repr__(self):
        return f"Nucleus({self.fmt()})"


def check_cap(L: Lattice, cap: Optional[int] = None):
    cap = DEFAULT_CAP if cap is None else cap
    if L.size > cap:
        raise SizeCapExceeded(
            f"{L.name} has {L.size} elements; nucleus enumeration is capped at "
            f"{cap} (raise it with cap=...)")


# law checks -----------------------------------------------------------------

def preserves_meets(L: Lattice, f: Sequence[int]) -> bool:
    n = L.size
    return all(f[L.meet[a][b]] == L.meet[f[a]][f[b]]
               for a in range(n) for b in range(a + 1, n))


def is_prenucleus(L: Lattice, f: Sequence[int]) -> bool:
    """Monotone inflator with f(a) ^ b <= f(a ^ b)."""
    n = L.size
    if any(not L.le(a, f[a]) for a in range(n)):
        return False
    for a in range(n):
        for b in range(n):
            if L.le(a, b) and not L.le(f[a], f[b]):
                return False
            if not L.le(L.meet[f[a]][b], f[L.meet[a][b]]):
                return False
    return True


def is_nucleus(L: Lattice, f: Sequence[int]) -> bool:
    n = L.size
    return (all(L.le(a, f[a]) and f[f[a]] == f[a] for a in range(n))
            and preserves_meets(L, f))


def _require_nucleus(L: Lattice, table) -> Nucleus:
    table = tuple(table)
    if not is_nucleus(L, table):
        raise NotANucleus(f"map {table} is not a nucleus on {L.name}")
    return Nucleus(table, L)


def nucleus(L: Lattice, mapping) -> Nucleus:
    """Validated nucleus from a sequence or a ``{label: label}`` mapping."""
    if isinstance(mapping, dict):
        table = [None] * L.size
        for k, v in mapping.items():
            table[L.index(k)] = L.index(v)
        if None in table:
            raise NotANucleus("mapping is not total")
        mapping = table
    return _require_nucleus(L, mapping)


# enumeration ----------------------------------------------------------------

def _meet_closed_sets(L: Lattice):
    """Bitmasks of meet-closed subsets containing the top."""
    others = [x for x in L if x != L.top]
    top_bit = 1 << L.top
    for m in range(1 << len(others)):
        mask = top_bit
        members = [L.top]
        for i, x in enumerate(others):
            if m >> i & 1:
                mask |= 1 << x
                members.append(x)
        ok = True
        for i, x in enumerate(members):
            row = L.meet[x]
            for y in members[i + 1:]:
                if not mask >> row[y] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield members


class AssemblyFrame:
    """All nuclei on a lattice under the pointwise order."""

    def __init__(self, L: Lattice, nuclei: Sequence[Nucleus]):
        self.lattice = L
        self.nuclei = tuple(sorted(nuclei, key=lambda j: j.table))
        self._pos = {j.table: k for k, j in enumerate(self.nuclei)}

    def __len__(self):
        return len(self.nuclei)

    def __iter__(self):
        return iter(self.nuclei)

    def __contains__(self, j) -> bool:
        return tuple(j.table if isinstance(j, Nucleus) else j) in self._pos

    def index(self, j: Nucleus) -> int:
        return self._pos[j.table]

    @cached_property
    def order(self) -> tuple:
        return tuple(tuple(j <= k for k in self.nuclei) for j in self.nuclei)

    @cached_property
    def as_lattice(self) -> Lattice:
        labels = [f"j{k}" for k in range(len(self.nuclei))]
        return Lattice.from_order(labels, self.order, name=f"N({self.lattice.name})")

    @property
    def identity(self) -> Nucleus:
        return Nucleus.identity(self.lattice)

    @property
    def top(self) -> Nucleus:
        return Nucleus.constant_top(self.lattice)


@lru_cache(maxsize=64)
def _assembly(L: Lattice) -> AssemblyFrame:
    found = []
    for fixed in _meet_closed_sets(L):
        table = tuple(meet_all(L, (s for s in fixed if L.le(a, s))) for a in L)
        if preserves_meets(L, table):
            found.append(Nucleus(table, L))
    log.debug("%s: %d nuclei", L.name, len(found))
    return AssemblyFrame(L, found)


def enumerate_nuclei(L: Lattice, cap: Optional[int] = None) -> AssemblyFrame:
    check_cap(L, cap)
    return _assembly(L)


# lattice operations in N(A) ---------------------------------------------------

def pointwise_sup(L: Lattice, maps: Iterable[Sequence[int]]) -> tuple:
    maps = [tuple(m.table if isinstance(m, Nucleus) else m) for m in maps]
    return tuple(join_all(L, (m[a] for m in maps)) for a in L)


def nucleus_meet(L: Lattice, js: Iterable[Nucleus]) -> Nucleus:
    """Pointwise meet; the empty meet is the constant-top nucleus."""
    js = list(js)
    return Nucleus(tuple(meet_all(L, (j(a) for j in js)) for a in L), L)


def idempotent_closure(L: Lattice, k: Sequence[int]) -> Nucleus:
    """Least nucleus above a prenucleus, by iterating ``k`` to a fixpoint."""
    table = tuple(k.table if isinstance(k, Nucleus) else k)
    if not is_prenucleus(L, table):
        raise NotANucleus(f"{table} is not a prenucleus on {L.name}")
    while True:
        nxt = tuple(table[table[a]] for a in L)
        if nxt == table:
            return _require_nucleus(L, table)
        table = nxt


@lru_cache(maxsize=4096)
def _chi(L: Lattice, a: int, b: int) -> Nucleus:
    cands = [j for j in _assembly(L) if L.meet[j(a)][b] == a]
    best = pointwise_sup(L, cands)
    if best not in _assembly(L) or L.meet[best[a]][b] != a:
        raise InternalDisagreement(
            f"no largest nucleus j with j({L.label(a)})^{L.label(b)}={L.label(a)}")
    return Nucleus(best, L)


def chi(L: Lattice, a: int, b: int, cap: Optional[int] = None) -> Nucleus:
    """Largest nucleus j with j(a) ^ b = a."""
    check_cap(L, cap)
    if not L.le(a, b):
        raise ValueError(f"[{L.label(a)},{L.label(b)}] is not an interval")
    return _chi(L, a, b)


def chi_formula(L: Lattice, k: Sequence[int], cap: Optional[int] = None) -> Nucleus:
    """Meet of chi(a, top) over the points fixed by ``k``."""
    table = tuple(k.table if isinstance(k, Nucleus) else k)
    return nucleus_meet(L, (chi(L, a, L.top, cap) for a in L if table[a] == a))


def nucleus_join(L: Lattice, js: Iterable[Nucleus], method: str = "chi_formula",
                 cap: Optional[int] = None) -> Nucleus:
    """Join in N(A).

    ``chi_formula`` takes the meet of chi(a, top) over the points fixed by
    the pointwise supremum; ``iterative`` closes that supremum under
    composition.  The empty join is the identity.
    """
    js = list(js)
    if not js:
        return Nucleus.identity(L)
    sup = pointwise_sup(L, js)
    if method == "chi_formula":
        return chi_formula(L, sup, cap)
    if method == "iterative":
        return idempotent_closure(L, sup)
    raise ValueError(f"unknown join method {method!r}")


def xi(L: Lattice, seed, cap: Optional[int] = None) -> Nucleus:
    """Least nucleus collapsing every interval of ``seed``."""
    check_cap(L, cap)
    seed = [Interval(*iv) for iv in seed]
    return nucleus_meet(L, (j for j in _assembly(L)
                            if all(L.le(iv.hi, j(iv.lo)) for iv in seed)))


def xi_interval(L: Lattice, a: int, b: int, cap: Optional[int] = None) -> Nucleus:
    return xi(L, [(a, b)], cap)


# the three manifestations ------------------------------------------------------

def dset_of(L: Lattice, j: Nucleus) -> IntervalSet:
    """Intervals collapsed by j: b <= j(a)."""
    return IntervalSet(L, [iv for iv in enumerate_intervals(L) if L.le(iv.hi, j(iv.lo))])


def fset_of(L: Lattice, j) -> IntervalSet:
    """Intervals free for j: j(a) ^ b = a, i.e. j <= chi(a, b)."""
    t = j.table if isinstance(j, Nucleus) else j
    return IntervalSet(L, [iv for iv in enumerate_intervals(L)
                           if L.meet[t[iv.lo]][iv.hi] == iv.lo])


def nucleus_from_dset(L: Lattice, D) -> Nucleus:
    if not isinstance(D, IntervalSet):
        D = IntervalSet(L, D)
    bad = division_clauses_violated(D)
    if bad is not None:
        clause, witness = bad
        raise NotADivisionSet(f"not a division set: {clause} clause fails at "
                              + ", ".join(iv.fmt(L) for iv in witness),
                              clause=clause, witness=witness)
    table = tuple(join_all(L, (iv.hi for iv in D.members if iv.lo == a)) for a in L)
    return _require_nucleus(L, table)


def nucleus_from_fset(L: Lattice, F) -> Nucleus:
    """Nucleus whose free set is F: a -> meet of x >= a with [x, top] in F."""
    if not isinstance(F, IntervalSet):
        F = IntervalSet(L, F)
    bad = free_clauses_violated(F)
    if bad is not None:
        clause, witness = bad
        raise NotAFreeSet(f"not a free set: clause {clause} fails at "
                          + ", ".join(iv.fmt(L) for iv in witness),
                          clause=clause, witness=witness)
    tops = [x for x in L if Interval(x, L.top) in F]
    return _require_nucleus(L, Nucleus.from_fixed(L, tops).table)


def heyting_negation(L: Lattice, j: Nucleus, cap: Optional[int] = None) -> Nucleus:
    """Largest nucleus k with k ^ j = identity in N(A)."""
    frame = enumerate_nuclei(L, cap)
    ident = tuple(range(L.size))
    disjoint = [k for k in frame if nucleus_meet(L, [k, j]).table == ident]
    neg = nucleus_join(L, disjoint, cap=cap)
    if neg not in disjoint:
        raise InternalDisagreement(f"pseudocomplement of {j.fmt()} does not exist")
    return neg
