"""Intervals of a finite lattice and the similarity relation between them."""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .lattice import Lattice, complements


class Interval(NamedTuple):
    lo: int
    hi: int

    @property
    def trivial(self) -> bool:
        return self.lo == self.hi

    def contains(self, L: Lattice, x: int) -> bool:
        return L.le(self.lo, x) and L.le(x, self.hi)

    def within(self, L: Lattice, other: "Interval") -> bool:
        """Subinterval test: self is contained in other."""
        return L.le(other.lo, self.lo) and L.le(self.hi, other.hi)

    def fmt(self, L: Lattice) -> str:
        return f"[{L.label(self.lo)},{L.label(self.hi)}]"


class IntervalIndex:
    """Dense numbering of the intervals of a lattice.

    Intervals are ordered lexicographically by ``(lo, hi)``.
    """

    def __init__(self, L: Lattice):
        self.lattice = L
        self.intervals = tuple(Interval(a, b) for a in L for b in L if L.le(a, b))
        self._pos = {iv: k for k, iv in enumerate(self.intervals)}

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def index(self, iv: Interval) -> int:
        return self._pos[Interval(*iv)]

    def interval(self, k: int) -> Interval:
        return self.intervals[k]


@lru_cache(maxsize=64)
def interval_index(L: Lattice) -> IntervalIndex:
    return IntervalIndex(L)


def enumerate_intervals(L: Lattice) -> list[Interval]:
    """All comparable pairs, trivial ones included, in index order."""
    return list(interval_index(L).intervals)


def nontrivial_intervals(L: Lattice) -> list[Interval]:
    return [iv for iv in enumerate_intervals(L) if not iv.trivial]


def are_similar(L: Lattice, I: Interval, J: Interval) -> bool:
    """I ~ J iff {I, J} = {[l, l v r], [l ^ r, r]} for some l, r.

    If I = [l, l v r] and J = [l ^ r, r] then necessarily l = I.lo and r = J.hi,
    so the existential collapses to two table lookups per orientation.
    """
    if L.join[I.lo][J.hi] == I.hi and L.meet[I.lo][J.hi] == J.lo:
        return True
    return L.join[J.lo][I.hi] == J.hi and L.meet[J.lo][I.hi] == I.lo


@lru_cache(maxsize=64)
def _similar_table(L: Lattice):
    ivs = enumerate_intervals(L)
    return {I: tuple(J for J in ivs if are_similar(L, I, J)) for I in ivs}


def similar_to(L: Lattice, I: Interval) -> tuple[Interval, ...]:
    """All intervals similar to I (I itself included)."""
    return _similar_table(L)[Interval(*I)]


def perspectivity_map(L: Lattice, l: int, r: int):
    """The canonical maps between [l ^ r, r] and [l, l v r].

    Returns ``(up, down)`` with ``up(y) = y v l`` and ``down(x) = x ^ r``.
    """
    return (lambda y: L.join[y][l]), (lambda x: L.meet[x][r])


def is_simple(L: Lattice, I: Interval) -> bool:
    """Nontrivial with nothing strictly between the endpoints."""
    return not I.trivial and len(L.between(I.lo, I.hi)) == 2


def is_complemented_interval(L: Lattice, I: Interval) -> bool:
    return all(complements(L, x, I.lo, I.hi) for x in L.between(I.lo, I.hi))


def is_weakly_atomic(L: Lattice, I: Interval) -> bool:
    """Every nontrivial subinterval contains a simple one.

    Always true for a finite lattice; kept as an executable sanity check.
    """
    elems = L.between(I.lo, I.hi)
    for c in elems:
        for d in elems:
            if L.lt(c, d):
                inner = L.between(c, d)
                if not any(is_simple(L, Interval(x, y))
                           for x in inner for y in inner if L.lt(x, y)):
                    return False
    return True


def is_uniform(L: Lattice, I: Interval) -> bool:
    """Nontrivial, and any two elements above ``I.lo`` meet above ``I.lo``."""
    if I.trivial:
        return False
    elems = [x for x in L.between(I.lo, I.hi) if x != I.lo]
    return all(L.meet[x][y] != I.lo for x in elems for y in elems)


def interval_lattice(L: Lattice, I: Interval) -> tuple[Lattice, list[int]]:
    """The interval as a lattice in its own right, with the host indices
    of its elements (position k in the new lattice is host element out[k])."""
    members = L.between(I.lo, I.hi)
    leq = [[L.le(x, y) for y in members] for x in members]
    sub = Lattice.from_order([L.label(x) for x in members], leq,
                             name=f"{L.name}{I.fmt(L)}")
    return sub, members
