"""Finite bounded lattices and element-level order predicates.

Elements are dense integer indices ``0..size-1``; labels exist only for
presentation.  A :class:`Lattice` is immutable once built, so derived data
(intervals, nuclei, ...) can be cached against it freely.

Upper continuity is never checked: in a finite lattice every directed subset
contains its own maximum, so the law holds automatically and a finite
idiom is exactly a finite modular lattice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence

from .errors import (
    CyclicCovers,
    DuplicateLabel,
    NoBoundedBottom,
    NoBoundedTop,
    NotALattice,
    OutOfInterval,
    UnknownLabel,
)


class Lattice:
    """A finite bounded lattice given by its order, meet and join tables."""

    __slots__ = ("name", "labels", "leq", "meet", "join", "bottom", "top",
                 "_index", "_hash", "__weakref__")

    def __init__(self, labels, leq, meet, join, bottom, top, name="L"):
        self.name = name
        self.labels = tuple(labels)
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self.meet = tuple(tuple(row) for row in meet)
        self.join = tuple(tuple(row) for row in join)
        self.bottom = bottom
        self.top = top
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._hash = hash((self.labels, self.leq))

    # construction ---------------------------------------------------------

    @classmethod
    def from_order(cls, labels: Sequence[str], leq, name: str = "L") -> "Lattice":
        """Build a lattice from a full (reflexive, transitive) order table.

        Raises :class:`NotALattice` if some pair lacks a glb or lub.
        """
        n = len(labels)
        if len(set(labels)) != n:
            dup = next(lab for lab in labels if list(labels).count(lab) > 1)
            raise DuplicateLabel(f"duplicate label {dup!r}")
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                lower = [z for z in range(n) if leq[z][x] and leq[z][y]]
                glb = [z for z in lower if all(leq[w][z] for w in lower)]
                if not glb:
                    raise NotALattice(
                        f"{labels[x]} and {labels[y]} have no greatest lower bound",
                        witness=(labels[x], labels[y]))
                upper = [z for z in range(n) if leq[x][z] and leq[y][z]]
                lub = [z for z in upper if all(leq[z][w] for w in upper)]
                if not lub:
                    raise NotALattice(
                        f"{labels[x]} and {labels[y]} have no least upper bound",
                        witness=(labels[x], labels[y]))
                meet[x][y] = meet[y][x] = glb[0]
                join[x][y] = join[y][x] = lub[0]
        bottoms = [z for z in range(n) if all(leq[z][w] for w in range(n))]
        tops = [z for z in range(n) if all(leq[w][z] for w in range(n))]
        if not bottoms:
            raise NoBoundedBottom("no least element")
        if not tops:
            raise NoBoundedTop("no greatest element")
        return cls(labels, leq, meet, join, bottoms[0], tops[0], name=name)

    # basic queries --------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(range(len(self.labels)))

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return (self.labels == other.labels and self.leq == other.leq)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Lattice({self.name!r}, size={self.size})"

    def index(self, label) -> int:
        if isinstance(label, int) and not isinstance(label, bool) and label not in self._index:
            if 0 <= label < self.size:
                return label
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"unknown element {label!r} in lattice {self.name}") from None

    def label(self, x: int) -> str:
        return self.labels[x]

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq[x][y]

    def between(self, a: int, b: int) -> list[int]:
        """Elements of the interval [a, b], in index order."""
        return [x for x in range(self.size) if self.leq[a][x] and self.leq[x][b]]

    def up(self, a: int) -> list[int]:
        return [x for x in range(self.size) if self.leq[a][x]]

    def down(self, b: int) -> list[int]:
        return [x for x in range(self.size) if self.leq[x][b]]

    def covers(self) -> list[tuple[int, int]]:
        """The Hasse diagram as (lower, upper) pairs, sorted."""
        out = []
        for x in range(self.size):
            for y in range(self.size):
                if self.lt(x, y) and not any(
                        self.lt(x, z) and self.lt(z, y) for z in range(self.size)):
                    out.append((x, y))
        return out

    def atoms(self) -> list[int]:
        return [y for (x, y) in self.covers() if x == self.bottom]

    def relabel(self, labels: Sequence[str], name: Optional[str] = None) -> "Lattice":
        return Lattice(labels, self.leq, self.meet, self.join, self.bottom,
                       self.top, name=name or self.name)


def build_lattice(labels: Sequence[str], covers: Iterable[tuple[str, str]],
                  name: str = "L") -> Lattice:
    """Build a lattice from element names and a cover (Hasse) relation."""
    labels = list(labels)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise DuplicateLabel(f"duplicate label {lab!r}")
        seen.add(lab)
    idx = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    if n == 0:
        raise NoBoundedBottom("empty lattice")
    leq = [[i == j for j in range(n)] for i in range(n)]
    for lo, hi in covers:
        for lab in (lo, hi):
            if lab not in idx:
                raise UnknownLabel(f"cover mentions unknown element {lab!r}")
        if lo == hi:
            raise CyclicCovers(f"cover {lo} < {hi} is a self-loop")
        leq[idx[lo]][idx[hi]] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    for i in range(n):
        for j in range(i + 1, n):
            if leq[i][j] and leq[j][i]:
                raise CyclicCovers(f"covers form a cycle through {labels[i]} and {labels[j]}")
    return Lattice.from_order(labels, leq, name=name)


# validation -----------------------------------------------------------------

@dataclass(frozen=True)
class IdiomReport:
    is_lattice: bool
    is_modular: bool
    is_distributive: bool
    is_boolean: bool
    first_violation: Optional[tuple] = None
    violated_law: Optional[str] = None

    @property
    def is_idiom(self) -> bool:
        return self.is_lattice and self.is_modular


def _table_violation(L: Lattice):
    n = L.size
    for x in range(n):
        for y in range(n):
            m, j = L.meet[x][y], L.join[x][y]
            if not (L.le(m, x) and L.le(m, y)) or not (L.le(x, j) and L.le(y, j)):
                return (x, y)
            for z in range(n):
                if L.le(z, x) and L.le(z, y) and not L.le(z, m):
                    return (x, y)
                if L.le(x, z) and L.le(y, z) and not L.le(j, z):
                    return (x, y)
    return None


def modular_violation(L: Lattice):
    """First triple (a, b, c) with a <= b and (a v c) ^ b != a v (c ^ b)."""
    for a in L:
        for b in L.up(a):
            for c in L:
                if L.meet[L.join[a][c]][b] != L.join[a][L.meet[c][b]]:
                    return (a, b, c)
    return None


def distributive_violation(L: Lattice):
    for a, b, c in itertools.product(range(L.size), repeat=3):
        if L.meet[a][L.join[b][c]] != L.join[L.meet[a][b]][L.meet[a][c]]:
            return (a, b, c)
    return None


def validate_idiom(L: Lattice) -> IdiomReport:
    """Check the lattice tables, modularity, distributivity and Booleanness.

    Binary distributivity suffices for the frame law on a finite lattice.
    """
    bad = _table_violation(L)
    if bad is not None:
        return IdiomReport(False, False, False, False, bad, "lattice")
    bad = modular_violation(L)
    if bad is not None:
        return IdiomReport(True, False, False, False, bad, "modular")
    bad = distributive_violation(L)
    if bad is not None:
        return IdiomReport(True, True, False, False, bad, "distributive")
    for x in L:
        if not complements(L, x, L.bottom, L.top):
            return IdiomReport(True, True, True, False, (x,), "complemented")
    return IdiomReport(True, True, True, True)


# folds and element predicates ---------------------------------------------

def meet_all(L: Lattice, xs: Iterable[int]) -> int:
    return reduce(lambda u, v: L.meet[u][v], xs, L.top)


def join_all(L: Lattice, xs: Iterable[int]) -> int:
    return reduce(lambda u, v: L.join[u][v], xs, L.bottom)


def check_in_interval(L: Lattice, x: int, a: int, b: int):
    if not (L.le(a, x) and L.le(x, b)):
        raise OutOfInterval(
            f"{L.label(x)} is not in [{L.label(a)},{L.label(b)}]")


def is_essential(L: Lattice, x: int, a: int, b: int) -> bool:
    """True iff x meets every element of [a, b] other than a non-trivially."""
    check_in_interval(L, x, a, b)
    return all(y == a for y in L.between(a, b) if L.meet[x][y] == a)


def pseudocomplements(L: Lattice, x: int, a: int, b: int) -> list[int]:
    """Maximal y in [a, b] with x ^ y = a."""
    check_in_interval(L, x, a, b)
    cands = [y for y in L.between(a, b) if L.meet[x][y] == a]
    return [y for y in cands if not any(L.lt(y, z) for z in cands)]


def complements(L: Lattice, x: int, a: int, b: int) -> list[int]:
    check_in_interval(L, x, a, b)
    return [y for y in L.between(a, b) if L.meet[x][y] == a and L.join[x][y] == b]


def has_complement(L: Lattice, x: int, a: Optional[int] = None,
                   b: Optional[int] = None) -> bool:
    a = L.bottom if a is None else a
    b = L.top if b is None else b
    return bool(complements(L, x, a, b))


def is_meet_irreducible(L: Lattice, a: int) -> bool:
    """x ^ y <= a implies x <= a or y <= a."""
    return all(L.le(x, a) or L.le(y, a)
               for x in L for y in L if L.le(L.meet[x][y], a))


def is_independent(L: Lattice, family: Sequence[int], base: Optional[int] = None) -> bool:
    """Each member meets the join of the others in ``base`` (default bottom)."""
    base = L.bottom if base is None else base
    for k, x in enumerate(family):
        rest = join_all(L, (y for i, y in enumerate(family) if i != k))
        if L.meet[x][L.join[rest][base]] != base:
            return False
    return True


def uniform_dimension(L: Lattice) -> int:
    """Size of the largest independent family of non-bottom elements.

    Shrinking each member to an atom below it keeps a family independent, so
    the search runs over atoms only.
    """
    atoms = L.atoms()
    best = 0

    def grow(start, family):
        nonlocal best
        best = max(best, len(family))
        for i in range(start, len(atoms)):
            cand = family + [atoms[i]]
            if is_independent(L, cand):
                grow(i + 1, cand)

    grow(0, [])
    return best


def dual(L: Lattice, name: Optional[str] = None) -> Lattice:
    n = L.size
    leq = [[L.leq[j][i] for j in range(n)] for i in range(n)]
    return Lattice(L.labels, leq, L.join, L.meet, L.top, L.bottom,
                   name=name or f"{L.name}^op")


def cbd0(L: Lattice) -> int:
    """Meet of all elements essential in the whole lattice."""
    return meet_all(L, (x for x in L if is_essential(L, x, L.bottom, L.top)))


def soc0(L: Lattice) -> int:
    """Join of all atoms."""
    return join_all(L, L.atoms())


def satisfies_C1(L: Lattice) -> bool:
    """Every element is essential below some complemented element."""
    compl = [c for c in L if has_complement(L, c)]
    return all(any(L.le(a, c) and is_essential(L, a, L.bottom, c) for c in compl)
               for a in L)


def satisfies_CSP(L: Lattice, strong: bool = False) -> bool:
    """Joins of complemented elements are complemented.

    The finite property checks pairs; ``strong`` checks every subfamily.
    On a finite lattice the two agree.
    """
    compl = [c for c in L if has_complement(L, c)]
    if not strong:
        return all(has_complement(L, L.join[x][y]) for x in compl for y in compl)
    for r in range(len(compl) + 1):
        for fam in itertools.combinations(compl, r):
            if not has_complement(L, join_all(L, fam)):
                return False
    return True


def isomorphism(L: Lattice, M: Lattice) -> Optional[list[int]]:
    """An order isomorphism L -> M as a list of M-indices, or None."""
    if L.size != M.size:
        return None
    height = lambda K, x: sum(K.leq[y][x] for y in K)
    order = sorted(L, key=lambda x: height(L, x))
    f: list[Optional[int]] = [None] * L.size
    used = [False] * M.size

    def go(k):
        if k == len(order):
            return True
        x = order[k]
        for y in M:
            if used[y] or height(M, y) != height(L, x):
                continue
            if all(L.le(z, x) == M.le(f[z], y) and L.le(x, z) == M.le(y, f[z])
                   for z in order[:k]):
                f[x], used[y] = y, True
                if go(k + 1):
                    return True
                f[x], used[y] = None, False
        return False

    return list(f) if go(0) else None


# generators used by the corpus and tests ------------------------------------

def chain(n: int, name: Optional[str] = None) -> Lattice:
    labels = [str(i) for i in range(n)]
    return build_lattice(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)],
                         name=name or f"chain{n}")


def boolean_lattice(k: int, name: Optional[str] = None) -> Lattice:
    """Subsets of a k-element set, labelled by their members."""
    masks = list(range(1 << k))

    def lab(m):
        return "".join("abcdefgh"[i] for i in range(k) if m >> i & 1) or "0"

    labels = [lab(m) for m in masks]
    leq = [[(x & ~y) == 0 for y in masks] for x in masks]
    return Lattice.from_order(labels, leq, name=name or f"bool{k}")


def product(L: Lattice, M: Lattice, name: Optional[str] = None) -> Lattice:
    pairs = [(x, y) for x in L for y in M]
    labels = [f"{L.label(x)}.{M.label(y)}" for x, y in pairs]
    leq = [[L.le(p[0], q[0]) and M.le(p[1], q[1]) for q in pairs] for p in pairs]
    return Lattice.from_order(labels, leq, name=name or f"{L.name}x{M.name}")
