"""Quotient idioms, intervals of quotients and relative essentiality.

For a nucleus ``j`` the fixed points form an idiom ``A_j`` with the host
meet and the join ``x, y -> j(x v y)``.  Host elements keep their indices
throughout; :class:`QuotientIdiom` translates to and from the induced
lattice when lattice-level predicates are needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional

from .classes import IntervalSet
from .errors import InternalDisagreement, NotApplicable
from .intervals import Interval, are_similar, enumerate_intervals
from .lattice import (
    Lattice,
    check_in_interval,
    is_essential,
    join_all,
    uniform_dimension,
    validate_idiom,
)
from .nuclei import Nucleus, enumerate_nuclei, fset_of, nucleus
from .goldie import goldie_zeta


class QuotientInterval(NamedTuple):
    """[j(a), j(b)] in A_j, stored with host indices."""

    lo: int
    hi: int

    @property
    def trivial(self) -> bool:
        return self.lo == self.hi


class QuotientIdiom:
    def __init__(self, L: Lattice, j: Nucleus):
        self.host = L
        self.j = j
        self.fixed = tuple(j.fixed)
        self._pos = {x: k for k, x in enumerate(self.fixed)}

    @cached_property
    def induced_lattice(self) -> Lattice:
        L = self.host
        labels = [L.label(x) for x in self.fixed]
        leq = [[L.le(x, y) for y in self.fixed] for x in self.fixed]
        return Lattice.from_order(labels, leq, name=f"{L.name}_j")

    @property
    def bottom(self) -> int:
        return self.j(self.host.bottom)

    @property
    def top(self) -> int:
        return self.host.top

    def meet(self, x: int, y: int) -> int:
        return self.host.meet[x][y]

    def join(self, x: int, y: int) -> int:
        return self.j(self.host.join[x][y])

    def to_induced(self, x: int) -> int:
        return self._pos[x]

    def from_induced(self, k: int) -> int:
        return self.fixed[k]

    def __len__(self):
        return len(self.fixed)


def quotient_idiom(L: Lattice, j: Nucleus) -> QuotientIdiom:
    return QuotientIdiom(L, j)


def interval_of_quotients(L: Lattice, j: Nucleus, I: Interval) -> QuotientInterval:
    return QuotientInterval(j(I.lo), j(I.hi))


def u_j(Q: QuotientInterval) -> Interval:
    """Read a quotient interval as an interval of the host."""
    return Interval(Q.lo, Q.hi)


def uq_image(L: Lattice, j: Nucleus) -> IntervalSet:
    """All host intervals [j(a), j(b)]."""
    return IntervalSet(L, [u_j(interval_of_quotients(L, j, iv))
                           for iv in enumerate_intervals(L)])


def saturated_elements(L: Lattice, j: Nucleus, I: Interval) -> list[int]:
    """Elements x of I with [x, I.hi] free for j, i.e. j(x) ^ I.hi = x.

    ``x -> j(x)`` maps these isomorphically onto the interval of quotients,
    with inverse ``y -> y ^ I.hi``.  They are the fixed points of ``j``
    inside I only when I.hi is itself fixed.
    """
    return [x for x in L.between(I.lo, I.hi) if L.meet[j(x)][I.hi] == x]


def quotient_elements(L: Lattice, j: Nucleus, I: Interval) -> list[int]:
    Q = interval_of_quotients(L, j, I)
    return [y for y in j.fixed if L.le(Q.lo, y) and L.le(y, Q.hi)]


def quotient_similar(L: Lattice, j: Nucleus, I: QuotientInterval, J: QuotientInterval) -> bool:
    qi = quotient_idiom(L, j)
    M = qi.induced_lattice
    t = qi.to_induced
    return are_similar(M, Interval(t(I.lo), t(I.hi)), Interval(t(J.lo), t(J.hi)))


# relative essentiality ----------------------------------------------------------

def jes_clauses(L: Lattice, j: Nucleus, x: int, I: Interval) -> dict[int, bool]:
    """The five equivalent readings of "x is j-essential in I"."""
    a, b = I
    check_in_interval(L, x, a, b)
    ja = j(a)

    def host_reading(y):
        return all(L.le(c, ja) for c in L.between(a, b) if L.le(L.meet[y][c], ja))

    qi = quotient_idiom(L, j)
    M = qi.induced_lattice
    t = qi.to_induced
    low = L.meet[ja][b]
    jxb = L.meet[j(x)][b]
    return {
        1: host_reading(x),
        2: host_reading(jxb),
        3: is_essential(M, t(j(x)), t(ja), t(j(b))),
        4: is_essential(L, L.join[x][low], low, b),
        5: is_essential(L, jxb, low, b),
    }


def is_j_essential(L: Lattice, j: Nucleus, x: int, I: Interval) -> bool:
    """j(x) is essential in the interval of quotients [j(a), j(b)]."""
    a, b = I
    check_in_interval(L, x, a, b)
    qi = quotient_idiom(L, j)
    t = qi.to_induced
    return is_essential(qi.induced_lattice, t(j(x)), t(j(a)), t(j(b)))


def j_pseudocomplements(L: Lattice, j: Nucleus, c: int, I: Interval) -> list[int]:
    """Maximal d in I with [I.lo, c ^ d] collapsed by j."""
    a, b = I
    check_in_interval(L, c, a, b)
    cands = [d for d in L.between(a, b) if L.le(L.meet[c][d], j(a))]
    out = [d for d in cands if not any(L.lt(d, e) for e in cands)]
    for d in out:
        if L.meet[j(d)][b] != d:
            raise InternalDisagreement(
                f"j-pseudocomplement {L.label(d)} is not saturated in {I.fmt(L)}")
    return out


def jpc_counterexamples(L: Lattice, j: Nucleus) -> list[tuple[Interval, int, int]]:
    """Triples (I, b, d) where d is a j-pseudocomplement of b in I but
    d v b is not j-essential in I."""
    bad = []
    for I in enumerate_intervals(L):
        for b in L.between(I.lo, I.hi):
            for d in j_pseudocomplements(L, j, b, I):
                if not is_j_essential(L, j, L.join[d][b], I):
                    bad.append((I, b, d))
    return bad


def is_j_cocritical(L: Lattice, j: Nucleus, I: Interval) -> bool:
    """Every x in I is either I.lo or has [x, I.hi] collapsed by j."""
    return all(x == I.lo or L.le(I.hi, j(x)) for x in L.between(I.lo, I.hi))


# semisimplicity ---------------------------------------------------------------------

def atom_family(M: Lattice) -> list[int]:
    """A maximal independent family of atoms, chosen greedily.

    In a modular lattice an atom is independent of a family exactly when it
    lies outside the family's join, so greedy selection is maximal.
    """
    fam: list[int] = []
    cur = M.bottom
    for p in M.atoms():
        if not M.le(p, cur):
            fam.append(p)
            cur = M.join[cur][p]
    return fam


def is_semisimple_finite(Q: QuotientIdiom) -> bool:
    """The top of A_j is the join of an independent family of atoms.

    The one-point quotient counts as semisimple (empty join).
    """
    M = Q.induced_lattice
    return join_all(M, atom_family(M)) == M.top


class SsidCheck(NamedTuple):
    uniform_dimension: int
    semisimple_finite: bool
    atom_family_size: int


def check_ssid(L: Lattice, cap: Optional[int] = None) -> SsidCheck:
    """Finite uniform dimension against the semisimplicity of A_zeta."""
    Q = quotient_idiom(L, goldie_zeta(L, cap))
    udim = uniform_dimension(L)
    res = SsidCheck(udim, is_semisimple_finite(Q), len(atom_family(Q.induced_lattice)))
    if not res.semisimple_finite or res.atom_family_size != udim:
        raise InternalDisagreement(
            f"{L.name}: uniform dimension {udim} but A_zeta has an atom family "
            f"of size {res.atom_family_size} (semisimple={res.semisimple_finite})")
    return res


# Boolean checks ------------------------------------------------------------------------

def double_negation(L: Lattice) -> Nucleus:
    """a -> not not a, with not x the largest y such that y ^ x = bottom."""
    def neg(x):
        return join_all(L, (y for y in L if L.meet[x][y] == L.bottom))
    return nucleus(L, [neg(neg(a)) for a in L])


@dataclass
class BooleanQuotientReport:
    lattice: str
    is_boolean: bool
    uq_equals_fset_for_all_nuclei: Optional[bool]
    nn_uq_equals_fset: bool
    characterization_holds: bool
    witness: Optional[Interval] = None
    all_nuclei_witness: Optional[tuple[Nucleus, Interval]] = None


def boolean_quotient_checks(L: Lattice, cap: Optional[int] = None) -> BooleanQuotientReport:
    """On a distributive lattice compare U_j Q_j(I(A)) with F_j.

    For Boolean lattices every nucleus is checked and the first free
    interval missing from the image is kept as a witness; for any
    distributive lattice, Booleanness is compared with the equality for
    double negation.
    """
    rep = validate_idiom(L)
    if not rep.is_distributive:
        raise NotApplicable(f"{L.name} is not distributive")
    all_ok, all_witness = None, None
    if rep.is_boolean:
        all_ok = True
        for j in enumerate_nuclei(L, cap):
            extra = fset_of(L, j).members - uq_image(L, j).members
            if extra:
                all_ok, all_witness = False, (j, min(extra))
                break
    nn = double_negation(L)
    image, free = uq_image(L, nn), fset_of(L, nn)
    witness = next(iter(sorted(free.members - image.members)), None)
    eq = image == free
    return BooleanQuotientReport(L.name, rep.is_boolean, all_ok, eq,
                                 eq == rep.is_boolean, witness, all_witness)


__all__ = [
    "QuotientIdiom", "QuotientInterval", "quotient_idiom", "interval_of_quotients",
    "u_j", "saturated_elements", "is_j_essential", "j_pseudocomplements",
    "is_j_cocritical", "is_semisimple_finite", "check_ssid",
    "boolean_quotient_checks",
]
