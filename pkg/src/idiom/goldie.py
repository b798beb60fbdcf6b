"""The Goldie nucleus, the Goldman nucleus, stability and DDF analysis."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classes import (
    IntervalSet,
    essential_extension_violation,
    meet_violation,
    nonsingular_intervals,
)
from .errors import InternalDisagreement, NotADivisionSet
from .intervals import Interval, enumerate_intervals, is_simple
from .lattice import (
    Lattice,
    cbd0,
    is_essential,
    satisfies_C1,
    satisfies_CSP,
    soc0,
)
from .nuclei import (
    Nucleus,
    chi,
    dset_of,
    fset_of,
    heyting_negation,
    nucleus_from_dset,
    nucleus_from_fset,
    xi,
)


@dataclass(frozen=True)
class GoldieAnalysis:
    lattice: Lattice
    zeta: Nucleus
    dset: IntervalSet
    fset: IntervalSet
    goldman: Nucleus
    zeta_is_ddf: bool
    cbd0: int
    soc0: int
    c1: bool
    csp: bool


def essential_intervals(L: Lattice) -> IntervalSet:
    """All [a,b] with a essential in [bottom, b]."""
    return IntervalSet(L, [iv for iv in enumerate_intervals(L)
                           if is_essential(L, iv.lo, L.bottom, iv.hi)])


def goldie_zeta(L: Lattice, cap: Optional[int] = None) -> Nucleus:
    """Production route: the largest nucleus keeping the bottom free below the top."""
    return chi(L, L.bottom, L.top, cap)


def goldie_nucleus(L: Lattice, cap: Optional[int] = None, verify: bool = True) -> GoldieAnalysis:
    """Goldie nucleus with its division and free sets.

    With ``verify`` the nucleus is also rebuilt from the nonsingular
    intervals and from the essential intervals; any disagreement raises
    :class:`InternalDisagreement`.
    """
    zeta = goldie_zeta(L, cap)
    fset = nonsingular_intervals(L)
    if verify:
        routes = {
            "chi(bottom, top)": zeta,
            "free set of nonsingular intervals": nucleus_from_fset(L, fset),
            "division set of essential intervals": nucleus_from_dset(L, essential_intervals(L)),
        }
        tables = {name: j.table for name, j in routes.items()}
        if len(set(tables.values())) != 1:
            raise InternalDisagreement(
                "Goldie nucleus routes disagree: "
                + "; ".join(f"{k} -> {j.fmt()}" for k, j in routes.items()))
        if fset_of(L, zeta) != fset:
            raise InternalDisagreement("free set of zeta differs from the nonsingular intervals")
    dset = dset_of(L, zeta)
    return GoldieAnalysis(
        lattice=L,
        zeta=zeta,
        dset=dset,
        fset=fset_of(L, zeta),
        goldman=goldman_nucleus(L, cap),
        zeta_is_ddf=is_ddf(L, zeta),
        cbd0=cbd0(L),
        soc0=soc0(L),
        c1=satisfies_C1(L),
        csp=satisfies_CSP(L),
    )


def goldman_nucleus(L: Lattice, cap: Optional[int] = None) -> Nucleus:
    """Least nucleus collapsing every nonsingular simple interval."""
    seed = [iv for iv in nonsingular_intervals(L).nontrivial() if is_simple(L, iv)]
    return xi(L, seed, cap)


def is_stable(L: Lattice, j: Nucleus) -> bool:
    """D_j is closed under essential extensions [a,b] -> [a,c]."""
    return essential_extension_violation(dset_of(L, j)) is None


def is_ddf(L: Lattice, j: Nucleus) -> bool:
    """Stable, and [x,a], [y,a] in D_j imply [x ^ y, a] in D_j."""
    D = dset_of(L, j)
    return essential_extension_violation(D) is None and meet_violation(D) is None


def lowest_ddf_above_zeta(L: Lattice, cap: Optional[int] = None) -> Nucleus:
    """The nucleus whose division set is the free set of the negation of zeta."""
    zeta = goldie_zeta(L, cap)
    F = fset_of(L, heyting_negation(L, zeta, cap))
    try:
        k = nucleus_from_dset(L, F)
    except NotADivisionSet as exc:
        raise NotADivisionSet(f"free set of the negated Goldie nucleus is not a "
                              f"division set on {L.name}: {exc}",
                              clause=exc.clause, witness=exc.witness) from exc
    if not (zeta <= k and is_ddf(L, k)):
        raise InternalDisagreement(f"{k.fmt()} is not a DDF nucleus above zeta")
    return k


def socle_xi(L: Lattice, cap: Optional[int] = None) -> Nucleus:
    """Least nucleus collapsing [cbd0, top]."""
    return xi(L, [Interval(cbd0(L), L.top)], cap)
