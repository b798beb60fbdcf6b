"""Exhaustive law sweeps shared by the module tests and the acceptance run.

Each law is a generator over one lattice yielding ``(ok, witness)`` pairs;
``run`` folds them into a count and the first counterexample.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from oracles import nuclei_by_maps, nuclei_by_subsets, similar_pairs, xi_oracle
from idiom.classes import (
    IntervalSet, abutting_violation, division_closure, join_violation,
    similarity_violation, subinterval_violation,
)
from idiom.goldie import (
    essential_intervals, goldie_zeta, goldman_nucleus, is_ddf, is_stable,
    lowest_ddf_above_zeta,
)
from idiom.intervals import (
    Interval, are_similar, enumerate_intervals, interval_lattice, is_simple, is_uniform,
    nontrivial_intervals,
)
from idiom.lattice import (
    cbd0, complements, dual, has_complement, is_essential, is_independent,
    is_meet_irreducible, join_all, meet_all, pseudocomplements, satisfies_C1,
    satisfies_CSP, soc0, validate_idiom,
)
from idiom.nuclei import (
    chi, dset_of, enumerate_nuclei, fset_of, heyting_negation, nucleus_from_dset,
    nucleus_from_fset, nucleus_join, nucleus_meet, xi,
)
from idiom.quotients import (
    boolean_quotient_checks, check_ssid, interval_of_quotients, is_j_cocritical,
    is_j_essential, is_semisimple_finite, jes_clauses, jpc_counterexamples, quotient_idiom,
    quotient_similar, saturated_elements, u_j, uq_image,
)


@dataclass
class LawResult:
    name: str
    checked: int = 0
    failed: int = 0
    witness: object = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        tail = f", first counterexample {self.witness}" if self.witness is not None else ""
        return f"{self.name}: {self.checked - self.failed}/{self.checked}{tail}"


@dataclass
class Law:
    name: str
    group: str
    fn: Callable
    finding: bool = False  # reported, not asserted


LAWS: list[Law] = []


def law(name, group, finding=False):
    def deco(fn):
        LAWS.append(Law(name, group, fn, finding))
        return fn
    return deco


def run(lw: Law, lattices) -> LawResult:
    res = LawResult(lw.name)
    for L in lattices:
        for ok, witness in lw.fn(L):
            res.checked += 1
            if not ok:
                res.failed += 1
                if res.witness is None:
                    res.witness = (L.name, witness)
    return res


def laws_in(group: str, findings: bool = False) -> list[Law]:
    return [lw for lw in LAWS if lw.group == group and lw.finding == findings]


def _lab(L, *xs):
    return " ".join(L.label(x) for x in xs)


# assembly frame ----------------------------------------------------------------

@law("N(A) is distributive", "assembly")
def _frame(L):
    yield validate_idiom(enumerate_nuclei(L).as_lattice).is_distributive, None


@law("j -> D_j -> j and j -> F_j -> j", "assembly")
def _bijection(L):
    for j in enumerate_nuclei(L):
        D, F = dset_of(L, j), fset_of(L, j)
        yield nucleus_from_dset(L, D) == j and nucleus_from_fset(L, F) == j, j.fmt()


@law("D_j -> F_j -> D_j", "assembly")
def _d_to_f(L):
    for j in enumerate_nuclei(L):
        D, F = dset_of(L, j), fset_of(L, j)
        yield fset_of(L, nucleus_from_dset(L, D)) == F and \
            dset_of(L, nucleus_from_fset(L, F)) == D, j.fmt()


@law("meet of chi(a,b) over F_j is j", "assembly")
def _meet_of_free_chis(L):
    for j in enumerate_nuclei(L):
        yield nucleus_meet(L, [chi(L, *iv) for iv in fset_of(L, j)]) == j, j.fmt()


@law("meet of chi(a,1) over [a,1] in F_j is j", "assembly")
def _meet_of_top_chis(L):
    for j in enumerate_nuclei(L):
        F = fset_of(L, j)
        yield nucleus_meet(L, [chi(L, a, L.top) for a in L if (a, L.top) in F]) == j, j.fmt()


@law("[a,1] in F_j iff j(a) = a", "assembly")
def _top_free_iff_fixed(L):
    for j in enumerate_nuclei(L):
        F = fset_of(L, j)
        for a in L:
            yield ((a, L.top) in F) == (j(a) == a), (j.fmt(), L.label(a))


@law("F_j and D_j share only trivial intervals", "assembly")
def _free_and_division_disjoint(L):
    for j in enumerate_nuclei(L):
        yield (fset_of(L, j) & dset_of(L, j)).nontrivial() == [], j.fmt()


@law("F_chi(a,b) inside F_j for [a,b] in F_j", "assembly")
def _chi_free_set_inside(L):
    for j in enumerate_nuclei(L):
        F = fset_of(L, j)
        for iv in F:
            yield fset_of(L, chi(L, *iv)) <= F, (j.fmt(), iv.fmt(L))


@law("[j(x),1] in F_j", "assembly")
def _image_to_top_free(L):
    for j in enumerate_nuclei(L):
        F = fset_of(L, j)
        for x in L:
            yield (j(x), L.top) in F, (j.fmt(), L.label(x))


# joins -------------------------------------------------------------------------

@law("iterative join = chi-formula join, pairs", "join")
def _join_pairs(L):
    frame = list(enumerate_nuclei(L))
    for j, k in itertools.combinations_with_replacement(frame, 2):
        a = nucleus_join(L, [j, k], method="iterative")
        b = nucleus_join(L, [j, k], method="chi_formula")
        yield a == b, (j.fmt(), k.fmt())


def random_families(lattices, count=100, seed=20261016):
    """``count`` families of 3-5 nuclei spread over the given lattices."""
    rng = random.Random(seed)
    lattices = list(lattices)
    for _ in range(count):
        L = rng.choice(lattices)
        frame = list(enumerate_nuclei(L))
        yield L, [rng.choice(frame) for _ in range(rng.randint(3, 5))]


# chi laws ------------------------------------------------------------------------

@law("chi(l^r, r) = chi(l, l v r)", "chi")
def _chi_join_swap(L):
    for l in L:
        for r in L:
            yield chi(L, L.meet[l][r], r) == chi(L, l, L.join[l][r]), _lab(L, l, r)


@law("chi(l^r, r) = chi(l, l^r) for l <= r", "chi", finding=True)
def _chi_meet_swap(L):
    for l in L:
        for r in L:
            if L.le(l, L.meet[l][r]):  # [l, l^r] is an interval only when l <= r
                yield chi(L, L.meet[l][r], r) == chi(L, l, L.meet[l][r]), _lab(L, l, r)


@law("chi(a,c) <= chi(a,b) for a <= b <= c", "chi")
def _chi_antitone(L):
    for a in L:
        for b in L.up(a):
            for c in L.up(b):
                yield chi(L, a, c) <= chi(L, a, b), _lab(L, a, b, c)


@law("chi(a,b) ^ chi(b,c) <= chi(a,c)", "chi")
def _chi_transitive(L):
    for a in L:
        for b in L.up(a):
            for c in L.up(b):
                yield nucleus_meet(L, [chi(L, a, b), chi(L, b, c)]) <= chi(L, a, c), \
                    _lab(L, a, b, c)


@law("chi(a, join X) = meet chi(a,x), X independent over a", "chi")
def _chi_independent_join(L):
    for a in L:
        above = [x for x in L.up(a) if x != a]
        for r in (2, 3):
            for fam in itertools.combinations(above, r):
                if is_independent(L, fam, a):
                    yield chi(L, a, join_all(L, fam)) == \
                        nucleus_meet(L, [chi(L, a, x) for x in fam]), _lab(L, a, *fam)


@law("chi(a,x) = chi(a,b) for x essential in [a,b]", "chi")
def _chi_essential(L):
    for a, b in enumerate_intervals(L):
        for x in L.between(a, b):
            if is_essential(L, x, a, b):
                yield chi(L, a, x) == chi(L, a, b), _lab(L, a, x, b)


@law("chi(a,1) two-valued for meet-irreducible a", "chi")
def _chi_meet_irreducible(L):
    for a in L:
        if is_meet_irreducible(L, a):
            want = tuple(a if L.le(x, a) else L.top for x in L)
            yield chi(L, a, L.top).table == want, L.label(a)


@law("[j(a)^b, b] in F_j", "chi")
def _meet_image_free(L):
    for j in enumerate_nuclei(L):
        F = fset_of(L, j)
        for a, b in enumerate_intervals(L):
            yield (L.meet[j(a)][b], b) in F, (j.fmt(), _lab(L, a, b))


@law("chi(a,1) = double implication into a, on frames", "chi")
def _chi_double_implication(L):
    if not validate_idiom(L).is_distributive:
        return

    def imp(x, a):
        return join_all(L, (y for y in L if L.le(L.meet[y][x], a)))

    for a in L:
        yield chi(L, a, L.top).table == tuple(imp(imp(x, a), a) for x in L), L.label(a)


# Goldie ------------------------------------------------------------------------------

@law("D_zeta = {[a,b] : a essential in [0,b]}", "goldie")
def _zeta_division_essential(L):
    yield dset_of(L, goldie_zeta(L)) == essential_intervals(L), None


@law("simple [a,b]: in D_zeta xor a complemented in [0,b]", "goldie")
def _simple_dichotomy(L):
    D = dset_of(L, goldie_zeta(L))
    for iv in nontrivial_intervals(L):
        if is_simple(L, iv):
            yield (iv in D) != has_complement(L, iv.lo, L.bottom, iv.hi), iv.fmt(L)


@law("a essential in [0, zeta(a)] or zeta(a) = a", "goldie")
def _zeta_essential_extension(L):
    z = chi(L, L.bottom, L.top)
    for a in L:
        yield is_essential(L, a, L.bottom, z(a)) or z(a) == a, L.label(a)


@law("A_zeta is complemented", "goldie")
def _zeta_quotient_complemented(L):
    M = quotient_idiom(L, goldie_zeta(L)).induced_lattice
    for x in M:
        yield bool(complements(M, x, M.bottom, M.top)), M.label(x)


@law("zeta(a) = a iff a is a pseudocomplement", "goldie")
def _zeta_fixed_pseudocomplements(L):
    z = goldie_zeta(L)
    pcs = {p for x in L for p in pseudocomplements(L, x, L.bottom, L.top)}
    for a in L:
        yield (z(a) == a) == (a in pcs), L.label(a)


@law("zeta(a) is the largest x with a essential in [0,x]", "goldie")
def _zeta_largest_extension(L):
    z = goldie_zeta(L)
    for a in L:
        ext = [x for x in L.up(a) if is_essential(L, a, L.bottom, x)]
        yield z(a) in ext and all(L.le(x, z(a)) for x in ext), L.label(a)


@law("C1 and CSP iff zeta preserves binary joins", "goldie")
def _zeta_join_preserving(L):
    z = goldie_zeta(L)
    joins = all(z(L.join[x][y]) == L.join[z(x)][z(y)] for x in L for y in L)
    yield (satisfies_C1(L) and satisfies_CSP(L)) == joins, None


@law("zeta is stable and so is every j >= zeta", "goldie")
def _zeta_stable(L):
    z = goldie_zeta(L)
    yield is_stable(L, z), "zeta"
    for j in enumerate_nuclei(L):
        if z <= j:
            yield is_stable(L, j), j.fmt()


@law("not zeta = Goldman nucleus", "goldie")
def _goldman_is_negation(L):
    yield heyting_negation(L, goldie_zeta(L)) == goldman_nucleus(L), None


@law("zeta DDF iff not(Goldman) = zeta", "goldie")
def _ddf_via_goldman(L):
    z = goldie_zeta(L)
    yield is_ddf(L, z) == (heyting_negation(L, goldman_nucleus(L)) == z), None


@law("zeta DDF iff zeta = xi[cbd0,1] iff cbd0 essential (same with soc0)", "goldie")
def _ddf_via_socle(L):
    z, T, B = goldie_zeta(L), L.top, L.bottom
    d = is_ddf(L, z)
    for e in (cbd0(L), soc0(L)):
        yield d == (z == xi(L, [(e, T)])) == is_essential(L, e, B, T), L.label(e)
    yield cbd0(L) == soc0(L), "cbd0 = soc0"


@law("[a,b] in D_not-zeta => a complemented in [0,b]", "goldie")
def _negated_zeta_complemented(L):
    nz = heyting_negation(L, goldie_zeta(L))
    for a, b in dset_of(L, nz):
        yield has_complement(L, a, L.bottom, b), _lab(L, a, b)


@law("F_not-zeta is a division set giving the lowest DDF nucleus above zeta", "goldie")
def _lowest_ddf(L):
    z = goldie_zeta(L)
    k = lowest_ddf_above_zeta(L)
    yield fset_of(L, heyting_negation(L, z)).flags.division, "division"
    for j in enumerate_nuclei(L):
        if z <= j and is_ddf(L, j):
            yield k <= j, j.fmt()


@law("not not j = j for DDF j", "goldie")
def _ddf_double_negation(L):
    for j in enumerate_nuclei(L):
        if is_ddf(L, j):
            yield heyting_negation(L, heyting_negation(L, j)) == j, j.fmt()


@law("zeta = xi[meet S, 1] when D_zeta is DDF", "goldie")
def _zeta_from_meet(L):
    z = goldie_zeta(L)
    if is_ddf(L, z):
        s = meet_all(L, (x for x in L if z(x) == L.top))
        yield z == xi(L, [(s, L.top)]), L.label(s)


@law("stable j, [a,b] not in F_j with C1: j(a)^b complemented in [a,b]", "goldie")
def _stable_complement(L):
    for j in enumerate_nuclei(L):
        if not is_stable(L, j):
            continue
        F = fset_of(L, j)
        for iv in enumerate_intervals(L):
            if iv not in F and satisfies_C1(interval_lattice(L, iv)[0]):
                yield has_complement(L, L.meet[j(iv.lo)][iv.hi], *iv), (j.fmt(), iv.fmt(L))


@law("every nucleus stable => dual of N(A) distributive", "goldie")
def _all_stable_coframe(L):
    frame = enumerate_nuclei(L)
    if all(is_stable(L, j) for j in frame):
        yield validate_idiom(dual(frame.as_lattice)).is_distributive, None


@law("D_zeta is DDF on finite lattices", "goldie", finding=True)
def _zeta_ddf(L):
    yield is_ddf(L, goldie_zeta(L)), None


@law("j-pseudocomplement d of c: d v c is j-essential", "goldie", finding=True)
def _j_pseudocomplement_essential(L):
    for j in enumerate_nuclei(L):
        bad = jpc_counterexamples(L, j)
        yield not bad, (j.fmt(), bad[:1])


# quotients -----------------------------------------------------------------------------

@law("A_j is modular, bottom j(0), and a -> j(a) preserves joins", "quotient")
def _quotient_shape(L):
    for j in enumerate_nuclei(L):
        Q = quotient_idiom(L, j)
        M = Q.induced_lattice
        ok = validate_idiom(M).is_modular and Q.from_induced(M.bottom) == j(L.bottom)
        ok = ok and all(j(L.join[x][y]) == Q.join(j(x), j(y)) for x in L for y in L)
        ok = ok and all(Q.from_induced(M.join[Q.to_induced(x)][Q.to_induced(y)])
                        == Q.join(x, y) for x in Q.fixed for y in Q.fixed)
        yield ok, j.fmt()


@law("Sat_j(I) order-isomorphic to Q_j(I) via x -> j(x)", "quotient")
def _saturated_iso(L):
    for j in enumerate_nuclei(L):
        for I in enumerate_intervals(L):
            sat = saturated_elements(L, j, I)
            q = interval_of_quotients(L, j, I)
            image = sorted(j(x) for x in sat)
            target = [y for y in j.fixed if L.le(q.lo, y) and L.le(y, q.hi)]
            ok = image == sorted(target) and len(set(image)) == len(sat)
            ok = ok and all(L.le(x, y) == L.le(j(x), j(y)) for x in sat for y in sat)
            ok = ok and all(L.meet[y][I.hi] in sat for y in target)
            yield ok, (j.fmt(), I.fmt(L))


@law("Q_j U_j = id, U_j Q_j lands in F_j, Q_j(I) trivial iff I in D_j", "quotient")
def _quotient_roundtrip(L):
    for j in enumerate_nuclei(L):
        D, F = dset_of(L, j), fset_of(L, j)
        for I in enumerate_intervals(L):
            q = interval_of_quotients(L, j, I)
            yield (interval_of_quotients(L, j, u_j(q)) == q and u_j(q) in F
                   and q.trivial == (I in D)), (j.fmt(), I.fmt(L))


@law("Q_j([r^l, r]) ~ Q_j([l, r v l]) in A_j", "quotient")
def _quotient_similarity(L):
    for j in enumerate_nuclei(L):
        for l in L:
            for r in L:
                A = interval_of_quotients(L, j, Interval(L.meet[r][l], r))
                B = interval_of_quotients(L, j, Interval(l, L.join[r][l]))
                yield quotient_similar(L, j, A, B), (j.fmt(), _lab(L, l, r))


@law("[0,a] in F_j: a essential in [0,j(a)] iff [0,j(a)] in F_j", "quotient")
def _essential_free_top(L):
    for j in enumerate_nuclei(L):
        F = fset_of(L, j)
        for a in L:
            if (L.bottom, a) in F:
                yield is_essential(L, a, L.bottom, j(a)) == ((L.bottom, j(a)) in F), \
                    (j.fmt(), L.label(a))


@law("[j(a)^b, b] ~ [j(a), j(a) v b], and j(a) v b essential in [j(a), j(b)]", "quotient")
def _diagram(L):
    for j in enumerate_nuclei(L):
        for a, b in enumerate_intervals(L):
            ja = j(a)
            ok = are_similar(L, Interval(L.meet[ja][b], b), Interval(ja, L.join[ja][b]))
            ok = ok and is_essential(L, L.join[ja][b], ja, j(b))
            yield ok, (j.fmt(), _lab(L, a, b))


@law("Q_zeta([0,u]) simple iff [0,u] uniform", "quotient")
def _uniform_simple(L):
    z = goldie_zeta(L)
    for u in L:
        if u == L.bottom:
            continue
        q = interval_of_quotients(L, z, Interval(L.bottom, u))
        M, t = quotient_idiom(L, z).induced_lattice, quotient_idiom(L, z).to_induced
        yield is_simple(M, Interval(t(q.lo), t(q.hi))) == is_uniform(L, Interval(L.bottom, u)), \
            L.label(u)


@law("udim(A) = size of an atom family of A_zeta, which is semisimple", "quotient")
def _udim_atoms(L):
    res = check_ssid(L)
    yield res.semisimple_finite and res.atom_family_size == res.uniform_dimension, res


@law("zeta-cocritical subintervals everywhere => every Q_zeta(I) semisimple", "quotient")
def _cocritical_semisimple(L):
    z = goldie_zeta(L)
    ivs = nontrivial_intervals(L)
    if not all(any(is_j_cocritical(L, z, J) for J in ivs
                   if J.within(L, I) and not J.trivial) for I in ivs):
        return
    Q = quotient_idiom(L, z)
    M, t = Q.induced_lattice, Q.to_induced
    for I in enumerate_intervals(L):
        q = interval_of_quotients(L, z, I)
        sub, _ = interval_lattice(M, Interval(t(q.lo), t(q.hi)))
        yield is_semisimple_finite(quotient_idiom(sub, enumerate_nuclei(sub).identity)), \
            I.fmt(L)


@law("U_j Q_j(I(A)) = F_j for every j on a Boolean lattice", "boolean")
def _boolean_image(L):
    if not validate_idiom(L).is_boolean:
        return
    for j in enumerate_nuclei(L):
        extra = fset_of(L, j).members - uq_image(L, j).members
        yield not extra, (j.fmt(), [Interval(*iv).fmt(L) for iv in sorted(extra)][:1])


@law("distributive: Boolean iff U_nn Q_nn(I(A)) = F_nn", "boolean")
def _boolean_char(L):
    if validate_idiom(L).is_distributive:
        rep = boolean_quotient_checks(L)
        yield rep.characterization_holds, rep.witness


@law("the five readings of j-essential agree", "quotient")
def _relative_essential_clauses(L):
    for j in enumerate_nuclei(L):
        for I in enumerate_intervals(L):
            for x in L.between(*I):
                c = jes_clauses(L, j, x, I)
                yield len(set(c.values())) == 1 and c[3] == is_j_essential(L, j, x, I), \
                    (j.fmt(), I.fmt(L), L.label(x), c)


# oracles ---------------------------------------------------------------------------------

@law("enumerate_nuclei = meet-closed-subset oracle", "oracle")
def _enum_subsets(L):
    yield sorted(j.table for j in enumerate_nuclei(L)) == nuclei_by_subsets(L), None


@law("enumerate_nuclei = monotone-map backtracking oracle", "oracle")
def _enum_maps(L):
    if L.size <= 12:
        yield sorted(j.table for j in enumerate_nuclei(L)) == nuclei_by_maps(L), None


@law("are_similar = (l,r)-scan oracle", "oracle")
def _sim(L):
    scan = similar_pairs(L)
    ivs = enumerate_intervals(L)
    for I in ivs:
        for J in ivs:
            yield are_similar(L, I, J) == ((I, J) in scan), (I.fmt(L), J.fmt(L))


@law("xi = meet over all collapsing nuclei", "oracle")
def _xi(L):
    tables = nuclei_by_subsets(L)
    ivs = enumerate_intervals(L)
    for I in ivs:
        yield xi(L, [I]).table == xi_oracle(L, tables, [I]), I.fmt(L)
    rng = random.Random(L.size * 7919 + len(ivs))
    for _ in range(20):
        seed = rng.sample(ivs, rng.randint(2, min(4, len(ivs))))
        yield xi(L, seed).table == xi_oracle(L, tables, seed), [iv.fmt(L) for iv in seed]


@law("division_closure output is a fixpoint of the four closure rules", "oracle")
def _closure_fixpoint(L):
    ivs = enumerate_intervals(L)
    rng = random.Random(L.size * 104729 + len(ivs))
    seeds = [[I] for I in ivs] + [rng.sample(ivs, min(3, len(ivs))) for _ in range(20)]
    for seed in seeds:
        C = division_closure(L, seed)
        ok = all(fn(C) is None for fn in (similarity_violation, subinterval_violation,
                                          abutting_violation, join_violation))
        yield ok and IntervalSet(L, seed) <= C, [iv.fmt(L) for iv in seed]
