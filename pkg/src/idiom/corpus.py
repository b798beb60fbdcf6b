"""Built-in corpus of small modular lattices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .lattice import Lattice, boolean_lattice, build_lattice, chain, dual, product


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    lattice: Lattice
    provenance: str


def exa1() -> Lattice:
    """Ideals of the trivial extension of Z2 by Z2 (+) Z2."""
    return build_lattice(
        ["0", "S", "T", "U", "I", "R"],
        [("0", "S"), ("0", "T"), ("0", "U"),
         ("S", "I"), ("T", "I"), ("U", "I"), ("I", "R")],
        name="exa1")


def ex2() -> Lattice:
    """Order dual of :func:`exa1` (a uniform lattice)."""
    return build_lattice(
        ["0", "I", "S", "T", "U", "1"],
        [("0", "I"), ("I", "S"), ("I", "T"), ("I", "U"),
         ("S", "1"), ("T", "1"), ("U", "1")],
        name="ex2")


def diamond() -> Lattice:
    return build_lattice(
        ["0", "a", "b", "c", "d", "1"],
        [("0", "a"), ("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("d", "1")],
        name="diamond")


def m3() -> Lattice:
    return build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        name="M3")


def m3_stacked() -> Lattice:
    """Two copies of M3 glued top-to-bottom."""
    return build_lattice(
        ["0", "a", "b", "c", "m", "d", "e", "f", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "m"), ("b", "m"), ("c", "m"),
         ("m", "d"), ("m", "e"), ("m", "f"), ("d", "1"), ("e", "1"), ("f", "1")],
        name="M3stacked")


def pentagon() -> Lattice:
    """N5, the smallest non-modular lattice; not part of the corpus."""
    return build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        name="N5")


@lru_cache(maxsize=1)
def corpus() -> tuple[CorpusEntry, ...]:
    entries = [
        CorpusEntry("exa1", exa1(), "lattice of ideals from the first worked example"),
        CorpusEntry("ex2", ex2(), "order dual of exa1, second worked example"),
        CorpusEntry("diamond", diamond(), "example following the essential-interval theorem"),
        CorpusEntry("M3", m3(), "generator: diamond M3"),
        CorpusEntry("M3stacked", m3_stacked(), "generator: M3 glued on M3"),
    ]
    for n in range(2, 7):
        entries.append(CorpusEntry(f"chain{n}", chain(n), "generator: chain"))
    for k in range(1, 5):
        entries.append(CorpusEntry(f"bool{k}", boolean_lattice(k), "generator: Boolean lattice"))
    c2, c3 = chain(2), chain(3)
    entries += [
        CorpusEntry("chain2xchain3", product(c2, c3, name="chain2xchain3"), "generator: product"),
        CorpusEntry("chain3xchain3", product(c3, c3, name="chain3xchain3"), "generator: product"),
        CorpusEntry("M3xchain2", product(m3(), c2, name="M3xchain2"), "generator: product"),
        CorpusEntry("exa1xchain2", product(exa1(), c2, name="exa1xchain2"), "generator: product"),
        CorpusEntry("diamond_op", dual(diamond(), name="diamond_op"), "generator: dual"),
        CorpusEntry("M3stacked_op", dual(m3_stacked(), name="M3stacked_op"), "generator: dual"),
    ]
    return tuple(entries)


def get(name: str) -> Lattice:
    for e in corpus():
        if e.name == name:
            return e.lattice
    raise KeyError(f"no corpus lattice named {name!r}")


def names() -> list[str]:
    return [e.name for e in corpus()]


def within(max_size: int) -> list[CorpusEntry]:
    return [e for e in corpus() if e.lattice.size <= max_size]
