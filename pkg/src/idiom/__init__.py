"""Nuclei and interval classes on finite modular lattices."""

from .lattice import Lattice, build_lattice, validate_idiom
from .intervals import Interval, are_similar, enumerate_intervals
from .classes import IntervalSet, classify_set, division_closure
from .nuclei import Nucleus, chi, dset_of, enumerate_nuclei, fset_of, nucleus, xi
from .goldie import goldie_nucleus, goldie_zeta
from .quotients import quotient_idiom
from .textio import emit_lattice, parse_lattice, read_lattice

__version__ = "0.1.0"

__all__ = [
    "Lattice", "build_lattice", "validate_idiom",
    "Interval", "are_similar", "enumerate_intervals",
    "IntervalSet", "classify_set", "division_closure",
    "Nucleus", "chi", "dset_of", "enumerate_nuclei", "fset_of", "nucleus", "xi",
    "goldie_nucleus", "goldie_zeta", "quotient_idiom",
    "emit_lattice", "parse_lattice", "read_lattice",
]
