"""Exception hierarchy shared by every module of the package."""


class IdiomError(Exception):
    """Base class for all errors raised by this package."""


class LatticeConstructionError(IdiomError):
    pass


class DuplicateLabel(LatticeConstructionError):
    pass


class UnknownLabel(LatticeConstructionError):
    pass


class CyclicCovers(LatticeConstructionError):
    pass


class NotALattice(LatticeConstructionError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NoBoundedTop(LatticeConstructionError):
    pass


class NoBoundedBottom(LatticeConstructionError):
    pass


class LatticeSyntaxError(IdiomError):
    def __init__(self, message, line, col=1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class OutOfInterval(IdiomError):
    pass


class SizeCapExceeded(IdiomError):
    pass


class NotANucleus(IdiomError):
    pass


class NotAFreeSeed(IdiomError):
    pass


class MissingTop(IdiomError):
    pass


class NotADivisionSet(IdiomError):
    def __init__(self, message, clause=None, witness=None):
        super().__init__(message)
        self.clause = clause
        self.witness = witness


class NotAFreeSet(IdiomError):
    def __init__(self, message, clause=None, witness=None):
        super().__init__(message)
        self.clause = clause
        self.witness = witness


class InternalDisagreement(IdiomError):
    pass


class NotApplicable(IdiomError):
    pass
