"""Exception hierarchy shared by the library and the command line."""


class PwlieError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(PwlieError, ValueError):
    pass


class NotStrictlyDominant(PwlieError, ValueError):
    pass


class HorizonTooSmall(PwlieError):
    """A permutation weight set was asked for depths beyond its horizon."""


class HorizonExceeded(PwlieError):
    """A multiplicity query lies deeper than the solved string functions."""


class ResourceLimitExceeded(PwlieError):
    """The brute-force oracle refused a search box above its size guard."""


class CacheError(PwlieError):
    pass


class SolverError(PwlieError):
    """Hard failure of the order-by-order string function solve.

    Carries the offending order and the residual Laurent polynomial (or a
    textual description of it) so the caller can print a diagnostic.
    """

    def __init__(self, message, order=None, residual=None):
        super().__init__(message)
        self.order = order
        self.residual = residual


class InconsistentSystem(SolverError):
    pass


class NonIntegralCoefficient(SolverError):
    pass


class NegativeCoefficient(SolverError):
    pass


class RankDeficientSystem(SolverError):
    """The specialization cannot separate the unknowns at some order."""
