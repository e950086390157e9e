"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`TVSynError`,
so the command line can map it to exit code 1 without catching bugs.
"""

from __future__ import annotations


class TVSynError(Exception):
    """Base class for all domain errors."""


# graph construction / enumeration
class IndexOutOfRange(TVSynError, ValueError):
    pass


class SelfLoop(TVSynError, ValueError):
    pass


class DegenerateLineGraph(TVSynError):
    pass


class NotConnected(TVSynError):
    pass


class NotTree(TVSynError):
    pass


class TooLarge(TVSynError):
    """An enumeration would exceed its guard."""


# linear algebra
class Singular(TVSynError, ArithmeticError):
    pass


class EmptyComplement(TVSynError, ValueError):
    pass


class RankDeficientBasis(TVSynError, ValueError):
    pass


class ConvergenceFailure(TVSynError):
    pass


# dictionaries
class TooManySubsets(TooLarge):
    pass


class RankZero(TVSynError):
    pass


class InversionFailure(TVSynError):
    pass


class LPFailure(TVSynError):
    pass


class ShapeMismatch(TVSynError, ValueError):
    pass


class BadOrder(TVSynError, ValueError):
    pass


class BadShape(TVSynError, ValueError):
    pass


# solvers
class NotConverged(ConvergenceFailure):
    pass


class DimensionMismatch(TVSynError, ValueError):
    pass


class RankAssumptionViolated(TVSynError):
    pass


# factors
class TooManySigns(TooLarge):
    pass


# io
class FormatError(TVSynError, ValueError):
    pass
