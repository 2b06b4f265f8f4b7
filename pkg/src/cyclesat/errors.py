"""Exception types shared across the package."""


class CycleSatError(Exception):
    """Base class for all package errors."""


class InvalidEdge(CycleSatError):
    """An edge is a loop or otherwise malformed."""


class InvalidVertex(CycleSatError):
    """A vertex reference is out of range."""


class DuplicateLabel(CycleSatError):
    """Two vertices carry the same (kind, block, member) label."""


class MissingLabel(CycleSatError):
    """An operation requires labels the graph does not carry."""


class ParseError(CycleSatError):
    """Malformed serialized input."""


class UnsupportedR(CycleSatError):
    """r outside the domain of the base-cycle patterns."""


class UnsupportedK(CycleSatError):
    """k below the minimum a construction or lemma supports."""


class ParameterBoundViolated(CycleSatError):
    """The required bound 2k >= r + 5 fails."""


class BudgetExhausted(CycleSatError):
    """A search exceeded its node-expansion budget before finishing."""

    def __init__(self, message: str, used: int = 0, limit: int = 0):
        super().__init__(message)
        self.used = used
        self.limit = limit


class LemmaOutOfRange(CycleSatError):
    """Requested (class-pair, length) is not admissible in H(k)."""


class NotCoreEligible(CycleSatError):
    """A core-path endpoint lies in a leaf class or collapses onto the
    same cycle node as the other endpoint."""


class AdjacentEndpoints(CycleSatError):
    """The two endpoints are adjacent (or identical)."""


class ConstructionGap(CycleSatError):
    """The witness constructor hit a case outside the admissible ranges.

    Must never occur for valid parameters; reaching it is a bug."""


class NotFree(CycleSatError):
    """Saturation was requested for a graph already containing the cycle."""


class SearchTooLarge(CycleSatError):
    """Exhaustive enumeration was requested beyond the supported size."""


class NoSaturatedGraph(CycleSatError):
    """No saturated graph exists for the requested parameters."""
