"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class OlaError(Exception):
    """Base class for all errors raised by olaplus."""


class GraphInputError(OlaError, ValueError):
    """An edge list could not be turned into a simple graph.

    ``pair`` is the offending edge as given, ``index`` its position in the
    input edge list and ``line`` the source line number when the edge came
    from a file.
    """

    reason = "invalid edge"

    def __init__(self, pair, index=None, line=None, detail=None):
        self.pair = pair
        self.index = index
        self.line = line
        where = f" at line {line}" if line is not None else (
            f" (edge #{index})" if index is not None else "")
        msg = f"{self.reason} {tuple(pair)!r}{where}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class LoopEdge(GraphInputError):
    reason = "loop edge"


class DuplicateEdge(GraphInputError):
    reason = "duplicate edge"


class EndpointOutOfRange(GraphInputError):
    reason = "endpoint out of range in edge"


class ArrangementMismatch(OlaError, ValueError):
    """An arrangement is not a bijection onto the positions of a graph."""


class Disconnected(OlaError, ValueError):
    """An operation that needs a connected graph received a disconnected one."""


class NotABridge(OlaError, ValueError):
    pass


class NotATree(OlaError, ValueError):
    pass


class InternalInvariantViolation(OlaError, AssertionError):
    """Raised when an internal invariant fails; always indicates a bug."""


class RecordMismatch(OlaError, ValueError):
    """A kernel record and an arrangement disagree on their vertex sets."""


class TooLarge(OlaError, ValueError):
    """The exact oracle was asked to solve a graph above its size cap."""


class BadParameters(OlaError, ValueError):
    pass


class UnknownFamily(OlaError, ValueError):
    pass


class ParseError(OlaError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
