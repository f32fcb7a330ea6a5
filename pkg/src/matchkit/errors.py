"""Exception hierarchy shared by every matchkit module."""


class MatchkitError(Exception):
    """Base class for all matchkit errors."""


class GraphError(MatchkitError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class EmptyOrFullShore(GraphError):
    pass


class UnknownEdge(GraphError):
    pass


class GraphFormatError(GraphError):
    pass


class BudgetExhausted(MatchkitError):
    """An exhaustive search hit its item budget; the result would be truncated."""


class NotMatchable(MatchkitError, ValueError):
    pass


class NotMatchingCovered(MatchkitError, ValueError):
    pass


class InvalidMatching(MatchkitError, ValueError):
    pass


class InvalidCertificate(MatchkitError, ValueError):
    pass


class WrongParity(MatchkitError, ValueError):
    pass


class PreconditionViolated(MatchkitError, ValueError):
    pass


class TrivialCut(PreconditionViolated):
    pass


class TooSmall(PreconditionViolated):
    pass


class NotDegreeTwo(PreconditionViolated):
    pass


class ParallelPairAtV(PreconditionViolated):
    pass


class NotABrick(PreconditionViolated):
    pass


class NotASimpleBrick(NotABrick):
    pass


class BadParams(MatchkitError, ValueError):
    pass


class DegreeMismatch(BadParams):
    pass


class ReductionStuck(MatchkitError):
    """A simple brick without strictly thin edges matched no Norine-Thomas family."""
