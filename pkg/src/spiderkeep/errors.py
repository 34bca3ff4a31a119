"""Exception types raised across the package."""


class SpiderKeepError(Exception):
    pass


class SelfLoop(SpiderKeepError, ValueError):
    pass


class IdOutOfRange(SpiderKeepError, ValueError):
    pass


class EmptyGraph(SpiderKeepError, ValueError):
    pass


class OddCycle(SpiderKeepError):
    """Raised by two-coloring; ``cycle`` lists the vertices of one odd cycle in order."""

    def __init__(self, cycle):
        super().__init__(f"graph has an odd cycle: {list(cycle)}")
        self.cycle = tuple(cycle)


class CompleteGraph(SpiderKeepError):
    pass


class TooLargeForEnumeration(SpiderKeepError):
    pass


class NotASeparator(SpiderKeepError, ValueError):
    pass


class HypothesisNotMet(SpiderKeepError):
    """``which`` names the failed hypothesis (``bipartite``, ``kappa``, ``min_degree``, ...)."""

    def __init__(self, which, detail=""):
        super().__init__(f"hypothesis not met: {which}" + (f" ({detail})" if detail else ""))
        self.which = which
        self.detail = detail


class ZeroLengthLeg(SpiderKeepError, ValueError):
    pass


class MixedParity(SpiderKeepError, ValueError):
    pass


class TooFewAttachments(SpiderKeepError, ValueError):
    pass


class ProcedureStuck(SpiderKeepError):
    """The end-deletion loop found no admissible next vertex.

    ``trace`` holds the partial deletion history up to the failure.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class NoCertificate(SpiderKeepError):
    pass


class GenerationBudgetExceeded(SpiderKeepError):
    pass


class BadParameters(SpiderKeepError, ValueError):
    pass


class ParseError(SpiderKeepError, ValueError):
    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
