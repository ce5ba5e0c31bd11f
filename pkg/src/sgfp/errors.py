"""Exception types shared across the sgfp package."""


class SgfpError(Exception):
    """Base class for all sgfp errors."""


class SelfLoopError(SgfpError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"self-loop on node {node!r}")


class IsolatedNodeError(SgfpError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"node {node!r} has degree 0")


class UnknownNodeError(SgfpError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"unknown node {node!r}")


class LengthMismatchError(SgfpError):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"expected length {expected}, got {got}")


class EmptyGraphError(SgfpError):
    pass


class AllIsolatesError(SgfpError):
    pass


class DegenerateGraphError(SgfpError):
    """Graph is regular or disconnected where that is not allowed."""


class PreconditionViolatedError(SgfpError):
    def __init__(self, condition):
        self.condition = condition
        super().__init__(f"precondition violated: {condition}")


class InvariantBrokenError(SgfpError):
    pass


class TooSmallError(SgfpError):
    pass


class ParseError(SgfpError):
    def __init__(self, line_number, message):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class DuplicateRowError(SgfpError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"duplicate row for node {label!r}")


class DimensionMismatchError(SgfpError):
    pass


class InfeasibleAtEpsilonError(SgfpError):
    def __init__(self, epsilon):
        self.epsilon = epsilon
        super().__init__(f"LP infeasible at epsilon={epsilon}")


class ExhaustedTriesError(SgfpError):
    def __init__(self, tries):
        self.tries = tries
        super().__init__(f"no acceptable graph found in {tries} tries")
