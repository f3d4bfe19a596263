"""Exception hierarchy shared by every module of the package."""


class GraphError(ValueError):
    """Base class for invalid graph input or failed preconditions."""


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class EdgeOutOfRange(GraphError):
    pass


class NotEulerian(GraphError):
    pass


class NotSimple(GraphError):
    pass


class NotRegular(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class ColoringMismatch(GraphError):
    """The coloring does not cover exactly the edge ids of the graph."""


class WitnessMismatch(GraphError):
    """A witness file belongs to a different graph than the one requested."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BoundsTooLarge(GraphError):
    pass


class TooLargeForCanonical(GraphError):
    pass


class Inconclusive(RuntimeError):
    """The search exhausted its node budget before reaching an answer.

    Never a statement about colorability.
    """

    def __init__(self, nodes: int, budget: int):
        self.nodes = nodes
        self.budget = budget
        super().__init__(f"node budget of {budget} exhausted after {nodes} nodes")
