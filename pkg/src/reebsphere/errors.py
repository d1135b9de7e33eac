"""Exception hierarchy shared by every module of the package."""


class ReebError(Exception):
    """Base class for all errors raised by reebsphere."""


class InvalidVertex(ReebError, KeyError):
    def __init__(self, vertex, where="graph"):
        self.vertex = vertex
        super().__init__(f"vertex {vertex!r} is not in the {where}")

    def __str__(self):
        return self.args[0]


class InvalidGraph(ReebError, ValueError):
    """Malformed graph data: self-loops, duplicate edges, unknown endpoints."""


class LevelOnVertex(ReebError, ValueError):
    """A level parameter coincides with a value the coloring takes."""


class NotLocallyInjective(ReebError, ValueError):
    def __init__(self, edge, value):
        self.edge = edge
        self.value = value
        a, b = edge
        super().__init__(f"adjacent vertices {a!r} and {b!r} share the value {value}")


class NotAManifoldWithBoundary(ReebError, ValueError):
    pass


class EmptyFactor(ReebError, ValueError):
    pass


class NotRefinableEdge(ReebError, ValueError):
    pass


class PreconditionFailed(ReebError, ValueError):
    pass


class NotADGraph(PreconditionFailed):
    pass


class NotASphere(PreconditionFailed):
    pass


class NotABall(PreconditionFailed):
    pass


class BudgetExhausted(ReebError, RuntimeError):
    """A recognition query ran out of search nodes before reaching Yes or No."""


class ConstructionBug(ReebError, AssertionError):
    """An internal post-condition failed; results must not be trusted."""


class RecipeError(ReebError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
