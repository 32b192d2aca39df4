"""Exception types shared across the package."""


class PermboundError(Exception):
    """Base class for all package errors."""


class ParseError(PermboundError, ValueError):
    pass


class VertexOutOfRange(PermboundError, ValueError):
    pass


class SizeMismatch(PermboundError, ValueError):
    pass


class NotABijection(PermboundError, ValueError):
    pass


class CyclicGraph(PermboundError, ValueError):
    """Raised when an operation needs an acyclic graph.

    ``cycle`` holds one witness as a closed vertex walk, e.g. ``(1, 2, 3, 1)``.
    """

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("graph has an oriented cycle: " + "→".join(map(str, self.cycle)))


class LimitExceeded(PermboundError):
    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        super().__init__(f"n={n} exceeds enumeration limit {limit}")


class NotAdmissible(PermboundError):
    """The permutation family is empty."""


class NonUniqueExtremes(PermboundError):
    """A family has several members of maximum (or minimum) inversion number."""

    def __init__(self, maxima, minima):
        self.maxima = list(maxima)
        self.minima = list(minima)
        super().__init__(
            f"{len(self.maxima)} members of maximal and {len(self.minima)} of minimal inversion number"
        )


class InternalInconsistency(PermboundError, RuntimeError):
    pass
