"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class ModelError(Exception):
    """Base class for failures inside the combinatorial model."""


class InvalidParams(ModelError, ValueError):
    pass


class InvalidObject(ModelError, ValueError):
    """A vertex list that is not an indecomposable for the given (n, d)."""


class NotATilting(ModelError, ValueError):
    """A candidate family failed cluster tilting validation."""


class WrongCount(NotATilting):
    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"expected {expected} summands, got {actual}")


class IntertwiningPair(NotATilting):
    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__(f"summands {list(x)} and {list(y)} intertwine")


class NotASummand(ModelError, ValueError):
    def __init__(self, u):
        self.object = u
        super().__init__(f"{list(u)} is not a summand of the tilting object")


class PreconditionError(ModelError, ValueError):
    pass


class NoResolution(ModelError):
    """No angle with terms in the tilting subcategory could be built."""
