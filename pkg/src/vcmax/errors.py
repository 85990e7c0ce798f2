"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class ParseError(ValueError):
    """A .cc or .cubes file could not be parsed."""


class NotMaximumError(PreconditionError):
    """The input class was required to be maximum but is not."""


class StructuralError(RuntimeError):
    """A cube collection violates a structural guarantee (e.g. a cycle in an
    iterated reduction of a complete collection)."""


class InvariantViolation(RuntimeError):
    """A guarantee that should hold for every input failed.

    The CLI maps this to exit code 2, separating such findings from ordinary
    usage errors.
    """


class BudgetExceeded(PreconditionError):
    """A search was asked for beyond its size cap, or ran out of its time or
    queue budget."""
