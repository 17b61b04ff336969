class CapError(ValueError):
    """An operation needs simplices above the dimension cap."""


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of budget without a verdict."""


class PresentationError(ValueError):
    """Ill-formed presentation, word or category data."""


class NotACoverError(ValueError):
    """A map expected to be a (left) cover fails the cover check."""


class NonFunctorialError(ValueError):
    """A representation does not respect the relations of its base."""
