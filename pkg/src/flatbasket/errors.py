"""Exception hierarchy shared by all flatbasket modules."""


class FlatBasketError(ValueError):
    """Base class for all domain errors raised by this package."""


class BraidError(FlatBasketError):
    """Malformed braid text or a generator index out of range."""


class CodeError(FlatBasketError):
    """A sequence that is not a valid flat basket code."""


class LinkError(FlatBasketError):
    """An invalid query against a decoded link diagram."""


class BudgetError(FlatBasketError):
    """An enumeration request beyond the configured band budget."""
