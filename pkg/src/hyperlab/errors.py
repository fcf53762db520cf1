"""Exception hierarchy shared by all hyperlab modules."""


class HyperlabError(Exception):
    """Base class for every error raised on purpose by hyperlab."""


class IncompatibleFieldError(HyperlabError, TypeError):
    """Operands live over different fields or rings."""


class NotIrreducibleError(HyperlabError, ValueError):
    pass


class UndefinedResultantError(HyperlabError, ValueError):
    pass


class InvalidPrimeError(HyperlabError, ValueError):
    pass


class InsufficientPrecisionError(HyperlabError, ArithmeticError):
    """The answer depends on digits that are not known."""


class NoConvergenceError(HyperlabError, ArithmeticError):
    """Hensel's condition does not hold at the starting point."""


class UnsupportedCharacteristicError(HyperlabError, ValueError):
    pass


class InseparablePolynomialError(HyperlabError, ValueError):
    pass


class UnnormalizedInputError(HyperlabError, ValueError):
    pass


class NotASubgroupError(HyperlabError, ValueError):
    pass


class MissingMultiplicationError(HyperlabError, ValueError):
    pass


class ExcludedFieldError(HyperlabError, ValueError):
    """F_2 is not allowed as a base field for hypergroup constructions."""


class DegenerateLineError(HyperlabError, ValueError):
    pass


class DimensionError(HyperlabError, ValueError):
    pass


class TooLargeError(HyperlabError, ValueError):
    pass


class StructuralError(HyperlabError):
    """A table fails to be the kind of structure an operation assumed."""
