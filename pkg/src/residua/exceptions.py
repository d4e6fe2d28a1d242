"""Exception types shared across the package."""


class ResiduaError(Exception):
    """Base class for mathematically meaningful failures."""


class InfiniteMultiplicityError(ResiduaError):
    """The two curves share a component through the point."""


class DegenerateFoliationError(ResiduaError):
    """The one-form has a common factor, so its zero set is not finite."""


class UnsupportedInputError(ResiduaError):
    """The computation is out of scope for the implemented methods."""


class RootFindingError(ResiduaError):
    """Numeric root finding failed its residual certificate."""
