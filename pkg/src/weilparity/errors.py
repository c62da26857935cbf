"""Exception types shared across the package."""


class NotDivisible(ArithmeticError):
    """An exact polynomial division left a remainder or a fractional step.

    Every division performed by this package is mathematically exact, so
    raising this means either the inputs were wrong or an identity that
    should hold does not.
    """


class OutOfRange(ValueError):
    """An input exceeded a configured computation cap."""


class HalfDegreeUnsupported(ValueError):
    """Requested the minimal polynomial of a half-degree Weil number.

    Only the full-degree construction is implemented; half-degree cases
    are detected and reported but never expanded into polynomials.
    """


class CapExceeded(ValueError):
    """An enumeration request exceeded the configured dimension cap."""


class ShapeError(ValueError):
    """A polynomial does not have the monic degree-2g Weil shape."""


class ParseError(ValueError):
    """A polynomial text file could not be parsed."""
