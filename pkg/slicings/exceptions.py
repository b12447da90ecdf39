import parsimonious


class ParseError(parsimonious.ParseError):
    """
    Raised when a module string or a rational string cannot be parsed.
    """
    def __str__(self):
        return "Parse error at '{}' (column {}) in '{}'".format(
            self.text[self.pos:self.pos + 5],
            self.column(),
            self.text,
        )


class IntervalError(ValueError):
    """
    Raised when an interval is malformed or does not fit the quiver at hand.

    Example:

    .. code-block:: python

        Interval(2, 1)  # a > b
    """
    pass


class NoNonsplitExtension(ValueError):
    """
    Raised when the middle term of a nonsplit extension is requested for a
    pair of intervals whose first extension group vanishes.
    """
    pass


class DimensionBoundExceeded(ValueError):
    """
    Raised when an exhaustive subrepresentation scan is requested for a module
    whose total dimension exceeds the configured bound.
    """
    pass


class QuiverSizeExceeded(ValueError):
    """
    Raised when torsion classes are enumerated for more vertices than the
    configured bound allows.
    """
    pass


class NotASubrepresentation(ValueError):
    """
    Raised when a family of subspaces is not closed under the arrow maps.
    """
    pass


class NotATorsionClass(ValueError):
    """
    Raised when a bitset of intervals is used where a torsion class is
    required but is not closed under quotients and extensions.
    """
    pass


class ZeroModuleError(ValueError):
    """
    Raised when an operation defined on nonzero objects receives the zero
    module.
    """
    pass


class ImproperTorsionClass(ValueError):
    """
    Raised when a proper torsion class is required but the whole category or
    the zero class was given.
    """
    pass


class InvalidChain(ValueError):
    """
    Raised when a chain of torsion classes is malformed: classes not strictly
    decreasing, endpoints missing, breakpoints not monotone or outside of
    ``[0, 1]``.
    """
    pass


class PreconditionViolation(ValueError):
    """
    Raised when the arguments of a check do not satisfy its stated
    precondition, for instance a radius above half the minimal gap between
    breakpoints.
    """
    pass


class BrickLabelError(Exception):
    """
    Raised when a covering relation of the torsion lattice does not carry
    exactly one brick label.  This is non-recoverable and indicates a bug in
    the combinatorial model.
    """
    pass


class HNFiltrationError(Exception):
    """
    Raised when a computed Harder-Narasimhan factor fails its
    quasisemistability check.
    """
    pass


class DecodingError(Exception):
    """
    Base exception for any error that occurs while reading a JSON document.
    """
    pass


class MalformedDocument(DecodingError):
    """
    Raised when a JSON document does not have the expected shape.  The
    offending field is reported as a path, e.g. ``classes[1][0]``.
    """
    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__(path, message)

    def __str__(self):
        return "{}: {}".format(self.path or '<document>', self.message)


class PredicateMappingError(Exception):
    """
    Raised when an error occurs in a registry's internal mapping.
    """
    pass


class NoEntriesFound(ValueError, PredicateMappingError):
    """
    Raised when no registration is found for a weak stability kind in a
    registry's internal mapping.
    """
    pass


class MultipleEntriesFound(ValueError, PredicateMappingError):
    """
    Raised when multiple registrations are found for a weak stability kind in
    a registry's internal mapping.  This error is non-recoverable and
    indicates that a registry was configured incorrectly.
    """
    pass
