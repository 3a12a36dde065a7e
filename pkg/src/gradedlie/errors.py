"""Exceptions raised by the library layer."""


class HomogeneityError(ValueError):
    """An element is not homogeneous where a homogeneous one is required."""


class PartitionMismatchError(ValueError):
    """Two graded elements are tied to different degree partitions."""


class DimensionMismatchError(ValueError):
    """Matrix dimensions do not agree."""


class NotAnEigenvectorError(ValueError):
    """An element is not a simultaneous eigenvector of the Cartan subalgebra."""


class SpanEscapeError(ValueError):
    """A vector that should lie in a span does not."""


class UnsupportedFamilyError(ValueError):
    """The operation is not defined for this algebra family."""


class NoRealizationError(ValueError):
    """A relation template has no matrix realization to verify against."""


class ClosureCheckError(ValueError):
    """A constructed basis failed its closure or Jacobi self-check."""
