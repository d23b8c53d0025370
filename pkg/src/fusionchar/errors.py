"""Exception hierarchy.

The CLI maps these onto exit codes: parse/structure problems exit 3,
validation failures exit 1, everything raised by a computation exits 2.
"""


class FusionCharError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(FusionCharError, ValueError):
    """Input file could not be read or decoded."""


class StructureError(FusionCharError, ValueError):
    """Tensor shapes or index ranges are inconsistent."""


class ValidationError(FusionCharError):
    """An axiom check failed on an input object."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ComputationError(FusionCharError):
    """A computation could not be carried out on otherwise valid input."""


class CommutativityError(ComputationError):
    pass


class DegeneracyError(ComputationError):
    """Simultaneous diagonalization failed to separate eigenspaces."""


class SemisimplicityError(ComputationError):
    pass


class UnsupportedCaseError(ComputationError):
    pass


class InconsistentTableError(ComputationError):
    pass


class NotModularError(ComputationError):
    pass


class MismatchError(ComputationError):
    def __init__(self, message, diff=None):
        super().__init__(message)
        self.diff = diff


class UnimodularityError(ComputationError):
    pass


class NormalizationError(ComputationError):
    pass


class ParameterError(FusionCharError, ValueError):
    pass
