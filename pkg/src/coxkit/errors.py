"""Exception hierarchy shared by all coxkit modules.

Every domain error raised by the library derives from CoxeterError, so
callers (and the command line driver) can distinguish "the input is
outside the mathematical domain" from programming errors.
"""


class CoxeterError(Exception):
    """Base class for all domain errors raised by coxkit."""


class InvalidMatrix(CoxeterError):
    """The given matrix is not a Coxeter matrix (or a group file is malformed)."""


class IncompatibleOrder(CoxeterError):
    """cos(pi/m) is not representable in this field (finite m not dividing L)."""


class DivisionByZero(CoxeterError, ZeroDivisionError):
    """Division by the zero scalar."""


class MixedFields(CoxeterError):
    """Arithmetic between scalars of different field contexts."""


class DimensionMismatch(CoxeterError):
    """A vector or point has the wrong number of coordinates."""


class UnknownGenerator(CoxeterError):
    """A word or generator set refers to a label outside the system."""


class MixedSystems(CoxeterError):
    """An operation combined objects attached to different Coxeter systems."""


class RootSignViolation(CoxeterError):
    """A claimed root vector has mixed coordinate signs (or is zero)."""


class NotARoot(CoxeterError):
    """A vector does not correspond to any reflection of the group."""


class SupportNotContained(CoxeterError):
    """A root's support is not contained in the requested generator subset."""


class StepCapExceeded(CoxeterError):
    """The point-location walk did not terminate within the step cap."""


class RetryCapExceeded(CoxeterError):
    """The intersection walk exhausted its segment parameters."""


class GroupNotFinite(CoxeterError):
    """Enumeration exceeded its cap, so the group is not finite within it."""


class NotAParabolic(CoxeterError):
    """A subgroup expected to be parabolic was not found among the parabolics."""
