"""Exception types shared across the package."""


class PlaneAugError(Exception):
    """Base class for all package errors."""


class ValidationError(PlaneAugError):
    """A structural invariant of an input object is violated."""


class ArgumentError(PlaneAugError, ValueError):
    """A parameter is outside its documented domain."""


class CapacityError(PlaneAugError):
    """An exponential oracle was called beyond its size guard."""


class DegenerateInputError(PlaneAugError):
    """Point set violates general position (collinear triple or vertex on edge)."""


class InfeasibleInsertionError(PlaneAugError):
    """Edge insertion corners do not lie on a common face."""


class DuplicateEdgeError(PlaneAugError):
    """Edge to insert is already present."""


class IllegalFlipError(PlaneAugError):
    """Flip target diagonal already exists or the edge is not flippable."""


class InfeasibilityError(PlaneAugError):
    """A claimed hitting set / augmentation does not satisfy its contract.

    Carries an optional witness (e.g. an unhit separating triangle).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DecompositionError(PlaneAugError):
    """A tree decomposition does not cover a required cycle or bag axiom."""
