"""Exception types shared across the package."""


class DiracJunctionError(Exception):
    """Base class for all package-specific errors."""


class DegenerateExtension(DiracJunctionError):
    """The extension decouples the two half-lines; no transmission matrix exists."""


class SingularBoundaryMatrix(DiracJunctionError):
    """The boundary matrix on the positive side is numerically singular."""


class VelocityMismatch(DiracJunctionError):
    """An operation that requires equal Fermi velocities got a velocity jump."""


class StrengthSignError(DiracJunctionError):
    """Interaction strength violates the sign convention of its family."""


class BelowThreshold(DiracJunctionError):
    """Energy is inside the gap region where no propagating waves exist."""


class SingularSystem(DiracJunctionError):
    """The scattering linear system is rank deficient at this energy."""


class OutsideWindow(DiracJunctionError):
    """Energy lies outside the open bound-state window."""
