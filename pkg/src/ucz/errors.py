"""Exception vocabulary shared across the workbench modules."""


class DimensionError(ValueError):
    """Operands live in incompatible ambient spaces or have wrong shapes."""


class DecompositionError(ValueError):
    """A required direct-sum decomposition does not hold for the given input."""


class UnsupportedAlgebraError(ValueError):
    """Algebra descriptor outside the supported desk-scale catalogue."""


class DomainError(ValueError):
    """Input outside an operation's mathematical domain (non-nilpotent, wrong level set, ...)."""


class ConstructionError(ValueError):
    """An advertised construction failed on the given data (singular pivot, no preimage, ...)."""


class PoleError(ZeroDivisionError):
    """A log-symplectic form was evaluated on its polar divisor."""
