"""Exception types shared across the package."""


class NotACocycle(ValueError):
    """A class fed to a cohomological operation does not lie in ker(1 + sigma)."""


class TrivialClass(ValueError):
    """The trivial cohomology class was passed where a nonzero class is required."""


class InternalInconsistency(AssertionError):
    """Two independent computation routes disagreed; indicates a bug, never user error."""


class HalfIntegerLeak(ArithmeticError):
    """A Riemann-Roch integral failed to be an integer; an upstream invariant is broken."""


class Infeasible(ValueError):
    """No valid rank assignment exists for the given exact-sequence dimensions."""


class UnknownClaim(KeyError):
    """A claim identifier is not present in the registry."""
