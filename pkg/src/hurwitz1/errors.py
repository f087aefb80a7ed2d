"""Shared exception types.

Everything derives from ValueError so that callers who do not care about
the distinction can catch one thing; the CLI maps the subclasses to
distinct report entries / exit codes.
"""


class DomainError(ValueError):
    """Mathematically invalid input (wrong half-plane, zero parameter, ...)."""


class DegenerateCoveringError(DomainError):
    """Covering data with collided branch points / non-positive Im(mu)."""


class DivisorError(DomainError):
    """Deformation parameter hits the divisor (mu + q = 0 or muOmega + q = 0)."""


class QuadratureError(RuntimeError):
    """Contour integral failed to converge under node doubling."""
