"""Exception types shared across the package.

The command-line interface maps these onto process exit codes: domain and
usage problems exit with status 2, numerical failures with status 3.
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DivergenceError(DomainError):
    """The requested quantity diverges (e.g. the x -> 0 limit for q <= -1/2)."""


class UsageError(ValueError):
    """A request is malformed (unknown suite name, empty grid, bad range)."""


class NumericalError(ArithmeticError):
    """A numerical method failed to converge to its accuracy target."""
