"""Exception hierarchy shared across the package.

Preconditions violations raise subclasses of :class:`PadicError`; the CLI maps
them onto process exit codes (precondition -> 3, malformed input -> 4).
"""


class PadicError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(PadicError):
    """Invalid or mismatched ring/series parameters."""


class ConvergenceError(PadicError):
    """Requested computation lies outside the convergence regime."""


class NonUnitError(PadicError):
    """Inversion of an element that is not a unit."""


class PrecisionError(PadicError):
    """Working precision is too small for the requested target."""


class CongruenceError(PadicError):
    """Matrix fails the required congruence (e.g. not 1 mod p^e)."""


class SizeGuardError(PadicError):
    """An enumeration or index exceeds the configured safety bound."""


class SchemaError(PadicError):
    """Structured input (JSON file, CLI payload) does not match the schema."""
