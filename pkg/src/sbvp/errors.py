"""Exception types shared across the package."""


class UsageError(ValueError):
    """A call violated an operation's precondition (bad order, bad argument)."""


class DomainError(ValueError):
    """An input left the mathematical domain of a nonlinearity or series op."""


class SingularityError(ArithmeticError):
    """A series reciprocal was requested at a (near-)zero constant term."""


class RangeError(OverflowError):
    """A series operation overflowed the double range (e.g. exp of a huge value)."""


class BlowupError(ArithmeticError):
    """A computation produced a non-finite coefficient."""


class BoundUnavailableError(RuntimeError):
    """The truncation-error bound cannot be trusted for this exact solution."""


class ConfigError(ValueError):
    """A configuration file or CLI option could not be parsed or validated."""
