"""Exception types shared across the package."""


class SsredError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(SsredError):
    """Malformed representation data or an unusable argument."""


class DimensionMismatch(SsredError):
    """Matrix or vector shapes (or base fields) do not line up."""


class GeneratorCountMismatch(SsredError):
    """Two representations compared generator-by-generator differ in length."""


class LimitDoesNotExist(SsredError):
    """The cocharacter limit of a matrix outside the flag stabilizer."""


class NotInUnipotentRadical(SsredError):
    """Element offered as a unipotent-radical conjugator is not one."""


class NotBlockDiagonal(SsredError):
    """Generators are not block diagonal for the stated block sizes."""


class NotNormal(SsredError):
    """The smaller group is not normal in the larger one."""


class AlgebraNotStable(SsredError):
    """Conjugation does not stabilize the enveloping algebra span."""


class InternalInvariantViolation(SsredError):
    """A property the theory guarantees failed to hold; indicates a bug."""


class CertificateSearchExhausted(SsredError):
    """Bounded search for an invertible intertwiner ended inconclusively."""


class UndecidedIrreducibility(SsredError):
    """Irreducibility could not be certified within the documented caps."""


class PreconditionNotDestabilizable(SsredError):
    """Optimal-flag search requires an input that is not already semisimple."""


class SearchSpaceExceeded(SsredError):
    """An exhaustive enumeration would overrun its documented bound."""


class ResourceBoundExceeded(SsredError):
    """A group table, orbit, or closure would exceed the configured budget."""
