"""Exception hierarchy.

Every precondition violation raised by the library derives from
:class:`NumentError`, so callers (and the CLI) can catch one type.
"""


class NumentError(ValueError):
    """Base class for precondition violations."""

    code = "precondition"


class InputTooLarge(NumentError):
    code = "input-too-large"


class NotCoprime(NumentError):
    code = "not-coprime"


class ZeroInput(NumentError):
    code = "zero-input"


class LengthMismatch(NumentError):
    code = "length-mismatch"


class OmegaMismatch(NumentError):
    code = "omega-mismatch"


class UnitInput(NumentError):
    code = "unit-input"


class OmegaTooSmall(NumentError):
    code = "omega-too-small"


class ConductorNotPrime(NumentError):
    code = "conductor-not-prime"


class RationalPartEqualsConductor(NumentError):
    code = "rational-part-equals-conductor"


class InvalidSplitCount(NumentError):
    code = "invalid-split-count"


class PrimeTooSmall(NumentError):
    code = "prime-too-small"


class ReducibleCubic(NumentError):
    code = "reducible-cubic"


class HypothesisNotMet(NumentError):
    code = "hypothesis-not-met"


class DomainError(NumentError):
    code = "domain-error"
