"""Exception hierarchy for divkit.

All library errors derive from DivkitError so callers (and the CLI) can
distinguish bad inputs from genuine bugs with a single except clause.
"""


class DivkitError(ValueError):
    """Base class for all divkit input/contract violations."""


class ValidationError(DivkitError):
    """Malformed input data (bad masses, mismatched alphabets, ...)."""


class DomainError(DivkitError):
    """Parameter outside its mathematical domain."""


class UndefinedAtomError(DivkitError):
    """Relative information requested at an atom where both masses vanish."""


class KinkError(DivkitError):
    """Derivative requested at a kink, or a kinked generator was passed to
    a code path that needs a differentiable one."""


class AbsoluteContinuityError(DivkitError):
    """Operation requires absolute continuity that the pair does not have."""


class CapabilityError(DivkitError):
    """Generator lacks a capability (e.g. a second derivative) the
    operation needs."""


class RangeError(DivkitError):
    """Argument outside the range of an inverse function branch."""


class UnknownKindError(DivkitError):
    """Dispatch on an unrecognized divergence or bound name."""


class RootError(DivkitError):
    """A bracketing root search found no sign change."""
