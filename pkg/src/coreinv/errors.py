"""Exception types shared across the package."""


class CoreInvError(Exception):
    """Base class for all library errors."""


class FieldMismatch(CoreInvError, TypeError):
    """Operands live over different scalar fields."""


class DimensionMismatch(CoreInvError, ValueError):
    """Operands have incompatible dimensions."""


class MatrixFormatError(CoreInvError, ValueError):
    """A matrix file or scalar token could not be parsed.

    ``line`` is the 1-based line number of the offending input when known.
    """

    def __init__(self, message, line=None, token=None):
        super().__init__(message)
        self.line = line
        self.token = token

    def __str__(self):
        msg = super().__str__()
        if self.line is not None:
            msg = f"line {self.line}: {msg}"
        return msg


class NonExistent(CoreInvError):
    """The requested inverse does not exist (or a named unit is singular).

    ``reason`` is a short human-readable explanation such as
    ``"a ∉ R^#"``; ``unit`` names the singular unit for formula
    evaluations.
    """

    def __init__(self, reason, unit=None, data=None):
        super().__init__(reason)
        self.reason = reason
        self.unit = unit
        self.data = data or {}


class PremiseViolation(CoreInvError):
    """A formula was fed an input outside its admissible class.

    ``failed`` lists the defining equations the evaluated candidate broke;
    ``value`` holds that candidate when one was computed.
    """

    def __init__(self, message, failed=(), value=None):
        super().__init__(message)
        self.failed = tuple(failed)
        self.value = value


class GenerationExhausted(CoreInvError, RuntimeError):
    def __init__(self, what, budget):
        super().__init__(f"could not generate {what} within {budget} attempts")
        self.budget = budget


class VerificationFailed(CoreInvError, AssertionError):
    """An internally computed result failed its own exact re-check.

    This signals a defect, never a property of the input.
    """
