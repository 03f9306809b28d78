"""Exception hierarchy shared by all modules."""


class HilbPowError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class RingMismatchError(HilbPowError, ValueError):
    pass


class TruncationError(HilbPowError, ValueError):
    """Requested a coefficient beyond the known truncation order."""


class NonUnitError(HilbPowError, ValueError):
    """Constant term is not the ring's 1."""


class UnsupportedModelError(HilbPowError):
    """A local model has no built-in punctual series at the requested level."""


class ParseError(HilbPowError, ValueError):
    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class SpecError(HilbPowError):
    """Orbifold spec failed validation; ``problems`` lists every violation."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
