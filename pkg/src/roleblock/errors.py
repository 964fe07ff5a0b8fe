"""Exception types shared across the package."""


class EngineError(Exception):
    """Base class for every error raised by roleblock."""


class StructuralError(EngineError):
    """A value was built from, or combined with, incompatible pieces."""


class InputError(EngineError):
    """A document or user-supplied value failed validation."""


class ResourceLimitError(EngineError):
    """A configured size cap was exceeded."""

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


class WellDefinednessError(EngineError):
    """Two words that agree in the source semigroup disagree in the target.

    ``word_a`` and ``word_b`` denote the same source element; ``image_a`` and
    ``image_b`` are the (distinct) target words they evaluate to.
    """

    def __init__(self, word_a, word_b, image_a, image_b):
        self.word_a = word_a
        self.word_b = word_b
        self.image_a = image_a
        self.image_b = image_b
        super().__init__(
            f"words {word_a!r} and {word_b!r} agree in the source "
            f"but map to {image_a!r} and {image_b!r} in the target"
        )


class NotAReductionError(EngineError):
    """A map failed validation as a positional reduction."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"not a positional reduction: {report.summary()}")


class InvariantViolation(EngineError):
    """An internal consistency check failed; either a bug or corrupted input."""
