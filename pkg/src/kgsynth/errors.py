"""Exception types shared across pipeline stages.

``exit_code`` is what the CLI process exits with when the error escapes a
stage: 2 usage, 3 missing dependency, 4 stall/shortfall, 5 I/O. Errors
without a listed code exit 1.
"""


class KgsynthError(Exception):
    exit_code = 1


class UsageError(KgsynthError):
    exit_code = 2


class DependencyError(KgsynthError):
    """A stage was run before the stage that produces its input."""

    exit_code = 3

    def __init__(self, message: str, required_stage: str):
        super().__init__(message)
        self.required_stage = required_stage


class StallError(KgsynthError):
    exit_code = 4


class CorpusAccessError(KgsynthError):
    exit_code = 5


class EmptyCorpusError(KgsynthError):
    exit_code = 5


class SnapshotIOError(KgsynthError):
    exit_code = 5


class IdCollisionError(KgsynthError):
    """Two declarations map to one node id with incompatible signatures."""


class ScoringError(KgsynthError):
    """More than half of the non-leaf nodes could not be scored."""


class EmptySearchError(KgsynthError):
    """Tree search produced no trajectory of the minimum length."""


class TemplateError(KgsynthError):
    """A prompt template references a placeholder that was not bound."""
