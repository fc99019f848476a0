"""Exception types shared across the toolkit."""


class SmoothbenchError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(SmoothbenchError):
    """Invalid input data or arguments."""


class ArchiveFormatError(ValidationError):
    """Malformed archive text file; message names the offending line."""

    def __init__(self, message, path=None, line=None):
        if path is not None and line is not None:
            message = f"{path}:{line}: {message}"
        super().__init__(message)
        self.path = path
        self.line = line


class ParameterError(ValidationError):
    """Filter or classifier parameters invalid for the given input."""


class StratificationError(ValidationError):
    """A stratified split cannot satisfy its per-class count constraints."""


class ConfigurationError(ValidationError):
    """Bad experiment or statistics configuration."""


class IncompleteResultsError(SmoothbenchError):
    """A report was requested over an incomplete result matrix."""

    def __init__(self, message, missing=()):
        super().__init__(message)
        self.missing = tuple(missing)
