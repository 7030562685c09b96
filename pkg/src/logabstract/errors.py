"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """A dataset config (format string, rule name, custom regex) is invalid."""


class HeaderMismatchError(ValueError):
    """A raw line does not fit the dataset's header format."""


class EvaluationError(ValueError):
    """Prediction and ground truth cannot be compared (e.g. key-set mismatch)."""
