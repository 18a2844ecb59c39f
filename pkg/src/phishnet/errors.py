"""Exception types shared across the package."""


class PhishnetError(Exception):
    """Base class for all phishnet errors."""


class ExtractionError(PhishnetError):
    """A feature could not be extracted; names the indicator and the URL."""

    def __init__(self, message: str, indicator: str | None = None, url: str | None = None):
        parts = [message]
        if indicator:
            parts.append(f"indicator={indicator}")
        if url:
            parts.append(f"url={url}")
        super().__init__(" ".join(parts))
        self.indicator = indicator
        self.url = url


class ConfigError(PhishnetError):
    """Invalid configuration or training parameters."""


class ShapeError(PhishnetError):
    """Network/input dimension mismatch."""


class FormatError(PhishnetError):
    """Malformed input data (CSV, archive, config file)."""


class ModelFormatError(FormatError):
    """Model file is corrupt or structurally invalid."""


class ModelVersionError(FormatError):
    """Model file declares an unsupported format version."""


class FetchError(PhishnetError):
    """A website could not be retrieved."""
