"""Exception types shared across the package."""


class SamscoreError(Exception):
    """Base class for all errors raised by samscore."""


class LexiconError(SamscoreError):
    """Unparseable or out-of-range sentiment lexicon content."""


class DatasetError(SamscoreError):
    """Malformed or inconsistent evaluation dataset content."""


class ExternalScoresError(SamscoreError):
    """Malformed external metric score file."""


class DegenerateInputError(SamscoreError):
    """Correlation is undefined for the given inputs (too short, constant, or all ties)."""
