"""Exception types raised by the bridge."""


class BridgeError(Exception):
    """Base class for all bridge errors."""


class DatasetError(BridgeError):
    """The input dataset is malformed."""


class ModelError(BridgeError):
    """The requested model cannot be loaded."""
