"""Exception types shared across the package."""


class NetrankError(Exception):
    """Base class for every error this package raises on purpose."""


class DatasetError(NetrankError):
    """Malformed or invalid input data."""


class ConfigError(NetrankError):
    """Pipeline parameter out of range."""


class ComputationError(NetrankError):
    """A numeric stage cannot proceed with the given inputs."""


class InternalInvariantError(NetrankError):
    """An internal guarantee was violated; indicates a bug, not bad input."""
