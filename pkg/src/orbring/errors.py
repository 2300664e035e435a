"""Exception types shared across the package."""


class OrbringError(Exception):
    """Base class for all package errors."""


class InputError(OrbringError):
    """Malformed user input: bad spec files, bad phases, dimension mismatches."""


class ResourceCapError(OrbringError):
    """A configured resource bound (group order, conductor) was exceeded."""


class ConsistencyError(OrbringError):
    """An internal exact-arithmetic invariant failed; indicates a bug, not bad input."""
